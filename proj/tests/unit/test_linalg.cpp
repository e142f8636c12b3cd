#include <doctest.h>

#include <cmath>
#include <random>

#include "lgcpalm/linalg.hpp"
#include "support/oracles.hpp"

using namespace lgcp;

namespace {

double max_abs_residual(const DenseMatrix& a, const std::vector<double>& z,
                        const std::vector<double>& b) {
    const auto az = matvec(a, z);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        num = std::max(num, std::abs(az[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return num / den;
}

} // namespace

TEST_CASE("cholesky: identity factors to identity") {
    const auto fact = cholesky(DenseMatrix::identity(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(fact.lower()(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
}

TEST_CASE("cholesky: 2x2 hand-solved factor") {
    DenseMatrix a(2, 2);
    a(0, 0) = 4.0; a(0, 1) = 2.0;
    a(1, 0) = 2.0; a(1, 1) = 3.0;
    const auto fact = cholesky(a);
    CHECK(fact.lower()(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(fact.lower()(1, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fact.lower()(1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(fact.lower()(0, 1) == 0.0);
}

TEST_CASE("cholesky: indefinite matrix is rejected with the pivot index") {
    DenseMatrix a(2, 2);
    a(0, 0) = 1.0; a(0, 1) = 2.0;
    a(1, 0) = 2.0; a(1, 1) = 1.0; // eigenvalues 3, -1
    CHECK_THROWS_AS(cholesky(a), FactorizationError);
    try {
        cholesky(a);
    } catch (const FactorizationError& e) {
        CHECK(e.pivot_index == 1);
    }
}

TEST_CASE("solve_spd: identity and hand-solved 2x2") {
    const auto ident = cholesky(DenseMatrix::identity(3));
    const std::vector<double> b{1.0, -2.0, 0.5};
    const auto z = solve_spd(ident, b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(z[i] == doctest::Approx(b[i]).epsilon(1e-15));

    DenseMatrix a(2, 2);
    a(0, 0) = 4.0; a(0, 1) = 2.0;
    a(1, 0) = 2.0; a(1, 1) = 3.0;
    const auto z2 = solve_spd(cholesky(a), std::vector<double>{1.0, 0.0});
    CHECK(z2[0] == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(z2[1] == doctest::Approx(-1.0 / 4.0).epsilon(1e-14));
}

TEST_CASE("solve_spd: residual oracle on random SPD systems up to 400") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (const std::size_t n : {5u, 40u, 400u}) {
        const auto a = oracle::random_spd(n, rng);
        std::vector<double> b(n);
        for (auto& v : b) v = normal(rng);
        const auto z = solve_spd(cholesky(a), b);
        CHECK(max_abs_residual(a, z, b) <= 1e-9);
    }
}

TEST_CASE("cholesky: reconstruction within 1e-10 relative Frobenius") {
    std::mt19937_64 rng(5);
    const auto a = oracle::random_spd(60, rng);
    const auto l = cholesky(a).lower();
    double err2 = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < 60; ++i) {
        for (std::size_t j = 0; j < 60; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 60; ++k) s += l(i, k) * l(j, k);
            err2 += (s - a(i, j)) * (s - a(i, j));
            norm2 += a(i, j) * a(i, j);
        }
    }
    CHECK(std::sqrt(err2 / norm2) <= 1e-10);
}

TEST_CASE("qr: identity, determinant of a rotation-like 2x2, reconstruction") {
    const auto ident = qr(DenseMatrix::identity(3));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(ident.triangular()(i, i)) == doctest::Approx(1.0).epsilon(1e-14));

    DenseMatrix m(2, 2);
    m(0, 0) = 0.8; m(0, 1) = -0.6;
    m(1, 0) = 0.6; m(1, 1) = 0.9;
    const auto fact = qr(m);
    const double det_direct = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    CHECK(std::abs(fact.triangular()(0, 0) * fact.triangular()(1, 1)) ==
          doctest::Approx(det_direct).epsilon(1e-13));

    std::mt19937_64 rng(11);
    const auto a = oracle::random_square(6, rng);
    const auto f6 = qr(a);
    const auto recon = matmul(f6.orthogonal(), f6.triangular());
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            err = std::max(err, std::abs(recon(i, j) - a(i, j)));
            scale = std::max(scale, std::abs(a(i, j)));
        }
    CHECK(err / scale <= 1e-10);
}

TEST_CASE("qr: orthogonality up to size 400") {
    std::mt19937_64 rng(13);
    for (const std::size_t n : {6u, 60u, 400u}) {
        const auto fact = qr(oracle::random_square(n, rng));
        const DenseMatrix& q = fact.orthogonal();
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += q(k, i) * q(k, j);
                err = std::max(err, std::abs(s - (i == j ? 1.0 : 0.0)));
            }
        }
        CHECK(err <= 1e-10);
    }
}

TEST_CASE("solve_qr: identity, hand back-substitution, residual oracle") {
    const auto ident = qr(DenseMatrix::identity(2));
    const auto z0 = solve_qr(ident, std::vector<double>{3.0, -4.0});
    CHECK(z0[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(z0[1] == doctest::Approx(-4.0).epsilon(1e-14));

    DenseMatrix a(2, 2);
    a(0, 0) = 1.0; a(0, 1) = 1.0;
    a(1, 0) = 0.0; a(1, 1) = 2.0;
    const auto z = solve_qr(qr(a), std::vector<double>{3.0, 2.0});
    CHECK(z[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(z[1] == doctest::Approx(1.0).epsilon(1e-13));

    std::mt19937_64 rng(17);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto a6 = oracle::random_square(6, rng);
    std::vector<double> b(6);
    for (auto& v : b) v = normal(rng);
    const auto z6 = solve_qr(qr(a6), b);
    CHECK(max_abs_residual(a6, z6, b) <= 1e-9);
}

TEST_CASE("log_abs_det_from_qr: trivial diagonals and cofactor oracle") {
    CHECK(log_abs_det_from_qr(qr(DenseMatrix::identity(5))) == doctest::Approx(0.0).epsilon(1e-12));

    DenseMatrix d(2, 2);
    d(0, 0) = 2.0; d(1, 1) = 3.0;
    CHECK(log_abs_det_from_qr(qr(d)) == doctest::Approx(std::log(6.0)).epsilon(1e-13));

    std::mt19937_64 rng(23);
    auto a = oracle::random_spd(5, rng);
    for (std::size_t i = 0; i < 5; ++i) a(i, i) += 1.0;
    const double expected = std::log(std::abs(oracle::cofactor_determinant(a)));
    CHECK(log_abs_det_from_qr(qr(a)) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("log_abs_det is invariant under row permutations") {
    std::mt19937_64 rng(29);
    const auto a = oracle::random_square(7, rng);
    const double base = log_abs_det_from_qr(qr(a));
    std::vector<std::size_t> perm{3, 0, 6, 1, 5, 2, 4};
    DenseMatrix p(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) p(i, j) = a(perm[i], j);
    CHECK(std::abs(log_abs_det_from_qr(qr(p)) - base) <= 1e-8);
}

TEST_CASE("finite_difference_gradient: linear and quadratic fields") {
    const auto linear = [](std::span<const double> y) { return 3.0 * y[0] - 2.0 * y[1] + 0.5; };
    const std::vector<double> at{0.3, -1.2};
    const auto g1 = finite_difference_gradient(linear, at, 0.1);
    CHECK(g1[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(g1[1] == doctest::Approx(-2.0).epsilon(1e-12));

    const auto quadratic = [](std::span<const double> y) {
        double s = 0.0;
        for (double v : y) s += v * v;
        return 0.5 * s;
    };
    const std::vector<double> y{0.7, -0.4, 2.5};
    const auto g2 = finite_difference_gradient(quadratic, y, 1e-3);
    for (std::size_t i = 0; i < y.size(); ++i)
        CHECK(g2[i] == doctest::Approx(y[i]).epsilon(1e-10));

    CHECK_THROWS_AS(finite_difference_gradient(linear, at, 0.0), std::invalid_argument);
}
