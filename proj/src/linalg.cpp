#include "lgcpalm/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lgcp {

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
    if (x.size() != a.cols())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
        y[i] = s;
    }
    return y;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch");
    DenseMatrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

double SymmetricFactorization::log_det() const {
    double s = 0.0;
    for (std::size_t i = 0; i < lower_.rows(); ++i) s += std::log(lower_(i, i));
    return 2.0 * s;
}

namespace {

// Returns the failing pivot index, or n on success.
std::size_t try_cholesky(const DenseMatrix& a, double jitter, DenseMatrix& l) {
    const std::size_t n = a.rows();
    l = DenseMatrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double* li = l.row(i);
        for (std::size_t j = 0; j <= i; ++j) {
            const double* lj = l.row(j);
            double s = a(i, j);
            if (i == j) s += jitter;
            for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
            if (i == j) {
                if (!(s > 0.0)) return i;
                li[j] = std::sqrt(s);
            } else {
                li[j] = s / lj[j];
            }
        }
    }
    return n;
}

} // namespace

SymmetricFactorization cholesky(const DenseMatrix& a) {
    if (!a.square())
        throw std::invalid_argument("cholesky: matrix must be square");
    const std::size_t n = a.rows();
    DenseMatrix l;
    std::size_t pivot = try_cholesky(a, 0.0, l);
    if (pivot < n) {
        double max_diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
        pivot = try_cholesky(a, 1e-10 * max_diag, l);
        if (pivot < n)
            throw FactorizationError("cholesky: non-positive pivot after jitter at index " +
                                         std::to_string(pivot),
                                     pivot);
    }
    return SymmetricFactorization(std::move(l));
}

std::vector<double> solve_spd(const SymmetricFactorization& fact, std::span<const double> b) {
    const DenseMatrix& l = fact.lower();
    const std::size_t n = l.rows();
    if (b.size() != n)
        throw std::invalid_argument("solve_spd: dimension mismatch");
    std::vector<double> z(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
        const double* li = l.row(i);
        double s = z[i];
        for (std::size_t k = 0; k < i; ++k) s -= li[k] * z[k];
        z[i] = s / li[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = z[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * z[k];
        z[ii] = s / l(ii, ii);
    }
    return z;
}

OrthogonalTriangularFactorization qr(const DenseMatrix& a) {
    if (!a.square())
        throw std::invalid_argument("qr: matrix must be square");
    const std::size_t n = a.rows();

    // Householder reflectors on a column-major working copy.
    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[j * n + i] = a(i, j);

    std::vector<double> vs(n * n, 0.0); // reflector k stored in vs[k*n + k..n)
    std::vector<double> betas(n, 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        double* col = &w[k * n];
        double norm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) norm2 += col[i] * col[i];
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue; // column already zero below and at the pivot
        double* v = &vs[k * n];
        const double alpha = col[k] >= 0.0 ? -norm : norm;
        v[k] = col[k] - alpha;
        for (std::size_t i = k + 1; i < n; ++i) v[i] = col[i];
        double vtv = 0.0;
        for (std::size_t i = k; i < n; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        const double beta = 2.0 / vtv;
        betas[k] = beta;
        col[k] = alpha;
        for (std::size_t i = k + 1; i < n; ++i) col[i] = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) {
            double* cj = &w[j * n];
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += v[i] * cj[i];
            const double f = beta * dot;
            for (std::size_t i = k; i < n; ++i) cj[i] -= f * v[i];
        }
    }

    DenseMatrix r(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) r(i, j) = w[j * n + i];

    // Rank check on the triangular diagonal.
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(r(i, i)));
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(r(i, i)) <= 1e-13 * max_diag)
            throw FactorizationError("qr: rank deficiency at diagonal index " + std::to_string(i),
                                     i);
    }

    // Q = H_0 ... H_{n-1} I, accumulated column by column.
    std::vector<double> qcm(n * n, 0.0); // column-major Q
    for (std::size_t j = 0; j < n; ++j) qcm[j * n + j] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double* cj = &qcm[j * n];
        for (std::size_t kk = n; kk-- > 0;) {
            if (betas[kk] == 0.0) continue;
            const double* v = &vs[kk * n];
            double dot = 0.0;
            for (std::size_t i = kk; i < n; ++i) dot += v[i] * cj[i];
            const double f = betas[kk] * dot;
            for (std::size_t i = kk; i < n; ++i) cj[i] -= f * v[i];
        }
    }
    DenseMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = qcm[j * n + i];

    return OrthogonalTriangularFactorization(std::move(q), std::move(r));
}

std::vector<double> solve_qr(const OrthogonalTriangularFactorization& fact,
                             std::span<const double> b) {
    const DenseMatrix& q = fact.orthogonal();
    const DenseMatrix& r = fact.triangular();
    const std::size_t n = r.rows();
    if (b.size() != n)
        throw std::invalid_argument("solve_qr: dimension mismatch");
    // y = Q^T b
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* qi = q.row(i);
        const double bi = b[i];
        for (std::size_t j = 0; j < n; ++j) y[j] += qi[j] * bi;
    }
    // back substitution R z = y
    for (std::size_t ii = n; ii-- > 0;) {
        const double* ri = r.row(ii);
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= ri[k] * y[k];
        if (ri[ii] == 0.0)
            throw FactorizationError("solve_qr: singular triangular factor", ii);
        y[ii] = s / ri[ii];
    }
    return y;
}

double log_abs_det_from_qr(const OrthogonalTriangularFactorization& fact) {
    const DenseMatrix& r = fact.triangular();
    double s = 0.0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        const double d = r(i, i);
        if (d == 0.0)
            throw FactorizationError("log_abs_det_from_qr: zero diagonal entry", i);
        s += std::log(std::abs(d));
    }
    return s;
}

std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> y, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("finite_difference_gradient: step must be > 0");
    std::vector<double> point(y.begin(), y.end());
    std::vector<double> grad(point.size(), 0.0);
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double orig = point[i];
        point[i] = orig + step;
        const double up = f(point);
        point[i] = orig - step;
        const double down = f(point);
        point[i] = orig;
        grad[i] = (up - down) / (2.0 * step);
    }
    return grad;
}

} // namespace lgcp
