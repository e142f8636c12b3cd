#pragma once

// Independent reference computations used as test oracles. Everything here
// is deliberately naive (cofactor expansions, bisection, subgrid counting)
// so that it cannot share a failure mode with the library code it checks.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "lgcpalm/geometry.hpp"
#include "lgcpalm/linalg.hpp"

namespace oracle {

/// Determinant by recursive cofactor expansion; fine for n <= 8.
inline double cofactor_determinant(const lgcp::DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    double det = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        lgcp::DenseMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        det += sign * a(0, j) * cofactor_determinant(minor);
    }
    return det;
}

/// Random symmetric positive definite matrix B^T B + n I.
inline lgcp::DenseMatrix random_spd(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    lgcp::DenseMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = normal(rng);
    lgcp::DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += b(k, i) * b(k, j);
            a(i, j) = s + (i == j ? static_cast<double>(n) : 0.0);
        }
    return a;
}

inline lgcp::DenseMatrix random_square(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    lgcp::DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = normal(rng);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 2.0 * n; // keep comfortably nonsingular
    return a;
}

/// Bisection for a continuous function with a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-12) {
    double flo = f(lo);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Composite Simpson on a fixed fine grid (intervals must be even).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals = 4096) {
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Cell-ball intersection area by midpoint counting on a k-by-k subgrid.
inline double subgrid_cell_area(const lgcp::Point2& center, double delta, double radius, int k) {
    const double sub = delta / k;
    long inside = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const double x = center.x - delta / 2 + (i + 0.5) * sub;
            const double y = center.y - delta / 2 + (j + 0.5) * sub;
            if (x * x + y * y <= radius * radius) ++inside;
        }
    }
    return static_cast<double>(inside) * sub * sub;
}

} // namespace oracle
