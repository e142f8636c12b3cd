#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lgcp {

/// Planar location. The quadrature, simulation and estimation code is 2-d.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double squared_distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(const Point2& a, const Point2& b) {
    return std::sqrt(squared_distance(a, b));
}

inline double norm(const Point2& p) {
    return std::sqrt(p.x * p.x + p.y * p.y);
}

/// Location in R^d used by the model layer, which is dimension-generic.
using PointNd = std::vector<double>;

inline double distance(const PointNd& a, const PointNd& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline PointNd to_nd(const Point2& p) { return PointNd{p.x, p.y}; }

/// Axis-aligned rectangular observation window.
struct Window {
    double x0 = 0.0;
    double x1 = 1.0;
    double y0 = 0.0;
    double y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    double shorter_side() const { return std::min(width(), height()); }

    bool contains(const Point2& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }

    /// Distance from an interior point to the window boundary.
    double boundary_distance(const Point2& p) const {
        return std::min(std::min(p.x - x0, x1 - p.x), std::min(p.y - y0, y1 - p.y));
    }
};

} // namespace lgcp
