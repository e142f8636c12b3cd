#include "lgcpalm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcp {

namespace {

// integral of sqrt(r^2 - s^2) over [0, t], 0 <= t <= r
double circle_integral(double t, double r) {
    return 0.5 * (t * std::sqrt(std::max(r * r - t * t, 0.0)) + r * r * std::asin(t / r));
}

// signed integral of the disk indicator over [0,x] x [0,y]
double corner_area(double x, double y, double r) {
    const double sign = ((x < 0.0) != (y < 0.0)) ? -1.0 : 1.0;
    const double a = std::min(std::abs(x), r);
    const double b = std::abs(y);
    if (a == 0.0 || b == 0.0) return 0.0;
    const double xc = (b >= r) ? 0.0 : std::sqrt(r * r - b * b);
    const double flat = std::min(a, xc);
    const double area = b * flat + circle_integral(a, r) - circle_integral(flat, r);
    return sign * area;
}

} // namespace

double disk_rect_intersection_area(double x0, double x1, double y0, double y1, double r) {
    return corner_area(x1, y1, r) - corner_area(x0, y1, r) - corner_area(x1, y0, r) +
           corner_area(x0, y0, r);
}

double cell_weight(const Point2& cell_center, double delta, double r) {
    if (!(delta > 0.0) || !(r > 0.0))
        throw std::invalid_argument("cell_weight: delta and r must be > 0");
    const double h = 0.5 * delta;
    const double x0 = cell_center.x - h, x1 = cell_center.x + h;
    const double y0 = cell_center.y - h, y1 = cell_center.y + h;

    // nearest point of the cell to the origin
    const double nx = (x0 <= 0.0 && 0.0 <= x1) ? 0.0 : std::min(std::abs(x0), std::abs(x1));
    const double ny = (y0 <= 0.0 && 0.0 <= y1) ? 0.0 : std::min(std::abs(y0), std::abs(y1));
    if (nx * nx + ny * ny >= r * r) return 0.0;

    // farthest corner
    const double fx = std::max(std::abs(x0), std::abs(x1));
    const double fy = std::max(std::abs(y0), std::abs(y1));
    if (fx * fx + fy * fy <= r * r) return delta * delta;

    return disk_rect_intersection_area(x0, x1, y0, y1, r);
}

double QuadratureGrid::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

QuadratureGrid build_grid(double r, int q) {
    if (!(r > 0.0))
        throw std::invalid_argument("build_grid: r must be > 0");
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("build_grid: q must be even and >= 2");

    QuadratureGrid grid;
    grid.radius = r;
    grid.spacing = 2.0 * r / q;
    const int half = q / 2;
    grid.nodes.reserve(static_cast<std::size_t>(q) * q);
    for (int i = -half; i < half; ++i) {
        for (int j = -half; j < half; ++j) {
            const Point2 center{(i + 0.5) * grid.spacing, (j + 0.5) * grid.spacing};
            const double w = cell_weight(center, grid.spacing, r);
            if (w > 0.0) {
                grid.nodes.push_back(center);
                grid.weights.push_back(w);
            }
        }
    }
    return grid;
}

} // namespace lgcp
