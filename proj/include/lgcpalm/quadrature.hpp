#pragma once

#include <vector>

#include "lgcpalm/geometry.hpp"

namespace lgcp {

/// Quadrature nodes over the ball B(o, r): cell centers of the square grid
/// with spacing delta = 2r/q, weighted by the area of cell-ball intersection.
/// Only cells with positive intersection area are kept, so every node has
/// weight > 0 and the weights sum to pi r^2.
struct QuadratureGrid {
    double radius = 0.0;
    double spacing = 0.0;
    std::vector<Point2> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
    double total_weight() const;
};

/// Build the grid for radius r with q cells per axis across [-r, r).
/// q must be even and >= 2. Nodes are the cell centers
/// ((i + 1/2) delta, (j + 1/2) delta), which keeps every node away from the
/// origin so that multipliers g(v) stay bounded.
QuadratureGrid build_grid(double r, int q);

/// Area of the intersection of the square cell centered at `cell_center`
/// (side `delta`) with the closed ball of radius `r` about the origin.
/// Computed in closed form from circular-segment integrals.
double cell_weight(const Point2& cell_center, double delta, double r);

/// Exact area of [x0,x1] x [y0,y1] intersected with the disk of radius r
/// centered at the origin.
double disk_rect_intersection_area(double x0, double x1, double y0, double y1, double r);

} // namespace lgcp
