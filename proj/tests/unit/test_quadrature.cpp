#include <doctest.h>

#include <cmath>
#include <random>

#include "lgcpalm/quadrature.hpp"
#include "support/oracles.hpp"

using namespace lgcp;

TEST_CASE("build_grid: q=2 symmetric quartering of the unit disk") {
    const auto grid = build_grid(1.0, 2);
    REQUIRE(grid.size() == 4);
    for (const auto& node : grid.nodes) {
        CHECK(std::abs(node.x) == doctest::Approx(0.5));
        CHECK(std::abs(node.y) == doctest::Approx(0.5));
    }
    for (double w : grid.weights)
        CHECK(w == doctest::Approx(grid.weights[0]).epsilon(1e-14));
    CHECK(grid.total_weight() == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("build_grid: q=16 covers 256 cells and keeps interior count sane") {
    const int q = 16;
    const auto grid = build_grid(0.25, q);
    // every kept node has positive weight
    for (double w : grid.weights) CHECK(w > 0.0);
    // cells fully inside the ball
    long interior = 0;
    for (std::size_t v = 0; v < grid.size(); ++v)
        if (grid.weights[v] == grid.spacing * grid.spacing) ++interior;
    const long bound = static_cast<long>(q * q * M_PI / 4.0) - 4 * q;
    CHECK(interior >= bound);
    // no more candidates than the q^2 cells tiling [-r, r)^2
    CHECK(grid.size() <= static_cast<std::size_t>(q) * q);
    CHECK(grid.size() >= static_cast<std::size_t>(q * q * M_PI / 4.0));
}

TEST_CASE("build_grid: total weight equals the ball area across radii and q") {
    for (const double r : {0.01, 0.13, 0.25, 1.7}) {
        for (const int q : {2, 4, 8, 12, 16}) {
            const auto grid = build_grid(r, q);
            CHECK(grid.total_weight() == doctest::Approx(M_PI * r * r).epsilon(1e-9));
        }
    }
}

TEST_CASE("build_grid: argument validation") {
    CHECK_THROWS_AS(build_grid(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, -2), std::invalid_argument);
}

TEST_CASE("cell_weight: interior, exterior and straddling cells") {
    const double r = 1.0;
    const double delta = 0.25;
    CHECK(cell_weight(Point2{0.125, 0.125}, delta, r) == delta * delta);
    CHECK(cell_weight(Point2{2.0, 2.0}, delta, r) == 0.0);

    // straddling cells agree with a fine midpoint-subgrid oracle
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    int checked = 0;
    while (checked < 20) {
        const double a = angle(rng);
        const Point2 center{r * std::cos(a), r * std::sin(a)};
        const double w = cell_weight(center, delta, r);
        if (w == 0.0 || w == delta * delta) continue;
        const double reference = oracle::subgrid_cell_area(center, delta, r, 1024);
        CHECK(std::abs(w - reference) <= delta * delta / 256.0);
        ++checked;
    }
}

TEST_CASE("disk_rect_intersection_area: closed forms") {
    // the full bounding square of the disk
    CHECK(disk_rect_intersection_area(-1, 1, -1, 1, 1.0) == doctest::Approx(M_PI).epsilon(1e-14));
    // half plane cut through the center
    CHECK(disk_rect_intersection_area(0, 2, -2, 2, 1.0) ==
          doctest::Approx(M_PI / 2).epsilon(1e-13));
    // quadrant
    CHECK(disk_rect_intersection_area(0, 3, 0, 3, 2.0) == doctest::Approx(M_PI).epsilon(1e-13));
    // fully inside rectangle
    CHECK(disk_rect_intersection_area(-0.1, 0.2, -0.1, 0.15, 5.0) ==
          doctest::Approx(0.3 * 0.25).epsilon(1e-14));
    // random rectangles against the subgrid oracle
    std::mt19937_64 rng(57);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 30; ++i) {
        double x0 = u(rng), x1 = u(rng), y0 = u(rng), y1 = u(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        const double area = disk_rect_intersection_area(x0, x1, y0, y1, 1.0);
        const Point2 center{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
        const double dx = x1 - x0, dy = y1 - y0;
        if (dx == 0.0 || dy == 0.0) continue;
        // reuse the square-cell oracle by sampling the rectangle directly
        const int k = 600;
        long inside = 0;
        for (int ix = 0; ix < k; ++ix)
            for (int iy = 0; iy < k; ++iy) {
                const double px = x0 + (ix + 0.5) * dx / k;
                const double py = y0 + (iy + 0.5) * dy / k;
                if (px * px + py * py <= 1.0) ++inside;
            }
        const double reference = static_cast<double>(inside) * (dx / k) * (dy / k);
        CHECK(std::abs(area - reference) <= 3.0 * dx * dy / k);
    }
}
