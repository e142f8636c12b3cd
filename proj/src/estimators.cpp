#include "lgcpalm/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace lgcp {

namespace {

void check_radii(const std::vector<double>& radii) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0))
            throw std::invalid_argument("estimator radii must be strictly positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("estimator radii must be strictly increasing");
    }
}

void monotone_envelope(SummaryCurve& curve) {
    double running = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (!curve.ok[i]) continue;
        running = std::max(running, curve.values[i]);
        curve.values[i] = running;
    }
}

} // namespace

SummaryCurve estimate_K(const PointPattern& pattern, const std::vector<double>& radii) {
    check_radii(radii);
    pattern.validate();
    const std::size_t n = pattern.size();
    if (n == 0)
        throw std::invalid_argument("estimate_K: empty pattern");

    SummaryCurve curve;
    curve.kind = SummaryKind::K;
    curve.method = SummaryMethod::Empirical;

    if (n == 1) {
        for (double r : radii) curve.push(r, 0.0);
        return curve;
    }

    const double lx = pattern.window.width();
    const double ly = pattern.window.height();
    const double area = pattern.window.area();
    const double scale = area * area / (static_cast<double>(n) * (n - 1));

    // ordered pairs contribute twice; collect (distance, weight) once per pair
    std::vector<std::pair<double, double>> contributions;
    contributions.reserve(n * (n - 1) / 2);
    const double r_max = radii.back();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = std::abs(pattern.points[i].x - pattern.points[j].x);
            const double dy = std::abs(pattern.points[i].y - pattern.points[j].y);
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d > r_max) continue;
            const double overlap = (lx - dx) * (ly - dy);
            contributions.emplace_back(d, 2.0 / overlap);
        }
    }
    std::sort(contributions.begin(), contributions.end());

    std::size_t idx = 0;
    double cumulative = 0.0;
    for (double r : radii) {
        while (idx < contributions.size() && contributions[idx].first <= r)
            cumulative += contributions[idx++].second;
        curve.push(r, scale * cumulative);
    }
    return curve;
}

SummaryCurve estimate_F(const PointPattern& pattern, const std::vector<double>& radii,
                        int grid_resolution) {
    check_radii(radii);
    pattern.validate();
    if (grid_resolution < 1)
        throw std::invalid_argument("estimate_F: grid resolution must be >= 1");

    SummaryCurve curve;
    curve.kind = SummaryKind::F;
    curve.method = SummaryMethod::Empirical;

    const Window& w = pattern.window;
    const double half_min_side = 0.5 * w.shorter_side();
    const double dx = w.width() / grid_resolution;
    const double dy = w.height() / grid_resolution;

    // reference lattice with distance to nearest pattern point and boundary
    std::vector<std::pair<double, double>> lattice; // (boundary distance, nearest distance)
    lattice.reserve(static_cast<std::size_t>(grid_resolution) * grid_resolution);
    for (int iy = 0; iy < grid_resolution; ++iy) {
        for (int ix = 0; ix < grid_resolution; ++ix) {
            const Point2 u{w.x0 + (ix + 0.5) * dx, w.y0 + (iy + 0.5) * dy};
            double nearest2 = std::numeric_limits<double>::infinity();
            for (const auto& p : pattern.points)
                nearest2 = std::min(nearest2, squared_distance(u, p));
            lattice.emplace_back(w.boundary_distance(u), std::sqrt(nearest2));
        }
    }

    for (double r : radii) {
        if (r > half_min_side) {
            curve.push_missing(r, "radius exceeds half the shorter window side");
            continue;
        }
        long eligible = 0, covered = 0;
        for (const auto& [boundary, nearest] : lattice) {
            if (boundary < r) continue;
            ++eligible;
            if (nearest <= r) ++covered;
        }
        if (eligible == 0) {
            curve.push_missing(r, "no reference points beyond the border distance");
            continue;
        }
        curve.push(r, static_cast<double>(covered) / eligible);
    }
    monotone_envelope(curve);
    return curve;
}

SummaryCurve estimate_G(const PointPattern& pattern, const std::vector<double>& radii) {
    check_radii(radii);
    pattern.validate();

    SummaryCurve curve;
    curve.kind = SummaryKind::G;
    curve.method = SummaryMethod::Empirical;

    const std::size_t n = pattern.size();
    if (n < 2) {
        for (double r : radii) curve.push_missing(r, "no neighbour distances");
        return curve;
    }

    const Window& w = pattern.window;
    const double half_min_side = 0.5 * w.shorter_side();
    std::vector<std::pair<double, double>> info; // (boundary distance, nn distance)
    info.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double nearest2 = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            nearest2 = std::min(nearest2, squared_distance(pattern.points[i], pattern.points[j]));
        }
        info.emplace_back(w.boundary_distance(pattern.points[i]), std::sqrt(nearest2));
    }

    for (double r : radii) {
        if (r > half_min_side) {
            curve.push_missing(r, "radius exceeds half the shorter window side");
            continue;
        }
        long eligible = 0, covered = 0;
        for (const auto& [boundary, nearest] : info) {
            if (boundary < r) continue;
            ++eligible;
            if (nearest <= r) ++covered;
        }
        if (eligible == 0) {
            curve.push_missing(r, "no pattern points beyond the border distance");
            continue;
        }
        curve.push(r, static_cast<double>(covered) / eligible);
    }
    monotone_envelope(curve);
    return curve;
}

SummaryCurve estimate_J(const PointPattern& pattern, const std::vector<double>& radii,
                        int grid_resolution) {
    const SummaryCurve f = estimate_F(pattern, radii, grid_resolution);
    const SummaryCurve g = estimate_G(pattern, radii);

    SummaryCurve curve;
    curve.kind = SummaryKind::J;
    curve.method = SummaryMethod::Empirical;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!f.ok[i] || !g.ok[i]) {
            curve.push_missing(radii[i], !f.ok[i] ? f.notes[i] : g.notes[i]);
            continue;
        }
        const double one_minus_f = 1.0 - f.values[i];
        const double one_minus_g = 1.0 - g.values[i];
        curve.push(radii[i], one_minus_f == 0.0 ? 0.0 : one_minus_g / one_minus_f);
    }
    return curve;
}

namespace {

// adaptive Simpson for smooth integrands
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

double theoretical_K_value(const CovarianceModel& covariance, double r) {
    if (!(r >= 0.0))
        throw std::invalid_argument("theoretical_K_value: r must be >= 0");
    if (r == 0.0) return 0.0;
    const auto integrand = [&](double s) {
        return 2.0 * M_PI * s * std::exp(covariance.evaluate(s));
    };
    // relative tolerance target 1e-10 on a quantity of order pi r^2 e^{c}
    const double scale = M_PI * r * r * std::exp(covariance.variance);
    const double tol = 1e-12 * scale;
    if (covariance.family == CovarianceFamily::Spherical && r > covariance.scale) {
        // beyond the range g = 1, the tail is a plain annulus
        const double inside = integrate(integrand, 0.0, covariance.scale, tol);
        return inside + M_PI * (r * r - covariance.scale * covariance.scale);
    }
    return integrate(integrand, 0.0, r, tol);
}

SummaryCurve theoretical_K(const LgcpModel& model, const std::vector<double>& radii) {
    check_radii(radii);
    SummaryCurve curve;
    curve.kind = SummaryKind::K;
    curve.method = SummaryMethod::Theoretical;
    for (double r : radii) curve.push(r, theoretical_K_value(model.covariance, r));
    return curve;
}

} // namespace lgcp
