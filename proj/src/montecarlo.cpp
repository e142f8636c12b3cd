#include "lgcpalm/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcp {

void MeanAccumulator::add(double x) {
    // Kahan compensation on both running sums.
    double t = x - sum_c_;
    double s = sum_ + t;
    sum_c_ = (s - sum_) - t;
    sum_ = s;
    const double x2 = x * x;
    t = x2 - sumsq_c_;
    s = sumsq_ + t;
    sumsq_c_ = (s - sumsq_) - t;
    sumsq_ = s;
    ++count_;
}

double MeanAccumulator::mean() const {
    if (count_ == 0)
        throw std::logic_error("MeanAccumulator: no samples");
    return sum_ / count_;
}

double MeanAccumulator::standard_error() const {
    if (count_ < 2) return 0.0;
    const double m = mean();
    double var = (sumsq_ - count_ * m * m) / (count_ - 1);
    if (var < 0.0) var = 0.0;
    return std::sqrt(var / count_);
}

MonteCarloEstimate MeanAccumulator::estimate() const {
    return MonteCarloEstimate{mean(), standard_error(), count_};
}

namespace {

struct GridSampler {
    QuadratureGrid grid;
    GaussianVectorSampler sampler;
    std::vector<double> g_multiplier; ///< g(v) per grid node
    bool augmented = false;           ///< origin appended as the last node

    GridSampler(const LgcpModel& model, double r, int q, bool with_origin)
        : grid(build_grid(r, q)),
          sampler(model, with_origin ? augmented_nodes(grid) : grid.nodes),
          augmented(with_origin) {
        g_multiplier.resize(grid.size());
        for (std::size_t v = 0; v < grid.size(); ++v)
            g_multiplier[v] = model.covariance.pair_correlation(norm(grid.nodes[v]));
    }

    static std::vector<Point2> augmented_nodes(const QuadratureGrid& grid) {
        std::vector<Point2> nodes = grid.nodes;
        nodes.push_back(Point2{0.0, 0.0});
        return nodes;
    }

    double integral_f(const std::vector<double>& y) const {
        double s = 0.0;
        for (std::size_t v = 0; v < grid.size(); ++v)
            s += grid.weights[v] * std::exp(y[v]);
        return s;
    }

    double integral_g(const std::vector<double>& y) const {
        double s = 0.0;
        for (std::size_t v = 0; v < grid.size(); ++v)
            s += grid.weights[v] * g_multiplier[v] * std::exp(y[v]);
        return s;
    }

    double origin_value(const std::vector<double>& y) const {
        if (!augmented)
            throw std::logic_error("GridSampler: origin not sampled");
        return y.back();
    }
};

void check_mc_args(double r, long replications) {
    if (!(r > 0.0))
        throw std::invalid_argument("monte carlo summary: r must be > 0");
    if (replications < 1)
        throw std::invalid_argument("monte carlo summary: needs at least one replication");
}

} // namespace

MonteCarloEstimate mc_one_minus_F(const LgcpModel& model, double r, int q, long replications,
                                  std::uint64_t seed) {
    check_mc_args(r, replications);
    const GridSampler gs(model, r, q, false);
    MeanAccumulator acc;
    for (long rep = 0; rep < replications; ++rep) {
        const auto y = gs.sampler.draw(substream_seed(seed, StreamKind::Field, rep));
        acc.add(std::exp(-gs.integral_f(y)));
    }
    return acc.estimate();
}

MonteCarloEstimate mc_one_minus_G(const LgcpModel& model, double r, int q, long replications,
                                  std::uint64_t seed, GRoute route) {
    check_mc_args(r, replications);
    const double rho = intensity(model);
    const GridSampler gs(model, r, q, true);
    MeanAccumulator acc;
    for (long rep = 0; rep < replications; ++rep) {
        const auto y = gs.sampler.draw(substream_seed(seed, StreamKind::Field, rep));
        if (route == GRoute::ViaG2)
            acc.add(std::exp(-gs.integral_g(y)));
        else
            acc.add(std::exp(gs.origin_value(y) - gs.integral_f(y)) / rho);
    }
    return acc.estimate();
}

PairedRoutes mc_g_routes_paired(const LgcpModel& model, double r, int q, long replications,
                                std::uint64_t seed) {
    check_mc_args(r, replications);
    const double rho = intensity(model);
    const GridSampler gs(model, r, q, true);
    MeanAccumulator acc_g1, acc_g2, acc_diff;
    for (long rep = 0; rep < replications; ++rep) {
        const auto y = gs.sampler.draw(substream_seed(seed, StreamKind::Field, rep));
        const double g1 = std::exp(gs.origin_value(y) - gs.integral_f(y)) / rho;
        const double g2 = std::exp(-gs.integral_g(y));
        acc_g1.add(g1);
        acc_g2.add(g2);
        acc_diff.add(g1 - g2);
    }
    return PairedRoutes{acc_g1.estimate(), acc_g2.estimate(), acc_diff.estimate()};
}

JointSummaries mc_summaries(const LgcpModel& model, double r, int q, long replications,
                            std::uint64_t seed) {
    check_mc_args(r, replications);
    const double rho = intensity(model);
    const GridSampler gs(model, r, q, true);
    MeanAccumulator acc_f, acc_g, acc_g1, acc_diff;
    bool ordered = true;
    for (long rep = 0; rep < replications; ++rep) {
        const auto y = gs.sampler.draw(substream_seed(seed, StreamKind::Field, rep));
        const double int_f = gs.integral_f(y);
        const double int_g = gs.integral_g(y);
        if (int_g < int_f) ordered = false;
        const double f_val = std::exp(-int_f);
        const double g_val = std::exp(-int_g);
        const double g1_val = std::exp(gs.origin_value(y) - int_f) / rho;
        acc_f.add(f_val);
        acc_g.add(g_val);
        acc_g1.add(g1_val);
        acc_diff.add(g1_val - g_val);
    }
    JointSummaries out;
    out.one_minus_f = acc_f.estimate();
    out.one_minus_g = acc_g.estimate();
    out.one_minus_g_via_g1 = acc_g1.estimate();
    out.g_route_difference = acc_diff.estimate();
    out.numerator_le_denominator = ordered;
    return out;
}

ReweightingReport mc_reweighting_check(const LgcpModel& model,
                                       const std::vector<Point2>& conditioning,
                                       const std::vector<Point2>& test_locations,
                                       long replications, std::uint64_t seed) {
    if (conditioning.empty() || test_locations.empty())
        throw std::invalid_argument("mc_reweighting_check: needs conditioning and test points");
    if (replications < 2)
        throw std::invalid_argument("mc_reweighting_check: needs at least two replications");
    for (const auto& t : test_locations)
        for (const auto& x : conditioning)
            if (t.x == x.x && t.y == x.y)
                throw std::invalid_argument(
                    "mc_reweighting_check: test locations must avoid conditioning points");

    const std::size_t n = conditioning.size();
    std::vector<Point2> nodes = conditioning;
    nodes.insert(nodes.end(), test_locations.begin(), test_locations.end());

    // Centered field: same covariance, zero mean, no conditioning.
    LgcpModel centered(0.0, model.covariance, 2);
    const GaussianVectorSampler sampler(centered, nodes);

    std::vector<double> shift(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& x : conditioning)
            shift[i] += model.covariance.evaluate(distance(nodes[i], x));

    double cross_sum = 0.0; // sum_{i,j} c(x_i, x_j), diagonal included
    for (const auto& a : conditioning)
        for (const auto& b : conditioning) cross_sum += model.covariance.evaluate(distance(a, b));
    const double log_weight_offset = -0.5 * cross_sum;

    // f depends on the total field over the test locations.
    const auto test_total = [&](const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = n; i < y.size(); ++i) s += y[i];
        return s;
    };
    double shift_total = 0.0;
    for (std::size_t i = n; i < nodes.size(); ++i) shift_total += shift[i];
    const double threshold = 0.5 * shift_total; // half the mean shift under the Palm law
    const double tilt = 0.25;

    MeanAccumulator hs_direct, hs_weighted, hs_diff;
    MeanAccumulator et_direct, et_weighted, et_diff;
    MeanAccumulator one_direct, one_weighted, one_diff;

    for (long rep = 0; rep < replications; ++rep) {
        const auto y = sampler.draw(substream_seed(seed, StreamKind::Field, rep));
        double weight_log = log_weight_offset;
        for (std::size_t i = 0; i < n; ++i) weight_log += y[i];
        const double weight = std::exp(weight_log);

        const double total = test_total(y);
        double shifted_total = total + shift_total;

        const double hs_d = shifted_total >= threshold ? 1.0 : 0.0;
        const double hs_w = (total >= threshold ? 1.0 : 0.0) * weight;
        hs_direct.add(hs_d);
        hs_weighted.add(hs_w);
        hs_diff.add(hs_d - hs_w);

        const double et_d = std::exp(tilt * shifted_total);
        const double et_w = std::exp(tilt * total) * weight;
        et_direct.add(et_d);
        et_weighted.add(et_w);
        et_diff.add(et_d - et_w);

        one_direct.add(1.0);
        one_weighted.add(weight);
        one_diff.add(1.0 - weight);
    }

    ReweightingReport report;
    report.half_space = PairedEstimate{hs_direct.estimate(), hs_weighted.estimate(),
                                       hs_diff.estimate()};
    report.exp_tilt = PairedEstimate{et_direct.estimate(), et_weighted.estimate(),
                                     et_diff.estimate()};
    report.unit = PairedEstimate{one_direct.estimate(), one_weighted.estimate(),
                                 one_diff.estimate()};
    return report;
}

VoidCheck mc_palm_void_check(const LgcpModel& model, const Point2& x, const Window& region,
                             const Window& window, int nx, int ny, long replications,
                             std::uint64_t seed) {
    if (replications < 2)
        throw std::invalid_argument("mc_palm_void_check: needs at least two replications");
    if (!window.contains(x))
        throw std::invalid_argument("mc_palm_void_check: x must lie in the window");
    if (region.x0 < window.x0 || region.x1 > window.x1 || region.y0 < window.y0 ||
        region.y1 > window.y1)
        throw std::invalid_argument("mc_palm_void_check: region must lie in the window");

    const double rho = intensity(model);
    std::vector<Point2> nodes = grid_nodes(window, nx, ny);
    const std::size_t m = nodes.size();
    nodes.push_back(x);
    const GaussianVectorSampler sampler(model, nodes);

    std::vector<double> shift(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        shift[i] = model.covariance.evaluate(distance(nodes[i], x));

    // per-cell overlap with the region
    const double dx = window.width() / nx;
    const double dy = window.height() / ny;
    const double cell_area = dx * dy;
    std::vector<double> overlap(m, 0.0);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double cx0 = window.x0 + ix * dx, cx1 = cx0 + dx;
            const double cy0 = window.y0 + iy * dy, cy1 = cy0 + dy;
            const double ox = std::max(0.0, std::min(cx1, region.x1) - std::max(cx0, region.x0));
            const double oy = std::max(0.0, std::min(cy1, region.y1) - std::max(cy0, region.y0));
            overlap[static_cast<std::size_t>(iy) * nx + ix] = ox * oy;
        }
    }

    MeanAccumulator acc_palm, acc_weighted, acc_diff;
    for (long rep = 0; rep < replications; ++rep) {
        const auto y = sampler.draw(substream_seed(seed, StreamKind::Field, rep));

        // Palm side: simulate points from the shifted field, only cells
        // overlapping the region matter for the void indicator.
        Rng counts(substream_seed(seed, StreamKind::Counts, rep));
        Rng placement(substream_seed(seed, StreamKind::Placement, rep));
        bool empty = true;
        for (std::size_t v = 0; v < m; ++v) {
            const double lambda = std::exp(y[v] + shift[v]) * cell_area;
            const long count = counts.poisson(lambda);
            if (count == 0 || overlap[v] == 0.0) continue;
            const int ix = static_cast<int>(v % nx);
            const int iy = static_cast<int>(v / nx);
            const double cx0 = window.x0 + ix * dx;
            const double cy0 = window.y0 + iy * dy;
            for (long k = 0; k < count; ++k) {
                const double px = cx0 + placement.uniform01() * dx;
                const double py = cy0 + placement.uniform01() * dy;
                if (px >= region.x0 && px <= region.x1 && py >= region.y0 && py <= region.y1)
                    empty = false;
            }
        }
        const double palm_val = empty ? 1.0 : 0.0;

        // Weighted side from the same base draw: exp(-int_K Lambda) Lambda(x) / rho.
        double integral = 0.0;
        for (std::size_t v = 0; v < m; ++v)
            if (overlap[v] > 0.0) integral += overlap[v] * std::exp(y[v]);
        const double weighted_val = std::exp(y[m] - integral) / rho;

        acc_palm.add(palm_val);
        acc_weighted.add(weighted_val);
        acc_diff.add(palm_val - weighted_val);
    }
    return VoidCheck{acc_palm.estimate(), acc_weighted.estimate(), acc_diff.estimate()};
}

} // namespace lgcp
