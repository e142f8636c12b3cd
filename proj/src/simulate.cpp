#include "lgcpalm/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lgcp {

namespace {

constexpr std::size_t kMaxDenseNodes = 4096;

void check_planar(const LgcpModel& model, const char* what) {
    if (model.dimension != 2)
        throw std::invalid_argument(std::string(what) + ": requires a planar model");
}

} // namespace

std::string FieldGrid::to_csv() const {
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof(buf), "# window: %.17g %.17g %.17g %.17g\n", window.x0, window.x1,
                  window.y0, window.y1);
    out += buf;
    std::snprintf(buf, sizeof(buf), "# shape: %d %d\n", nx, ny);
    out += buf;
    if (seed) {
        std::snprintf(buf, sizeof(buf), "# seed: %llu\n", static_cast<unsigned long long>(*seed));
        out += buf;
    }
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            std::snprintf(buf, sizeof(buf), "%.17g", value(ix, iy));
            out += buf;
            out += (ix + 1 == nx) ? "\n" : ",";
        }
    }
    return out;
}

GaussianVectorSampler::GaussianVectorSampler(const LgcpModel& model, std::vector<Point2> nodes)
    : nodes_(std::move(nodes)) {
    check_planar(model, "GaussianVectorSampler");
    const std::size_t m = nodes_.size();
    if (m == 0)
        throw std::invalid_argument("GaussianVectorSampler: empty node set");
    if (m > kMaxDenseNodes + 8)
        throw std::invalid_argument("GaussianVectorSampler: node count exceeds the dense bound");

    mean_.resize(m);
    for (std::size_t i = 0; i < m; ++i) mean_[i] = model.mean_at(to_nd(nodes_[i]));

    degenerate_ = model.covariance.variance == 0.0;
    if (degenerate_) return;

    DenseMatrix sigma(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        sigma(i, i) = model.covariance.variance;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double c = model.covariance.evaluate(distance(nodes_[i], nodes_[j]));
            sigma(i, j) = c;
            sigma(j, i) = c;
        }
    }
    chol_ = cholesky(sigma);
}

std::vector<double> GaussianVectorSampler::draw(std::uint64_t substream) const {
    const std::size_t m = nodes_.size();
    std::vector<double> values = mean_;
    if (degenerate_) return values;
    Rng rng(substream);
    std::vector<double> z(m);
    for (auto& v : z) v = rng.normal();
    const DenseMatrix& l = chol_.lower();
    for (std::size_t i = 0; i < m; ++i) {
        const double* li = l.row(i);
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += li[k] * z[k];
        values[i] += s;
    }
    return values;
}

std::vector<Point2> grid_nodes(const Window& window, int nx, int ny) {
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("grid_nodes: resolution must be >= 1 per axis");
    if (!(window.area() > 0.0))
        throw std::invalid_argument("grid_nodes: window must have positive area");
    std::vector<Point2> nodes;
    nodes.reserve(static_cast<std::size_t>(nx) * ny);
    const double dx = window.width() / nx;
    const double dy = window.height() / ny;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            nodes.push_back(Point2{window.x0 + (ix + 0.5) * dx, window.y0 + (iy + 0.5) * dy});
    return nodes;
}

FieldGrid simulate_grf(const LgcpModel& model, const Window& window, int nx, int ny,
                       std::uint64_t seed) {
    if (static_cast<std::size_t>(nx) * ny > kMaxDenseNodes)
        throw std::invalid_argument("simulate_grf: grid exceeds 4096 nodes");
    const GaussianVectorSampler sampler(model, grid_nodes(window, nx, ny));
    FieldGrid field;
    field.window = window;
    field.nx = nx;
    field.ny = ny;
    field.values = sampler.draw(substream_seed(seed, StreamKind::Field, 0));
    field.seed = seed;
    return field;
}

PointPattern sample_pattern_given_field(const FieldGrid& field, std::uint64_t seed) {
    Rng counts(substream_seed(seed, StreamKind::Counts, 0));
    Rng placement(substream_seed(seed, StreamKind::Placement, 0));
    const double dx = field.cell_width();
    const double dy = field.cell_height();
    const double area = field.cell_area();

    PointPattern pattern;
    pattern.window = field.window;
    pattern.seed = seed;
    for (int iy = 0; iy < field.ny; ++iy) {
        for (int ix = 0; ix < field.nx; ++ix) {
            const double lambda = std::exp(field.value(ix, iy)) * area;
            const long count = counts.poisson(lambda);
            const double cx = field.window.x0 + ix * dx;
            const double cy = field.window.y0 + iy * dy;
            for (long k = 0; k < count; ++k) {
                const double px = cx + placement.uniform01() * dx;
                const double py = cy + placement.uniform01() * dy;
                pattern.points.push_back(Point2{px, py});
            }
        }
    }
    return pattern;
}

PointPattern simulate_lgcp(const LgcpModel& model, const Window& window, int nx, int ny,
                           std::uint64_t seed) {
    const FieldGrid field = simulate_grf(model, window, nx, ny, seed);
    return sample_pattern_given_field(field, seed);
}

PalmConditioning to_conditioning(const std::vector<Point2>& points) {
    std::vector<PointNd> nd;
    nd.reserve(points.size());
    for (const auto& p : points) nd.push_back(to_nd(p));
    return PalmConditioning(std::move(nd));
}

PointPattern simulate_palm(const LgcpModel& model, const std::vector<Point2>& conditioning,
                           const Window& window, int nx, int ny, std::uint64_t seed) {
    return simulate_lgcp(palm_model(model, to_conditioning(conditioning)), window, nx, ny, seed);
}

PointPattern thin_palm_to_base(const PointPattern& pattern, const LgcpModel& model,
                               const std::vector<Point2>& conditioning, std::uint64_t seed) {
    check_planar(model, "thin_palm_to_base");
    if (!model.covariance.nonnegative())
        throw std::domain_error("thin_palm_to_base: coupling requires a nonnegative covariance");
    Rng rng(substream_seed(seed, StreamKind::Thinning, 0));
    PointPattern thinned;
    thinned.window = pattern.window;
    thinned.seed = seed;
    for (const auto& p : pattern.points) {
        double shift = 0.0;
        for (const auto& x : conditioning) shift += model.covariance.evaluate(distance(p, x));
        const double keep = std::exp(-shift);
        if (rng.uniform01() < keep) thinned.points.push_back(p);
    }
    return thinned;
}

LgcpSimulator::LgcpSimulator(const LgcpModel& model, const Window& window, int nx, int ny)
    : window_(window), nx_(nx), ny_(ny), sampler_(model, grid_nodes(window, nx, ny)) {
    if (static_cast<std::size_t>(nx) * ny > kMaxDenseNodes)
        throw std::invalid_argument("LgcpSimulator: grid exceeds 4096 nodes");
}

FieldGrid LgcpSimulator::draw_field(std::uint64_t seed, std::uint64_t replication) const {
    FieldGrid field;
    field.window = window_;
    field.nx = nx_;
    field.ny = ny_;
    field.values = sampler_.draw(substream_seed(seed, StreamKind::Field, replication));
    field.seed = seed;
    return field;
}

PointPattern LgcpSimulator::draw_pattern(std::uint64_t seed, std::uint64_t replication) const {
    const FieldGrid field = draw_field(seed, replication);
    Rng counts(substream_seed(seed, StreamKind::Counts, replication));
    Rng placement(substream_seed(seed, StreamKind::Placement, replication));
    const double dx = field.cell_width();
    const double dy = field.cell_height();
    const double area = field.cell_area();

    PointPattern pattern;
    pattern.window = window_;
    pattern.seed = seed;
    for (int iy = 0; iy < ny_; ++iy) {
        for (int ix = 0; ix < nx_; ++ix) {
            const double lambda = std::exp(field.value(ix, iy)) * area;
            const long count = counts.poisson(lambda);
            const double cx = window_.x0 + ix * dx;
            const double cy = window_.y0 + iy * dy;
            for (long k = 0; k < count; ++k) {
                const double px = cx + placement.uniform01() * dx;
                const double py = cy + placement.uniform01() * dy;
                pattern.points.push_back(Point2{px, py});
            }
        }
    }
    return pattern;
}

} // namespace lgcp
