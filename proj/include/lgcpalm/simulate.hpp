#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgcpalm/linalg.hpp"
#include "lgcpalm/model.hpp"
#include "lgcpalm/pattern.hpp"
#include "lgcpalm/random.hpp"

namespace lgcp {

/// Gaussian field realization sampled at the cell centers of an nx-by-ny
/// grid over the window. values are row-major with index iy * nx + ix.
struct FieldGrid {
    Window window;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;
    std::optional<std::uint64_t> seed;

    double cell_width() const { return window.width() / nx; }
    double cell_height() const { return window.height() / ny; }
    double cell_area() const { return cell_width() * cell_height(); }
    Point2 node(int ix, int iy) const {
        return Point2{window.x0 + (ix + 0.5) * cell_width(),
                      window.y0 + (iy + 0.5) * cell_height()};
    }
    double value(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }

    /// Dense CSV raster: header comments with window/shape/seed, then ny
    /// rows of nx comma-separated values (row iy = 0 first).
    std::string to_csv() const;
};

/// Exact sampler for the finite-dimensional Gaussian vector (Y(v))_v of a
/// model at a fixed node set: mean from the model (including any Palm mean
/// shift), covariance from c, factored once with Cholesky. Draws are
/// mean + L z with fresh standard normals, bitwise deterministic in the
/// substream seed.
class GaussianVectorSampler {
  public:
    GaussianVectorSampler(const LgcpModel& model, std::vector<Point2> nodes);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Point2>& nodes() const { return nodes_; }
    const std::vector<double>& mean() const { return mean_; }

    /// One realization; `substream` is a fully derived substream seed.
    std::vector<double> draw(std::uint64_t substream) const;

  private:
    std::vector<Point2> nodes_;
    std::vector<double> mean_;
    SymmetricFactorization chol_; ///< empty when the variance is zero
    bool degenerate_ = false;
};

/// Cell centers of the nx-by-ny grid over the window, row-major.
std::vector<Point2> grid_nodes(const Window& window, int nx, int ny);

/// One Gaussian-field draw on the grid. nx * ny <= 4096 (dense Cholesky).
FieldGrid simulate_grf(const LgcpModel& model, const Window& window, int nx, int ny,
                       std::uint64_t seed);

/// Given a field realization, sample the Cox pattern: per cell a Poisson
/// count with mean exp(Y(v)) * cell area, points placed uniformly in the
/// cell. Counts and placement use their own substreams of `seed`.
PointPattern sample_pattern_given_field(const FieldGrid& field, std::uint64_t seed);

/// LGCP realization on the window (field draw + conditional Poisson).
PointPattern simulate_lgcp(const LgcpModel& model, const Window& window, int nx, int ny,
                           std::uint64_t seed);

/// Palm-process realization: same pipeline with the mean function shifted
/// by sum_i c(|v - x_i|).
PointPattern simulate_palm(const LgcpModel& model, const std::vector<Point2>& conditioning,
                           const Window& window, int nx, int ny, std::uint64_t seed);

/// Realization-level coupling: thin a Palm pattern with retention
/// probabilities exp(-sum_i c(|x - x_i|)), which recovers the base process
/// law when c >= 0.
PointPattern thin_palm_to_base(const PointPattern& pattern, const LgcpModel& model,
                               const std::vector<Point2>& conditioning, std::uint64_t seed);

/// Replication-friendly simulator: the Cholesky factor is computed once and
/// shared across draws; draw k of master seed s uses substreams (s, ., k).
class LgcpSimulator {
  public:
    LgcpSimulator(const LgcpModel& model, const Window& window, int nx, int ny);

    FieldGrid draw_field(std::uint64_t seed, std::uint64_t replication = 0) const;
    PointPattern draw_pattern(std::uint64_t seed, std::uint64_t replication = 0) const;

    const GaussianVectorSampler& sampler() const { return sampler_; }

  private:
    Window window_;
    int nx_ = 0;
    int ny_ = 0;
    GaussianVectorSampler sampler_;
};

PalmConditioning to_conditioning(const std::vector<Point2>& points);

} // namespace lgcp
