#pragma once

#include <cstdint>
#include <vector>

#include "lgcpalm/model.hpp"
#include "lgcpalm/quadrature.hpp"
#include "lgcpalm/simulate.hpp"

namespace lgcp {

struct MonteCarloEstimate {
    double value = 0.0;
    double standard_error = 0.0; ///< sample standard deviation / sqrt(replications)
    long replications = 0;
};

/// Kahan-compensated accumulator; the mean is order-stable to ~1e-12 so
/// replications may be merged in any order.
class MeanAccumulator {
  public:
    void add(double x);
    long count() const { return count_; }
    double mean() const;
    double standard_error() const;
    MonteCarloEstimate estimate() const;

  private:
    double sum_ = 0.0, sum_c_ = 0.0;
    double sumsq_ = 0.0, sumsq_c_ = 0.0;
    long count_ = 0;
};

/// Monte Carlo estimate of 1 - F(r) = E exp(-sum_v w_v exp(Y_v)) on the
/// quadrature grid build_grid(r, q). Deterministic in the seed.
MonteCarloEstimate mc_one_minus_F(const LgcpModel& model, double r, int q, long replications,
                                  std::uint64_t seed);

enum class GRoute { ViaG1, ViaG2 };

/// 1 - G(r) by either route. ViaG2 averages exp(-sum w g(v) e^{Y_v});
/// ViaG1 averages exp(Y(o) - sum w e^{Y_v}) / rho with the origin value
/// sampled jointly. Both draw the origin-augmented field vector so that
/// identical seeds give identical field realizations across routes.
MonteCarloEstimate mc_one_minus_G(const LgcpModel& model, double r, int q, long replications,
                                  std::uint64_t seed, GRoute route);

struct PairedRoutes {
    MonteCarloEstimate via_g1;
    MonteCarloEstimate via_g2;
    MonteCarloEstimate difference; ///< per-replication G1 - G2, common draws
};

PairedRoutes mc_g_routes_paired(const LgcpModel& model, double r, int q, long replications,
                                std::uint64_t seed);

struct JointSummaries {
    MonteCarloEstimate one_minus_f;
    MonteCarloEstimate one_minus_g;       ///< via the reweighted integrand
    MonteCarloEstimate one_minus_g_via_g1;
    MonteCarloEstimate g_route_difference;
    bool numerator_le_denominator = true; ///< per draw: 1-G integrand <= 1-F integrand
};

/// All summary functionals from common field draws; used for the ordering
/// check behind J <= 1 and the route-agreement oracle.
JointSummaries mc_summaries(const LgcpModel& model, double r, int q, long replications,
                            std::uint64_t seed);

struct PairedEstimate {
    MonteCarloEstimate direct;
    MonteCarloEstimate weighted;
    MonteCarloEstimate difference; ///< per-replication direct - weighted
};

struct ReweightingReport {
    PairedEstimate half_space; ///< f = indicator of a half-space
    PairedEstimate exp_tilt;   ///< f = exponential tilt
    PairedEstimate unit;       ///< f = 1 (weights integrate to one)
};

/// Check the Gaussian reweighting identity behind the Palm characterization:
/// E f(Ytilde + shift) equals E f(Ytilde) exp{sum_i Ytilde(x_i) - sum_ij
/// c(x_i,x_j)/2}, on the finite set conditioning-points + test locations.
/// Both sides share each draw, so the difference is a paired estimate.
ReweightingReport mc_reweighting_check(const LgcpModel& model,
                                       const std::vector<Point2>& conditioning,
                                       const std::vector<Point2>& test_locations,
                                       long replications, std::uint64_t seed);

struct VoidCheck {
    MonteCarloEstimate palm_void;     ///< indicator of no Palm points in K
    MonteCarloEstimate weighted_void; ///< E[exp(-int_K Lambda) Lambda(x)] / rho
    MonteCarloEstimate difference;    ///< paired per replication
};

/// Void-probability identity for n = 1: Palm-pattern void frequency on a
/// rectangle K versus the weighted base-field expectation, computed from a
/// shared underlying Gaussian draw per replication.
VoidCheck mc_palm_void_check(const LgcpModel& model, const Point2& x, const Window& region,
                             const Window& window, int nx, int ny, long replications,
                             std::uint64_t seed);

} // namespace lgcp
