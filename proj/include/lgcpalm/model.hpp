#pragma once

#include <vector>

#include "lgcpalm/covariance.hpp"
#include "lgcpalm/geometry.hpp"

namespace lgcp {

/// Ordered list of pairwise-distinct conditioning locations x_1..x_n.
/// Distinctness is checked with exact coordinate equality; the moment
/// formulas are singular only at exact coincidence.
struct PalmConditioning {
    std::vector<PointNd> points;

    PalmConditioning() = default;
    explicit PalmConditioning(std::vector<PointNd> pts);

    std::size_t size() const { return points.size(); }
};

/// Log Gaussian Cox process: the driving intensity is exp(Y) for a Gaussian
/// field Y with mean function mu and stationary covariance c.
///
/// The base model has a constant mean level. Palm conditioning on points
/// x_1..x_n shifts the mean to mu(u) = mean_level + sum_i c(|u - x_i|) while
/// leaving the covariance untouched, so a conditioned model is represented by
/// the same struct with `palm_points` filled in.
struct LgcpModel {
    double mean_level = 0.0;
    CovarianceModel covariance;
    int dimension = 2;
    std::vector<PointNd> palm_points; ///< empty for the base (stationary) model

    LgcpModel() = default;
    LgcpModel(double mean, CovarianceModel cov, int dim = 2);

    bool stationary() const { return palm_points.empty(); }

    /// mu(u) = mean_level + sum_i c(|u - x_i|) over the conditioning points.
    double mean_at(const PointNd& u) const;

    /// One-point intensity exp(mu(u) + sigma^2 / 2).
    double intensity_at(const PointNd& u) const;
};

/// Constant intensity rho = exp(mu + sigma^2/2) of a stationary model.
double intensity(const LgcpModel& model);

/// Solve exp(mu + sigma^2/2) = rho for the mean level.
double mean_level_for_intensity(double rho, double variance);

/// Pair correlation g(lag) = exp(c(|lag|)).
double pair_correlation(const LgcpModel& model, const PointNd& lag);

/// n-th order joint intensity: prod_i rho(x_i) * prod_{i<j} g(x_i - x_j).
/// Points must be pairwise distinct (exact equality).
double joint_intensity(const LgcpModel& model, const std::vector<PointNd>& points);

/// Palm mean function mu_{x_1..x_n}(u) = mu(u) + sum_i c(|u - x_i|).
double palm_mean_function(const LgcpModel& model, const PalmConditioning& cond, const PointNd& u);

/// The reduced Palm process of an LGCP is again an LGCP with the same
/// covariance and the shifted mean function; conditioning accumulates.
LgcpModel palm_model(const LgcpModel& model, const PalmConditioning& cond);

/// m-th order joint intensity of the reduced Palm process at u_1..u_m.
/// All of u_1..u_m and the conditioning points must be pairwise distinct.
double palm_joint_intensity(const LgcpModel& model, const PalmConditioning& cond,
                            const std::vector<PointNd>& points);

} // namespace lgcp
