#pragma once

#include <string>

namespace lgcp {

enum class CovarianceFamily {
    Constant,    ///< c(t) = sigma2
    Exponential, ///< c(t) = sigma2 * exp(-t / scale)
    Spherical,   ///< planar spherical model, zero beyond the scale
};

std::string to_string(CovarianceFamily family);
CovarianceFamily covariance_family_from_string(const std::string& name);

/// Stationary isotropic covariance function c(t) of the latent Gaussian field,
/// parameterized by the variance sigma^2 = c(0) and a range parameter `scale`.
///
/// All three families are nonnegative and non-increasing in t, so the derived
/// pair correlation exp(c(t)) is always >= 1.
struct CovarianceModel {
    CovarianceFamily family = CovarianceFamily::Exponential;
    double variance = 1.0; ///< sigma^2, >= 0
    double scale = 1.0;    ///< alpha, > 0, same length units as the domain

    CovarianceModel() = default;
    CovarianceModel(CovarianceFamily f, double variance_, double scale_);

    /// c(t) for t >= 0. Throws std::domain_error for negative t.
    double evaluate(double distance) const;

    /// exp(c(t)), the pair correlation at lag length t.
    double pair_correlation(double distance) const;

    /// True when c(t) >= 0 for all t; holds for every built-in family.
    bool nonnegative() const { return true; }
};

double covariance_eval(const CovarianceModel& model, double distance);

} // namespace lgcp
