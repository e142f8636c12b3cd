#pragma once

#include <string>
#include <vector>

#include "lgcpalm/estimators.hpp"
#include "lgcpalm/model.hpp"
#include "lgcpalm/pattern.hpp"

namespace lgcp {

struct FitResult {
    double variance = 0.0;   ///< fitted sigma^2
    double scale = 0.0;      ///< fitted alpha
    double contrast = 0.0;   ///< objective value at the optimum
    double intensity = 0.0;  ///< rho = n / |W|, held fixed during the search
    double mean_level = 0.0; ///< log rho - sigma^2 / 2
    long iterations = 0;     ///< objective evaluations across all starts
    bool converged = false;

    LgcpModel model(CovarianceFamily family) const;
    std::string to_json() const;
};

/// Minimum contrast fit of (sigma^2, alpha) for the given covariance family:
/// minimize int_0^rmax |Khat(r)^{1/4} - K(r; theta)^{1/4}|^2 dr with Khat from
/// the translation estimator and K from theoretical_K_value. The search runs
/// Nelder-Mead over (log sigma^2, log(alpha/side)) from 5 fixed starting
/// points inside the box sigma^2 in [1e-4, 25], alpha in [0.01, 0.5] * the
/// shorter window side; everything is deterministic. r_max <= 0 selects the
/// default, a quarter of the shorter window side.
FitResult fit_min_contrast(const PointPattern& pattern, CovarianceFamily family,
                           double r_max = 0.0);

struct JReport {
    std::vector<double> radii;
    std::vector<double> j_empirical;
    std::vector<std::uint8_t> empirical_ok;
    std::vector<double> j_model;
    std::vector<std::uint8_t> model_ok;
    double max_abs_difference = 0.0; ///< over radii where both sides are defined
    std::string to_json() const;
};

/// Model check: the empirical J of the pattern against the Laplace J of a
/// fitted model, with the maximal pointwise discrepancy.
JReport model_check_J(const PointPattern& pattern, const LgcpModel& model,
                      const std::vector<double>& radii, int q);

} // namespace lgcp
