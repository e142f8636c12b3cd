#pragma once

#include <vector>

#include "lgcpalm/model.hpp"
#include "lgcpalm/pattern.hpp"
#include "lgcpalm/summary.hpp"

namespace lgcp {

/// Ripley K with translation edge correction,
///   Khat(r) = |W|^2 / (n(n-1)) sum_{x != y} 1(|x-y| <= r) / |W cap W_{x-y}|.
/// Nondecreasing in r by construction.
SummaryCurve estimate_K(const PointPattern& pattern, const std::vector<double>& radii);

/// Empty space function by the reduced-sample (border) method over a regular
/// reference lattice: only lattice points farther than r from the boundary
/// count. Radii beyond half the shorter window side are flagged missing.
/// The raw border estimate is not guaranteed monotone, so the contract's
/// nondecreasing shape is enforced with a running maximum over the defined
/// radii.
SummaryCurve estimate_F(const PointPattern& pattern, const std::vector<double>& radii,
                        int grid_resolution = 100);

/// Nearest-neighbour distribution by the reduced-sample method over the
/// pattern points; same border restriction and monotone envelope as
/// estimate_F. A pattern with fewer than two points has no neighbour
/// distances and every radius is flagged missing.
SummaryCurve estimate_G(const PointPattern& pattern, const std::vector<double>& radii);

/// Jhat = (1 - Ghat) / (1 - Fhat) pointwise, with the a/0 = 0 convention;
/// missing wherever either input is missing.
SummaryCurve estimate_J(const PointPattern& pattern, const std::vector<double>& radii,
                        int grid_resolution = 100);

/// Theoretical K(r) = 2 pi int_0^r s exp(c(s)) ds for an isotropic model,
/// by adaptive quadrature to 1e-10 relative accuracy (the spherical family
/// is integrated piecewise around its range point).
SummaryCurve theoretical_K(const LgcpModel& model, const std::vector<double>& radii);

/// Single value of the theoretical K at radius r.
double theoretical_K_value(const CovarianceModel& covariance, double r);

} // namespace lgcp
