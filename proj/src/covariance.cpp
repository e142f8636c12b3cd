#include "lgcpalm/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcp {

std::string to_string(CovarianceFamily family) {
    switch (family) {
    case CovarianceFamily::Constant: return "constant";
    case CovarianceFamily::Exponential: return "exponential";
    case CovarianceFamily::Spherical: return "spherical";
    }
    throw std::logic_error("unknown covariance family");
}

CovarianceFamily covariance_family_from_string(const std::string& name) {
    if (name == "constant") return CovarianceFamily::Constant;
    if (name == "exponential") return CovarianceFamily::Exponential;
    if (name == "spherical") return CovarianceFamily::Spherical;
    throw std::invalid_argument("unknown covariance family: " + name);
}

CovarianceModel::CovarianceModel(CovarianceFamily f, double variance_, double scale_)
    : family(f), variance(variance_), scale(scale_) {
    if (!(variance >= 0.0))
        throw std::invalid_argument("covariance variance must be >= 0");
    if (!(scale > 0.0))
        throw std::invalid_argument("covariance scale must be > 0");
}

double CovarianceModel::evaluate(double distance) const {
    if (distance < 0.0)
        throw std::domain_error("covariance distance must be >= 0");
    switch (family) {
    case CovarianceFamily::Constant:
        return variance;
    case CovarianceFamily::Exponential:
        return variance * std::exp(-distance / scale);
    case CovarianceFamily::Spherical: {
        if (distance >= scale) return 0.0;
        const double t = distance / scale;
        const double value = 1.0 - (2.0 / M_PI) * (t * std::sqrt(1.0 - t * t) + std::asin(t));
        return variance * value;
    }
    }
    throw std::logic_error("unknown covariance family");
}

double CovarianceModel::pair_correlation(double distance) const {
    return std::exp(evaluate(distance));
}

double covariance_eval(const CovarianceModel& model, double distance) {
    return model.evaluate(distance);
}

} // namespace lgcp
