#include "lgcpalm/model.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcp {

namespace {

void check_dimension(const std::vector<PointNd>& points, int dimension, const char* what) {
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dimension)
            throw std::invalid_argument(std::string(what) + ": point dimension mismatch");
    }
}

void check_pairwise_distinct(const std::vector<PointNd>& points, const char* what) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j])
                throw std::domain_error(std::string(what) + ": points must be pairwise distinct");
        }
    }
}

} // namespace

PalmConditioning::PalmConditioning(std::vector<PointNd> pts) : points(std::move(pts)) {
    if (points.empty())
        throw std::invalid_argument("PalmConditioning: needs at least one point");
    check_pairwise_distinct(points, "PalmConditioning");
}

LgcpModel::LgcpModel(double mean, CovarianceModel cov, int dim)
    : mean_level(mean), covariance(cov), dimension(dim) {
    if (dim < 1)
        throw std::invalid_argument("LgcpModel: dimension must be positive");
}

double LgcpModel::mean_at(const PointNd& u) const {
    double m = mean_level;
    for (const auto& x : palm_points)
        m += covariance.evaluate(distance(u, x));
    return m;
}

double LgcpModel::intensity_at(const PointNd& u) const {
    return std::exp(mean_at(u) + 0.5 * covariance.variance);
}

double intensity(const LgcpModel& model) {
    if (!model.stationary())
        throw std::invalid_argument("intensity: model is Palm-conditioned, use intensity_at");
    return std::exp(model.mean_level + 0.5 * model.covariance.variance);
}

double mean_level_for_intensity(double rho, double variance) {
    if (!(rho > 0.0))
        throw std::invalid_argument("intensity must be > 0");
    return std::log(rho) - 0.5 * variance;
}

double pair_correlation(const LgcpModel& model, const PointNd& lag) {
    double norm2 = 0.0;
    for (double v : lag) norm2 += v * v;
    return model.covariance.pair_correlation(std::sqrt(norm2));
}

double joint_intensity(const LgcpModel& model, const std::vector<PointNd>& points) {
    if (points.empty())
        throw std::invalid_argument("joint_intensity: needs at least one point");
    check_dimension(points, model.dimension, "joint_intensity");
    check_pairwise_distinct(points, "joint_intensity");

    double value = 1.0;
    for (const auto& p : points)
        value *= model.intensity_at(p);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            value *= model.covariance.pair_correlation(distance(points[i], points[j]));
    return value;
}

double palm_mean_function(const LgcpModel& model, const PalmConditioning& cond, const PointNd& u) {
    double m = model.mean_at(u);
    for (const auto& x : cond.points)
        m += model.covariance.evaluate(distance(u, x));
    return m;
}

LgcpModel palm_model(const LgcpModel& model, const PalmConditioning& cond) {
    check_dimension(cond.points, model.dimension, "palm_model");
    LgcpModel result = model;
    result.palm_points.insert(result.palm_points.end(), cond.points.begin(), cond.points.end());
    check_pairwise_distinct(result.palm_points, "palm_model");
    return result;
}

double palm_joint_intensity(const LgcpModel& model, const PalmConditioning& cond,
                            const std::vector<PointNd>& points) {
    std::vector<PointNd> all = cond.points;
    all.insert(all.end(), points.begin(), points.end());
    check_pairwise_distinct(all, "palm_joint_intensity");
    return joint_intensity(palm_model(model, cond), points);
}

} // namespace lgcp
