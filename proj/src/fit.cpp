#include "lgcpalm/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "lgcpalm/laplace.hpp"

namespace lgcp {

LgcpModel FitResult::model(CovarianceFamily family) const {
    return LgcpModel(mean_level, CovarianceModel(family, variance, scale), 2);
}

std::string FitResult::to_json() const {
    nlohmann::json doc;
    doc["variance"] = variance;
    doc["scale"] = scale;
    doc["contrast"] = contrast;
    doc["intensity"] = intensity;
    doc["mean_level"] = mean_level;
    doc["iterations"] = iterations;
    doc["converged"] = converged;
    return doc.dump(2);
}

namespace {

struct NelderMeadResult {
    std::array<double, 2> point{};
    double value = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Standard Nelder-Mead on R^2 with fixed coefficients; deterministic.
NelderMeadResult nelder_mead_2d(const std::function<double(const std::array<double, 2>&)>& f,
                                const std::array<double, 2>& start, double step, int max_iter,
                                double tol) {
    struct Vertex {
        std::array<double, 2> x;
        double fx;
    };
    long evals = 0;
    const auto eval = [&](const std::array<double, 2>& x) {
        ++evals;
        return f(x);
    };

    std::array<Vertex, 3> simplex;
    simplex[0] = {start, eval(start)};
    for (int i = 0; i < 2; ++i) {
        auto x = start;
        x[i] += step;
        simplex[i + 1] = {x, eval(x)};
    }

    bool converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
        const double size = std::max(
            std::max(std::abs(simplex[1].x[0] - simplex[0].x[0]),
                     std::abs(simplex[1].x[1] - simplex[0].x[1])),
            std::max(std::abs(simplex[2].x[0] - simplex[0].x[0]),
                     std::abs(simplex[2].x[1] - simplex[0].x[1])));
        if (size < tol) {
            converged = true;
            break;
        }

        const Vertex& best = simplex[0];
        Vertex& worst = simplex[2];
        const std::array<double, 2> centroid{0.5 * (simplex[0].x[0] + simplex[1].x[0]),
                                             0.5 * (simplex[0].x[1] + simplex[1].x[1])};
        const auto blend = [&](double t) {
            return std::array<double, 2>{centroid[0] + t * (centroid[0] - worst.x[0]),
                                         centroid[1] + t * (centroid[1] - worst.x[1])};
        };

        const auto reflected = blend(1.0);
        const double fr = eval(reflected);
        if (fr < best.fx) {
            const auto expanded = blend(2.0);
            const double fe = eval(expanded);
            if (fe < fr)
                worst = {expanded, fe};
            else
                worst = {reflected, fr};
        } else if (fr < simplex[1].fx) {
            worst = {reflected, fr};
        } else {
            const bool outside = fr < worst.fx;
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : worst.fx)) {
                worst = {contracted, fc};
            } else {
                // shrink toward the best vertex
                for (int i = 1; i < 3; ++i) {
                    for (int d = 0; d < 2; ++d)
                        simplex[i].x[d] = best.x[d] + 0.5 * (simplex[i].x[d] - best.x[d]);
                    simplex[i].fx = eval(simplex[i].x);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
    return NelderMeadResult{simplex[0].x, simplex[0].fx, evals, converged};
}

} // namespace

FitResult fit_min_contrast(const PointPattern& pattern, CovarianceFamily family, double r_max) {
    pattern.validate();
    const std::size_t n = pattern.size();
    if (n < 10)
        throw std::invalid_argument("fit_min_contrast: needs at least 10 points");

    const double side = pattern.window.shorter_side();
    if (r_max <= 0.0) r_max = 0.25 * side;

    // contrast grid: 256 radii, trapezoid weights
    constexpr int kGridSize = 256;
    std::vector<double> radii(kGridSize);
    for (int i = 0; i < kGridSize; ++i) radii[i] = (i + 1) * (r_max / kGridSize);
    const double dr = r_max / kGridSize;

    const SummaryCurve khat = estimate_K(pattern, radii);
    std::vector<double> khat_quarter(kGridSize);
    for (int i = 0; i < kGridSize; ++i)
        khat_quarter[i] = std::sqrt(std::sqrt(khat.values[i]));

    // box in (sigma^2, alpha/side)
    constexpr double kVarLo = 1e-4, kVarHi = 25.0;
    constexpr double kRelScaleLo = 0.01, kRelScaleHi = 0.5;
    const auto clamp_params = [&](const std::array<double, 2>& u) {
        return std::array<double, 2>{
            std::clamp(u[0], std::log(kVarLo), std::log(kVarHi)),
            std::clamp(u[1], std::log(kRelScaleLo), std::log(kRelScaleHi))};
    };

    const auto contrast_at = [&](double variance, double scale) {
        const CovarianceModel cov(family, variance, scale);
        double total = 0.0;
        for (int i = 0; i < kGridSize; ++i) {
            const double k_theory = theoretical_K_value(cov, radii[i]);
            const double diff = khat_quarter[i] - std::sqrt(std::sqrt(k_theory));
            const double weight = (i + 1 == kGridSize) ? 0.5 : 1.0;
            total += weight * diff * diff * dr;
        }
        return total;
    };

    const auto objective = [&](const std::array<double, 2>& u) {
        const auto clamped = clamp_params(u);
        const double excess = std::max(std::abs(u[0] - clamped[0]), std::abs(u[1] - clamped[1]));
        const double base = contrast_at(std::exp(clamped[0]), side * std::exp(clamped[1]));
        return base * (1.0 + excess * excess);
    };

    // fixed multi-start points (sigma^2, alpha/side)
    const std::array<std::array<double, 2>, 5> starts{{
        {std::log(0.5), std::log(0.05)},
        {std::log(4.0), std::log(0.10)},
        {std::log(1.0), std::log(0.20)},
        {std::log(9.0), std::log(0.05)},
        {std::log(0.1), std::log(0.30)},
    }};

    FitResult result;
    result.intensity = n / pattern.window.area();
    double best_value = std::numeric_limits<double>::infinity();
    std::array<double, 2> best_point{};
    bool best_converged = false;
    for (const auto& start : starts) {
        const NelderMeadResult nm = nelder_mead_2d(objective, start, 0.5, 200, 1e-8);
        result.iterations += nm.evaluations;
        if (nm.value < best_value) {
            best_value = nm.value;
            best_point = clamp_params(nm.point);
            best_converged = nm.converged;
        }
    }
    result.variance = std::exp(best_point[0]);
    result.scale = side * std::exp(best_point[1]);
    result.contrast = best_value;
    result.mean_level = std::log(result.intensity) - 0.5 * result.variance;
    result.converged = best_converged;
    return result;
}

std::string JReport::to_json() const {
    nlohmann::json doc;
    doc["radii"] = radii;
    const auto dump_curve = [](const std::vector<double>& values,
                               const std::vector<std::uint8_t>& ok) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (ok[i])
                arr.push_back(values[i]);
            else
                arr.push_back(nullptr);
        }
        return arr;
    };
    doc["j_empirical"] = dump_curve(j_empirical, empirical_ok);
    doc["j_model"] = dump_curve(j_model, model_ok);
    doc["max_abs_difference"] = max_abs_difference;
    return doc.dump(2);
}

JReport model_check_J(const PointPattern& pattern, const LgcpModel& model,
                      const std::vector<double>& radii, int q) {
    const SummaryCurve empirical = estimate_J(pattern, radii);
    const SummaryTriple laplace = summary_curves(model, radii, q);

    JReport report;
    report.radii = radii;
    report.j_empirical = empirical.values;
    report.empirical_ok = empirical.ok;
    report.j_model = laplace.j.values;
    report.model_ok = laplace.j.ok;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!empirical.ok[i] || !laplace.j.ok[i]) continue;
        report.max_abs_difference =
            std::max(report.max_abs_difference, std::abs(empirical.values[i] - laplace.j.values[i]));
    }
    return report;
}

} // namespace lgcp
