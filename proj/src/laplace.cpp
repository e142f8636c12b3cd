#include "lgcpalm/laplace.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcp {

namespace {

constexpr double kGradTolerance = 1e-8;
constexpr int kMaxNewtonIterations = 50;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

void check_planar_stationary(const LgcpModel& model, const char* what) {
    if (model.dimension != 2)
        throw std::invalid_argument(std::string(what) + ": requires a planar model");
    if (!model.stationary())
        throw std::invalid_argument(std::string(what) + ": requires a stationary model");
}

LatentObjective assemble(const LgcpModel& model, const std::vector<Point2>& nodes,
                         const std::vector<double>& weights, std::vector<double> multiplier,
                         std::vector<double> linear) {
    const std::size_t m = nodes.size();
    LatentObjective obj;
    obj.mean.assign(m, model.mean_level);
    obj.weight = weights;
    obj.multiplier = std::move(multiplier);
    obj.linear = std::move(linear);
    obj.variance = model.covariance.variance;

    obj.sigma = DenseMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        obj.sigma(i, i) = obj.variance;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double c = model.covariance.evaluate(distance(nodes[i], nodes[j]));
            obj.sigma(i, j) = c;
            obj.sigma(j, i) = c;
        }
    }
    if (!obj.degenerate()) {
        obj.sigma_chol = cholesky(obj.sigma);
        obj.log_det_sigma = obj.sigma_chol.log_det();
    }
    return obj;
}

} // namespace

std::vector<double> LatentObjective::d_vector(std::span<const double> y) const {
    if (y.size() != dim())
        throw std::invalid_argument("d_vector: dimension mismatch");
    std::vector<double> d(dim());
    for (std::size_t v = 0; v < dim(); ++v) d[v] = weight[v] * multiplier[v] * std::exp(y[v]);
    return d;
}

LatentObjective build_objective(const LgcpModel& model, const QuadratureGrid& grid,
                                MultiplierKind kind) {
    check_planar_stationary(model, "build_objective");
    const std::size_t m = grid.size();
    std::vector<double> multiplier(m, 1.0);
    if (kind == MultiplierKind::ForG) {
        for (std::size_t v = 0; v < m; ++v)
            multiplier[v] = model.covariance.pair_correlation(norm(grid.nodes[v]));
    }
    return assemble(model, grid.nodes, grid.weights, std::move(multiplier),
                    std::vector<double>(m, 0.0));
}

LatentObjective build_objective_g1(const LgcpModel& model, const QuadratureGrid& grid) {
    check_planar_stationary(model, "build_objective_g1");
    std::vector<Point2> nodes = grid.nodes;
    nodes.push_back(Point2{0.0, 0.0}); // field value at the origin, weightless
    std::vector<double> weights = grid.weights;
    weights.push_back(0.0);
    std::vector<double> multiplier(nodes.size(), 1.0);
    std::vector<double> linear(nodes.size(), 0.0);
    linear.back() = 1.0;
    return assemble(model, nodes, weights, std::move(multiplier), std::move(linear));
}

double h_value(const LatentObjective& obj, std::span<const double> y) {
    const std::size_t m = obj.dim();
    if (y.size() != m)
        throw std::invalid_argument("h_value: dimension mismatch");
    if (obj.degenerate())
        throw std::invalid_argument("h_value: objective is degenerate (zero variance)");
    double value = 0.0;
    for (std::size_t v = 0; v < m; ++v) {
        value += obj.linear[v] * y[v];
        value -= obj.weight[v] * obj.multiplier[v] * std::exp(y[v]);
    }
    std::vector<double> centered(m);
    for (std::size_t v = 0; v < m; ++v) centered[v] = y[v] - obj.mean[v];
    const std::vector<double> solved = solve_spd(obj.sigma_chol, centered);
    double quad = 0.0;
    for (std::size_t v = 0; v < m; ++v) quad += centered[v] * solved[v];
    value -= 0.5 * quad;
    value -= 0.5 * (m * kLog2Pi + obj.log_det_sigma);
    return value;
}

std::vector<double> grad_h(const LatentObjective& obj, std::span<const double> y) {
    const std::size_t m = obj.dim();
    if (y.size() != m)
        throw std::invalid_argument("grad_h: dimension mismatch");
    if (obj.degenerate())
        throw std::invalid_argument("grad_h: objective is degenerate (zero variance)");
    std::vector<double> centered(m);
    for (std::size_t v = 0; v < m; ++v) centered[v] = y[v] - obj.mean[v];
    std::vector<double> grad = solve_spd(obj.sigma_chol, centered);
    const std::vector<double> d = obj.d_vector(y);
    for (std::size_t v = 0; v < m; ++v) grad[v] = obj.linear[v] - d[v] - grad[v];
    return grad;
}

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// D(y) Sigma + I with diagonal d
DenseMatrix dsigma_plus_i(const LatentObjective& obj, const std::vector<double>& d) {
    const std::size_t m = obj.dim();
    DenseMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const double di = d[i];
        const double* srow = obj.sigma.row(i);
        double* brow = b.row(i);
        for (std::size_t j = 0; j < m; ++j) brow[j] = di * srow[j];
        brow[i] += 1.0;
    }
    return b;
}

} // namespace

NewtonResult newton_maximize(const LatentObjective& obj) {
    const std::size_t m = obj.dim();
    NewtonResult result;
    if (obj.degenerate()) {
        // Zero variance pins the latent vector at its mean.
        result.maximizer = obj.mean;
        result.iterations = 0;
        result.grad_max_norm = 0.0;
        result.log_det_dsigma_plus_i = 0.0;
        double value = 0.0;
        for (std::size_t v = 0; v < m; ++v) {
            value += obj.linear[v] * obj.mean[v];
            value -= obj.weight[v] * obj.multiplier[v] * std::exp(obj.mean[v]);
        }
        result.log_laplace = value;
        return result;
    }

    std::vector<double> y = obj.mean;
    std::vector<double> grad = grad_h(obj, y);
    double grad_norm = max_abs(grad);
    int iterations = 0;
    bool polished = false;
    while (grad_norm > kGradTolerance || !polished) {
        if (grad_norm <= kGradTolerance) {
            // One extra step once the tolerance is met: quadratic convergence
            // pushes the stationarity residual to machine level, which the
            // output-formula identity relies on.
            if (grad_norm <= 1e-13) break;
            polished = true;
        }
        if (iterations >= kMaxNewtonIterations)
            throw std::runtime_error("newton_maximize: no convergence after 50 iterations, "
                                     "|grad|_inf = " +
                                     std::to_string(grad_norm));
        const std::vector<double> d = obj.d_vector(y);
        const auto fact = qr(dsigma_plus_i(obj, d));
        const std::vector<double> z = solve_qr(fact, grad);
        const std::vector<double> step = matvec(obj.sigma, z);
        for (std::size_t v = 0; v < m; ++v) y[v] += step[v];
        ++iterations;
        grad = grad_h(obj, y);
        grad_norm = max_abs(grad);
    }

    const std::vector<double> d = obj.d_vector(y);
    const auto fact = qr(dsigma_plus_i(obj, d));
    result.log_det_dsigma_plus_i = log_abs_det_from_qr(fact);
    result.maximizer = std::move(y);
    result.iterations = iterations;
    result.grad_max_norm = grad_norm;
    // log|H| = log|D Sigma + I| - log|Sigma|
    const double log_det_h = result.log_det_dsigma_plus_i - obj.log_det_sigma;
    result.log_laplace =
        h_value(obj, result.maximizer) + 0.5 * m * kLog2Pi - 0.5 * log_det_h;
    return result;
}

LaplaceValue log_one_minus_summary(const LatentObjective& obj) {
    LaplaceValue out;
    if (obj.degenerate()) {
        double value = 0.0;
        for (std::size_t v = 0; v < obj.dim(); ++v)
            value -= obj.weight[v] * obj.multiplier[v] * std::exp(obj.mean[v]);
        out.log_value = value;
        return out;
    }
    const NewtonResult nr = newton_maximize(obj);
    const std::vector<double> d = obj.d_vector(nr.maximizer);
    double simplified = 0.0;
    for (std::size_t v = 0; v < obj.dim(); ++v) {
        simplified -= d[v];
        simplified += 0.5 * (nr.maximizer[v] - obj.mean[v]) * d[v];
    }
    simplified -= 0.5 * nr.log_det_dsigma_plus_i;
    out.log_value = simplified;
    out.identity_gap = std::abs(simplified - nr.log_laplace);
    out.newton_iterations = nr.iterations;
    out.grad_max_norm = nr.grad_max_norm;
    return out;
}

LaplaceValue log_one_minus_g_via_g1(const LgcpModel& model, const QuadratureGrid& grid) {
    const double rho = intensity(model);
    if (model.covariance.variance == 0.0) {
        // Degenerate field: (1/rho) exp(mu - sum w exp(mu)) = exp(-rho sum w).
        LaplaceValue out;
        double sum_w = 0.0;
        for (double w : grid.weights) sum_w += w;
        out.log_value = -rho * sum_w;
        return out;
    }
    const LatentObjective obj = build_objective_g1(model, grid);
    const NewtonResult nr = newton_maximize(obj);
    LaplaceValue out;
    out.log_value = nr.log_laplace - std::log(rho);
    out.newton_iterations = nr.iterations;
    out.grad_max_norm = nr.grad_max_norm;
    return out;
}

double alternative_G_via_G1(const LgcpModel& model, const QuadratureGrid& grid) {
    return std::exp(log_one_minus_g_via_g1(model, grid).log_value);
}

SummaryTriple summary_curves(const LgcpModel& model, const std::vector<double>& radii, int q) {
    check_planar_stationary(model, "summary_curves");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0))
            throw std::invalid_argument("summary_curves: radii must be strictly positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("summary_curves: radii must be strictly increasing");
    }

    SummaryTriple out;
    out.f.kind = SummaryKind::F;
    out.g.kind = SummaryKind::G;
    out.j.kind = SummaryKind::J;
    for (SummaryCurve* curve : {&out.f, &out.g, &out.j}) {
        curve->method = SummaryMethod::Laplace;
        curve->q = q;
    }

    for (const double r : radii) {
        try {
            const QuadratureGrid grid = build_grid(r, q);
            const LaplaceValue lf = log_one_minus_summary(build_objective(model, grid, MultiplierKind::ForF));
            const LaplaceValue lg = log_one_minus_summary(build_objective(model, grid, MultiplierKind::ForG));
            out.max_identity_gap = std::max(out.max_identity_gap,
                                            std::max(lf.identity_gap, lg.identity_gap));
            out.max_grad_norm = std::max(out.max_grad_norm,
                                         std::max(lf.grad_max_norm, lg.grad_max_norm));
            const double one_minus_f = std::exp(lf.log_value);
            const double one_minus_g = std::exp(lg.log_value);
            out.f.push(r, 1.0 - one_minus_f);
            out.g.push(r, 1.0 - one_minus_g);
            // J = (1-G)/(1-F), a/0 = 0 when 1-F underflows.
            const double j = one_minus_f == 0.0 ? 0.0 : std::exp(lg.log_value - lf.log_value);
            out.j.push(r, j);
        } catch (const std::exception& e) {
            out.f.push_missing(r, e.what());
            out.g.push_missing(r, e.what());
            out.j.push_missing(r, e.what());
        }
    }
    return out;
}

} // namespace lgcp
