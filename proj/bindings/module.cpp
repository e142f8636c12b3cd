// Python bindings for the lgcpalm core: model and Palm operations, Laplace
// summary curves, seeded simulation, Monte Carlo oracles, non-parametric
// estimators and minimum-contrast fitting.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgcpalm/config.hpp"
#include "lgcpalm/estimators.hpp"
#include "lgcpalm/fit.hpp"
#include "lgcpalm/laplace.hpp"
#include "lgcpalm/montecarlo.hpp"
#include "lgcpalm/pattern.hpp"
#include "lgcpalm/simulate.hpp"

namespace py = pybind11;
using namespace lgcp;

namespace {

std::vector<PointNd> to_points(const std::vector<std::pair<double, double>>& pts) {
    std::vector<PointNd> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back(PointNd{x, y});
    return out;
}

std::vector<Point2> to_planar(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back(Point2{x, y});
    return out;
}

py::dict curve_to_dict(const SummaryCurve& curve) {
    py::dict d;
    d["kind"] = to_string(curve.kind);
    d["method"] = to_string(curve.method);
    d["q"] = curve.q;
    d["radii"] = curve.radii;
    py::list values;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        if (curve.ok[i])
            values.append(curve.values[i]);
        else
            values.append(py::none());
    }
    d["values"] = values;
    return d;
}

py::dict estimate_to_dict(const MonteCarloEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["standard_error"] = est.standard_error;
    d["replications"] = est.replications;
    return d;
}

} // namespace

PYBIND11_MODULE(lgcpalm, m) {
    m.doc() = "Palm distributions, Laplace summary functions and estimation "
              "for planar log Gaussian Cox processes";

    py::enum_<CovarianceFamily>(m, "CovarianceFamily")
        .value("Constant", CovarianceFamily::Constant)
        .value("Exponential", CovarianceFamily::Exponential)
        .value("Spherical", CovarianceFamily::Spherical);

    py::class_<CovarianceModel>(m, "CovarianceModel")
        .def(py::init<CovarianceFamily, double, double>(), py::arg("family"),
             py::arg("variance"), py::arg("scale"))
        .def_readonly("family", &CovarianceModel::family)
        .def_readonly("variance", &CovarianceModel::variance)
        .def_readonly("scale", &CovarianceModel::scale)
        .def("evaluate", &CovarianceModel::evaluate, py::arg("distance"))
        .def("pair_correlation", &CovarianceModel::pair_correlation, py::arg("distance"));

    py::class_<LgcpModel>(m, "LgcpModel")
        .def(py::init<double, CovarianceModel, int>(), py::arg("mean_level"),
             py::arg("covariance"), py::arg("dimension") = 2)
        .def_readonly("mean_level", &LgcpModel::mean_level)
        .def_readonly("covariance", &LgcpModel::covariance)
        .def_readonly("dimension", &LgcpModel::dimension)
        .def_property_readonly("palm_points",
                               [](const LgcpModel& model) { return model.palm_points; })
        .def("stationary", &LgcpModel::stationary)
        .def("mean_at", [](const LgcpModel& model, double x, double y) {
            return model.mean_at(PointNd{x, y});
        })
        .def("intensity_at", [](const LgcpModel& model, double x, double y) {
            return model.intensity_at(PointNd{x, y});
        });

    m.def("mean_level_for_intensity", &mean_level_for_intensity, py::arg("intensity"),
          py::arg("variance"));
    m.def("intensity", &intensity, py::arg("model"));
    m.def("pair_correlation",
          [](const LgcpModel& model, std::pair<double, double> lag) {
              return pair_correlation(model, PointNd{lag.first, lag.second});
          },
          py::arg("model"), py::arg("lag"));
    m.def("joint_intensity",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& points) {
              return joint_intensity(model, to_points(points));
          },
          py::arg("model"), py::arg("points"));
    m.def("palm_model",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& cond) {
              return palm_model(model, PalmConditioning(to_points(cond)));
          },
          py::arg("model"), py::arg("conditioning"));
    m.def("palm_mean_function",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& cond,
             std::pair<double, double> u) {
              return palm_mean_function(model, PalmConditioning(to_points(cond)),
                                        PointNd{u.first, u.second});
          },
          py::arg("model"), py::arg("conditioning"), py::arg("u"));
    m.def("palm_joint_intensity",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& cond,
             const std::vector<std::pair<double, double>>& points) {
              return palm_joint_intensity(model, PalmConditioning(to_points(cond)),
                                          to_points(points));
          },
          py::arg("model"), py::arg("conditioning"), py::arg("points"));

    py::class_<Window>(m, "Window")
        .def(py::init([](double x0, double x1, double y0, double y1) {
                 return Window{x0, x1, y0, y1};
             }),
             py::arg("x0"), py::arg("x1"), py::arg("y0"), py::arg("y1"))
        .def_readonly("x0", &Window::x0)
        .def_readonly("x1", &Window::x1)
        .def_readonly("y0", &Window::y0)
        .def_readonly("y1", &Window::y1)
        .def("area", &Window::area);

    py::class_<QuadratureGrid>(m, "QuadratureGrid")
        .def_readonly("radius", &QuadratureGrid::radius)
        .def_readonly("spacing", &QuadratureGrid::spacing)
        .def_readonly("weights", &QuadratureGrid::weights)
        .def_property_readonly("nodes",
                               [](const QuadratureGrid& grid) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& p : grid.nodes) out.emplace_back(p.x, p.y);
                                   return out;
                               })
        .def("size", &QuadratureGrid::size)
        .def("total_weight", &QuadratureGrid::total_weight);

    m.def("build_grid", &build_grid, py::arg("r"), py::arg("q"));
    m.def("cell_weight",
          [](std::pair<double, double> center, double delta, double r) {
              return cell_weight(Point2{center.first, center.second}, delta, r);
          },
          py::arg("cell_center"), py::arg("delta"), py::arg("r"));

    m.def("summary_curves",
          [](const LgcpModel& model, const std::vector<double>& radii, int q) {
              const SummaryTriple triple = summary_curves(model, radii, q);
              py::dict d;
              d["F"] = curve_to_dict(triple.f);
              d["G"] = curve_to_dict(triple.g);
              d["J"] = curve_to_dict(triple.j);
              d["max_identity_gap"] = triple.max_identity_gap;
              return d;
          },
          py::arg("model"), py::arg("radii"), py::arg("q") = 16);
    m.def("one_minus_G_via_G1",
          [](const LgcpModel& model, double r, int q) {
              return alternative_G_via_G1(model, build_grid(r, q));
          },
          py::arg("model"), py::arg("r"), py::arg("q") = 16);

    py::class_<PointPattern>(m, "PointPattern")
        .def(py::init([](const std::vector<std::pair<double, double>>& points, Window window) {
                 PointPattern pattern;
                 pattern.points = to_planar(points);
                 pattern.window = window;
                 pattern.validate();
                 return pattern;
             }),
             py::arg("points"), py::arg("window"))
        .def_readonly("window", &PointPattern::window)
        .def_property_readonly("points",
                               [](const PointPattern& pattern) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& p : pattern.points)
                                       out.emplace_back(p.x, p.y);
                                   return out;
                               })
        .def("__len__", [](const PointPattern& pattern) { return pattern.size(); })
        .def("to_csv", &pattern_to_csv);

    m.def("load_pattern", &load_pattern, py::arg("path"));
    m.def("save_pattern", &save_pattern, py::arg("pattern"), py::arg("path"));

    py::class_<FieldGrid>(m, "FieldGrid")
        .def_readonly("window", &FieldGrid::window)
        .def_readonly("nx", &FieldGrid::nx)
        .def_readonly("ny", &FieldGrid::ny)
        .def_readonly("values", &FieldGrid::values)
        .def("value", &FieldGrid::value, py::arg("ix"), py::arg("iy"))
        .def("to_csv", &FieldGrid::to_csv);

    m.def("simulate_grf", &simulate_grf, py::arg("model"), py::arg("window"), py::arg("nx"),
          py::arg("ny"), py::arg("seed"));
    m.def("simulate_lgcp", &simulate_lgcp, py::arg("model"), py::arg("window"), py::arg("nx"),
          py::arg("ny"), py::arg("seed"));
    m.def("simulate_palm",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& cond,
             const Window& window, int nx, int ny, std::uint64_t seed) {
              return simulate_palm(model, to_planar(cond), window, nx, ny, seed);
          },
          py::arg("model"), py::arg("conditioning"), py::arg("window"), py::arg("nx"),
          py::arg("ny"), py::arg("seed"));
    m.def("thin_palm_to_base",
          [](const PointPattern& pattern, const LgcpModel& model,
             const std::vector<std::pair<double, double>>& cond, std::uint64_t seed) {
              return thin_palm_to_base(pattern, model, to_planar(cond), seed);
          },
          py::arg("pattern"), py::arg("model"), py::arg("conditioning"), py::arg("seed"));

    m.def("mc_one_minus_F",
          [](const LgcpModel& model, double r, int q, long replications, std::uint64_t seed) {
              return estimate_to_dict(mc_one_minus_F(model, r, q, replications, seed));
          },
          py::arg("model"), py::arg("r"), py::arg("q"), py::arg("replications"), py::arg("seed"));
    m.def("mc_one_minus_G",
          [](const LgcpModel& model, double r, int q, long replications, std::uint64_t seed,
             const std::string& route) {
              const GRoute g_route = route == "G1" ? GRoute::ViaG1 : GRoute::ViaG2;
              return estimate_to_dict(mc_one_minus_G(model, r, q, replications, seed, g_route));
          },
          py::arg("model"), py::arg("r"), py::arg("q"), py::arg("replications"), py::arg("seed"),
          py::arg("route") = "G2");
    m.def("mc_reweighting_check",
          [](const LgcpModel& model, const std::vector<std::pair<double, double>>& cond,
             const std::vector<std::pair<double, double>>& test_locations, long replications,
             std::uint64_t seed) {
              const auto report = mc_reweighting_check(model, to_planar(cond),
                                                       to_planar(test_locations), replications,
                                                       seed);
              py::dict d;
              const auto pair_to_dict = [](const PairedEstimate& pair) {
                  py::dict p;
                  p["direct"] = estimate_to_dict(pair.direct);
                  p["weighted"] = estimate_to_dict(pair.weighted);
                  p["difference"] = estimate_to_dict(pair.difference);
                  return p;
              };
              d["half_space"] = pair_to_dict(report.half_space);
              d["exp_tilt"] = pair_to_dict(report.exp_tilt);
              d["unit"] = pair_to_dict(report.unit);
              return d;
          },
          py::arg("model"), py::arg("conditioning"), py::arg("test_locations"),
          py::arg("replications"), py::arg("seed"));

    m.def("estimate_K",
          [](const PointPattern& pattern, const std::vector<double>& radii) {
              return curve_to_dict(estimate_K(pattern, radii));
          },
          py::arg("pattern"), py::arg("radii"));
    m.def("estimate_F",
          [](const PointPattern& pattern, const std::vector<double>& radii, int grid_resolution) {
              return curve_to_dict(estimate_F(pattern, radii, grid_resolution));
          },
          py::arg("pattern"), py::arg("radii"), py::arg("grid_resolution") = 100);
    m.def("estimate_G",
          [](const PointPattern& pattern, const std::vector<double>& radii) {
              return curve_to_dict(estimate_G(pattern, radii));
          },
          py::arg("pattern"), py::arg("radii"));
    m.def("estimate_J",
          [](const PointPattern& pattern, const std::vector<double>& radii, int grid_resolution) {
              return curve_to_dict(estimate_J(pattern, radii, grid_resolution));
          },
          py::arg("pattern"), py::arg("radii"), py::arg("grid_resolution") = 100);
    m.def("theoretical_K",
          [](const LgcpModel& model, const std::vector<double>& radii) {
              return curve_to_dict(theoretical_K(model, radii));
          },
          py::arg("model"), py::arg("radii"));

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("variance", &FitResult::variance)
        .def_readonly("scale", &FitResult::scale)
        .def_readonly("contrast", &FitResult::contrast)
        .def_readonly("intensity", &FitResult::intensity)
        .def_readonly("mean_level", &FitResult::mean_level)
        .def_readonly("iterations", &FitResult::iterations)
        .def_readonly("converged", &FitResult::converged)
        .def("model", &FitResult::model, py::arg("family"))
        .def("to_json", &FitResult::to_json);

    m.def("fit_min_contrast",
          [](const PointPattern& pattern, CovarianceFamily family, double r_max) {
              return fit_min_contrast(pattern, family, r_max);
          },
          py::arg("pattern"), py::arg("family"), py::arg("r_max") = 0.0);
    m.def("model_check_J",
          [](const PointPattern& pattern, const LgcpModel& model,
             const std::vector<double>& radii, int q) {
              const auto report = model_check_J(pattern, model, radii, q);
              py::dict d;
              d["radii"] = report.radii;
              d["max_abs_difference"] = report.max_abs_difference;
              d["json"] = report.to_json();
              return d;
          },
          py::arg("pattern"), py::arg("model"), py::arg("radii"), py::arg("q") = 12);

    m.def("model_from_json", &model_from_json_text, py::arg("text"));
    m.def("model_to_json", &model_to_json_text, py::arg("model"));
}
