// lgcpalm command line: summary-function curves, route comparisons,
// simulation, Monte Carlo oracle checks, estimation and model fitting,
// with every output carrying the resolved configuration and seed.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgcpalm/config.hpp"
#include "lgcpalm/estimators.hpp"
#include "lgcpalm/fit.hpp"
#include "lgcpalm/laplace.hpp"
#include "lgcpalm/montecarlo.hpp"
#include "lgcpalm/pattern.hpp"
#include "lgcpalm/simulate.hpp"

namespace fs = std::filesystem;
using namespace lgcp;

namespace {

struct CliOverrides {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string q_list;
    std::string radii_spec; // MIN:MAX:COUNT
    std::optional<long> replications;
    std::optional<double> scale;
};

ExperimentConfig resolve_config(const CliOverrides& cli) {
    ExperimentConfig config;
    config.model = LgcpModel(mean_level_for_intensity(50.0, 4.0),
                             CovarianceModel(CovarianceFamily::Spherical, 4.0, 0.2), 2);
    if (!cli.config_path.empty()) config = ExperimentConfig::load(cli.config_path);
    if (cli.seed) config.seed = *cli.seed;
    if (cli.replications) config.replications = *cli.replications;
    if (cli.scale) config.model.covariance.scale = *cli.scale;
    if (!cli.q_list.empty()) {
        config.q_values.clear();
        std::string token;
        for (char c : cli.q_list + ",") {
            if (c == ',') {
                if (!token.empty()) config.q_values.push_back(std::stoi(token));
                token.clear();
            } else {
                token += c;
            }
        }
    }
    if (!cli.radii_spec.empty()) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        if (std::sscanf(cli.radii_spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3)
            throw std::invalid_argument("--radii expects MIN:MAX:COUNT");
        config.radii_min = lo;
        config.radii_max = hi;
        config.radii_count = count;
    }
    if (!cli.out_dir.empty()) {
        config.out_dir = cli.out_dir;
    } else if (config.out_dir.empty()) {
        const char* env = std::getenv("LGCPALM_OUT");
        config.out_dir = env ? env : ".";
    }
    config.validate();
    return config;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

fs::path prepare_out_dir(const ExperimentConfig& config) {
    const fs::path dir(config.out_dir);
    fs::create_directories(dir);
    write_file(dir / "resolved_config.json", config.to_json_text() + "\n");
    return dir;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string one_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

int cmd_curves(const CliOverrides& cli) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const auto radii = config.radii();
    const std::string provenance = config.to_json_text();

    std::vector<int> qs = config.q_values;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    std::vector<SummaryTriple> triples;
    for (const int q : qs) {
        SummaryTriple triple = summary_curves(config.model, radii, q);
        for (SummaryCurve* curve : {&triple.f, &triple.g, &triple.j})
            curve->provenance = provenance;
        write_file(dir / ("F_q" + std::to_string(q) + ".csv"), triple.f.to_csv());
        write_file(dir / ("G_q" + std::to_string(q) + ".csv"), triple.g.to_csv());
        write_file(dir / ("J_q" + std::to_string(q) + ".csv"), triple.j.to_csv());
        triples.push_back(std::move(triple));
    }

    bool all_ok = true;
    for (const auto& triple : triples)
        for (const SummaryCurve* curve : {&triple.f, &triple.g, &triple.j})
            for (const auto ok : curve->ok)
                if (!ok) all_ok = false;

    if (qs.size() > 1) {
        // convergence of G_q and J_q toward the finest grid, scaled by 1e3
        const SummaryTriple& ref = triples.back();
        std::string table = "# max_r |H_ref(r) - H_q(r)| * 1e3, reference q = " +
                            std::to_string(qs.back()) + "\n";
        table += "# config: " + provenance + "\n";
        table += "H";
        for (std::size_t i = 0; i + 1 < qs.size(); ++i) table += ",q=" + std::to_string(qs[i]);
        table += "\n";
        for (const char* name : {"G", "J"}) {
            table += name;
            for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
                const SummaryCurve& a =
                    (*name == 'G') ? triples[i].g : triples[i].j;
                const SummaryCurve& b = (*name == 'G') ? ref.g : ref.j;
                double max_diff = 0.0;
                for (std::size_t k = 0; k < radii.size(); ++k)
                    if (a.ok[k] && b.ok[k])
                        max_diff = std::max(max_diff, std::abs(a.values[k] - b.values[k]));
                table += "," + one_decimal(max_diff * 1e3);
            }
            table += "\n";
        }
        write_file(dir / "convergence_table.csv", table);
        std::cout << table;
    }
    std::cout << "curves written to " << dir.string() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_compare_g1_g2(const CliOverrides& cli) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const auto radii = config.radii();
    const std::string provenance = config.to_json_text();

    std::string table = "# max_r |H_via_G1(r) - H_via_G2(r)| * 1e4\n";
    table += "# config: " + provenance + "\n";
    table += "H";
    for (const int q : config.q_values) table += ",q=" + std::to_string(q);
    table += "\n";
    std::string g_row = "G", j_row = "J";

    for (const int q : config.q_values) {
        std::string csv = "# config: " + provenance + "\n";
        csv += "r,one_minus_f,one_minus_g_via_g1,one_minus_g_via_g2\n";
        double max_g = 0.0, max_j = 0.0;
        for (const double r : radii) {
            const auto grid = build_grid(r, q);
            const auto lf =
                log_one_minus_summary(build_objective(config.model, grid, MultiplierKind::ForF));
            const auto lg2 =
                log_one_minus_summary(build_objective(config.model, grid, MultiplierKind::ForG));
            const auto lg1 = log_one_minus_g_via_g1(config.model, grid);
            const double f1 = std::exp(lf.log_value);
            const double g_via_g2 = std::exp(lg2.log_value);
            const double g_via_g1 = std::exp(lg1.log_value);
            max_g = std::max(max_g, std::abs(g_via_g1 - g_via_g2));
            const double j1 = f1 == 0.0 ? 0.0 : g_via_g1 / f1;
            const double j2 = f1 == 0.0 ? 0.0 : g_via_g2 / f1;
            max_j = std::max(max_j, std::abs(j1 - j2));
            csv += format_double(r) + "," + format_double(f1) + "," + format_double(g_via_g1) +
                   "," + format_double(g_via_g2) + "\n";
        }
        write_file(dir / ("g1_vs_g2_q" + std::to_string(q) + ".csv"), csv);
        g_row += "," + one_decimal(max_g * 1e4);
        j_row += "," + one_decimal(max_j * 1e4);
    }
    table += g_row + "\n" + j_row + "\n";
    write_file(dir / "g1_vs_g2_table.csv", table);
    std::cout << table;
    std::cout << "route comparison written to " << dir.string() << "\n";
    return 0;
}

int cmd_simulate(const CliOverrides& cli, int nx, int ny) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const std::string config_line = "# config: " + config.to_json_text() + "\n";
    const FieldGrid field = simulate_grf(config.model, Window{0, 1, 0, 1}, nx, ny, config.seed);
    write_file(dir / "field.csv", config_line + field.to_csv());
    const PointPattern pattern =
        simulate_lgcp(config.model, Window{0, 1, 0, 1}, nx, ny, config.seed);
    write_file(dir / "pattern.csv", config_line + pattern_to_csv(pattern));
    std::cout << "simulated " << pattern.size() << " points; outputs in " << dir.string() << "\n";
    return 0;
}

struct BandCheck {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

int cmd_oracle(const CliOverrides& cli) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const LgcpModel& model = config.model;
    const long reps = config.replications;
    std::vector<BandCheck> checks;

    const std::vector<double> radii{0.05, 0.10, 0.15, 0.20, 0.25};
    for (const double r : radii) {
        const auto grid = build_grid(r, 16);
        const double laplace_f =
            std::exp(log_one_minus_summary(build_objective(model, grid, MultiplierKind::ForF))
                         .log_value);
        const double laplace_g =
            std::exp(log_one_minus_summary(build_objective(model, grid, MultiplierKind::ForG))
                         .log_value);
        const auto joint = mc_summaries(model, r, 16, reps, config.seed);
        checks.push_back({"laplace_vs_mc_one_minus_F_r" + format_double(r),
                          std::abs(joint.one_minus_f.value - laplace_f),
                          3.0 * joint.one_minus_f.standard_error, false});
        checks.push_back({"laplace_vs_mc_one_minus_G_r" + format_double(r),
                          std::abs(joint.one_minus_g.value - laplace_g),
                          3.0 * joint.one_minus_g.standard_error, false});
        checks.push_back({"g1_vs_g2_paired_r" + format_double(r),
                          std::abs(joint.g_route_difference.value),
                          3.0 * joint.g_route_difference.standard_error, false});
        checks.push_back({"mc_J_numerator_le_denominator_r" + format_double(r),
                          joint.numerator_le_denominator ? 0.0 : 1.0, 0.5, false});
    }

    const std::vector<Point2> cond{Point2{0.45, 0.55}, Point2{0.6, 0.4}};
    const std::vector<Point2> test_locs{Point2{0.5, 0.5}, Point2{0.52, 0.61}, Point2{0.38, 0.47},
                                        Point2{0.7, 0.52}};
    const auto reweight = mc_reweighting_check(model, cond, test_locs, reps, config.seed + 1);
    checks.push_back({"reweighting_half_space", std::abs(reweight.half_space.difference.value),
                      3.0 * reweight.half_space.difference.standard_error, false});
    checks.push_back({"reweighting_exp_tilt", std::abs(reweight.exp_tilt.difference.value),
                      3.0 * reweight.exp_tilt.difference.standard_error, false});
    checks.push_back({"reweighting_unit_mass", std::abs(reweight.unit.weighted.value - 1.0),
                      3.0 * reweight.unit.weighted.standard_error, false});

    const auto void_check = mc_palm_void_check(model, Point2{0.3, 0.3},
                                               Window{0.2, 0.45, 0.2, 0.45},
                                               Window{0, 0.6, 0, 0.6}, 20, 20,
                                               std::min<long>(reps, 4000), config.seed + 2);
    checks.push_back({"palm_void_identity", std::abs(void_check.difference.value),
                      3.0 * void_check.difference.standard_error, false});

    bool all_pass = true;
    nlohmann::json report;
    report["config"] = nlohmann::json::parse(config.to_json_text());
    nlohmann::json entries = nlohmann::json::array();
    for (auto& check : checks) {
        check.pass = check.value <= check.bound;
        all_pass = all_pass && check.pass;
        std::printf("%-42s %12.5e <= %12.5e  %s\n", check.name.c_str(), check.value, check.bound,
                    check.pass ? "pass" : "FAIL");
        entries.push_back({{"name", check.name},
                           {"value", check.value},
                           {"bound", check.bound},
                           {"pass", check.pass}});
    }
    report["checks"] = entries;
    report["all_pass"] = all_pass;
    write_file(dir / "oracle_report.json", report.dump(2) + "\n");
    std::cout << (all_pass ? "all oracle bands pass" : "oracle bands violated") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_estimate(const CliOverrides& cli, const std::string& pattern_path) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const PointPattern pattern = load_pattern(pattern_path);
    const double side = pattern.window.shorter_side();
    std::vector<double> radii = config.radii();
    if (cli.radii_spec.empty())
        radii = radii_grid(side / 100.0, side / 4.0, 50);
    const std::string provenance = config.to_json_text();

    SummaryCurve k = estimate_K(pattern, radii);
    SummaryCurve f = estimate_F(pattern, radii);
    SummaryCurve g = estimate_G(pattern, radii);
    SummaryCurve j = estimate_J(pattern, radii);
    for (SummaryCurve* curve : {&k, &f, &g, &j}) curve->provenance = provenance;
    write_file(dir / "K_hat.csv", k.to_csv());
    write_file(dir / "F_hat.csv", f.to_csv());
    write_file(dir / "G_hat.csv", g.to_csv());
    write_file(dir / "J_hat.csv", j.to_csv());
    std::cout << "empirical summaries for " << pattern.size() << " points written to "
              << dir.string() << "\n";
    return 0;
}

int cmd_fit(const CliOverrides& cli, const std::string& pattern_path, const std::string& family,
            int q) {
    const ExperimentConfig config = resolve_config(cli);
    const fs::path dir = prepare_out_dir(config);
    const PointPattern pattern = load_pattern(pattern_path);
    const CovarianceFamily fam = covariance_family_from_string(family);

    const FitResult fit = fit_min_contrast(pattern, fam);
    nlohmann::json fit_doc = nlohmann::json::parse(fit.to_json());
    fit_doc["config"] = nlohmann::json::parse(config.to_json_text());
    write_file(dir / "fit.json", fit_doc.dump(2) + "\n");

    const double side = pattern.window.shorter_side();
    std::vector<double> radii = config.radii();
    if (cli.radii_spec.empty())
        radii = radii_grid(side / 100.0, side / 4.0, 50);
    const auto report = model_check_J(pattern, fit.model(fam), radii, q);
    nlohmann::json report_doc = nlohmann::json::parse(report.to_json());
    report_doc["config"] = nlohmann::json::parse(config.to_json_text());
    write_file(dir / "j_model_check.json", report_doc.dump(2) + "\n");

    std::printf("fitted %s model: variance %.6g, scale %.6g (rho %.6g)\n", family.c_str(),
                fit.variance, fit.scale, fit.intensity);
    std::printf("max |J_hat - J_model| = %.6g\n", report.max_abs_difference);
    std::cout << "fit outputs written to " << dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Palm-distribution toolkit for planar log Gaussian Cox processes"};
    app.require_subcommand(1);

    CliOverrides cli;
    app.add_option("--config", cli.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    app.add_option("--out", cli.out_dir, "output directory (default $LGCPALM_OUT or .)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "master seed");
    app.add_option("--q", cli.q_list, "comma-separated grid refinements, e.g. 4,8,12,16");
    app.add_option("--radii", cli.radii_spec, "radii grid MIN:MAX:COUNT");
    long reps_value = 0;
    auto* reps_opt = app.add_option("--replications", reps_value, "Monte Carlo replications");
    double scale_value = 0.0;
    auto* scale_opt = app.add_option("--scale", scale_value, "override the covariance scale");

    auto* curves = app.add_subcommand("curves", "Laplace F/G/J curves per q plus convergence table");
    auto* compare = app.add_subcommand("compare-g1-g2", "compare the two routes to G");
    auto* simulate = app.add_subcommand("simulate", "draw a field and a point pattern");
    int sim_nx = 32, sim_ny = 32;
    simulate->add_option("--nx", sim_nx, "grid cells in x");
    simulate->add_option("--ny", sim_ny, "grid cells in y");
    auto* oracle = app.add_subcommand("oracle", "Monte Carlo vs Laplace agreement suite");
    auto* estimate = app.add_subcommand("estimate", "empirical K/F/G/J of a pattern");
    std::string pattern_path;
    estimate->add_option("pattern", pattern_path, "pattern CSV")->required();
    auto* fit = app.add_subcommand("fit", "minimum-contrast fit plus J model check");
    std::string fit_pattern, fit_family = "exponential";
    int fit_q = 12;
    fit->add_option("pattern", fit_pattern, "pattern CSV")->required();
    fit->add_option("--family", fit_family, "covariance family to fit");
    fit->add_option("--check-q", fit_q, "grid refinement for the J model check");

    CLI11_PARSE(app, argc, argv);
    if (*seed_opt) cli.seed = seed_value;
    if (*reps_opt) cli.replications = reps_value;
    if (*scale_opt) cli.scale = scale_value;

    try {
        if (curves->parsed()) return cmd_curves(cli);
        if (compare->parsed()) return cmd_compare_g1_g2(cli);
        if (simulate->parsed()) return cmd_simulate(cli, sim_nx, sim_ny);
        if (oracle->parsed()) return cmd_oracle(cli);
        if (estimate->parsed()) return cmd_estimate(cli, pattern_path);
        if (fit->parsed()) return cmd_fit(cli, fit_pattern, fit_family, fit_q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
