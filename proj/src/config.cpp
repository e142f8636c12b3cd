#include "lgcpalm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lgcpalm/summary.hpp"

namespace lgcp {

namespace {

using nlohmann::json;

LgcpModel model_from_json(const json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("model config: expected an object");
    const std::string family_name = doc.at("family").get<std::string>();
    const double variance = doc.at("variance").get<double>();
    const double scale = doc.at("scale").get<double>();
    const CovarianceModel cov(covariance_family_from_string(family_name), variance, scale);

    const bool has_mean = doc.contains("mean_level");
    const bool has_intensity = doc.contains("intensity");
    if (has_mean == has_intensity)
        throw std::invalid_argument("model config: provide exactly one of mean_level/intensity");
    const double mean = has_mean ? doc.at("mean_level").get<double>()
                                 : mean_level_for_intensity(doc.at("intensity").get<double>(),
                                                            variance);
    return LgcpModel(mean, cov, 2);
}

json model_to_json(const LgcpModel& model) {
    json doc;
    doc["family"] = to_string(model.covariance.family);
    doc["variance"] = model.covariance.variance;
    doc["scale"] = model.covariance.scale;
    doc["mean_level"] = model.mean_level;
    return doc;
}

} // namespace

LgcpModel model_from_json_text(const std::string& text) {
    return model_from_json(json::parse(text));
}

std::string model_to_json_text(const LgcpModel& model) {
    return model_to_json(model).dump();
}

std::vector<double> ExperimentConfig::radii() const {
    return radii_grid(radii_min, radii_max, radii_count);
}

void ExperimentConfig::validate() const {
    if (radii_count < 1)
        throw std::invalid_argument("config: radii count must be >= 1");
    if (!(radii_min > 0.0) || !(radii_max >= radii_min))
        throw std::invalid_argument("config: need 0 < radii min <= max");
    if (q_values.empty())
        throw std::invalid_argument("config: need at least one q value");
    for (int q : q_values)
        if (q < 2 || q % 2 != 0)
            throw std::invalid_argument("config: q values must be even and >= 2");
    if (replications < 1)
        throw std::invalid_argument("config: replications must be >= 1");
    if (!model.stationary())
        throw std::invalid_argument("config: experiment model must be stationary");
}

std::string ExperimentConfig::to_json_text() const {
    // the output directory is deliberately left out: the serialized config
    // describes the computation, so re-running it elsewhere reproduces the
    // outputs byte for byte
    json doc;
    doc["model"] = model_to_json(model);
    doc["radii"] = {{"min", radii_min}, {"max", radii_max}, {"count", radii_count}};
    doc["q"] = q_values;
    doc["seed"] = seed;
    doc["replications"] = replications;
    return doc.dump();
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    const json doc = json::parse(text);
    ExperimentConfig config;
    if (doc.contains("model")) config.model = model_from_json(doc.at("model"));
    if (doc.contains("radii")) {
        const json& radii = doc.at("radii");
        config.radii_min = radii.value("min", config.radii_min);
        config.radii_max = radii.value("max", config.radii_max);
        config.radii_count = radii.value("count", config.radii_count);
    }
    if (doc.contains("q")) {
        config.q_values.clear();
        if (doc.at("q").is_array())
            for (const auto& v : doc.at("q")) config.q_values.push_back(v.get<int>());
        else
            config.q_values.push_back(doc.at("q").get<int>());
    }
    if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("replications")) config.replications = doc.at("replications").get<long>();
    if (doc.contains("out_dir")) config.out_dir = doc.at("out_dir").get<std::string>();
    config.validate();
    return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

} // namespace lgcp
