#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgcpalm/model.hpp"

namespace lgcp {

/// Parse a model from its JSON object form:
///   {"family": "spherical", "variance": 4.0, "scale": 0.2,
///    "mean_level": ... | "intensity": ...}
/// Exactly one of mean_level / intensity must be present; intensity is
/// converted through rho = exp(mu + sigma^2/2).
LgcpModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const LgcpModel& model);

/// Resolved experiment configuration driving the command-line runs.
struct ExperimentConfig {
    LgcpModel model;
    double radii_min = 0.01;
    double radii_max = 0.25;
    int radii_count = 50;
    std::vector<int> q_values{16};
    std::uint64_t seed = 20240801;
    long replications = 10000;
    std::string out_dir;

    std::vector<double> radii() const;
    void validate() const;

    /// Canonical JSON of the fully resolved configuration; embedded into
    /// every output so a run can be reproduced byte-for-byte.
    std::string to_json_text() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig load(const std::string& path);
};

} // namespace lgcp
