#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qei/analysis.hpp"
#include "qei/kernel.hpp"

namespace qei {

/// One experiment description: model, polynomial, smearing, grid, plus the
/// command-specific lists. Defaults follow the reference runs (mass 1,
/// sigma 0.1, P = 1, N = 500, R = 7, q = 4).
struct ExperimentConfig {
    std::optional<ModelKind> model_kind;
    double mass = 1.0;
    std::optional<double> coupling;
    std::vector<double> polynomial{1.0};
    double sigma = 0.1;
    double cutoff = 7.0;
    int cells = 500;
    int quad_order = 4;
    std::vector<double> r_list;
    std::vector<double> b_list;
    GrowthProbe probe;
    WitnessSearch witness;
    int component_alpha = 0;
    int component_beta = 0;
    std::string out_path;
    std::string format; // "csv" | "json"; commands pick their default
    unsigned threads = 1;

    /// Apply a parsed JSON config file on top of the defaults. Field errors
    /// are ConfigError naming the offending key.
    void apply_json(const nlohmann::json& doc);

    ScatteringModel model() const;       // throws ConfigError if incomplete
    PolynomialP poly() const;
    SmearingFunction smearing() const;
    KernelSpec kernel_spec() const;
    DiscretizationGrid grid() const;

    /// Provenance block embedded in every output.
    nlohmann::json provenance(const std::string& command) const;
};

/// Reads and parses a JSON config file. Parse errors are reported with the
/// byte position from the JSON parser.
nlohmann::json load_config_file(const std::string& path);

} // namespace qei
