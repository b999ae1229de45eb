#include "qei/config.hpp"

#include <fstream>
#include <set>

#include "qei/errors.hpp"

namespace qei {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ConfigError(field + ": " + what);
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) field_error(field, "must be a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) field_error(field, "must be an integer");
    return j.get<int>();
}

std::vector<double> require_number_list(const json& j, const std::string& field) {
    if (!j.is_array()) field_error(field, "must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) field_error(field, "must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void reject_unknown_keys(const json& j, const std::string& scope,
                         const std::set<std::string>& known) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            field_error(scope.empty() ? it.key() : scope + "." + it.key(),
                        "unknown field");
}

} // namespace

void ExperimentConfig::apply_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(doc, "",
                        {"model", "polynomial", "sigma", "grid", "R_list",
                         "B_list", "probe", "witness", "component", "output",
                         "threads"});

    if (doc.contains("model")) {
        const json& m = doc.at("model");
        if (!m.is_object()) field_error("model", "must be an object");
        reject_unknown_keys(m, "model", {"name", "mass", "coupling"});
        if (!m.contains("name")) field_error("model.name", "missing");
        if (!m.at("name").is_string()) field_error("model.name", "must be a string");
        try {
            model_kind = model_kind_from_name(m.at("name").get<std::string>());
        } catch (const std::invalid_argument& e) {
            field_error("model.name", e.what());
        }
        if (!m.contains("mass"))
            field_error("model.mass", "missing (required in a model block)");
        mass = require_number(m.at("mass"), "model.mass");
        if (m.contains("coupling"))
            coupling = require_number(m.at("coupling"), "model.coupling");
        else
            coupling.reset();
    }
    if (doc.contains("polynomial"))
        polynomial = require_number_list(doc.at("polynomial"), "polynomial");
    if (doc.contains("sigma")) sigma = require_number(doc.at("sigma"), "sigma");
    if (doc.contains("grid")) {
        const json& g = doc.at("grid");
        if (!g.is_object()) field_error("grid", "must be an object");
        reject_unknown_keys(g, "grid", {"R", "N", "q"});
        if (g.contains("R")) cutoff = require_number(g.at("R"), "grid.R");
        if (g.contains("N")) cells = require_int(g.at("N"), "grid.N");
        if (g.contains("q")) quad_order = require_int(g.at("q"), "grid.q");
    }
    if (doc.contains("R_list"))
        r_list = require_number_list(doc.at("R_list"), "R_list");
    if (doc.contains("B_list"))
        b_list = require_number_list(doc.at("B_list"), "B_list");
    if (doc.contains("probe")) {
        const json& p = doc.at("probe");
        if (!p.is_object()) field_error("probe", "must be an object");
        reject_unknown_keys(p, "probe",
                            {"theta_min", "theta_max", "samples", "margin"});
        if (p.contains("theta_min"))
            probe.theta_min = require_number(p.at("theta_min"), "probe.theta_min");
        if (p.contains("theta_max"))
            probe.theta_max = require_number(p.at("theta_max"), "probe.theta_max");
        if (p.contains("samples"))
            probe.samples = require_int(p.at("samples"), "probe.samples");
        if (p.contains("margin"))
            probe.margin = require_number(p.at("margin"), "probe.margin");
    }
    if (doc.contains("witness")) {
        const json& w = doc.at("witness");
        if (!w.is_object()) field_error("witness", "must be an object");
        reject_unknown_keys(w, "witness", {"theta_min", "theta_max", "samples"});
        if (w.contains("theta_min"))
            witness.theta_min = require_number(w.at("theta_min"), "witness.theta_min");
        if (w.contains("theta_max"))
            witness.theta_max = require_number(w.at("theta_max"), "witness.theta_max");
        if (w.contains("samples"))
            witness.samples = require_int(w.at("samples"), "witness.samples");
    }
    if (doc.contains("component")) {
        const json& c = doc.at("component");
        if (!c.is_string() || c.get<std::string>().size() != 2)
            field_error("component", "must be a two-character string like \"00\"");
        const std::string s = c.get<std::string>();
        for (char ch : s)
            if (ch != '0' && ch != '1')
                field_error("component", "indices must be 0 or 1");
        component_alpha = s[0] - '0';
        component_beta = s[1] - '0';
    }
    if (doc.contains("output")) {
        const json& o = doc.at("output");
        if (!o.is_object()) field_error("output", "must be an object");
        reject_unknown_keys(o, "output", {"path", "format"});
        if (o.contains("path")) {
            if (!o.at("path").is_string()) field_error("output.path", "must be a string");
            out_path = o.at("path").get<std::string>();
        }
        if (o.contains("format")) {
            if (!o.at("format").is_string()) field_error("output.format", "must be a string");
            format = o.at("format").get<std::string>();
            if (format != "csv" && format != "json")
                field_error("output.format", "must be \"csv\" or \"json\"");
        }
    }
    if (doc.contains("threads")) {
        const int t = require_int(doc.at("threads"), "threads");
        if (t < 1) field_error("threads", "must be >= 1");
        threads = static_cast<unsigned>(t);
    }
}

ScatteringModel ExperimentConfig::model() const {
    if (!model_kind)
        throw ConfigError("model.name: missing (set it in the config file or with --model)");
    try {
        if (*model_kind == ModelKind::SinhGordon && !coupling)
            throw ConfigError("model.coupling: missing (required for sinh-gordon)");
        return ScatteringModel::make(*model_kind, mass, coupling);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
}

PolynomialP ExperimentConfig::poly() const {
    try {
        return PolynomialP(polynomial);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("polynomial: ") + e.what());
    }
}

SmearingFunction ExperimentConfig::smearing() const {
    try {
        return SmearingFunction(sigma, mass);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("sigma: ") + e.what());
    }
}

KernelSpec ExperimentConfig::kernel_spec() const {
    return KernelSpec(model(), poly(), smearing(), component_alpha,
                      component_beta);
}

DiscretizationGrid ExperimentConfig::grid() const {
    try {
        return DiscretizationGrid(cutoff, cells, quad_order);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("grid: ") + e.what());
    }
}

nlohmann::json ExperimentConfig::provenance(const std::string& command) const {
    nlohmann::json model_block = {
        {"name", model_kind ? model_kind_name(*model_kind) : ""},
        {"mass", mass}};
    if (coupling) model_block["coupling"] = *coupling;
    nlohmann::json j = {{"command", command},
                        {"model", model_block},
                        {"polynomial", polynomial},
                        {"sigma", sigma},
                        {"grid", {{"R", cutoff}, {"N", cells}, {"q", quad_order}}}};
    if (!r_list.empty()) j["R_list"] = r_list;
    if (!b_list.empty()) j["B_list"] = b_list;
    if (command == "classify") {
        j["probe"] = {{"theta_min", probe.theta_min},
                      {"theta_max", probe.theta_max},
                      {"samples", probe.samples},
                      {"margin", probe.margin}};
        j["witness"] = {{"theta_min", witness.theta_min},
                        {"theta_max", witness.theta_max},
                        {"samples", witness.samples}};
    }
    if (command == "kernel-dump")
        j["component"] = std::to_string(component_alpha) + std::to_string(component_beta);
    return j;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
}

} // namespace qei
