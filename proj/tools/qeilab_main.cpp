// qeilab: spectra, scans, and growth classification for one-particle
// energy-density kernels in factorizing scattering models.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qei/analysis.hpp"
#include "qei/config.hpp"
#include "qei/discretize.hpp"
#include "qei/errors.hpp"
#include "qei/io.hpp"
#include "qei/spectral.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct FlagOverrides {
    std::string config_path;
    std::optional<std::string> model_name;
    std::optional<double> mass;
    std::optional<double> coupling;
    std::vector<double> poly;
    std::optional<double> sigma;
    std::optional<double> cutoff;
    std::optional<int> cells;
    std::optional<int> quad_order;
    std::vector<double> b_list;
    std::vector<double> r_list;
    std::optional<std::string> component;
    std::optional<unsigned> threads;
    std::string out_path;
    std::optional<std::string> format;
    std::string dump_matrix_path;
};

void add_common_options(CLI::App* cmd, FlagOverrides& f) {
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("--model", f.model_name, "free | ising | sinh-gordon");
    cmd->add_option("--mass", f.mass, "particle mass mu > 0");
    cmd->add_option("--coupling", f.coupling, "sinh-Gordon coupling B in (0,2)");
    cmd->add_option("--poly", f.poly, "polynomial coefficients c0,c1,... with P(1)=1")
        ->delimiter(',');
    cmd->add_option("--sigma", f.sigma, "Gaussian smearing width sigma > 0");
    cmd->add_option("--R", f.cutoff, "rapidity cutoff R");
    cmd->add_option("--N", f.cells, "number of grid cells N");
    cmd->add_option("--q", f.quad_order, "Gauss-Legendre points per cell");
    cmd->add_option("--threads", f.threads, "worker threads");
    cmd->add_option("--out", f.out_path, "output path");
    cmd->add_option("--format", f.format, "csv | json (scan outputs)");
}

qei::ExperimentConfig build_config(const FlagOverrides& f) {
    qei::ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg.apply_json(qei::load_config_file(f.config_path));
    if (f.model_name) {
        try {
            cfg.model_kind = qei::model_kind_from_name(*f.model_name);
        } catch (const std::invalid_argument& e) {
            throw qei::ConfigError(std::string("--model: ") + e.what());
        }
        // A config-file coupling belongs to the config's model block; drop it
        // when the flag switches to a model without coupling.
        if (*cfg.model_kind != qei::ModelKind::SinhGordon && !f.coupling)
            cfg.coupling.reset();
    }
    if (f.mass) cfg.mass = *f.mass;
    if (f.coupling) cfg.coupling = *f.coupling;
    if (!f.poly.empty()) cfg.polynomial = f.poly;
    if (f.sigma) cfg.sigma = *f.sigma;
    if (f.cutoff) cfg.cutoff = *f.cutoff;
    if (f.cells) cfg.cells = *f.cells;
    if (f.quad_order) cfg.quad_order = *f.quad_order;
    if (!f.b_list.empty()) cfg.b_list = f.b_list;
    if (!f.r_list.empty()) cfg.r_list = f.r_list;
    if (f.component) {
        if (f.component->size() != 2 ||
            ((*f.component)[0] != '0' && (*f.component)[0] != '1') ||
            ((*f.component)[1] != '0' && (*f.component)[1] != '1'))
            throw qei::ConfigError("--component: must be 00, 01, 10 or 11");
        cfg.component_alpha = (*f.component)[0] - '0';
        cfg.component_beta = (*f.component)[1] - '0';
    }
    if (f.threads) {
        if (*f.threads < 1) throw qei::ConfigError("--threads: must be >= 1");
        cfg.threads = *f.threads;
    }
    if (!f.out_path.empty()) cfg.out_path = f.out_path;
    if (f.format) {
        if (*f.format != "csv" && *f.format != "json")
            throw qei::ConfigError("--format: must be csv or json");
        cfg.format = *f.format;
    }
    if (cfg.out_path.empty())
        throw qei::ConfigError("output.path: missing (set it or pass --out)");
    return cfg;
}

std::string scan_csv(const std::string& header,
                     const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << qei::format_g17(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

json matrix_metadata(const qei::ExperimentConfig& cfg) {
    json meta = {{"model", cfg.model_kind ? qei::model_kind_name(*cfg.model_kind) : ""},
                 {"mass", cfg.mass},
                 {"polynomial", cfg.polynomial},
                 {"sigma", cfg.sigma},
                 {"R", cfg.cutoff},
                 {"N", cfg.cells},
                 {"q", cfg.quad_order}};
    if (cfg.coupling) meta["coupling"] = *cfg.coupling;
    return meta;
}

void write_sidecar(const std::string& data_path, const json& provenance) {
    qei::write_file_atomic(data_path + ".meta.json", provenance.dump(2) + "\n");
}

int run_spectrum(const qei::ExperimentConfig& cfg,
                 const std::string& dump_matrix_path) {
    qei::KernelSpec spec = cfg.kernel_spec();
    const qei::DiscretizationGrid grid = cfg.grid();
    const qei::KernelMatrix km = qei::assemble_matrix(spec, grid, cfg.threads);

    if (!dump_matrix_path.empty()) {
        std::ostringstream out;
        for (int i = 0; i < km.entries.size(); ++i) {
            for (int j = 0; j < km.entries.size(); ++j) {
                if (j) out << ",";
                out << qei::format_g17(km.entries(i, j));
            }
            out << "\n";
        }
        qei::write_file_atomic(dump_matrix_path, out.str());
        write_sidecar(dump_matrix_path, matrix_metadata(cfg));
    }

    const qei::SpectrumResult res = qei::lowest_eigenpair(km);
    json doc = {{"lambda_min", res.lambda_min},
                {"residual", res.residual},
                {"vector", res.eigenvector},
                {"provenance", cfg.provenance("spectrum")}};
    qei::write_file_atomic(cfg.out_path + ".json", doc.dump(2) + "\n");

    std::ostringstream csv;
    csv << "theta_mid,component\n";
    for (int j = 0; j < grid.cells; ++j)
        csv << qei::format_g17(grid.cell_midpoint(j)) << ","
            << qei::format_g17(res.eigenvector[j]) << "\n";
    const std::string vec_path = cfg.out_path + "_eigenvector.csv";
    qei::write_file_atomic(vec_path, csv.str());
    write_sidecar(vec_path, cfg.provenance("spectrum"));

    std::cout << "lambda_min = " << qei::format_g17(res.lambda_min)
              << " (residual " << qei::format_g17(res.residual) << ")\n";
    return kExitOk;
}

int run_scan_coupling(const qei::ExperimentConfig& cfg) {
    if (cfg.b_list.empty())
        throw qei::ConfigError("B_list: missing or empty");
    std::vector<qei::CouplingPoint> points;
    try {
        points = qei::scan_coupling(cfg.b_list, cfg.mass, cfg.grid(), cfg.sigma,
                                    cfg.poly(), cfg.threads);
    } catch (const std::invalid_argument& e) {
        throw qei::ConfigError(std::string("B_list: ") + e.what());
    }
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& p : points)
            arr.push_back({{"B", p.coupling},
                           {"lambda_min", p.lambda_min},
                           {"residual", p.residual}});
        json doc = {{"points", arr}, {"provenance", cfg.provenance("scan-coupling")}};
        qei::write_file_atomic(cfg.out_path, doc.dump(2) + "\n");
    } else {
        std::vector<std::vector<double>> rows;
        for (const auto& p : points)
            rows.push_back({p.coupling, p.lambda_min, p.residual});
        qei::write_file_atomic(cfg.out_path, scan_csv("B,lambda_min,residual", rows));
        write_sidecar(cfg.out_path, cfg.provenance("scan-coupling"));
    }
    return kExitOk;
}

int run_scan_cutoff(const qei::ExperimentConfig& cfg) {
    if (cfg.r_list.empty())
        throw qei::ConfigError("R_list: missing or empty");
    const double cell_width = 2.0 * cfg.cutoff / cfg.cells;
    std::vector<qei::CutoffPoint> points;
    try {
        points = qei::scan_cutoff(cfg.kernel_spec(), cfg.r_list, cell_width,
                                  cfg.quad_order, cfg.threads);
    } catch (const std::invalid_argument& e) {
        throw qei::ConfigError(std::string("R_list: ") + e.what());
    }
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& p : points)
            arr.push_back({{"R", p.cutoff},
                           {"N", p.cells},
                           {"lambda_min", p.lambda_min},
                           {"residual", p.residual}});
        json doc = {{"points", arr}, {"provenance", cfg.provenance("scan-cutoff")}};
        qei::write_file_atomic(cfg.out_path, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "R,N,lambda_min,residual\n";
        for (const auto& p : points)
            out << qei::format_g17(p.cutoff) << "," << p.cells << ","
                << qei::format_g17(p.lambda_min) << ","
                << qei::format_g17(p.residual) << "\n";
        qei::write_file_atomic(cfg.out_path, out.str());
        write_sidecar(cfg.out_path, cfg.provenance("scan-cutoff"));
    }
    return kExitOk;
}

int run_classify(const qei::ExperimentConfig& cfg) {
    const qei::KernelSpec spec = cfg.kernel_spec();
    const qei::GrowthClassification cls = qei::classify_growth(spec, cfg.probe);
    const qei::AlphaWindow window = qei::admissible_alpha_window(spec.model);
    const qei::NegativityWitness witness =
        qei::find_negativity_witness(spec, cfg.witness);

    json doc = {{"verdict", qei::verdict_name(cls.verdict)},
                {"ratio", cls.asymptotic_ratio ? json(*cls.asymptotic_ratio)
                                               : json("unbounded")},
                {"probe_range", {cls.probe_theta_min, cls.probe_theta_max}},
                {"margin", cls.margin},
                {"provenance", cfg.provenance("classify")}};
    if (!cls.diagnostic.empty()) doc["diagnostic"] = cls.diagnostic;
    if (window.p_equiv_one_only)
        doc["alpha_window"] = "P==1 only";
    else
        doc["alpha_window"] = {{"half_width", window.half_width}};
    if (witness.present)
        doc["witness"] = {{"present", true},
                          {"theta_p", witness.theta_p},
                          {"fp_value", witness.fp_value}};
    else
        doc["witness"] = {{"present", false}};
    qei::write_file_atomic(cfg.out_path, doc.dump(2) + "\n");
    std::cout << "verdict = " << qei::verdict_name(cls.verdict) << "\n";
    return kExitOk;
}

int run_kernel_dump(const qei::ExperimentConfig& cfg) {
    const qei::KernelSpec spec = cfg.kernel_spec();
    const qei::DiscretizationGrid grid = cfg.grid();
    std::ostringstream out;
    out << "theta,eta,value\n";
    for (int i = 0; i < grid.cells; ++i) {
        const double theta = grid.cell_midpoint(i);
        for (int j = 0; j < grid.cells; ++j) {
            const double eta = grid.cell_midpoint(j);
            out << qei::format_g17(theta) << "," << qei::format_g17(eta) << ","
                << qei::format_g17(qei::kernel_value(spec, theta, eta)) << "\n";
        }
    }
    qei::write_file_atomic(cfg.out_path, out.str());
    write_sidecar(cfg.out_path, cfg.provenance("kernel-dump"));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-particle energy-density spectra in factorizing scattering models"};
    app.require_subcommand(1);

    FlagOverrides f;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "assemble the kernel matrix and solve for the lowest eigenpair");
    CLI::App* scan_coupling = app.add_subcommand(
        "scan-coupling", "lowest eigenvalue across sinh-Gordon couplings");
    CLI::App* scan_cutoff = app.add_subcommand(
        "scan-cutoff", "lowest eigenvalue across rapidity cutoffs at fixed cell width");
    CLI::App* classify = app.add_subcommand(
        "classify", "growth classification, alpha window, negativity witness");
    CLI::App* kernel_dump =
        app.add_subcommand("kernel-dump", "kernel values on a midpoint grid");

    for (CLI::App* cmd : {spectrum, scan_coupling, scan_cutoff, classify, kernel_dump})
        add_common_options(cmd, f);
    scan_coupling->add_option("--B-list", f.b_list, "couplings to scan")->delimiter(',');
    scan_cutoff->add_option("--R-list", f.r_list, "cutoffs to scan")->delimiter(',');
    kernel_dump->add_option("--component", f.component, "tensor component, e.g. 00");
    spectrum->add_option("--dump-matrix", f.dump_matrix_path,
                         "also write the assembled matrix as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const qei::ExperimentConfig cfg = build_config(f);
        if (spectrum->parsed()) return run_spectrum(cfg, f.dump_matrix_path);
        if (scan_coupling->parsed()) return run_scan_coupling(cfg);
        if (scan_cutoff->parsed()) return run_scan_cutoff(cfg);
        if (classify->parsed()) return run_classify(cfg);
        if (kernel_dump->parsed()) return run_kernel_dump(cfg);
        return kExitConfig;
    } catch (const qei::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qei::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qei::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
