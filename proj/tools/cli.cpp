#include "cli.hpp"

#include "xyzmin/decomp.hpp"
#include "xyzmin/errors.hpp"
#include "xyzmin/measures.hpp"
#include "xyzmin/model.hpp"
#include "xyzmin/sweep.hpp"
#include "xyzmin/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace xyzmin::cli {

namespace {

constexpr int kRuntimeFailure = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void kv(std::ostream& out, const std::string& key, double v) { out << key << ": " << format_number(v) << '\n'; }

void print_point(std::ostream& out, const ModelParams& p) {
    const ThermalElements t = thermal_elements(p);
    const DensityMatrix rho = thermal_state(t);
    const FanoForm f = fano_decompose(rho);
    const MeasureReport r = measure_thermal(p);

    kv(out, "J", p.J);
    kv(out, "Jz", p.Jz);
    kv(out, "gamma", p.gamma);
    kv(out, "B", p.B);
    kv(out, "lambda", p.lambda);
    kv(out, "beta", p.beta);
    kv(out, "mu_plus", t.mu_plus);
    kv(out, "mu_minus", t.mu_minus);
    kv(out, "nu_plus", t.nu_plus);
    kv(out, "nu_minus", t.nu_minus);
    kv(out, "kappa", t.kappa);
    kv(out, "epsilon", t.epsilon);
    kv(out, "Z", t.Z);
    kv(out, "concurrence", r.concurrence);
    kv(out, "concurrence_general", concurrence(rho));
    kv(out, "min_hs", r.min_hs);
    kv(out, "min_trace", r.min_trace);
    kv(out, "min_trace_paper", r.min_trace_paper);
    kv(out, "min_fidelity", r.min_fidelity);
    kv(out, "min_hs_thermal", min_hs_thermal(t));
    kv(out, "min_fidelity_thermal", min_fidelity_thermal(t));
    try {
        const CriticalWindow w = critical_window(p);
        out << "jc1: " << (w.jc1 ? format_number(*w.jc1) : std::string("unbounded")) << '\n';
        kv(out, "jc2", w.jc2);
    } catch (const DomainError&) {
        out << "jc1: undefined\njc2: undefined\n";
    }
    for (int i = 0; i < 3; ++i) kv(out, "bloch_a_" + std::to_string(i + 1), f.bloch_a(i));
    for (int i = 0; i < 3; ++i) kv(out, "bloch_b_" + std::to_string(i + 1), f.bloch_b(i));
    for (int i = 0; i < 3; ++i) kv(out, "c_" + std::to_string(i + 1), f.pauli_corr(i, i));
    kv(out, "purity", rho.purity());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os << content;
    if (!os) throw IoError("write failed for " + path.string());
}

std::string csv_text(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

void emit_sweep(const SweepSpec& spec, const std::filesystem::path& out_path, bool gnuplot, const std::string& title,
                std::ostream& out) {
    write_file(out_path, csv_text(run_sweep(spec)));
    out << "wrote " << out_path.string() << '\n';
    if (gnuplot) {
        std::filesystem::path script = out_path;
        script.replace_extension(".gp");
        write_file(script, gnuplot_script(out_path.filename().string(), title));
        out << "wrote " << script.string() << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Concurrence and measurement-induced nonlocality of two-qubit XYZ thermal states", "xyzmin"};
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    ModelParams p;
    app.add_option("--J", p.J, "xy coupling")->capture_default_str();
    app.add_option("--Jz", p.Jz, "z coupling")->capture_default_str();
    app.add_option("--gamma", p.gamma, "xy anisotropy")->capture_default_str();
    app.add_option("--B", p.B, "uniform field")->capture_default_str();
    app.add_option("--lambda", p.lambda, "field inhomogeneity")->capture_default_str();
    app.add_option("--beta", p.beta, "inverse temperature")->capture_default_str();

    auto* point = app.add_subcommand("point", "all measures at one parameter point");

    auto* sweep = app.add_subcommand("sweep", "sweep one parameter and write CSV");
    std::string vary;
    double from = 0, to = 0;
    int steps = 0;
    std::string lock;
    std::string out_path;
    bool gnuplot = false;
    sweep->add_option("--vary", vary, "J | Jz | gamma | B | lambda | beta")->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--lock", lock, "constraint, only J=Jz is supported");
    sweep->add_option("--out", out_path, "CSV path")->required();
    sweep->add_flag("--gnuplot", gnuplot, "also write a gnuplot script next to the CSV");

    auto* critical = app.add_subcommand("critical", "zero-concurrence window in Jz");

    auto* verify = app.add_subcommand("verify", "compare closed forms against oracles");
    int samples = 200;
    std::uint64_t seed = 7;
    verify->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed)->capture_default_str();

    auto* figure = app.add_subcommand("figure", "write the CSV set for figure 1..5");
    int figure_id = 0;
    std::string figure_dir = ".";
    figure->add_option("id", figure_id, "figure number")->required();
    figure->add_option("--out", figure_dir, "output directory")->capture_default_str();
    figure->add_flag("--gnuplot", gnuplot, "also write gnuplot scripts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (*point) {
            print_point(out, p);
        } else if (*sweep) {
            SweepSpec spec;
            const auto param = parse_sweep_param(vary);
            if (!param) throw UsageError("unknown sweep parameter '" + vary + "'");
            if (!lock.empty() && lock != "J=Jz") throw UsageError("unsupported lock '" + lock + "'");
            spec.vary = *param;
            spec.from = from;
            spec.to = to;
            spec.steps = steps;
            spec.fixed = p;
            spec.lock_j_jz = !lock.empty();
            spec.validate();
            emit_sweep(spec, out_path, gnuplot, "sweep " + vary, out);
        } else if (*critical) {
            const CriticalWindow w = critical_window(p);
            out << "jc1: " << (w.jc1 ? format_number(*w.jc1) : std::string("unbounded")) << '\n';
            kv(out, "jc2", w.jc2);
        } else if (*verify) {
            const VerifyReport report = run_verification(samples, seed);
            print_report(out, report);
            return report.passed() ? 0 : kRuntimeFailure;
        } else if (*figure) {
            const auto presets = figure_presets(figure_id);
            for (const auto& preset : presets) {
                emit_sweep(preset.spec, std::filesystem::path(figure_dir) / (preset.name + ".csv"), gnuplot,
                           preset.title, out);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeFailure;
    }
    return 0;
}

}  // namespace xyzmin::cli
