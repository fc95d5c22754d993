#pragma once

#include "xyzmin/measures.hpp"
#include "xyzmin/model.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xyzmin {

/// Malformed command-line or sweep input (exit status 2).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class SweepParam { J, Jz, Gamma, B, Lambda, Beta };

std::optional<SweepParam> parse_sweep_param(std::string_view name);
std::string_view sweep_param_name(SweepParam p);

struct SweepSpec {
    SweepParam vary = SweepParam::Jz;
    double from = 0.0;
    double to = 1.0;
    int steps = 2;
    ModelParams fixed;
    bool lock_j_jz = false;  // set J = Jz at every step

    /// Throws UsageError.
    void validate() const;
    double value_at(int i) const;
    ModelParams params_at(int i) const;
};

struct SweepRow {
    std::string param;
    double value = 0.0;
    double concurrence = 0.0;
    double concurrence_half = 0.0;
    double min_hs = 0.0;
    double min_trace = 0.0;
    double min_trace_paper = 0.0;
    double min_fidelity = 0.0;
    bool in_window = false;
};

inline constexpr std::string_view kCsvHeader =
    "param,value,concurrence,concurrence_half,min_hs,min_trace,min_trace_paper,min_fidelity,in_window";

SweepRow make_row(std::string param, double value, const MeasureReport& r);

/// Rows in parameter order; computed with OpenMP.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
/// Single-threaded reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

/// 12 significant digits, '.' decimal point, no locale dependence.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Gnuplot script plotting every measure column of csv_path against value.
std::string gnuplot_script(const std::string& csv_path, const std::string& title);

struct FigurePreset {
    std::string name;  // file stem, e.g. "fig2_J5"
    std::string title;
    SweepSpec spec;
};

/// Sweep presets for figures 1..5; throws UsageError for any other id.
std::vector<FigurePreset> figure_presets(int id);

}  // namespace xyzmin
