#include "xyzmin/sweep.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace xyzmin {

namespace {

constexpr std::array<std::pair<std::string_view, SweepParam>, 6> kParamNames = {{
    {"J", SweepParam::J},
    {"Jz", SweepParam::Jz},
    {"gamma", SweepParam::Gamma},
    {"B", SweepParam::B},
    {"lambda", SweepParam::Lambda},
    {"beta", SweepParam::Beta},
}};

constexpr double kZeroTol = 1e-12;

}  // namespace

std::optional<SweepParam> parse_sweep_param(std::string_view name) {
    for (const auto& [key, value] : kParamNames)
        if (key == name) return value;
    return std::nullopt;
}

std::string_view sweep_param_name(SweepParam p) {
    for (const auto& [key, value] : kParamNames)
        if (value == p) return key;
    return "?";
}

void SweepSpec::validate() const {
    if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) throw UsageError("sweep: need finite from < to");
    if (steps < 2) throw UsageError("sweep: steps must be >= 2");
    if (lock_j_jz && vary != SweepParam::J && vary != SweepParam::Jz)
        throw UsageError("sweep: lock J=Jz requires varying J or Jz");
    if (vary == SweepParam::Beta && !(from > 0)) throw UsageError("sweep: beta range must be positive");
    try {
        params_at(0).validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("sweep: ") + e.what());
    }
}

double SweepSpec::value_at(int i) const {
    if (i == steps - 1) return to;
    return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

ModelParams SweepSpec::params_at(int i) const {
    ModelParams p = fixed;
    const double v = value_at(i);
    switch (vary) {
        case SweepParam::J: p.J = v; break;
        case SweepParam::Jz: p.Jz = v; break;
        case SweepParam::Gamma: p.gamma = v; break;
        case SweepParam::B: p.B = v; break;
        case SweepParam::Lambda: p.lambda = v; break;
        case SweepParam::Beta: p.beta = v; break;
    }
    if (lock_j_jz) p.J = p.Jz = v;
    return p;
}

SweepRow make_row(std::string param, double value, const MeasureReport& r) {
    SweepRow row;
    row.param = std::move(param);
    row.value = value;
    row.concurrence = r.concurrence;
    row.concurrence_half = r.concurrence / 2;
    row.min_hs = r.min_hs;
    row.min_trace = r.min_trace;
    row.min_trace_paper = r.min_trace_paper;
    row.min_fidelity = r.min_fidelity;
    row.in_window = r.concurrence <= kZeroTol &&
                    (r.min_hs > kZeroTol || r.min_trace > kZeroTol || r.min_fidelity > kZeroTol);
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::string name(sweep_param_name(spec.vary));
    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < spec.steps; ++i) rows[i] = make_row(name, spec.value_at(i), measure_thermal(spec.params_at(i)));
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
    spec.validate();
    const std::string name(sweep_param_name(spec.vary));
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) rows.push_back(make_row(name, spec.value_at(i), measure_thermal(spec.params_at(i))));
    return rows;
}

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.param << ',' << format_number(r.value) << ',' << format_number(r.concurrence) << ','
           << format_number(r.concurrence_half) << ',' << format_number(r.min_hs) << ','
           << format_number(r.min_trace) << ',' << format_number(r.min_trace_paper) << ','
           << format_number(r.min_fidelity) << ',' << (r.in_window ? 1 : 0) << '\n';
    }
}

std::string gnuplot_script(const std::string& csv_path, const std::string& title) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set title '" << title << "'\n"
       << "set xlabel 'value'\n"
       << "plot '" << csv_path << "' using 2:4 with lines lw 1, \\\n"
       << "     '' using 2:5 with lines dt 3, \\\n"
       << "     '' using 2:6 with lines dt 4, \\\n"
       << "     '' using 2:8 with lines lw 3\n";
    return os.str();
}

std::vector<FigurePreset> figure_presets(int id) {
    auto make = [](SweepParam vary, double from, double to, int steps, ModelParams fixed, bool lock = false) {
        SweepSpec s;
        s.vary = vary;
        s.from = from;
        s.to = to;
        s.steps = steps;
        s.fixed = fixed;
        s.lock_j_jz = lock;
        return s;
    };
    switch (id) {
        case 1:
            return {{"fig1", "XXX, B = lambda = 0, J = Jz", make(SweepParam::Jz, -2, 2, 401, {}, true)}};
        case 2:
            return {{"fig2_J1", "XXZ, B = lambda = 0, J = 1", make(SweepParam::Jz, -6, 2, 801, {.J = 1})},
                    {"fig2_J5", "XXZ, B = lambda = 0, J = 5", make(SweepParam::Jz, -6, 2, 801, {.J = 5})}};
        case 3:
            return {{"fig3", "XXZ, J = 5, Jz = 1, lambda = 0", make(SweepParam::B, 0, 6, 601, {.J = 5, .Jz = 1})}};
        case 4: {
            std::vector<FigurePreset> out;
            for (double g : {0.5, 1.0}) {
                for (double b : {0.0, 1.0}) {
                    const std::string gs = format_number(g);
                    const std::string bs = format_number(b);
                    out.push_back({"fig4_g" + gs + "_B" + bs, "XYZ, J = 2, lambda = 0, gamma = " + gs + ", B = " + bs,
                                   make(SweepParam::Jz, -4, 2, 601, {.J = 2, .gamma = g, .B = b})});
                }
            }
            return out;
        }
        case 5:
            return {{"fig5", "XYZ, Jz = -1, gamma = 0.5, J = 2",
                     make(SweepParam::B, 0, 6, 601, {.J = 2, .Jz = -1, .gamma = 0.5})}};
        default:
            throw UsageError("figure id must be 1..5");
    }
}

}  // namespace xyzmin
