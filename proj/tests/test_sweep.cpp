#include "xyzmin/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace xyzmin;

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(-2.0) == "-2");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(12345678.9012345) == "12345678.9012");
    CHECK(format_number(1.5e-20) == "1.5e-20");
}

TEST_CASE("sweep spec validation") {
    SweepSpec s;
    s.from = 1;
    s.to = 0;
    CHECK_THROWS_AS(s.validate(), UsageError);
    s.to = 2;
    s.steps = 1;
    CHECK_THROWS_AS(s.validate(), UsageError);
    s.steps = 2;
    CHECK_NOTHROW(s.validate());
    s.vary = SweepParam::B;
    s.lock_j_jz = true;
    CHECK_THROWS_AS(s.validate(), UsageError);
    s.lock_j_jz = false;
    s.vary = SweepParam::Beta;
    s.from = 0;
    CHECK_THROWS_AS(s.validate(), UsageError);

    CHECK(parse_sweep_param("lambda") == SweepParam::Lambda);
    CHECK_FALSE(parse_sweep_param("Jx").has_value());
}

TEST_CASE("two-step sweep matches point evaluations") {
    SweepSpec s;
    s.vary = SweepParam::Jz;
    s.from = -1;
    s.to = 1.5;
    s.steps = 2;
    s.fixed = {.J = 1.2, .gamma = 0.3, .B = 0.4};
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 2);
    for (int i = 0; i < 2; ++i) {
        ModelParams p = s.fixed;
        p.Jz = i == 0 ? -1 : 1.5;
        const auto r = measure_thermal(p);
        CHECK(rows[i].value == p.Jz);
        CHECK(rows[i].concurrence == r.concurrence);
        CHECK(rows[i].min_hs == r.min_hs);
        CHECK(rows[i].min_trace == r.min_trace);
        CHECK(rows[i].min_trace_paper == r.min_trace_paper);
        CHECK(rows[i].min_fidelity == r.min_fidelity);
        CHECK(rows[i].concurrence_half == r.concurrence / 2);
    }
}

TEST_CASE("parallel sweep equals serial sweep") {
    for (int id = 1; id <= 5; ++id) {
        for (const auto& preset : figure_presets(id)) {
            std::ostringstream a, b;
            write_csv(a, run_sweep(preset.spec));
            write_csv(b, run_sweep_serial(preset.spec));
            CHECK(a.str() == b.str());
        }
    }
}

TEST_CASE("XXX sweep window") {
    SweepSpec s;
    s.vary = SweepParam::Jz;
    s.lock_j_jz = true;
    s.from = -2;
    s.to = 2;
    s.steps = 401;
    const double jc = std::log(3.0) / 2;
    for (const auto& row : run_sweep(s)) {
        if (row.value == 0.0) {
            CHECK(row.min_hs == 0.0);
            CHECK_FALSE(row.in_window);
        } else if (row.value <= jc) {
            CHECK(row.in_window);
            CHECK(row.min_hs > 0);
        } else {
            CHECK_FALSE(row.in_window);
            CHECK(row.concurrence > 0);
        }
    }
}

TEST_CASE("in_window agrees with the critical window") {
    for (const auto& preset : figure_presets(4)) {
        const auto rows = run_sweep(preset.spec);
        const auto w = critical_window(preset.spec.fixed);
        const double step = (preset.spec.to - preset.spec.from) / (preset.spec.steps - 1);
        for (const auto& r : rows) {
            const bool near_edge = std::abs(r.value - w.jc2) < step || (w.jc1 && std::abs(r.value - *w.jc1) < step);
            if (!near_edge) CHECK(r.in_window == w.contains(r.value));
        }
    }
}

TEST_CASE("field sweep decreases HS-MIN") {
    SweepSpec s;
    s.vary = SweepParam::B;
    s.from = 0;
    s.to = 5;
    s.steps = 101;
    s.fixed = {.J = 2, .Jz = -1, .gamma = 0.5};
    const auto rows = run_sweep(s);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].min_hs < rows[i - 1].min_hs);
}

TEST_CASE("CSV layout") {
    SweepSpec s;
    s.vary = SweepParam::B;
    s.from = 0;
    s.to = 1;
    s.steps = 3;
    s.fixed = {.J = 1};
    std::ostringstream os;
    write_csv(os, run_sweep(s));
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "param,value,concurrence,concurrence_half,min_hs,min_trace,min_trace_paper,min_fidelity,in_window");
    int count = 0;
    while (std::getline(is, line)) {
        ++count;
        CHECK(line.rfind("B,", 0) == 0);
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(count == 3);
    CHECK(os.str().find('\r') == std::string::npos);
}

TEST_CASE("figure presets") {
    CHECK(figure_presets(1).size() == 1);
    CHECK(figure_presets(2).size() == 2);
    CHECK(figure_presets(4).size() == 4);
    CHECK(figure_presets(5).front().spec.fixed.gamma == 0.5);
    CHECK_THROWS_AS(figure_presets(0), UsageError);
    CHECK_THROWS_AS(figure_presets(6), UsageError);
}
