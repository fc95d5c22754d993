#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "xyzmin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = xyzmin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto colon = line.find(": ");
        if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return kv;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("xyzmin_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("point") {
    auto r = run({"point", "--J", "1", "--Jz", "1"});
    REQUIRE(r.status == 0);
    auto kv = parse_kv(r.out);
    CHECK(std::stod(kv["concurrence"]) == doctest::Approx(0.422469188455).epsilon(1e-11));
    CHECK(kv["jc1"] == "unbounded");

    r = run({"point", "--J", "0", "--Jz", "0"});
    REQUIRE(r.status == 0);
    kv = parse_kv(r.out);
    for (auto key : {"concurrence", "min_hs", "min_trace", "min_trace_paper", "min_fidelity"}) CHECK(kv[key] == "0");
    CHECK(kv["jc2"] == "undefined");

    r = run({"point", "--J", "1", "--Jz", "0", "--B", "1"});
    REQUIRE(r.status == 0);
    kv = parse_kv(r.out);
    CHECK(kv["min_hs"] == kv["min_hs_thermal"]);
}

TEST_CASE("negative values and usage errors") {
    auto r = run({"point", "--J", "2", "--Jz", "-1", "--gamma", "-0.5"});
    CHECK(r.status == 0);
    CHECK(parse_kv(r.out)["Jz"] == "-1");
    CHECK(run({"point", "--J", "abc"}).status == 2);
    CHECK(run({"point", "--beta", "0"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"sweep", "--vary", "Jx", "--from", "0", "--to", "1", "--steps", "3", "--out", "x.csv"}).status == 2);
    CHECK(run({"sweep", "--vary", "B", "--from", "1", "--to", "0", "--steps", "3", "--out", "x.csv"}).status == 2);
    CHECK(run({"figure", "9"}).status == 2);
}

TEST_CASE("critical") {
    auto r = run({"critical", "--J", "1", "--gamma", "0", "--B", "0"});
    REQUIRE(r.status == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["jc1"] == "unbounded");
    CHECK(std::stod(kv["jc2"]) == doctest::Approx(-0.161).epsilon(1e-2));
    r = run({"critical", "--J", "5"});
    CHECK(std::stod(parse_kv(r.out)["jc2"]) == doctest::Approx(-4.306).epsilon(1e-3));
    r = run({"critical", "--J", "0"});
    CHECK(r.status == 2);
    CHECK(r.err.find("J = 0") != std::string::npos);
}

TEST_CASE("sweep writes CSV and gnuplot script") {
    const fs::path dir = scratch_dir("sweep");
    const auto csv = dir / "b.csv";
    auto r = run({"sweep", "--J", "2", "--Jz", "-1", "--gamma", "0.5", "--vary", "B", "--from", "0", "--to", "5",
                  "--steps", "2", "--out", csv.string(), "--gnuplot"});
    REQUIRE(r.status == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("param,value,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(fs::exists(dir / "b.gp"));

    // The endpoint row equals the point report.
    auto kv = parse_kv(run({"point", "--J", "2", "--Jz", "-1", "--gamma", "0.5", "--B", "5"}).out);
    CHECK(text.find("B,5," + kv["concurrence"] + ",") != std::string::npos);

    CHECK(run({"sweep", "--vary", "B", "--from", "0", "--to", "1", "--steps", "3", "--out",
               (dir / "missing" / "x.csv").string()})
              .status == 1);
}

TEST_CASE("config file with flag precedence") {
    const fs::path dir = scratch_dir("config");
    {
        std::ofstream cfg(dir / "params.ini");
        cfg << "J=1\nJz=1\nB=0.25\n";
    }
    auto r = run({"point", "--config", (dir / "params.ini").string(), "--B", "0"});
    REQUIRE(r.status == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["J"] == "1");
    CHECK(kv["B"] == "0");
    CHECK(std::stod(kv["concurrence"]) == doctest::Approx(0.422469188455).epsilon(1e-11));
}

TEST_CASE("figure output is deterministic") {
    const fs::path a = scratch_dir("fig_a");
    const fs::path b = scratch_dir("fig_b");
    REQUIRE(run({"figure", "2", "--out", a.string()}).status == 0);
    REQUIRE(run({"figure", "2", "--out", b.string()}).status == 0);
    for (auto name : {"fig2_J1.csv", "fig2_J5.csv"}) {
        CHECK(fs::exists(a / name));
        CHECK(slurp(a / name) == slurp(b / name));
    }
}

TEST_CASE("verify") {
    auto r = run({"verify", "--samples", "1", "--seed", "3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verify: ok") != std::string::npos);
    CHECK(r.out.find("zero-field point gamma=1 J=1 Jz=-3") != std::string::npos);
    CHECK(run({"verify", "--samples", "1", "--seed", "3"}).out == r.out);
    CHECK(run({"verify", "--samples", "0"}).status == 2);
}
