#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sqbound/cli.hpp"

using sqbound::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("spectra") {
    const Result r = call({"spectra", "--gen", "cycle:6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q = 4.000000"));
    CHECK(contains(r.out, "mu = 4.000000"));
    CHECK(contains(r.out, "rho = 2.000000"));
    CHECK(contains(r.out, "perron_max_vertex"));
}

TEST_CASE("bounds and compare from parameters") {
    const Result b = call({"bounds", "--params", "n=6,delta=5,D=1,k=5"});
    CHECK(b.code == 0);
    CHECK(contains(b.out, "eq3 = 0.222222"));
    CHECK(contains(b.out, "eq4 = 0.253968"));
    CHECK(contains(b.out, "dominant = eq4"));

    const Result c = call({"compare", "--params", "n=6,delta=2,D=3,k=2"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "threshold_lo = 2.109400"));
    CHECK(contains(c.out, "dominant = eq3"));

    CHECK(call({"bounds", "--gen", "complete:6"}).out == b.out);
    CHECK(call({"bounds", "--params", "n=6,delta=5"}).code == 3);
    CHECK(call({"bounds", "--params", "n=6,delta=five,D=1,k=5"}).code == 3);
    CHECK(call({"bounds", "--params", "n=6,delta=5,D=0,k=5"}).code == 2);
}

TEST_CASE("verify") {
    const Result r = call({"verify", "--spec", "cycle:6", "--spec", "complete:6"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 22);  // header + 21 records
    CHECK(contains(r.err, "violations: 0"));

    const Result json = call({"verify", "--spec", "cycle:5", "--output", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.front() == '[');

    CHECK(call({"verify"}).code == 0);
    CHECK(call({"verify", "--spec", "nonsense:3"}).code == 3);
    CHECK(call({"verify", "--spec", "cycle:6", "--output", "xml"}).code == 2);
}

TEST_CASE("table") {
    const Result r = call({"table"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "C12"));
    CHECK(contains(r.out, "MISMATCH"));
    CHECK(contains(r.out, "G21"));
}

TEST_CASE("gen round trip through a file") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto g6 = (dir / "sqbound_cli_petersen.g6").string();
    const auto el = (dir / "sqbound_cli_petersen.txt").string();
    CHECK(call({"gen", "--gen", "petersen", "--out", g6}).code == 0);
    CHECK(call({"gen", "--gen", "petersen", "--format", "edgelist", "--out", el}).code == 0);

    const Result direct = call({"spectra", "--gen", "petersen"});
    CHECK(call({"spectra", "--input", g6}).out == direct.out);
    CHECK(call({"spectra", "--input", el, "--format", "edgelist"}).out == direct.out);
    CHECK(call({"gen", "--gen", "petersen"}).out == "IheA@GUAo\n");
    std::filesystem::remove(g6);
    std::filesystem::remove(el);
}

TEST_CASE("error exit codes") {
    CHECK(call({"spectra", "--input", "/nonexistent/graph.g6"}).code == 4);
    CHECK(call({"spectra", "--gen", "cycle:2"}).code == 2);
    CHECK(call({"spectra", "--gen", "cycle:x"}).code == 3);
    CHECK(call({"--tol", "-1", "spectra", "--gen", "cycle:6"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"bounds", "--gen", "path:2", "--format", "dot"}).code == 2);

    const auto bad = (std::filesystem::temp_directory_path() / "sqbound_cli_bad.g6").string();
    {
        std::ofstream(bad) << "C\n";
    }
    const Result r = call({"spectra", "--input", bad});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "parse error"));
    std::filesystem::remove(bad);

    CHECK(call({"bounds", "--input", "/nonexistent"}).code == 4);
    CHECK(call({"spectra", "--gen", "cycle:6", "--input", "x"}).code == 2);
}

TEST_CASE("disconnected graphs") {
    const auto path = (std::filesystem::temp_directory_path() / "sqbound_cli_two.txt").string();
    {
        std::ofstream(path) << "4\n0 1\n2 3\n";
    }
    const Result s = call({"spectra", "--input", path, "--format", "edgelist"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "n/a (disconnected)"));
    CHECK(call({"bounds", "--input", path, "--format", "edgelist"}).code == 2);
    std::filesystem::remove(path);
}
