#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "charmod/anomaly/report.hpp"
#include "charmod/anomaly/verify.hpp"
#include "cli.hpp"

using namespace charmod;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content)
{
    const fs::path p = fs::temp_directory_path() / ("charmod_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("verify exit codes")
{
    const Run one = run({"verify", "--id", "wfh_main"});
    CHECK(one.code == 0);
    CHECK(one.out.rfind("wfh_main: PASS", 0) == 0);
    CHECK(run({"verify", "--id", "nosuch"}).code == 2);
    CHECK(run({"verify", "--id", "differ1"}).code == 1);
    CHECK(run({"verify", "--id", "o1,o2", "--order", "2"}).code == 0);
    CHECK(run({"verify", "--id", "o1", "--order", "1"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify all as JSON round trips")
{
    const Run r = run({"verify", "--id", "all", "--order", "6", "--format", "json"});
    // differ1 and differ2 are reported as failures.
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 23);
    int failures = 0;
    for (const auto& item : j) {
        const VerificationReport rep = report_from_json(item);
        CHECK(report_to_json(rep) == item);
        failures += rep.pass ? 0 : 1;
    }
    CHECK(failures == 2);
    CHECK(j[0]["id"] == "wfh_main");
    CHECK(j[22]["id"] == "differ2");
}

TEST_CASE("output file")
{
    const fs::path p = fs::temp_directory_path() / "charmod_cli_out.json";
    fs::remove(p);
    const Run r = run({"verify", "--id", "pc_theorem", "--format", "json", "--output", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(p);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at(0)["status"] == "pass");
}

TEST_CASE("expand")
{
    const Run a = run({"expand", "--class", "Ahat", "--cap", "12"});
    CHECK(a.code == 0);
    CHECK(a.out.find("Ahat = 1 - 1/24*p1 + 7/5760*p1^2 - 1/1440*p2") == 0);
    const Run q = run({"expand", "--class", "Qc", "--order", "2", "--cap", "4", "--format", "json"});
    CHECK(q.code == 0);
    const auto j = nlohmann::json::parse(q.out);
    CHECK(j["coefficients"][0]["value"] == "1 + 1/6*x");
    CHECK(run({"expand", "--class", "Zeta"}).code == 2);
    CHECK(run({"expand", "--class", "Wc", "--route", "sideways"}).code == 2);
}

TEST_CASE("lattice files")
{
    const fs::path good =
        temp_file("rank1.json", R"({"rank": 1, "trilinear": [[[1]]], "a": [2], "b": [4], "modulus": 24, "seed": 1})");
    const Run r = run({"lattice", "--file", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("characteristic: true") != std::string::npos);
    CHECK(r.out.find("bhat (mod 24): [4]") != std::string::npos);
    const Run js = run({"lattice", "--file", good.string(), "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["bhat"] == nlohmann::json::array({4}));
    CHECK(j["relations"]["integrality_checked"] == true);

    const fs::path nochar = temp_file("nochar.json", R"({"rank": 1, "trilinear": [[[1]]], "a": [1]})");
    const Run n = run({"lattice", "--file", nochar.string()});
    CHECK(n.code == 1);
    CHECK(n.out.find("no solution") != std::string::npos);

    const fs::path broken = temp_file("broken.json", R"({"rank": 1, "trilinear": )");
    CHECK(run({"lattice", "--file", broken.string()}).code == 2);
    const fs::path asym =
        temp_file("asym.json", R"({"rank": 2, "trilinear": [[[1, 2], [0, 0]], [[0, 0], [0, 0]]], "a": [0, 0]})");
    CHECK(run({"lattice", "--file", asym.string()}).code == 2);
    CHECK(run({"lattice", "--file", "/nonexistent/lattice.json"}).code == 2);
}

TEST_CASE("e8 table")
{
    const Run r = run({"e8", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("equal: true") != std::string::npos);
    CHECK(r.out.find("4124") != std::string::npos);
    CHECK(run({"e8", "--order", "40"}).code == 2);
}

TEST_CASE("theta-check")
{
    CHECK(run({"theta-check", "--kind", "all", "--tau", "2i", "--v", "0.3+0.1i"}).code == 0);
    CHECK(run({"theta-check", "--kind", "theta2", "--tau", "0.25+1.5i", "--v", "-0.2+0.05i", "--tol", "1e-9"}).code == 0);
    CHECK(run({"theta-check", "--kind", "E2", "--tol", "1e-300"}).code == 4);
    CHECK(run({"theta-check", "--tau", "1-1i"}).code == 4);
    CHECK(run({"theta-check", "--tau", "two"}).code == 2);
    CHECK(run({"theta-check", "--kind", "theta9"}).code == 2);
    const Run j = run({"theta-check", "--kind", "theta", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out).at(0)["status"] == "pass");
}

TEST_CASE("the installed binary reports exit codes to the shell")
{
    const std::string bin = CHARMOD_BIN;
    auto status = [&](const std::string& args) {
        const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("verify --id wfh_main") == 0);
    CHECK(status("verify --id differ2") == 1);
    CHECK(status("verify --id nosuch") == 2);
    CHECK(status("theta-check --tol 1e-300") == 4);
}
