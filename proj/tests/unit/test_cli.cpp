// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <arcspace/cli.hpp>

#include "doctest.h"
#include "json.hpp"

using arcspace::run_cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

// "@name.sys" expands to the shipped example file.
Run cli(std::vector<std::string> args)
{
    for (auto &a : args) {
        if (!a.empty() && a[0] == '@') {
            a = std::string(ARCSPACE_EXAMPLES_DIR) + "/" + a.substr(1);
        }
    }
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Set ARCSPACE_UPDATE_GOLDEN=1 to rewrite the golden files from the current output.
void golden(const std::string &name, const std::vector<std::string> &args)
{
    const Run r = cli(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::filesystem::path path = std::filesystem::path(ARCSPACE_GOLDEN_DIR) / (name + ".txt");
    if (std::getenv("ARCSPACE_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path) << r.out;
    }
    INFO("golden file " << path);
    CHECK(r.out == slurp(path));
    CHECK(cli(args).out == r.out);
}

} // namespace

TEST_CASE("golden outputs")
{
    golden("zdstar_whitney_d2", {"zdstar", "-f", "@whitney.sys", "-d", "2"});
    golden("lift_cusp", {"lift", "-f", "@cusp.sys", "--ybar", "(t^2+t^7, t^3)", "-N", "24"});
    golden("lift_cusp_json", {"lift", "-f", "@cusp.sys", "-N", "24", "--json"});
    golden("stratify_umbrella", {"stratify", "-f", "@whitney-umbrella.sys", "--y", "(0,0,t)"});
    golden("stratify_umbrella_arc", {"stratify", "-f", "@whitney-umbrella.sys"});
    golden("factorize_whitney", {"factorize", "-f", "@whitney.sys"});
    golden("unfactorize_whitney", {"unfactorize", "-f", "@whitney.sys", "--z", "(t^2, t, t^3)", "--a2", "(t, t^2)"});
    golden("membership_whitney", {"zdstar", "-f", "@whitney.sys", "-d", "1", "--z", "(t, t, 0)"});
    golden("deform_cusp", {"deform", "-f", "@cusp-deform.sys"});
    golden("deform_drinfeld", {"deform", "-f", "@drinfeld.sys"});
    golden("brieskorn_23", {"brieskorn", "--exponents", "2,3", "--lmax", "6", "--polys"});
}

TEST_CASE("factorize and unfactorize invert each other")
{
    const Run f = cli({"factorize", "-f", "@whitney.sys", "--y", "(t^2 + t^5, t, t^3 + 2*t^6 + t^9)", "-N",
                       "14", "--json"});
    REQUIRE(f.code == 0);
    const auto doc = nlohmann::json::parse(f.out);
    const std::string z = "(" + doc["z"][0]["series"].get<std::string>() + ", " + doc["z"][1]["series"].get<std::string>()
                          + ", " + doc["z"][2]["series"].get<std::string>() + ")";
    const std::string a2
        = "(" + doc["a2"][0]["series"].get<std::string>() + ", " + doc["a2"][1]["series"].get<std::string>() + ")";
    const Run u = cli({"unfactorize", "-f", "@whitney.sys", "-d", "2", "-N", "14", "--z", z, "--a2", a2, "--json"});
    REQUIRE(u.code == 0);
    const auto y = nlohmann::json::parse(u.out)["y"];
    CHECK(y[0]["series"] == "t^2 + t^5");
    CHECK(y[1]["series"] == "t");
    CHECK(y[2]["series"] == "t^3 + 2*t^6 + t^9");
}

TEST_CASE("error classes and exit codes")
{
    const Run lib = cli({"lift", "-f", "@whitney.sys", "--ybar", "(t + t^3, t, t^2)", "--json"});
    CHECK(lib.code == 1);
    CHECK(nlohmann::json::parse(lib.out)["error"]["class"] == "InsufficientApproximation");
    CHECK(lib.err.rfind("error: InsufficientApproximation: ", 0) == 0);

    const Run usage = cli({"frobnicate"});
    CHECK(usage.code == 2);
    CHECK(usage.err.rfind("error: UsageError: ", 0) == 0);

    const Run missing = cli({"stratify", "-f", "/nonexistent/x.sys"});
    CHECK(missing.code == 2);
    CHECK(missing.err.rfind("error: IOError: ", 0) == 0);

    const Run parse = cli({"stratify", "-f", "@whitney.sys", "--y", "(t, t +)"});
    CHECK(parse.code == 2);
    CHECK(parse.err.rfind("error: ParseError: ", 0) == 0);

    const Run nofile = cli({"lift"});
    CHECK(nofile.code == 2);

    const Run notsol = cli({"factorize", "-f", "@whitney.sys", "--y", "(t^2, t, t^4)"});
    CHECK(notsol.code == 1);
    CHECK(notsol.err.rfind("error: NotASolution: ", 0) == 0);
}

TEST_CASE("help exits cleanly")
{
    const Run h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("stratify") != std::string::npos);
}

TEST_CASE("selftest runs a single criterion")
{
    const Run r = cli({"selftest", "--criterion", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS   7", 0) == 0);
}
