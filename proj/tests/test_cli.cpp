#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "vw/cli.hpp"
#include "vw/output.hpp"

using namespace vw;

namespace {
struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}
}  // namespace

TEST_CASE("horizontal command prints the symbolic polynomials") {
    RunResult r = run_cli({"horizontal", "--order", "3", "--symbolic"});
    CHECK(r.status == 0);
    CHECK(r.out == "normalization: (-2)^(-g - pg)\n"
                   "q^0: 1\n"
                   "q^1: -2*g + 2\n"
                   "q^2: 2*g^2 - 13*g + 11\n"
                   "q^3: -4/3*g^3 + 22*g^2 - 314/3*g + 84\n");
}

TEST_CASE("vertical command symbolic output") {
    RunResult r = run_cli({"vertical", "--rank", "2", "--symbolic"});
    CHECK(r.status == 0);
    CHECK(r.out == "(-2)^(-P2) * (c2 + 6*K2)\n");
}

TEST_CASE("compare-vw on the quintic") {
    RunResult r = run_cli({"compare-vw", "--surface", "quintic", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "EQUAL");
    CHECK(j["monopole"] == std::vector<std::string>{"1", "-10", "90", "-580"});
    CHECK(j["prediction"] == j["monopole"]);
    CHECK(j["two_exponent_equal"] == true);
    CHECK(j["vd_parity_matches"] == true);
    CHECK(j["parameters"]["surface"] == "quintic");
}

TEST_CASE("json output is byte-stable and round-trips") {
    RunResult a = run_cli({"monopole", "--surface", "quintic", "--json"});
    RunResult b = run_cli({"monopole", "--surface", "quintic", "--json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    Json parsed = Json::parse(a.out);
    CHECK(parsed.dump(2) + "\n" == a.out);

    RunResult c = run_cli({"compare-vw", "--symbolic", "--json"});
    Json reparsed = Json::parse(c.out);
    CHECK(reparsed.dump(2) + "\n" == c.out);
}

TEST_CASE("usage errors exit with status 2") {
    RunResult unknown_flag = run_cli({"horizontal", "--frobnicate"});
    CHECK(unknown_flag.status == 2);
    CHECK(unknown_flag.err.find("error") != std::string::npos);

    RunResult unknown_surface = run_cli({"monopole", "--surface", "torus"});
    CHECK(unknown_surface.status == 2);
    CHECK(unknown_surface.err.find("unknown surface") != std::string::npos);

    RunResult bad_noether = run_cli({"monopole", "--K2", "1", "--c2", "1"});
    CHECK(bad_noether.status == 2);
    CHECK(bad_noether.err.find("divisible by 12") != std::string::npos);

    RunResult no_subcommand = run_cli({});
    CHECK(no_subcommand.status == 2);
}

TEST_CASE("custom surface data flows through") {
    RunResult r = run_cli({"monopole", "--K2", "0", "--c2", "24", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["parameters"]["chi"] == 2);
    CHECK(j["parameters"]["g"] == 1);
}

TEST_CASE("diagonal-check reports agreement") {
    RunResult r = run_cli({"diagonal-check", "--g", "6", "--order", "8", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "EQUAL");
    CHECK(j["closed_form"] == j["residue"]);
    CHECK(j["closed_form"] == j["diagonal"]);
    CHECK(j["closed_form"] == j["tautological"]);
}

TEST_CASE("euler-series carries the exact shift") {
    RunResult r = run_cli({"euler-series", "--surface", "quintic", "--order", "4", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["shift"] == "-55/12");
    CHECK(j["parameters"]["e"] == 55);

    RunResult text = run_cli({"euler-series", "--e", "1", "--order", "3"});
    CHECK(text.out == "shift: q^(-1/12)\nq^0: 1\nq^1: 1\nq^2: 3\nq^3: 5\n");

    RunResult missing = run_cli({"euler-series", "--order", "3"});
    CHECK(missing.status == 2);
}

TEST_CASE("mixed command sweeps the index choices") {
    RunResult r = run_cli({"mixed", "--surface", "quintic", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["ijk_invariant"] == true);
    CHECK(j["bracket"] == "-540");
    CHECK(j["value"] == "-135/256");  // (-2)^(-10) * (-540)
}

TEST_CASE("closed form degenerates at genus one") {
    RunResult r = run_cli({"closed-form", "--g", "1", "--order", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "normalization: (-2)^(-pg - 1)\nq^0: 1\nq^1: 0\nq^2: 0\nq^3: 0\nq^4: 0\n");

    RunResult conflict = run_cli({"closed-form", "--g", "2", "--surface", "quintic"});
    CHECK(conflict.status == 2);
}

TEST_CASE("horizontal command evaluates at a surface") {
    RunResult r = run_cli({"horizontal", "--order", "2", "--surface", "quintic"});
    CHECK(r.status == 0);
    CHECK(r.out == "normalization: (-2)^(-10)\nq^0: 1\nq^1: -10\nq^2: 5\n");
}

TEST_CASE("selftest exits zero and reports every criterion") {
    RunResult r = run_cli({"selftest", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["criteria"].size() == 12);
}

TEST_CASE("rank-3 vertical includes the extra prime exponents") {
    RunResult r = run_cli({"vertical", "--rank", "3", "--symbolic", "--json"});
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["normalization"]["other_primes"]["3"] == "-P3");
    CHECK(j["bracket"] == "c2 + 57/2*K2");
}
