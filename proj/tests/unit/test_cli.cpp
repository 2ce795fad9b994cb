#include <doctest.h>

#include "support/random_poly.hpp"
#include "susp/cli.hpp"
#include "susp/parse.hpp"

#include <json.hpp>

#include <cstdlib>

using namespace susp;
using nlohmann::json;

namespace {

CliResult run(std::vector<std::string> args) { return run_cli(args); }

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    return json::parse(run_cli(args).out);
}

}  // namespace

TEST_CASE("cli examples") {
    auto r = run({"--ring", "QQ[x,y]", "--f", "(x-1)*x*y+1", "report"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("factorial:               yes") != std::string::npos);
    CHECK(r.out.find("Cl(X):                   0") != std::string::npos);

    auto j = run_json({"--ring", "QQ[x,y]", "--f", "(x-1)*x*y+1", "report"});
    CHECK(j["factorial"] == true);
    CHECK(j["hypersurface_smooth"] == true);
    CHECK(j["class_group"]["group"] == "0");

    j = run_json({"--ring", "QQ[x]", "--f", "x^2", "class-group"});
    CHECK(j["group"] == "Z/2");
    CHECK(j["invariant_factors"] == json::array({2}));

    r = run({"--ring", "QQ[x,y]", "nf", "(x-1)*x*y + 1"});
    CHECK(r.out == "x^2*y - x*y + 1\n");
    r = run({"--ring", "QQ[x]", "--f", "x", "nf", "u*v"});
    CHECK(r.out == "x\n");
    r = run({"--ring", "QQ[x]", "nf", "x^^2"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.rfind("error[syntax_error]", 0) == 0);

    r = run({"verify-paper"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli verbs and exit codes") {
    CHECK(run({"--ring", "QQ[x]", "--f", "x", "is-prime"}).exit_code == 0);
    CHECK(run({"--ring", "QQ[x]", "--f", "x^2", "is-prime"}).exit_code == 1);
    CHECK(run({"--ring", "QQ[x]", "--f", "x", "is-prime", "v+1"}).exit_code == 0);
    CHECK(run({"--ring", "QQ[x]", "--f", "x", "is-prime", "x+u"}).exit_code == 1);
    CHECK(run({"--ring", "QQ[x]", "--f", "x", "is-unit", "3"}).exit_code == 0);
    CHECK(run({"--ring", "QQ[x]", "--f", "x", "is-unit", "u"}).exit_code == 1);
    CHECK(run({"--ring", "QQ[x,y]", "smooth", "x*y"}).exit_code == 1);
    CHECK(run({"--ring", "QQ[x,y]", "--f", "(x-1)*x*y+1", "smooth"}).exit_code == 0);

    auto j = run_json({"--ring", "QQ[x]", "--f", "x", "factor", "x+u"});
    CHECK(j["ufd"] == true);
    CHECK(j["factors"].size() == 2);
    j = run_json({"--ring", "QQ[x,y]", "--f", "x*y", "factor", "u"});
    CHECK(j["ufd"] == false);
    j = run_json({"--ring", "QQ[x]", "--f", "x", "mul", "u", "v"});
    CHECK(j["result"] == "x");
    j = run_json({"snf", "[[2,4],[6,8]]"});
    CHECK(j["cokernel"] == "Z/2 ⊕ Z/4");
    CHECK(j["D"] == json::parse("[[2,0],[0,4]]"));

    auto r = run({"--ring", "QQ[y1,y2]", "fitting", R"([["y1+1","-y1"]])", "1"});
    CHECK(r.exit_code == 0);
    r = run({"--ring", "QQ[y1,y2]", "fitting", R"([["y1","0"],["0","y2"]])", "1"});
    CHECK(r.exit_code == 1);
    r = run({"--ring", "QQ[y1,y2]", "--cols", "2", "fitting", "[]", "1"});
    CHECK(r.exit_code == 1);
    j = run_json({"--gm-example", "fitting"});
    CHECK(j["verdict"] == "inconclusive: presentation possibly incomplete");
    CHECK(j["known_relations"] == json::parse(R"([["y1 + 1", "-y1"]])"));
    // a leading '-' operand is an operand, not an option
    CHECK(run({"--ring", "QQ[x]", "nf", "-x"}).out == "-x\n");
}

TEST_CASE("cli errors") {
    auto r = run({"bogus"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.rfind("error[usage]", 0) == 0);
    r = run({"report"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--ring") != std::string::npos);
    r = run({"--ring", "QQ[x]", "--f", "0", "report", "--json"});
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.out)["error"]["code"] == "zero_f");
    r = run({"--ring", "QQ[x]", "nf", "z"});
    CHECK(r.err.rfind("error[unknown_variable]", 0) == 0);
    r = run({"--ring", "QQ[x]", "nf"});
    CHECK(r.err.rfind("error[invalid_argument]", 0) == 0);
    CHECK(run({"--help"}).exit_code == 0);

    setenv("SUSP_PAIR_BUDGET", "many", 1);
    r = run({"--ring", "QQ[x,y]", "smooth", "x*y"});
    CHECK(r.err.rfind("error[invalid_argument]", 0) == 0);
    setenv("SUSP_PAIR_BUDGET", "1", 1);
    r = run({"--ring", "QQ[x,y,z]", "smooth", "x^3*y + y^3*z + z^3*x"});
    CHECK(r.err.rfind("error[resource_limit]", 0) == 0);
    unsetenv("SUSP_PAIR_BUDGET");
}

TEST_CASE("property: parse/print round trip through nf") {
    auto R = make_ring({"x", "y", "z"});
    testing::PolyGen gen(R, 61);
    for (int i = 0; i < 200; ++i) {
        MultiPoly p = gen.poly(5, 3, 9);
        auto r = run({"--ring", "QQ[x,y,z]", "nf", p.to_string()});
        REQUIRE(r.exit_code == 0);
        CHECK(parse_polynomial(r.out, R) == p);
        CHECK(r.out == p.to_string() + "\n");
    }
}

TEST_CASE("property: verify-paper is deterministic") {
    auto a = run({"verify-paper"});
    auto b = run({"verify-paper"});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}
