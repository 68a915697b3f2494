/*
   Copyright 2026 The z4ucyclic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "z4u/cli.hpp"
#include "z4u/specformat.hpp"

using namespace z4u;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count subcommand prints the census") {
    auto r = run({"count", "7", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "293687"));
    CHECK(run({"count", "7", "2"}).out.find("1183") != std::string::npos);
}

TEST_CASE("selfdual --count-only") {
    auto r = run({"selfdual", "7", "4", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "791\n");
}

TEST_CASE("distance prints the parameter triple") {
    auto r = run({"distance", "7", "--specs", "u^4;u^3;u^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "[28, 6, 24]\n");
    auto r2 = run({"distance", "7", "--specs", "u^3;u^4;u^3+2x^2u^2"});
    CHECK(r2.out == "[28, 8, 20]\n");
    // twist form with explicit unit list
    auto r3 = run({"distance", "7", "--specs", "u^3;u^4;u^3+2u^2*(x^2)"});
    CHECK(r3.out == "[28, 8, 20]\n");
}

TEST_CASE("factor output mentions the basic irreducibles") {
    auto r = run({"factor", "7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "x^3+2x^2+x+3"));
    CHECK(contains(r.out, "x^3+3x^2+2x+3"));
    CHECK(contains(r.out, "lambda=1"));
}

TEST_CASE("ideals streams every ideal with its size") {
    auto r = run({"ideals", "1", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "7 ideals"));
    CHECK(contains(r.out, "<u+2*(1)>"));
}

TEST_CASE("dual subcommand prints the dual tuple") {
    auto r = run({"dual", "7", "4", "--specs", "u^4;u^3;u^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "<1>;<1>;<u>\n");
}

TEST_CASE("bad input yields exit code 2") {
    CHECK(run({"count", "6", "4"}).code == 2);       // even n
    CHECK(run({"count", "7", "1"}).code == 2);       // k too small
    CHECK(run({"distance", "7", "--specs", "u^4"}).code == 2);  // wrong arity
    CHECK(run({"distance", "7", "--specs", "b^4;u^3;u^4"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("budget exhaustion yields exit code 3") {
    auto r = run({"distance", "7", "--specs", "1;1;1", "--budget", "1024"});
    CHECK(r.code == 3);
}

TEST_CASE("json artifact is written and parseable") {
    std::string path = "cli_test_artifact.json";
    auto r = run({"distance", "7", "--specs", "u^4;u^3;u^4", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j["length"] == 28);
    CHECK(j["log2_size"] == 6);
    CHECK(j["min_lee_distance"] == 24);
    std::remove(path.c_str());
}

TEST_CASE("csv artifact for the generator matrix") {
    std::string path = "cli_test_matrix.csv";
    auto r = run({"gray", "7", "--specs", "u^4;u^3;u^4", "--format", "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[28, 6, 24]"));
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string line;
    int rows = 0, cols = 0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        ++rows;
        cols = 1;
        for (char c : line)
            if (c == ',') ++cols;
    }
    CHECK(rows == 28);  // 4 * (7 spanning rows)
    CHECK(cols == 28);
    std::remove(path.c_str());
}

TEST_CASE("selfdual census artifact is a json array of descriptors") {
    std::string path = "cli_test_census.json";
    auto r = run({"selfdual", "7", "4", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    REQUIRE(j.is_array());
    CHECK(j.size() == 791);
    CHECK(j[0]["n"] == 7);
    CHECK(j[0]["k"] == 4);
    CHECK(j[0]["specs"].size() == 3);
    CHECK(j[0]["specs"][0].contains("case"));
    std::remove(path.c_str());
}

TEST_CASE("deterministic output") {
    auto a = run({"selfdual", "7", "4"});
    auto b = run({"selfdual", "7", "4"});
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "791 self-dual codes"));
}

TEST_CASE("thread count flag is accepted and does not change results") {
    auto a = run({"distance", "7", "--specs", "u^4;u^3;u^4", "--threads", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == "[28, 6, 24]\n");
}

TEST_CASE("element and polynomial json formats") {
    // polynomials serialize as ascending coefficient arrays: x+3 -> [3,1]
    CHECK(poly_to_json(Z4Poly({3, 1})) == nlohmann::json({3, 1}));
    CHECK(poly_to_json(F2Poly({1, 1, 0, 1})) == nlohmann::json({1, 1, 0, 1}));
    // mixed elements as k ascending coefficient arrays
    RingPtr ring = canonical_galois_ring(3);
    MixedEl e(ring, 2);
    e.set_u_coeff(0, Z4Poly({1, 0, 2}));
    e.set_u_coeff(1, Z4Poly({0, 3}));
    nlohmann::json j = mixed_to_json(e);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == nlohmann::json({1, 0, 2}));
    CHECK(j[1] == nlohmann::json({0, 3}));
    // ideal specs carry case tags and the h coefficient arrays
    ChainEl h(ring->field, 1);
    h.set_u_coeff(0, F2Poly({0, 1}));
    nlohmann::json s = spec_to_json(IdealSpec::case_IV(4, 3, 0, h));
    CHECK(s["case"] == "IV");
    CHECK(s["i"] == 3);
    CHECK(s["d"] == 3);
    CHECK(s["k"] == 4);
    CHECK(s["h"][0] == nlohmann::json({0, 1}));
}

TEST_CASE("codeword csv rows are column-major by u-power") {
    auto sys = FactorSystem::build(1);
    CodeElement w(1, 4);
    w.set(0, 0, 1);
    w.set(0, 1, 2);
    w.set(0, 2, 3);
    w.set(0, 3, 0);
    CHECK(codeword_csv_row(w) == "1,2,3,0");
    // n=3: all of block u^0 before block u^1
    CodeElement v(3, 2);
    v.set(0, 0, 1);
    v.set(2, 0, 2);
    v.set(1, 1, 3);
    CHECK(codeword_csv_row(v) == "1,0,2,0,3,0");
}

TEST_CASE("parser round-trips printed ideals") {
    auto sys = FactorSystem::build(7);
    for (int j = 0; j < sys->r(); ++j) {
        const FieldPtr& field = sys->factor(j).ring->field;
        for (const auto& spec : enumerate_ideal_specs(field, 4)) {
            IdealSpec back = parse_ideal_term(spec.to_string(), field, 4);
            CHECK(back == spec);
        }
    }
}
