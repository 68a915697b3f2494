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

#include <random>
#include <set>

#include "z4u/codes.hpp"
#include "z4u/errors.hpp"

using namespace z4u;

namespace {

// The three length-7 specs used throughout: (<u^4>, <u^3>, <u^4>).
CyclicCode sample_code_7_4(const FactorSystemPtr& sys) {
    std::vector<IdealSpec> specs;
    specs.push_back(IdealSpec::zero_ideal(sys->factor(0).ring->field, 4));
    specs.push_back(IdealSpec::case_I(sys->factor(1).ring->field, 4, 3));
    specs.push_back(IdealSpec::zero_ideal(sys->factor(2).ring->field, 4));
    return assemble_code(sys, 4, std::move(specs));
}

}  // namespace

TEST_CASE("factor system for n=7") {
    auto sys = FactorSystem::build(7);
    CHECK(sys->n() == 7);
    REQUIRE(sys->r() == 3);
    CHECK(sys->factor(0).f == Z4Poly({3, 1}));
    CHECK(sys->factor(1).f == Z4Poly({3, 1, 2, 1}));
    CHECK(sys->factor(2).f == Z4Poly({3, 2, 3, 1}));
    CHECK(sys->factor(0).d == 1);
    CHECK(sys->factor(1).d == 3);
    CHECK(sys->factor(2).d == 3);
    CHECK(sys->lambda() == 1);
    CHECK(sys->epsilon() == 1);
    CHECK(sys->sigma(0) == 0);
    CHECK(sys->sigma(1) == 2);
    CHECK(sys->sigma(2) == 1);
    CHECK(sys->factor(0).delta == 3);  // reciprocal(x+3) = 3(x+3)
    CHECK(sys->factor(1).delta == 3);  // reciprocal(f_2) = 3 f_3
    CHECK(sys->factor(0).e == Z4Poly({3, 3, 3, 3, 3, 3, 3}));
    CHECK(sys->factor(1).e == Z4Poly({1, 3, 3, 2, 3, 2, 2}));
    CHECK(sys->factor(2).e == Z4Poly({1, 2, 2, 3, 2, 3, 3}));
}

TEST_CASE("factor system for n=1 and n=3") {
    auto s1 = FactorSystem::build(1);
    CHECK(s1->r() == 1);
    CHECK(s1->lambda() == 1);
    CHECK(s1->epsilon() == 0);

    auto s3 = FactorSystem::build(3);
    REQUIRE(s3->r() == 2);
    CHECK(s3->factor(0).d == 1);
    CHECK(s3->factor(1).d == 2);
    CHECK(s3->lambda() == 2);  // x^2+x+1 lifts to a self-reciprocal factor
    CHECK(s3->epsilon() == 0);
    CHECK(reciprocal(s3->factor(1).f) == s3->factor(1).f * s3->factor(1).delta);
}

TEST_CASE("factor system invariants across odd lengths") {
    for (int n = 1; n <= 63; n += 2) {
        auto sys = FactorSystem::build(n);
        CHECK(sys->lambda() + 2 * sys->epsilon() == sys->r());
        CHECK(sys->lambda() >= 1);
        for (int j = 0; j < sys->r(); ++j) {
            CHECK(sys->sigma(sys->sigma(j)) == j);
            if (j < sys->lambda()) CHECK(sys->sigma(j) == j);
            CHECK((sys->factor(j).delta == 1 || sys->factor(j).delta == 3));
        }
        for (int l = 1; l <= sys->epsilon(); ++l)
            CHECK(sys->sigma(sys->lambda() + l - 1) == sys->lambda() + sys->epsilon() + l - 1);
    }
}

TEST_CASE("code census for n=7") {
    CHECK(count_cyclic_codes(7, 2) == BigUint(1183));
    CHECK(count_cyclic_codes(7, 3) == BigUint(12493));
    CHECK(count_cyclic_codes(7, 4) == BigUint(293687));
    CHECK(count_cyclic_codes(7, 5) == BigUint(2481997));
}

TEST_CASE("census equals the spec product space size, summed one by one") {
    // walk the product space of per-factor ideal counts without assembling codes
    auto sys = FactorSystem::build(7);
    std::uint64_t total = 1;
    for (int j = 0; j < sys->r(); ++j)
        total *= enumerate_ideal_specs(sys->factor(j).ring->field, 4).size();
    CHECK(BigUint(total) == count_cyclic_codes(7, 4));
}

TEST_CASE("code cardinalities") {
    auto sys = FactorSystem::build(7);
    {
        std::vector<IdealSpec> specs;
        for (int j = 0; j < 3; ++j) specs.push_back(IdealSpec::unit_ideal(sys->factor(j).ring->field, 4));
        CHECK(assemble_code(sys, 4, specs).log2_size() == 2 * 4 * 7);  // whole space 4^{kn}
    }
    {
        std::vector<IdealSpec> specs;
        for (int j = 0; j < 3; ++j) specs.push_back(IdealSpec::zero_ideal(sys->factor(j).ring->field, 4));
        CHECK(assemble_code(sys, 4, specs).log2_size() == 0);
    }
    CHECK(sample_code_7_4(sys).log2_size() == 6);  // 2^6 codewords
}

TEST_CASE("codeword enumeration sizes and distinctness") {
    auto sys = FactorSystem::build(7);
    CyclicCode code = sample_code_7_4(sys);
    auto words = enumerate_codewords(code);
    CHECK(words.size() == 64);
    std::set<CodeElement> dedup(words.begin(), words.end());
    CHECK(dedup.size() == 64);
    CHECK(words[0].is_zero());

    // zero code has exactly the zero word
    std::vector<IdealSpec> zero_specs;
    for (int j = 0; j < 3; ++j) zero_specs.push_back(IdealSpec::zero_ideal(sys->factor(j).ring->field, 4));
    auto zero_words = enumerate_codewords(assemble_code(sys, 4, zero_specs));
    REQUIRE(zero_words.size() == 1);
    CHECK(zero_words[0].is_zero());
}

TEST_CASE("length-1 code with spec <2> enumerates {0, 2, 2u, 2+2u}") {
    auto sys = FactorSystem::build(1);
    std::vector<IdealSpec> specs{IdealSpec::case_II(sys->factor(0).ring->field, 2, 0)};
    auto words = enumerate_codewords(assemble_code(sys, 2, specs));
    REQUIRE(words.size() == 4);
    std::set<std::vector<std::uint8_t>> flats;
    for (const auto& w : words) flats.insert(w.flat());
    CHECK(flats.count({0, 0}) == 1);
    CHECK(flats.count({2, 0}) == 1);
    CHECK(flats.count({0, 2}) == 1);
    CHECK(flats.count({2, 2}) == 1);
}

TEST_CASE("codes are closed under x- and u-multiplication") {
    auto sys = FactorSystem::build(7);
    CyclicCode code = sample_code_7_4(sys);
    auto words = enumerate_codewords(code);
    std::set<CodeElement> member(words.begin(), words.end());
    for (const auto& w : words) {
        CHECK(member.count(w.times_x()) == 1);
        CHECK(member.count(w.times_u()) == 1);
    }
    // x- and u-multiplication commute
    for (const auto& w : words) CHECK(w.times_x().times_u() == w.times_u().times_x());
}

TEST_CASE("membership agrees with enumeration") {
    auto sys = FactorSystem::build(7);
    CyclicCode code = sample_code_7_4(sys);
    auto words = enumerate_codewords(code);
    for (const auto& w : words) CHECK(codeword_membership(code, w));

    // the generator image e_2 u^3 belongs, e_2 u^2 does not
    const auto& fi = sys->factor(1);
    MixedEl u3 = MixedEl::u_power(fi.ring, 4, 3);
    MixedEl u2 = MixedEl::u_power(fi.ring, 4, 2);
    CHECK(codeword_membership(code, factor_contribution(*sys, 1, u3, 4)));
    CHECK(!codeword_membership(code, factor_contribution(*sys, 1, u2, 4)));

    // zero word belongs to every code
    CHECK(codeword_membership(code, CodeElement(7, 4)));

    // random non-codewords are rejected: flip one entry of a codeword
    int rejected = 0;
    for (const auto& w : words) {
        CodeElement tweaked = w;
        tweaked.set(0, 0, w.at(0, 0) + 1);
        if (!codeword_membership(code, tweaked)) ++rejected;
    }
    CHECK(rejected > 0);
}

TEST_CASE("enumeration size matches the cardinality product on several codes") {
    auto sys = FactorSystem::build(7);
    const FieldPtr f1 = sys->factor(0).ring->field;
    const FieldPtr f2 = sys->factor(1).ring->field;
    const FieldPtr f3 = sys->factor(2).ring->field;
    std::vector<std::vector<IdealSpec>> trials;
    {
        ChainEl h(f2, 1);
        h.set_u_coeff(0, F2Poly({0, 1}));
        trials.push_back({IdealSpec::case_II(f1, 4, 1), IdealSpec::case_IV(4, 3, 0, h),
                          IdealSpec::zero_ideal(f3, 4)});
    }
    trials.push_back({IdealSpec::case_V(f1, 4, 2, 1), IdealSpec::case_I(f2, 4, 3),
                      IdealSpec::case_I(f3, 4, 3)});
    for (auto& specs : trials) {
        CyclicCode code = assemble_code(sys, 4, specs);
        auto words = enumerate_codewords(code);
        CHECK(words.size() == (1ull << code.log2_size()));
        std::set<CodeElement> dedup(words.begin(), words.end());
        CHECK(dedup.size() == words.size());
    }
}

TEST_CASE("membership works on codes far beyond enumeration budgets") {
    // (<1>, <1>, <u>) has 2^50 codewords; membership is still exact
    auto sys = FactorSystem::build(7);
    std::vector<IdealSpec> specs{IdealSpec::unit_ideal(sys->factor(0).ring->field, 4),
                                 IdealSpec::unit_ideal(sys->factor(1).ring->field, 4),
                                 IdealSpec::case_I(sys->factor(2).ring->field, 4, 1)};
    CyclicCode code = assemble_code(sys, 4, specs);
    CHECK(code.log2_size() == 50);
    const auto& f3 = sys->factor(2);
    MixedEl one(f3.ring, 4);
    one.set_u_coeff(0, Z4Poly::one());
    CHECK(!codeword_membership(code, factor_contribution(*sys, 2, one, 4)));
    CHECK(codeword_membership(code, factor_contribution(*sys, 2, MixedEl::u_power(f3.ring, 4, 1), 4)));
    CHECK(codeword_membership(code, CodeElement(7, 4)));
}

TEST_CASE("codes are closed under R-scalar multiplication") {
    auto sys = FactorSystem::build(7);
    CyclicCode code = sample_code_7_4(sys);
    auto words = enumerate_codewords(code);
    std::set<CodeElement> member(words.begin(), words.end());
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> digit(0, 3);
    for (const auto& w : words) {
        std::vector<std::uint8_t> scalar(4);
        for (auto& v : scalar) v = static_cast<std::uint8_t>(digit(rng));
        CHECK(member.count(w.times_r(scalar)) == 1);
    }
    // the row view returns the R-coefficient at each position
    const CodeElement& w = words[5];
    for (int i = 0; i < 7; ++i) {
        auto row = w.r_coeff(i);
        for (int l = 0; l < 4; ++l) CHECK(row[l] == w.at(i, l));
    }
}

TEST_CASE("assembly validation") {
    auto sys = FactorSystem::build(7);
    std::vector<IdealSpec> too_few{IdealSpec::zero_ideal(sys->factor(0).ring->field, 4)};
    CHECK_THROWS_AS(assemble_code(sys, 4, too_few), bad_input);
    // wrong field (degree mismatch) for factor 1
    std::vector<IdealSpec> wrong{IdealSpec::zero_ideal(sys->factor(0).ring->field, 4),
                                 IdealSpec::zero_ideal(sys->factor(0).ring->field, 4),
                                 IdealSpec::zero_ideal(sys->factor(2).ring->field, 4)};
    CHECK_THROWS_AS(assemble_code(sys, 4, wrong), bad_input);
    // budget rejection
    std::vector<IdealSpec> whole;
    for (int j = 0; j < 3; ++j) whole.push_back(IdealSpec::unit_ideal(sys->factor(j).ring->field, 4));
    CHECK_THROWS_AS(enumerate_codewords(assemble_code(sys, 4, whole), 1 << 10), budget_exceeded);
}
