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

#include <algorithm>
#include <map>
#include <set>

#include "z4u/errors.hpp"
#include "z4u/idealenum.hpp"

using namespace z4u;

namespace {

std::map<IdealCase, std::uint64_t> case_histogram(const std::vector<IdealSpec>& specs) {
    std::map<IdealCase, std::uint64_t> h;
    for (const auto& s : specs) ++h[s.kase()];
    return h;
}

}  // namespace

TEST_CASE("the seven ideals of Z4 + uZ4") {
    FieldPtr f = canonical_field(1);
    auto specs = enumerate_ideal_specs(f, 2);
    CHECK(specs.size() == 7);
    // named list: <1>,<u>,<0>,<2>,<2u>,<u+2>,<u,2>
    CHECK(std::count_if(specs.begin(), specs.end(),
                        [](const IdealSpec& s) { return s.kase() == IdealCase::I; }) == 3);
    CHECK(std::count_if(specs.begin(), specs.end(),
                        [](const IdealSpec& s) { return s.kase() == IdealCase::II; }) == 2);
    CHECK(std::count_if(specs.begin(), specs.end(),
                        [](const IdealSpec& s) { return s.kase() == IdealCase::III; }) == 1);
    CHECK(std::count_if(specs.begin(), specs.end(),
                        [](const IdealSpec& s) { return s.kase() == IdealCase::V; }) == 1);
}

TEST_CASE("the thirteen ideals of Z4 + uZ4 + u^2 Z4") {
    auto specs = enumerate_ideal_specs(canonical_field(1), 3);
    CHECK(specs.size() == 13);
}

TEST_CASE("d=3, k=4 yields 113 ideals with case counts 5/4/77/14/6/7") {
    auto specs = enumerate_ideal_specs(canonical_field(3), 4);
    CHECK(specs.size() == 113);
    auto h = case_histogram(specs);
    CHECK(h[IdealCase::I] == 5);
    CHECK(h[IdealCase::II] == 4);
    CHECK(h[IdealCase::III] == 77);
    CHECK(h[IdealCase::IV] == 14);
    CHECK(h[IdealCase::V] == 6);
    CHECK(h[IdealCase::VI] == 7);
}

TEST_CASE("cardinality column") {
    FieldPtr f1 = canonical_field(1);
    FieldPtr f3 = canonical_field(3);
    CHECK(IdealSpec::zero_ideal(f1, 4).log2_cardinality() == 0);  // <u^k> has one element
    {
        // d=3, k=4, <u^3 + 2h> (case IV, t=0) has 2^12 elements
        ChainEl h(f3, 1);
        h.set_u_coeff(0, F2Poly::one());
        CHECK(IdealSpec::case_IV(4, 3, 0, h).log2_cardinality() == 12);
    }
    {
        // d=1, k=4, <u^2+2, 2u> (case VI) has 2^5 elements
        ChainEl h(f1, 1);
        h.set_u_coeff(0, F2Poly::one());
        CHECK(IdealSpec::case_VI(4, 2, 1, 0, h).log2_cardinality() == 5);
    }
}

TEST_CASE("count formulas match the displayed numbers") {
    CHECK(count_formulas(1, 2).total == 7);
    CHECK(count_formulas(1, 3).total == 13);
    CHECK(count_formulas(1, 4).total == 23);
    CHECK(count_formulas(1, 5).total == 37);
    CHECK(count_formulas(3, 2).total == 13);
    CHECK(count_formulas(3, 3).total == 31);
    CHECK(count_formulas(3, 4).total == 113);
    CHECK(count_formulas(3, 5).total == 259);
    CHECK(count_formulas(2, 2).total == 9);  // 2^d + 5
}

TEST_CASE("closed form agrees with per-case summation for d <= 4, k <= 8") {
    for (int d = 1; d <= 4; ++d)
        for (int k = 2; k <= 8; ++k) {
            IdealCount c = count_formulas(d, k);
            CHECK(c.total == c.case_sum());
        }
}

TEST_CASE("enumeration count equals the formulas per case for d <= 3, k <= 5") {
    for (int d = 1; d <= 3; ++d)
        for (int k = 2; k <= 5; ++k) {
            auto specs = enumerate_ideal_specs(canonical_field(d), k);
            IdealCount c = count_formulas(d, k);
            auto h = case_histogram(specs);
            CHECK(h[IdealCase::I] == c.case_I);
            CHECK(h[IdealCase::II] == c.case_II);
            CHECK(h[IdealCase::III] == c.case_III);
            CHECK(h[IdealCase::IV] == c.case_IV);
            CHECK(h[IdealCase::V] == c.case_V);
            CHECK(h[IdealCase::VI] == c.case_VI);
            CHECK(specs.size() == c.total);
        }
}

TEST_CASE("ideal members by closure") {
    RingPtr ring = canonical_galois_ring(1);
    FieldPtr f = ring->field;
    {
        auto members = ideal_members(IdealSpec::case_II(f, 2, 0), ring);  // <2>
        REQUIRE(members.size() == 4);  // {0, 2, 2u, 2+2u}
        for (const auto& m : members)
            for (int l = 0; l < 2; ++l) CHECK(m.u_coeff(l).coeff(0) % 2 == 0);
    }
    CHECK(ideal_members(IdealSpec::zero_ideal(f, 2), ring).size() == 1);
    CHECK(ideal_members(IdealSpec::unit_ideal(f, 2), ring).size() == 16);
}

TEST_CASE("brute-force lattice equals the classified enumeration") {
    // (d, k) with 4^(dk) <= 4096
    for (auto [d, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {1, 5}, {1, 6}, {3, 2}, {2, 3}}) {
        RingPtr ring = canonical_galois_ring(d);
        DenseMixedRing R(ring, k);
        auto oracle = brute_force_all_ideals(R);
        auto specs = enumerate_ideal_specs(ring->field, k);
        REQUIRE(oracle.size() == specs.size());

        std::set<std::vector<std::uint64_t>> from_specs;
        for (const auto& spec : specs) {
            auto members = ideal_member_indices(R, spec);
            CHECK((1ull << spec.log2_cardinality()) == members.size());
            CHECK(from_specs.insert(members).second);  // pairwise distinct
        }
        std::set<std::vector<std::uint64_t>> from_oracle(oracle.begin(), oracle.end());
        CHECK(from_specs == from_oracle);
    }
}

TEST_CASE("expected counts for the small oracle cases") {
    for (auto [d, k, expect] :
         std::vector<std::tuple<int, int, std::size_t>>{{1, 2, 7}, {1, 3, 13}, {1, 4, 23}, {2, 2, 9}}) {
        DenseMixedRing R(canonical_galois_ring(d), k);
        CHECK(brute_force_all_ideals(R).size() == expect);
    }
}

TEST_CASE("cases III and IV partition the twisted principal family") {
    // over all valid (i, t) pairs, exactly one of t >= 2i-k / t < 2i-k applies
    for (int k = 2; k <= 6; ++k)
        for (int i = 1; i <= k - 1; ++i)
            for (int t = 0; t < i; ++t)
                CHECK(((t >= 2 * i - k) ^ (t < 2 * i - k)) == 1);
    // and the enumeration respects it: every III spec satisfies its bound, every IV its own
    auto specs = enumerate_ideal_specs(canonical_field(2), 5);
    for (const auto& s : specs) {
        if (s.kase() == IdealCase::III) CHECK(s.t() >= 2 * s.i() - s.k());
        if (s.kase() == IdealCase::IV) CHECK(s.t() < 2 * s.i() - s.k());
    }
}

TEST_CASE("membership agrees with the materialized ideal") {
    for (auto [d, k] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}}) {
        RingPtr ring = canonical_galois_ring(d);
        DenseMixedRing R(ring, k);
        for (const auto& spec : enumerate_ideal_specs(ring->field, k)) {
            auto members = ideal_member_indices(R, spec);
            std::set<std::uint64_t> inside(members.begin(), members.end());
            for (std::uint64_t idx = 0; idx < R.size(); ++idx)
                CHECK(ideal_contains(spec, ring, R.element(idx)) == (inside.count(idx) > 0));
        }
    }
}

TEST_CASE("invalid parameters are rejected") {
    FieldPtr f = canonical_field(1);
    CHECK_THROWS_AS(IdealSpec::case_I(f, 2, 3), bad_input);
    CHECK_THROWS_AS(IdealSpec::case_II(f, 2, 2), bad_input);
    ChainEl nonunit(f, 1);  // zero is not a unit
    CHECK_THROWS_AS(IdealSpec::case_III(4, 2, 0, nonunit), bad_input);
    ChainEl h(f, 1);
    h.set_u_coeff(0, F2Poly::one());
    CHECK_THROWS_AS(IdealSpec::case_III(4, 3, 0, h), bad_input);  // t < 2i-k belongs to IV
    CHECK_THROWS_AS(IdealSpec::case_V(f, 4, 2, 2), bad_input);
    CHECK_THROWS_AS(IdealSpec::case_VI(4, 3, 2, 1, h), bad_input);  // i+s > k+t-1
}
