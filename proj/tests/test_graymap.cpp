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

#include "z4u/duality.hpp"
#include "z4u/errors.hpp"
#include "z4u/graymap.hpp"

using namespace z4u;

namespace {

CodeElement element_from_digits(int n, const std::vector<int>& digits) {
    CodeElement e(n, 4);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < 4; ++l) e.set(i, l, digits[i * 4 + l]);
    return e;
}

CyclicCode code_7_4(const FactorSystemPtr& sys, const IdealSpec& c1, const IdealSpec& c2,
                    const IdealSpec& c3) {
    return assemble_code(sys, 4, {c1, c2, c3});
}

}  // namespace

TEST_CASE("map values on length 1") {
    {
        CodeElement e(1, 4);
        e.set(0, 3, 1);  // u^3
        CHECK(gray_map(e) == Z4Vector{1, 1, 1, 1});
    }
    {
        CodeElement e(1, 4);
        e.set(0, 0, 1);  // 1
        CHECK(gray_map(e) == Z4Vector{0, 0, 0, 1});
    }
    CHECK(gray_map(CodeElement(1, 4)) == Z4Vector{0, 0, 0, 0});
    CHECK_THROWS_AS(gray_map(CodeElement(1, 3)), bad_input);
}

TEST_CASE("bijectivity at n=1, exhaustive over the 256-element space") {
    std::set<Z4Vector> images;
    for (int a0 = 0; a0 < 4; ++a0)
        for (int a1 = 0; a1 < 4; ++a1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int a3 = 0; a3 < 4; ++a3) {
                    CodeElement e = element_from_digits(1, {a0, a1, a2, a3});
                    Z4Vector v = gray_map(e);
                    CHECK(images.insert(v).second);
                    CHECK(gray_map_inverse(v, 1) == e);
                }
    CHECK(images.size() == 256);
}

TEST_CASE("lee weight") {
    CHECK(lee_weight(Z4Vector{0, 0, 0}) == 0);
    CHECK(lee_weight(Z4Vector{1, 2, 3, 0}) == 4);
    CHECK(lee_weight(Z4Vector{2, 2}) == 4);
}

TEST_CASE("additivity and A-linearity at n=7") {
    auto sys = FactorSystem::build(7);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> digit(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        CodeElement a(7, 4), b(7, 4);
        std::vector<std::uint8_t> scalar(7);
        for (int i = 0; i < 7; ++i) {
            for (int l = 0; l < 4; ++l) {
                a.set(i, l, digit(rng));
                b.set(i, l, digit(rng));
            }
            scalar[i] = static_cast<std::uint8_t>(digit(rng));
        }
        // additive
        Z4Vector va = gray_map(a), vb = gray_map(b), vab = gray_map(a + b);
        for (std::size_t p = 0; p < va.size(); ++p)
            CHECK(vab[p] == ((va[p] + vb[p]) & 3));
        // commutes with multiplication by a(x), block-wise
        Z4Poly ax(scalar);
        Z4Vector mapped = gray_map(a.times_a(ax));
        for (int blk = 0; blk < 4; ++blk) {
            std::vector<std::uint8_t> blockv(va.begin() + blk * 7, va.begin() + (blk + 1) * 7);
            Z4Poly block(blockv);
            Z4Poly expect = (block * ax).mod_xn_minus_1(7);
            for (int i = 0; i < 7; ++i) CHECK(mapped[blk * 7 + i] == expect.coeff(i));
        }
    }
}

TEST_CASE("images of cyclic codes are quasi-cyclic of index 4") {
    auto sys = FactorSystem::build(7);
    const FieldPtr f1 = sys->factor(0).ring->field;
    const FieldPtr f2 = sys->factor(1).ring->field;
    const FieldPtr f3 = sys->factor(2).ring->field;
    CyclicCode code = code_7_4(sys, IdealSpec::zero_ideal(f1, 4), IdealSpec::case_I(f2, 4, 3),
                               IdealSpec::zero_ideal(f3, 4));
    std::set<Z4Vector> image;
    for (const auto& w : enumerate_codewords(code)) image.insert(gray_map(w));
    CHECK(image.size() == 64);
    for (const auto& v : image) CHECK(image.count(qc_shift(v, 7)) == 1);
}

TEST_CASE("generator matrix block layout") {
    // G0 = I, others zero: block rows [0,0,0,I],[0,0,I,I],[0,I,I,I],[I,I,I,I]
    const int m = 2, n = 2;
    Z4Matrix I(m, n), zero(m, n);
    I.set(0, 0, 1);
    I.set(1, 1, 1);
    {
        Z4Matrix G = qc_generator_matrix(I, zero, zero, zero);
        REQUIRE(G.rows == 8);
        REQUIRE(G.cols == 8);
        auto block_is = [&](int br, int bc, const Z4Matrix& expect) {
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c)
                    if (G.at(br * m + r, bc * n + c) != expect.at(r, c)) return false;
            return true;
        };
        for (int bc = 0; bc < 4; ++bc) {
            CHECK(block_is(0, bc, bc == 3 ? I : zero));
            CHECK(block_is(1, bc, bc >= 2 ? I : zero));
            CHECK(block_is(2, bc, bc >= 1 ? I : zero));
            CHECK(block_is(3, bc, I));
        }
    }
    {
        // G3 = I, others zero: top block row [I,I,I,I], rest zero
        Z4Matrix G = qc_generator_matrix(zero, zero, zero, I);
        for (int bc = 0; bc < 4; ++bc) {
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) {
                    CHECK(G.at(r, bc * n + c) == I.at(r, c));
                    CHECK(G.at(m + r, bc * n + c) == 0);
                }
        }
    }
    CHECK_THROWS_AS(qc_generator_matrix(I, zero, zero, Z4Matrix(1, 2)), bad_input);
}

TEST_CASE("row space of the generator matrix equals the mapped code on length-1 codes") {
    auto sys = FactorSystem::build(1);
    const FieldPtr f = sys->factor(0).ring->field;
    std::vector<IdealSpec> specs = enumerate_ideal_specs(f, 4);
    for (const auto& spec : specs) {
        CyclicCode code = assemble_code(sys, 4, {spec});
        SpanningMatrix sm = code_spanning_matrix(code);
        std::set<Z4Vector> image;
        for (const auto& w : enumerate_codewords(code)) image.insert(gray_map(w));
        if (sm.rows() == 0) {
            CHECK(image.size() == 1);  // zero code
            continue;
        }
        auto rows = row_space(qc_generator_matrix(sm.g0, sm.g1, sm.g2, sm.g3));
        std::set<Z4Vector> span(rows.begin(), rows.end());
        CHECK(span == image);
    }
}

TEST_CASE("row space matches the mapped code on the 64-word length-7 code") {
    auto sys = FactorSystem::build(7);
    CyclicCode code = code_7_4(sys, IdealSpec::zero_ideal(sys->factor(0).ring->field, 4),
                               IdealSpec::case_I(sys->factor(1).ring->field, 4, 3),
                               IdealSpec::zero_ideal(sys->factor(2).ring->field, 4));
    SpanningMatrix sm = code_spanning_matrix(code);
    auto rows = row_space(qc_generator_matrix(sm.g0, sm.g1, sm.g2, sm.g3));
    std::set<Z4Vector> span(rows.begin(), rows.end());
    std::set<Z4Vector> image;
    for (const auto& w : enumerate_codewords(code)) image.insert(gray_map(w));
    CHECK(span == image);
}

TEST_CASE("known parameters of the two length-28 classes") {
    auto sys = FactorSystem::build(7);
    const FieldPtr f1 = sys->factor(0).ring->field;
    const FieldPtr f2 = sys->factor(1).ring->field;
    const FieldPtr f3 = sys->factor(2).ring->field;
    {
        CyclicCode code = code_7_4(sys, IdealSpec::zero_ideal(f1, 4), IdealSpec::case_I(f2, 4, 3),
                                   IdealSpec::zero_ideal(f3, 4));
        CHECK(code.log2_size() == 6);
        CHECK(min_lee_distance_serial(code) == 24);
        CHECK(min_lee_distance(code) == 24);
    }
    {
        ChainEl h(f3, 1);
        h.set_u_coeff(0, F2Poly({0, 0, 1}));  // x^2
        CyclicCode code = code_7_4(sys, IdealSpec::case_I(f1, 4, 3), IdealSpec::zero_ideal(f2, 4),
                                   IdealSpec::case_III(4, 3, 2, h));
        CHECK(code.log2_size() == 8);
        CHECK(min_lee_distance_serial(code) == 20);
        CHECK(min_lee_distance(code) == 20);
    }
}

TEST_CASE("whole space at n=1 has minimum distance 1; zero code has none") {
    auto sys = FactorSystem::build(1);
    const FieldPtr f = sys->factor(0).ring->field;
    CHECK(min_lee_distance(assemble_code(sys, 4, {IdealSpec::unit_ideal(f, 4)})) == 1);
    CHECK(!min_lee_distance(assemble_code(sys, 4, {IdealSpec::zero_ideal(f, 4)})).has_value());
}

TEST_CASE("serial and parallel kernels agree on random codes") {
    auto sys = FactorSystem::build(7);
    std::vector<std::vector<IdealSpec>> lists;
    for (int j = 0; j < 3; ++j) lists.push_back(enumerate_ideal_specs(sys->factor(j).ring->field, 4));
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 12) {
        std::vector<IdealSpec> specs;
        for (int j = 0; j < 3; ++j) specs.push_back(lists[j][rng() % lists[j].size()]);
        CyclicCode code = assemble_code(sys, 4, specs);
        if (code.log2_size() > 14) continue;  // keep the sweep quick
        ++tested;
        CHECK(min_lee_distance_serial(code, 1 << 15) == min_lee_distance(code, 1 << 15));
    }
}
