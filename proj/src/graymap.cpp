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

#include "z4u/graymap.hpp"

#include <algorithm>
#include <set>

#include "z4u/errors.hpp"

namespace z4u {

Z4Vector gray_map(const CodeElement& e) {
    if (e.k() != 4) throw bad_input("the map is defined for k = 4 only");
    const int n = e.n();
    Z4Vector v(4 * n, 0);
    for (int i = 0; i < n; ++i) {
        // block b = xi_(3-b) + ... + xi_3 at position i
        int acc = 0;
        for (int b = 0; b < 4; ++b) {
            acc += e.at(i, 3 - b);
            v[b * n + i] = static_cast<std::uint8_t>(acc & 3);
        }
    }
    return v;
}

CodeElement gray_map_inverse(const Z4Vector& v, int n) {
    if (static_cast<int>(v.size()) != 4 * n) throw bad_input("vector length is not 4n");
    CodeElement e(n, 4);
    for (int i = 0; i < n; ++i) {
        int prev = 0;
        for (int b = 0; b < 4; ++b) {
            e.set(i, 3 - b, v[b * n + i] - prev);
            prev = v[b * n + i];
        }
    }
    return e;
}

int lee_weight(std::uint8_t digit) {
    static constexpr int w[4] = {0, 1, 2, 1};
    return w[digit & 3];
}

int lee_weight(const Z4Vector& v) {
    int total = 0;
    for (std::uint8_t d : v) total += lee_weight(d);
    return total;
}

Z4Vector qc_shift(const Z4Vector& v, int n) {
    Z4Vector r(v.size());
    for (int b = 0; b < 4; ++b)
        for (int i = 0; i < n; ++i) r[b * n + (i + 1) % n] = v[b * n + i];
    return r;
}

Z4Matrix qc_generator_matrix(const Z4Matrix& g0, const Z4Matrix& g1, const Z4Matrix& g2,
                             const Z4Matrix& g3) {
    const int m = g0.rows, n = g0.cols;
    for (const auto* g : {&g1, &g2, &g3})
        if (g->rows != m || g->cols != n) throw bad_input("u-adic parts have mismatched shapes");
    auto add = [&](const Z4Matrix& a, const Z4Matrix& b) {
        Z4Matrix r(m, n);
        for (std::size_t p = 0; p < r.a.size(); ++p)
            r.a[p] = static_cast<std::uint8_t>((a.a[p] + b.a[p]) & 3);
        return r;
    };
    const Z4Matrix s01 = add(g0, g1);
    const Z4Matrix s12 = add(g1, g2);
    const Z4Matrix s23 = add(g2, g3);
    const Z4Matrix s012 = add(s01, g2);
    const Z4Matrix s123 = add(s12, g3);
    const Z4Matrix s0123 = add(s012, g3);
    const Z4Matrix* blocks[4][4] = {
        {&g3, &s23, &s123, &s0123},
        {&g2, &s12, &s012, &s012},
        {&g1, &s01, &s01, &s01},
        {&g0, &g0, &g0, &g0},
    };
    Z4Matrix out(4 * m, 4 * n);
    for (int br = 0; br < 4; ++br)
        for (int bc = 0; bc < 4; ++bc)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c)
                    out.set(br * m + r, bc * n + c, blocks[br][bc]->at(r, c));
    return out;
}

SpanningMatrix code_spanning_matrix(const CyclicCode& code) {
    const FactorSystem& sys = *code.system;
    const int n = sys.n(), k = code.k;
    if (k != 4) throw bad_input("the map is defined for k = 4 only");
    std::vector<CodeElement> rows;
    for (int j = 0; j < sys.r(); ++j)
        for (const auto& g : code.specs[j].generators(sys.factor(j).ring)) {
            CodeElement base = factor_contribution(sys, j, g, k);
            if (base.is_zero()) continue;
            CodeElement row = base;
            for (int b = 0; b < n; ++b) {
                rows.push_back(row);
                row = row.times_x();
            }
        }
    SpanningMatrix sm;
    const int m = static_cast<int>(rows.size());
    sm.g0 = Z4Matrix(m, n);
    sm.g1 = Z4Matrix(m, n);
    sm.g2 = Z4Matrix(m, n);
    sm.g3 = Z4Matrix(m, n);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < n; ++i) {
            sm.g0.set(r, i, rows[r].at(i, 0));
            sm.g1.set(r, i, rows[r].at(i, 1));
            sm.g2.set(r, i, rows[r].at(i, 2));
            sm.g3.set(r, i, rows[r].at(i, 3));
        }
    return sm;
}

std::vector<Z4Vector> row_space(const Z4Matrix& m, std::uint64_t max_size) {
    std::set<Z4Vector> span{Z4Vector(m.cols, 0)};
    for (int r = 0; r < m.rows; ++r) {
        Z4Vector row(m.cols);
        for (int c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
        std::vector<Z4Vector> snapshot(span.begin(), span.end());
        Z4Vector cg = row;
        for (int mult = 1; mult <= 3; ++mult) {
            for (const auto& s : snapshot) {
                Z4Vector sum(m.cols);
                for (int c = 0; c < m.cols; ++c)
                    sum[c] = static_cast<std::uint8_t>((s[c] + cg[c]) & 3);
                if (span.insert(std::move(sum)).second && span.size() > max_size)
                    throw budget_exceeded("row space larger than budget");
            }
            if (mult < 3)
                for (int c = 0; c < m.cols; ++c) cg[c] = static_cast<std::uint8_t>((cg[c] + row[c]) & 3);
        }
    }
    return {span.begin(), span.end()};
}

/* -------------------------------------------------------- distance search */

namespace {

int min_weight_over_range(const CodewordStream& stream, std::uint64_t lo, std::uint64_t hi) {
    int best = INT32_MAX;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (idx == 0) continue;  // zero word
        int w = lee_weight(gray_map(stream.at(idx)));
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

std::optional<int> min_lee_distance_serial(const CyclicCode& code, std::uint64_t budget) {
    if (code.k != 4) throw bad_input("the map is defined for k = 4 only");
    CodewordStream stream(code, budget);
    if (stream.total() <= 1) return std::nullopt;
    return min_weight_over_range(stream, 1, stream.total());
}

std::optional<int> min_lee_distance(const CyclicCode& code, std::uint64_t budget) {
    if (code.k != 4) throw bad_input("the map is defined for k = 4 only");
    CodewordStream stream(code, budget);
    const std::uint64_t total = stream.total();
    if (total <= 1) return std::nullopt;
    int best = INT32_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t idx = 1; idx < static_cast<std::int64_t>(total); ++idx) {
        int w = lee_weight(gray_map(stream.at(static_cast<std::uint64_t>(idx))));
        if (w < best) best = w;
    }
    return best;
}

QCParameters qc_parameters(const CyclicCode& code, std::uint64_t budget) {
    QCParameters p;
    p.length = 4 * code.system->n();
    p.log2_size = code.log2_size();
    p.min_distance = min_lee_distance(code, budget);
    return p;
}

}  // namespace z4u
