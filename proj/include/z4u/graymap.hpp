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

#ifndef Z4U_GRAYMAP_HPP
#define Z4U_GRAYMAP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "z4u/codes.hpp"

namespace z4u {

/// Vector over Z4 of length 4n, stored as raw digits.
using Z4Vector = std::vector<std::uint8_t>;

/**
 * The module isometry from A[u]/<u^4> to A^4 sending
 * xi0 + u xi1 + u^2 xi2 + u^3 xi3 to
 * (xi3, xi2+xi3, xi1+xi2+xi3, xi0+xi1+xi2+xi3), flattened into 4n digits
 * (block b holds positions b*n .. b*n+n-1).  Requires k = 4.
 */
Z4Vector gray_map(const CodeElement& e);
CodeElement gray_map_inverse(const Z4Vector& v, int n);

/// Per-symbol Lee weights 0,1,2,1 for 0,1,2,3.
int lee_weight(std::uint8_t digit);
int lee_weight(const Z4Vector& v);

/// Simultaneous cyclic shift of the four n-blocks (the index-4 quasi-cyclic shift).
Z4Vector qc_shift(const Z4Vector& v, int n);

/// Dense matrix over Z4.
struct Z4Matrix {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    Z4Matrix() = default;
    Z4Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    void set(int r, int c, int v) {
        a[static_cast<std::size_t>(r) * cols + c] = static_cast<std::uint8_t>(((v % 4) + 4) % 4);
    }
    bool operator==(const Z4Matrix& rhs) const = default;
};

/**
 * The 4m x 4n generator matrix of the mapped code, built from the u-adic
 * parts G0..G3 of an m x n matrix over R:
 *
 *   [ G3  G2+G3  G1+G2+G3  G0+G1+G2+G3 ]
 *   [ G2  G1+G2  G0+G1+G2  G0+G1+G2    ]
 *   [ G1  G0+G1  G0+G1     G0+G1       ]
 *   [ G0  G0     G0        G0          ]
 */
Z4Matrix qc_generator_matrix(const Z4Matrix& g0, const Z4Matrix& g1, const Z4Matrix& g2,
                             const Z4Matrix& g3);

/// R-module spanning rows of the code (x^b * e_j * g per factor generator),
/// split into u-adic parts; feed into qc_generator_matrix.
struct SpanningMatrix {
    Z4Matrix g0, g1, g2, g3;
    int rows() const { return g0.rows; }
};
SpanningMatrix code_spanning_matrix(const CyclicCode& code);

/// Z4-row space of a matrix as a set of vectors (closure under row
/// additions); throws budget_exceeded past max_size.
std::vector<Z4Vector> row_space(const Z4Matrix& m, std::uint64_t max_size = 1ull << 22);

/**
 * Minimum Lee weight over the nonzero Gray images of the code (equals the
 * minimum Lee distance by linearity).  Empty result for the zero code.
 * The plain variant partitions the codeword space across OpenMP threads;
 * the serial variant is the reference implementation.
 */
std::optional<int> min_lee_distance_serial(const CyclicCode& code, std::uint64_t budget = 1ull << 22);
std::optional<int> min_lee_distance(const CyclicCode& code, std::uint64_t budget = 1ull << 22);

/// Parameter report [length, log2(M), d] of the Gray image.
struct QCParameters {
    int length = 0;
    int log2_size = 0;
    std::optional<int> min_distance;
};
QCParameters qc_parameters(const CyclicCode& code, std::uint64_t budget = 1ull << 22);

}  // namespace z4u

#endif
