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

#ifndef Z4U_DUALITY_HPP
#define Z4U_DUALITY_HPP

#include <cstdint>
#include <random>

#include "z4u/codes.hpp"

namespace z4u {

/// [a,b]_E = sum over positions of the R-products of the row coefficients;
/// returned as the k u-coefficients of an R element.
std::vector<std::uint8_t> euclidean_inner_product(const CodeElement& a, const CodeElement& b);

bool is_zero_r(const std::vector<std::uint8_t>& r);

/// Apply x -> x^(n-1) to every u-coefficient of h, reducing modulo the
/// residue modulus of factor sigma(j).  Carries units to units.
ChainEl substitute_inverse(const ChainEl& h, const FactorSystem& system, int j);

/**
 * The annihilator ideal at position sigma(j) dual to the given ideal at
 * position j, normalized back into the six-case classification:
 *
 *   I   <u^i>              ->  <u^(k-i)>
 *   II  <2u^s>             ->  <u^(k-s), 2>
 *   III <u^i+2u^t h>       ->  <u^(k-i)+2u^(k+t-2i) h(1/x)>
 *   IV  <u^i+2u^t h>, t=0  ->  <u^i+2h(1/x)>
 *                    t>=1  ->  <u^(i-t)+2h(1/x), 2u^(k-i)>
 *   V   <u^i,2u^s>         ->  <u^(k-s), 2u^(k-i)>
 *   VI  <u^i+2u^t h,2u^s>, t=0  -> <u^(k-s)+2u^(k-i-s) h(1/x)>
 *                           t>=1 -> <u^(k-s)+2u^(k+t-i-s) h(1/x), 2u^(k-i)>
 *
 * The cardinality identity |C| * |dual| = 2^(2dk) is asserted.
 */
IdealSpec dual_ideal_spec(const IdealSpec& spec, const FactorSystem& system, int j);

/// The Euclidean dual: dual.specs[sigma(j)] pairs with code.specs[j].
CyclicCode dual_code(const CyclicCode& code);

/**
 * Ideals C_j with C_j equal to its own annihilator image at a self-paired
 * factor j (sigma(j) = j), enumerated per the even/odd-k case lists with the
 * per-u-coefficient symmetry condition h(x) = h(1/x).
 */
std::vector<IdealSpec> self_dual_self_paired_choices(const FactorSystem& system, int j, int k);

/// Streams all self-dual cyclic codes of length n over Z4[u]/<u^k> in a
/// deterministic order; every emitted code satisfies dual_code(C) == C.
class SelfDualStream {
   public:
    SelfDualStream(FactorSystemPtr system, int k);

    BigUint total() const;
    std::uint64_t total_u64() const;
    std::optional<CyclicCode> next();
    void reset();

   private:
    FactorSystemPtr system_;
    int k_;
    std::vector<std::vector<IdealSpec>> choices_;   // one list per free position
    std::vector<std::vector<IdealSpec>> partners_;  // forced partner per pair choice
    std::vector<std::uint64_t> counter_;
    bool done_ = false;
};

BigUint count_self_dual_codes(const FactorSystem& system, int k);

/// Uniformly random codeword, drawn by random ring multiples of the
/// generators in every factor.
CodeElement random_codeword(const CyclicCode& code, std::mt19937_64& rng);

/**
 * Checks that every inner product between the two codes vanishes:
 * exhaustively when |C|*|D| <= exhaustive_limit, otherwise on `samples`
 * random pairs.  The parallel variant partitions the sweep across OpenMP
 * threads; both return the same verdict.
 */
bool verify_annihilation_serial(const CyclicCode& C, const CyclicCode& D,
                                std::uint64_t exhaustive_limit = 1ull << 24,
                                std::uint64_t samples = 10000, std::uint64_t seed = 1);
bool verify_annihilation(const CyclicCode& C, const CyclicCode& D,
                         std::uint64_t exhaustive_limit = 1ull << 24,
                         std::uint64_t samples = 10000, std::uint64_t seed = 1);

}  // namespace z4u

#endif
