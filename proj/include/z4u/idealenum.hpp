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

#ifndef Z4U_IDEALENUM_HPP
#define Z4U_IDEALENUM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "z4u/rings.hpp"

namespace z4u {

/**
 * The six shapes an ideal of K[u]/<u^k> can take:
 *
 *   I    <u^i>                  0 <= i <= k
 *   II   <2u^s>                 0 <= s <= k-1
 *   III  <u^i + 2u^t h>         0 <= t < i <= k-1, t >= 2i-k, h unit mod u^(i-t)
 *   IV   <u^i + 2u^t h>         0 <= t < i <= k-1, t <  2i-k, h unit mod u^(k-i)
 *   V    <u^i, 2u^s>            0 <= s < i <= k-1
 *   VI   <u^i + 2u^t h, 2u^s>   0 <= t < s < i <= k-1, i+s <= k+t-1, h unit mod u^(s-t)
 *
 * Every ideal matches exactly one row, so specs compare by value.
 */
enum class IdealCase { I, II, III, IV, V, VI };

std::string to_string(IdealCase c);

class IdealSpec {
   public:
    IdealSpec() = default;

    static IdealSpec case_I(FieldPtr field, int k, int i);
    static IdealSpec case_II(FieldPtr field, int k, int s);
    static IdealSpec case_III(int k, int i, int t, ChainEl h);
    static IdealSpec case_IV(int k, int i, int t, ChainEl h);
    static IdealSpec case_V(FieldPtr field, int k, int i, int s);
    static IdealSpec case_VI(int k, int i, int s, int t, ChainEl h);

    static IdealSpec zero_ideal(FieldPtr field, int k) { return case_I(std::move(field), k, k); }
    static IdealSpec unit_ideal(FieldPtr field, int k) { return case_I(std::move(field), k, 0); }

    IdealCase kase() const { return case_; }
    int i() const { return i_; }
    int s() const { return s_; }
    int t() const { return t_; }
    const ChainEl& h() const { return h_; }
    const FieldPtr& field() const { return field_; }
    int d() const { return field_->degree; }
    int k() const { return k_; }

    /// Length of the unit quotient F[u]/<u^m> that h lives in; 0 if no h.
    int h_quotient_length() const;

    /// log2 of the number of elements, per the classification table.
    int log2_cardinality() const;

    /// Exponents of the torsion ideals Tor_0 = u^a R and Tor_1 = u^b R.
    int tor0_exponent() const;
    int tor1_exponent() const;

    /// Generators as elements of K[u]/<u^k>; ring->field must match field().
    std::vector<MixedEl> generators(const RingPtr& ring) const;

    bool operator==(const IdealSpec& rhs) const;
    bool operator<(const IdealSpec& rhs) const;  // enumeration order

    std::string to_string() const;

   private:
    IdealCase case_ = IdealCase::I;
    int i_ = 0, s_ = 0, t_ = 0;
    ChainEl h_;  // stored with full chain length k; coeffs beyond the quotient are zero
    FieldPtr field_;
    int k_ = 0;

    void validate() const;
};

/// Streams every ideal of K[u]/<u^k> exactly once: cases I..VI, each in
/// lexicographic (i, s, t, h) order.  Restartable by construction.
void for_each_ideal_spec(const FieldPtr& field, int k,
                         const std::function<void(const IdealSpec&)>& fn);

std::vector<IdealSpec> enumerate_ideal_specs(const FieldPtr& field, int k);

/// Per-case ideal counts of K[u]/<u^k> with |F| = 2^d.
struct IdealCount {
    std::uint64_t case_I = 0, case_II = 0, case_III = 0, case_IV = 0, case_V = 0, case_VI = 0;
    std::uint64_t total = 0;  // closed form

    std::uint64_t case_sum() const {
        return case_I + case_II + case_III + case_IV + case_V + case_VI;
    }
};

/// Counting formulas: Omega1/Omega2 for the twisted principal cases, the
/// Gamma recurrence for case VI, and the closed form for the total.
IdealCount count_formulas(int d, int k);

/// Materialized K[u]/<u^k> for small d*k; elements indexed by their mixed
/// radix digit string (4^(d*k) total).
class DenseMixedRing {
   public:
    DenseMixedRing(RingPtr ring, int k, std::uint64_t max_size = 1ull << 14);

    const RingPtr& ring() const { return ring_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }

    MixedEl element(std::uint64_t idx) const;
    std::uint64_t index(const MixedEl& e) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    /// Z4-span of all monomial multiples x^a u^b g of the given ring
    /// generators: the ideal they generate, as a sorted index list.
    std::vector<std::uint64_t> ideal_span(const std::vector<MixedEl>& ring_gens) const;

   private:
    RingPtr ring_;
    int k_;
    int digits_;
    std::uint64_t size_;
};

/// Members of the ideal described by spec, as sorted element indices.
std::vector<std::uint64_t> ideal_member_indices(const DenseMixedRing& R, const IdealSpec& spec);

/// Members as ring elements, by additive closure of the generator monomial
/// multiples; never materializes the ambient ring.  Throws budget_exceeded
/// once the ideal exceeds max_members elements.
std::vector<MixedEl> ideal_members(const IdealSpec& spec, const RingPtr& ring,
                                   std::uint64_t max_members = 1ull << 16);

/// Independent oracle: every ideal of the materialized ring, found by
/// closing the set of principal ideals under pairwise sum until fixpoint.
/// Returns sorted member-index sets, sorted lexicographically.
std::vector<std::vector<std::uint64_t>> brute_force_all_ideals(const DenseMixedRing& R);

/// Exact membership test (no materialization): reduces beta against the
/// generator with unit part and checks the torsion valuations.
bool ideal_contains(const IdealSpec& spec, const RingPtr& ring, const MixedEl& beta);

}  // namespace z4u

#endif
