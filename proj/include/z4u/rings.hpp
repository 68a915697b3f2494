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

#ifndef Z4U_RINGS_HPP
#define Z4U_RINGS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "z4u/polyarith.hpp"

namespace z4u {

/// Residue field F_{2^d} = F2[x]/<fbar> for an irreducible fbar.
struct ResidueField {
    F2Poly modulus;
    int degree;

    explicit ResidueField(F2Poly fbar) : modulus(std::move(fbar)), degree(modulus.degree()) {}

    F2Poly reduce(const F2Poly& a) const { return a.divmod(modulus).second; }
    F2Poly mul(const F2Poly& a, const F2Poly& b) const { return reduce(a * b); }

    /// Field element from its bit pattern (bit l = coefficient of x^l).
    F2Poly element(std::uint64_t bits) const;
    std::uint64_t bits(const F2Poly& a) const;
    std::uint64_t size() const { return 1ull << degree; }
};

using FieldPtr = std::shared_ptr<const ResidueField>;

/// Galois ring K = Z4[x]/<f> for a monic basic irreducible f, together with
/// its residue field F2[x]/<f mod 2>.
struct GaloisRing {
    Z4Poly modulus;
    int degree;
    FieldPtr field;

    explicit GaloisRing(Z4Poly f)
        : modulus(std::move(f)),
          degree(modulus.degree()),
          field(std::make_shared<const ResidueField>(reduce_mod2(modulus))) {}

    Z4Poly reduce(const Z4Poly& a) const { return a.divmod(modulus).second; }
    Z4Poly mul(const Z4Poly& a, const Z4Poly& b) const { return reduce(a * b); }
};

using RingPtr = std::shared_ptr<const GaloisRing>;

/// Standalone field/ring of a given degree, backed by the canonical
/// irreducible modulus; used when no factor system supplies one.
FieldPtr canonical_field(int degree);
RingPtr canonical_galois_ring(int degree);

bool same_field(const FieldPtr& a, const FieldPtr& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

/**
 * Element of the chain ring F[u]/<u^s>: exactly s coefficients from the
 * residue field, ascending by u-power.
 */
class ChainEl {
   public:
    ChainEl() = default;
    ChainEl(FieldPtr field, int s);
    ChainEl(FieldPtr field, std::vector<F2Poly> u_coeffs);

    const FieldPtr& field() const { return field_; }
    int chain_length() const { return static_cast<int>(u_.size()); }
    const F2Poly& u_coeff(int l) const { return u_[l]; }
    const std::vector<F2Poly>& u_coeffs() const { return u_; }
    void set_u_coeff(int l, F2Poly v);

    bool is_zero() const;
    bool is_unit() const { return !u_.empty() && !u_[0].is_zero(); }
    /// Index of the lowest nonzero u-coefficient; chain_length() if zero.
    int u_valuation() const;

    ChainEl operator+(const ChainEl& rhs) const;
    ChainEl operator*(const ChainEl& rhs) const;
    bool operator==(const ChainEl& rhs) const;

    /// Multiply by u^e (shift up, truncating at the chain length).
    ChainEl shift_up(int e) const;
    /// Keep only coefficients below m, zeroing the rest (reduction mod u^m).
    ChainEl truncate(int m) const;
    /// New element with u-coeff l = old coeff l+e (used by unit_decompose).
    ChainEl shift_down(int e) const;

   private:
    FieldPtr field_;
    std::vector<F2Poly> u_;
};

/// a = u^i * unit; rejects zero.
std::pair<int, ChainEl> unit_decompose(const ChainEl& a);

/**
 * Element of K[u]/<u^k>: exactly k coefficients from the Galois ring,
 * ascending by u-power.
 */
class MixedEl {
   public:
    MixedEl() = default;
    MixedEl(RingPtr ring, int k);
    MixedEl(RingPtr ring, std::vector<Z4Poly> u_coeffs);

    const RingPtr& ring() const { return ring_; }
    int chain_length() const { return static_cast<int>(u_.size()); }
    const Z4Poly& u_coeff(int l) const { return u_[l]; }
    const std::vector<Z4Poly>& u_coeffs() const { return u_; }
    void set_u_coeff(int l, Z4Poly v);

    bool is_zero() const;

    MixedEl operator+(const MixedEl& rhs) const;
    MixedEl operator-(const MixedEl& rhs) const;
    MixedEl operator*(const MixedEl& rhs) const;
    bool operator==(const MixedEl& rhs) const;

    MixedEl shift_up(int e) const;

    static MixedEl u_power(RingPtr ring, int k, int e);  // u^e, or 0 when e >= k

   private:
    RingPtr ring_;
    std::vector<Z4Poly> u_;
};

/// Regard an F[u]/<u^k> element as a K[u]/<u^k> element with {0,1} coefficients.
MixedEl embed(const ChainEl& a, const RingPtr& ring);

/// 2-adic split a = embed(eta0) + 2*embed(eta1); eta0 is tau(a).
std::pair<ChainEl, ChainEl> two_adic_split(const MixedEl& a);

/// The projection tau (first component of the 2-adic split); a surjective
/// ring homomorphism onto F[u]/<u^k>.
ChainEl tau(const MixedEl& a);

/// The scaled product xi * (2 eta) = 2 (xi eta): multiply in F[u]/<u^k>
/// first, then double inside K[u]/<u^k>.
MixedEl scaled_double_product(const ChainEl& xi, const ChainEl& eta, const RingPtr& ring);

/// Stream over all elements of F[u]/<u^s> with invertible u^0 coefficient.
/// Restartable; yields units in lexicographic coefficient order.
class UnitStream {
   public:
    UnitStream(FieldPtr field, int s);
    std::optional<ChainEl> next();
    void reset();
    std::uint64_t count() const;  // (2^d - 1) * 2^((s-1)d)

   private:
    FieldPtr field_;
    int s_;
    std::vector<std::uint64_t> counter_;
    bool done_;
};

std::vector<ChainEl> enumerate_units(const FieldPtr& field, int s);

/// Stream over all elements of F[u]/<u^s> (including non-units and zero).
class ChainElStream {
   public:
    ChainElStream(FieldPtr field, int s);
    std::optional<ChainEl> next();

   private:
    FieldPtr field_;
    int s_;
    std::vector<std::uint64_t> counter_;
    bool done_;
};

}  // namespace z4u

#endif
