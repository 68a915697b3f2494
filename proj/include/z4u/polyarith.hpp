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

#ifndef Z4U_POLYARITH_HPP
#define Z4U_POLYARITH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace z4u {

/**
 * Dense polynomial over Z4 = {0,1,2,3}, coefficients stored ascending by
 * degree in canonical form (no trailing zeros).  The zero polynomial has an
 * empty coefficient vector and degree() == -1; that value is the
 * distinguished "no degree" marker, it never participates in arithmetic
 * identities involving deg.
 */
class Z4Poly {
   public:
    Z4Poly() = default;
    explicit Z4Poly(std::vector<std::uint8_t> coeffs);
    Z4Poly(std::initializer_list<int> coeffs);

    static Z4Poly zero() { return Z4Poly(); }
    static Z4Poly one() { return Z4Poly({1}); }
    static Z4Poly x_power(int e, int c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint8_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<std::uint8_t>& coeffs() const { return c_; }

    Z4Poly operator-() const;
    Z4Poly operator+(const Z4Poly& rhs) const;
    Z4Poly operator-(const Z4Poly& rhs) const;
    Z4Poly operator*(const Z4Poly& rhs) const;
    Z4Poly operator*(int scalar) const;
    bool operator==(const Z4Poly& rhs) const = default;
    auto operator<=>(const Z4Poly& rhs) const = default;

    /// Quotient and remainder by a monic divisor (exact over Z4).
    std::pair<Z4Poly, Z4Poly> divmod(const Z4Poly& divisor) const;

    /// Reduction modulo x^n - 1 (fold coefficients cyclically).
    Z4Poly mod_xn_minus_1(int n) const;

    std::string to_string(const std::string& var = "x") const;

   private:
    std::vector<std::uint8_t> c_;

    void prune();
};

/// Dense polynomial over F2, same conventions as Z4Poly.
class F2Poly {
   public:
    F2Poly() = default;
    explicit F2Poly(std::vector<std::uint8_t> coeffs);
    F2Poly(std::initializer_list<int> coeffs);

    static F2Poly zero() { return F2Poly(); }
    static F2Poly one() { return F2Poly({1}); }
    static F2Poly x_power(int e);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1; }
    std::uint8_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<std::uint8_t>& coeffs() const { return c_; }

    F2Poly operator+(const F2Poly& rhs) const;
    F2Poly operator*(const F2Poly& rhs) const;
    bool operator==(const F2Poly& rhs) const = default;
    auto operator<=>(const F2Poly& rhs) const = default;

    std::pair<F2Poly, F2Poly> divmod(const F2Poly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

   private:
    std::vector<std::uint8_t> c_;

    void prune();
};

F2Poly gcd(F2Poly a, F2Poly b);

/// Extended Euclid over F2[x]: returns (g, a, b) with a*f + b*h = g = gcd(f,h).
struct F2Bezout {
    F2Poly g, a, b;
};
F2Bezout extended_gcd(const F2Poly& f, const F2Poly& h);

/// Coefficient-wise 0,2 -> 0 and 1,3 -> 1; a surjective ring homomorphism.
F2Poly reduce_mod2(const Z4Poly& f);

/// Lift bits {0,1} into Z4 coefficients verbatim.
Z4Poly lift_to_z4(const F2Poly& f);

/// Comparison used for canonical factor ordering: degree first, then the
/// coefficient tuple read from the highest power down.
bool factor_order_less(const F2Poly& a, const F2Poly& b);

/**
 * All monic irreducible factors of x^n + 1 over F2 for odd n, in canonical
 * order.  Built from cyclotomic cosets mod n: each factor is the minimal
 * polynomial of beta^c over F2, where beta has order n in F_{2^m} and m is
 * the multiplicative order of 2 mod n.
 */
std::vector<F2Poly> factor_xn_minus_1_f2(int n);

/// First monic irreducible polynomial of degree d over F2 in ascending
/// bit-pattern order.  Used for standalone residue fields.
F2Poly canonical_irreducible_f2(int degree);

/**
 * The unique monic polynomial f over Z4 with f = g (mod 2) and f | x^n - 1
 * in Z4[x], computed by the Graeffe construction: with g = E(x^2) + x*O(x^2),
 * f(x^2) = +-(E(x^2)^2 - x^2*O(x^2)^2).  The divisibility is verified; a
 * failure rejects g as not dividing x^n + 1.
 */
Z4Poly hensel_lift(const F2Poly& g, int n);

/**
 * (v, w) with v*F + w*f = 1 exactly in Z4[x].  Requires the mod-2 reductions
 * to be coprime; computed by extended gcd over F2 followed by one Newton
 * correction step (1 + 2e has inverse 1 - 2e since 4 = 0).
 */
std::pair<Z4Poly, Z4Poly> bezout_pair(const Z4Poly& F, const Z4Poly& f);

/// The CRT idempotents e_1..e_r of Z4[x]/<x^n - 1>, aligned with the
/// canonical factor order of factor_xn_minus_1_f2(n).
std::vector<Z4Poly> idempotents(int n);

/// Coefficient-reversed polynomial x^deg(f) * f(1/x); rejects zero.
Z4Poly reciprocal(const Z4Poly& f);
F2Poly reciprocal(const F2Poly& f);

/// x^n - 1 as an element of Z4[x].
Z4Poly xn_minus_1(int n);

}  // namespace z4u

#endif
