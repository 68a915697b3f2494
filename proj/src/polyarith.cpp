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

#include "z4u/polyarith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "z4u/errors.hpp"

namespace z4u {

namespace {

std::string term_string(int coeff, int deg, const std::string& var, bool show_one) {
    std::string s;
    if (deg == 0 || show_one || coeff != 1) s += std::to_string(coeff);
    if (deg > 0) {
        s += var;
        if (deg > 1) s += "^" + std::to_string(deg);
    }
    return s;
}

template <class Poly>
std::string poly_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i) == 0) continue;
        if (!s.empty()) s += "+";
        s += term_string(p.coeff(i), i, var, false);
    }
    return s;
}

}  // namespace

/* ---------------------------------------------------------------- Z4Poly */

Z4Poly::Z4Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) {
    for (auto& v : c_) v &= 3;
    prune();
}

Z4Poly::Z4Poly(std::initializer_list<int> coeffs) {
    c_.reserve(coeffs.size());
    for (int v : coeffs) c_.push_back(static_cast<std::uint8_t>(((v % 4) + 4) % 4));
    prune();
}

Z4Poly Z4Poly::x_power(int e, int c) {
    std::vector<std::uint8_t> v(e + 1, 0);
    v[e] = static_cast<std::uint8_t>(((c % 4) + 4) % 4);
    return Z4Poly(std::move(v));
}

void Z4Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Z4Poly Z4Poly::operator-() const {
    Z4Poly r = *this;
    for (auto& v : r.c_) v = static_cast<std::uint8_t>((4 - v) & 3);
    return r;
}

Z4Poly Z4Poly::operator+(const Z4Poly& rhs) const {
    std::vector<std::uint8_t> v(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<std::uint8_t>((coeff(i) + rhs.coeff(i)) & 3);
    return Z4Poly(std::move(v));
}

Z4Poly Z4Poly::operator-(const Z4Poly& rhs) const { return *this + (-rhs); }

Z4Poly Z4Poly::operator*(const Z4Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<std::uint8_t> v(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            v[i + j] = static_cast<std::uint8_t>((v[i + j] + c_[i] * rhs.c_[j]) & 3);
    }
    return Z4Poly(std::move(v));
}

Z4Poly Z4Poly::operator*(int scalar) const {
    int s = ((scalar % 4) + 4) % 4;
    std::vector<std::uint8_t> v(c_);
    for (auto& x : v) x = static_cast<std::uint8_t>((x * s) & 3);
    return Z4Poly(std::move(v));
}

std::pair<Z4Poly, Z4Poly> Z4Poly::divmod(const Z4Poly& divisor) const {
    if (!divisor.is_monic()) throw internal_error("Z4Poly::divmod: divisor must be monic");
    std::vector<std::uint8_t> rem(c_);
    const int dd = divisor.degree();
    std::vector<std::uint8_t> quot;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        quot.assign(rem.size() - dd, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        std::uint8_t q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] =
                static_cast<std::uint8_t>((rem[i - dd + j] + 4 - ((q * divisor.coeff(j)) & 3)) & 3);
    }
    return {Z4Poly(std::move(quot)), Z4Poly(std::move(rem))};
}

Z4Poly Z4Poly::mod_xn_minus_1(int n) const {
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i % n] = static_cast<std::uint8_t>((v[i % n] + c_[i]) & 3);
    return Z4Poly(std::move(v));
}

std::string Z4Poly::to_string(const std::string& var) const { return poly_string(*this, var); }

/* ---------------------------------------------------------------- F2Poly */

F2Poly::F2Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) {
    for (auto& v : c_) v &= 1;
    prune();
}

F2Poly::F2Poly(std::initializer_list<int> coeffs) {
    c_.reserve(coeffs.size());
    for (int v : coeffs) c_.push_back(static_cast<std::uint8_t>(v & 1));
    prune();
}

F2Poly F2Poly::x_power(int e) {
    std::vector<std::uint8_t> v(e + 1, 0);
    v[e] = 1;
    return F2Poly(std::move(v));
}

void F2Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

F2Poly F2Poly::operator+(const F2Poly& rhs) const {
    std::vector<std::uint8_t> v(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<std::uint8_t>(coeff(i) ^ rhs.coeff(i));
    return F2Poly(std::move(v));
}

F2Poly F2Poly::operator*(const F2Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<std::uint8_t> v(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] ^= rhs.c_[j];
    }
    return F2Poly(std::move(v));
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& divisor) const {
    if (divisor.is_zero()) throw internal_error("F2Poly::divmod: division by zero");
    std::vector<std::uint8_t> rem(c_);
    const int dd = divisor.degree();
    std::vector<std::uint8_t> quot;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        quot.assign(rem.size() - dd, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        quot[i - dd] = 1;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] ^= divisor.coeff(j);
    }
    return {F2Poly(std::move(quot)), F2Poly(std::move(rem))};
}

std::string F2Poly::to_string(const std::string& var) const { return poly_string(*this, var); }

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Bezout extended_gcd(const F2Poly& f, const F2Poly& h) {
    F2Poly r0 = f, r1 = h;
    F2Poly a0 = F2Poly::one(), a1 = F2Poly::zero();
    F2Poly b0 = F2Poly::zero(), b1 = F2Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        F2Poly a2 = a0 + q * a1;
        F2Poly b2 = b0 + q * b1;
        r0 = std::move(r1);
        r1 = std::move(r);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    return {r0, a0, b0};
}

F2Poly reduce_mod2(const Z4Poly& f) {
    std::vector<std::uint8_t> v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeffs()[i] & 1;
    return F2Poly(std::move(v));
}

Z4Poly lift_to_z4(const F2Poly& f) {
    return Z4Poly(std::vector<std::uint8_t>(f.coeffs().begin(), f.coeffs().end()));
}

bool factor_order_less(const F2Poly& a, const F2Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

/* ----------------------------------------------- factorization over F2 */

namespace {

// Arithmetic in F_{2^m} = F2[y]/<g(y)> with bit-packed operands, m <= 63.
struct GF2m {
    int m;
    std::uint64_t modulus;  // full bit pattern of g, degree m

    std::uint64_t mask() const { return (m == 63) ? ~0ull >> 1 : (1ull << m) - 1; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0;
        while (b != 0) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> m & 1) a ^= modulus;
        }
        return r;
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

int bit_degree(std::uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint64_t bit_mod(std::uint64_t a, std::uint64_t g) {
    int dg = bit_degree(g);
    for (int i = bit_degree(a); i >= dg; --i)
        if (a >> i & 1) a ^= g << (i - dg);
    return a;
}

std::uint64_t bit_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t r = bit_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool is_irreducible_bits(std::uint64_t g, int m) {
    if (m == 1) return true;
    GF2m gf{m, g};
    // Rabin: x^(2^m) = x mod g, and gcd(x^(2^(m/p)) - x, g) = 1 for prime p | m.
    const std::uint64_t x = 2;
    std::vector<std::uint64_t> powers(m + 1);  // powers[i] = x^(2^i) mod g
    powers[0] = x;
    for (int i = 1; i <= m; ++i) powers[i] = gf.mul(powers[i - 1], powers[i - 1]);
    if (powers[m] != x) return false;
    for (int p : prime_divisors(m))
        if (bit_gcd(powers[m / p] ^ x, g) != 1) return false;
    return true;
}

std::uint64_t find_irreducible_bits(int m) {
    if (m >= 63) throw bad_input("field degree too large for this implementation");
    for (std::uint64_t low = 1; low < (1ull << m); low += 2) {
        std::uint64_t g = (1ull << m) | low;
        if (is_irreducible_bits(g, m)) return g;
    }
    throw internal_error("no irreducible polynomial found");
}

}  // namespace

F2Poly canonical_irreducible_f2(int degree) {
    if (degree < 1) throw bad_input("irreducible degree must be positive");
    std::uint64_t g = find_irreducible_bits(degree);
    std::vector<std::uint8_t> v(degree + 1);
    for (int i = 0; i <= degree; ++i) v[i] = static_cast<std::uint8_t>(g >> i & 1);
    return F2Poly(std::move(v));
}

std::vector<F2Poly> factor_xn_minus_1_f2(int n) {
    if (n < 1 || n % 2 == 0) throw bad_input("length must be a positive odd integer");
    if (n == 1) return {F2Poly({1, 1})};

    // Cyclotomic cosets of 2 mod n.
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cosets;
    for (int c = 0; c < n; ++c) {
        if (seen[c]) continue;
        std::vector<int> coset;
        int e = c;
        do {
            seen[e] = 1;
            coset.push_back(e);
            e = (2 * e) % n;
        } while (e != c);
        cosets.push_back(std::move(coset));
    }

    // multiplicative order of 2 mod n = size of the coset of 1
    int ord = 0;
    for (const auto& coset : cosets)
        if (std::find(coset.begin(), coset.end(), 1) != coset.end()) ord = static_cast<int>(coset.size());

    GF2m gf{ord, find_irreducible_bits(ord)};
    const std::uint64_t group_order = (ord == 63) ? (~0ull >> 1) : (1ull << ord) - 1;
    if (group_order % n != 0) throw internal_error("order of 2 mod n inconsistent");
    const std::uint64_t cofactor = group_order / n;

    // Element of multiplicative order exactly n.
    std::uint64_t beta = 0;
    const auto nprimes = prime_divisors(n);
    for (std::uint64_t gamma = 2; gamma <= gf.mask(); ++gamma) {
        std::uint64_t cand = gf.pow(gamma, cofactor);
        if (cand == 1) continue;
        bool exact = gf.pow(cand, n) == 1;
        for (int p : nprimes)
            if (exact && gf.pow(cand, n / p) == 1) exact = false;
        if (exact) {
            beta = cand;
            break;
        }
    }
    if (beta == 0) throw internal_error("no element of order n found");

    // Minimal polynomial of beta^c over F2 for each coset: prod (x + beta^e).
    std::vector<F2Poly> factors;
    for (const auto& coset : cosets) {
        std::vector<std::uint64_t> poly{1};  // coefficients in F_{2^ord}, ascending
        for (int e : coset) {
            std::uint64_t root = gf.pow(beta, e);
            std::vector<std::uint64_t> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] ^= poly[i];
                next[i] ^= gf.mul(poly[i], root);
            }
            poly = std::move(next);
        }
        std::vector<std::uint8_t> bits(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] > 1) throw internal_error("minimal polynomial not over F2");
            bits[i] = static_cast<std::uint8_t>(poly[i]);
        }
        factors.emplace_back(std::move(bits));
    }

    std::sort(factors.begin(), factors.end(), factor_order_less);

    F2Poly prod = F2Poly::one();
    for (const auto& f : factors) prod = prod * f;
    F2Poly target = F2Poly::x_power(n) + F2Poly::one();
    if (prod != target) throw internal_error("factor product check failed");
    return factors;
}

Z4Poly xn_minus_1(int n) {
    std::vector<std::uint8_t> v(n + 1, 0);
    v[0] = 3;
    v[n] = 1;
    return Z4Poly(std::move(v));
}

Z4Poly hensel_lift(const F2Poly& g, int n) {
    if (g.is_zero() || g.coeff(g.degree()) != 1)
        throw bad_input("hensel_lift: input must be monic and nonzero");
    const int d = g.degree();
    // g(x) = E(x^2) + x*O(x^2); f(x^2) = +-(E^2 - x^2 O^2) = +-g(x)g(-x).
    std::vector<std::uint8_t> even, odd;
    for (int i = 0; i <= d; i += 2) even.push_back(g.coeff(i));
    for (int i = 1; i <= d; i += 2) odd.push_back(g.coeff(i));
    Z4Poly E = lift_to_z4(F2Poly(std::move(even)));
    Z4Poly O = lift_to_z4(F2Poly(std::move(odd)));
    Z4Poly h = E * E - Z4Poly::x_power(1) * O * O;
    if (h.degree() != d) throw internal_error("hensel_lift: degree mismatch");
    if (h.coeff(d) == 3) h = -h;
    if (!h.is_monic() || reduce_mod2(h) != g)
        throw internal_error("hensel_lift: lift is not a monic preimage");
    auto [q, r] = xn_minus_1(n).divmod(h);
    (void)q;
    if (!r.is_zero()) throw bad_input("hensel_lift: input does not divide x^n + 1");
    return h;
}

std::pair<Z4Poly, Z4Poly> bezout_pair(const Z4Poly& F, const Z4Poly& f) {
    auto eg = extended_gcd(reduce_mod2(F), reduce_mod2(f));
    if (!eg.g.is_one()) throw bad_input("bezout_pair: inputs are not coprime mod 2");
    Z4Poly v0 = lift_to_z4(eg.a);
    Z4Poly w0 = lift_to_z4(eg.b);
    // v0*F + w0*f = 1 + 2*eps; multiply both by 1 - 2*eps to kill the error.
    Z4Poly excess = v0 * F + w0 * f - Z4Poly::one();
    std::vector<std::uint8_t> half(excess.coeffs().size());
    for (std::size_t i = 0; i < half.size(); ++i) {
        if (excess.coeffs()[i] & 1) throw internal_error("bezout_pair: odd excess");
        half[i] = excess.coeffs()[i] >> 1;
    }
    Z4Poly corr = Z4Poly::one() - Z4Poly(std::move(half)) * 2;
    Z4Poly v = v0 * corr;
    Z4Poly w = w0 * corr;
    if (v * F + w * f != Z4Poly::one()) throw internal_error("bezout_pair: identity failed");
    return {v, w};
}

std::vector<Z4Poly> idempotents(int n) {
    auto fbar = factor_xn_minus_1_f2(n);
    std::vector<Z4Poly> es;
    const Z4Poly whole = xn_minus_1(n);
    for (const auto& g : fbar) {
        Z4Poly f = hensel_lift(g, n);
        Z4Poly F = whole.divmod(f).first;
        auto [v, w] = bezout_pair(F, f);
        es.push_back((v * F).mod_xn_minus_1(n));
    }
    return es;
}

Z4Poly reciprocal(const Z4Poly& f) {
    if (f.is_zero()) throw bad_input("reciprocal of the zero polynomial");
    std::vector<std::uint8_t> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Z4Poly(std::move(v));
}

F2Poly reciprocal(const F2Poly& f) {
    if (f.is_zero()) throw bad_input("reciprocal of the zero polynomial");
    std::vector<std::uint8_t> v(f.coeffs().rbegin(), f.coeffs().rend());
    return F2Poly(std::move(v));
}

}  // namespace z4u
