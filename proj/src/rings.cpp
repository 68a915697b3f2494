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

#include "z4u/rings.hpp"

#include <algorithm>

#include "z4u/errors.hpp"

namespace z4u {

F2Poly ResidueField::element(std::uint64_t bits) const {
    std::vector<std::uint8_t> v(degree);
    for (int i = 0; i < degree; ++i) v[i] = static_cast<std::uint8_t>(bits >> i & 1);
    return F2Poly(std::move(v));
}

std::uint64_t ResidueField::bits(const F2Poly& a) const {
    std::uint64_t b = 0;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i)) b |= 1ull << i;
    return b;
}

FieldPtr canonical_field(int degree) {
    return std::make_shared<const ResidueField>(canonical_irreducible_f2(degree));
}

RingPtr canonical_galois_ring(int degree) {
    F2Poly g = canonical_irreducible_f2(degree);
    int n = (1 << degree) - 1;
    if (degree == 1) n = 1;
    return std::make_shared<const GaloisRing>(hensel_lift(g, n));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && a->modulus == b->modulus);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->modulus == b->modulus);
}

/* --------------------------------------------------------------- ChainEl */

ChainEl::ChainEl(FieldPtr field, int s) : field_(std::move(field)), u_(s) {
    if (s < 1) throw bad_input("chain length must be positive");
}

ChainEl::ChainEl(FieldPtr field, std::vector<F2Poly> u_coeffs)
    : field_(std::move(field)), u_(std::move(u_coeffs)) {
    if (u_.empty()) throw bad_input("chain length must be positive");
    for (auto& c : u_) c = field_->reduce(c);
}

void ChainEl::set_u_coeff(int l, F2Poly v) { u_[l] = field_->reduce(std::move(v)); }

bool ChainEl::is_zero() const {
    return std::all_of(u_.begin(), u_.end(), [](const F2Poly& c) { return c.is_zero(); });
}

int ChainEl::u_valuation() const {
    for (int l = 0; l < chain_length(); ++l)
        if (!u_[l].is_zero()) return l;
    return chain_length();
}

ChainEl ChainEl::operator+(const ChainEl& rhs) const {
    if (!same_field(field_, rhs.field_) || chain_length() != rhs.chain_length())
        throw bad_input("chain ring mismatch in +");
    ChainEl r(field_, chain_length());
    for (int l = 0; l < chain_length(); ++l) r.u_[l] = u_[l] + rhs.u_[l];
    return r;
}

ChainEl ChainEl::operator*(const ChainEl& rhs) const {
    if (!same_field(field_, rhs.field_) || chain_length() != rhs.chain_length())
        throw bad_input("chain ring mismatch in *");
    ChainEl r(field_, chain_length());
    for (int a = 0; a < chain_length(); ++a) {
        if (u_[a].is_zero()) continue;
        for (int b = 0; a + b < chain_length(); ++b)
            r.u_[a + b] = r.u_[a + b] + field_->mul(u_[a], rhs.u_[b]);
    }
    return r;
}

bool ChainEl::operator==(const ChainEl& rhs) const {
    return same_field(field_, rhs.field_) && u_ == rhs.u_;
}

ChainEl ChainEl::shift_up(int e) const {
    ChainEl r(field_, chain_length());
    for (int l = 0; l + e < chain_length(); ++l) r.u_[l + e] = u_[l];
    return r;
}

ChainEl ChainEl::truncate(int m) const {
    ChainEl r(field_, chain_length());
    for (int l = 0; l < std::min(m, chain_length()); ++l) r.u_[l] = u_[l];
    return r;
}

ChainEl ChainEl::shift_down(int e) const {
    ChainEl r(field_, chain_length());
    for (int l = 0; l + e < chain_length(); ++l) r.u_[l] = u_[l + e];
    return r;
}

std::pair<int, ChainEl> unit_decompose(const ChainEl& a) {
    if (a.is_zero()) throw bad_input("unit_decompose of zero");
    int i = a.u_valuation();
    return {i, a.shift_down(i)};
}

/* --------------------------------------------------------------- MixedEl */

MixedEl::MixedEl(RingPtr ring, int k) : ring_(std::move(ring)), u_(k) {
    if (k < 1) throw bad_input("chain length must be positive");
}

MixedEl::MixedEl(RingPtr ring, std::vector<Z4Poly> u_coeffs)
    : ring_(std::move(ring)), u_(std::move(u_coeffs)) {
    if (u_.empty()) throw bad_input("chain length must be positive");
    for (auto& c : u_) c = ring_->reduce(c);
}

void MixedEl::set_u_coeff(int l, Z4Poly v) { u_[l] = ring_->reduce(std::move(v)); }

bool MixedEl::is_zero() const {
    return std::all_of(u_.begin(), u_.end(), [](const Z4Poly& c) { return c.is_zero(); });
}

MixedEl MixedEl::operator+(const MixedEl& rhs) const {
    if (!same_ring(ring_, rhs.ring_) || chain_length() != rhs.chain_length())
        throw bad_input("mixed ring mismatch in +");
    MixedEl r(ring_, chain_length());
    for (int l = 0; l < chain_length(); ++l) r.u_[l] = u_[l] + rhs.u_[l];
    return r;
}

MixedEl MixedEl::operator-(const MixedEl& rhs) const {
    if (!same_ring(ring_, rhs.ring_) || chain_length() != rhs.chain_length())
        throw bad_input("mixed ring mismatch in -");
    MixedEl r(ring_, chain_length());
    for (int l = 0; l < chain_length(); ++l) r.u_[l] = u_[l] - rhs.u_[l];
    return r;
}

MixedEl MixedEl::operator*(const MixedEl& rhs) const {
    if (!same_ring(ring_, rhs.ring_) || chain_length() != rhs.chain_length())
        throw bad_input("mixed ring mismatch in *");
    MixedEl r(ring_, chain_length());
    for (int a = 0; a < chain_length(); ++a) {
        if (u_[a].is_zero()) continue;
        for (int b = 0; a + b < chain_length(); ++b)
            r.u_[a + b] = r.u_[a + b] + ring_->mul(u_[a], rhs.u_[b]);
    }
    return r;
}

bool MixedEl::operator==(const MixedEl& rhs) const {
    return same_ring(ring_, rhs.ring_) && u_ == rhs.u_;
}

MixedEl MixedEl::shift_up(int e) const {
    MixedEl r(ring_, chain_length());
    for (int l = 0; l + e < chain_length(); ++l) r.u_[l + e] = u_[l];
    return r;
}

MixedEl MixedEl::u_power(RingPtr ring, int k, int e) {
    MixedEl r(std::move(ring), k);
    if (e < k) r.set_u_coeff(e, Z4Poly::one());
    return r;
}

MixedEl embed(const ChainEl& a, const RingPtr& ring) {
    if (!same_field(a.field(), ring->field)) throw bad_input("embed: field does not match ring");
    MixedEl r(ring, a.chain_length());
    for (int l = 0; l < a.chain_length(); ++l) r.set_u_coeff(l, lift_to_z4(a.u_coeff(l)));
    return r;
}

std::pair<ChainEl, ChainEl> two_adic_split(const MixedEl& a) {
    const FieldPtr& field = a.ring()->field;
    ChainEl eta0(field, a.chain_length()), eta1(field, a.chain_length());
    for (int l = 0; l < a.chain_length(); ++l) {
        const Z4Poly& c = a.u_coeff(l);
        std::vector<std::uint8_t> low(c.coeffs().size()), high(c.coeffs().size());
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            low[i] = c.coeffs()[i] & 1;
            high[i] = static_cast<std::uint8_t>((c.coeffs()[i] - (c.coeffs()[i] & 1)) >> 1);
        }
        eta0.set_u_coeff(l, F2Poly(std::move(low)));
        eta1.set_u_coeff(l, F2Poly(std::move(high)));
    }
    return {eta0, eta1};
}

ChainEl tau(const MixedEl& a) { return two_adic_split(a).first; }

MixedEl scaled_double_product(const ChainEl& xi, const ChainEl& eta, const RingPtr& ring) {
    ChainEl prod = xi * eta;  // computed in F[u]/<u^k> first
    MixedEl r(ring, prod.chain_length());
    for (int l = 0; l < prod.chain_length(); ++l)
        r.set_u_coeff(l, lift_to_z4(prod.u_coeff(l)) * 2);
    return r;
}

/* ------------------------------------------------------------- streams */

namespace {

ChainEl from_counter(const FieldPtr& field, const std::vector<std::uint64_t>& counter) {
    ChainEl r(field, static_cast<int>(counter.size()));
    for (std::size_t l = 0; l < counter.size(); ++l) r.set_u_coeff(static_cast<int>(l), field->element(counter[l]));
    return r;
}

// Odometer increment over s digits in [0, 2^d), most significant last.
bool advance(std::vector<std::uint64_t>& counter, std::uint64_t radix, std::size_t lowest) {
    for (std::size_t pos = counter.size(); pos-- > lowest;) {
        if (++counter[pos] < radix) return true;
        counter[pos] = 0;
    }
    return false;
}

}  // namespace

UnitStream::UnitStream(FieldPtr field, int s) : field_(std::move(field)), s_(s), done_(false) {
    if (s < 1) throw bad_input("chain length must be positive");
    reset();
}

void UnitStream::reset() {
    counter_.assign(s_, 0);
    counter_[0] = 1;  // u^0 coefficient must be nonzero
    done_ = false;
}

std::optional<ChainEl> UnitStream::next() {
    if (done_) return std::nullopt;
    ChainEl r = from_counter(field_, counter_);
    // low u-coefficients vary slowest: output is lexicographic in
    // (u^0, u^1, ...) tuples; the u^0 digit wrapping means exhaustion
    done_ = true;
    for (std::size_t pos = counter_.size(); pos-- > 0;) {
        if (++counter_[pos] < field_->size()) {
            done_ = false;
            break;
        }
        counter_[pos] = 0;
        if (pos == 0) break;
    }
    return r;
}

std::uint64_t UnitStream::count() const {
    const std::uint64_t q = field_->size();
    std::uint64_t c = q - 1;
    for (int l = 1; l < s_; ++l) c *= q;
    return c;
}

std::vector<ChainEl> enumerate_units(const FieldPtr& field, int s) {
    UnitStream st(field, s);
    std::vector<ChainEl> out;
    while (auto e = st.next()) out.push_back(*e);
    return out;
}

ChainElStream::ChainElStream(FieldPtr field, int s)
    : field_(std::move(field)), s_(s), counter_(s, 0), done_(false) {
    if (s < 1) throw bad_input("chain length must be positive");
}

std::optional<ChainEl> ChainElStream::next() {
    if (done_) return std::nullopt;
    ChainEl r = from_counter(field_, counter_);
    if (!advance(counter_, field_->size(), 0)) done_ = true;
    return r;
}

}  // namespace z4u
