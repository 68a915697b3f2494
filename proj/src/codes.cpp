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

#include "z4u/codes.hpp"

#include <algorithm>

#include "z4u/errors.hpp"

namespace z4u {

/* ------------------------------------------------------------ FactorSystem */

std::shared_ptr<const FactorSystem> FactorSystem::build(int n) {
    auto fbar = factor_xn_minus_1_f2(n);  // canonical order
    const Z4Poly whole = xn_minus_1(n);

    std::vector<FactorInfo> infos;
    for (const auto& g : fbar) {
        FactorInfo fi;
        fi.fbar = g;
        fi.f = hensel_lift(g, n);
        fi.d = g.degree();
        fi.ring = std::make_shared<const GaloisRing>(fi.f);
        Z4Poly F = whole.divmod(fi.f).first;
        auto [v, w] = bezout_pair(F, fi.f);
        fi.v = v;
        fi.w = w;
        fi.e = (v * F).mod_xn_minus_1(n);
        fi.delta = 0;  // set below
        infos.push_back(std::move(fi));
    }

    // reciprocal pairing: reciprocal(f_j) = delta_j * f_pair(j)
    const int r = static_cast<int>(infos.size());
    std::vector<int> pair(r, -1), delta(r, 0);
    for (int j = 0; j < r; ++j) {
        Z4Poly rec = reciprocal(infos[j].f);
        int lead = rec.coeff(rec.degree());
        if (lead != 1 && lead != 3) throw internal_error("reciprocal factor is not unit-led");
        Z4Poly monic = (lead == 3) ? rec * 3 : rec;
        auto it = std::find_if(infos.begin(), infos.end(),
                               [&](const FactorInfo& fi) { return fi.f == monic; });
        if (it == infos.end()) throw internal_error("reciprocal factor not found");
        pair[j] = static_cast<int>(it - infos.begin());
        delta[j] = lead;
    }

    // block arrangement: self-paired first, then (pair first, pair second)
    std::vector<int> order;
    for (int j = 0; j < r; ++j)
        if (pair[j] == j) order.push_back(j);
    const int lambda = static_cast<int>(order.size());
    std::vector<int> firsts;
    for (int j = 0; j < r; ++j)
        if (pair[j] > j) firsts.push_back(j);
    const int epsilon = static_cast<int>(firsts.size());
    for (int j : firsts) order.push_back(j);
    for (int j : firsts) order.push_back(pair[j]);

    auto sys = std::shared_ptr<FactorSystem>(new FactorSystem());
    sys->n_ = n;
    sys->lambda_ = lambda;
    sys->epsilon_ = epsilon;
    std::vector<int> position(r);
    for (int p = 0; p < r; ++p) position[order[p]] = p;
    for (int p = 0; p < r; ++p) {
        FactorInfo fi = infos[order[p]];
        fi.delta = delta[order[p]];
        sys->factors_.push_back(std::move(fi));
    }
    sys->sigma_.resize(r);
    for (int p = 0; p < r; ++p) sys->sigma_[p] = position[pair[order[p]]];

    // structural checks: product, idempotent identities, pairing
    Z4Poly prod = Z4Poly::one();
    Z4Poly esum = Z4Poly::zero();
    for (const auto& fi : sys->factors_) {
        prod = prod * fi.f;
        esum = esum + fi.e;
    }
    if (prod != whole) throw internal_error("factor product mismatch");
    if (esum.mod_xn_minus_1(n) != Z4Poly::one()) throw internal_error("idempotents do not sum to 1");
    for (int j = 0; j < r; ++j) {
        if (sys->sigma_[sys->sigma_[j]] != j) throw internal_error("sigma is not an involution");
        Z4Poly expect = sys->factors_[sys->sigma_[j]].f * sys->factors_[j].delta;
        if (reciprocal(sys->factors_[j].f) != expect)
            throw internal_error("reciprocal pairing mismatch");
    }
    if (lambda + 2 * epsilon != r) throw internal_error("block sizes inconsistent");
    return sys;
}

/* ------------------------------------------------------------- CodeElement */

bool CodeElement::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint8_t v) { return v == 0; });
}

CodeElement CodeElement::operator+(const CodeElement& rhs) const {
    if (n_ != rhs.n_ || k_ != rhs.k_) throw bad_input("code element dimension mismatch");
    CodeElement r(n_, k_);
    for (std::size_t p = 0; p < a_.size(); ++p)
        r.a_[p] = static_cast<std::uint8_t>((a_[p] + rhs.a_[p]) & 3);
    return r;
}

CodeElement CodeElement::operator-(const CodeElement& rhs) const {
    if (n_ != rhs.n_ || k_ != rhs.k_) throw bad_input("code element dimension mismatch");
    CodeElement r(n_, k_);
    for (std::size_t p = 0; p < a_.size(); ++p)
        r.a_[p] = static_cast<std::uint8_t>((a_[p] + 4 - rhs.a_[p]) & 3);
    return r;
}

CodeElement CodeElement::times_x() const {
    CodeElement r(n_, k_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < k_; ++l) r.set((i + 1) % n_, l, at(i, l));
    return r;
}

CodeElement CodeElement::times_u() const {
    CodeElement r(n_, k_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l + 1 < k_; ++l) r.set(i, l + 1, at(i, l));
    return r;
}

CodeElement CodeElement::times_a(const Z4Poly& a) const {
    CodeElement r(n_, k_);
    for (int l = 0; l < k_; ++l) r.set_a_coeff(l, (a_coeff(l) * a).mod_xn_minus_1(n_));
    return r;
}

CodeElement CodeElement::times_r(const std::vector<std::uint8_t>& rc) const {
    if (static_cast<int>(rc.size()) != k_) throw bad_input("R-scalar has wrong length");
    CodeElement r(n_, k_);
    for (int i = 0; i < n_; ++i)
        for (int a = 0; a < k_; ++a) {
            if (at(i, a) == 0) continue;
            for (int b = 0; a + b < k_; ++b)
                r.set(i, a + b, r.at(i, a + b) + at(i, a) * rc[b]);
        }
    return r;
}

CodeElement CodeElement::sub_x_inverse() const {
    CodeElement r(n_, k_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < k_; ++l) r.set((n_ - i) % n_, l, at(i, l));
    return r;
}

Z4Poly CodeElement::a_coeff(int l) const {
    std::vector<std::uint8_t> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = at(i, l);
    return Z4Poly(std::move(v));
}

void CodeElement::set_a_coeff(int l, const Z4Poly& a) {
    for (int i = 0; i < n_; ++i) set(i, l, a.coeff(i));
}

std::vector<std::uint8_t> CodeElement::r_coeff(int i) const {
    std::vector<std::uint8_t> v(k_);
    for (int l = 0; l < k_; ++l) v[l] = at(i, l);
    return v;
}

/* -------------------------------------------------------------- CyclicCode */

int CyclicCode::log2_size() const {
    int e = 0;
    for (const auto& s : specs) e += s.log2_cardinality();
    return e;
}

bool CyclicCode::operator==(const CyclicCode& rhs) const {
    return system == rhs.system && k == rhs.k && specs == rhs.specs;
}

CyclicCode assemble_code(FactorSystemPtr system, int k, std::vector<IdealSpec> specs) {
    if (k < 2) throw bad_input("chain length k must be at least 2");
    if (static_cast<int>(specs.size()) != system->r())
        throw bad_input("one ideal per factor is required");
    for (int j = 0; j < system->r(); ++j) {
        if (specs[j].k() != k) throw bad_input("ideal chain length does not match the code");
        if (!same_field(specs[j].field(), system->factor(j).ring->field))
            throw bad_input("ideal field does not match its factor");
    }
    return CyclicCode{std::move(system), k, std::move(specs)};
}

BigUint count_cyclic_codes(const FactorSystem& system, int k) {
    BigUint total(1);
    for (const auto& fi : system.factors()) total *= count_formulas(fi.d, k).total;
    return total;
}

BigUint count_cyclic_codes(int n, int k) {
    return count_cyclic_codes(*FactorSystem::build(n), k);
}

CodeElement factor_contribution(const FactorSystem& system, int j, const MixedEl& beta, int k) {
    const int n = system.n();
    CodeElement w(n, k);
    for (int l = 0; l < k; ++l)
        w.set_a_coeff(l, (system.factor(j).e * beta.u_coeff(l)).mod_xn_minus_1(n));
    return w;
}

/* ---------------------------------------------------------- CodewordStream */

CodewordStream::CodewordStream(const CyclicCode& code, std::uint64_t budget)
    : n_(code.system->n()), k_(code.k) {
    total_ = 1;
    if (code.log2_size() >= 63 || (1ull << code.log2_size()) > budget)
        throw budget_exceeded("codeword enumeration over budget");
    for (int j = 0; j < code.system->r(); ++j) {
        const auto& spec = code.specs[j];
        auto members = ideal_members(spec, code.system->factor(j).ring, budget);
        std::vector<CodeElement> contrib;
        contrib.reserve(members.size());
        for (const auto& beta : members)
            contrib.push_back(factor_contribution(*code.system, j, beta, k_));
        radices_.push_back(contrib.size());
        total_ *= contrib.size();
        contribs_.push_back(std::move(contrib));
    }
    cursor_ = 0;
}

CodeElement CodewordStream::at(std::uint64_t index) const {
    CodeElement w(n_, k_);
    for (std::size_t j = 0; j < contribs_.size(); ++j) {
        w = w + contribs_[j][index % radices_[j]];
        index /= radices_[j];
    }
    return w;
}

std::optional<CodeElement> CodewordStream::next() {
    if (cursor_ >= total_) return std::nullopt;
    return at(cursor_++);
}

void CodewordStream::reset() { cursor_ = 0; }

std::vector<CodeElement> enumerate_codewords(const CyclicCode& code, std::uint64_t budget) {
    CodewordStream st(code, budget);
    std::vector<CodeElement> out;
    out.reserve(st.total());
    while (auto w = st.next()) out.push_back(std::move(*w));
    return out;
}

/* -------------------------------------------------------------- membership */

MixedEl factor_component(const CyclicCode& code, int j, const CodeElement& w) {
    const auto& fi = code.system->factor(j);
    CodeElement projected = w.times_a(fi.e);
    MixedEl beta(fi.ring, code.k);
    for (int l = 0; l < code.k; ++l)
        beta.set_u_coeff(l, projected.a_coeff(l).divmod(fi.f).second);
    return beta;
}

bool codeword_membership(const CyclicCode& code, const CodeElement& w) {
    if (w.n() != code.system->n() || w.k() != code.k)
        throw bad_input("codeword dimensions do not match the code");
    for (int j = 0; j < code.system->r(); ++j) {
        MixedEl beta = factor_component(code, j, w);
        if (!ideal_contains(code.specs[j], code.system->factor(j).ring, beta)) return false;
    }
    return true;
}

}  // namespace z4u
