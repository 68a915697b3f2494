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

#include "z4u/idealenum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "z4u/errors.hpp"

namespace z4u {

std::string to_string(IdealCase c) {
    switch (c) {
        case IdealCase::I: return "I";
        case IdealCase::II: return "II";
        case IdealCase::III: return "III";
        case IdealCase::IV: return "IV";
        case IdealCase::V: return "V";
        case IdealCase::VI: return "VI";
    }
    throw internal_error("unknown ideal case");
}

/* ------------------------------------------------------------- IdealSpec */

namespace {

ChainEl padded(const ChainEl& h, int k, int quotient_len) {
    if (h.chain_length() < quotient_len)
        throw bad_input("unit parameter shorter than its quotient");
    ChainEl r(h.field(), k);
    for (int l = 0; l < quotient_len; ++l) r.set_u_coeff(l, h.u_coeff(l));
    // everything at or above the quotient is irrelevant; keep it zero
    for (int l = quotient_len; l < h.chain_length(); ++l)
        if (!h.u_coeff(l).is_zero() && l < k)
            throw bad_input("unit parameter has coefficients beyond its quotient");
    return r;
}

}  // namespace

IdealSpec IdealSpec::case_I(FieldPtr field, int k, int i) {
    IdealSpec s;
    s.case_ = IdealCase::I;
    s.i_ = i;
    s.k_ = k;
    s.field_ = std::move(field);
    s.h_ = ChainEl(s.field_, k);
    s.validate();
    return s;
}

IdealSpec IdealSpec::case_II(FieldPtr field, int k, int sexp) {
    IdealSpec s;
    s.case_ = IdealCase::II;
    s.s_ = sexp;
    s.k_ = k;
    s.field_ = std::move(field);
    s.h_ = ChainEl(s.field_, k);
    s.validate();
    return s;
}

IdealSpec IdealSpec::case_III(int k, int i, int t, ChainEl h) {
    IdealSpec s;
    s.case_ = IdealCase::III;
    s.i_ = i;
    s.t_ = t;
    s.k_ = k;
    s.field_ = h.field();
    s.h_ = padded(h, k, i - t);
    s.validate();
    return s;
}

IdealSpec IdealSpec::case_IV(int k, int i, int t, ChainEl h) {
    IdealSpec s;
    s.case_ = IdealCase::IV;
    s.i_ = i;
    s.t_ = t;
    s.k_ = k;
    s.field_ = h.field();
    s.h_ = padded(h, k, k - i);
    s.validate();
    return s;
}

IdealSpec IdealSpec::case_V(FieldPtr field, int k, int i, int sexp) {
    IdealSpec s;
    s.case_ = IdealCase::V;
    s.i_ = i;
    s.s_ = sexp;
    s.k_ = k;
    s.field_ = std::move(field);
    s.h_ = ChainEl(s.field_, k);
    s.validate();
    return s;
}

IdealSpec IdealSpec::case_VI(int k, int i, int sexp, int t, ChainEl h) {
    IdealSpec s;
    s.case_ = IdealCase::VI;
    s.i_ = i;
    s.s_ = sexp;
    s.t_ = t;
    s.k_ = k;
    s.field_ = h.field();
    s.h_ = padded(h, k, sexp - t);
    s.validate();
    return s;
}

void IdealSpec::validate() const {
    if (k_ < 2) throw bad_input("chain length k must be at least 2");
    auto check = [&](bool ok) {
        if (!ok) throw bad_input("ideal parameters violate the case constraints: " + to_string());
    };
    switch (case_) {
        case IdealCase::I:
            check(0 <= i_ && i_ <= k_);
            break;
        case IdealCase::II:
            check(0 <= s_ && s_ <= k_ - 1);
            break;
        case IdealCase::III:
            check(0 <= t_ && t_ < i_ && i_ <= k_ - 1 && t_ >= 2 * i_ - k_);
            check(h_.truncate(i_ - t_).is_unit());
            break;
        case IdealCase::IV:
            check(0 <= t_ && t_ < i_ && i_ <= k_ - 1 && t_ < 2 * i_ - k_);
            check(h_.truncate(k_ - i_).is_unit());
            break;
        case IdealCase::V:
            check(0 <= s_ && s_ < i_ && i_ <= k_ - 1);
            break;
        case IdealCase::VI:
            check(0 <= t_ && t_ < s_ && s_ < i_ && i_ <= k_ - 1 && i_ + s_ <= k_ + t_ - 1);
            check(h_.truncate(s_ - t_).is_unit());
            break;
    }
}

int IdealSpec::h_quotient_length() const {
    switch (case_) {
        case IdealCase::III: return i_ - t_;
        case IdealCase::IV: return k_ - i_;
        case IdealCase::VI: return s_ - t_;
        default: return 0;
    }
}

int IdealSpec::log2_cardinality() const {
    const int d = field_->degree;
    switch (case_) {
        case IdealCase::I:
        case IdealCase::III: return 2 * d * (k_ - i_);
        case IdealCase::II: return d * (k_ - s_);
        case IdealCase::IV: return d * (k_ - t_);
        case IdealCase::V:
        case IdealCase::VI: return d * (2 * k_ - (i_ + s_));
    }
    throw internal_error("unknown ideal case");
}

int IdealSpec::tor0_exponent() const {
    switch (case_) {
        case IdealCase::I:
        case IdealCase::III:
        case IdealCase::IV:
        case IdealCase::V:
        case IdealCase::VI: return i_;
        case IdealCase::II: return k_;
    }
    throw internal_error("unknown ideal case");
}

int IdealSpec::tor1_exponent() const {
    switch (case_) {
        case IdealCase::I: return i_;
        case IdealCase::II: return s_;
        case IdealCase::III: return i_;
        case IdealCase::IV: return k_ - i_ + t_;
        case IdealCase::V:
        case IdealCase::VI: return s_;
    }
    throw internal_error("unknown ideal case");
}

std::vector<MixedEl> IdealSpec::generators(const RingPtr& ring) const {
    if (!same_field(ring->field, field_)) throw bad_input("generators: ring/field mismatch");
    std::vector<MixedEl> gens;
    auto twisted = [&]() {
        MixedEl g = MixedEl::u_power(ring, k_, i_);
        MixedEl twist(ring, k_);
        for (int l = 0; l < h_quotient_length() && t_ + l < k_; ++l)
            twist.set_u_coeff(t_ + l, lift_to_z4(h_.u_coeff(l)) * 2);
        return g + twist;
    };
    switch (case_) {
        case IdealCase::I:
            gens.push_back(MixedEl::u_power(ring, k_, i_));
            break;
        case IdealCase::II: {
            MixedEl g(ring, k_);
            g.set_u_coeff(s_, Z4Poly({2}));
            gens.push_back(g);
            break;
        }
        case IdealCase::III:
        case IdealCase::IV:
            gens.push_back(twisted());
            break;
        case IdealCase::V: {
            gens.push_back(MixedEl::u_power(ring, k_, i_));
            MixedEl g(ring, k_);
            g.set_u_coeff(s_, Z4Poly({2}));
            gens.push_back(g);
            break;
        }
        case IdealCase::VI: {
            gens.push_back(twisted());
            MixedEl g(ring, k_);
            g.set_u_coeff(s_, Z4Poly({2}));
            gens.push_back(g);
            break;
        }
    }
    return gens;
}

bool IdealSpec::operator==(const IdealSpec& rhs) const {
    return case_ == rhs.case_ && i_ == rhs.i_ && s_ == rhs.s_ && t_ == rhs.t_ && k_ == rhs.k_ &&
           same_field(field_, rhs.field_) && h_ == rhs.h_;
}

bool IdealSpec::operator<(const IdealSpec& rhs) const {
    if (case_ != rhs.case_) return case_ < rhs.case_;
    if (i_ != rhs.i_) return i_ < rhs.i_;
    if (s_ != rhs.s_) return s_ < rhs.s_;
    if (t_ != rhs.t_) return t_ < rhs.t_;
    for (int l = 0; l < k_; ++l) {
        auto a = field_->bits(h_.u_coeff(l));
        auto b = rhs.field_->bits(rhs.h_.u_coeff(l));
        if (a != b) return a < b;
    }
    return false;
}

std::string IdealSpec::to_string() const {
    auto upow = [](int e) {
        if (e == 0) return std::string("1");
        if (e == 1) return std::string("u");
        return "u^" + std::to_string(e);
    };
    auto hstr = [&]() {
        int last = 0;
        for (int l = 0; l < h_quotient_length(); ++l)
            if (!h_.u_coeff(l).is_zero()) last = l;
        std::string s;
        for (int l = 0; l <= last; ++l) {
            if (l) s += ",";
            s += h_.u_coeff(l).to_string();
        }
        return s;
    };
    switch (case_) {
        case IdealCase::I: return "<" + upow(i_) + ">";
        case IdealCase::II: return s_ == 0 ? "<2>" : "<2" + upow(s_) + ">";
        case IdealCase::III:
        case IdealCase::IV: {
            std::string tw = t_ == 0 ? "2" : "2" + upow(t_);
            return "<" + upow(i_) + "+" + tw + "*(" + hstr() + ")>";
        }
        case IdealCase::V:
            return "<" + upow(i_) + "," + (s_ == 0 ? "2" : "2" + upow(s_)) + ">";
        case IdealCase::VI: {
            std::string tw = t_ == 0 ? "2" : "2" + upow(t_);
            return "<" + upow(i_) + "+" + tw + "*(" + hstr() + ")," +
                   (s_ == 0 ? "2" : "2" + upow(s_)) + ">";
        }
    }
    throw internal_error("unknown ideal case");
}

/* ----------------------------------------------------------- enumeration */

void for_each_ideal_spec(const FieldPtr& field, int k,
                         const std::function<void(const IdealSpec&)>& fn) {
    if (k < 2) throw bad_input("chain length k must be at least 2");
    for (int i = 0; i <= k; ++i) fn(IdealSpec::case_I(field, k, i));
    for (int s = 0; s <= k - 1; ++s) fn(IdealSpec::case_II(field, k, s));
    for (int i = 1; i <= k - 1; ++i)
        for (int t = std::max(0, 2 * i - k); t < i; ++t) {
            UnitStream units(field, i - t);
            while (auto h = units.next()) fn(IdealSpec::case_III(k, i, t, *h));
        }
    for (int i = 1; i <= k - 1; ++i)
        for (int t = 0; t < std::min(i, 2 * i - k); ++t) {
            UnitStream units(field, k - i);
            while (auto h = units.next()) fn(IdealSpec::case_IV(k, i, t, *h));
        }
    for (int i = 1; i <= k - 1; ++i)
        for (int s = 0; s < i; ++s) fn(IdealSpec::case_V(field, k, i, s));
    for (int i = 2; i <= k - 1; ++i)
        for (int s = 1; s < i; ++s)
            for (int t = 0; t < s; ++t) {
                if (i + s > k + t - 1) continue;
                UnitStream units(field, s - t);
                while (auto h = units.next()) fn(IdealSpec::case_VI(k, i, s, t, *h));
            }
}

std::vector<IdealSpec> enumerate_ideal_specs(const FieldPtr& field, int k) {
    std::vector<IdealSpec> out;
    for_each_ideal_spec(field, k, [&](const IdealSpec& s) { out.push_back(s); });
    return out;
}

/* -------------------------------------------------------------- counting */

namespace {

std::uint64_t upow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

std::uint64_t omega1(std::uint64_t q, int k) {
    if (k % 2 == 0)
        return (upow(q, k / 2 + 1) + upow(q, k / 2) - 2) / (q - 1) - (k + 1);
    return 2 * (upow(q, (k + 1) / 2) - 1) / (q - 1) - (k + 1);
}

std::uint64_t omega2(std::uint64_t q, int k) {
    std::uint64_t total = 0;
    int lo = (k % 2 == 0) ? k / 2 + 1 : (k + 1) / 2;
    for (int i = lo; i <= k - 1; ++i) total += (2 * i - k) * upow(q, k - i - 1);
    return (q - 1) * total;
}

std::uint64_t gamma_count(std::uint64_t q, int k) {
    if (k <= 3) return 0;
    std::uint64_t g = 1;  // value at rho = 4
    for (int rho = 5; rho <= k; ++rho) {
        std::uint64_t add = 0;
        for (int s = 1; s <= rho / 2 - 1; ++s) add += (rho - 2 * s - 1) * upow(q, s - 1);
        g += add;
    }
    return g;
}

}  // namespace

IdealCount count_formulas(int d, int k) {
    if (d < 1 || k < 2) throw bad_input("count_formulas requires d >= 1, k >= 2");
    if (d * (k / 2 + 1) > 62) throw bad_input("count_formulas: parameters too large");
    const std::uint64_t q = 1ull << d;
    IdealCount c;
    c.case_I = k + 1;
    c.case_II = k;
    c.case_III = omega1(q, k);
    c.case_IV = omega2(q, k);
    c.case_V = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    c.case_VI = (q - 1) * gamma_count(q, k);
    const int rho = k / 2;
    std::uint64_t total = 0;
    if (k % 2 == 0)
        for (int i = 0; i <= rho; ++i) total += (1 + 4 * static_cast<std::uint64_t>(i)) * upow(2, (rho - i) * d);
    else
        for (int i = 0; i <= rho; ++i) total += (3 + 4 * static_cast<std::uint64_t>(i)) * upow(2, (rho - i) * d);
    c.total = total;
    return c;
}

/* -------------------------------------------------------- dense oracle */

DenseMixedRing::DenseMixedRing(RingPtr ring, int k, std::uint64_t max_size)
    : ring_(std::move(ring)), k_(k), digits_(ring_->degree * k) {
    if (k < 2) throw bad_input("chain length k must be at least 2");
    if (digits_ * 2 >= 63) throw budget_exceeded("ring too large to materialize");
    size_ = 1ull << (2 * digits_);
    if (size_ > max_size) throw budget_exceeded("ring larger than the materialization budget");
}

MixedEl DenseMixedRing::element(std::uint64_t idx) const {
    const int d = ring_->degree;
    MixedEl e(ring_, k_);
    for (int l = 0; l < k_; ++l) {
        std::vector<std::uint8_t> c(d);
        for (int j = 0; j < d; ++j) {
            c[j] = static_cast<std::uint8_t>(idx & 3);
            idx >>= 2;
        }
        e.set_u_coeff(l, Z4Poly(std::move(c)));
    }
    return e;
}

std::uint64_t DenseMixedRing::index(const MixedEl& e) const {
    const int d = ring_->degree;
    std::uint64_t idx = 0;
    for (int l = k_ - 1; l >= 0; --l)
        for (int j = d - 1; j >= 0; --j) idx = (idx << 2) | e.u_coeff(l).coeff(j);
    return idx;
}

std::uint64_t DenseMixedRing::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    for (int j = 0; j < digits_; ++j)
        r |= (((a >> (2 * j)) + (b >> (2 * j))) & 3) << (2 * j);
    return r;
}

std::uint64_t DenseMixedRing::mul(std::uint64_t a, std::uint64_t b) const {
    return index(element(a) * element(b));
}

std::vector<std::uint64_t> DenseMixedRing::ideal_span(const std::vector<MixedEl>& ring_gens) const {
    std::vector<char> in(size_, 0);
    std::vector<std::uint64_t> members{0};
    in[0] = 1;
    const int d = ring_->degree;
    for (const auto& g : ring_gens) {
        for (int b = 0; b < k_; ++b)
            for (int a = 0; a < d; ++a) {
                MixedEl mono = g.shift_up(b);
                MixedEl shifted(ring_, k_);
                for (int l = 0; l < k_; ++l)
                    shifted.set_u_coeff(l, mono.u_coeff(l) * Z4Poly::x_power(a));
                std::uint64_t gi = index(shifted);
                if (gi == 0) continue;
                // close the current span under adding multiples of gi
                std::vector<std::uint64_t> frontier = members;
                for (int c = 1; c <= 3; ++c) {
                    std::uint64_t cg = c == 1 ? gi : add(gi, c == 2 ? gi : add(gi, gi));
                    for (std::uint64_t m : members) {
                        std::uint64_t sum = add(m, cg);
                        if (!in[sum]) {
                            in[sum] = 1;
                            frontier.push_back(sum);
                        }
                    }
                }
                members = std::move(frontier);
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::uint64_t> ideal_member_indices(const DenseMixedRing& R, const IdealSpec& spec) {
    return R.ideal_span(spec.generators(R.ring()));
}

std::vector<MixedEl> ideal_members(const IdealSpec& spec, const RingPtr& ring,
                                   std::uint64_t max_members) {
    const int k = spec.k();
    const int d = ring->degree;
    auto key_of = [&](const MixedEl& e) {
        std::vector<std::uint8_t> key(static_cast<std::size_t>(d) * k);
        for (int l = 0; l < k; ++l)
            for (int i = 0; i < d; ++i) key[static_cast<std::size_t>(l) * d + i] = e.u_coeff(l).coeff(i);
        return key;
    };
    std::map<std::vector<std::uint8_t>, std::size_t> seen;
    std::vector<MixedEl> members{MixedEl(ring, k)};
    seen.emplace(key_of(members[0]), 0);
    for (const auto& g : spec.generators(ring)) {
        for (int b = 0; b < k; ++b)
            for (int a = 0; a < d; ++a) {
                MixedEl mono(ring, k);
                for (int l = 0; l + b < k; ++l)
                    mono.set_u_coeff(l + b, g.u_coeff(l) * Z4Poly::x_power(a));
                if (mono.is_zero()) continue;
                const std::size_t snapshot = members.size();
                MixedEl cg = mono;
                for (int c = 1; c <= 3; ++c) {
                    for (std::size_t m = 0; m < snapshot; ++m) {
                        MixedEl sum = members[m] + cg;
                        auto key = key_of(sum);
                        if (seen.find(key) == seen.end()) {
                            if (members.size() >= max_members)
                                throw budget_exceeded("ideal larger than the materialization budget");
                            seen.emplace(std::move(key), members.size());
                            members.push_back(std::move(sum));
                        }
                    }
                    if (c < 3) cg = cg + mono;
                }
            }
    }
    std::sort(members.begin(), members.end(),
              [&](const MixedEl& a, const MixedEl& b) { return key_of(a) < key_of(b); });
    return members;
}

std::vector<std::vector<std::uint64_t>> brute_force_all_ideals(const DenseMixedRing& R) {
    // principal ideals from every single element
    std::set<std::vector<std::uint64_t>> ideals;
    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> with_gens;
    for (std::uint64_t a = 0; a < R.size(); ++a) {
        auto members = R.ideal_span({R.element(a)});
        if (ideals.insert(members).second) with_gens.push_back({members, {a}});
    }
    // close under pairwise join until fixpoint
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = with_gens;
        for (std::size_t x = 0; x < snapshot.size(); ++x)
            for (std::size_t y = x + 1; y < snapshot.size(); ++y) {
                std::vector<MixedEl> gens;
                for (std::uint64_t g : snapshot[x].second) gens.push_back(R.element(g));
                for (std::uint64_t g : snapshot[y].second) gens.push_back(R.element(g));
                auto members = R.ideal_span(gens);
                if (ideals.insert(members).second) {
                    std::vector<std::uint64_t> gi = snapshot[x].second;
                    gi.insert(gi.end(), snapshot[y].second.begin(), snapshot[y].second.end());
                    with_gens.push_back({members, gi});
                    grew = true;
                }
            }
    }
    return {ideals.begin(), ideals.end()};
}

/* ------------------------------------------------------------ membership */

bool ideal_contains(const IdealSpec& spec, const RingPtr& ring, const MixedEl& beta) {
    if (!same_field(ring->field, spec.field())) throw bad_input("ideal_contains: ring mismatch");
    const int k = spec.k();
    const int i = spec.tor0_exponent();
    const int s = spec.tor1_exponent();
    ChainEl top = tau(beta);
    if (top.u_valuation() < i) return false;
    MixedEl rem = beta;
    if (i < k) {
        // subtract (the unit-part generator) * embed(rho) with u^i rho = tau(beta)
        ChainEl rho = top.shift_down(i);
        rem = beta - spec.generators(ring)[0] * embed(rho, ring);
    }
    auto [r0, r1] = two_adic_split(rem);
    if (!r0.is_zero()) return false;
    return r1.u_valuation() >= s;
}

}  // namespace z4u
