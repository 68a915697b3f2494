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

#include "z4u/duality.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "z4u/errors.hpp"

namespace z4u {

std::vector<std::uint8_t> euclidean_inner_product(const CodeElement& a, const CodeElement& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw bad_input("inner product dimension mismatch");
    const int n = a.n(), k = a.k();
    std::vector<std::uint8_t> acc(k, 0);
    for (int i = 0; i < n; ++i)
        for (int l1 = 0; l1 < k; ++l1) {
            const std::uint8_t v = a.at(i, l1);
            if (v == 0) continue;
            for (int l2 = 0; l1 + l2 < k; ++l2)
                acc[l1 + l2] = static_cast<std::uint8_t>((acc[l1 + l2] + v * b.at(i, l2)) & 3);
        }
    return acc;
}

bool is_zero_r(const std::vector<std::uint8_t>& r) {
    return std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
}

ChainEl substitute_inverse(const ChainEl& h, const FactorSystem& system, int j) {
    const FieldPtr& target = system.factor(system.sigma(j)).ring->field;
    const int n = system.n();
    // X = x^(n-1) mod the target residue modulus
    F2Poly X = F2Poly::one();
    for (int e = 0; e < n - 1; ++e) X = target->reduce(X * F2Poly::x_power(1));
    ChainEl out(target, h.chain_length());
    for (int l = 0; l < h.chain_length(); ++l) {
        const F2Poly& b = h.u_coeff(l);
        F2Poly acc = F2Poly::zero();  // Horner: b(X)
        for (int i = b.degree(); i >= 0; --i) {
            acc = target->reduce(acc * X);
            if (b.coeff(i)) acc = acc + F2Poly::one();
        }
        out.set_u_coeff(l, acc);
    }
    return out;
}

IdealSpec dual_ideal_spec(const IdealSpec& spec, const FactorSystem& system, int j) {
    if (!same_field(spec.field(), system.factor(j).ring->field))
        throw bad_input("dual_ideal_spec: spec does not live at factor j");
    const int k = spec.k(), i = spec.i(), s = spec.s(), t = spec.t();
    const FieldPtr& target = system.factor(system.sigma(j)).ring->field;
    auto h_inv = [&](int quotient) {
        return substitute_inverse(spec.h().truncate(quotient), system, j);
    };

    IdealSpec dual;
    switch (spec.kase()) {
        case IdealCase::I:
            dual = IdealSpec::case_I(target, k, k - i);
            break;
        case IdealCase::II:
            dual = (s == 0) ? IdealSpec::case_II(target, k, 0)
                            : IdealSpec::case_V(target, k, k - s, 0);
            break;
        case IdealCase::III:
            dual = IdealSpec::case_III(k, k - i, k + t - 2 * i, h_inv(i - t));
            break;
        case IdealCase::IV:
            dual = (t == 0) ? IdealSpec::case_IV(k, i, 0, h_inv(k - i))
                            : IdealSpec::case_VI(k, i - t, k - i, 0, h_inv(k - i));
            break;
        case IdealCase::V:
            dual = (s == 0) ? IdealSpec::case_II(target, k, k - i)
                            : IdealSpec::case_V(target, k, k - s, k - i);
            break;
        case IdealCase::VI:
            dual = (t == 0) ? IdealSpec::case_IV(k, k - s, k - i - s, h_inv(s))
                            : IdealSpec::case_VI(k, k - s, k - i, k + t - i - s, h_inv(s - t));
            break;
    }
    if (spec.log2_cardinality() + dual.log2_cardinality() != 2 * spec.d() * k)
        throw internal_error("dual cardinality identity failed");
    return dual;
}

CyclicCode dual_code(const CyclicCode& code) {
    const FactorSystem& sys = *code.system;
    std::vector<IdealSpec> duals(code.specs.size());
    for (int j = 0; j < sys.r(); ++j)
        duals[sys.sigma(j)] = dual_ideal_spec(code.specs[j], sys, j);
    return assemble_code(code.system, code.k, std::move(duals));
}

/* ---------------------------------------------------------- self-duality */

namespace {

bool h_symmetric(const ChainEl& h, const FactorSystem& system, int j, int quotient) {
    ChainEl trunc = h.truncate(quotient);
    return substitute_inverse(trunc, system, j) == trunc;
}

void push_symmetric_units(std::vector<ChainEl>& out, const FieldPtr& field, int quotient,
                          const FactorSystem& system, int j) {
    UnitStream units(field, quotient);
    while (auto h = units.next())
        if (h_symmetric(*h, system, j, quotient)) out.push_back(*h);
}

}  // namespace

std::vector<IdealSpec> self_dual_self_paired_choices(const FactorSystem& system, int j, int k) {
    if (system.sigma(j) != j) throw bad_input("factor is not self-paired");
    const FieldPtr& field = system.factor(j).ring->field;
    std::vector<IdealSpec> out;
    if (k % 2 == 0) {
        out.push_back(IdealSpec::case_I(field, k, k / 2));
        out.push_back(IdealSpec::case_II(field, k, 0));
        for (int t = 0; t <= k / 2 - 1; ++t) {
            std::vector<ChainEl> hs;
            push_symmetric_units(hs, field, k / 2 - t, system, j);
            for (const auto& h : hs) out.push_back(IdealSpec::case_III(k, k / 2, t, h));
        }
        for (int i = k / 2 + 1; i <= k - 1; ++i) {
            std::vector<ChainEl> hs;
            push_symmetric_units(hs, field, k - i, system, j);
            for (const auto& h : hs) out.push_back(IdealSpec::case_IV(k, i, 0, h));
        }
        // <u^i, 2u^(k-i)> is a valid case V spec exactly when i > k/2; the
        // full range passes the brute-force self-duality filter
        for (int i = k / 2 + 1; i <= k - 1; ++i) out.push_back(IdealSpec::case_V(field, k, i, k - i));
        for (int i = k / 2 + 1; i <= k - 1; ++i)
            for (int t = 1; t < k - i; ++t) {
                std::vector<ChainEl> hs;
                push_symmetric_units(hs, field, k - i - t, system, j);
                for (const auto& h : hs) out.push_back(IdealSpec::case_VI(k, i, k - i, t, h));
            }
    } else {
        out.push_back(IdealSpec::case_II(field, k, 0));
        for (int i = (k + 1) / 2; i <= k - 1; ++i) {
            std::vector<ChainEl> hs;
            push_symmetric_units(hs, field, k - i, system, j);
            for (const auto& h : hs) out.push_back(IdealSpec::case_IV(k, i, 0, h));
        }
        for (int i = (k + 1) / 2; i <= k - 1; ++i) out.push_back(IdealSpec::case_V(field, k, i, k - i));
        for (int i = (k + 1) / 2; i <= k - 1; ++i)
            for (int t = 1; t < k - i; ++t) {
                std::vector<ChainEl> hs;
                push_symmetric_units(hs, field, k - i - t, system, j);
                for (const auto& h : hs) out.push_back(IdealSpec::case_VI(k, i, k - i, t, h));
            }
    }
    return out;
}

SelfDualStream::SelfDualStream(FactorSystemPtr system, int k) : system_(std::move(system)), k_(k) {
    for (int j = 0; j < system_->lambda(); ++j)
        choices_.push_back(self_dual_self_paired_choices(*system_, j, k));
    for (int l = 0; l < system_->epsilon(); ++l) {
        const int j = system_->lambda() + l;
        std::vector<IdealSpec> all = enumerate_ideal_specs(system_->factor(j).ring->field, k);
        std::vector<IdealSpec> partner;
        partner.reserve(all.size());
        for (const auto& c : all) partner.push_back(dual_ideal_spec(c, *system_, j));
        choices_.push_back(std::move(all));
        partners_.push_back(std::move(partner));
    }
    reset();
}

void SelfDualStream::reset() {
    counter_.assign(choices_.size(), 0);
    done_ = false;
}

BigUint SelfDualStream::total() const {
    BigUint t(1);
    for (const auto& c : choices_) t *= c.size();
    return t;
}

std::uint64_t SelfDualStream::total_u64() const {
    std::uint64_t t = 1;
    for (const auto& c : choices_) t *= c.size();
    return t;
}

std::optional<CyclicCode> SelfDualStream::next() {
    if (done_) return std::nullopt;
    const int lambda = system_->lambda(), epsilon = system_->epsilon();
    std::vector<IdealSpec> specs(system_->r());
    for (int j = 0; j < lambda; ++j) specs[j] = choices_[j][counter_[j]];
    for (int l = 0; l < epsilon; ++l) {
        specs[lambda + l] = choices_[lambda + l][counter_[lambda + l]];
        specs[lambda + epsilon + l] = partners_[l][counter_[lambda + l]];
    }
    // advance odometer, last position fastest
    done_ = true;
    for (std::size_t pos = counter_.size(); pos-- > 0;) {
        if (++counter_[pos] < choices_[pos].size()) {
            done_ = false;
            break;
        }
        counter_[pos] = 0;
    }
    return assemble_code(system_, k_, std::move(specs));
}

BigUint count_self_dual_codes(const FactorSystem& system, int k) {
    BigUint t(1);
    for (int j = 0; j < system.lambda(); ++j)
        t *= self_dual_self_paired_choices(system, j, k).size();
    for (int l = 0; l < system.epsilon(); ++l) {
        const int j = system.lambda() + l;
        t *= count_formulas(system.factor(j).d, k).total;
    }
    return t;
}

/* ------------------------------------------------------------- checking */

CodeElement random_codeword(const CyclicCode& code, std::mt19937_64& rng) {
    const FactorSystem& sys = *code.system;
    CodeElement w(sys.n(), code.k);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int j = 0; j < sys.r(); ++j) {
        const RingPtr& ring = sys.factor(j).ring;
        MixedEl beta(ring, code.k);
        for (const auto& g : code.specs[j].generators(ring)) {
            MixedEl r(ring, code.k);
            for (int l = 0; l < code.k; ++l) {
                std::vector<std::uint8_t> c(ring->degree);
                for (auto& v : c) v = static_cast<std::uint8_t>(coeff(rng));
                r.set_u_coeff(l, Z4Poly(std::move(c)));
            }
            beta = beta + r * g;
        }
        w = w + factor_contribution(sys, j, beta, code.k);
    }
    return w;
}

namespace {

bool annihilation_impl(const CyclicCode& C, const CyclicCode& D, std::uint64_t exhaustive_limit,
                       std::uint64_t samples, std::uint64_t seed, bool parallel) {
    const int total_log2 = C.log2_size() + D.log2_size();
    if (total_log2 < 63 && (1ull << total_log2) <= exhaustive_limit) {
        CodewordStream cs(C, exhaustive_limit), ds(D, exhaustive_limit);
        const std::uint64_t nc = cs.total(), nd = ds.total();
        bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (parallel)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(nc); ++a) {
            CodeElement wa = cs.at(static_cast<std::uint64_t>(a));
            for (std::uint64_t b = 0; b < nd; ++b)
                if (!is_zero_r(euclidean_inner_product(wa, ds.at(b)))) ok = false;
        }
        return ok;
    }
    bool ok = true;
#pragma omp parallel if (parallel)
    {
        std::mt19937_64 rng(seed
#ifdef _OPENMP
                            + static_cast<std::uint64_t>(omp_get_thread_num()) * 0x9e3779b97f4a7c15ull
#endif
        );
#pragma omp for reduction(&& : ok)
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(samples); ++p) {
            CodeElement a = random_codeword(C, rng);
            CodeElement b = random_codeword(D, rng);
            if (!is_zero_r(euclidean_inner_product(a, b))) ok = false;
        }
    }
    return ok;
}

}  // namespace

bool verify_annihilation_serial(const CyclicCode& C, const CyclicCode& D,
                                std::uint64_t exhaustive_limit, std::uint64_t samples,
                                std::uint64_t seed) {
    return annihilation_impl(C, D, exhaustive_limit, samples, seed, false);
}

bool verify_annihilation(const CyclicCode& C, const CyclicCode& D, std::uint64_t exhaustive_limit,
                         std::uint64_t samples, std::uint64_t seed) {
    return annihilation_impl(C, D, exhaustive_limit, samples, seed, true);
}

}  // namespace z4u
