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

#ifndef Z4U_CODES_HPP
#define Z4U_CODES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "z4u/bigint.hpp"
#include "z4u/idealenum.hpp"
#include "z4u/rings.hpp"

namespace z4u {

/// One basic irreducible factor of x^n - 1 with its attached structures.
struct FactorInfo {
    Z4Poly f;       // monic basic irreducible over Z4
    F2Poly fbar;    // f mod 2
    int d;          // degree
    RingPtr ring;   // Z4[x]/<f>
    Z4Poly e;       // CRT idempotent in Z4[x]/<x^n-1>
    Z4Poly v, w;    // Bezout pair: v*(x^n-1)/f + w*f = 1
    int delta;      // reciprocal(f) = delta * f_sigma(j), delta in {1,3}
};

/**
 * The factorization x^n - 1 = f_1 ... f_r over Z4 with idempotents, the
 * reciprocal pairing sigma, and the block arrangement: self-reciprocal
 * factors first (lambda of them), then the swapped pairs as
 * (lambda+l, lambda+epsilon+l).  Factor indices are 0-based throughout.
 */
class FactorSystem {
   public:
    static std::shared_ptr<const FactorSystem> build(int n);

    int n() const { return n_; }
    int r() const { return static_cast<int>(factors_.size()); }
    int lambda() const { return lambda_; }
    int epsilon() const { return epsilon_; }
    const FactorInfo& factor(int j) const { return factors_[j]; }
    const std::vector<FactorInfo>& factors() const { return factors_; }
    int sigma(int j) const { return sigma_[j]; }

   private:
    int n_ = 0;
    std::vector<FactorInfo> factors_;
    std::vector<int> sigma_;
    int lambda_ = 0, epsilon_ = 0;

    FactorSystem() = default;
};

using FactorSystemPtr = std::shared_ptr<const FactorSystem>;

/**
 * Element of R[x]/<x^n-1> = A[u]/<u^k> stored as an n x k matrix over Z4;
 * entry (i, l) is the coefficient of x^i u^l.  Reading rows gives the
 * R-coefficients, reading columns the A-coefficients, so the two views of
 * the same matrix are the isomorphism and its inverse.
 */
class CodeElement {
   public:
    CodeElement() = default;
    CodeElement(int n, int k) : n_(n), k_(k), a_(static_cast<std::size_t>(n) * k, 0) {}

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint8_t at(int i, int l) const { return a_[static_cast<std::size_t>(i) * k_ + l]; }
    void set(int i, int l, int v) {
        a_[static_cast<std::size_t>(i) * k_ + l] = static_cast<std::uint8_t>(((v % 4) + 4) % 4);
    }
    const std::vector<std::uint8_t>& flat() const { return a_; }
    bool is_zero() const;

    CodeElement operator+(const CodeElement& rhs) const;
    CodeElement operator-(const CodeElement& rhs) const;
    bool operator==(const CodeElement& rhs) const = default;
    auto operator<=>(const CodeElement& rhs) const = default;

    /// Multiplication by x: rotate rows (cyclic shift of x-degrees).
    CodeElement times_x() const;
    /// Multiplication by u: shift columns up, truncating at u^k.
    CodeElement times_u() const;
    /// Multiplication by an A-scalar a(x): cyclic convolution per column.
    CodeElement times_a(const Z4Poly& a) const;
    /// Multiplication by an R-scalar (k-vector of Z4): u-convolution per row.
    CodeElement times_r(const std::vector<std::uint8_t>& r) const;
    /// a(x^-1): permute rows i -> (n - i) mod n.
    CodeElement sub_x_inverse() const;

    /// Column l as a Z4 polynomial in x (an A-element).
    Z4Poly a_coeff(int l) const;
    void set_a_coeff(int l, const Z4Poly& a);
    /// Row i as the k u-coefficients of an R-element.
    std::vector<std::uint8_t> r_coeff(int i) const;

   private:
    int n_ = 0, k_ = 0;
    std::vector<std::uint8_t> a_;
};

/// A cyclic code over Z4[u]/<u^k> of length n: one ideal per factor.
struct CyclicCode {
    FactorSystemPtr system;
    int k = 0;
    std::vector<IdealSpec> specs;  // aligned with system->factors()

    int log2_size() const;
    bool operator==(const CyclicCode& rhs) const;
};

/// Validates spec alignment (one spec per factor, matching d and k).
CyclicCode assemble_code(FactorSystemPtr system, int k, std::vector<IdealSpec> specs);

/// Number of cyclic codes over Z4[u]/<u^k> of length n.
BigUint count_cyclic_codes(int n, int k);
BigUint count_cyclic_codes(const FactorSystem& system, int k);

/// The image of e_j * beta in A[u]/<u^k>, as a CodeElement.
CodeElement factor_contribution(const FactorSystem& system, int j, const MixedEl& beta, int k);

/**
 * Streams the codewords of a code as sums of per-factor contributions over
 * the Cartesian product of the ideal member lists.  The stream visits
 * exactly |C| pairwise distinct codewords; index 0 is the zero word.
 */
class CodewordStream {
   public:
    CodewordStream(const CyclicCode& code, std::uint64_t budget);

    std::uint64_t total() const { return total_; }
    std::optional<CodeElement> next();
    void reset();

    /// Codeword for a specific product-space index (thread-safe, shared state
    /// is read-only after construction).
    CodeElement at(std::uint64_t index) const;

   private:
    std::vector<std::vector<CodeElement>> contribs_;
    std::vector<std::uint64_t> radices_;
    std::uint64_t total_;
    std::uint64_t cursor_;
    int n_ = 0, k_ = 0;
};

std::vector<CodeElement> enumerate_codewords(const CyclicCode& code, std::uint64_t budget = 1ull << 22);

/// Exact membership: project on each factor (multiply by e_j, reduce mod
/// f_j) and test ideal membership.
bool codeword_membership(const CyclicCode& code, const CodeElement& w);

/// Project w onto factor j: the K_j[u]/<u^k> component beta_j.
MixedEl factor_component(const CyclicCode& code, int j, const CodeElement& w);

}  // namespace z4u

#endif
