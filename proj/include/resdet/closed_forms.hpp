// Copyright 2026 The resdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form right-hand sides for the residue determinants.
 *
 * Everything here is evaluated without forming a matrix: e-factorials over
 * Z, the a^2 b factorization of S_{m,k}(d,p) mod p, and the Legendre-symbol
 * formulas for sqrt(S_{1+(p-1)/k,k}(-1,p)) and sqrt(S_{3+(p-1)/k,k}(-1,p)).
 */

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "resdet/exact_integer.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/residue_matrix.hpp"

namespace resdet {

/// a!_(e) = a (a-e) (a-2e) ..., stopping at the first factor in [1, e].
inline ExactInteger e_factorial(std::uint64_t a, std::uint64_t e)
{
    require(a >= 1, "e_factorial is defined for a >= 1");
    require(e >= 1, "e_factorial needs e >= 1");
    ExactInteger out = 1;
    for (;;) {
        out *= to_exact(a);
        if (a <= e) break;
        a -= e;
    }
    return out;
}

/// a!_(e) mod p.
inline residue e_factorial_mod(std::uint64_t a, std::uint64_t e, const PrimeModulus& p)
{
    require(a >= 1, "e_factorial is defined for a >= 1");
    require(e >= 1, "e_factorial needs e >= 1");
    residue out = 1;
    for (;;) {
        out = p.mul(out, p.reduce(a));
        if (a <= e) break;
        a -= e;
    }
    return out;
}

inline residue double_factorial_mod(std::uint64_t a, const PrimeModulus& p) { return e_factorial_mod(a, 2, p); }
inline residue factorial_mod(std::uint64_t a, const PrimeModulus& p) { return a == 0 ? 1 : e_factorial_mod(a, 1, p); }

/// C(n, r) mod p for 0 <= n < size, from factorial and inverse-factorial tables.
class BinomialTable {
public:
    BinomialTable(const PrimeModulus& p, std::uint64_t size) : p_(p), fact_(size), inv_fact_(size)
    {
        require(size >= 1 && size <= p.value(), "binomial table size must lie in [1, p]");
        fact_[0] = 1;
        for (std::uint64_t i = 1; i < size; ++i) fact_[i] = p.mul(fact_[i - 1], p.reduce(i));
        inv_fact_[size - 1] = p.inv(fact_[size - 1]);
        for (std::uint64_t i = size - 1; i > 0; --i) inv_fact_[i - 1] = p.mul(inv_fact_[i], p.reduce(i));
    }

    residue operator()(std::int64_t n, std::int64_t r) const
    {
        require(n >= 0 && static_cast<std::uint64_t>(n) < fact_.size(), "binomial index out of table range");
        if (r < 0 || r > n) return 0;
        return p_.mul(fact_[n], p_.mul(inv_fact_[r], inv_fact_[n - r]));
    }

private:
    PrimeModulus p_;
    std::vector<residue> fact_;
    std::vector<residue> inv_fact_;
};

/// S_{m,k}(d,p) = a^2 b mod p.
struct LemmaDecomposition {
    residue a = 0;
    residue b = 0;
    residue product = 0;
};

/**
 * Evaluates the a^2 b factorization of S_{m,k}(d,p) for one (p, k).
 *
 * With N = (p-1)/k, r = m - N and chi = chi_k(d) = +-1, the reduced kernel
 * polynomial has coefficients f(l) = C(m,l) + chi C(m,r-l) for l <= r and
 * C(m,j) for r < j < N. Pairing f(l) with f(r-l) = chi f(l), and C(m,j) with
 * C(m,m-j), leaves
 *
 *   a = prod_{l < r/2} f(l) * prod_{r < j < m/2} C(m,j) * T(N),
 *
 * where the first product runs to floor((r-1)/2). `b` collects the unpaired
 * remainder and is read off the four-case table (m parity, p mod 2k).
 */
class Lemma26Context {
public:
    Lemma26Context(const PrimeModulus& p, std::uint64_t k) : Lemma26Context(p, k, true) {}

    /// Context without T((p-1)/k): a_coefficient() and b() only. T is a
    /// product of differences of distinct residues, so it never vanishes.
    static Lemma26Context without_diff_product(const PrimeModulus& p, std::uint64_t k)
    {
        return Lemma26Context(p, k, false);
    }

    const PrimeModulus& modulus() const { return p_; }
    std::uint64_t k() const { return k_; }
    /// (p-1)/k
    std::uint64_t dimension() const { return n_; }
    /// T((p-1)/k) over the ascending residue ordering.
    residue diff_product() const
    {
        require(has_t_, "context was built without T((p-1)/k)");
        return t_;
    }

    /// Whether (m, d) satisfies the factorization's hypotheses.
    bool admissible(std::uint64_t m, std::int64_t d) const
    {
        if (m <= n_ || m >= 2 * n_) return false;
        if (p_.from_signed(d) == 0) return false;
        return character(d, k_, p_).is_unit_sign();
    }

    /// a / T, i.e. the binomial part of a.
    residue a_coefficient(std::uint64_t m, std::int64_t d) const
    {
        check(m, d);
        const residue chi = character(d, k_, p_).raw;
        const std::int64_t mm = static_cast<std::int64_t>(m);
        const std::int64_t r = mm - static_cast<std::int64_t>(n_);
        residue out = 1;
        // floor((r-1)/2) is the last paired index in both parity cases
        for (std::int64_t l = 0; 2 * l <= r - 1; ++l)
            out = p_.mul(out, p_.add(binom_(mm, l), p_.mul(chi, binom_(mm, r - l))));
        // C(m, j) for r < j < m/2
        for (std::int64_t j = r + 1; 2 * j < mm; ++j) out = p_.mul(out, binom_(mm, j));
        return out;
    }

    residue a(std::uint64_t m, std::int64_t d) const { return p_.mul(a_coefficient(m, d), diff_product()); }

    /// b from the four-case table.
    residue b(std::uint64_t m, std::int64_t d) const
    {
        check(m, d);
        const std::uint64_t pv = p_.value();
        const residue chi_k = character(d, k_, p_).raw;
        const residue one_plus_chi = p_.add(1, chi_k);
        const std::int64_t mm = static_cast<std::int64_t>(m);
        const std::int64_t r = mm - static_cast<std::int64_t>(n_);
        const bool m_even = m % 2 == 0;
        const bool p_one_mod_2k = (pv - 1) % (2 * k_) == 0;
        auto sign = [&](std::uint64_t e) { return e % 2 == 0 ? residue{1} : p_.neg(1); };

        if (p_one_mod_2k) {
            const residue chi_2k = character(d, 2 * k_, p_).raw;
            const std::uint64_t half = (pv - 1) / (2 * k_);
            if (m_even) {
                residue out = p_.mul(chi_2k, sign(half - 1));
                out = p_.mul(out, one_plus_chi);
                out = p_.mul(out, binom_(mm, r / 2));
                return p_.mul(out, binom_(mm, mm / 2));
            }
            return p_.mul(p_.pow(chi_2k, m), sign(half));
        }
        const std::uint64_t e = (pv - k_ - 1) / (2 * k_);
        if (m_even) return p_.mul(p_.mul(p_.pow(chi_k, m / 2), sign(e)), binom_(mm, mm / 2));
        return p_.mul(p_.mul(sign(e), one_plus_chi), binom_(mm, r / 2));
    }

    /**
     * b assembled directly from the pre-pairing expression
     *   (-1)^{m(N+1) + floor((N-1)/2)} d^{N(2m-N+1)/2} * [unpaired factors],
     * without the table's character simplifications. Used to cross-check b().
     */
    residue b_unsimplified(std::uint64_t m, std::int64_t d) const
    {
        check(m, d);
        const residue chi = character(d, k_, p_).raw;
        const std::int64_t mm = static_cast<std::int64_t>(m);
        const std::int64_t r = mm - static_cast<std::int64_t>(n_);
        const std::uint64_t sign_exp = m * (n_ + 1) + (n_ - 1) / 2;
        residue out = sign_exp % 2 == 0 ? 1 : p_.neg(1);
        out = p_.mul(out, p_.pow(p_.from_signed(d), n_ * (2 * m - n_ + 1) / 2));
        if (r % 2 == 0) {
            out = p_.mul(out, p_.add(1, chi));
            out = p_.mul(out, binom_(mm, r / 2));
            out = p_.mul(out, p_.pow(chi, static_cast<std::uint64_t>(r / 2)));
        } else {
            out = p_.mul(out, p_.pow(chi, static_cast<std::uint64_t>((r + 1) / 2)));
        }
        if (m % 2 == 0) out = p_.mul(out, binom_(mm, mm / 2));
        return out;
    }

    LemmaDecomposition decompose(std::uint64_t m, std::int64_t d) const
    {
        LemmaDecomposition out;
        out.a = a(m, d);
        out.b = b(m, d);
        out.product = p_.mul(p_.mul(out.a, out.a), out.b);
        return out;
    }

private:
    Lemma26Context(const PrimeModulus& p, std::uint64_t k, bool with_t)
        : p_(p), k_(k), n_(checked_dimension(p, k)), binom_(p, 2 * n_), has_t_(with_t)
    {
        if (with_t) t_ = residue_diff_product(kth_residues(p, k));
    }

    static std::uint64_t checked_dimension(const PrimeModulus& p, std::uint64_t k)
    {
        require_power_index(p, k);
        require(p.value() > 2 * k + 1, "a^2 b factorization needs p > 2k+1");
        return (p.value() - 1) / k;
    }

    void check(std::uint64_t m, std::int64_t d) const
    {
        require(m > n_ && m < 2 * n_, "m must lie strictly between (p-1)/k and 2(p-1)/k");
        require(p_.from_signed(d) != 0, "d must not be divisible by p");
        require(character(d, k_, p_).is_unit_sign(), "chi_k(d) must be +1 or -1");
    }

    PrimeModulus p_;
    std::uint64_t k_;
    std::uint64_t n_;
    BinomialTable binom_;
    bool has_t_;
    residue t_ = 1;
};

inline LemmaDecomposition lemma26_decomposition(std::uint64_t m, std::uint64_t k, std::int64_t d,
                                                const PrimeModulus& p)
{
    return Lemma26Context(p, k).decompose(m, d);
}

namespace detail {

inline int legendre_of_product(std::initializer_list<std::int64_t> factors, const PrimeModulus& p)
{
    residue prod = 1;
    for (auto f : factors) prod = p.mul(prod, p.from_signed(f));
    return legendre(prod, p);
}

inline void require_sign(int t)
{
    require(t == 1 || t == -1, "Legendre symbol of T must be +1 or -1");
}

} // namespace detail

/// Legendre symbol of sqrt(S_{1+(p-1)/k,k}(-1,p)) predicted from k, p and (T/p).
inline int theorem3_rhs(std::uint64_t k, const PrimeModulus& p, int t_legendre)
{
    detail::require_sign(t_legendre);
    require_power_index(p, k);
    const std::uint64_t pv = p.value();
    require((pv - 1) % (2 * k) == 0, "needs p = 1 mod 2k");
    const std::uint64_t n = (pv - 1) / k;
    const auto kk = static_cast<std::int64_t>(k);
    if (pv % (4 * k) == 1)
        return detail::legendre_of_product({kk - 1, 2 * kk - 1}, p) * legendre(double_factorial_mod(n, p), p) *
               t_legendre;
    require(k % 2 == 0, "p = 2k+1 mod 4k is only covered for even k");
    if (pv == 2 * k + 1) return t_legendre;
    return detail::legendre_of_product({kk, 2 * kk - 1}, p) * legendre(double_factorial_mod(n - 1, p), p) *
           t_legendre;
}

/// 6k^3 + (3k-1)(2k-1)(k-1) mod p.
inline residue theorem4_cubic(std::uint64_t k, const PrimeModulus& p)
{
    const residue kr = p.reduce(k);
    const residue k3 = p.mul(p.mul(kr, kr), kr);
    residue tail = p.mul(p.sub(p.mul(3, kr), 1), p.sub(p.mul(2, kr), 1));
    tail = p.mul(tail, p.sub(kr, 1));
    return p.add(p.mul(6, k3), tail);
}

/// Legendre symbol of sqrt(S_{3+(p-1)/k,k}(-1,p)) predicted from k, p and (T/p).
inline int theorem4_rhs(std::uint64_t k, const PrimeModulus& p, int t_legendre)
{
    detail::require_sign(t_legendre);
    require_power_index(p, k);
    const std::uint64_t pv = p.value();
    require((pv - 1) % (2 * k) == 0, "needs p = 1 mod 2k");
    const std::uint64_t n = (pv - 1) / k;
    const auto kk = static_cast<std::int64_t>(k);
    const std::int64_t cubic = theorem4_cubic(k, p);
    if (pv % (4 * k) == 1)
        return detail::legendre_of_product({kk, 3 * kk - 1, 4 * kk - 1, cubic}, p) *
               legendre(double_factorial_mod(n - 1, p), p) * t_legendre;
    require(k % 2 == 0, "p = 2k+1 mod 4k is only covered for even k");
    if (pv == 2 * k + 1) return t_legendre;
    return detail::legendre_of_product({kk - 1, 2 * kk - 1, 4 * kk - 1, cubic}, p) *
           legendre(double_factorial_mod(n, p), p) * t_legendre;
}

/// The k = 2 case of theorem3_rhs written out by residue class of p mod 8.
inline int theorem3_rhs_k2(const PrimeModulus& p, int t_legendre)
{
    detail::require_sign(t_legendre);
    const std::uint64_t pv = p.value();
    require(pv % 4 == 1, "needs p = 1 mod 4");
    if (pv % 8 == 1) return legendre(3, p) * legendre(double_factorial_mod((pv - 1) / 2, p), p) * t_legendre;
    if (pv == 5) return t_legendre;
    return legendre(6, p) * legendre(double_factorial_mod((pv - 3) / 2, p), p) * t_legendre;
}

/// The k = 2 case of theorem4_rhs written out by residue class of p mod 8.
inline int theorem4_rhs_k2(const PrimeModulus& p, int t_legendre)
{
    detail::require_sign(t_legendre);
    const std::uint64_t pv = p.value();
    require(pv % 4 == 1, "needs p = 1 mod 4");
    if (pv % 8 == 1) return legendre(10, p) * legendre(double_factorial_mod((pv - 3) / 2, p), p) * t_legendre;
    if (pv == 5) return t_legendre;
    return legendre(3, p) * legendre(double_factorial_mod((pv - 1) / 2, p), p) * t_legendre;
}

/// (q/3) or (q/5) style symbol: Legendre symbol of a modulo the small prime q.
inline int legendre_small(std::uint64_t a, std::uint64_t q) { return legendre(static_cast<std::int64_t>(a % q), PrimeModulus::of(q)); }

/// (-1)^{#{0<t<p/4 : (t/p) = -1}} (p/3), for p = 1 mod 4.
inline int conjecture63_rhs(const PrimeModulus& p)
{
    require(p.value() % 4 == 1, "needs p = 1 mod 4");
    const int sign = count_nonresidues_quarter(p) % 2 == 0 ? 1 : -1;
    return sign * legendre_small(p.value(), 3);
}

/// (-1)^{#{0<t<p/4 : (t/p) = -1}} (p / (4 + (-1)^{(p-1)/4})), for p = 1 mod 4.
inline int conjecture64_rhs(const PrimeModulus& p)
{
    require(p.value() % 4 == 1, "needs p = 1 mod 4");
    const int sign = count_nonresidues_quarter(p) % 2 == 0 ? 1 : -1;
    const std::uint64_t q = ((p.value() - 1) / 4) % 2 == 0 ? 5 : 3;
    return sign * legendre_small(p.value(), q);
}

} // namespace resdet
