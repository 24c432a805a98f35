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
 * @file ekm_search.hpp
 * @brief The exceptional sets
 *
 *   E_k(m) = { p prime : 2k | p-1 and p | S_{m+(p-1)/k,k}(-1,p) },  m odd,
 *
 * found two ways: a direct determinant sweep over primes up to a bound, and
 * the divisibility criterion through the e-factorial integers
 *
 *   (km)!_(k) + (km-1)!_(k)
 *   (km-kl)!_(k) / (kl)!_(k) + (km-kl-1)!_(k) / (kl-1)!_(k),  1 <= l <= (m-1)/2,
 *
 * which decides membership for every p > km+1.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "resdet/closed_forms.hpp"
#include "resdet/exact_integer.hpp"
#include "resdet/factorize.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/parallel.hpp"
#include "resdet/residue_matrix.hpp"

namespace resdet {

struct CriterionIntegers {
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    ExactInteger head;
    /// quotients[l-1] for l = 1 .. (m-1)/2
    std::vector<ExactInteger> quotients;
};

inline CriterionIntegers criterion_integers(std::uint64_t k, std::uint64_t m)
{
    require(k >= 2, "criterion needs k >= 2");
    require(m >= 3 && m % 2 == 1, "criterion needs odd m >= 3");
    CriterionIntegers out;
    out.k = k;
    out.m = m;
    out.head = e_factorial(k * m, k) + e_factorial(k * m - 1, k);
    for (std::uint64_t l = 1; 2 * l <= m - 1; ++l) {
        const ExactInteger num1 = e_factorial(k * m - k * l, k);
        const ExactInteger den1 = e_factorial(k * l, k);
        const ExactInteger num2 = e_factorial(k * m - k * l - 1, k);
        const ExactInteger den2 = e_factorial(k * l - 1, k);
        require(mpz_divisible_p(num1.get_mpz_t(), den1.get_mpz_t()) != 0 &&
                    mpz_divisible_p(num2.get_mpz_t(), den2.get_mpz_t()) != 0,
                "criterion quotient is not exact");
        out.quotients.push_back(ExactInteger(num1 / den1) + ExactInteger(num2 / den2));
    }
    return out;
}

/// Whether p divides the head or some quotient.
inline bool criterion_divides(const CriterionIntegers& ci, std::uint64_t p)
{
    if (mod_u64(ci.head, p) == 0) return true;
    return std::any_of(ci.quotients.begin(), ci.quotients.end(),
                       [&](const ExactInteger& q) { return mod_u64(q, p) == 0; });
}

/// S_{m+(p-1)/k,k}(-1,p) mod p by elimination. Uses the Pfaffian when the
/// matrix is skew-symmetric of even order and squares it.
inline residue shifted_determinant_mod_p(const PrimeModulus& p, std::uint64_t k, std::uint64_t m)
{
    const ResidueList res = kth_residues(p, k);
    const std::uint64_t n = m + res.size();
    const SquareMatrix mat = residue_power_matrix(p, res.alphas, n, -1);
    if (n % 2 == 1 && res.size() % 2 == 0) {
        const residue pf = pfaffian_mod_p(mat);
        return p.mul(pf, pf);
    }
    return det_mod_p(mat);
}

enum class Provenance { SmallScan, CriterionFactor };
enum class VerificationMethod { DirectDeterminant, Factorization };

inline const char* to_string(Provenance v) { return v == Provenance::SmallScan ? "small-scan" : "criterion-factor"; }
inline const char* to_string(VerificationMethod v)
{
    return v == VerificationMethod::DirectDeterminant ? "direct-determinant" : "lemma-factorization";
}

struct EkmMember {
    std::uint64_t p = 0;
    Provenance provenance = Provenance::SmallScan;
    VerificationMethod verified_by = VerificationMethod::DirectDeterminant;
};

struct FactoredInteger {
    ExactInteger value;
    Factorization factorization;
};

struct EkmReport {
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::vector<EkmMember> members;
    std::optional<FactoredInteger> head;
    std::vector<FactoredInteger> quotients;
    std::vector<ExactInteger> unfactored_cofactors;
    /// Candidates >= 2^32, beyond the modular arithmetic used to confirm them.
    std::vector<ExactInteger> unverified;
    /// Criterion candidates whose determinant did not vanish.
    std::vector<std::uint64_t> rejected;

    std::vector<std::uint64_t> primes() const
    {
        std::vector<std::uint64_t> out;
        for (const auto& e : members) out.push_back(e.p);
        return out;
    }

    std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) const
    {
        std::vector<std::uint64_t> out;
        for (const auto& e : members)
            if (e.p <= bound) out.push_back(e.p);
        return out;
    }

    bool clean() const { return unfactored_cofactors.empty() && unverified.empty() && rejected.empty(); }
};

struct EkmOptions {
    /// Largest (p-1)/k confirmed by a direct determinant; above it the
    /// binomial factorization of S mod p decides.
    std::uint64_t direct_dim_limit = 600;
    unsigned jobs = 1;
    FactorOptions factoring{};
};

/// Primes p <= bound with 2k | p-1 and p | S_{m+(p-1)/k,k}(-1,p), by direct computation.
inline std::vector<std::uint64_t> ekm_by_scan(std::uint64_t k, std::uint64_t m, std::uint64_t bound,
                                              unsigned jobs = 1)
{
    require(k >= 2, "k must be at least 2");
    require(bound >= 3, "scan bound must be at least 3");
    std::vector<std::uint32_t> candidates;
    for (auto p : odd_primes_in(2 * k + 1, bound))
        if ((p - 1) % (2 * k) == 0) candidates.push_back(p);
    auto vanishes = parallel_map(
        candidates,
        [&](std::uint32_t p) { return shifted_determinant_mod_p(PrimeModulus::of(p), k, m) == 0 ? 1 : 0; }, jobs);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (vanishes[i]) out.push_back(candidates[i]);
    return out;
}

namespace detail {

/// Confirms p | S_{m+(p-1)/k,k}(-1,p) for p > km+1 with 2k | p-1.
inline bool confirm_member(std::uint64_t k, std::uint64_t m, const PrimeModulus& p, const EkmOptions& opt,
                           VerificationMethod& how)
{
    const std::uint64_t n = (p.value() - 1) / k;
    if (n <= opt.direct_dim_limit) {
        how = VerificationMethod::DirectDeterminant;
        return shifted_determinant_mod_p(p, k, m) == 0;
    }
    // S = (a_coefficient * T)^2 * b with T != 0
    how = VerificationMethod::Factorization;
    const auto ctx = Lemma26Context::without_diff_product(p, k);
    return ctx.a_coefficient(m + n, -1) == 0 || ctx.b(m + n, -1) == 0;
}

} // namespace detail

/**
 * E_k(m) through the divisibility criterion.
 *
 * Primes p <= km+1 are settled by direct determinants. Every prime factor
 * p > km+1, p = 1 mod 2k, of the criterion integers is confirmed against
 * S mod p before it is admitted.
 */
inline EkmReport ekm_by_criterion(std::uint64_t k, std::uint64_t m, const EkmOptions& opt = {})
{
    require(k >= 2, "k must be at least 2");
    require(m % 2 == 1, "E_k(m) is defined for odd m");
    EkmReport report;
    report.k = k;
    report.m = m;
    if (m == 1) return report; // E_k(1) is empty

    for (auto p : ekm_by_scan(k, m, k * m + 1, opt.jobs))
        report.members.push_back({p, Provenance::SmallScan, VerificationMethod::DirectDeterminant});

    const CriterionIntegers ci = criterion_integers(k, m);
    std::set<ExactInteger> candidates;
    auto absorb = [&](const ExactInteger& value) {
        FactoredInteger fi{value, factor(value, opt.factoring)};
        for (const auto& [q, e] : fi.factorization.factors) candidates.insert(q);
        for (const auto& c : fi.factorization.unfactored) report.unfactored_cofactors.push_back(c);
        return fi;
    };
    report.head = absorb(ci.head);
    for (const auto& q : ci.quotients) report.quotients.push_back(absorb(q));

    const ExactInteger small_limit = to_exact(k * m + 1);
    for (const auto& q : candidates) {
        if (q <= small_limit) continue;
        if (mod_u64(q, 2 * k) != 1) continue;
        if (!fits_u64(q) || to_u64(q) >= max_modulus) {
            report.unverified.push_back(q);
            continue;
        }
        const auto p = PrimeModulus::of(to_u64(q));
        VerificationMethod how{};
        if (detail::confirm_member(k, m, p, opt, how))
            report.members.push_back({p.value(), Provenance::CriterionFactor, how});
        else
            report.rejected.push_back(p.value());
    }
    std::sort(report.members.begin(), report.members.end(),
              [](const EkmMember& a, const EkmMember& b) { return a.p < b.p; });
    return report;
}

} // namespace resdet
