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
 * @file verify.hpp
 * @brief Brute-force sweeps comparing each identity's two sides.
 *
 * Every sweep computes the left side from matrices or direct products and
 * the right side from closed_forms, over a range of primes, and emits one
 * record per tuple sorted by (p, k, m, d).
 *
 * Identifiers:
 *   T1  S_{n,k}(d,p) = 0 for chi_k(d) = -1 and n = (p-1)/k mod 2
 *   T2  (S_{n,k}(d,p)/p) avoids the excluded value for odd n, chi_k(d) = 1
 *   T3  (sqrt S_{1+(p-1)/k,k}(-1,p) / p) closed form
 *   T4  (sqrt S_{3+(p-1)/k,k}(-1,p) / p) closed form
 *   T5  p | S_{m+(p-1)/k,k}(-1,p) iff p divides a criterion integer
 *   C63, C64  the k = 2 sign formulas through (p/3) and (p/5)
 *   L23 (((p-1)/2)!/p) = (2/p)
 *   L24 (((p-3)/2)!!/p) = (-1)^{#nonresidues below p/4}
 *   L25 prod_{i<j<=(p-1)/2} (j^2 - i^2)
 *   L26 S_{m,k}(d,p) = a^2 b
 *   E1  the k = 2 form of T3 by p mod 8
 *   E2  (((p-1)/2)!!/p) = (((p-3)/2)!!/p)(2/p)
 *   E3  (T((p-1)/2)/p) = (2/p)
 *   QR  quadratic reciprocity
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "resdet/closed_forms.hpp"
#include "resdet/ekm_search.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/parallel.hpp"
#include "resdet/residue_matrix.hpp"

namespace resdet {

enum class TheoremId { T1, T2, T3, T4, T5, C63, C64, L23, L24, L25, L26, E1, E2, E3, QR };

inline constexpr std::array<TheoremId, 15> all_theorem_ids{
    TheoremId::T1,  TheoremId::T2,  TheoremId::T3,  TheoremId::T4,  TheoremId::T5,
    TheoremId::C63, TheoremId::C64, TheoremId::L23, TheoremId::L24, TheoremId::L25,
    TheoremId::L26, TheoremId::E1,  TheoremId::E2,  TheoremId::E3,  TheoremId::QR};

inline const char* to_string(TheoremId id)
{
    constexpr std::array<const char*, 15> names{"T1",  "T2",  "T3",  "T4", "T5", "C63", "C64", "L23",
                                                "L24", "L25", "L26", "E1", "E2", "E3",  "QR"};
    return names[static_cast<std::size_t>(id)];
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view s)
{
    for (auto id : all_theorem_ids)
        if (s == to_string(id)) return id;
    return std::nullopt;
}

/// How lhs and rhs are compared.
enum class Relation { Equal, NotEqual };
enum class Verdict { Holds, Violated, Inapplicable };

inline const char* to_string(Relation r) { return r == Relation::Equal ? "eq" : "ne"; }
inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

struct VerificationRecord {
    TheoremId id = TheoremId::T1;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> k;
    /// Matrix exponent, or the odd offset m for T5.
    std::optional<std::uint64_t> m;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> lhs;
    std::optional<std::int64_t> rhs;
    Relation relation = Relation::Equal;
    Verdict verdict = Verdict::Inapplicable;
    std::string note;
};

struct VerificationSummary {
    std::uint64_t holds = 0;
    std::uint64_t violated = 0;
    std::uint64_t inapplicable = 0;
};

struct VerificationReport {
    TheoremId id = TheoremId::T1;
    std::vector<VerificationRecord> records;
    VerificationSummary summary;
};

struct SweepOptions {
    /// Largest prime swept; each identity has its own default.
    std::optional<std::uint64_t> pmax;
    /// Explicit k values; values failing the hypotheses yield inapplicable records.
    std::vector<std::uint64_t> klist;
    /// Explicit exponents (T1, T2, L26) or offsets m (T5).
    std::vector<std::uint64_t> mlist;
    /// Explicit d values (T1, T2, L26).
    std::vector<std::int64_t> dlist;
    unsigned jobs = 1;
};

inline std::uint64_t default_pmax(TheoremId id)
{
    switch (id) {
    case TheoremId::T3:
    case TheoremId::T4: return 500;
    case TheoremId::T5:
    case TheoremId::C63:
    case TheoremId::C64:
    case TheoremId::L23:
    case TheoremId::L24:
    case TheoremId::E1:
    case TheoremId::E2:
    case TheoremId::E3: return 1000;
    case TheoremId::L25: return 97;
    case TheoremId::QR: return 97;
    default: return 200;
    }
}

namespace detail {

inline VerificationRecord compare(TheoremId id, std::int64_t lhs, std::int64_t rhs, Relation rel = Relation::Equal)
{
    VerificationRecord r;
    r.id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    const bool ok = rel == Relation::Equal ? lhs == rhs : lhs != rhs;
    r.verdict = ok ? Verdict::Holds : Verdict::Violated;
    return r;
}

inline VerificationRecord inapplicable(TheoremId id, std::string note)
{
    VerificationRecord r;
    r.id = id;
    r.verdict = Verdict::Inapplicable;
    r.note = std::move(note);
    return r;
}

/// Valid power indices for p: k | p-1 and 2 <= k <= (p-1)/2.
inline std::vector<std::uint64_t> power_indices(std::uint64_t p)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; 2 * k <= p - 1; ++k)
        if ((p - 1) % k == 0) out.push_back(k);
    return out;
}

/// Candidate k values for one prime: the explicit list, or all power indices.
inline std::vector<std::uint64_t> k_values(const SweepOptions& opt, std::uint64_t p)
{
    return opt.klist.empty() ? power_indices(p) : opt.klist;
}

inline bool valid_power_index(std::uint64_t p, std::uint64_t k) { return k >= 2 && 2 * k <= p - 1 && (p - 1) % k == 0; }

inline int legendre_of(residue r, const PrimeModulus& p) { return legendre(static_cast<std::int64_t>(r), p); }

/// Legendre symbol of the Pfaffian of S_{n,k}(-1,p), n odd, (p-1)/k even.
inline int pfaffian_legendre(const ResidueList& res, std::uint64_t n)
{
    const SquareMatrix mat = residue_power_matrix(res.p, res.alphas, n, -1);
    return legendre_of(pfaffian_mod_p(mat), res.p);
}

/// Runs `per_prime` on each prime in [lo, pmax] and concatenates in prime order.
template <typename Fn>
std::vector<VerificationRecord> over_primes(std::uint64_t lo, std::uint64_t pmax, unsigned jobs, Fn per_prime)
{
    const auto primes = odd_primes_in(lo, pmax);
    auto chunks = parallel_map(primes, [&](std::uint32_t p) { return per_prime(PrimeModulus::of(p)); }, jobs);
    std::vector<VerificationRecord> out;
    for (auto& c : chunks)
        for (auto& r : c) out.push_back(std::move(r));
    return out;
}

/// Exponents strictly between N and 2N, optionally restricted to the explicit list.
inline std::vector<std::uint64_t> open_range_exponents(const SweepOptions& opt, std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (opt.mlist.empty()) {
        for (std::uint64_t e = n + 1; e < 2 * n; ++e) out.push_back(e);
    } else {
        out = opt.mlist;
    }
    return out;
}

inline std::vector<std::int64_t> d_values(const SweepOptions& opt, std::uint64_t p)
{
    if (!opt.dlist.empty()) return opt.dlist;
    std::vector<std::int64_t> out;
    for (std::uint64_t d = 1; d < p; ++d) out.push_back(static_cast<std::int64_t>(d));
    return out;
}

inline VerificationRecord tagged(VerificationRecord r, std::uint64_t p, std::optional<std::uint64_t> k = {},
                                 std::optional<std::uint64_t> m = {}, std::optional<std::int64_t> d = {})
{
    r.p = p;
    r.k = k;
    r.m = m;
    r.d = d;
    return r;
}

/// Shared driver for T1, T2 and L26: loops k, exponent and d. `admit`
/// returns a reason when a tuple fails the hypotheses; such tuples are
/// skipped in the default enumeration and reported inapplicable when any
/// list was given explicitly. `make_check(res)` builds the per-(p, k)
/// checker called as check(exponent, d).
template <typename Admit, typename MakeCheck>
std::vector<VerificationRecord> exponent_sweep(TheoremId id, const SweepOptions& opt, Admit admit,
                                               MakeCheck make_check)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(id));
    const bool explicit_lists = !opt.klist.empty() || !opt.mlist.empty() || !opt.dlist.empty();
    return over_primes(7, pmax, opt.jobs, [&](const PrimeModulus& p) {
        std::vector<VerificationRecord> out;
        for (auto k : k_values(opt, p.value())) {
            if (!valid_power_index(p.value(), k) || p.value() <= 2 * k + 1) {
                if (explicit_lists) out.push_back(tagged(inapplicable(id, "k outside hypotheses"), p.value(), k));
                continue;
            }
            const ResidueList res = kth_residues(p, k);
            const std::uint64_t n = res.size();
            auto check = make_check(res);
            for (auto e : open_range_exponents(opt, n)) {
                for (auto d : d_values(opt, p.value())) {
                    if (auto why = admit(p, k, n, e, d)) {
                        if (explicit_lists) out.push_back(tagged(inapplicable(id, *why), p.value(), k, e, d));
                        continue;
                    }
                    out.push_back(tagged(check(e, d), p.value(), k, e, d));
                }
            }
        }
        return out;
    });
}

} // namespace detail

/// S_{n,k}(d,p) = 0 mod p when chi_k(d) = -1 and n = (p-1)/k mod 2.
inline std::vector<VerificationRecord> sweep_t1(const SweepOptions& opt)
{
    auto admit = [](const PrimeModulus& p, std::uint64_t k, std::uint64_t n, std::uint64_t e,
                    std::int64_t d) -> std::optional<std::string> {
        if (e <= n || e >= 2 * n) return "exponent outside ((p-1)/k, 2(p-1)/k)";
        if (e % 2 != n % 2) return "exponent parity differs from (p-1)/k";
        if (p.from_signed(d) == 0) return "p divides d";
        if (character(d, k, p).cls != CharacterClass::MinusOne) return "chi_k(d) != -1";
        return std::nullopt;
    };
    return detail::exponent_sweep(TheoremId::T1, opt, admit, [](const ResidueList& res) {
        return [&res](std::uint64_t e, std::int64_t d) {
            return detail::compare(TheoremId::T1, det_mod_p(build_matrix(res, e, d)), 0);
        };
    });
}

/// Excluded Legendre value of S_{n,k}(d,p) for odd n and chi_k(d) = 1.
inline int t2_excluded_value(std::uint64_t k, std::int64_t d, const PrimeModulus& p)
{
    if (k % 2 == 0) return -1;
    if (p.value() % (4 * k) == 1) return -1;
    return legendre(d, p);
}

inline std::vector<VerificationRecord> sweep_t2(const SweepOptions& opt)
{
    auto admit = [](const PrimeModulus& p, std::uint64_t k, std::uint64_t n, std::uint64_t e,
                    std::int64_t d) -> std::optional<std::string> {
        if ((p.value() - 1) % (2 * k) != 0) return "p != 1 mod 2k";
        if (e <= n || e >= 2 * n) return "exponent outside ((p-1)/k, 2(p-1)/k)";
        if (e % 2 == 0) return "exponent is even";
        if (p.from_signed(d) == 0) return "p divides d";
        if (character(d, k, p).cls != CharacterClass::One) return "chi_k(d) != 1";
        return std::nullopt;
    };
    return detail::exponent_sweep(TheoremId::T2, opt, admit, [](const ResidueList& res) {
        return [&res](std::uint64_t e, std::int64_t d) {
            const int lhs = detail::legendre_of(det_mod_p(build_matrix(res, e, d)), res.p);
            return detail::compare(TheoremId::T2, lhs, t2_excluded_value(res.k, d, res.p), Relation::NotEqual);
        };
    });
}

/// a^2 b from the closed form against the determinant.
inline std::vector<VerificationRecord> sweep_l26(const SweepOptions& opt)
{
    auto admit = [](const PrimeModulus& p, std::uint64_t k, std::uint64_t n, std::uint64_t e,
                    std::int64_t d) -> std::optional<std::string> {
        if (e <= n || e >= 2 * n) return "exponent outside ((p-1)/k, 2(p-1)/k)";
        if (p.from_signed(d) == 0) return "p divides d";
        if (!character(d, k, p).is_unit_sign()) return "chi_k(d) is not +1 or -1";
        return std::nullopt;
    };
    return detail::exponent_sweep(TheoremId::L26, opt, admit, [](const ResidueList& res) {
        return [&res, ctx = Lemma26Context(res.p, res.k)](std::uint64_t e, std::int64_t d) {
            return detail::compare(TheoremId::L26, ctx.decompose(e, d).product,
                                   det_mod_p(build_matrix(res, e, d)));
        };
    });
}

namespace detail {

/// Shared driver for T3 and T4: legendre(pf S_{offset+N,k}(-1,p)) against the closed form.
template <typename Rhs>
std::vector<VerificationRecord> sqrt_sweep(TheoremId id, std::uint64_t offset, const SweepOptions& opt, Rhs rhs)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(id));
    const bool explicit_k = !opt.klist.empty();
    return over_primes(5, pmax, opt.jobs, [&](const PrimeModulus& p) {
        std::vector<VerificationRecord> out;
        const std::uint64_t pv = p.value();
        for (auto k : k_values(opt, pv)) {
            const char* why = nullptr;
            if (!valid_power_index(pv, k)) why = "k outside hypotheses";
            else if ((pv - 1) % (2 * k) != 0) why = "p != 1 mod 2k";
            else if (k % 2 == 1 && pv % (4 * k) != 1) why = "odd k with p = 2k+1 mod 4k";
            if (why != nullptr) {
                if (explicit_k) out.push_back(tagged(inapplicable(id, why), pv, k, offset));
                continue;
            }
            const ResidueList res = kth_residues(p, k);
            const int t = legendre_of(residue_diff_product(res), p);
            const int lhs = pfaffian_legendre(res, offset + res.size());
            out.push_back(tagged(compare(id, lhs, rhs(k, p, t)), pv, k, offset));
        }
        return out;
    });
}

/// Sweeps primes p = 1 mod 4 with p >= 5 and one record per prime.
template <typename Fn>
std::vector<VerificationRecord> quarter_sweep(TheoremId id, const SweepOptions& opt, Fn fn)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(id));
    return over_primes(5, pmax, opt.jobs, [&](const PrimeModulus& p) {
        std::vector<VerificationRecord> out;
        if (p.value() % 4 == 1) out.push_back(tagged(fn(p), p.value()));
        return out;
    });
}

inline int sign_of_parity(std::uint64_t count) { return count % 2 == 0 ? 1 : -1; }

} // namespace detail

inline std::vector<VerificationRecord> sweep_t3(const SweepOptions& opt)
{
    return detail::sqrt_sweep(TheoremId::T3, 1, opt, [](std::uint64_t k, const PrimeModulus& p, int t) {
        return theorem3_rhs(k, p, t);
    });
}

inline std::vector<VerificationRecord> sweep_t4(const SweepOptions& opt)
{
    return detail::sqrt_sweep(TheoremId::T4, 3, opt, [](std::uint64_t k, const PrimeModulus& p, int t) {
        return theorem4_rhs(k, p, t);
    });
}

/// p | S_{m+N,k}(-1,p) against the criterion, for p > km+1 (m >= 3), or
/// against emptiness of E_k(1).
inline std::vector<VerificationRecord> sweep_t5(const SweepOptions& opt)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(TheoremId::T5));
    const std::vector<std::uint64_t> klist = opt.klist.empty() ? std::vector<std::uint64_t>{2, 3} : opt.klist;
    const std::vector<std::uint64_t> mlist = opt.mlist.empty() ? std::vector<std::uint64_t>{1, 3, 5, 7} : opt.mlist;

    struct Job {
        std::uint64_t k, m;
        std::optional<CriterionIntegers> ci;
    };
    std::vector<Job> jobs;
    std::vector<VerificationRecord> rejected;
    for (auto k : klist) {
        for (auto m : mlist) {
            if (k < 2 || m % 2 == 0) {
                auto r = detail::inapplicable(TheoremId::T5, k < 2 ? "k < 2" : "m is even");
                r.k = k;
                r.m = m;
                rejected.push_back(std::move(r));
                continue;
            }
            jobs.push_back({k, m, m >= 3 ? std::optional(criterion_integers(k, m)) : std::nullopt});
        }
    }

    auto out = detail::over_primes(5, pmax, opt.jobs, [&](const PrimeModulus& p) {
        std::vector<VerificationRecord> recs;
        const std::uint64_t pv = p.value();
        for (const auto& job : jobs) {
            if ((pv - 1) % (2 * job.k) != 0 || pv < 2 * job.k + 1) continue;
            if (job.ci && pv <= job.k * job.m + 1) continue;
            const bool divides = shifted_determinant_mod_p(p, job.k, job.m) == 0;
            const bool predicted = job.ci ? criterion_divides(*job.ci, pv) : false;
            recs.push_back(detail::tagged(detail::compare(TheoremId::T5, divides ? 1 : 0, predicted ? 1 : 0), pv,
                                          job.k, job.m));
        }
        return recs;
    });
    out.insert(out.end(), rejected.begin(), rejected.end());
    return out;
}

inline std::vector<VerificationRecord> sweep_c63(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::C63, opt, [](const PrimeModulus& p) {
        const ResidueList res = kth_residues(p, 2);
        return detail::compare(TheoremId::C63, detail::pfaffian_legendre(res, 1 + res.size()), conjecture63_rhs(p));
    });
}

inline std::vector<VerificationRecord> sweep_c64(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::C64, opt, [](const PrimeModulus& p) {
        const ResidueList res = kth_residues(p, 2);
        return detail::compare(TheoremId::C64, detail::pfaffian_legendre(res, 3 + res.size()), conjecture64_rhs(p));
    });
}

inline std::vector<VerificationRecord> sweep_l23(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::L23, opt, [](const PrimeModulus& p) {
        const int lhs = detail::legendre_of(factorial_mod((p.value() - 1) / 2, p), p);
        return detail::compare(TheoremId::L23, lhs, legendre(2, p));
    });
}

inline std::vector<VerificationRecord> sweep_l24(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::L24, opt, [](const PrimeModulus& p) {
        const int lhs = detail::legendre_of(double_factorial_mod((p.value() - 3) / 2, p), p);
        return detail::compare(TheoremId::L24, lhs, detail::sign_of_parity(count_nonresidues_quarter(p)));
    });
}

/// prod_{1<=i<j<=(p-1)/2} (j^2 - i^2) mod p.
inline residue square_difference_product(const PrimeModulus& p)
{
    const std::uint64_t h = (p.value() - 1) / 2;
    residue out = 1;
    for (std::uint64_t j = 2; j <= h; ++j)
        for (std::uint64_t i = 1; i < j; ++i) out = p.mul(out, p.reduce(j * j - i * i));
    return out;
}

inline residue lemma25_rhs(const PrimeModulus& p)
{
    if (p.value() % 4 == 3) return 1;
    return p.neg(factorial_mod((p.value() - 1) / 2, p));
}

inline std::vector<VerificationRecord> sweep_l25(const SweepOptions& opt)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(TheoremId::L25));
    return detail::over_primes(3, pmax, opt.jobs, [](const PrimeModulus& p) {
        return std::vector<VerificationRecord>{detail::tagged(
            detail::compare(TheoremId::L25, square_difference_product(p), lemma25_rhs(p)), p.value())};
    });
}

inline std::vector<VerificationRecord> sweep_e1(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::E1, opt, [](const PrimeModulus& p) {
        const ResidueList res = kth_residues(p, 2);
        const int t = detail::legendre_of(residue_diff_product(res), p);
        return detail::compare(TheoremId::E1, detail::pfaffian_legendre(res, 1 + res.size()),
                               theorem3_rhs_k2(p, t));
    });
}

inline std::vector<VerificationRecord> sweep_e2(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::E2, opt, [](const PrimeModulus& p) {
        const std::uint64_t pv = p.value();
        const int lhs = detail::legendre_of(double_factorial_mod((pv - 1) / 2, p), p);
        const int rhs = detail::legendre_of(double_factorial_mod((pv - 3) / 2, p), p) * legendre(2, p);
        return detail::compare(TheoremId::E2, lhs, rhs);
    });
}

inline std::vector<VerificationRecord> sweep_e3(const SweepOptions& opt)
{
    return detail::quarter_sweep(TheoremId::E3, opt, [](const PrimeModulus& p) {
        const int lhs = detail::legendre_of(residue_diff_product(kth_residues(p, 2)), p);
        return detail::compare(TheoremId::E3, lhs, legendre(2, p));
    });
}

inline std::vector<VerificationRecord> sweep_qr(const SweepOptions& opt)
{
    const std::uint64_t pmax = opt.pmax.value_or(default_pmax(TheoremId::QR));
    const auto primes = odd_primes_in(3, pmax);
    return detail::over_primes(3, pmax, opt.jobs, [&](const PrimeModulus& p) {
        std::vector<VerificationRecord> out;
        for (auto q : primes) {
            if (q <= p.value()) continue;
            const auto qm = PrimeModulus::of(q);
            const int lhs = legendre(static_cast<std::int64_t>(p.value()), qm) * legendre(q, p);
            const int rhs = detail::sign_of_parity(((p.value() - 1) / 2) * ((q - 1) / 2));
            auto r = detail::tagged(detail::compare(TheoremId::QR, lhs, rhs), p.value());
            r.q = q;
            out.push_back(std::move(r));
        }
        return out;
    });
}

inline VerificationSummary summarize(const std::vector<VerificationRecord>& records)
{
    VerificationSummary s;
    for (const auto& r : records) {
        switch (r.verdict) {
        case Verdict::Holds: ++s.holds; break;
        case Verdict::Violated: ++s.violated; break;
        case Verdict::Inapplicable: ++s.inapplicable; break;
        }
    }
    return s;
}

inline VerificationReport run_verification(TheoremId id, const SweepOptions& opt)
{
    VerificationReport report;
    report.id = id;
    switch (id) {
    case TheoremId::T1: report.records = sweep_t1(opt); break;
    case TheoremId::T2: report.records = sweep_t2(opt); break;
    case TheoremId::T3: report.records = sweep_t3(opt); break;
    case TheoremId::T4: report.records = sweep_t4(opt); break;
    case TheoremId::T5: report.records = sweep_t5(opt); break;
    case TheoremId::C63: report.records = sweep_c63(opt); break;
    case TheoremId::C64: report.records = sweep_c64(opt); break;
    case TheoremId::L23: report.records = sweep_l23(opt); break;
    case TheoremId::L24: report.records = sweep_l24(opt); break;
    case TheoremId::L25: report.records = sweep_l25(opt); break;
    case TheoremId::L26: report.records = sweep_l26(opt); break;
    case TheoremId::E1: report.records = sweep_e1(opt); break;
    case TheoremId::E2: report.records = sweep_e2(opt); break;
    case TheoremId::E3: report.records = sweep_e3(opt); break;
    case TheoremId::QR: report.records = sweep_qr(opt); break;
    }
    auto key = [](const VerificationRecord& r) {
        return std::tuple(r.p.value_or(0), r.q.value_or(0), r.k.value_or(0), r.m.value_or(0), r.d.value_or(0));
    };
    std::stable_sort(report.records.begin(), report.records.end(),
                     [&](const VerificationRecord& a, const VerificationRecord& b) { return key(a) < key(b); });
    report.summary = summarize(report.records);
    return report;
}

} // namespace resdet
