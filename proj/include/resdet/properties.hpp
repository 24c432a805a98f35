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
 * @file properties.hpp
 * @brief Property suites run by `resdet selftest`.
 *
 * Each suite checks one invariant exhaustively over a small range or on
 * seeded random instances and returns the number of cases examined and the
 * first failure, if any.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "resdet/closed_forms.hpp"
#include "resdet/factorize.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/residue_matrix.hpp"
#include "resdet/verify.hpp"

namespace resdet {

struct PropertyResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0 && cases > 0; }

    void check(bool ok, const std::string& where)
    {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = where;
    }
};

namespace properties {

inline std::string at(std::uint64_t p) { return "p=" + std::to_string(p); }
inline std::string at(std::uint64_t p, std::uint64_t x) { return at(p) + " x=" + std::to_string(x); }

/// Per-prime record sweep folded into a property result.
inline PropertyResult from_records(std::string name, const std::vector<VerificationRecord>& records)
{
    PropertyResult r{std::move(name)};
    for (const auto& rec : records) {
        if (rec.verdict == Verdict::Inapplicable) continue;
        r.check(rec.verdict == Verdict::Holds, "p=" + std::to_string(rec.p.value_or(0)) +
                                                   (rec.q ? " q=" + std::to_string(*rec.q) : std::string()) +
                                                   (rec.k ? " k=" + std::to_string(*rec.k) : std::string()));
    }
    return r;
}

inline PropertyResult euler_criterion()
{
    PropertyResult r{"euler-criterion"};
    for (auto pv : odd_primes_in(3, 101)) {
        const auto p = PrimeModulus::of(pv);
        std::vector<bool> square(pv, false);
        for (std::uint64_t x = 1; x < pv; ++x) square[x * x % pv] = true;
        for (std::uint64_t a = 1; a < pv; ++a) {
            const residue e = mod_pow(a, (pv - 1) / 2, p);
            const int expect = square[a] ? 1 : -1;
            r.check(legendre(static_cast<std::int64_t>(a), p) == expect && e == p.from_signed(expect), at(pv, a));
        }
    }
    return r;
}

inline PropertyResult legendre_multiplicative()
{
    PropertyResult r{"legendre-multiplicative"};
    std::mt19937_64 rng(20261017);
    for (auto pv : odd_primes_in(3, 997)) {
        const auto p = PrimeModulus::of(pv);
        std::uniform_int_distribution<std::int64_t> pick(-5000, 5000);
        for (int t = 0; t < 20; ++t) {
            const std::int64_t a = pick(rng), b = pick(rng);
            r.check(legendre(a * b, p) == legendre(a, p) * legendre(b, p), at(pv));
        }
    }
    return r;
}

inline PropertyResult character_consistency()
{
    PropertyResult r{"chi_k-consistency"};
    for (auto pv : odd_primes_in(5, 101)) {
        const auto p = PrimeModulus::of(pv);
        for (auto k : detail::power_indices(pv)) {
            for (std::uint64_t t = 0; t < pv - 1; ++t) {
                const residue x = mod_pow(p.generator(), t, p);
                const bool one = chi_k(x, k, p).cls == CharacterClass::One;
                r.check(one == (t % k == 0), at(pv, t) + " k=" + std::to_string(k));
            }
        }
    }
    return r;
}

inline PropertyResult quadratic_reciprocity()
{
    return from_records("quadratic-reciprocity", sweep_qr({.pmax = 97}));
}

inline PropertyResult sqrt_exhaustive()
{
    PropertyResult r{"sqrt-mod"};
    for (auto pv : odd_primes_in(3, 101)) {
        const auto p = PrimeModulus::of(pv);
        for (std::uint64_t a = 0; a < pv; ++a) {
            const auto root = sqrt_mod(static_cast<std::int64_t>(a), p);
            const int l = legendre(static_cast<std::int64_t>(a), p);
            if (l == -1) {
                r.check(!root.has_value(), at(pv, a));
            } else {
                r.check(root.has_value() && p.mul(*root, *root) == a && *root <= pv - *root, at(pv, a));
            }
        }
    }
    return r;
}

inline PropertyResult lemma23() { return from_records("lemma-half-factorial", sweep_l23({.pmax = 997})); }
inline PropertyResult lemma24() { return from_records("lemma-double-factorial-count", sweep_l24({.pmax = 997})); }
inline PropertyResult lemma25() { return from_records("lemma-square-differences", sweep_l25({.pmax = 997})); }
inline PropertyResult identity_double_factorials() { return from_records("double-factorial-ratio", sweep_e2({.pmax = 997})); }
inline PropertyResult identity_diff_product() { return from_records("diff-product-symbol", sweep_e3({.pmax = 997})); }

/// det [P(X_i Y_j)] against a_0...a_{n-1} prod (X_i - X_j)(Y_i - Y_j).
inline PropertyResult structured_determinant()
{
    PropertyResult r{"structured-determinant"};
    std::mt19937_64 rng(7);
    for (std::uint64_t pv : {13u, 17u, 101u}) {
        const auto p = PrimeModulus::of(pv);
        std::uniform_int_distribution<residue> pick(0, static_cast<residue>(pv - 1));
        for (int t = 0; t < 400; ++t) {
            const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
            std::vector<residue> coeffs(n), xs(n), ys(n);
            for (auto& c : coeffs) c = pick(rng);
            for (auto& x : xs) x = pick(rng);
            for (auto& y : ys) y = pick(rng);
            const residue lhs = det_mod_p(polynomial_kernel_matrix(coeffs, xs, ys, p));
            r.check(lhs == structured_det(coeffs, xs, ys, p), at(pv) + " n=" + std::to_string(n));
        }
    }
    return r;
}

inline SquareMatrix random_skew(const PrimeModulus& p, std::size_t dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<residue> pick(0, p.value() - 1);
    SquareMatrix m(p, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = pick(rng);
            m(j, i) = p.neg(m(i, j));
        }
    return m;
}

inline PropertyResult pfaffian_squares_to_det()
{
    PropertyResult r{"pfaffian-squared"};
    std::mt19937_64 rng(11);
    for (std::uint64_t pv : {3u, 5u, 13u, 101u, 65521u, 2147483647u, 4294967291u}) {
        const auto p = PrimeModulus::of(pv);
        for (int t = 0; t < 60; ++t) {
            const std::size_t dim = 2 * (1 + static_cast<std::size_t>(t % 10));
            const SquareMatrix m = random_skew(p, dim, rng);
            const residue pf = pfaffian_mod_p(m);
            r.check(p.mul(pf, pf) == det_mod_p(m), at(pv) + " dim=" + std::to_string(dim));
        }
    }
    return r;
}

/// Permuting the residues moves rows and columns together.
inline PropertyResult ordering_invariance()
{
    PropertyResult r{"ordering-invariance"};
    std::mt19937_64 rng(13);
    const auto primes = odd_primes_in(5, 61);
    std::uniform_int_distribution<std::size_t> pick_p(0, primes.size() - 1);
    for (int t = 0; t < 150; ++t) {
        const auto p = PrimeModulus::of(primes[pick_p(rng)]);
        const auto ks = detail::power_indices(p.value());
        if (ks.empty()) continue;
        const std::uint64_t k = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
        ResidueList res = kth_residues(p, k);
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, 3 * res.size())(rng);
        const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, p.value() - 1)(rng);
        const residue before = det_mod_p(build_matrix(res, n, d));
        std::shuffle(res.alphas.begin(), res.alphas.end(), rng);
        const residue after = det_mod_p(residue_power_matrix(p, res.alphas, n, d));
        r.check(before == after, at(p.value()) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    return r;
}

/// d = -1 and odd n: odd order gives det 0, even order gives pf^2 = det.
inline PropertyResult skew_residue_matrices()
{
    PropertyResult r{"skew-residue-matrices"};
    for (auto pv : odd_primes_in(5, 61)) {
        const auto p = PrimeModulus::of(pv);
        for (auto k : detail::power_indices(pv)) {
            const ResidueList res = kth_residues(p, k);
            for (std::uint64_t n = 1; n <= 2 * res.size() + 1; n += 2) {
                const auto mat = build_matrix(res, n, -1);
                const residue det = det_mod_p(mat);
                const std::string where = at(pv) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
                if (res.size() % 2 == 1) {
                    r.check(det == 0, where);
                } else {
                    const residue pf = pfaffian_mod_p(mat);
                    r.check(p.mul(pf, pf) == det, where);
                }
            }
        }
    }
    return r;
}

inline PropertyResult low_exponent_vanishing()
{
    PropertyResult r{"low-exponent-vanishing"};
    for (auto pv : odd_primes_in(5, 23)) {
        const auto p = PrimeModulus::of(pv);
        const ResidueList res = kth_residues(p, 2);
        for (std::uint64_t n = 0; 2 * n + 3 < pv; ++n)
            for (std::int64_t d = 1; d < static_cast<std::int64_t>(pv); ++d)
                r.check(det_exact(res, n, d) == 0, at(pv) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    return r;
}

inline PropertyResult residue_product()
{
    PropertyResult r{"residue-product"};
    for (auto pv : odd_primes_in(5, 200)) {
        const auto p = PrimeModulus::of(pv);
        for (auto k : detail::power_indices(pv)) {
            const ResidueList res = kth_residues(p, k);
            residue prod = 1;
            for (auto a : res.alphas) prod = p.mul(prod, a);
            const residue expect = (res.size() + 1) % 2 == 0 ? 1 : p.neg(1);
            r.check(prod == expect, at(pv) + " k=" + std::to_string(k));
        }
    }
    return r;
}

/// Legendre symbol of S_{(p-1)/2,2}(d,p): (-1/p) when (d/p) = 1, and 0 when (d/p) = -1.
inline PropertyResult half_exponent_symbol()
{
    PropertyResult r{"half-exponent-symbol"};
    for (auto pv : odd_primes_in(5, 199)) {
        const auto p = PrimeModulus::of(pv);
        const ResidueList res = kth_residues(p, 2);
        for (std::int64_t d = 1; d < static_cast<std::int64_t>(pv); ++d) {
            const residue det = det_mod_p(build_matrix(res, res.size(), d));
            const int expect = legendre(d, p) == 1 ? legendre(-1, p) : 0;
            r.check(legendre(static_cast<std::int64_t>(det), p) == expect, at(pv) + " d=" + std::to_string(d));
        }
    }
    return r;
}

/// The b table against the unsimplified b over every admissible tuple.
inline PropertyResult b_table()
{
    PropertyResult r{"b-table"};
    for (auto pv : odd_primes_in(7, 200)) {
        const auto p = PrimeModulus::of(pv);
        for (auto k : detail::power_indices(pv)) {
            if (pv <= 2 * k + 1) continue;
            const auto ctx = Lemma26Context::without_diff_product(p, k);
            const std::uint64_t n = ctx.dimension();
            for (std::uint64_t m = n + 1; m < 2 * n; ++m)
                for (std::int64_t d = 1; d < static_cast<std::int64_t>(pv); ++d) {
                    if (!ctx.admissible(m, d)) continue;
                    r.check(ctx.b(m, d) == ctx.b_unsimplified(m, d),
                            at(pv) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
                }
        }
    }
    return r;
}

inline PropertyResult e_factorials()
{
    PropertyResult r{"e-factorial"};
    ExactInteger fact = 1;
    for (std::uint64_t a = 1; a <= 20; ++a) {
        fact *= to_exact(a);
        r.check(e_factorial(a, 1) == fact, "a=" + std::to_string(a));
    }
    for (std::uint64_t e = 1; e <= 5; ++e)
        for (std::uint64_t a = e + 1; a <= 60; ++a)
            r.check(e_factorial(a, e) == to_exact(a) * e_factorial(a - e, e),
                    "a=" + std::to_string(a) + " e=" + std::to_string(e));
    return r;
}

inline PropertyResult factor_recombination()
{
    PropertyResult r{"factor-recombination"};
    std::mt19937_64 rng(17);
    std::vector<ExactInteger> inputs;
    for (std::uint64_t k : {2u, 3u})
        for (std::uint64_t m = 3; m <= 13; m += 2) {
            const auto ci = criterion_integers(k, m);
            inputs.push_back(ci.head);
            for (const auto& q : ci.quotients) inputs.push_back(q);
        }
    for (int t = 0; t < 200; ++t) inputs.push_back(to_exact(std::uniform_int_distribution<std::uint64_t>(2, ~0ull)(rng)));
    for (const auto& n : inputs) {
        if (n < 2) continue;
        const auto f = factor(n);
        bool ok = f.complete() && f.recombine() == n;
        for (const auto& [q, e] : f.factors) ok = ok && is_prime_exact(q) && e >= 1;
        r.check(ok, "n=" + to_decimal(n));
    }
    return r;
}

} // namespace properties

struct PropertySuite {
    std::string name;
    std::function<PropertyResult()> run;
};

inline std::vector<PropertySuite> property_suites()
{
    using namespace properties;
    return {
        {"euler-criterion", euler_criterion},
        {"legendre-multiplicative", legendre_multiplicative},
        {"chi_k-consistency", character_consistency},
        {"quadratic-reciprocity", quadratic_reciprocity},
        {"sqrt-mod", sqrt_exhaustive},
        {"lemma-half-factorial", lemma23},
        {"lemma-double-factorial-count", lemma24},
        {"lemma-square-differences", lemma25},
        {"double-factorial-ratio", identity_double_factorials},
        {"diff-product-symbol", identity_diff_product},
        {"structured-determinant", structured_determinant},
        {"pfaffian-squared", pfaffian_squares_to_det},
        {"ordering-invariance", ordering_invariance},
        {"skew-residue-matrices", skew_residue_matrices},
        {"low-exponent-vanishing", low_exponent_vanishing},
        {"residue-product", residue_product},
        {"half-exponent-symbol", half_exponent_symbol},
        {"b-table", b_table},
        {"e-factorial", e_factorials},
        {"factor-recombination", factor_recombination},
    };
}

} // namespace resdet
