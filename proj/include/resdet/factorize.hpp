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
 * @file factorize.hpp
 * @brief Integer factorization: trial division, then Pollard rho with
 * Brent's cycle detection.
 *
 * The rho iteration x -> x^2 + c starts at x = 2 with c = 1, 2, 3, ... on
 * successive restarts, so results are reproducible. Cofactors below 2^64
 * run on machine words; larger ones on GMP integers.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "resdet/exact_integer.hpp"
#include "resdet/finite_field.hpp"

namespace resdet {

struct Factorization {
    /// (prime, exponent), ascending by prime.
    std::vector<std::pair<ExactInteger, unsigned>> factors;
    /// Composite pieces that resisted rho within the restart budget.
    std::vector<ExactInteger> unfactored;

    bool complete() const { return unfactored.empty(); }

    ExactInteger recombine() const
    {
        ExactInteger out = 1;
        for (const auto& [q, e] : factors) {
            ExactInteger pw;
            mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), e);
            out *= pw;
        }
        for (const auto& c : unfactored) out *= c;
        return out;
    }
};

struct FactorOptions {
    std::uint64_t trial_bound = 1u << 16;
    unsigned max_restarts = 64;
    std::uint64_t max_iterations = std::uint64_t{1} << 26;
};

/// Primality of an exact integer. Deterministic below 2^64; above that,
/// GMP's BPSW test plus Miller-Rabin rounds.
inline bool is_prime_exact(const ExactInteger& n)
{
    if (sgn(n) <= 0) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

inline std::uint64_t rho_brent_u64(std::uint64_t n, std::uint64_t c, std::uint64_t max_iterations)
{
    auto f = [&](std::uint64_t x) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x + c) % n);
    };
    std::uint64_t y = 2 % n, x = y, ys = y, g = 1, q = 1;
    const std::uint64_t block = 128;
    std::uint64_t r = 1, iterations = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += block) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                y = f(y);
                q = mul_mod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            iterations += block;
        }
        r *= 2;
        if (iterations > max_iterations) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

inline ExactInteger rho_brent_mpz(const ExactInteger& n, unsigned long c, std::uint64_t max_iterations)
{
    auto f = [&](const ExactInteger& x) {
        ExactInteger y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    ExactInteger y = 2, x = y, ys = y, g = 1, q = 1;
    const std::uint64_t block = 128;
    std::uint64_t r = 1, iterations = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += block) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                y = f(y);
                ExactInteger diff = abs(x - y);
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            iterations += block;
        }
        r *= 2;
        if (iterations > max_iterations) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            ExactInteger diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? ExactInteger(0) : g;
}

/// A nontrivial divisor of composite n, or 0 when the restart budget runs out.
inline ExactInteger find_divisor(const ExactInteger& n, const FactorOptions& opt)
{
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        ExactInteger root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return root;
    }
    for (unsigned c = 1; c <= opt.max_restarts; ++c) {
        if (fits_u64(n)) {
            std::uint64_t g = rho_brent_u64(to_u64(n), c, opt.max_iterations);
            if (g != 0) return to_exact(g);
        } else {
            ExactInteger g = rho_brent_mpz(n, c, opt.max_iterations);
            if (g != 0) return g;
        }
    }
    return 0;
}

} // namespace detail

/// Prime factorization of n >= 2. Never throws on hard inputs: whatever
/// rho cannot split is reported in `unfactored`.
inline Factorization factor(const ExactInteger& n, const FactorOptions& opt = {})
{
    require(n >= 2, "factor needs n >= 2");
    std::map<ExactInteger, unsigned> primes;
    Factorization out;
    ExactInteger rest = n;

    for (std::uint64_t q = 2; q <= opt.trial_bound; q += (q == 2 ? 1 : 2)) {
        if (rest == 1) break;
        ExactInteger qq = to_exact(q);
        if (qq * qq > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
            ++primes[qq];
        }
    }

    std::vector<ExactInteger> pending;
    if (rest != 1) pending.push_back(rest);
    while (!pending.empty()) {
        ExactInteger m = std::move(pending.back());
        pending.pop_back();
        if (m == 1) continue;
        if (is_prime_exact(m)) {
            ++primes[m];
            continue;
        }
        ExactInteger g = detail::find_divisor(m, opt);
        if (g == 0) {
            out.unfactored.push_back(m);
            continue;
        }
        ExactInteger h = m / g;
        pending.push_back(g);
        pending.push_back(h);
    }

    for (auto& [q, e] : primes) out.factors.emplace_back(q, e);
    std::sort(out.unfactored.begin(), out.unfactored.end());
    return out;
}

} // namespace resdet
