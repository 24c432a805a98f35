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
 * @file finite_field.hpp
 * @brief Arithmetic in F_p for an odd prime p below 2^32.
 *
 * Residues are plain 32-bit unsigned values in [0, p). Products are formed
 * in 64 bits and reduced with a precomputed Barrett constant, which keeps
 * the inner loops of the elimination routines free of hardware division.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resdet {

using residue = std::uint32_t;

/// Raised when an argument violates an operation's precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw precondition_error(what);
}

namespace detail {

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) result = mul_mod_u64(result, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a)
{
    std::uint64_t x = pow_mod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

/// Deterministic primality for every 64-bit input.
///
/// Trial division by the primes below 40, then Miller-Rabin with the first
/// twelve prime bases, which has no pseudoprimes below 3.3 * 10^24.
inline bool is_prime(std::uint64_t n)
{
    constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (auto q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small)
        if (!detail::miller_rabin_round(n, d, s, a)) return false;
    return true;
}

/// Distinct prime factors of n by trial division, ascending, with multiplicity.
inline std::vector<std::uint64_t> trial_factor(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            out.push_back(q);
            n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Largest modulus accepted by PrimeModulus (exclusive).
inline constexpr std::uint64_t max_modulus = std::uint64_t{1} << 32;

/**
 * A validated odd prime p < 2^32 together with the factorization of p-1
 * and its smallest primitive root.
 *
 * Construct through PrimeModulus::of(); the value is immutable afterwards.
 */
class PrimeModulus {
public:
    static PrimeModulus of(std::uint64_t p)
    {
        require(p >= 3 && p < max_modulus, "modulus must be an odd prime in [3, 2^32): " + std::to_string(p));
        require(p % 2 == 1 && is_prime(p), "modulus is not an odd prime: " + std::to_string(p));
        return PrimeModulus(static_cast<std::uint32_t>(p));
    }

    std::uint32_t value() const { return p_; }
    operator std::uint32_t() const { return p_; }

    /// Prime factors of p-1 with multiplicity, ascending.
    const std::vector<std::uint64_t>& p_minus_one_factors() const { return factors_; }
    residue generator() const { return g_; }

    /// x mod p for any x < 2^64.
    residue reduce(std::uint64_t x) const
    {
        auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return static_cast<residue>(r);
    }

    residue from_signed(std::int64_t a) const
    {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<residue>(r);
    }

    residue add(residue a, residue b) const
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<residue>(s >= p_ ? s - p_ : s);
    }
    residue sub(residue a, residue b) const { return a >= b ? a - b : static_cast<residue>(std::uint64_t{a} + p_ - b); }
    residue neg(residue a) const { return a == 0 ? 0 : p_ - a; }
    residue mul(residue a, residue b) const { return reduce(std::uint64_t{a} * b); }

    residue pow(residue base, std::uint64_t exp) const
    {
        residue result = 1;
        base = reduce(base);
        while (exp != 0) {
            if (exp & 1u) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

    /// Inverse of a nonzero residue (Fermat).
    residue inv(residue a) const
    {
        require(reduce(a) != 0, "zero has no inverse mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

private:
    explicit PrimeModulus(std::uint32_t p)
        : p_(p), barrett_(~std::uint64_t{0} / p), factors_(trial_factor(p - 1))
    {
        g_ = find_primitive_root();
    }

    residue find_primitive_root() const
    {
        for (residue g = 2;; ++g) {
            bool generates = true;
            std::uint64_t last = 0;
            for (auto q : factors_) {
                if (q == last) continue;
                last = q;
                if (pow(g, (p_ - 1) / q) == 1) {
                    generates = false;
                    break;
                }
            }
            if (generates) return g;
        }
    }

    std::uint32_t p_;
    std::uint64_t barrett_;
    std::vector<std::uint64_t> factors_;
    residue g_ = 0;
};

/// base^exp mod p.
inline residue mod_pow(std::uint64_t base, std::uint64_t exp, const PrimeModulus& p)
{
    return p.pow(p.reduce(base), exp);
}

/// Smallest g >= 2 whose order mod p is p-1.
inline residue primitive_root(const PrimeModulus& p) { return p.generator(); }

/// Legendre symbol (a/p) in {-1, 0, 1}, by Euler's criterion.
inline int legendre(std::int64_t a, const PrimeModulus& p)
{
    residue r = p.from_signed(a);
    if (r == 0) return 0;
    return p.pow(r, (p.value() - 1) / 2) == 1 ? 1 : -1;
}

enum class CharacterClass { One, MinusOne, Other, Zero };

inline const char* to_string(CharacterClass c)
{
    switch (c) {
    case CharacterClass::One: return "one";
    case CharacterClass::MinusOne: return "minus_one";
    case CharacterClass::Other: return "other";
    case CharacterClass::Zero: return "zero";
    }
    return "?";
}

/// Value of the order-k character d -> d^((p-1)/k) mod p, kept as a residue.
struct CharacterValue {
    residue raw = 0;
    CharacterClass cls = CharacterClass::Zero;

    bool is_unit_sign() const { return cls == CharacterClass::One || cls == CharacterClass::MinusOne; }
};

/// d^((p-1)/order) for any order dividing p-1. No range check on the order.
inline CharacterValue character(std::int64_t d, std::uint64_t order, const PrimeModulus& p)
{
    require(order >= 1 && (p.value() - 1) % order == 0,
            "character order " + std::to_string(order) + " does not divide p-1 for p=" + std::to_string(p.value()));
    residue base = p.from_signed(d);
    if (base == 0) return {0, CharacterClass::Zero};
    residue raw = p.pow(base, (p.value() - 1) / order);
    CharacterClass cls = raw == 1 ? CharacterClass::One
                       : raw == p.value() - 1 ? CharacterClass::MinusOne
                       : CharacterClass::Other;
    return {raw, cls};
}

/// chi_k(d) for 2 <= k <= (p-1)/2 with k | p-1.
inline CharacterValue chi_k(std::int64_t d, std::uint64_t k, const PrimeModulus& p)
{
    require(k >= 2 && k <= (p.value() - 1) / 2, "k must satisfy 2 <= k <= (p-1)/2");
    return character(d, k, p);
}

/**
 * Square root of a modulo p (Tonelli-Shanks).
 *
 * Returns the canonical root min(r, p-r), or nullopt when a is a
 * nonresidue.
 */
inline std::optional<residue> sqrt_mod(std::int64_t a, const PrimeModulus& p)
{
    const std::uint32_t pv = p.value();
    residue n = p.from_signed(a);
    if (n == 0) return residue{0};
    if (legendre(n, p) != 1) return std::nullopt;

    std::uint64_t q = pv - 1;
    unsigned s = 0;
    while ((q & 1u) == 0) {
        q >>= 1;
        ++s;
    }
    residue z = 2;
    while (legendre(z, p) != -1) ++z;

    residue c = p.pow(z, q);
    residue r = p.pow(n, (q + 1) / 2);
    residue t = p.pow(n, q);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        residue tt = t;
        while (tt != 1) {
            tt = p.mul(tt, tt);
            ++i;
        }
        residue b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = p.mul(b, b);
        r = p.mul(r, b);
        c = p.mul(b, b);
        t = p.mul(t, c);
        m = i;
    }
    return std::min(r, pv - r);
}

/// |{0 < t < p/4 : (t/p) = -1}| for p = 1 mod 4.
inline std::uint64_t count_nonresidues_quarter(const PrimeModulus& p)
{
    require(p.value() % 4 == 1, "count_nonresidues_quarter requires p = 1 mod 4");
    std::uint64_t count = 0;
    for (std::uint64_t t = 1; 4 * t < p.value(); ++t)
        if (legendre(static_cast<std::int64_t>(t), p) == -1) ++count;
    return count;
}

/// All odd primes in [lo, hi], ascending.
inline std::vector<std::uint32_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint32_t> out;
    if (hi < 3) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
        if (!composite[n]) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

} // namespace resdet
