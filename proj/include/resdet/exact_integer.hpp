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

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace resdet {

/// Arbitrary-precision signed integer.
using ExactInteger = mpz_class;

inline ExactInteger to_exact(std::uint64_t v)
{
    ExactInteger z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

inline ExactInteger to_exact(std::int64_t v)
{
    ExactInteger z = to_exact(static_cast<std::uint64_t>(v < 0 ? -(v + 1) + std::uint64_t{1} : v));
    return v < 0 ? ExactInteger(-z) : z;
}

inline std::string to_decimal(const ExactInteger& z) { return z.get_str(10); }

/// z mod m in [0, m), for m >= 1 and any sign of z.
inline std::uint64_t mod_u64(const ExactInteger& z, std::uint64_t m)
{
    ExactInteger r;
    ExactInteger mm = to_exact(m);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

inline bool fits_u64(const ExactInteger& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const ExactInteger& z)
{
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

} // namespace resdet
