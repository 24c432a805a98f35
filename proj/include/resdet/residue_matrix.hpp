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
 * @file residue_matrix.hpp
 * @brief k-th power residues, the matrices [(a_i + d a_j)^n], and exact
 * determinant / Pfaffian evaluation over F_p and over Z.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resdet/exact_integer.hpp"
#include "resdet/finite_field.hpp"

namespace resdet {

/// Dense square matrix over F_p, row-major.
class SquareMatrix {
public:
    SquareMatrix(PrimeModulus p, std::size_t dim) : p_(std::move(p)), dim_(dim), data_(dim * dim, 0) {}

    static SquareMatrix identity(PrimeModulus p, std::size_t dim)
    {
        SquareMatrix m(std::move(p), dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    const PrimeModulus& modulus() const { return p_; }
    std::size_t dim() const { return dim_; }

    residue& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    residue operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<residue> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
    std::span<const residue> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a != b) std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < dim_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    bool is_skew_symmetric() const
    {
        for (std::size_t i = 0; i < dim_; ++i) {
            if ((*this)(i, i) != 0) return false;
            for (std::size_t j = i + 1; j < dim_; ++j)
                if ((*this)(i, j) != p_.neg((*this)(j, i))) return false;
        }
        return true;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b)
    {
        return a.p_ == b.p_ && a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    PrimeModulus p_;
    std::size_t dim_;
    std::vector<residue> data_;
};

/// The (p-1)/k distinct k-th power residues mod p, ascending in [1, p-1].
struct ResidueList {
    PrimeModulus p;
    std::uint64_t k;
    std::vector<residue> alphas;

    std::size_t size() const { return alphas.size(); }
};

inline void require_power_index(const PrimeModulus& p, std::uint64_t k)
{
    require(k >= 2 && k <= (p.value() - 1) / 2, "k must satisfy 2 <= k <= (p-1)/2, got k=" + std::to_string(k));
    require((p.value() - 1) % k == 0,
            "k=" + std::to_string(k) + " does not divide p-1 for p=" + std::to_string(p.value()));
}

inline ResidueList kth_residues(const PrimeModulus& p, std::uint64_t k)
{
    require_power_index(p, k);
    const std::uint64_t count = (p.value() - 1) / k;
    std::vector<residue> alphas;
    alphas.reserve(count);
    const residue step = p.pow(p.generator(), k);
    residue x = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        alphas.push_back(x);
        x = p.mul(x, step);
    }
    std::sort(alphas.begin(), alphas.end());
    return {p, k, std::move(alphas)};
}

/// S_{n,k}(d,p) before taking the determinant.
struct ResidueMatrix {
    ResidueList source;
    std::uint64_t n;
    std::int64_t d;
    SquareMatrix entries;

    std::size_t dim() const { return entries.dim(); }
};

/// Entries (a_i + d*a_j)^n mod p over the given residue ordering.
inline SquareMatrix residue_power_matrix(const PrimeModulus& p, std::span<const residue> alphas, std::uint64_t n,
                                         std::int64_t d)
{
    const residue dd = p.from_signed(d);
    const std::size_t dim = alphas.size();
    SquareMatrix m(p, dim);
    std::vector<residue> scaled(dim);
    for (std::size_t j = 0; j < dim; ++j) scaled[j] = p.mul(dd, alphas[j]);
    if (std::uint64_t{p.value()} <= std::uint64_t{dim} * dim) {
        // every entry is x^n for some x in F_p
        std::vector<residue> power(p.value());
        for (residue x = 0; x < p.value(); ++x) power[x] = p.pow(x, n);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = power[p.add(alphas[i], scaled[j])];
    } else {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = p.pow(p.add(alphas[i], scaled[j]), n);
    }
    return m;
}

inline ResidueMatrix build_matrix(const ResidueList& res, std::uint64_t n, std::int64_t d)
{
    require(res.p.from_signed(d) != 0, "d must not be divisible by p");
    return {res, n, d, residue_power_matrix(res.p, res.alphas, n, d)};
}

namespace detail {

/// Working copy of a matrix with lazily reduced 64-bit entries.
///
/// Entries start in [0, p) and absorb products (p-1)^2 without reduction;
/// `budget` products fit before a uint64 could overflow.
struct LazyMatrix {
    explicit LazyMatrix(const SquareMatrix& m) : p(m.modulus()), n(m.dim()), data(n * n), budget(0)
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) data[i * n + j] = m(i, j);
        const std::uint64_t sq = std::uint64_t{p.value() - 1} * (p.value() - 1);
        budget = (~std::uint64_t{0} - p.value()) / sq;
    }

    std::uint64_t* row(std::size_t i) { return data.data() + i * n; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * n + j]; }

    void reduce_row(std::size_t i, std::size_t from)
    {
        std::uint64_t* r = row(i);
        for (std::size_t j = from; j < n; ++j) r[j] = p.reduce(r[j]);
    }

    void reduce_block(std::size_t from)
    {
        for (std::size_t i = from; i < n; ++i) reduce_row(i, from);
    }

    PrimeModulus p;
    std::size_t n;
    std::vector<std::uint64_t> data;
    std::uint64_t budget;
};

} // namespace detail

/// Determinant over F_p by Gaussian elimination, first nonzero pivot.
inline residue det_mod_p(const SquareMatrix& m)
{
    detail::LazyMatrix a(m);
    const PrimeModulus& p = a.p;
    const std::size_t n = a.n;
    std::uint64_t used = 0;
    std::vector<residue> pivot_row(n);
    residue det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (used + 1 > a.budget) {
            a.reduce_block(c);
            used = 0;
        }
        std::size_t r = c;
        while (r < n && (a.at(r, c) = p.reduce(a.at(r, c))) == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            std::swap_ranges(a.row(r) + c, a.row(r) + n, a.row(c) + c);
            det = p.neg(det);
        }
        a.reduce_row(c, c);
        const auto pivot = static_cast<residue>(a.at(c, c));
        det = p.mul(det, pivot);
        const residue inv = p.inv(pivot);
        // 32-bit copy of the pivot row so the update is a widening 32x32 multiply
        std::copy(a.row(c) + c + 1, a.row(c) + n, pivot_row.begin());
        const residue* prow = pivot_row.data();
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint64_t* irow = a.row(i) + c + 1;
            const residue lead = p.reduce(a.at(i, c));
            if (lead == 0) continue;
            const residue f = p.neg(p.mul(lead, inv));
            for (std::size_t j = 0; j + c + 1 < n; ++j) irow[j] += std::uint64_t{f} * prow[j];
        }
        ++used;
    }
    return det;
}

inline residue det_mod_p(const ResidueMatrix& m) { return det_mod_p(m.entries); }

/**
 * Pfaffian over F_p of an even-dimension skew-symmetric matrix.
 *
 * Eliminates 2x2 pivot blocks: with a = A[k][k+1],
 *   A'[i][j] = A[i][j] - (A[i][k+1] A[k][j] - A[i][k] A[k+1][j]) / a
 * and Pf(A) = a Pf(A'). Only the upper triangle is maintained.
 */
inline residue pfaffian_mod_p(const SquareMatrix& m)
{
    require(m.dim() % 2 == 0, "Pfaffian needs an even dimension");
    require(m.is_skew_symmetric(), "Pfaffian needs a skew-symmetric matrix");
    detail::LazyMatrix a(m);
    const PrimeModulus& p = a.p;
    const std::size_t n = a.n;
    std::uint64_t used = 0;
    std::vector<residue> pivot_rows(2 * n);
    residue pf = 1;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        if (used + 2 > a.budget && used != 0) {
            a.reduce_block(k);
            used = 0;
        }
        a.reduce_row(k, k + 1);
        std::size_t piv = k + 1;
        while (piv < n && a.at(k, piv) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k + 1) {
            // the swap reads the lower triangle, which elimination leaves stale
            a.reduce_block(k);
            used = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < i; ++j) a.at(i, j) = p.neg(static_cast<residue>(a.at(j, i)));
            std::swap_ranges(a.row(piv) + k, a.row(piv) + n, a.row(k + 1) + k);
            for (std::size_t i = k; i < n; ++i) std::swap(a.at(i, piv), a.at(i, k + 1));
            pf = p.neg(pf);
        }
        a.reduce_row(k + 1, k + 2);
        const auto pivot = static_cast<residue>(a.at(k, k + 1));
        pf = p.mul(pf, pivot);
        const residue inv = p.inv(pivot);
        std::copy(a.row(k), a.row(k) + n, pivot_rows.begin());
        std::copy(a.row(k + 1), a.row(k + 1) + n, pivot_rows.begin() + n);
        const residue* rk = pivot_rows.data();
        const residue* rk1 = pivot_rows.data() + n;
        for (std::size_t i = k + 2; i < n; ++i) {
            // A[i][k] = -A[k][i], A[i][k+1] = -A[k+1][i]
            const residue aik = p.neg(static_cast<residue>(rk[i]));
            const residue aik1 = p.neg(static_cast<residue>(rk1[i]));
            const residue u = p.neg(p.mul(aik1, inv)); // -A[i][k+1]/a
            const residue v = p.mul(aik, inv);         // +A[i][k]/a
            std::uint64_t* ri = a.row(i);
            if (a.budget < 2) {
                for (std::size_t j = i + 1; j < n; ++j) ri[j] = p.reduce(p.reduce(ri[j] + std::uint64_t{u} * rk[j]) + std::uint64_t{v} * rk1[j]);
            } else {
                for (std::size_t j = i + 1; j < n; ++j) ri[j] += std::uint64_t{u} * rk[j] + std::uint64_t{v} * rk1[j];
            }
        }
        used += 2;
    }
    return pf;
}

inline residue pfaffian_mod_p(const ResidueMatrix& m) { return pfaffian_mod_p(m.entries); }

/// Largest dimension det_exact accepts.
inline constexpr std::size_t det_exact_max_dim = 12;

/// Integer determinant by fraction-free (Bareiss) elimination.
inline ExactInteger det_bareiss(std::vector<std::vector<ExactInteger>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    ExactInteger prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t r = c;
        while (r < n && a[r][c] == 0) ++r;
        if (r == n) return 0;
        if (r != c) {
            std::swap(a[r], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                ExactInteger t = a[i][j] * a[c][c] - a[i][c] * a[c][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

/// Exact integer determinant of [(a_i + d a_j)^n] with a_i the least positive lifts.
inline ExactInteger det_exact(const ResidueList& res, std::uint64_t n, std::int64_t d)
{
    require(res.size() <= det_exact_max_dim,
            "det_exact dimension " + std::to_string(res.size()) + " exceeds " + std::to_string(det_exact_max_dim));
    require(res.p.from_signed(d) != 0, "d must not be divisible by p");
    const std::size_t dim = res.size();
    std::vector<std::vector<ExactInteger>> a(dim, std::vector<ExactInteger>(dim));
    const ExactInteger dz = to_exact(d);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            ExactInteger base = to_exact(std::uint64_t{res.alphas[i]}) + dz * to_exact(std::uint64_t{res.alphas[j]});
            mpz_pow_ui(a[i][j].get_mpz_t(), base.get_mpz_t(), n);
        }
    return det_bareiss(std::move(a));
}

/// T((p-1)/k) = prod_{i<j} (a_i - a_j) mod p over the ascending ordering.
inline residue residue_diff_product(const ResidueList& res)
{
    const PrimeModulus& p = res.p;
    residue t = 1;
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = i + 1; j < res.size(); ++j) t = p.mul(t, p.sub(res.alphas[i], res.alphas[j]));
    return t;
}

/// a_0 ... a_{n-1} prod_{i<j} (X_i - X_j)(Y_i - Y_j) mod p, which equals det[P(X_i Y_j)].
inline residue structured_det(std::span<const residue> coeffs, std::span<const residue> xs,
                              std::span<const residue> ys, const PrimeModulus& p)
{
    require(xs.size() == coeffs.size() && ys.size() == coeffs.size(), "structured_det: length mismatch");
    residue out = 1;
    for (auto c : coeffs) out = p.mul(out, p.reduce(c));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            out = p.mul(out, p.sub(p.reduce(xs[i]), p.reduce(xs[j])));
            out = p.mul(out, p.sub(p.reduce(ys[i]), p.reduce(ys[j])));
        }
    return out;
}

/// [P(X_i Y_j)] with P(x) = sum coeffs[t] x^t, evaluated by Horner.
inline SquareMatrix polynomial_kernel_matrix(std::span<const residue> coeffs, std::span<const residue> xs,
                                             std::span<const residue> ys, const PrimeModulus& p)
{
    require(xs.size() == ys.size(), "polynomial_kernel_matrix: length mismatch");
    SquareMatrix m(p, xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const residue x = p.mul(xs[i], ys[j]);
            residue acc = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = p.add(p.mul(acc, x), p.reduce(*it));
            m(i, j) = acc;
        }
    return m;
}

} // namespace resdet
