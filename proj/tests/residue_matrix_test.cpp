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

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "resdet/residue_matrix.hpp"

namespace resdet {
namespace {

SquareMatrix from_rows(std::uint64_t p, const std::vector<std::vector<residue>>& rows)
{
    SquareMatrix m(PrimeModulus::of(p), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

/// Cofactor expansion, for cross-checking elimination on tiny matrices.
residue det_by_expansion(const SquareMatrix& m)
{
    const auto& p = m.modulus();
    const std::size_t n = m.dim();
    if (n == 1) return m(0, 0);
    residue out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        SquareMatrix minor(p, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        const residue term = p.mul(m(0, c), det_by_expansion(minor));
        out = c % 2 == 0 ? p.add(out, term) : p.sub(out, term);
    }
    return out;
}

TEST(KthResidues, Examples)
{
    EXPECT_EQ(kth_residues(PrimeModulus::of(5), 2).alphas, (std::vector<residue>{1, 4}));
    EXPECT_EQ(kth_residues(PrimeModulus::of(13), 2).alphas, (std::vector<residue>{1, 3, 4, 9, 10, 12}));
    EXPECT_EQ(kth_residues(PrimeModulus::of(7), 3).alphas, (std::vector<residue>{1, 6}));
}

TEST(KthResidues, RejectsBadIndex)
{
    EXPECT_THROW(kth_residues(PrimeModulus::of(7), 4), precondition_error);
    EXPECT_THROW(kth_residues(PrimeModulus::of(7), 6), precondition_error);
    EXPECT_THROW(kth_residues(PrimeModulus::of(13), 1), precondition_error);
}

TEST(BuildMatrix, Examples)
{
    const ResidueList sq5 = kth_residues(PrimeModulus::of(5), 2);
    EXPECT_EQ(build_matrix(sq5, 3, -1).entries, from_rows(5, {{0, 3}, {2, 0}}));
    EXPECT_EQ(build_matrix(sq5, 0, 1).entries, from_rows(5, {{1, 1}, {1, 1}}));
    EXPECT_THROW(build_matrix(sq5, 3, 10), precondition_error);
}

TEST(BuildMatrix, SkewDiagonalVanishes)
{
    const ResidueList res = kth_residues(PrimeModulus::of(61), 3);
    const auto m = build_matrix(res, 17, -1);
    for (std::size_t i = 0; i < m.dim(); ++i) EXPECT_EQ(m.entries(i, i), 0u);
    EXPECT_TRUE(m.entries.is_skew_symmetric());
}

TEST(BuildMatrix, PowerTablePathMatchesDirectPowers)
{
    // 97 <= 48^2, so the table path is taken
    const auto p = PrimeModulus::of(97);
    const ResidueList res = kth_residues(p, 2);
    const auto m = build_matrix(res, 1000003, 5);
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = 0; j < res.size(); ++j)
            ASSERT_EQ(m.entries(i, j), mod_pow(res.alphas[i] + 5ull * res.alphas[j], 1000003, p));
}

TEST(DetModP, Examples)
{
    EXPECT_EQ(det_mod_p(from_rows(5, {{0, 3}, {2, 0}})), 4u);
    EXPECT_EQ(det_mod_p(SquareMatrix::identity(PrimeModulus::of(101), 9)), 1u);
    EXPECT_EQ(det_mod_p(from_rows(7, {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), 0u);
}

TEST(DetModP, ResidueMatrixOracles)
{
    auto det = [](std::uint64_t p, std::uint64_t k, std::uint64_t n, std::int64_t d) {
        return det_mod_p(build_matrix(kth_residues(PrimeModulus::of(p), k), n, d));
    };
    EXPECT_EQ(det(13, 2, 7, -1), 10u);
    EXPECT_EQ(det(13, 3, 5, 2), 7u);
    EXPECT_EQ(det(17, 2, 9, 3), 9u);
    EXPECT_EQ(det(7, 3, 1, 1), 3u);
    EXPECT_EQ(det(5, 2, 5, -1), 4u);
    EXPECT_EQ(det(29, 4, 9, -1), 0u);
}

TEST(DetModP, AgreesWithCofactorExpansion)
{
    std::mt19937_64 rng(3);
    for (std::uint64_t pv : {3ull, 13ull, 65521ull, 4294967291ull}) {
        const auto p = PrimeModulus::of(pv);
        std::uniform_int_distribution<residue> pick(0, p.value() - 1);
        for (std::size_t n = 1; n <= 6; ++n) {
            SquareMatrix m(p, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
            // force a zero leading pivot some of the time
            if (n > 1 && n % 2 == 0) m(0, 0) = 0;
            EXPECT_EQ(det_mod_p(m), det_by_expansion(m)) << "p=" << pv << " n=" << n;
        }
    }
}

TEST(DetExact, Examples)
{
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(5), 2), 3, -1), 729);
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(5), 2), 5, -1), 59049);
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(7), 2), 1, -1), 0);
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(7), 3), 1, 1), -25);
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(13), 2), 7, -1),
              ExactInteger("4445113863584199051906410741760000"));
    EXPECT_EQ(det_exact(kth_residues(PrimeModulus::of(13), 3), 5, 2), ExactInteger("157222868984635333017600"));
}

TEST(DetExact, DimensionGuard)
{
    EXPECT_NO_THROW(det_exact(kth_residues(PrimeModulus::of(23), 2), 3, 1)); // dim 11
    EXPECT_THROW(det_exact(kth_residues(PrimeModulus::of(29), 2), 3, 1), precondition_error);
}

TEST(Pfaffian, Examples)
{
    EXPECT_EQ(pfaffian_mod_p(from_rows(13, {{0, 5}, {8, 0}})), 5u);
    const auto s = build_matrix(kth_residues(PrimeModulus::of(5), 2), 3, -1);
    const residue pf = pfaffian_mod_p(s);
    EXPECT_TRUE(pf == 2 || pf == 3);
    EXPECT_EQ(PrimeModulus::of(5).mul(pf, pf), det_mod_p(s));
}

TEST(Pfaffian, MatchesIntegerSquareRoot)
{
    // sqrt of the exact determinant of S_{7,2}(-1,13) is 66671687121177600 = 7 mod 13
    const residue pf = pfaffian_mod_p(build_matrix(kth_residues(PrimeModulus::of(13), 2), 7, -1));
    EXPECT_TRUE(pf == 7 || pf == 6) << pf;
}

TEST(Pfaffian, RejectsInvalidInput)
{
    EXPECT_THROW(pfaffian_mod_p(from_rows(5, {{0, 1, 2}, {4, 0, 1}, {3, 4, 0}})), precondition_error);
    EXPECT_THROW(pfaffian_mod_p(from_rows(5, {{0, 1}, {1, 0}})), precondition_error);
}

TEST(Pfaffian, FourByFourRandomSkew)
{
    std::mt19937_64 rng(5);
    const auto p = PrimeModulus::of(13);
    std::uniform_int_distribution<residue> pick(0, 12);
    for (int t = 0; t < 50; ++t) {
        SquareMatrix m(p, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                m(i, j) = pick(rng);
                m(j, i) = p.neg(m(i, j));
            }
        // pf = a01 a23 - a02 a13 + a03 a12
        residue expect = p.mul(m(0, 1), m(2, 3));
        expect = p.sub(expect, p.mul(m(0, 2), m(1, 3)));
        expect = p.add(expect, p.mul(m(0, 3), m(1, 2)));
        EXPECT_EQ(pfaffian_mod_p(m), expect);
    }
}

TEST(DiffProduct, Examples)
{
    EXPECT_EQ(residue_diff_product(kth_residues(PrimeModulus::of(5), 2)), 2u);
    EXPECT_EQ(residue_diff_product(kth_residues(PrimeModulus::of(13), 2)), 8u);
}

TEST(StructuredDet, Examples)
{
    const auto p = PrimeModulus::of(17);
    const std::vector<residue> c1{9}, x1{4}, y1{11};
    EXPECT_EQ(structured_det(c1, x1, y1, p), 9u);
    const std::vector<residue> c{3, 0, 5}, x{1, 2, 3}, y{4, 5, 6};
    EXPECT_EQ(structured_det(c, x, y, p), 0u);
    const std::vector<residue> c4{3, 1, 5, 16}, x4{1, 2, 7, 11}, y4{4, 5, 6, 9};
    EXPECT_EQ(det_mod_p(polynomial_kernel_matrix(c4, x4, y4, p)), structured_det(c4, x4, y4, p));
    const std::vector<residue> short_y{4, 5};
    EXPECT_THROW(structured_det(c, x, short_y, p), precondition_error);
}

} // namespace
} // namespace resdet
