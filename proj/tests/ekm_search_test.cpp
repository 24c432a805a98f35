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
#include <vector>

#include "resdet/ekm_search.hpp"

namespace resdet {
namespace {

using Primes = std::vector<std::uint64_t>;

TEST(CriterionIntegers, ThirteenByTwo)
{
    const auto ci = criterion_integers(2, 13);
    EXPECT_EQ(ci.head, ExactInteger("58917607974225"));
    ASSERT_EQ(ci.quotients.size(), 6u);
    EXPECT_EQ(ci.quotients[0], ExactInteger("1297229420025"));
    EXPECT_EQ(ci.quotients[3], 812025);
    EXPECT_EQ(ci.quotients[5], 27);
}

TEST(CriterionIntegers, RejectsBadOffsets)
{
    EXPECT_THROW(criterion_integers(2, 1), precondition_error);
    EXPECT_THROW(criterion_integers(2, 4), precondition_error);
    EXPECT_THROW(criterion_integers(1, 5), precondition_error);
}

TEST(CriterionIntegers, CubicResidues)
{
    const auto ci = criterion_integers(3, 5);
    EXPECT_EQ(ci.head, 41480);
    ASSERT_EQ(ci.quotients.size(), 2u);
    EXPECT_EQ(ci.quotients[0], 1088);
    EXPECT_EQ(ci.quotients[1], 17);
}

TEST(ShiftedDeterminant, MatchesGeneralDeterminant)
{
    for (std::uint64_t pv : {13u, 17u, 29u, 37u}) {
        const auto p = PrimeModulus::of(pv);
        const ResidueList res = kth_residues(p, 2);
        for (std::uint64_t m : {1u, 2u, 3u, 5u}) {
            const residue direct = det_mod_p(build_matrix(res, m + res.size(), -1));
            EXPECT_EQ(shifted_determinant_mod_p(p, 2, m), direct) << pv << " " << m;
        }
    }
}

TEST(EkmByScan, ListedSetsBelowThousand)
{
    EXPECT_EQ(ekm_by_scan(2, 5, 1000), (Primes{29}));
    EXPECT_EQ(ekm_by_scan(2, 7, 1000), (Primes{13, 53}));
    EXPECT_EQ(ekm_by_scan(2, 9, 1000), (Primes{13, 17, 29}));
    EXPECT_EQ(ekm_by_scan(2, 11, 1000), (Primes{17, 29}));
    EXPECT_EQ(ekm_by_scan(2, 13, 1000), (Primes{17, 109, 401}));
}

TEST(EkmByScan, EmptyForOffsetOne)
{
    for (std::uint64_t k = 2; k <= 6; ++k) EXPECT_TRUE(ekm_by_scan(k, 1, 1000).empty()) << k;
}

TEST(EkmByScan, RejectsTinyBound) { EXPECT_THROW(ekm_by_scan(2, 3, 2), precondition_error); }

TEST(EkmByCriterion, ThirteenByTwo)
{
    const EkmReport r = ekm_by_criterion(2, 13);
    EXPECT_EQ(r.primes(), (Primes{17, 109, 401, 29629, 924397}));
    EXPECT_EQ(r.primes_up_to(1000), (Primes{17, 109, 401}));
    EXPECT_TRUE(r.clean());
    ASSERT_TRUE(r.head.has_value());
    EXPECT_EQ(r.head->factorization.recombine(), r.head->value);
    ASSERT_EQ(r.members.size(), 5u);
    EXPECT_EQ(r.members[0].provenance, Provenance::SmallScan);
    EXPECT_EQ(r.members[1].provenance, Provenance::CriterionFactor);
    EXPECT_EQ(r.members[3].verified_by, VerificationMethod::Factorization);
    EXPECT_EQ(r.members[4].verified_by, VerificationMethod::Factorization);
}

TEST(EkmByCriterion, SmallerOffsets)
{
    EXPECT_EQ(ekm_by_criterion(2, 3).primes(), Primes{});
    EXPECT_EQ(ekm_by_criterion(2, 5).primes(), (Primes{29}));
    // the lists below 1000 extend by one larger prime each
    EXPECT_EQ(ekm_by_criterion(2, 7).primes(), (Primes{13, 53, 2477}));
    EXPECT_EQ(ekm_by_criterion(2, 9).primes(), (Primes{13, 17, 29, 1201}));
    EXPECT_EQ(ekm_by_criterion(2, 11).primes(), (Primes{17, 29, 1597}));
    EXPECT_TRUE(ekm_by_criterion(2, 1).primes().empty());
}

TEST(EkmByCriterion, LargeMembersVanishDirectly)
{
    // cross-check the factorization route on members the direct limit skips
    EXPECT_EQ(shifted_determinant_mod_p(PrimeModulus::of(2477), 2, 7), 0u);
    EXPECT_EQ(shifted_determinant_mod_p(PrimeModulus::of(1597), 2, 11), 0u);
    EXPECT_NE(shifted_determinant_mod_p(PrimeModulus::of(2473), 2, 7), 0u);
}

TEST(EkmByCriterion, DirectAndFactorizationRoutesAgree)
{
    EkmOptions direct;
    direct.direct_dim_limit = 2000;
    EkmOptions lemma;
    lemma.direct_dim_limit = 0;
    for (std::uint64_t m : {5u, 7u, 9u}) {
        const auto a = ekm_by_criterion(2, m, direct);
        const auto b = ekm_by_criterion(2, m, lemma);
        EXPECT_EQ(a.primes(), b.primes()) << m;
        EXPECT_TRUE(a.rejected.empty());
        EXPECT_TRUE(b.rejected.empty());
    }
}

TEST(EkmByCriterion, CubicResidues)
{
    EXPECT_EQ(ekm_by_criterion(3, 5).primes_up_to(1000), ekm_by_scan(3, 5, 1000));
    EXPECT_EQ(ekm_by_criterion(3, 7).primes_up_to(1000), ekm_by_scan(3, 7, 1000));
}

} // namespace
} // namespace resdet
