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

#include <string>

#include "resdet/verify.hpp"

namespace resdet {
namespace {

class SmallSweep : public ::testing::TestWithParam<TheoremId> {};

TEST_P(SmallSweep, NoViolations)
{
    SweepOptions opt;
    opt.pmax = GetParam() == TheoremId::QR ? 60 : 100;
    const auto report = run_verification(GetParam(), opt);
    EXPECT_GT(report.summary.holds, 0u);
    EXPECT_EQ(report.summary.violated, 0u);
    EXPECT_EQ(report.summary.inapplicable, 0u);
}

INSTANTIATE_TEST_SUITE_P(AllIdentities, SmallSweep, ::testing::ValuesIn(all_theorem_ids),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(VerificationId, RoundTrip)
{
    for (auto id : all_theorem_ids) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(parse_theorem_id("T9").has_value());
}

TEST(Sweep, RecordsAreSorted)
{
    const auto report = run_verification(TheoremId::L26, {.pmax = 40, .jobs = 3});
    for (std::size_t i = 1; i < report.records.size(); ++i) {
        const auto& a = report.records[i - 1];
        const auto& b = report.records[i];
        const auto ka = std::tuple(*a.p, *a.k, *a.m, *a.d);
        const auto kb = std::tuple(*b.p, *b.k, *b.m, *b.d);
        ASSERT_LT(ka, kb);
    }
}

TEST(Sweep, ParallelMatchesSerial)
{
    const auto serial = run_verification(TheoremId::T2, {.pmax = 80, .jobs = 1});
    const auto parallel = run_verification(TheoremId::T2, {.pmax = 80, .jobs = 4});
    ASSERT_EQ(serial.records.size(), parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        EXPECT_EQ(serial.records[i].p, parallel.records[i].p);
        EXPECT_EQ(serial.records[i].lhs, parallel.records[i].lhs);
    }
}

TEST(Sweep, ExplicitListsMarkInapplicableTuples)
{
    // k = 4 does not divide 13 - 1 - ... for p = 7, and d = 1 has chi_k(d) = 1, not -1
    const auto report = run_verification(TheoremId::T1, {.pmax = 13, .klist = {2, 4}, .dlist = {1, 2}});
    EXPECT_GT(report.summary.inapplicable, 0u);
    EXPECT_EQ(report.summary.violated, 0u);
    bool saw_holds = false;
    for (const auto& r : report.records) saw_holds = saw_holds || r.verdict == Verdict::Holds;
    EXPECT_TRUE(saw_holds);
}

TEST(Sweep, OddKWithBadClassIsInapplicable)
{
    // p = 7 = 2k+1 mod 4k for k = 3
    const auto report = run_verification(TheoremId::T3, {.pmax = 7, .klist = {3}});
    ASSERT_EQ(report.records.size(), 2u); // p = 5 and p = 7
    for (const auto& r : report.records) EXPECT_EQ(r.verdict, Verdict::Inapplicable);
}

TEST(Sweep, ExcludedValueForOddK)
{
    const auto p13 = PrimeModulus::of(13); // 13 = 1 mod 12
    EXPECT_EQ(t2_excluded_value(3, 2, p13), -1);
    const auto p19 = PrimeModulus::of(19); // 19 = 7 mod 12
    EXPECT_EQ(t2_excluded_value(3, 2, p19), legendre(2, p19));
    EXPECT_EQ(t2_excluded_value(2, 2, p19), -1);
}

TEST(Sweep, CriterionBiconditionalCubic)
{
    const auto report = run_verification(TheoremId::T5, {.pmax = 400, .klist = {3}, .mlist = {3, 5}});
    EXPECT_GT(report.summary.holds, 0u);
    EXPECT_EQ(report.summary.violated, 0u);
}

} // namespace
} // namespace resdet
