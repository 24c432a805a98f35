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

#include "resdet/properties.hpp"

namespace resdet {
namespace {

class Property : public ::testing::TestWithParam<PropertySuite> {};

TEST_P(Property, Holds)
{
    const PropertyResult r = GetParam().run();
    EXPECT_EQ(r.name, GetParam().name);
    EXPECT_GT(r.cases, 0u);
    EXPECT_EQ(r.failures, 0u) << "first failure: " << r.first_failure;
}

std::string suite_name(const ::testing::TestParamInfo<PropertySuite>& info)
{
    std::string out;
    for (char c : info.param.name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

INSTANTIATE_TEST_SUITE_P(Selftest, Property, ::testing::ValuesIn(property_suites()), suite_name);

TEST(PropertySizes, MeetMinimumCounts)
{
    EXPECT_GE(properties::structured_determinant().cases, 1000u);
    EXPECT_GE(properties::ordering_invariance().cases, 100u);
}

} // namespace
} // namespace resdet
