/*
 * Copyright 2026 The pfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr int kCases = 100;

class PropertyTest : public ::testing::TestWithParam<props::Property> {};

TEST_P(PropertyTest, Holds) {
  const props::Outcome o = props::run_safely(GetParam(), kSeed, kCases);
  EXPECT_GE(o.cases, kCases);
  EXPECT_EQ(o.failures, 0) << o.name << ": " << o.first_failure;
}

INSTANTIATE_TEST_SUITE_P(AllModules, PropertyTest, ::testing::ValuesIn(props::all()),
                         [](const auto& info) { return std::string(info.param.id); });

}  // namespace
