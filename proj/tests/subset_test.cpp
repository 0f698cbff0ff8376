// Copyright 2026 The Authors.
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

#include "antimatroid/subset.hpp"

#include <gtest/gtest.h>

#include "antimatroid/error.hpp"
#include "antimatroid/rational.hpp"

namespace antimatroid {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kConsistencyViolation;
}

TEST(SubsetTest, BitsBeyondWidthRejected) {
  EXPECT_EQ(code_of([] { Subset(0b100, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(Subset(0b11, 2));
}

TEST(SubsetTest, Operations) {
  const Subset a(0b011, 3);
  const Subset b(0b110, 3);
  EXPECT_EQ((a | b).mask(), 0b111u);
  EXPECT_EQ((a & b).mask(), 0b010u);
  EXPECT_EQ((a - b).mask(), 0b001u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.with(2).mask(), 0b111u);
  EXPECT_EQ(a.without(0).mask(), 0b010u);
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(Subset::full(3).contains(2));
  EXPECT_FALSE(Subset::empty(3).contains(0));
}

TEST(SubsetTest, WidthMismatchRejected) {
  const Subset a(0b01, 2);
  const Subset b(0b01, 3);
  EXPECT_EQ(code_of([&] { (void)(a | b); }), ErrorCode::kGroundSetMismatch);
  EXPECT_EQ(code_of([&] { (void)a.is_subset_of(b); }), ErrorCode::kGroundSetMismatch);
}

TEST(SubsetTest, CanonicalOrder) {
  EXPECT_TRUE(canonical_less(0b100, 0b011));
  EXPECT_TRUE(canonical_less(0b001, 0b010));
  EXPECT_FALSE(canonical_less(0b011, 0b011));
  EXPECT_TRUE(canonical_less(0, 0b1));
}

TEST(GroundSetTest, LabelsAndLookup) {
  const GroundSet g({"a", "b", "c"});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.index_of("b"), 1u);
  EXPECT_FALSE(g.index_of("z").has_value());
  EXPECT_EQ(g.subset_of({"c", "a"}).mask(), 0b101u);
  EXPECT_EQ(g.format(0b101), "{a,c}");
  EXPECT_EQ(g.format(0), "{}");
  EXPECT_EQ(g.labels_of(0b110), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(g.full_mask(), 0b111u);
  EXPECT_EQ(g.subset_count(), 8u);
}

TEST(GroundSetTest, InvalidLabelsRejected) {
  EXPECT_EQ(code_of([] { GroundSet({"1", "1"}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { GroundSet({""}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { GroundSet(std::vector<std::string>{}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { GroundSet::numbered(17); }), ErrorCode::kInvalidArgument);
  const GroundSet g = GroundSet::numbered(2);
  EXPECT_EQ(code_of([&] { g.subset_of({"3"}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { g.subset_of({"1", "1"}); }), ErrorCode::kInvalidArgument);
}

TEST(RationalTest, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(6, 3), Rational(2));
  EXPECT_EQ(code_of([] { Rational(1, 0); }), ErrorCode::kInvalidArgument);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse(" 4/6 "), Rational(2, 3));
  EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
  EXPECT_EQ(Rational(-4, 2).to_string(), "-2");
  EXPECT_EQ(code_of([] { Rational::parse("x"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { Rational::parse("1/"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::kParse);
}

TEST(RationalTest, LargeValuesCompareExactly) {
  const Rational a(INT64_MAX - 1, INT64_MAX);
  const Rational b(INT64_MAX - 2, INT64_MAX - 1);
  EXPECT_GT(a, b);
}

}  // namespace
}  // namespace antimatroid
