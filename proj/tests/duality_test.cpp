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

#include "antimatroid/duality.hpp"

#include <gtest/gtest.h>

#include "antimatroid/error.hpp"
#include "antimatroid/theorem_lab.hpp"
#include "fixtures.hpp"

namespace antimatroid {
namespace {

using testing::boolean2;
using testing::complement_size_linkage;
using testing::family_n;
using testing::family_p;
using testing::mask_of;
using testing::two_element_linkage;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kConsistencyViolation;
}

SetFunction constant(const RankedSystem& s, std::int64_t c) {
  return SetFunction::from(s, [c](Mask) { return c; });
}

// F(X) = 2 − |X| on the lower layer of P.
SetFunction two_minus_size() {
  return SetFunction::from(RankedSystem(family_p()), [](Mask m) { return 2 - popcount(m); });
}

// F on N: 2, 1, 2, 2, 2 on ∅, 1, 2, 12, 13.
SetFunction non_quasi_concave_on_n() {
  const RankedSystem s(family_n());
  return SetFunction::from(s, [](Mask m) { return m == 0b0001 ? 1 : 2; });
}

TEST(SetFunctionTest, DomainAndLookup) {
  const SetFunction f = two_minus_size();
  EXPECT_EQ(f.domain(), FunctionDomain::kLower);
  EXPECT_EQ(f.domain_size(), 5u);
  EXPECT_EQ(f.at(0b011), Rational(0));
  EXPECT_TRUE(f.is_defined_at(0b101));
  EXPECT_FALSE(f.is_defined_at(0b111));
  EXPECT_EQ(code_of([&] { f.at(0b111); }), ErrorCode::kNotInDomain);
  EXPECT_EQ(code_of([&] { f.at(0b100); }), ErrorCode::kNotInDomain);
  EXPECT_EQ(code_of([] { SetFunction(RankedSystem(family_p()), {1, 2}); }),
            ErrorCode::kMissingValue);
}

TEST(QuasiConcavityTest, Constant) {
  for (const SetFamily& f : {boolean2(), family_p(), family_n()}) {
    EXPECT_TRUE(is_quasi_concave(constant(RankedSystem(f), 3)));
  }
}

TEST(QuasiConcavityTest, ViolationOnFamilyN) {
  const SetFunction f = non_quasi_concave_on_n();
  const auto v = find_quasi_concavity_violation(f);
  ASSERT_TRUE(v.has_value());
  const SetFamily& fam = f.system().family();
  EXPECT_EQ(v->z.mask(), mask_of(fam, {"1"}));
  const Mask x = v->x.mask();
  const Mask y = v->y.mask();
  EXPECT_EQ(x | y, mask_of(fam, {"1", "2", "3"}));
  EXPECT_TRUE((x == mask_of(fam, {"1", "3"}) && y == mask_of(fam, {"1", "2"})) ||
              (x == mask_of(fam, {"1", "2"}) && y == mask_of(fam, {"1", "3"})));
}

TEST(QuasiConcavityTest, TwoMinusSizeOnP) { EXPECT_TRUE(is_quasi_concave(two_minus_size())); }

TEST(MonotonicityTest, Examples) {
  EXPECT_TRUE(is_monotone(complement_size_linkage(3)));
  EXPECT_TRUE(is_monotone(two_element_linkage()));
  const auto size = LinkageFunction::generate(GroundSet::numbered(3),
                                              [](std::size_t, Mask m) { return popcount(m); });
  const auto v = find_monotonicity_violation(size);
  ASSERT_TRUE(v.has_value());
  EXPECT_LT(size(v->element, v->smaller.mask()), size(v->element, v->larger.mask()));
  EXPECT_TRUE(v->smaller.is_subset_of(v->larger));
}

TEST(ExtractionTest, TwoElementExample) {
  const SetFunction f = extract_set_function(two_element_linkage(), RankedSystem(boolean2()));
  EXPECT_EQ(f, constant(RankedSystem(boolean2()), 1));
  EXPECT_EQ(f.domain_size(), 3u);
}

TEST(ExtractionTest, ComplementSizeOnP) {
  const SetFunction f =
      extract_set_function(complement_size_linkage(3), RankedSystem(family_p()));
  EXPECT_EQ(f, two_minus_size());
  EXPECT_EQ(f.at(0b000), Rational(2));
  EXPECT_EQ(f.at(0b001), Rational(1));
  EXPECT_EQ(f.at(0b010), Rational(1));
  EXPECT_EQ(f.at(0b011), Rational(0));
  EXPECT_EQ(f.at(0b101), Rational(0));
}

TEST(ExtractionTest, CounterexampleOnN) {
  const auto cex = counterexample_linkage(family_n(), 3);
  EXPECT_TRUE(is_monotone(cex.linkage));
  const SetFunction f = extract_set_function(cex.linkage, RankedSystem(family_n()));
  EXPECT_EQ(f, non_quasi_concave_on_n());
  EXPECT_FALSE(is_quasi_concave(f));
}

TEST(ExtensionTest, FallbackAtGround) {
  const LinkageFunction pi = complement_size_linkage(3);
  const SetFunction f = extract_set_function(pi, RankedSystem(family_p()));
  const SetFunction full = extend_to_maximal(f, pi);
  EXPECT_EQ(full.domain(), FunctionDomain::kFull);
  EXPECT_EQ(full.at(0b111), Rational(0));
  EXPECT_EQ(full.at(0b011), f.at(0b011));
  EXPECT_TRUE(is_quasi_concave(full));
}

TEST(ExtensionTest, SingleContinuation) {
  const LinkageFunction pi = two_element_linkage();
  const RankedSystem s(boolean2().truncate(1));
  const SetFunction f = extract_set_function(pi, s);
  const SetFunction full = extend_to_maximal(f, pi);
  EXPECT_EQ(full.at(0b01), Rational(1));
  EXPECT_EQ(full.at(0b10), Rational(1));
}

TEST(ExtensionTest, ConstantLinkage) {
  const auto pi = LinkageFunction(GroundSet::numbered(3), Rational(5));
  const SetFunction full = extend_to_maximal(extract_set_function(pi, RankedSystem(family_p())),
                                             pi);
  for (const Rational& v : full.values()) EXPECT_EQ(v, Rational(5));
}

TEST(ExtensionTest, RequiresRepresentation) {
  EXPECT_EQ(code_of([] { extend_to_maximal(two_minus_size(), LinkageFunction(GroundSet::numbered(3))); }),
            ErrorCode::kNotARepresentation);
}

TEST(CanonicalLinkageTest, TwoElementExample) {
  const LinkageFunction pf = build_canonical_linkage(constant(RankedSystem(boolean2()), 1));
  EXPECT_EQ(pf.table().size(), 8u);
  for (const Rational& v : pf.table()) EXPECT_EQ(v, Rational(1));
  EXPECT_NE(pf, two_element_linkage());
}

TEST(CanonicalLinkageTest, TwoMinusSize) {
  const SetFunction f = two_minus_size();
  const LinkageFunction pf = build_canonical_linkage(f);
  EXPECT_EQ(pf(2, 0b001), Rational(1));
  EXPECT_TRUE(represents(pf, f));
  // Pairs with x ∈ X take the minimum of F.
  for (Mask m = 0; m < 8; ++m) {
    for (std::size_t x = 0; x < 3; ++x) {
      if ((m >> x) & 1u) {
        EXPECT_EQ(pf(x, m), Rational(0));
      }
    }
  }
}

TEST(CanonicalLinkageTest, RationalValues) {
  const SetFunction f = SetFunction::from(RankedSystem(family_p()), [](Mask m) {
    return Rational(1, 1 + popcount(m));
  });
  const LinkageFunction pf = build_canonical_linkage(f);
  EXPECT_EQ(pf(2, 0b001), Rational(1, 2));
  EXPECT_TRUE(represents(pf, f));
}

TEST(RepresentsTest, Examples) {
  const SetFunction one = constant(RankedSystem(boolean2()), 1);
  EXPECT_TRUE(represents(two_element_linkage(), one));
  EXPECT_TRUE(represents(build_canonical_linkage(one), one));
  EXPECT_FALSE(represents(LinkageFunction(GroundSet::numbered(2), Rational(0)), one));
  EXPECT_EQ(code_of([&] { represents(complement_size_linkage(3), one); }),
            ErrorCode::kGroundSetMismatch);
  const auto cert = certify_representation(two_element_linkage(), one);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->witnesses.size(), 3u);
}

TEST(MeetTest, Examples) {
  const LinkageFunction pi = two_element_linkage();
  EXPECT_EQ(meet_linkages(pi, pi), pi);
  const LinkageFunction pf = build_canonical_linkage(constant(RankedSystem(boolean2()), 1));
  EXPECT_EQ(meet_linkages(pi, pf), pf);
  EXPECT_EQ(code_of([&] { meet_linkages(pi, complement_size_linkage(3)); }),
            ErrorCode::kGroundSetMismatch);
}

TEST(MeetTest, SameFunctionOnP) {
  const RankedSystem s(family_p());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinkageFunction a = random_monotone_linkage(s.ground(), seed, 0, 8);
    const SetFunction f = extract_set_function(a, s);
    const LinkageFunction b = build_canonical_linkage(f);
    const LinkageFunction m = meet_linkages(a, b);
    EXPECT_TRUE(is_monotone(m));
    EXPECT_TRUE(represents(m, f));
  }
}

TEST(DominatesCanonicalTest, Examples) {
  const SetFunction one = constant(RankedSystem(boolean2()), 1);
  const LinkageFunction pi = two_element_linkage();
  EXPECT_TRUE(dominates_canonical(pi, one));
  EXPECT_EQ(build_canonical_linkage(one)(1, 0), Rational(1));
  EXPECT_EQ(pi(1, 0), Rational(2));
  EXPECT_TRUE(dominates_canonical(build_canonical_linkage(one), one));
  EXPECT_TRUE(dominates_canonical(complement_size_linkage(3), two_minus_size()));
  EXPECT_EQ(code_of([&] { dominates_canonical(LinkageFunction(GroundSet::numbered(2)), one); }),
            ErrorCode::kNotARepresentation);
}

TEST(IntervalArgmaxTest, Examples) {
  const SetFunction f = two_minus_size();
  const GroundSet& g = f.system().ground();
  EXPECT_EQ(interval_argmax(f, 2, g.subset_of({"1"})), g.subset_of({"1"}));
  const SetFunction c = constant(RankedSystem(family_p()), 0);
  EXPECT_EQ(interval_argmax(c, 2, g.subset_of({"1"})), g.subset_of({"1"}));
  EXPECT_EQ(interval_maximizers(c, 2, g.subset_of({"1"})).size(), 2u);
  EXPECT_EQ(interval_argmax(c, 2, g.empty_set()), g.empty_set());
  const SetFunction one = constant(RankedSystem(boolean2()), 1);
  EXPECT_EQ(interval_argmax(one, 1, boolean2().ground().empty_set()),
            boolean2().ground().empty_set());
  EXPECT_EQ(code_of([&] { interval_argmax(f, 0, g.subset_of({"1"})); }),
            ErrorCode::kEmptyInterval);
}

}  // namespace
}  // namespace antimatroid
