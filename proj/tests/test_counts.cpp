#include <gtest/gtest.h>

#include <algorithm>

#include "golden.hpp"
#include "refloor/counts.hpp"
#include "refloor/io.hpp"

using namespace refloor;

namespace {

MarkingSpec spec_of(const CHKey& k) { return {k.d, k.genus, k.mu1, k.mu2}; }

}  // namespace

TEST(CountRefined, SmallDegreeGolden) {
  for (const auto& g : golden::small_degree())
    EXPECT_EQ(count_refined(spec_of(g.key)), parse_half_laurent(g.expected)) << key_string(g.key);
}

TEST(CountRefined, PermutedExceptionalIndicesAgree) {
  const CurveClass a(2, {1, 0, 1, 0, 0, 0}), b(2, {0, 0, 0, 1, 1, 0});
  EXPECT_EQ(count_refined({a, 0, {}, {1, 1}}), count_refined({b, 0, {}, {1, 1}}));
}

TEST(CountRefined, EmptyGenerator) {
  const auto r = report({golden::x6(1, {}), 1, {}, {1, 1}});
  EXPECT_TRUE(r.items.empty());
  EXPECT_TRUE(r.total_refined.is_zero());
  EXPECT_EQ(r.total_complex, 0);
}

TEST(CountComplex, Examples) {
  EXPECT_EQ(count_complex({golden::x6(1, {}), 0, {}, {1, 1}}), 1);
  EXPECT_EQ(count_complex({golden::quartic(), 0, {}, {1, 1}}), 616);
  EXPECT_EQ(count_complex({golden::x6(2, {}), 0, {}, {4}}), 4);
}

TEST(Report, DegreeOneHasOneItem) {
  const auto r = report({golden::x6(1, {}), 0, {}, {2}});
  ASSERT_EQ(r.items.size(), 1u);
  EXPECT_EQ(r.items[0].classes, 1);
  EXPECT_EQ(r.items[0].contribution_refined, quantum_integer(2));
}

TEST(Report, QuarticDiagramFactors) {
  const auto r = report({golden::quartic(), 0, {}, {1, 1}});
  std::vector<HalfLaurent> got, want;
  for (const auto& item : r.items) got.push_back(item.contribution_refined);
  for (const auto& s : golden::quartic_diagram_factors()) want.push_back(parse_half_laurent(s));
  auto order = [](const HalfLaurent& x, const HalfLaurent& y) { return to_string(x) < to_string(y); };
  std::sort(got.begin(), got.end(), order);
  std::sort(want.begin(), want.end(), order);
  EXPECT_EQ(got, want);
  EXPECT_EQ(r.total_refined, parse_half_laurent(golden::quartic_values()[2].expected));
}

TEST(Report, RejectsInvalidSpec) {
  try {
    report({golden::x6(2, {}), 0, {}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpecInvalid);
  }
}

TEST(Report, Json) {
  const auto j = to_json(report({golden::x6(2, {}), 0, {}, {1, 1, 2}}));
  EXPECT_EQ(j["total_complex"], "6");
  EXPECT_EQ(j["items"].size(), 1u);
  EXPECT_EQ(j["items"][0]["contribution"], "3[2]_q");
  EXPECT_TRUE(j["items"][0]["representative"].contains("A0"));
}

TEST(Report, ContributionsArePalindromic) {
  for (const auto& g : golden::small_degree())
    for (const auto& item : report(spec_of(g.key)).items) EXPECT_TRUE(is_palindromic(item.contribution_refined));
}
