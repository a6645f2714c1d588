#include <gtest/gtest.h>

#include "oracles.hpp"
#include "refloor/markings.hpp"

using namespace refloor;

namespace {

const auto F1 = VertexKind::Floor1;
const auto F2 = VertexKind::Floor2;
const auto LF = VertexKind::Leaf;

const CurveClass kLine(1, {0, 0, 0, 0, 0, 0});
const CurveClass kConic(2, {0, 0, 0, 0, 0, 0});

HalfLaurent total_refined(const MarkingEnumeration& e) {
  HalfLaurent t;
  for (const auto& g : e.groups) t += g.mult_refined * Rational(g.classes);
  return t;
}

Rational total_complex(const MarkingEnumeration& e) {
  Rational t;
  for (const auto& g : e.groups) t += g.mult_complex * g.classes;
  return t;
}

}  // namespace

TEST(ValidateMarking, DegreeOne) {
  const FloorDiagram d({F1, LF, LF}, {{1, 0, 1}, {2, 0, 1}});
  const MarkingSpec spec{kLine, 0, {}, {1, 1}};
  MarkedDiagram m{d, {{true, 0}, {true, 1}}, std::vector<std::vector<int>>(6)};
  EXPECT_TRUE(validate_marking(m, spec).empty());
  m.a0[0] = {false, 0};
  const auto problems = validate_marking(m, spec);
  ASSERT_FALSE(problems.empty());
  EXPECT_EQ(problems.front().substr(0, 3), "(1)");
}

TEST(ValidateMarking, Mu1WeightMismatch) {
  // floor fed by weights 1 and 2; label 1 must sit on a weight-1 end
  const FloorDiagram d({F2, LF, LF, LF}, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}});
  const MarkingSpec spec{kConic, 0, {1}, {1, 2}};
  MarkedDiagram m{d, {{false, 3}, {false, 0}, {true, 0}, {true, 1}}, std::vector<std::vector<int>>(6)};
  const auto problems = validate_marking(m, spec);
  EXPECT_TRUE(std::any_of(problems.begin(), problems.end(), [](const std::string& s) { return s.rfind("(5)", 0) == 0; }));
  EXPECT_TRUE(std::any_of(problems.begin(), problems.end(), [](const std::string& s) { return s.rfind("(6)", 0) == 0; }));
}

TEST(Multiplicity, Examples) {
  const FloorDiagram fig2({F2, LF, LF, LF}, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}});
  const MarkingSpec spec{kConic, 0, {}, {1, 1, 2}};
  // ends lie below the floor they feed, so they take the smaller labels
  const MarkedDiagram m{fig2, {{true, 0}, {true, 1}, {true, 2}, {false, 0}}, std::vector<std::vector<int>>(6)};
  ASSERT_TRUE(validate_marking(m, spec).empty());
  EXPECT_EQ(mult_complex(m, spec), 2);
  EXPECT_EQ(mult_refined(m, spec), quantum_integer(2));

  const FloorDiagram line({F1, LF}, {{1, 0, 2}});
  const MarkedDiagram free_end{line, {{true, 0}}, std::vector<std::vector<int>>(6)};
  EXPECT_EQ(mult_refined(free_end, {kLine, 0, {}, {2}}), quantum_integer(2));
  const MarkedDiagram fixed_end{line, {{false, 1}}, std::vector<std::vector<int>>(6)};
  EXPECT_EQ(mult_refined(fixed_end, {kLine, 0, {2}, {}}), quantum_integer(2) / Rational(2));

  // multiplicities only read weights and roles, so validity is not needed here
  const FloorDiagram inner({F2, F1, LF, LF, LF}, {{0, 1, 3}, {2, 0, 1}, {3, 0, 1}, {4, 0, 5}});
  const MarkedDiagram mi{inner, {{false, 0}, {true, 0}, {true, 1}}, std::vector<std::vector<int>>(6)};
  EXPECT_EQ(mult_complex(mi, {CurveClass(3, {1, 1, 1, 1, 1, 1}), 0, {}, {1}}), 9);
  EXPECT_EQ(mult_refined(mi, {CurveClass(3, {1, 1, 1, 1, 1, 1}), 0, {}, {1}}), quantum_integer(3).pow(2));
}

TEST(Enumerate, ConicWithWeightTwoEnd) {
  const FloorDiagram fig2({F2, LF, LF, LF}, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}});
  const auto e = enumerate_markings(fig2, {kConic, 0, {}, {1, 1, 2}});
  EXPECT_EQ(e.classes, 3);
  EXPECT_EQ(total_refined(e), quantum_integer(2) * Rational(3));
}

TEST(Enumerate, DegreeOne) {
  const FloorDiagram d({F1, LF, LF}, {{1, 0, 1}, {2, 0, 1}});
  const auto e = enumerate_markings(d, {kLine, 0, {}, {1, 1}});
  EXPECT_EQ(e.classes, 1);
  EXPECT_EQ(total_refined(e), HalfLaurent(1L));
}

TEST(Enumerate, RejectsInvalidSpec) {
  const FloorDiagram d({F1, LF, LF}, {{1, 0, 1}, {2, 0, 1}});
  try {
    enumerate_markings(d, {kLine, 0, {}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpecInvalid);
  }
}

TEST(Enumerate, RepresentativesAreValid) {
  const MarkingSpec spec{CurveClass(4, {1, 1, 1, 1, 1, 1}), 0, {}, {1, 1}};
  Partition leaves({1, 1, 1, 1, 1, 1, 1, 1});
  for (const auto& c : generate_layouts(4, 0, leaves))
    for (const auto& g : enumerate_markings(c, spec).groups) {
      const auto problems = validate_marking(g.representative, spec);
      EXPECT_TRUE(problems.empty()) << g.description << ": " << (problems.empty() ? "" : problems.front());
      EXPECT_EQ(mult_refined(g.representative, spec), g.mult_refined);
      EXPECT_EQ(mult_complex(g.representative, spec), g.mult_complex);
    }
}

// Class counts and weighted totals against orbit counting over raw markings.
TEST(Enumerate, MatchesBruteForceOrbits) {
  int compared = 0;
  for (int k = 0; k <= 2; ++k)
    for (int a = 1; a <= 3; ++a)
      for (int b1 = 0; b1 <= (k >= 1 ? 1 : 0); ++b1)
        for (int b2 = 0; b2 <= (k >= 2 ? b1 : 0); ++b2) {
          std::vector<int> b{b1, b2};
          b.resize(static_cast<size_t>(k));
          const CurveClass d(a, b);
          for (int g = 0; g <= 1; ++g)
            for (int s1 = 0; s1 <= d.dot_E(); ++s1)
              for (const auto& mu1 : partitions_of(s1))
                for (const auto& mu2 : partitions_of(d.dot_E() - s1)) {
                  const MarkingSpec spec{d, g, mu1, mu2};
                  if (spec.a0_size() > 4) continue;
                  auto leaves = union_of(union_of(mu1, mu2), Partition::repeated(1, d.b_sum()));
                  for (const auto& c : generate_layouts(a, g, leaves)) {
                    const FloorDiagram diag = to_diagram(c.layout);
                    const auto brute = oracle::brute_markings(diag, spec);
                    const auto got = enumerate_markings(c, spec);
                    ASSERT_EQ(got.classes, brute.orbits) << to_string(d) << " g" << g << " " << describe(c.layout);
                    EXPECT_EQ(total_refined(got), brute.refined) << describe(c.layout);
                    EXPECT_EQ(total_complex(got), brute.complex_total) << describe(c.layout);
                    // the automorphism group acts freely on valid markings
                    EXPECT_EQ(brute.raw, brute.orbits * static_cast<long>(oracle::automorphisms(diag).size()));
                    ++compared;
                  }
                }
        }
  EXPECT_GT(compared, 30);
}

TEST(Enumerate, CountingHelpers) {
  // two comparable elements have one extension; two free ones have two
  EXPECT_EQ(detail::linear_extensions({0, 1}), 1);
  EXPECT_EQ(detail::linear_extensions({0, 0}), 2);
  EXPECT_EQ(detail::linear_extensions({0, 0, 0, 0}), 24);
  // a 2x2 grid poset
  EXPECT_EQ(detail::linear_extensions({0, 1, 1, 6}), 2);
  EXPECT_EQ(detail::count_01_matrices({1, 1}, {1, 1}), 2);
  EXPECT_EQ(detail::count_01_matrices({2, 1}, {1, 1, 1}), 3);
  EXPECT_EQ(detail::count_01_matrices({2}, {2}), 0);
}
