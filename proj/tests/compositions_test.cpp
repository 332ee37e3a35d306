#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles/oracles.hpp"
#include "orbitcover/compositions.hpp"
#include "orbitcover/errors.hpp"
#include "orbitcover/modular.hpp"

using namespace orbitcover;

namespace {

IntervalComposition C(std::vector<int> parts) { return IntervalComposition(std::move(parts)); }

std::vector<std::vector<int>> as_tuples(const std::vector<IntervalComposition>& list) {
  std::vector<std::vector<int>> out;
  for (const auto& s : list) out.push_back(s.parts());
  return out;
}

}  // namespace

TEST(IntervalComposition, BasicsAndRendering) {
  const auto s = C({2, 2, 3});
  EXPECT_EQ(s.n(), 7);
  EXPECT_EQ(s.k(), 3);
  EXPECT_EQ(s.partial_sums(), (std::vector<int>{0, 2, 4, 7}));
  EXPECT_EQ(s.to_string(), "(2,2,3)");
  EXPECT_THROW(C({}), DomainError);
  EXPECT_THROW(C({2, 0, 3}), DomainError);
  EXPECT_THROW(C({-1, 3}), DomainError);
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_compositions(7, 3).size(), 15u);
  EXPECT_EQ(as_tuples(enumerate_compositions(3, 3)), (std::vector<std::vector<int>>{{1, 1, 1}}));
  EXPECT_EQ(as_tuples(enumerate_compositions(5, 2)),
            (std::vector<std::vector<int>>{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  EXPECT_THROW(enumerate_compositions(3, 4), DomainError);
  EXPECT_THROW(enumerate_compositions(3, 0), DomainError);
}

TEST(Enumerate, CountsAndOrderMatchOracleUpToTwelve) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto list = enumerate_compositions(n, k);
      ASSERT_EQ(static_cast<long long>(list.size()), oracle::binomial(n - 1, k - 1)) << n << "," << k;
      ASSERT_EQ(as_tuples(list), oracle::compositions(n, k)) << n << "," << k;
    }
  }
}

TEST(Rotate, ExamplesAndActionLaws) {
  EXPECT_EQ(rotate(C({2, 2, 3}), 2), C({3, 2, 2}));
  EXPECT_EQ(rotate(C({2, 2, 3}), 5), C({3, 2, 2}));
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& s : enumerate_compositions(n, k)) {
        ASSERT_EQ(rotate(s, 0), s);
        ASSERT_EQ(rotate(rotate(s, 1), k - 1), s);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) ASSERT_EQ(rotate(rotate(s, i), j), rotate(s, i + j));
        }
      }
    }
  }
}

TEST(RotationClasses, SevenThree) {
  const auto classes = rotation_classes(7, 3);
  ASSERT_EQ(classes.size(), 5u);
  const std::vector<std::vector<std::vector<int>>> expected{
      {{1, 1, 5}, {1, 5, 1}, {5, 1, 1}},
      {{1, 2, 4}, {2, 4, 1}, {4, 1, 2}},
      {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}},
      {{1, 4, 2}, {2, 1, 4}, {4, 2, 1}},
      {{2, 2, 3}, {2, 3, 2}, {3, 2, 2}},
  };
  for (std::size_t c = 0; c < classes.size(); ++c) {
    EXPECT_EQ(classes[c].representative.parts(), expected[c].front());
    EXPECT_EQ(as_tuples(classes[c].members), expected[c]);
  }
  EXPECT_EQ(classes[4].to_string(), "[(2,2,3)]");
}

TEST(RotationClasses, SymmetricClass) {
  const auto classes = rotation_classes(3, 3);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].members.size(), 1u);
}

TEST(RotationClasses, MatchUnionFindOracleAndNecklaceCount) {
  for (int n = 1; n <= 11; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto classes = rotation_classes(n, k);
      const auto orbits = oracle::rotation_orbits(n, k);
      ASSERT_EQ(classes.size(), orbits.size()) << n << "," << k;
      ASSERT_EQ(static_cast<long long>(classes.size()), oracle::necklace_count(n, k));
      for (std::size_t c = 0; c < classes.size(); ++c) {
        ASSERT_EQ(as_tuples(classes[c].members), orbits[c]);
        const auto& members = classes[c].members;
        ASSERT_EQ(classes[c].representative, *std::min_element(members.begin(), members.end()));
        ASSERT_EQ(k % static_cast<int>(members.size()), 0);
        for (const auto& m : members) {
          ASSERT_EQ(canonical_rotation(m), classes[c].representative);
          ASSERT_TRUE(classes[c].contains(rotate(m, 1)));
        }
      }
    }
  }
  EXPECT_EQ(rotation_classes(8, 4).size(), 10u);
}

TEST(UTransform, Examples) {
  EXPECT_EQ(u_transform(C({2, 2, 3}), 5), C({3, 3, 1}));
  EXPECT_EQ(u_transform(C({2, 2, 3}), 2), C({1, 3, 3}));
  EXPECT_EQ(u_transform(C({2, 2, 3}), 1), C({2, 2, 3}));
  EXPECT_THROW(u_transform(C({2, 2, 2}), 2), DomainError);
  EXPECT_THROW(u_transform(C({2, 2, 2}), 3), DomainError);
}

TEST(UTransform, MatchesScaledChordOracle) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& s : enumerate_compositions(n, k)) {
        for (int u : units(n)) {
          const auto t = u_transform(s, u);
          ASSERT_EQ(t.parts(), oracle::scaled_chord_gaps(s.parts(), u));
          ASSERT_EQ(t.n(), n);
          ASSERT_EQ(t.k(), k);
        }
      }
    }
  }
}

// The induced map on rotation classes is a well-defined group action.
TEST(UTransform, UnitActionLawsUpToNine) {
  for (int n = 1; n <= 9; ++n) {
    const auto us = units(n);
    for (int k = 1; k <= n; ++k) {
      for (const auto& cls : rotation_classes(n, k)) {
        for (int u : us) {
          const auto image = act_on_class(cls.representative, u);
          for (const auto& m : cls.members) ASSERT_EQ(act_on_class(m, u), image);
          for (int w : us) {
            ASSERT_EQ(act_on_class(cls.representative, (u * w) % n),
                      act_on_class(act_on_class(cls.representative, w), u))
                << cls.to_string() << " u=" << u << " w=" << w;
          }
        }
        if (n > 1) ASSERT_EQ(act_on_class(cls.representative, 1), cls.representative);
      }
    }
  }
}

TEST(AffineOrbits, SevenThree) {
  const auto orbits = affine_orbits(7, 3);
  ASSERT_EQ(orbits.size(), 2u);
  auto reps = [](const AffineOrbit& o) {
    std::vector<std::vector<int>> out;
    for (const auto& c : o.classes) out.push_back(c.representative.parts());
    return out;
  };
  EXPECT_EQ(reps(orbits[0]), (std::vector<std::vector<int>>{{1, 1, 5}, {1, 3, 3}, {2, 2, 3}}));
  EXPECT_EQ(reps(orbits[1]), (std::vector<std::vector<int>>{{1, 2, 4}, {1, 4, 2}}));
  EXPECT_EQ(orbits[0].witnesses.size(), 6u);
  EXPECT_EQ(orbits[1].witnesses.size(), 2u);
  for (const auto& o : orbits) {
    for (const auto& w : o.witnesses) {
      EXPECT_TRUE(rotation_class(w.to).contains(u_transform(w.from, w.unit)));
    }
  }
  EXPECT_TRUE(affinely_related(C({2, 2, 3}), C({3, 3, 1})));
  EXPECT_FALSE(affinely_related(C({2, 2, 3}), C({1, 2, 4})));
  EXPECT_EQ(relating_unit(C({2, 2, 3}), C({3, 3, 1})), 2);
  EXPECT_EQ(relating_unit(C({2, 2, 3}), C({1, 2, 4})), std::nullopt);
}

TEST(AffineOrbits, SinglePart) {
  for (int n = 1; n <= 9; ++n) {
    const auto orbits = affine_orbits(n, 1);
    ASSERT_EQ(orbits.size(), 1u);
    ASSERT_EQ(orbits[0].classes.size(), 1u);
    EXPECT_EQ(orbits[0].classes[0].representative, C({n}));
  }
}

// Brute-force orbit table for (7,2) by transitive closure under Z_7^x.
TEST(AffineOrbits, SevenTwoByExhaustiveActionTable) {
  std::map<std::vector<int>, std::set<std::vector<int>>> reach;
  for (const auto& orbit : oracle::rotation_orbits(7, 2)) {
    const auto rep = orbit.front();
    for (int u = 1; u <= 6; ++u) {
      const auto gaps = oracle::scaled_chord_gaps(rep, u);
      for (const auto& other : oracle::rotation_orbits(7, 2)) {
        if (std::find(other.begin(), other.end(), gaps) != other.end()) reach[rep].insert(other.front());
      }
    }
  }
  const auto orbits = affine_orbits(7, 2);
  ASSERT_EQ(orbits.size(), 1u);
  for (const auto& [rep, targets] : reach) EXPECT_EQ(targets.size(), 3u);
  EXPECT_EQ(orbits[0].classes.size(), 3u);
}

TEST(AffineOrbits, PartitionRefinesRotationClasses) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::size_t total = 0;
      std::set<std::vector<int>> seen;
      for (const auto& orbit : affine_orbits(n, k)) {
        total += orbit.classes.size();
        for (const auto& c : orbit.classes) {
          ASSERT_TRUE(seen.insert(c.representative.parts()).second);
          for (int u : units(n)) ASSERT_TRUE(orbit.contains(u_transform(c.representative, u)));
        }
        const std::size_t m = orbit.classes.size();
        ASSERT_EQ(orbit.witnesses.size(), m * (m - 1));
        for (const auto& w : orbit.witnesses) {
          ASSERT_TRUE(rotation_class(w.to).contains(u_transform(w.from, w.unit)));
        }
      }
      ASSERT_EQ(total, rotation_classes(n, k).size());
    }
  }
}
