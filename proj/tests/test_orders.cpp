#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "poirev/enumerate.hpp"
#include "poirev/error.hpp"
#include "poirev/poi.hpp"

using namespace poirev;

TEST(Orders, TpoEnumerationMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto expected = oracle::weak_orders(n);
    std::set<oracle::Ranks> got;
    std::size_t calls = 0;
    for_each_tpo(n, [&](const Tpo& t) {
      ++calls;
      got.insert(t.ranks());
    });
    EXPECT_EQ(calls, got.size()) << "duplicates at n=" << n;
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Orders, TpoCountsAreOrderedBellNumbers) {
  const std::size_t frozen[] = {1, 3, 13, 75, 541, 4683};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_tpos(n).size(), frozen[n - 1]);
}

TEST(Orders, PoiEnumerationMatchesFilteredWeakOrders) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto expected = oracle::poi_assignments(n);
    std::set<std::pair<oracle::Ranks, oracle::Ranks>> got;
    std::size_t calls = 0;
    for_each_poi(n, [&](const PoiAssignment& p) {
      ++calls;
      got.emplace(p.pluses(), p.minuses());
    });
    EXPECT_EQ(calls, got.size());
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Orders, PoiCountsFrozen) {
  const std::size_t frozen[] = {1, 7, 85, 1519};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_pois(n).size(), frozen[n - 1]);
}

TEST(Orders, EnumerationGuards) {
  EXPECT_THROW(enumerate_pois(5), DomainTooLarge);
  EXPECT_THROW(enumerate_tpos(7), DomainTooLarge);
  EXPECT_THROW(check_bound(Domain::verify, 0), DomainTooLarge);
  EXPECT_EQ(max_worlds(Domain::tpo), 6u);
}

TEST(Orders, TpoFromRelationChecksAxioms) {
  const Tpo t = tpo_from_relation(3, [](World x, World y) { return x / 2 <= y / 2; });
  EXPECT_EQ(t.ranks(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_THROW(tpo_from_relation(2, [](World x, World y) { return x == y; }), NotTotal);
  // a cycle 0 < 1 < 2 < 0
  EXPECT_THROW(tpo_from_relation(3,
                                 [](World x, World y) { return x == y || (x + 1) % 3 == y; }),
               NotTransitive);
}

TEST(Orders, LevelsAndCanonicalForm) {
  EXPECT_EQ(canonicalize({5, 2, 9, 2}), (std::vector<std::size_t>{1, 0, 2, 0}));
  EXPECT_TRUE(is_canonical({1, 0, 2, 0}));
  EXPECT_FALSE(is_canonical({0, 2}));
  const Tpo t = tpo_from_levels(3, {WorldSet::of(3, {2}), WorldSet::of(3, {0, 1})});
  EXPECT_EQ(t.ranks(), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(min_worlds(t, WorldSet::of(3, {0, 1})), WorldSet::of(3, {0, 1}));
  EXPECT_THROW(min_worlds(t, WorldSet::none(3)), InconsistentInput);
  EXPECT_THROW(tpo_from_levels(3, {WorldSet::of(3, {0, 1})}), InvalidOrder);
  EXPECT_THROW(tpo_from_levels(2, {WorldSet::of(2, {0}), WorldSet::of(2, {0, 1})}), InvalidOrder);
}

TEST(Orders, PoiValidation) {
  EXPECT_THROW(poi_from_ranks({1, 0}, {1, 2}), Flush2Violation);
  try {
    poi_from_ranks({0, 1, 2}, {5, 4, 3});
    FAIL();
  } catch (const Order3Violation& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
  }
  const PoiAssignment p = poi_from_ranks({0, 10}, {10, 30});
  EXPECT_EQ(p.pluses(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(p.minuses(), (std::vector<std::size_t>{1, 2}));
  EXPECT_FALSE(non_flush(p));
  EXPECT_TRUE(non_flush(poi_from_ranks({0, 2}, {1, 3})));
}

TEST(Orders, NonFlushMatchesDefinition) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_poi(n, [&](const PoiAssignment& p) {
      bool flush = false;
      for (World x = 0; x < n; ++x) {
        for (World y = 0; y < n; ++y) flush = flush || p.plus(x) == p.minus(y);
      }
      EXPECT_EQ(non_flush(p), !flush);
    });
  }
}

TEST(Orders, FamilyPoisAreFaithful) {
  for (const Tpo& t : enumerate_tpos(4)) {
    const PoiAssignment lp = lexicographic_poi(t);
    const PoiAssignment rp = reverse_lex_poi(t);
    EXPECT_EQ(derived_tpo(lp), t);
    EXPECT_EQ(derived_tpo(rp), t);
    for (World x = 0; x < 4; ++x) {
      for (World y = 0; y < 4; ++y) {
        EXPECT_LT(lp.plus(x), lp.minus(y));
        // each interval stays inside its own level
        if (t.less(x, y)) EXPECT_LT(rp.minus(x), rp.plus(y));
      }
    }
  }
}
