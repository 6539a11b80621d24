#include "mutclass/enumerate.h"

#include <gtest/gtest.h>

#include "matrix_oracle.h"

namespace mutclass {
namespace {

using testing::make_diagram;

std::vector<CanonicalKey> keys(const ClassSet& c) {
  std::vector<CanonicalKey> out;
  for (const auto& [k, d] : c.members) out.push_back(k);
  return out;
}

TEST(EnumerateTest, SmallClasses) {
  EXPECT_EQ(enumerate_class(make_diagram(2, {{0, 1}})).size(), 1u);
  ClassSet a3 = enumerate_class(make_diagram(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(a3.exhausted);
  EXPECT_EQ(a3.size(), 4u);
  EXPECT_TRUE(a3.contains(canonical_key(make_diagram(3, {{0, 1}, {1, 2}, {2, 0}}))));
  EXPECT_TRUE(a3.contains(canonical_key(make_diagram(3, {{0, 1}, {2, 1}}))));
  EXPECT_TRUE(a3.contains(canonical_key(make_diagram(3, {{1, 0}, {1, 2}}))));
  EXPECT_EQ(enumerate_class(make_diagram(2, {{0, 1, 2}})).size(), 1u);
}

TEST(EnumerateTest, HeavyTriangleIsFixed) {
  Diagram d = make_diagram(3, {{0, 1, 4}, {1, 2, 4}, {2, 0, 4}});
  for (int k = 0; k < 3; ++k) EXPECT_EQ(canonical_key(mutate(d, k)), canonical_key(d));
  ClassSet c = enumerate_class(d);
  EXPECT_TRUE(c.exhausted);
  EXPECT_EQ(c.size(), 1u);
}

TEST(EnumerateTest, Equivalence) {
  EXPECT_EQ(are_mutation_equivalent(make_diagram(2, {{0, 1}}), make_diagram(2, {{1, 0}})),
            Equivalence::kEquivalent);
  EXPECT_EQ(are_mutation_equivalent(make_diagram(3, {{0, 1}, {1, 2}}),
                                    make_diagram(3, {{0, 1}, {1, 2}, {2, 0}})),
            Equivalence::kEquivalent);
  EXPECT_EQ(are_mutation_equivalent(make_diagram(3, {{0, 1}, {1, 2}}),
                                    make_diagram(3, {{0, 1, 2}, {1, 2}})),
            Equivalence::kNotEquivalent);
  Limits tiny;
  tiny.max_members = 2;
  EXPECT_EQ(are_mutation_equivalent(make_diagram(4, {{0, 1}, {1, 2}, {2, 3}}),
                                    make_diagram(4, {{1, 0}, {1, 2}, {3, 2}}), tiny),
            Equivalence::kInconclusive);
}

TEST(EnumerateTest, OrderAndWorkersDoNotChangeMembers) {
  Diagram d5 = make_diagram(5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}});
  ClassSet base = enumerate_class(d5);
  ASSERT_TRUE(base.exhausted);
  EXPECT_EQ(base.size(), 26u);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    for (int workers : {1, 3}) {
      EnumerateOptions o;
      o.shuffle_seed = seed;
      o.workers = workers;
      ClassSet c = enumerate_class(d5, o);
      EXPECT_TRUE(c.exhausted);
      EXPECT_EQ(keys(c), keys(base));
    }
  }
}

TEST(EnumerateTest, LimitsStopEarly) {
  Diagram a5 = make_diagram(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Limits l;
  l.max_members = 3;
  ClassSet c = enumerate_class(a5, l);
  EXPECT_FALSE(c.exhausted);
  EXPECT_LE(c.size(), 3u);
  Limits s;
  s.max_steps = 10;
  EXPECT_FALSE(enumerate_class(a5, s).exhausted);
}

TEST(EnumerateTest, StatsRecorded) {
  ClassSet c = enumerate_class(make_diagram(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(c.stats.frontier_sizes.front(), 1u);
  EXPECT_EQ(c.stats.mutations, 3u * c.size());
}

}  // namespace
}  // namespace mutclass
