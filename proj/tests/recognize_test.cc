#include "mutclass/recognize.h"

#include <gtest/gtest.h>

#include <deque>

#include "matrix_oracle.h"
#include "mutclass/verify.h"

namespace mutclass {
namespace {

using testing::make_diagram;

bool has_role(const FamilyMatch& m, int v, const std::string& role) {
  auto parts = role_parts(m.roles[v]);
  return std::find(parts.begin(), parts.end(), role) != parts.end();
}

// Multi-source BFS on the underlying graph.
int distance(const Diagram& d, const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> dist(d.size(), -1);
  std::deque<int> q;
  for (int v : from) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = 0; u < d.size(); ++u) {
      if (d.adjacent(u, v) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  int best = -1;
  for (int v : to) {
    if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
  }
  return best;
}

int expected_width(const FamilyMatch& m, int length) {
  switch (m.family.kind) {
    case FamilyKind::kBCommaB:
      return length - 1;
    case FamilyKind::kCCommaBB:
      return length - 2;
    default:
      return m.family.first.kind == Star::kCycle && m.family.second.kind == Star::kCycle
                 ? length
                 : length - 1;
  }
}

TEST(EmbedTest, TriangleIntoNabla) {
  HostGraph h = build_nabla(1);
  auto image = embed_full_subgraph(make_diagram(3, {{0, 1}, {1, 2}, {2, 0}}), h);
  ASSERT_TRUE(image);
  std::vector<int> sorted = *image;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2}));
  EXPECT_NE(std::find(image->begin(), image->end(), *h.vertex("x")), image->end());
}

TEST(EmbedTest, HostAHasNoSquareOrClaw) {
  HostGraph a = build_host(family_a(), 4);
  EXPECT_FALSE(embed_full_subgraph(make_diagram(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), a));
  EXPECT_FALSE(embed_full_subgraph(make_diagram(4, {{0, 1}, {0, 2}, {0, 3}}), a));
  EXPECT_TRUE(embed_full_subgraph(make_diagram(4, {{0, 1}, {1, 2}, {2, 3}}), a));
}

TEST(EmbedTest, WeightsMustMatch) {
  HostGraph b = build_host(family_b(), 2);
  EXPECT_TRUE(embed_full_subgraph(make_diagram(2, {{0, 1, 2}}), b));
  EXPECT_FALSE(embed_full_subgraph(make_diagram(2, {{0, 1, 4}}), b));
}

TEST(RecognizeTest, PathIsA) {
  auto m = recognize(make_diagram(3, {{0, 1}, {1, 2}}), family_a());
  ASSERT_TRUE(m);
  EXPECT_EQ(m->family, family_a());
}

TEST(RecognizeTest, InwardStarIsPerpWithCenterX1) {
  Diagram d = make_diagram(4, {{1, 0}, {2, 0}, {3, 0}});
  auto m = recognize(d, family_d({Star::kPerp, 0}));
  ASSERT_TRUE(m);
  EXPECT_TRUE(has_role(*m, 0, "x1"));
}

TEST(RecognizeTest, ChainWithDoubleEdgeIsB) {
  auto m = recognize(make_diagram(3, {{0, 1, 2}, {1, 2}}), family_b());
  ASSERT_TRUE(m);
  EXPECT_TRUE(has_role(*m, 0, "x") || has_role(*m, 1, "x"));
}

TEST(RecognizeTest, OrientedSquareIsSquareCore) {
  Diagram d = make_diagram(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto m = recognize(d, family_d({Star::kSquare, 0}));
  ASSERT_TRUE(m);
  EXPECT_FALSE(recognize(d, family_d({Star::kPerp, 0})));
}

TEST(RecognizeTest, CycleNeedsFiveVertices) {
  Diagram tri = make_diagram(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(recognize(tri, family_d({Star::kCycle, 3})));
  Diagram tri_tail = make_diagram(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 1}, {0, 4}, {4, 2}});
  EXPECT_TRUE(recognize(tri_tail, family_d({Star::kCycle, 3})));
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify(make_diagram(3, {{0, 1}, {1, 2}})).type, (MutationType{TypeKind::kA, 3}));
  Classification c = classify(make_diagram(3, {{0, 1, 2}, {2, 1, 2}}));
  EXPECT_EQ(c.type, (MutationType{TypeKind::kC1, 2}));
  Diagram bad_square = make_diagram(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  EXPECT_EQ(classify(bad_square).type.kind, TypeKind::kUnknown);
  EXPECT_FALSE(classify(bad_square).match);
}

TEST(WidthTest, CCommaOnThreeVertices) {
  Classification c = classify(make_diagram(3, {{0, 1, 2}, {2, 1, 2}}));
  ASSERT_TRUE(c.match);
  ASSERT_EQ(c.match->family.kind, FamilyKind::kCCommaBB);
  EXPECT_EQ(c.match->width, 0);
}

TEST(WidthTest, CycleCommaOfWidthTwo) {
  // a1..a4 = 0..3, x2 = 4, x3 = 5, x' = 14.
  Diagram d = make_diagram(15, {{0, 1}, {1, 2}, {3, 0}, {2, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1},
                                 {4, 6}, {6, 7}, {6, 8}, {8, 4}, {8, 9}, {9, 14, 2}, {14, 10, 2},
                                 {10, 9}, {13, 5}, {13, 11}, {11, 12}, {12, 13}});
  ASSERT_TRUE(validate(d).empty());
  Classification c = classify(d);
  ASSERT_TRUE(c.match);
  EXPECT_EQ(c.type, (MutationType{TypeKind::kB1, 14}));
  EXPECT_EQ(c.match->family, family_b_comma({Star::kCycle, 4}));
  EXPECT_EQ(c.match->width, 2);
}

TEST(WidthTest, CCommaOfWidthOne) {
  // x' = 0, x = 5.
  Diagram d = make_diagram(6, {{0, 1, 2}, {1, 2}, {3, 2}, {2, 5, 2}, {2, 4}, {4, 1}, {5, 3, 2}});
  ASSERT_TRUE(validate(d).empty());
  Classification c = classify(d);
  ASSERT_TRUE(c.match);
  EXPECT_EQ(c.match->family.kind, FamilyKind::kCCommaBB);
  EXPECT_EQ(c.match->width, 1);
}

TEST(WidthTest, CCommaOfWidthZero) {
  // x = 7, x' = 8.
  Diagram d = make_diagram(9, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 7, 2}, {4, 8, 2}, {4, 6},
                                {5, 4}, {2, 0}, {6, 5}, {7, 1, 2}, {8, 3, 2}});
  ASSERT_TRUE(validate(d).empty());
  Classification c = classify(d);
  ASSERT_TRUE(c.match);
  EXPECT_EQ(c.match->family.kind, FamilyKind::kCCommaBB);
  EXPECT_EQ(c.match->width, 0);
}

TEST(WidthTest, RecomputedFromScratch) {
  std::size_t checked = 0;
  for (TypeKind t : {TypeKind::kB1, TypeKind::kC1, TypeKind::kD1}) {
    for (int rank : {4, 5, 6}) {
      ClassSet cls = enumerate_class(dynkin_seed(t, rank));
      for (const auto& [key, d] : cls.members) {
        Classification c = classify(d);
        ASSERT_TRUE(c.match);
        if (!is_comma(c.match->family.kind)) continue;
        const FamilyMatch& m = *c.match;
        ASSERT_TRUE(m.width);
        int length = distance(d, m.ends[0], m.ends[1]);
        EXPECT_EQ(*m.width, expected_width(m, length)) << edge_list(d);
        EXPECT_EQ(width(d, m), *m.width);
        ASSERT_EQ(static_cast<int>(m.witness.size()), length + 1);
        for (std::size_t i = 1; i < m.witness.size(); ++i) {
          EXPECT_TRUE(d.adjacent(m.witness[i - 1], m.witness[i]));
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(MatchTest, EmbeddingIsFullAndCoversCore) {
  std::size_t checked = 0;
  for (TypeKind t : {TypeKind::kD, TypeKind::kB1, TypeKind::kD1}) {
    ClassSet cls = enumerate_class(dynkin_seed(t, 5));
    for (const auto& [key, d] : cls.members) {
      Classification c = classify(d);
      ASSERT_TRUE(c.match);
      const FamilyMatch& m = *c.match;
      if (is_comma(m.family.kind) || m.split) continue;
      int core = static_cast<int>(cached_host(m.family, 0)->core.size());
      auto host = cached_host(m.family, m.family.kind == FamilyKind::kA ? d.size() - 1 : d.size() - core);
      ASSERT_EQ(static_cast<int>(m.embedding.size()), d.size());
      for (int u = 0; u < d.size(); ++u) {
        for (int v = u + 1; v < d.size(); ++v) {
          EXPECT_EQ(d.weight(u, v), host->weight(m.embedding[u], m.embedding[v])) << edge_list(d);
        }
      }
      for (int c : host->core) {
        EXPECT_NE(std::find(m.embedding.begin(), m.embedding.end(), c), m.embedding.end());
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(MatchTest, PrimeRoles) {
  EXPECT_EQ(prime("x1"), "x'1");
  EXPECT_EQ(prime("a'1"), "a''1");
  EXPECT_EQ(prime("a1=x1"), "a'1=x'1");
  EXPECT_EQ(role_parts("a1=x'1"), (std::vector<std::string>{"a1", "x'1"}));
}

TEST(ClassifyTest, MutationInvariant) {
  std::mt19937_64 rng(5);
  for (TypeKind t : {TypeKind::kB, TypeKind::kD, TypeKind::kC1}) {
    ClassSet cls = enumerate_class(dynkin_seed(t, 5));
    for (const auto& [key, d] : cls.members) {
      MutationType type = classify(d).type;
      int k = static_cast<int>(rng() % d.size());
      EXPECT_EQ(classify(mutate(d, k)).type, type);
    }
  }
}

}  // namespace
}  // namespace mutclass
