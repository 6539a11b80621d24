// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "matrix_oracle.h"
#include "mutclass/enumerate.h"
#include "mutclass/recognize.h"
#include "mutclass/verify.h"
#include "worked_examples.h"

namespace mutclass {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Matrix;

constexpr double kMutationBudgetSeconds = 30.0;
constexpr double kForwardBudgetSeconds = 300.0;
constexpr std::size_t kMutationPairs = 10'000;
constexpr std::size_t kReversePerType = 500;
constexpr int kReverseMaxVertices = 9;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

void report(int id, std::string name, bool pass, std::string detail) {
  lines.push_back({id, std::move(name), pass, std::move(detail)});
}

struct Seed {
  TypeKind type;
  int rank;
  std::size_t expected_size;
};

// Class sizes up to isomorphism.
const std::vector<Seed>& seeds() {
  static const std::vector<Seed> table = [] {
    std::vector<Seed> out;
    auto add = [&](TypeKind t, int first, std::vector<std::size_t> sizes) {
      for (std::size_t i = 0; i < sizes.size(); ++i) out.push_back({t, first + static_cast<int>(i), sizes[i]});
    };
    add(TypeKind::kA, 2, {1, 4, 6, 19, 49, 150, 442, 1424});
    add(TypeKind::kB, 2, {1, 5, 14, 42, 132, 429, 1430});
    add(TypeKind::kD, 4, {6, 26, 80, 246, 810});
    add(TypeKind::kB1, 3, {12, 40, 140, 504, 1848});
    add(TypeKind::kC1, 2, {4, 10, 38, 126, 472, 1716});
    add(TypeKind::kD1, 4, {10, 40, 146, 504});
    return out;
  }();
  return table;
}

std::string label(TypeKind t, int rank) { return std::string(type_code(t)) + std::to_string(rank); }

Diagram from_matrix(const Matrix& b) { return testing::diagram_of(b); }

bool same_arrows(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.arrow(i, j) != b.arrow(i, j)) return false;
    }
  }
  return true;
}

void mutation_correctness(const std::map<std::string, ClassSet>& classes) {
  auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::vector<const Diagram*> pool;
  for (const auto& [name, cls] : classes) {
    for (const auto& [key, d] : cls.members) pool.push_back(&d);
  }
  std::size_t involution_bad = 0;
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < kMutationPairs; ++i) {
    const Diagram& d = *pool[rng() % pool.size()];
    int k = static_cast<int>(rng() % d.size());
    Diagram once = mutate(d, k);
    if (!validate(once).empty()) ++invalid;
    if (!same_arrows(mutate(once, k), d)) ++involution_bad;
  }

  std::size_t oracle_checked = 0;
  std::size_t oracle_bad = 0;
  while (oracle_checked < kMutationPairs) {
    Matrix b;
    if (oracle_checked % 2 == 0) {
      const Diagram& d = *pool[rng() % pool.size()];
      auto realized = testing::realize(d);
      if (!realized) continue;
      b = *realized;
    } else {
      int n = 3 + static_cast<int>(rng() % 5);
      b = testing::random_skew_symmetrizable(rng, n, 0.5, 3);
    }
    Diagram d = from_matrix(b);
    int k = static_cast<int>(rng() % d.size());
    if (!same_arrows(mutate(d, k), from_matrix(testing::matrix_mutate(b, k)))) ++oracle_bad;
    ++oracle_checked;
  }
  double t = seconds_since(start);
  bool pass = involution_bad == 0 && invalid == 0 && oracle_bad == 0 && t < kMutationBudgetSeconds;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu pairs: %zu involution, %zu invalid; %zu matrix checks: %zu mismatches; %.1fs < %.0fs",
                kMutationPairs, involution_bad, invalid, oracle_checked, oracle_bad, t,
                kMutationBudgetSeconds);
  report(1, "mutation correctness", pass, buf);
}

void forward_and_disjoint(const std::map<std::string, ClassSet>& classes, double enumerate_seconds) {
  auto start = Clock::now();
  std::size_t checked = 0;
  std::vector<std::string> mismatch;
  std::vector<std::string> overlap;
  for (const Seed& s : seeds()) {
    const ClassSet& cls = classes.at(label(s.type, s.rank));
    if (!cls.exhausted) mismatch.push_back(label(s.type, s.rank) + " not exhausted");
    for (const auto& [key, d] : cls.members) {
      ++checked;
      Classification c = classify(d);
      if (c.type != MutationType{s.type, s.rank} || !c.match) {
        mismatch.push_back(label(s.type, s.rank) + ": " + edge_list(d));
      }
      std::vector<FamilyMatch> all = match_all(d);
      if (all.size() != 1) {
        std::string names;
        for (const auto& m : all) names += " " + family_name(m.family);
        overlap.push_back(edge_list(d) + " ->" + names);
      }
    }
  }
  double t = enumerate_seconds + seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu members, %zu mismatches, %.1fs < %.0fs", checked,
                mismatch.size(), t, kForwardBudgetSeconds);
  report(2, "forward classification", mismatch.empty() && t < kForwardBudgetSeconds,
         buf + (mismatch.empty() ? "" : "; first: " + mismatch.front()));
  std::snprintf(buf, sizeof buf, "%zu members, %zu with other than one family", checked, overlap.size());
  report(4, "family disjointness", overlap.empty(),
         buf + (overlap.empty() ? "" : "; first: " + overlap.front()));
}

void reverse_direction() {
  SampleOptions o;
  o.per_type = kReversePerType;
  o.max_vertices = kReverseMaxVertices;
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first;
  for (TypeKind t : {TypeKind::kA, TypeKind::kB, TypeKind::kD, TypeKind::kB1, TypeKind::kC1,
                     TypeKind::kD1}) {
    VerificationReport r = run_reverse_check(t, o);
    total += r.diagrams;
    failures += r.failures.size();
    if (r.diagrams < kReversePerType) ++failures;
    if (!r.passed() && first.empty()) first = r.to_text(1);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu samples (>= %zu per type, <= %d vertices), %zu failures", total,
                kReversePerType, kReverseMaxVertices, failures);
  report(3, "reverse classification", failures == 0, buf + (first.empty() ? "" : "; " + first));
}

void closure(const std::map<std::string, ClassSet>& classes) {
  VerificationReport all;
  for (const Seed& s : seeds()) {
    if (!is_affine(s.type)) continue;
    const ClassSet& cls = classes.at(label(s.type, s.rank));
    std::vector<Diagram> members;
    for (const auto& [key, d] : cls.members) members.push_back(d);
    all.merge(check_closure(members, label(s.type, s.rank)));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu diagrams, %zu mutations, %zu failures, %zu rules used", all.diagrams,
                all.mutations, all.failures.size(), all.coverage.size());
  report(5, "transition closure", all.passed() && all.mutations > 0,
         buf + (all.passed() ? "" : "; " + all.to_text(1)));
}

// Postconditions rechecked here from the resulting diagram only.
std::vector<std::string> shrink_problems(int n, const ShrinkResult& r) {
  std::vector<std::string> out;
  const Diagram& d = r.after;
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = i;
  auto shape = dynkin_shape(induced(d, cycle));
  bool d_shape = shape && (*shape == MutationType{TypeKind::kD, n} ||
                           (n == 3 && *shape == MutationType{TypeKind::kA, 3}));
  if (!d_shape) out.push_back("cycle part is not D" + std::to_string(n));
  int links = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = n; v < d.size(); ++v) links += d.adjacent(u, v);
  }
  if (links != 1 || d.arrow(0, r.y) <= 0) out.push_back("not a single edge 1->y");
  std::vector<int> part = cycle;
  part.push_back(r.y);
  for (int u : part) {
    for (int v : part) {
      if (d.weight(u, v) > 1) out.push_back("weighted edge near y");
    }
  }
  if (static_cast<int>(r.sequence.size()) != n - 2) out.push_back("sequence length");
  return out;
}

void shrink() {
  std::size_t runs = 0;
  std::vector<std::string> problems;
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 9; ++n) {
    std::vector<Diagram> attachments;
    for (int a = 1; a <= 3; ++a) {
      Diagram path(a);
      for (int i = 0; i + 1 < a; ++i) path.add_edge(i, i + 1);
      attachments.push_back(path);
    }
    attachments.push_back(testing::make_diagram(3, {{0, 1}, {1, 2}, {2, 0}}));
    attachments.push_back(testing::make_diagram(2, {{0, 1, 2}}));
    for (const Diagram& att : attachments) {
      for (int y = 0; y < att.size(); ++y) {
        ShrinkResult r = shrink_cycle(n, att, y);
        ++runs;
        for (const auto& p : r.problems) problems.push_back(std::to_string(n) + ": " + p);
        for (const auto& p : shrink_problems(n, r)) problems.push_back(std::to_string(n) + ": " + p);
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "n = 3..9, %zu runs, %zu violations", runs, problems.size());
  report(6, "cycle shrinking", problems.empty(), buf + (problems.empty() ? "" : "; " + problems.front()));
}

void worked_example() {
  Diagram i = worked_example_i();
  Diagram ii = worked_example_ii();
  Diagram iii = worked_example_iii();
  bool counts = i.size() == 7 && i.edge_count() == 10 && ii.size() == 7 && ii.edge_count() == 10 &&
                iii.size() == 7 && iii.edge_count() == 12;
  bool valid = validate(i).empty() && validate(ii).empty() && validate(iii).empty();
  Equivalence ii_iii = are_mutation_equivalent(ii, iii);
  Equivalence i_ii = are_mutation_equivalent(i, ii);
  Equivalence i_iii = are_mutation_equivalent(i, iii);
  bool pass = counts && valid && ii_iii == Equivalence::kEquivalent &&
              i_ii == Equivalence::kNotEquivalent && i_iii == Equivalence::kNotEquivalent;
  auto name = [](Equivalence e) {
    return e == Equivalence::kEquivalent ? "yes" : e == Equivalence::kNotEquivalent ? "no" : "?";
  };
  char buf[200];
  std::snprintf(buf, sizeof buf, "counts 7/10 7/10 7/12 %s; ii~iii %s, i~ii %s, i~iii %s",
                counts ? "ok" : "wrong", name(ii_iii), name(i_ii), name(i_iii));
  report(7, "worked example", pass, buf);
}

// Breadth-first search on exchange matrices with brute-force isomorphism.
std::size_t naive_class_size(const Diagram& seed) {
  std::vector<Diagram> found = {seed};
  auto invariant = [](const Diagram& d) {
    std::vector<std::pair<int, Weight>> deg;
    for (int v = 0; v < d.size(); ++v) {
      Weight total = 0;
      for (int u = 0; u < d.size(); ++u) total += d.weight(u, v);
      deg.push_back({static_cast<int>(d.neighbors(v).size()), total});
    }
    std::sort(deg.begin(), deg.end());
    return std::make_pair(d.edge_count(), deg);
  };
  std::map<decltype(invariant(seed)), std::vector<std::size_t>> buckets;
  buckets[invariant(seed)].push_back(0);
  for (std::size_t next = 0; next < found.size(); ++next) {
    Matrix b = *testing::realize(found[next]);
    for (int k = 0; k < seed.size(); ++k) {
      Diagram m = from_matrix(testing::matrix_mutate(b, k));
      auto& bucket = buckets[invariant(m)];
      bool seen = std::any_of(bucket.begin(), bucket.end(),
                              [&](std::size_t j) { return testing::brute_isomorphic(m, found[j]); });
      if (seen) continue;
      bucket.push_back(found.size());
      found.push_back(m);
    }
  }
  return found.size();
}

void class_sizes(const std::map<std::string, ClassSet>& classes) {
  std::vector<std::string> wrong;
  std::size_t naive = 0;
  for (const Seed& s : seeds()) {
    const ClassSet& cls = classes.at(label(s.type, s.rank));
    std::size_t got = cls.size();
    if (got != s.expected_size) {
      wrong.push_back(label(s.type, s.rank) + " " + std::to_string(got) + " != " +
                      std::to_string(s.expected_size));
    }
    if (cls.seed.size() <= 7 && s.expected_size <= 600) {
      ++naive;
      std::size_t n = naive_class_size(dynkin_seed(s.type, s.rank));
      if (n != s.expected_size) {
        wrong.push_back(label(s.type, s.rank) + " naive " + std::to_string(n));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu seeds, %zu rechecked naively, %zu differences", seeds().size(), naive,
                wrong.size());
  report(8, "class size table", wrong.empty(), buf + (wrong.empty() ? "" : "; " + wrong.front()));
}

int run() {
  auto start = Clock::now();
  std::map<std::string, ClassSet> classes;
  for (const Seed& s : seeds()) classes.emplace(label(s.type, s.rank), enumerate_class(dynkin_seed(s.type, s.rank)));
  double enumerate_seconds = seconds_since(start);

  mutation_correctness(classes);
  forward_and_disjoint(classes, enumerate_seconds);
  reverse_direction();
  closure(classes);
  shrink();
  worked_example();
  class_sizes(classes);

  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  for (const Line& l : lines) {
    std::printf("criterion %d %-24s %s  %s\n", l.id, l.name.c_str(), l.pass ? "PASS" : "FAIL", l.detail.c_str());
  }
  std::size_t passed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
  std::printf("%zu/%zu criteria passed in %.1fs\n", passed, lines.size(), seconds_since(start));
  return passed == lines.size() ? 0 : 1;
}

}  // namespace
}  // namespace mutclass

int main() { return mutclass::run(); }
