#include "mutclass/enumerate.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <utility>

namespace mutclass {
namespace {

struct Successor {
  CanonicalKey key;
  Diagram diagram;
};

std::vector<Successor> expand(const Diagram& d, std::atomic<bool>& overflow) {
  std::vector<Successor> out;
  out.reserve(d.size());
  for (int k = 0; k < d.size(); ++k) {
    Diagram m;
    try {
      m = mutate(d, k);
    } catch (const MutationDomainError&) {
      overflow = true;
      return {};
    }
    CanonicalForm f = canonical_form(m);
    out.push_back({std::move(f.key), canonical_diagram(m, f)});
  }
  return out;
}

void expand_all(const std::vector<const Diagram*>& items,
                std::vector<std::vector<Successor>>& results, int workers,
                std::atomic<bool>& overflow) {
  results.assign(items.size(), {});
  if (workers <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = expand(*items[i], overflow);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = expand(*items[i], overflow);
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(workers, static_cast<int>(items.size()));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

}  // namespace

ClassSet enumerate_class(const Diagram& seed, const EnumerateOptions& options) {
  ClassSet out;
  out.seed = seed;
  const Limits& limits = options.limits;
  int workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  CanonicalForm f = canonical_form(seed);
  std::vector<CanonicalKey> frontier = {f.key};
  out.members.emplace(std::move(f.key), canonical_diagram(seed, f));
  const std::size_t n = std::max(1, seed.size());

  std::vector<std::vector<Successor>> results;
  for (std::uint64_t level = 0; !frontier.empty(); ++level) {
    out.stats.frontier_sizes.push_back(frontier.size());
    if (options.shuffle_seed != 0) {
      std::mt19937_64 rng(options.shuffle_seed + level);
      std::shuffle(frontier.begin(), frontier.end(), rng);
    }
    std::size_t budget = (limits.max_steps - std::min(limits.max_steps, out.stats.mutations)) / n;
    bool truncated = budget < frontier.size();
    std::size_t take = std::min(budget, frontier.size());

    std::vector<const Diagram*> items;
    items.reserve(take);
    for (std::size_t i = 0; i < take; ++i) items.push_back(&out.members.at(frontier[i]));
    std::atomic<bool> overflow{false};
    expand_all(items, results, workers, overflow);
    if (overflow) {
      out.overflow = true;
      return out;
    }
    out.stats.mutations += take * seed.size();

    std::vector<CanonicalKey> next;
    for (auto& batch : results) {
      for (Successor& s : batch) {
        if (out.members.count(s.key)) continue;
        if (out.members.size() >= limits.max_members) {
          truncated = true;
          break;
        }
        next.push_back(s.key);
        out.members.emplace(std::move(s.key), std::move(s.diagram));
      }
      if (truncated && out.members.size() >= limits.max_members) break;
    }
    if (truncated) return out;
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  out.exhausted = true;
  return out;
}

ClassSet enumerate_class(const Diagram& seed, const Limits& limits) {
  EnumerateOptions options;
  options.limits = limits;
  return enumerate_class(seed, options);
}

Equivalence are_mutation_equivalent(const Diagram& a, const Diagram& b, const Limits& limits) {
  if (a.size() != b.size()) return Equivalence::kNotEquivalent;
  ClassSet cls = enumerate_class(a, limits);
  if (cls.contains(canonical_key(b))) return Equivalence::kEquivalent;
  return cls.exhausted ? Equivalence::kNotEquivalent : Equivalence::kInconclusive;
}

}  // namespace mutclass
