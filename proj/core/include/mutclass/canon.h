#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutclass/diagram.h"

namespace mutclass {

inline constexpr int kDefaultCanonicalBound = 20;

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Byte encoding of a diagram under its canonical vertex order: the vertex
// count followed by the signed upper-triangle entries, zigzag varints.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  // order[p] is the vertex of the input placed at canonical position p.
  std::vector<int> order;
};

CanonicalForm canonical_form(const Diagram& d, int max_vertices = kDefaultCanonicalBound);
CanonicalKey canonical_key(const Diagram& d, int max_vertices = kDefaultCanonicalBound);

// The input relabeled into canonical order, with fresh ids "0".."n-1".
Diagram canonical_diagram(const Diagram& d, const CanonicalForm& form);

CanonicalKey encode_key(const Diagram& d);

}  // namespace mutclass
