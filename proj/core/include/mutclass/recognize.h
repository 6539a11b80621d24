#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutclass/diagram.h"
#include "mutclass/family.h"
#include "mutclass/hosts.h"

namespace mutclass {

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// image[i] is the diagram vertex placed on host.core[i].
using CorePredicate = std::function<bool(const std::vector<int>& image)>;

struct EmbedOptions {
  // Host vertices that must be covered; defaults to host.core.
  std::optional<std::vector<int>> required;
  // With nothing required, diagram vertex 0 is pinned here (host.center by
  // default). Only sound for vertex-transitive hosts.
  std::optional<int> anchor;
  // Checked once per placement of the required vertices.
  CorePredicate accept;
};

// Host vertex per diagram vertex such that the diagram's underlying weighted
// graph equals the induced sub-graph of the host on the image.
std::optional<std::vector<int>> embed_full_subgraph(const Diagram& g, const HostGraph& host,
                                                    const EmbedOptions& options = {});

struct Split {
  int z = 0;
  // Both sides contain z.
  std::array<std::vector<int>, 2> sides;
};

struct FamilyMatch {
  FamilyId family;
  // Role name per diagram vertex ("" for unnamed); second constituent of a
  // glued diagram gets primed names.
  std::vector<std::string> roles;
  // Host vertex per diagram vertex (host families only).
  std::vector<int> embedding;
  std::optional<int> width;
  std::vector<int> witness;  // diagram vertices along the width path
  std::optional<Split> split;
  // x-vertices of each constituent (glued families only).
  std::array<std::vector<int>, 2> ends;

  int n() const;  // cycle parameter, 0 if none
  int m() const;
};

struct Classification {
  MutationType type;
  std::optional<FamilyMatch> match;
};

// Candidate families worth trying for d, in classification order.
std::vector<FamilyId> candidate_families(const Diagram& d);

std::optional<FamilyMatch> recognize(const Diagram& d, const FamilyId& family);

// Every family d belongs to (at most one match per family).
std::vector<FamilyMatch> match_all(const Diagram& d);

Classification classify(const Diagram& d);

// Recomputes the width of a glued-family match from its ends.
int width(const Diagram& d, const FamilyMatch& match);

// Role names of the second constituent: x1 -> x'1, a'1 -> a''1, •2 -> •'2.
// Several roles joined by '=' are primed one by one.
std::string prime(const std::string& roles);

// Splits "a1=x'1" into its parts.
std::vector<std::string> role_parts(const std::string& roles);

}  // namespace mutclass
