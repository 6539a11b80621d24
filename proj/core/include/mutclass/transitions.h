#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mutclass/diagram.h"
#include "mutclass/family.h"
#include "mutclass/recognize.h"

namespace mutclass {

// Which vertices k a rule talks about.
struct VertexSel {
  enum class Kind {
    kAny,
    kUnnamed,   // no role at all (nabla vertices)
    kRoles,     // carries one of `roles`; "x*" matches x1, x2, ... but not x'1
    kGlue,      // articulation vertex of a glued diagram
    kWidthEnd,  // x-vertex ending a shortest width path
    kSide,      // inside constituent `side`, glue vertex excluded
  };
  Kind kind = Kind::kAny;
  std::vector<std::string> roles;
  int side = -1;  // kWidthEnd, kSide: restrict to one constituent
};

// Role names in guards are read inside the constituent holding k (primed
// automatically on the second one). Tokens: "k"; "x'" is the nearest x-vertex
// of the other constituent; "xo" the other x of k's own core.
struct Guard {
  enum class Kind {
    kWidthZero,
    kWidthPositive,
    kN,              // cycle parameter (k's constituent for glued families)
    kM,              // second cycle parameter
    kSize,           // vertex count
    kDegree,         // deg(k)
    kInOrOutDegree,  // deg+(k) or deg-(k)
    kPresent,        // some vertex carries roles[0]
    kAbsent,
    kOppositeX,      // triangle core: the x not adjacent to k is present
    kNoOppositeX,
    kLinear,         // roles[0] - roles[1] - roles[2], middle vertex second
    kNonLinear,
    kNablaLinear,     // some unnamed neighbour y of k has y - k - roles[0] linear
    kNablaNonLinear,  // ... non-linear
    kPerpLinear,      // some neighbour y of k, y not a1/a2: y-k-a1 and y-k-a2 linear
    kPerpNonLinear,   // ... both non-linear (y unnamed)
    kOwnStar,         // glued: star of k's constituent is `star`
    kOtherStar,       // glued: star of the other constituent is `star`
    kSharedEnd,       // glued: the glue vertex is an x-vertex of both constituents
  };
  Kind kind = Kind::kWidthZero;
  enum class Cmp { kEq, kGt, kLt } cmp = Cmp::kEq;
  int value = 0;
  std::vector<std::string> roles;
  Star star = Star::kCycle;
};

struct StarSpec {
  enum class Kind {
    kAny,
    kExact,   // `shape`; a cycle with n = 0 matches any length
    kCycleN,  // cycle of length n + delta
    kCycleM,  // cycle of length m + delta
    kOwn,     // star of k's constituent (glued families)
    kOther,   // star of the other constituent
    kFirst,   // the source family's first star
    kSecond,
  };
  Kind kind = Kind::kAny;
  StarShape shape;
  int delta = 0;
};

struct ParamSpec {
  enum class Kind { kAny, kN, kM, kExact } kind = Kind::kAny;
  int delta = 0;
};

enum class WidthSpec {
  kAny,
  kZero,
  kNear,    // |w' - w| <= 1
  kUpByOne  // w <= w' <= w + 1
};

struct Target {
  FamilyKind kind = FamilyKind::kA;
  bool same = false;  // exactly the source family
  StarSpec first;
  StarSpec second;
  ParamSpec n;
  WidthSpec width = WidthSpec::kAny;
};

struct TransitionRule {
  std::string id;
  FamilyKind source = FamilyKind::kA;
  // Filters on the source family's own stars (D_star, vee and glued pairs use
  // the stored order, first <= second).
  std::optional<Star> first;
  std::optional<Star> second;
  VertexSel k;
  std::vector<Guard> guards;
  std::vector<Target> targets;
  std::string note;
};

// The mutation-step tables, ordered; the first rule that applies decides.
const std::vector<TransitionRule>& transition_table();

struct RuleHit {
  const TransitionRule* rule = nullptr;
  std::string coverage;  // "family|rule id"
};

// First rule applying to vertex k of d (classified as `match`), if any.
std::optional<RuleHit> find_rule(const Diagram& d, const FamilyMatch& match, int k);

// Whether `observed` (with its width) is allowed by the rule for source match.
bool target_allows(const Target& t, const Diagram& d, const FamilyMatch& source, int k,
                   const FamilyMatch& observed);

std::string describe(const Target& t);

}  // namespace mutclass
