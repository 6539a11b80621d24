#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mutclass {

// The four shapes a D-type core can take.
enum class Star { kCycle, kSquare, kDiag, kPerp };

enum class FamilyKind {
  kA,
  kB,
  kD,                   // D_star
  kBCommaB,             // B_{star,B}
  kBSquareWedgeB,       // B_{square^B}
  kBDiagWedgeB,         // B_{diag^B}
  kBDiagWedgeSquare,    // B_{diag^square}
  kBCycleWedgeB,        // B_{(o,n)^B}
  kBCycleWedgeRevB,     // B_{(o,n)^<->B}
  kCCommaBB,            // C_{B,B}
  kCWedgeBB,            // C_{B^B}
  kDComma,              // D_{star,star'}
  kDVee,                // D_{star v star'}
  kDCycleWedgeSquare,   // D_{(o,n)^square}
  kDCycleWedgeDiag,     // D_{(o,n)^diag}
  kDCycleWedgeRevDiag,  // D_{(o,n)^<->diag}
  kDSquareWedgeSquare,  // D_{square^square}
  kDDiagWedgeDiag,      // D_{diag^diag}
  kDBoxTimes,           // D_boxtimes
};

struct StarShape {
  Star kind = Star::kPerp;
  int n = 0;  // cycle length, only for kCycle

  friend bool operator==(const StarShape&, const StarShape&) = default;
  friend auto operator<=>(const StarShape&, const StarShape&) = default;
};

struct FamilyId {
  FamilyKind kind = FamilyKind::kA;
  // First shape: D_star, B_{star,B}, and both shapes of D_{star,star'} /
  // D_{star v star'} (stored with first <= second).
  StarShape first;
  StarShape second;
  // Cycle parameter of the wedge families (B_{(o,n)^B}, D_{(o,n)^square}, ...).
  int n = 0;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

FamilyId family_a();
FamilyId family_b();
FamilyId family_d(StarShape s);
FamilyId family_b_comma(StarShape s);
FamilyId family_wedge(FamilyKind kind, int n = 0);
FamilyId family_pair(FamilyKind kind, StarShape a, StarShape b);

bool is_comma(FamilyKind kind);
bool has_cycle_param(const FamilyId& f);

std::string star_name(const StarShape& s);
std::string family_name(const FamilyId& f);
std::string_view kind_name(FamilyKind kind);
std::optional<FamilyKind> parse_kind_name(std::string_view name);

enum class TypeKind { kA, kB, kD, kB1, kC1, kD1, kUnknown };

struct MutationType {
  TypeKind kind = TypeKind::kUnknown;
  int rank = 0;

  friend bool operator==(const MutationType&, const MutationType&) = default;
};

std::string_view type_code(TypeKind kind);  // "A", "B", "D", "B1", "C1", "D1"
std::optional<TypeKind> parse_type_code(std::string_view code);
std::string type_name(const MutationType& t);  // "A(3)", "B¹(4)", "Unknown"

TypeKind family_type(FamilyKind kind);
bool is_affine(TypeKind kind);
// Rank reported for a diagram with the given vertex count.
int rank_for(TypeKind kind, int vertices);
int vertices_for(TypeKind kind, int rank);
int min_rank(TypeKind kind);

class InvalidRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mutclass
