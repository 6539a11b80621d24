#include "mutclass/family.h"

#include <array>
#include <utility>

namespace mutclass {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 19> kKindNames = {{
    {FamilyKind::kA, "A"},
    {FamilyKind::kB, "B"},
    {FamilyKind::kD, "D"},
    {FamilyKind::kBCommaB, "B_comma_B"},
    {FamilyKind::kBSquareWedgeB, "B_square_wedge_B"},
    {FamilyKind::kBDiagWedgeB, "B_diag_wedge_B"},
    {FamilyKind::kBDiagWedgeSquare, "B_diag_wedge_square"},
    {FamilyKind::kBCycleWedgeB, "B_cycle_wedge_B"},
    {FamilyKind::kBCycleWedgeRevB, "B_cycle_wedge_revB"},
    {FamilyKind::kCCommaBB, "C_B_comma_B"},
    {FamilyKind::kCWedgeBB, "C_B_wedge_B"},
    {FamilyKind::kDComma, "D_comma"},
    {FamilyKind::kDVee, "D_vee"},
    {FamilyKind::kDCycleWedgeSquare, "D_cycle_wedge_square"},
    {FamilyKind::kDCycleWedgeDiag, "D_cycle_wedge_diag"},
    {FamilyKind::kDCycleWedgeRevDiag, "D_cycle_wedge_revdiag"},
    {FamilyKind::kDSquareWedgeSquare, "D_square_wedge_square"},
    {FamilyKind::kDDiagWedgeDiag, "D_diag_wedge_diag"},
    {FamilyKind::kDBoxTimes, "D_boxtimes"},
}};

std::string cycle_name(int n) { return "(◯," + std::to_string(n) + ")"; }

}  // namespace

FamilyId family_a() { return {FamilyKind::kA, {}, {}, 0}; }
FamilyId family_b() { return {FamilyKind::kB, {}, {}, 0}; }
FamilyId family_d(StarShape s) { return {FamilyKind::kD, s, {}, 0}; }
FamilyId family_b_comma(StarShape s) { return {FamilyKind::kBCommaB, s, {}, 0}; }
FamilyId family_wedge(FamilyKind kind, int n) { return {kind, {}, {}, n}; }

FamilyId family_pair(FamilyKind kind, StarShape a, StarShape b) {
  if (b < a) std::swap(a, b);
  return {kind, a, b, 0};
}

bool is_comma(FamilyKind kind) {
  return kind == FamilyKind::kBCommaB || kind == FamilyKind::kCCommaBB ||
         kind == FamilyKind::kDComma;
}

bool has_cycle_param(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::kBCycleWedgeB:
    case FamilyKind::kBCycleWedgeRevB:
    case FamilyKind::kDCycleWedgeSquare:
    case FamilyKind::kDCycleWedgeDiag:
    case FamilyKind::kDCycleWedgeRevDiag:
      return true;
    default:
      return f.first.kind == Star::kCycle || f.second.kind == Star::kCycle;
  }
}

std::string star_name(const StarShape& s) {
  switch (s.kind) {
    case Star::kCycle:
      return cycle_name(s.n);
    case Star::kSquare:
      return "□";
    case Star::kDiag:
      return "⬔";
    case Star::kPerp:
      return "⊥";
  }
  return "?";
}

std::string family_name(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::kA:
      return "A";
    case FamilyKind::kB:
      return "B";
    case FamilyKind::kD:
      return "D_" + star_name(f.first);
    case FamilyKind::kBCommaB:
      return "B_" + star_name(f.first) + ",B";
    case FamilyKind::kBSquareWedgeB:
      return "B_□∧B";
    case FamilyKind::kBDiagWedgeB:
      return "B_⬔∧B";
    case FamilyKind::kBDiagWedgeSquare:
      return "B_⬔∧□";
    case FamilyKind::kBCycleWedgeB:
      return "B_" + cycle_name(f.n) + "∧B";
    case FamilyKind::kBCycleWedgeRevB:
      return "B_" + cycle_name(f.n) + "∧↔B";
    case FamilyKind::kCCommaBB:
      return "C_B,B";
    case FamilyKind::kCWedgeBB:
      return "C_B∧B";
    case FamilyKind::kDComma:
      return "D_" + star_name(f.first) + "," + star_name(f.second);
    case FamilyKind::kDVee:
      return "D_" + star_name(f.first) + "∨" + star_name(f.second);
    case FamilyKind::kDCycleWedgeSquare:
      return "D_" + cycle_name(f.n) + "∧□";
    case FamilyKind::kDCycleWedgeDiag:
      return "D_" + cycle_name(f.n) + "∧⬔";
    case FamilyKind::kDCycleWedgeRevDiag:
      return "D_" + cycle_name(f.n) + "∧↔⬔";
    case FamilyKind::kDSquareWedgeSquare:
      return "D_□∧□";
    case FamilyKind::kDDiagWedgeDiag:
      return "D_⬔∧⬔";
    case FamilyKind::kDBoxTimes:
      return "D_⊠";
  }
  return "?";
}

std::string_view kind_name(FamilyKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<FamilyKind> parse_kind_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view type_code(TypeKind kind) {
  switch (kind) {
    case TypeKind::kA:
      return "A";
    case TypeKind::kB:
      return "B";
    case TypeKind::kD:
      return "D";
    case TypeKind::kB1:
      return "B1";
    case TypeKind::kC1:
      return "C1";
    case TypeKind::kD1:
      return "D1";
    case TypeKind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

std::optional<TypeKind> parse_type_code(std::string_view code) {
  for (TypeKind k : {TypeKind::kA, TypeKind::kB, TypeKind::kD, TypeKind::kB1, TypeKind::kC1,
                     TypeKind::kD1}) {
    if (type_code(k) == code) return k;
  }
  return std::nullopt;
}

std::string type_name(const MutationType& t) {
  std::string r = "(" + std::to_string(t.rank) + ")";
  switch (t.kind) {
    case TypeKind::kA:
      return "A" + r;
    case TypeKind::kB:
      return "B" + r;
    case TypeKind::kD:
      return "D" + r;
    case TypeKind::kB1:
      return "B¹" + r;
    case TypeKind::kC1:
      return "C¹" + r;
    case TypeKind::kD1:
      return "D¹" + r;
    case TypeKind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

TypeKind family_type(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kA:
      return TypeKind::kA;
    case FamilyKind::kB:
      return TypeKind::kB;
    case FamilyKind::kD:
      return TypeKind::kD;
    case FamilyKind::kBCommaB:
    case FamilyKind::kBSquareWedgeB:
    case FamilyKind::kBDiagWedgeB:
    case FamilyKind::kBDiagWedgeSquare:
    case FamilyKind::kBCycleWedgeB:
    case FamilyKind::kBCycleWedgeRevB:
      return TypeKind::kB1;
    case FamilyKind::kCCommaBB:
    case FamilyKind::kCWedgeBB:
      return TypeKind::kC1;
    default:
      return TypeKind::kD1;
  }
}

bool is_affine(TypeKind kind) {
  return kind == TypeKind::kB1 || kind == TypeKind::kC1 || kind == TypeKind::kD1;
}

int rank_for(TypeKind kind, int vertices) { return is_affine(kind) ? vertices - 1 : vertices; }

int vertices_for(TypeKind kind, int rank) { return is_affine(kind) ? rank + 1 : rank; }

int min_rank(TypeKind kind) {
  switch (kind) {
    case TypeKind::kA:
      return 1;
    case TypeKind::kB:
    case TypeKind::kC1:
      return 2;
    case TypeKind::kB1:
      return 3;
    case TypeKind::kD:
    case TypeKind::kD1:
      return 4;
    case TypeKind::kUnknown:
      break;
  }
  return 0;
}

}  // namespace mutclass
