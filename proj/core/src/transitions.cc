#include "mutclass/transitions.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace mutclass {
namespace {

using GK = Guard::Kind;
using SK = StarSpec::Kind;
using PK = ParamSpec::Kind;
using W = WidthSpec;
using FK = FamilyKind;

// ---- table vocabulary ----

VertexSel unnamed() { return {VertexSel::Kind::kUnnamed, {}, -1}; }
VertexSel roles(std::vector<std::string> r) { return {VertexSel::Kind::kRoles, std::move(r), -1}; }
VertexSel glue() { return {VertexSel::Kind::kGlue, {}, -1}; }
VertexSel width_end(int side = -1) { return {VertexSel::Kind::kWidthEnd, {}, side}; }
VertexSel inside(int side) { return {VertexSel::Kind::kSide, {}, side}; }

Guard guard(GK kind, int value = 0, Guard::Cmp cmp = Guard::Cmp::kEq) {
  Guard g;
  g.kind = kind;
  g.value = value;
  g.cmp = cmp;
  return g;
}
Guard n_is(int v) { return guard(GK::kN, v); }
Guard n_over(int v) { return guard(GK::kN, v, Guard::Cmp::kGt); }
Guard m_is(int v) { return guard(GK::kM, v); }
Guard size_is(int v) { return guard(GK::kSize, v); }
Guard size_over(int v) { return guard(GK::kSize, v, Guard::Cmp::kGt); }
Guard deg_is(int v) { return guard(GK::kDegree, v); }
Guard in_or_out(int v) { return guard(GK::kInOrOutDegree, v); }
Guard width_zero() { return guard(GK::kWidthZero); }
Guard width_positive() { return guard(GK::kWidthPositive); }
Guard with_roles(GK kind, std::vector<std::string> r) {
  Guard g = guard(kind);
  g.roles = std::move(r);
  return g;
}
Guard present(std::string r) { return with_roles(GK::kPresent, {std::move(r)}); }
Guard absent(std::string r) { return with_roles(GK::kAbsent, {std::move(r)}); }
Guard linear(std::string a, std::string b, std::string c) {
  return with_roles(GK::kLinear, {std::move(a), std::move(b), std::move(c)});
}
Guard nonlinear(std::string a, std::string b, std::string c) {
  return with_roles(GK::kNonLinear, {std::move(a), std::move(b), std::move(c)});
}
Guard star_guard(GK kind, Star s) {
  Guard g = guard(kind);
  g.star = s;
  return g;
}
Guard own(Star s) { return star_guard(GK::kOwnStar, s); }
Guard other(Star s) { return star_guard(GK::kOtherStar, s); }

StarSpec any_star() { return {}; }
StarSpec exact(Star s, int n = 0) { return {SK::kExact, {s, n}, 0}; }
StarSpec cyc(int n) { return exact(Star::kCycle, n); }
StarSpec cyc_n(int delta) { return {SK::kCycleN, {}, delta}; }
StarSpec cyc_m(int delta) { return {SK::kCycleM, {}, delta}; }
StarSpec other_star() { return {SK::kOther, {}, 0}; }
StarSpec first_star() { return {SK::kFirst, {}, 0}; }
StarSpec second_star() { return {SK::kSecond, {}, 0}; }

constexpr Star kCyc = Star::kCycle;
constexpr Star kSq = Star::kSquare;
constexpr Star kDg = Star::kDiag;
constexpr Star kPp = Star::kPerp;

ParamSpec n_plus(int delta) { return {PK::kN, delta}; }
ParamSpec m_plus(int delta) { return {PK::kM, delta}; }
ParamSpec param(int v) { return {PK::kExact, v}; }

Target same(W w = W::kAny) {
  Target t;
  t.same = true;
  t.width = w;
  return t;
}
Target fam(FK kind, W w = W::kAny) {
  Target t;
  t.kind = kind;
  t.width = w;
  return t;
}
Target d(StarSpec s) {
  Target t = fam(FK::kD);
  t.first = s;
  return t;
}
Target bcomma(StarSpec s, W w) {
  Target t = fam(FK::kBCommaB, w);
  t.first = s;
  return t;
}
Target pair(FK kind, StarSpec a, StarSpec b, W w = W::kAny) {
  Target t = fam(kind, w);
  t.first = a;
  t.second = b;
  return t;
}
Target vee(StarSpec a, StarSpec b) { return pair(FK::kDVee, a, b); }
Target dcomma(StarSpec a, StarSpec b, W w) { return pair(FK::kDComma, a, b, w); }
Target wedge(FK kind, ParamSpec n = {}) {
  Target t = fam(kind);
  t.n = n;
  return t;
}

struct Rule {
  TransitionRule r;
  Rule(std::string id, FK source) {
    r.id = std::move(id);
    r.source = source;
  }
  Rule& stars(Star a) {
    r.first = a;
    return *this;
  }
  Rule& stars(Star a, Star b) {
    r.first = a;
    r.second = b;
    return *this;
  }
  Rule& at(VertexSel k) {
    r.k = std::move(k);
    return *this;
  }
  Rule& when(std::vector<Guard> g) {
    r.guards = std::move(g);
    return *this;
  }
  Rule& to(std::vector<Target> t) {
    r.targets = std::move(t);
    return *this;
  }
  Rule& note(std::string n) {
    r.note = std::move(n);
    return *this;
  }
};

std::vector<TransitionRule> build_table() {
  std::vector<Rule> t;
  auto add = [&t](std::string id, FK source) -> Rule& { return t.emplace_back(std::move(id), source); };

  add("a.any", FK::kA).to({same()});
  add("b.any", FK::kB).to({same()});

  // D_star
  add("d.nabla", FK::kD).at(unnamed()).to({same()});
  add("d.cycle.x", FK::kD).stars(kCyc).at(roles({"x*"})).to({d(cyc_n(1))});
  add("d.cycle.a.shrink", FK::kD).stars(kCyc).at(roles({"a*"})).when({n_over(3)}).to({d(cyc_n(-1))});
  add("d.cycle.a.square", FK::kD)
      .stars(kCyc)
      .at(roles({"a*"}))
      .when({guard(GK::kOppositeX)})
      .to({d(exact(kSq))});
  add("d.cycle.a.perp", FK::kD).stars(kCyc).at(roles({"a*"})).to({d(exact(kPp))});
  add("d.square.x.grow", FK::kD).stars(kSq).at(roles({"x1", "x2"})).when({size_over(4)}).to({d(cyc(3))});
  add("d.square.x", FK::kD).stars(kSq).at(roles({"x1", "x2"})).to({d(exact(kDg))});
  add("d.square.a", FK::kD).stars(kSq).at(roles({"a1", "a2"})).to({d(exact(kDg))});
  add("d.diag.a", FK::kD).stars(kDg).at(roles({"a1", "a2"})).to({d(exact(kSq))});
  add("d.diag.x.keep", FK::kD)
      .stars(kDg)
      .at(roles({"x1", "x2"}))
      .when({with_roles(GK::kNablaNonLinear, {"xo"})})
      .to({d(exact(kDg))});
  add("d.diag.x", FK::kD).stars(kDg).at(roles({"x1", "x2"})).to({d(exact(kPp))});
  add("d.perp.a", FK::kD).stars(kPp).at(roles({"a1", "a2"})).to({d(exact(kPp))});
  add("d.perp.x.diag", FK::kD).stars(kPp).at(roles({"x1"})).when({guard(GK::kPerpLinear)}).to({d(exact(kDg))});
  add("d.perp.x.keep", FK::kD)
      .stars(kPp)
      .at(roles({"x1"}))
      .when({deg_is(3), guard(GK::kPerpNonLinear)})
      .to({d(exact(kPp))});
  add("d.perp.x.cycle", FK::kD).stars(kPp).at(roles({"x1"})).to({d(cyc(3))});

  // B_{star,B}; the D constituent is the first one.
  add("bc.end.cycle", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kCyc)})
      .to({wedge(FK::kBCycleWedgeB, n_plus(1))});
  add("bc.end.square", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kSq)})
      .to({wedge(FK::kBCycleWedgeB, param(3))});
  add("bc.end.diag.wedge", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kDg), nonlinear("x'", "k", "xo")})
      .to({wedge(FK::kBDiagWedgeB)});
  add("bc.end.diag.keep", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kDg), linear("x'", "k", "xo"), deg_is(5)})
      .to({bcomma(exact(kDg), W::kZero)})
      .note("degree read as deg(k)");
  add("bc.end.diag.perp", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kDg)})
      .to({bcomma(exact(kPp), W::kZero)});
  add("bc.end.perp.wedge", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kPp), linear("x'", "k", "a1"), linear("x'", "k", "a2")})
      .to({wedge(FK::kBDiagWedgeB)});
  add("bc.end.perp.diag", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kPp), nonlinear("x'", "k", "a1"), nonlinear("x'", "k", "a2"), deg_is(4)})
      .to({bcomma(exact(kDg), W::kZero)})
      .note("degree read as deg(k)");
  add("bc.end.perp.keep", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kPp), nonlinear("x'", "k", "a1"), nonlinear("x'", "k", "a2"), deg_is(3)})
      .to({bcomma(exact(kPp), W::kZero)});
  add("bc.end.perp.cycle", FK::kBCommaB)
      .at(width_end(0))
      .when({width_zero(), own(kPp)})
      .to({wedge(FK::kBCycleWedgeB, param(3))});
  add("bc.wide.b", FK::kBCommaB).at(inside(1)).when({width_positive()}).to({bcomma(first_star(), W::kNear)});
  add("bc.wide", FK::kBCommaB).when({width_positive()}).to({bcomma(any_star(), W::kNear)});
  add("bc.narrow.b", FK::kBCommaB).at(inside(1)).to({bcomma(first_star(), W::kUpByOne)});
  add("bc.narrow", FK::kBCommaB).to({bcomma(any_star(), W::kUpByOne)});

  // B_{(o,n)^B} and B_{(o,n)^<->B}
  for (FK kind : {FK::kBCycleWedgeB, FK::kBCycleWedgeRevB}) {
    const bool rev = kind == FK::kBCycleWedgeRevB;
    const std::string p = rev ? "bwr." : "bw.";
    add(p + "nabla", kind).at(unnamed()).to({same()});
    add(p + "x1", kind)
        .at(roles({"x1"}))
        .to({wedge(rev ? FK::kBCycleWedgeB : FK::kBCycleWedgeRevB, n_plus(0))});
    add(p + "x", kind).at(roles({"x*"})).to({wedge(kind, n_plus(1))});
    if (rev) {
      add(p + "a12", kind).at(roles({"a1", "a2"})).to({same()});
    } else {
      add(p + "a12.shrink", kind)
          .at(roles({"a1", "a2"}))
          .when({n_over(3)})
          .to({bcomma(cyc_n(-1), W::kZero)});
      add(p + "a12.square", kind)
          .at(roles({"a1", "a2"}))
          .when({guard(GK::kOppositeX)})
          .to({bcomma(exact(kSq), W::kZero)});
      add(p + "a12.perp", kind).at(roles({"a1", "a2"})).to({bcomma(exact(kPp), W::kZero)});
    }
    add(p + "a.shrink", kind).at(roles({"a*"})).when({n_over(3)}).to({wedge(kind, n_plus(-1))});
    add(p + "a3", kind)
        .at(roles({"a3"}))
        .to({wedge(rev ? FK::kBDiagWedgeSquare : FK::kBSquareWedgeB)});
  }

  // B_{square^B}, B_{diag^B}, B_{diag^square}
  for (FK kind : {FK::kBSquareWedgeB, FK::kBDiagWedgeB, FK::kBDiagWedgeSquare}) {
    const std::string p = kind == FK::kBSquareWedgeB  ? "bsq."
                          : kind == FK::kBDiagWedgeB ? "bdg."
                                                     : "bds.";
    add(p + "nabla", kind).at(unnamed()).to({same()});
    switch (kind) {
      case FK::kBSquareWedgeB:
        add(p + "x2", kind).at(roles({"x2"})).to({wedge(FK::kBCycleWedgeB, param(3))});
        add(p + "x1", kind).at(roles({"x1"})).to({wedge(FK::kBDiagWedgeSquare)});
        add(p + "a", kind).at(roles({"a1", "a2"})).to({wedge(FK::kBDiagWedgeB)});
        break;
      case FK::kBDiagWedgeB:
        add(p + "x2.diag", kind)
            .at(roles({"x2"}))
            .when({with_roles(GK::kNablaNonLinear, {"x1"})})
            .to({bcomma(exact(kDg), W::kZero)});
        add(p + "x2.perp", kind).at(roles({"x2"})).to({bcomma(exact(kPp), W::kZero)});
        add(p + "x1", kind).at(roles({"x1"})).to({same()});
        add(p + "a", kind).at(roles({"a1", "a2"})).to({wedge(FK::kBSquareWedgeB)});
        break;
      default:
        add(p + "x2", kind).at(roles({"x2"})).to({wedge(FK::kBCycleWedgeRevB, param(3))});
        add(p + "x1", kind).at(roles({"x1"})).to({wedge(FK::kBSquareWedgeB)});
        add(p + "a", kind).at(roles({"a1", "a2"})).to({same()});
        break;
    }
  }

  // C_{B,B} and C_{B^B}
  add("cc.wide", FK::kCCommaBB).when({width_positive()}).to({fam(FK::kCCommaBB, W::kNear)});
  add("cc.glue.wedge", FK::kCCommaBB)
      .at(glue())
      .when({width_zero(), linear("x", "k", "x'")})
      .to({fam(FK::kCWedgeBB)});
  add("cc.narrow", FK::kCCommaBB).to({fam(FK::kCCommaBB, W::kUpByOne)});
  add("cw.bullet", FK::kCWedgeBB).at(roles({"•"})).to({fam(FK::kCCommaBB, W::kZero)});
  add("cw.other", FK::kCWedgeBB).to({same()});

  // D_{star,star'}
  add("dc.end.cycles", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kCyc), other(kCyc)})
      .to({vee(cyc_n(1), cyc_m(1))});
  add("dc.end.cycle", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kCyc)})
      .to({vee(cyc_n(1), other_star())});
  add("dc.end.square.cycle", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kSq), other(kCyc)})
      .to({dcomma(cyc(3), other_star(), W::kZero)});
  add("dc.end.square", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kSq)})
      .to({vee(cyc(3), other_star())});
  add("dc.end.diag.vee", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kDg), nonlinear("x'", "k", "xo")})
      .to({vee(exact(kDg), other_star())});
  add("dc.end.diag.keep", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kDg), linear("x'", "k", "xo"), deg_is(5)})
      .to({dcomma(exact(kDg), other_star(), W::kZero)});
  add("dc.end.diag.perp", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kDg)})
      .to({dcomma(exact(kPp), other_star(), W::kZero)});
  add("dc.end.perp.vee", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kPp), linear("x'", "k", "a1"), linear("x'", "k", "a2")})
      .to({vee(exact(kDg), other_star())});
  add("dc.end.perp.diag", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kPp), nonlinear("x'", "k", "a1"), nonlinear("x'", "k", "a2"), deg_is(4)})
      .to({dcomma(exact(kDg), other_star(), W::kZero)});
  add("dc.end.perp.keep", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kPp), nonlinear("x'", "k", "a1"), nonlinear("x'", "k", "a2"), deg_is(3)})
      .to({dcomma(exact(kPp), other_star(), W::kZero)});
  add("dc.end.perp.cycle.cycle", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kPp), other(kCyc)})
      .to({dcomma(cyc(3), other_star(), W::kZero)});
  add("dc.end.perp.cycle", FK::kDComma)
      .at(width_end())
      .when({width_zero(), own(kPp)})
      .to({vee(cyc(3), other_star())});
  add("dc.wide.glue", FK::kDComma)
      .at(glue())
      .when({width_positive()})
      .to({dcomma(any_star(), any_star(), W::kNear)});
  add("dc.wide", FK::kDComma).when({width_positive()}).to({dcomma(any_star(), other_star(), W::kNear)});
  add("dc.shared", FK::kDComma)
      .when({width_zero(), guard(GK::kSharedEnd)})
      .to({dcomma(any_star(), other_star(), W::kUpByOne), vee(any_star(), other_star())});
  add("dc.narrow", FK::kDComma).to({dcomma(any_star(), other_star(), W::kUpByOne)});

  // D_{star v star'} with two cycles. The first cycle carries a1..an and
  // x3..xn; the second a'4..a'm and x'3..x'm.
  add("vcc.bullet.33.square", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"•"}))
      .when({n_is(3), m_is(3), present("x3"), present("x'3")})
      .to({vee(exact(kSq), exact(kSq))});
  add("vcc.bullet.33.perp", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"•"}))
      .when({n_is(3), m_is(3)})
      .to({vee(exact(kSq), exact(kPp))});
  add("vcc.bullet.3m.square", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"•"}))
      .when({n_is(3), present("x3")})
      .to({vee(cyc_m(-1), exact(kSq))});
  add("vcc.bullet.3m.perp", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"•"}))
      .when({n_is(3)})
      .to({vee(cyc_m(-1), exact(kPp))});
  add("vcc.bullet", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"•"}))
      .to({dcomma(cyc_n(-1), cyc_m(-1), W::kZero)});
  add("vcc.a13.wedge", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"a1", "a3"}))
      .when({n_is(3)})
      .to({wedge(FK::kDCycleWedgeSquare, m_plus(1))});
  add("vcc.a13", FK::kDVee).stars(kCyc, kCyc).at(roles({"a1", "a3"})).to({vee(cyc_n(-1), cyc_m(1))});
  add("vcc.a'13.wedge", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"a'1", "a'3"}))
      .when({m_is(3)})
      .to({wedge(FK::kDCycleWedgeSquare, n_plus(1))})
      .note("mirror image of the a1/a3 step");
  add("vcc.a'13", FK::kDVee)
      .stars(kCyc, kCyc)
      .at(roles({"a'1", "a'3"}))
      .to({vee(cyc_n(1), cyc_m(-1))})
      .note("mirror image of the a1/a3 step");
  add("vcc.x", FK::kDVee).stars(kCyc, kCyc).at(roles({"x*"})).to({vee(cyc_n(1), second_star())});
  add("vcc.x'", FK::kDVee).stars(kCyc, kCyc).at(roles({"x'*"})).to({vee(first_star(), cyc_m(1))});
  add("vcc.a", FK::kDVee).stars(kCyc, kCyc).at(roles({"a*"})).to({vee(cyc_n(-1), second_star())});
  add("vcc.a'", FK::kDVee).stars(kCyc, kCyc).at(roles({"a'*"})).to({vee(first_star(), cyc_m(-1))});
  add("vcc.nabla", FK::kDVee).stars(kCyc, kCyc).at(unnamed()).to({same()});

  // Remaining D_{star v star'}, pairs stored in the order cycle, square,
  // diag, perp.
  add("v.cycle.diag", FK::kDVee)
      .stars(kCyc, kDg)
      .at(roles({"•"}))
      .to({wedge(FK::kDCycleWedgeDiag, n_plus(1))});
  add("v.cycle.square", FK::kDVee)
      .stars(kCyc, kSq)
      .at(roles({"•"}))
      .to({vee(cyc_n(1), cyc(3))});
  add("v.cycle.perp.diag", FK::kDVee)
      .stars(kCyc, kPp)
      .at(roles({"•"}))
      .when({nonlinear("a'1", "•", "a'2")})
      .to({wedge(FK::kDCycleWedgeDiag, n_plus(1))});
  add("v.cycle.perp", FK::kDVee)
      .stars(kCyc, kPp)
      .at(roles({"•"}))
      .to({vee(cyc_n(1), cyc(3))});
  add("v.diag.diag.keep", FK::kDVee)
      .stars(kDg, kDg)
      .at(roles({"•"}))
      .when({nonlinear("x2", "•", "x'2")})
      .to({same()});
  add("v.diag.diag", FK::kDVee).stars(kDg, kDg).at(roles({"•"})).to({fam(FK::kDBoxTimes)});
  add("v.square.diag", FK::kDVee)
      .stars(kSq, kDg)
      .at(roles({"•"}))
      .to({wedge(FK::kDCycleWedgeDiag, param(3))});
  add("v.square.square", FK::kDVee).stars(kSq, kSq).at(roles({"•"})).to({vee(cyc(3), cyc(3))});
  add("v.diag.perp.keep", FK::kDVee).stars(kDg, kPp).at(roles({"•"})).when({in_or_out(4)}).to({same()});
  add("v.diag.perp.boxtimes", FK::kDVee)
      .stars(kDg, kPp)
      .at(roles({"•"}))
      .when({nonlinear("a'1", "•", "a'2")})
      .to({fam(FK::kDBoxTimes)});
  add("v.diag.perp", FK::kDVee)
      .stars(kDg, kPp)
      .at(roles({"•"}))
      .to({wedge(FK::kDCycleWedgeDiag, param(3))});
  add("v.square.perp.diag", FK::kDVee)
      .stars(kSq, kPp)
      .at(roles({"•"}))
      .when({nonlinear("a'1", "•", "a'2")})
      .to({wedge(FK::kDCycleWedgeDiag, param(3))});
  add("v.square.perp", FK::kDVee).stars(kSq, kPp).at(roles({"•"})).to({vee(cyc(3), cyc(3))});
  add("v.perp.perp.keep", FK::kDVee).stars(kPp, kPp).at(roles({"•"})).when({in_or_out(4)}).to({same()});
  add("v.perp.perp.diag", FK::kDVee)
      .stars(kPp, kPp)
      .at(roles({"•"}))
      .when({in_or_out(3)})
      .to({wedge(FK::kDCycleWedgeDiag, param(3))});
  add("v.perp.perp", FK::kDVee).stars(kPp, kPp).at(roles({"•"})).to({fam(FK::kDBoxTimes)});
  add("v.nabla", FK::kDVee).at(unnamed()).to({same()});
  add("v.other", FK::kDVee)
      .to({dcomma(any_star(), other_star(), W::kZero), vee(any_star(), other_star())});

  // D_{(o,n)^square}: path a1..a_{n-1}, •2 = a1, •1 = a_{n-1}.
  {
    const FK k = FK::kDCycleWedgeSquare;
    add("wsq.nabla", k).at(unnamed()).to({same()});
    add("wsq.x", k).at(roles({"x*"})).to({wedge(k, n_plus(1))});
    add("wsq.bullet.big", k)
        .at(roles({"•1", "•2"}))
        .when({n_over(4)})
        .to({vee(cyc_n(-1), cyc(3))});
    add("wsq.bullet.3", k).at(roles({"•1", "•2"})).when({n_is(3)}).to({same()});
    add("wsq.bullet.4", k).at(roles({"•1", "•2"})).to({vee(cyc_n(-1), cyc(3))});
    add("wsq.a'1.big", k).at(roles({"a'1"})).when({n_over(4)}).to({wedge(FK::kDCycleWedgeDiag, n_plus(-1))});
    add("wsq.a'1.3", k).at(roles({"a'1"})).when({n_is(3)}).to({fam(FK::kDSquareWedgeSquare)});
    add("wsq.a'1.4", k).at(roles({"a'1"})).to({wedge(FK::kDCycleWedgeDiag, n_plus(-1))});
    add("wsq.a'2.big", k)
        .at(roles({"a'2"}))
        .when({n_over(4)})
        .to({wedge(FK::kDCycleWedgeRevDiag, n_plus(-1))});
    add("wsq.a'2.3", k).at(roles({"a'2"})).when({n_is(3)}).to({fam(FK::kDDiagWedgeDiag)});
    add("wsq.a'2.4", k).at(roles({"a'2"})).to({wedge(FK::kDCycleWedgeRevDiag, n_plus(-1))});
    add("wsq.a", k).at(roles({"a*"})).when({n_over(3)}).to({wedge(k, n_plus(-1))});
  }

  // D_{(o,n)^diag}: path a1..an, •2 = a1, •1 = an, plus •1•2.
  {
    const FK k = FK::kDCycleWedgeDiag;
    add("wdg.nabla", k).at(unnamed()).to({same()});
    add("wdg.x", k).at(roles({"x*"})).to({wedge(k, n_plus(1))});
    add("wdg.a'.bare", k).at(roles({"a'1", "a'2"})).when({size_is(5)}).to({fam(FK::kDSquareWedgeSquare)});
    add("wdg.a'", k).at(roles({"a'1", "a'2"})).to({wedge(FK::kDCycleWedgeSquare, n_plus(1))});
    add("wdg.bullet.big.diag", k)
        .at(roles({"•1", "•2"}))
        .when({n_over(3), deg_is(5)})
        .to({vee(cyc_n(-1), exact(kDg))});
    add("wdg.bullet.big", k).at(roles({"•1", "•2"})).when({n_over(3)}).to({vee(cyc_n(-1), exact(kPp))});
    add("wdg.bullet.3.full", k)
        .at(roles({"•1", "•2"}))
        .when({present("x1"), present("x2")})
        .to({vee(exact(kDg), exact(kSq))});
    add("wdg.bullet.3.bare", k)
        .at(roles({"•1", "•2"}))
        .when({absent("x1"), absent("x2")})
        .to({vee(exact(kPp), exact(kPp))});
    add("wdg.bullet.3.diag", k)
        .at(roles({"•1", "•2"}))
        .when({deg_is(5)})
        .to({vee(exact(kDg), exact(kPp))});
    add("wdg.bullet.3", k).at(roles({"•1", "•2"})).to({vee(exact(kSq), exact(kPp))});
    add("wdg.a.big", k).at(roles({"a*"})).when({n_over(3)}).to({wedge(k, n_plus(-1))});
    add("wdg.a.3", k).at(roles({"a*"})).to({fam(FK::kDSquareWedgeSquare)});
  }

  // D_{(o,n)^<->diag}
  {
    const FK k = FK::kDCycleWedgeRevDiag;
    add("wrd.nabla", k).at(unnamed()).to({same()});
    add("wrd.x", k).at(roles({"x*"})).to({wedge(k, n_plus(1))});
    add("wrd.bullet", k).at(roles({"•1", "•2"})).to({same()});
    add("wrd.a'.bare", k).at(roles({"a'1", "a'2"})).when({size_is(5)}).to({fam(FK::kDSquareWedgeSquare)});
    add("wrd.a'", k).at(roles({"a'1", "a'2"})).to({wedge(FK::kDCycleWedgeSquare, n_plus(1))});
    add("wrd.a.big", k).at(roles({"a*"})).when({n_over(3)}).to({wedge(k, n_plus(-1))});
    add("wrd.a.3", k).at(roles({"a*"})).to({fam(FK::kDDiagWedgeDiag)});
  }

  // D_{square^square}, D_{diag^diag}
  for (FK kind : {FK::kDSquareWedgeSquare, FK::kDDiagWedgeDiag}) {
    const bool sq = kind == FK::kDSquareWedgeSquare;
    const std::string p = sq ? "wss." : "wdd.";
    add(p + "nabla", kind).at(unnamed()).to({same()});
    add(p + "bullet", kind)
        .at(roles({"•"}))
        .to({wedge(sq ? FK::kDCycleWedgeDiag : FK::kDCycleWedgeRevDiag, param(3))});
    if (sq) {
      add(p + "x", kind).at(roles({"x1", "x2"})).to({fam(FK::kDBoxTimes)});
    } else {
      add(p + "x", kind).at(roles({"x1", "x2"})).to({same()});
    }
    add(p + "a.bare", kind)
        .at(roles({"a1", "a2"}))
        .when({size_is(5)})
        .to({wedge(FK::kDCycleWedgeRevDiag, param(3))});
    add(p + "a", kind).at(roles({"a1", "a2"})).to({wedge(FK::kDCycleWedgeSquare, param(3))});
  }

  // D_boxtimes
  add("bt.nabla", FK::kDBoxTimes).at(unnamed()).to({same()});
  add("bt.a", FK::kDBoxTimes).at(roles({"a*"})).to({fam(FK::kDSquareWedgeSquare)});
  add("bt.x.6", FK::kDBoxTimes).at(roles({"x1"})).when({deg_is(6)}).to({vee(exact(kDg), exact(kDg))});
  add("bt.x.5", FK::kDBoxTimes).at(roles({"x1"})).when({deg_is(5)}).to({vee(exact(kDg), exact(kPp))});
  add("bt.x", FK::kDBoxTimes).at(roles({"x1"})).to({vee(exact(kPp), exact(kPp))});

  std::vector<TransitionRule> out;
  for (auto& r : t) out.push_back(std::move(r.r));
  return out;
}

// ---- interpreter ----

bool role_matches(const std::string& role, const std::string& pattern) {
  if (!pattern.ends_with('*')) return role == pattern;
  std::string_view head(pattern.data(), pattern.size() - 1);
  if (!role.starts_with(head) || role.size() == head.size()) return false;
  return std::all_of(role.begin() + static_cast<std::ptrdiff_t>(head.size()), role.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool has_part(const std::string& roles, const std::string& pattern) {
  for (const auto& part : role_parts(roles)) {
    if (role_matches(part, pattern)) return true;
  }
  return false;
}

std::vector<int> bfs_dist(const Diagram& d, int from) {
  std::vector<int> dist(d.size(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : d.neighbors(v)) {
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return dist;
}

bool oriented_through(const Diagram& d, int a, int mid, int b) {
  return (d.arrow(a, mid) > 0 && d.arrow(mid, b) > 0) || (d.arrow(b, mid) > 0 && d.arrow(mid, a) > 0);
}

// Everything a rule may ask about vertex k of a classified diagram.
class Context {
 public:
  Context(const Diagram& d, const FamilyMatch& m, int k) : d_(d), m_(m), k_(k) {
    glued_ = m.split.has_value();
    if (glued_) {
      dist_ = bfs_dist(d, k);
      int len = static_cast<int>(m.witness.size()) - 1;
      for (int s = 0; s < 2 && end_side_ < 0; ++s) {
        if (std::find(m.ends[s].begin(), m.ends[s].end(), k) == m.ends[s].end()) continue;
        for (int e : m.ends[1 - s]) {
          if (dist_[e] == len) end_side_ = s;
        }
      }
      if (end_side_ >= 0) {
        side_ = end_side_;
      } else if (k != m.split->z) {
        const auto& s1 = m.split->sides[1];
        side_ = std::find(s1.begin(), s1.end(), k) != s1.end() ? 1 : 0;
      }
    } else if (m.family.kind == FamilyKind::kDVee && m.roles[k].find('\'') != std::string::npos) {
      side_ = 1;
    }
  }

  bool glued() const { return glued_; }
  int side() const { return side_; }
  int end_side() const { return end_side_; }
  int k() const { return k_; }
  const FamilyMatch& match() const { return m_; }

  std::optional<StarShape> star(int side) const {
    const FamilyId& f = m_.family;
    if (f.kind == FamilyKind::kDComma || f.kind == FamilyKind::kDVee) return side == 0 ? f.first : f.second;
    if (f.kind == FamilyKind::kBCommaB && side == 0) return f.first;
    return std::nullopt;
  }

  int n() const {
    if (glued_) {
      auto s = star(side_);
      return s && s->kind == Star::kCycle ? s->n : 0;
    }
    return m_.n();
  }

  int m() const {
    if (glued_) {
      auto s = star(1 - side_);
      return s && s->kind == Star::kCycle ? s->n : 0;
    }
    return m_.m();
  }

  int width() const { return m_.width.value_or(-1); }

  // Vertex named by a guard token, if present.
  std::optional<int> vertex(const std::string& token) const {
    if (token == "k") return k_;
    if (token == "x'") {
      if (!glued_) return find("x'");
      std::optional<int> best;
      for (int e : m_.ends[1 - side_]) {
        if (!best || dist_[e] < dist_[*best]) best = e;
      }
      return best;
    }
    if (token == "xo") {
      std::string mine;
      for (const auto& part : role_parts(m_.roles[k_])) {
        if (role_matches(part, local("x*"))) mine = part;
      }
      if (mine.empty()) return std::nullopt;
      char& last = mine.back();
      if (last != '1' && last != '2') return std::nullopt;
      last = last == '1' ? '2' : '1';
      return find(mine);
    }
    return find(local(token));
  }

  // Guard role names live in k's constituent.
  std::string local(const std::string& name) const {
    return glued_ && side_ == 1 ? prime(name) : name;
  }

  std::optional<int> find(const std::string& role) const {
    for (int v = 0; v < d_.size(); ++v) {
      if (glued_ && !on_side(v, side_)) continue;
      for (const auto& part : role_parts(m_.roles[v])) {
        if (part == role) return v;
      }
    }
    return std::nullopt;
  }

  bool on_side(int v, int side) const {
    if (!glued_ || side < 0) return true;
    const auto& s = m_.split->sides[side];
    return std::find(s.begin(), s.end(), v) != s.end();
  }

 private:
  const Diagram& d_;
  const FamilyMatch& m_;
  int k_;
  bool glued_ = false;
  int side_ = 0;
  int end_side_ = -1;
  std::vector<int> dist_;
};

bool compare(int lhs, Guard::Cmp cmp, int rhs) {
  switch (cmp) {
    case Guard::Cmp::kEq:
      return lhs == rhs;
    case Guard::Cmp::kGt:
      return lhs > rhs;
    case Guard::Cmp::kLt:
      return lhs < rhs;
  }
  return false;
}

bool selects(const VertexSel& sel, const Context& c) {
  const FamilyMatch& m = c.match();
  const std::string& r = m.roles[c.k()];
  switch (sel.kind) {
    case VertexSel::Kind::kAny:
      return true;
    case VertexSel::Kind::kUnnamed:
      return r.empty();
    case VertexSel::Kind::kRoles:
      return std::any_of(sel.roles.begin(), sel.roles.end(),
                         [&](const std::string& p) { return has_part(r, p); });
    case VertexSel::Kind::kGlue:
      return m.split && m.split->z == c.k();
    case VertexSel::Kind::kWidthEnd:
      return c.end_side() >= 0 && (sel.side < 0 || sel.side == c.end_side());
    case VertexSel::Kind::kSide:
      return m.split && m.split->z != c.k() && c.on_side(c.k(), sel.side);
  }
  return false;
}

// Index i of k's role a_i inside a triangle core, 0 if none.
int a_index(const Context& c) {
  for (const auto& part : role_parts(c.match().roles[c.k()])) {
    if (role_matches(part, c.local("a*"))) return std::stoi(part.substr(c.local("a").size()));
  }
  return 0;
}

bool triple(const Diagram& d, const Context& c, const std::vector<std::string>& names, bool want_linear) {
  std::array<int, 3> v{};
  for (int i = 0; i < 3; ++i) {
    auto x = c.vertex(names[i]);
    if (!x) return false;
    v[i] = *x;
  }
  if (!d.adjacent(v[0], v[1]) || !d.adjacent(v[1], v[2])) return false;
  return oriented_through(d, v[0], v[1], v[2]) == want_linear;
}

bool holds(const Guard& g, const Diagram& d, const Context& c) {
  const int k = c.k();
  switch (g.kind) {
    case GK::kWidthZero:
      return c.width() == 0;
    case GK::kWidthPositive:
      return c.width() > 0;
    case GK::kN:
      return compare(c.n(), g.cmp, g.value);
    case GK::kM:
      return compare(c.m(), g.cmp, g.value);
    case GK::kSize:
      return compare(d.size(), g.cmp, g.value);
    case GK::kDegree:
      return compare(d.degree(k), g.cmp, g.value);
    case GK::kInOrOutDegree:
      return compare(d.in_degree(k), g.cmp, g.value) || compare(d.out_degree(k), g.cmp, g.value);
    case GK::kPresent:
      return c.vertex(g.roles.at(0)).has_value();
    case GK::kAbsent:
      return !c.vertex(g.roles.at(0)).has_value();
    case GK::kOppositeX:
    case GK::kNoOppositeX: {
      int i = a_index(c);
      if (i < 1 || i > 3) return false;
      bool there = c.vertex("x" + std::to_string(i % 3 + 1)).has_value();
      return there == (g.kind == GK::kOppositeX);
    }
    case GK::kLinear:
    case GK::kNonLinear:
      return triple(d, c, g.roles, g.kind == GK::kLinear);
    case GK::kNablaLinear:
    case GK::kNablaNonLinear: {
      auto other = c.vertex(g.roles.at(0));
      if (!other || !d.adjacent(k, *other)) return false;
      for (int y : d.neighbors(k)) {
        if (!c.match().roles[y].empty() || !c.on_side(y, c.side())) continue;
        if (oriented_through(d, y, k, *other) == (g.kind == GK::kNablaLinear)) return true;
      }
      return false;
    }
    case GK::kPerpLinear:
    case GK::kPerpNonLinear: {
      auto a1 = c.vertex("a1"), a2 = c.vertex("a2");
      if (!a1 || !a2) return false;
      // Unnamed leaves next to k are interchangeable with a1 and a2.
      std::vector<int> leaves = {*a1, *a2};
      for (int u : d.neighbors(k)) {
        if (c.match().roles[u].empty() && d.degree(u) == 1) leaves.push_back(u);
      }
      const bool want = g.kind == GK::kPerpLinear;
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          for (int y : d.neighbors(k)) {
            if (y == leaves[i] || y == leaves[j]) continue;
            if (oriented_through(d, y, k, leaves[i]) == want && oriented_through(d, y, k, leaves[j]) == want) {
              return true;
            }
          }
        }
      }
      return false;
    }
    case GK::kSharedEnd: {
      const auto& m = c.match();
      if (!m.split) return false;
      const int z = m.split->z;
      return std::find(m.ends[0].begin(), m.ends[0].end(), z) != m.ends[0].end() &&
             std::find(m.ends[1].begin(), m.ends[1].end(), z) != m.ends[1].end();
    }
    case GK::kOwnStar:
    case GK::kOtherStar: {
      auto s = c.star(g.kind == GK::kOwnStar ? c.side() : 1 - c.side());
      return s && s->kind == g.star;
    }
  }
  return false;
}

bool applies(const TransitionRule& r, const Diagram& d, const Context& c) {
  const FamilyId& f = c.match().family;
  if (r.source != f.kind) return false;
  if (r.first && f.first.kind != *r.first) return false;
  if (r.second && f.second.kind != *r.second) return false;
  if (!selects(r.k, c)) return false;
  return std::all_of(r.guards.begin(), r.guards.end(), [&](const Guard& g) { return holds(g, d, c); });
}

std::optional<StarShape> resolve(const StarSpec& s, const Context& c) {
  const FamilyId& f = c.match().family;
  switch (s.kind) {
    case SK::kAny:
      return std::nullopt;
    case SK::kExact:
      return s.shape;
    case SK::kCycleN:
      return StarShape{Star::kCycle, c.n() + s.delta};
    case SK::kCycleM:
      return StarShape{Star::kCycle, c.m() + s.delta};
    case SK::kOwn:
      return c.star(c.side());
    case SK::kOther:
      return c.star(1 - c.side());
    case SK::kFirst:
      return f.first;
    case SK::kSecond:
      return f.second;
  }
  return std::nullopt;
}

bool star_ok(const StarSpec& spec, const Context& c, const StarShape& seen) {
  if (spec.kind == SK::kAny) return true;
  auto want = resolve(spec, c);
  if (!want) return false;
  if (want->kind != seen.kind) return false;
  if (want->kind != Star::kCycle) return true;
  return (spec.kind == SK::kExact && want->n == 0) || want->n == seen.n;
}

bool width_ok(WidthSpec w, int before, std::optional<int> after) {
  if (w == W::kAny) return true;
  if (!after) return false;
  switch (w) {
    case W::kAny:
      return true;
    case W::kZero:
      return *after == 0;
    case W::kNear:
      return std::abs(*after - before) <= 1;
    case W::kUpByOne:
      return *after >= before && *after <= before + 1;
  }
  return false;
}

bool is_pair(FamilyKind k) { return k == FamilyKind::kDComma || k == FamilyKind::kDVee; }

std::string star_spec_name(const StarSpec& s) {
  switch (s.kind) {
    case SK::kAny:
      return "*";
    case SK::kExact:
      return s.shape.kind == Star::kCycle && s.shape.n == 0 ? "(◯,*)" : star_name(s.shape);
    case SK::kCycleN:
      return "(◯,n" + (s.delta ? (s.delta > 0 ? "+" : "") + std::to_string(s.delta) : "") + ")";
    case SK::kCycleM:
      return "(◯,m" + (s.delta ? (s.delta > 0 ? "+" : "") + std::to_string(s.delta) : "") + ")";
    case SK::kOwn:
      return "own";
    case SK::kOther:
      return "other";
    case SK::kFirst:
      return "first";
    case SK::kSecond:
      return "second";
  }
  return "?";
}

}  // namespace

const std::vector<TransitionRule>& transition_table() {
  static const std::vector<TransitionRule> table = build_table();
  return table;
}

std::optional<RuleHit> find_rule(const Diagram& d, const FamilyMatch& match, int k) {
  Context c(d, match, k);
  for (const TransitionRule& r : transition_table()) {
    if (applies(r, d, c)) return RuleHit{&r, std::string(kind_name(match.family.kind)) + "|" + r.id};
  }
  return std::nullopt;
}

bool target_allows(const Target& t, const Diagram& d, const FamilyMatch& source, int k,
                   const FamilyMatch& observed) {
  Context c(d, source, k);
  const FamilyId& o = observed.family;
  const int before = source.width.value_or(-1);
  if (t.same) return o == source.family && width_ok(t.width, before, observed.width);
  if (o.kind != t.kind) return false;
  if (!width_ok(t.width, before, observed.width)) return false;
  if (is_pair(t.kind)) {
    return (star_ok(t.first, c, o.first) && star_ok(t.second, c, o.second)) ||
           (star_ok(t.first, c, o.second) && star_ok(t.second, c, o.first));
  }
  if (t.kind == FamilyKind::kD || t.kind == FamilyKind::kBCommaB) {
    if (!star_ok(t.first, c, o.first)) return false;
  }
  switch (t.n.kind) {
    case PK::kAny:
      return true;
    case PK::kN:
      return o.n == c.n() + t.n.delta;
    case PK::kM:
      return o.n == c.m() + t.n.delta;
    case PK::kExact:
      return o.n == t.n.delta;
  }
  return false;
}

std::string describe(const Target& t) {
  std::ostringstream out;
  if (t.same) {
    out << "same family";
  } else {
    out << kind_name(t.kind);
    if (t.kind == FamilyKind::kD || t.kind == FamilyKind::kBCommaB || is_pair(t.kind)) {
      out << "[" << star_spec_name(t.first);
      if (is_pair(t.kind)) out << "," << star_spec_name(t.second);
      out << "]";
    }
    switch (t.n.kind) {
      case PK::kAny:
        break;
      case PK::kN:
        out << " n" << (t.n.delta >= 0 ? "+" : "") << t.n.delta;
        break;
      case PK::kM:
        out << " m" << (t.n.delta >= 0 ? "+" : "") << t.n.delta;
        break;
      case PK::kExact:
        out << " n=" << t.n.delta;
        break;
    }
  }
  switch (t.width) {
    case W::kAny:
      break;
    case W::kZero:
      out << " width 0";
      break;
    case W::kNear:
      out << " width ±1";
      break;
    case W::kUpByOne:
      out << " width +0/+1";
      break;
  }
  return out.str();
}

}  // namespace mutclass
