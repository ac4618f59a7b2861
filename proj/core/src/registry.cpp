#include <algorithm>

#include "poirev/error.hpp"
#include "poirev/postulates.hpp"

namespace poirev {

namespace {

using R = std::optional<bool>;

struct Ctx {
  Evaluator& e;
  const Bindings& b;
  Trace* t;

  bool note(const char* condition, bool value) const {
    if (t != nullptr) t->push_back({condition, value});
    return value;
  }
  const WorldSet& s(std::size_t i) const { return b.s[i]; }
  World w(std::size_t i) const { return b.w[i]; }
  const Tpo& P() const { return e.prior(); }
  const Tpo& T(const WorldSet& a) const { return e.post(a); }
  WorldSet bel(const WorldSet& a) const { return e.bel(a); }
  WorldSet bel2(const WorldSet& a, const WorldSet& c) const { return e.bel2(a, c); }
  WorldSet not_(const WorldSet& a) const { return a.complement(); }
  bool in_min_prior(World x, const WorldSet& a) const { return min_worlds(P(), a).contains(x); }
};

bool sub(const WorldSet& a, const WorldSet& b) { return a.subset_of(b); }
bool meets(const WorldSet& a, const WorldSet& b) { return a.intersects(b); }

// One-shot AGM and disjunctive postulates. Variables: A, C.

R success(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return c.note("[*A] |= A", sub(c.bel(c.s(0)), c.s(0)));
}

R k7(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  if ((A & C).empty()) return std::nullopt;
  return c.note("mods([*A]) & C within mods([*A&C])", sub(c.bel(A) & C, c.bel(A & C)));
}

R k8(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  if ((A & C).empty()) return std::nullopt;
  if (!c.note("~C not in [*A]", meets(c.bel(A), C))) return true;
  return c.note("mods([*A&C]) within mods([*A]) & C", sub(c.bel(A & C), c.bel(A) & C));
}

R dr(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const WorldSet z = c.bel(A | C);
  return c.note("[*AvC] within [*A] or within [*C]", sub(c.bel(A), z) || sub(c.bel(C), z));
}

R do_(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  return c.note("[*A] & [*C] within [*AvC]", sub(c.bel(A | C), c.bel(A) | c.bel(C)));
}

R di(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const WorldSet z = c.bel(A | C);
  if (!c.note("~A not in [*AvC]", meets(z, A))) return true;
  return c.note("[*AvC] within [*A]", sub(c.bel(A), z));
}

R df(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const WorldSet z = c.bel(A | C);
  const bool i = !sub(z, c.not_(C)) || c.note("(i) [*AvC] = [*A]", z == c.bel(A));
  if (!c.note("(i)", i)) return false;
  const bool ii = !(meets(z, A) && meets(z, C)) ||
                  c.note("(ii) [*AvC] = [*A] & [*C]", z == (c.bel(A) | c.bel(C)));
  if (!c.note("(ii)", ii)) return false;
  const bool iii = !sub(z, c.not_(A)) || c.note("(iii) [*AvC] = [*C]", z == c.bel(C));
  return c.note("(iii)", iii);
}

// Equivalence. Model sets are the sentences, so the check recomputes the revision.

R eq(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return c.note("*A is a function of mods(A)", e.op().revise(e.state(), c.s(0)) == c.T(c.s(0)));
}

R eqs(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  const WorldSet fresh = min_worlds(e.op().revise(e.state(), A), B);
  return c.note("[(*A)*B] is a function of mods(A), mods(B)", fresh == c.bel2(A, B));
}

// Darwiche-Pearl, semantic. Variables: A; x, y.

R c1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x, y in A", A.contains(x) && A.contains(y))) return true;
  return c.note("x <=_*A y iff x <= y", c.T(A).leq(x, y) == c.P().leq(x, y));
}

R c2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x, y in ~A", !A.contains(x) && !A.contains(y))) return true;
  return c.note("x <=_*A y iff x <= y", c.T(A).leq(x, y) == c.P().leq(x, y));
}

R c3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("x < y", c.P().less(x, y))) return true;
  return c.note("x <_*A y", c.T(A).less(x, y));
}

R c4(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("x <= y", c.P().leq(x, y))) return true;
  return c.note("x <=_*A y", c.T(A).leq(x, y));
}

R p(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("x <= y", c.P().leq(x, y))) return true;
  return c.note("x <_*A y", c.T(A).less(x, y));
}

// Darwiche-Pearl, syntactic. Variables: A, B.

R c1s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("A in Cn(B)", sub(B, A))) return true;
  return c.note("[(*A)*B] = [*B]", c.bel2(A, B) == c.bel(B));
}

R c2s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A in Cn(B)", sub(B, c.not_(A)))) return true;
  return c.note("[(*A)*B] = [*B]", c.bel2(A, B) == c.bel(B));
}

R c3s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("A in [*B]", sub(c.bel(B), A))) return true;
  return c.note("A in [(*A)*B]", sub(c.bel2(A, B), A));
}

R c4s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*B]", meets(c.bel(B), A))) return true;
  return c.note("~A not in [(*A)*B]", meets(c.bel2(A, B), A));
}

R ps(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*B]", meets(c.bel(B), A))) return true;
  return c.note("A in [(*A)*B]", sub(c.bel2(A, B), A));
}

R rec(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("A & B consistent", meets(A, B))) return true;
  return c.note("A in [(*A)*B]", sub(c.bel2(A, B), A));
}

// Beta family. Semantic variables: A, C; x, y (and z).

R beta1p(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("y <=_*A x", c.T(A).leq(y, x))) return true;
  return c.note("y <=_*C x", c.T(C).leq(y, x));
}

R beta2p(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("y <_*A x", c.T(A).less(y, x))) return true;
  return c.note("y <_*C x", c.T(C).less(y, x));
}

R beta1ps(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if (!c.note("A not in [(*A)*B]", !sub(c.bel2(A, B), A))) return true;
  return c.note("A not in [(*C)*B]", !sub(c.bel2(C, B), A));
}

R beta2ps(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if (!c.note("~A in [(*A)*B]", sub(c.bel2(A, B), c.not_(A)))) return true;
  return c.note("~A in [(*C)*B]", sub(c.bel2(C, B), c.not_(A)));
}

R beta1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x not in min(<=, C)", !c.in_min_prior(x, C))) return true;
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("y <=_*A x", c.T(A).leq(y, x))) return true;
  return c.note("y <=_*C x", c.T(C).leq(y, x));
}

R beta2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x not in min(<=, C)", !c.in_min_prior(x, C))) return true;
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("y <_*A x", c.T(A).less(y, x))) return true;
  return c.note("y <_*C x", c.T(C).less(y, x));
}

R beta1s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if (!c.note("A not in [(*A)*B]", !sub(c.bel2(A, B), A))) return true;
  if (!c.note("B -> ~A in [*C]", sub(c.bel(C), c.not_(B) | c.not_(A)))) return true;
  return c.note("A not in [(*C)*B]", !sub(c.bel2(C, B), A));
}

R beta2s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if (!c.note("~A in [(*A)*B]", sub(c.bel2(A, B), c.not_(A)))) return true;
  if (!c.note("B -> ~A in [*C]", sub(c.bel(C), c.not_(B) | c.not_(A)))) return true;
  return c.note("~A in [(*C)*B]", sub(c.bel2(C, B), c.not_(A)));
}

// Shared body of beta3/beta4/alpha1..alpha3: x not in min(<=, C), x in A, y in ~A,
// z vs y in the prior, y vs x after *A, then z vs x after *C.
R zyx(Ctx& c, bool need_distinct, bool prior_strict, bool post_strict, bool concl_strict) {
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1), z = c.w(2);
  if (need_distinct && !c.note("z != y", z != y)) return true;
  if (!c.note("x not in min(<=, C)", !c.in_min_prior(x, C))) return true;
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (prior_strict ? !c.note("z < y", c.P().less(z, y)) : !c.note("z <= y", c.P().leq(z, y))) {
    return true;
  }
  if (post_strict ? !c.note("y <_*A x", c.T(A).less(y, x))
                  : !c.note("y <=_*A x", c.T(A).leq(y, x))) {
    return true;
  }
  return concl_strict ? c.note("z <_*C x", c.T(C).less(z, x)) : c.note("z <=_*C x", c.T(C).leq(z, x));
}

R beta3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return zyx(c, true, false, false, false);
}
R beta4(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return zyx(c, true, false, true, true);
}
R alpha1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return zyx(c, false, false, false, false);
}
R alpha2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return zyx(c, false, false, true, true);
}
R alpha3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return zyx(c, false, true, false, true);
}

// Syntactic beta3/beta4/alpha3. Variables: B1, B2, A, C.

R beta3s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &B1 = c.s(0), &B2 = c.s(1), &A = c.s(2), &C = c.s(3);
  const WorldSet x = B1 ^ B2;
  if (x.empty()) return std::nullopt;
  if (!c.note("B2 not in [*B1]", !sub(c.bel(B1), B2))) return true;
  if (!c.note("B1 -> A not in [(*A)*B2]", !sub(c.bel2(A, B2), c.not_(B1) | A))) return true;
  if (!c.note("B2 -> ~A in [*C]", sub(c.bel(C), c.not_(B2) | c.not_(A)))) return true;
  return c.note("B2 & A not in [(*C)*(B1 xor B2)]", !sub(c.bel2(C, x), B2 & A));
}

R beta4s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &B1 = c.s(0), &B2 = c.s(1), &A = c.s(2), &C = c.s(3);
  const WorldSet x = B1 ^ B2;
  if (x.empty()) return std::nullopt;
  if (!c.note("B2 not in [*B1]", !sub(c.bel(B1), B2))) return true;
  if (!c.note("B1 & ~A in [(*A)*B2]", sub(c.bel2(A, B2), B1 & c.not_(A)))) return true;
  if (!c.note("B2 -> ~A in [*C]", sub(c.bel(C), c.not_(B2) | c.not_(A)))) return true;
  return c.note("B2 -> ~A in [(*C)*(B1 xor B2)]", sub(c.bel2(C, x), c.not_(B2) | c.not_(A)));
}

R alpha3s(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &B1 = c.s(0), &B2 = c.s(1), &A = c.s(2), &C = c.s(3);
  const WorldSet x = B1 ^ B2;
  if (x.empty()) return std::nullopt;
  if (!c.note("~B2 in [*B1]", sub(c.bel(B1), c.not_(B2)))) return true;
  if (!c.note("B1 -> A not in [(*A)*B2]", !sub(c.bel2(A, B2), c.not_(B1) | A))) return true;
  if (!c.note("B2 -> ~A in [*C]", sub(c.bel(C), c.not_(B2) | c.not_(A)))) return true;
  return c.note("B2 -> ~A in [(*C)*(B1 xor B2)]", sub(c.bel2(C, x), c.not_(B2) | c.not_(A)));
}

// Gamma family. Variables: A, C; x, y.

R gamma_ac(Ctx& c, bool need_y_out, bool strict) {
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (need_y_out ? !c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))
                 : !c.note("x in A", A.contains(x))) {
    return true;
  }
  if (strict) {
    if (!c.note("y <_*A x", c.T(A).less(y, x))) return true;
    return c.note("y <_*AvC x", c.T(A | C).less(y, x));
  }
  if (!c.note("y <=_*A x", c.T(A).leq(y, x))) return true;
  return c.note("y <=_*AvC x", c.T(A | C).leq(y, x));
}

R gamma1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_ac(c, true, false);
}
R gamma2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_ac(c, true, true);
}
R gamma1p(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_ac(c, false, false);
}
R gamma2p(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_ac(c, false, true);
}

R gamma_c(Ctx& c, bool strict) {
  const WorldSet &A = c.s(0), &C = c.s(1);
  const WorldSet AC = A | C;
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x not in min(<=, C)", !c.in_min_prior(x, C))) return true;
  if (!c.note("x in AvC, y in ~(AvC)", AC.contains(x) && !AC.contains(y))) return true;
  if (strict) {
    if (!c.note("y <_*AvC x", c.T(AC).less(y, x))) return true;
    return c.note("y <_*C x", c.T(C).less(y, x));
  }
  if (!c.note("y <=_*AvC x", c.T(AC).leq(y, x))) return true;
  return c.note("y <=_*C x", c.T(C).leq(y, x));
}

R gamma3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_c(c, false);
}
R gamma4(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return gamma_c(c, true);
}

R gamma5(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x, y in ~A", !A.contains(x) && !A.contains(y))) return true;
  if (!c.note("y <=_*AvC x", c.T(A | C).leq(y, x))) return true;
  return c.note("y <=_*C x", c.T(C).leq(y, x));
}

R gamma6(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("y in ~A", !A.contains(y))) return true;
  if (!c.note("y <_*AvC x", c.T(A | C).less(y, x))) return true;
  return c.note("y <_*C x", c.T(C).less(y, x));
}

R pplus(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  if (!c.note("x <=_*AvC y", c.T(A | C).leq(x, y))) return true;
  return c.note("x <_*A y", c.T(A).less(x, y));
}

R sep(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet& A = c.s(0);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("x in A, y in ~A", A.contains(x) && !A.contains(y))) return true;
  return c.note("x <_*A y or y <_*A x", !c.T(A).equiv(x, y));
}

R seps(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  const WorldSet z = c.bel2(A, B);
  return c.note("~A in [(*A)*B] or A in [(*A)*B]", sub(z, c.not_(A)) || sub(z, A));
}

R nonflush(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  if (!e.state().is_poi()) return std::nullopt;
  return c.note("no x+ ~ y-", non_flush(e.state().poi()));
}

// Omega. Variables: A, B.

R omega1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*AvB]", meets(c.bel(A | B), A))) return true;
  if (!c.note("A not in [(*A)*B]", !sub(c.bel2(A, B), A))) return true;
  return c.note("B not in [(*B)*A]", !sub(c.bel2(B, A), B));
}

R omega2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*AvB]", meets(c.bel(A | B), A))) return true;
  if (!c.note("~A in [(*A)*B]", sub(c.bel2(A, B), c.not_(A)))) return true;
  return c.note("~B in [(*B)*A]", sub(c.bel2(B, A), c.not_(B)));
}

R omega3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~B in [*AvB]", sub(c.bel(A | B), c.not_(B)))) return true;
  if (!c.note("A not in [(*A)*B]", !sub(c.bel2(A, B), A))) return true;
  return c.note("~B in [(*B)*A]", sub(c.bel2(B, A), c.not_(B)));
}

R iia(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  const World x = c.w(0), y = c.w(1);
  if (!c.note("A and B agree on x, y", agree(A, B, x, y))) return true;
  return c.note("x <=_A y iff x <=_B y", c.T(A).leq(x, y) == c.T(B).leq(x, y));
}

R wpu(Ctx& c, bool strict) {
  const WorldSet &A = c.s(0), &C = c.s(1);
  const World x = c.w(0), y = c.w(1), z = c.w(2);
  const Tpo& ta = c.T(A);
  const Tpo& tc = c.T(C);
  const Tpo& tac = c.T(A | C);
  if (strict) {
    if (!c.note("y <_*A x and z <_*C x", ta.less(y, x) && tc.less(z, x))) return true;
    return c.note("y <_*AvC x or z <_*AvC x", tac.less(y, x) || tac.less(z, x));
  }
  if (!c.note("y <=_*A x and z <=_*C x", ta.leq(y, x) && tc.leq(z, x))) return true;
  return c.note("y <=_*AvC x or z <=_*AvC x", tac.leq(y, x) || tac.leq(z, x));
}

R wpuplus(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return wpu(c, false);
}
R spuplus(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  return wpu(c, true);
}

// Iterated postulates. Variables: A, B (and C).

R ik3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  return c.note("[(*A)*B] within Cn([*B] + A)", sub(c.bel(B) & A, c.bel2(A, B)));
}

R ik4(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*B]", meets(c.bel(B), A))) return true;
  return c.note("Cn([*B] + A) within [(*A)*B]", sub(c.bel2(A, B), c.bel(B) & A));
}

R ipres(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1);
  if (!c.note("~A not in [*B]", meets(c.bel(B), A))) return true;
  return c.note("[*B] within [(*A)*B]", sub(c.bel2(A, B), c.bel(B)));
}

R ik7(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if ((A & C).empty()) return std::nullopt;
  return c.note("[(*A&C)*B] within Cn([(*A)*B] + A&C)",
                sub(c.bel2(A, B) & A & C, c.bel2(A & C, B)));
}

R ik8(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  if ((A & C).empty()) return std::nullopt;
  if (!c.note("~(A&C) not in [(*A)*B]", meets(c.bel2(A, B), A & C))) return true;
  return c.note("Cn([(*A)*B] + A&C) within [(*A&C)*B]",
                sub(c.bel2(A & C, B), c.bel2(A, B) & A & C));
}

R idr(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  return c.note("[(*AvC)*B] within [(*A)*B] or within [(*C)*B]",
                sub(c.bel2(A, B), z) || sub(c.bel2(C, B), z));
}

R ido(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  return c.note("[(*A)*B] & [(*C)*B] within [(*AvC)*B]",
                sub(c.bel2(A | C, B), c.bel2(A, B) | c.bel2(C, B)));
}

R idi(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~A not in [(*AvC)*B]", meets(z, A))) return true;
  return c.note("[(*AvC)*B] within [(*A)*B]", sub(c.bel2(A, B), z));
}

R idf1(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~C in [(*AvC)*B]", sub(z, c.not_(C)))) return true;
  return c.note("[(*AvC)*B] = [(*A)*B]", z == c.bel2(A, B));
}

R idf1rtl(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~C in [(*AvC)*B]", sub(z, c.not_(C)))) return true;
  return c.note("[(*A)*B] within [(*AvC)*B]", sub(z, c.bel2(A, B)));
}

R idf1ltr(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~C in [(*AvC)*B]", sub(z, c.not_(C)))) return true;
  return c.note("[(*AvC)*B] within [(*A)*B]", sub(c.bel2(A, B), z));
}

R idf2(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~A, ~C not in [(*AvC)*B]", meets(z, A) && meets(z, C))) return true;
  return c.note("[(*AvC)*B] = [(*A)*B] & [(*C)*B]", z == (c.bel2(A, B) | c.bel2(C, B)));
}

R idf3(Evaluator& e, const Bindings& b, Trace* t) {
  Ctx c{e, b, t};
  const WorldSet &A = c.s(0), &B = c.s(1), &C = c.s(2);
  const WorldSet z = c.bel2(A | C, B);
  if (!c.note("~A in [(*AvC)*B]", sub(z, c.not_(A)))) return true;
  return c.note("[(*AvC)*B] = [(*C)*B]", z == c.bel2(C, B));
}

using V = std::vector<std::string>;

std::vector<PostulateInfo> build() {
  const V A{"A"}, AB{"A", "B"}, AC{"A", "C"}, ABC{"A", "B", "C"}, B4{"B1", "B2", "A", "C"};
  const V none{}, xy{"x", "y"}, xyz{"x", "y", "z"};
  const auto sem = Flavor::semantic;
  const auto syn = Flavor::syntactic;
  return {
      {"success", A, none, syn, "A in [*A]", success},
      {"k7", AC, none, syn, "[*A&C] within Cn([*A] + C)", k7},
      {"k8", AC, none, syn, "if ~C not in [*A] then Cn([*A] + C) within [*A&C]", k8},
      {"dr", AC, none, syn, "[*AvC] within [*A] or [*C]", dr},
      {"do", AC, none, syn, "[*A] & [*C] within [*AvC]", do_},
      {"di", AC, none, syn, "if ~A not in [*AvC] then [*AvC] within [*A]", di},
      {"df", AC, none, syn, "disjunctive factoring (i)-(iii)", df},
      {"eq", A, none, sem, "equivalent inputs give identical posteriors", eq},
      {"eqs", AB, none, syn, "equivalent inputs give identical two-step belief sets", eqs},
      {"c1", A, xy, sem, "x, y in A: x <=_*A y iff x <= y", c1},
      {"c2", A, xy, sem, "x, y in ~A: x <=_*A y iff x <= y", c2},
      {"c3", A, xy, sem, "x in A, y in ~A, x < y: x <_*A y", c3},
      {"c4", A, xy, sem, "x in A, y in ~A, x <= y: x <=_*A y", c4},
      {"p", A, xy, sem, "x in A, y in ~A, x <= y: x <_*A y", p},
      {"c1s", AB, none, syn, "A in Cn(B): [(*A)*B] = [*B]", c1s},
      {"c2s", AB, none, syn, "~A in Cn(B): [(*A)*B] = [*B]", c2s},
      {"c3s", AB, none, syn, "A in [*B]: A in [(*A)*B]", c3s},
      {"c4s", AB, none, syn, "~A not in [*B]: ~A not in [(*A)*B]", c4s},
      {"ps", AB, none, syn, "~A not in [*B]: A in [(*A)*B]", ps},
      {"rec", AB, none, syn, "A & B consistent: A in [(*A)*B]", rec},
      {"beta1p", AC, xy, sem, "x in A, y in ~A, y <=_*A x: y <=_*C x", beta1p},
      {"beta2p", AC, xy, sem, "x in A, y in ~A, y <_*A x: y <_*C x", beta2p},
      {"beta1ps", ABC, none, syn, "A not in [(*A)*B]: A not in [(*C)*B]", beta1ps},
      {"beta2ps", ABC, none, syn, "~A in [(*A)*B]: ~A in [(*C)*B]", beta2ps},
      {"beta1", AC, xy, sem, "x not in min(<=, C), x in A, y in ~A, y <=_*A x: y <=_*C x", beta1},
      {"beta2", AC, xy, sem, "x not in min(<=, C), x in A, y in ~A, y <_*A x: y <_*C x", beta2},
      {"beta1s", ABC, none, syn, "A not in [(*A)*B], B -> ~A in [*C]: A not in [(*C)*B]", beta1s},
      {"beta2s", ABC, none, syn, "~A in [(*A)*B], B -> ~A in [*C]: ~A in [(*C)*B]", beta2s},
      {"beta3", AC, xyz, sem, "z != y, x not in min(<=, C), x in A, y in ~A, z <= y, y <=_*A x: z <=_*C x", beta3},
      {"beta4", AC, xyz, sem, "z != y, x not in min(<=, C), x in A, y in ~A, z <= y, y <_*A x: z <_*C x", beta4},
      {"beta3s", B4, none, syn, "syntactic beta3 with B1 xor B2", beta3s},
      {"beta4s", B4, none, syn, "syntactic beta4 with B1 xor B2", beta4s},
      {"alpha1", AC, xyz, sem, "x not in min(<=, C), x in A, y in ~A, z <= y, y <=_*A x: z <=_*C x", alpha1},
      {"alpha2", AC, xyz, sem, "x not in min(<=, C), x in A, y in ~A, z <= y, y <_*A x: z <_*C x", alpha2},
      {"alpha3", AC, xyz, sem, "x not in min(<=, C), x in A, y in ~A, z < y, y <=_*A x: z <_*C x", alpha3},
      {"alpha3s", B4, none, syn, "syntactic alpha3 with B1 xor B2", alpha3s},
      {"gamma1", AC, xy, sem, "x in A, y in ~A, y <=_*A x: y <=_*AvC x", gamma1},
      {"gamma2", AC, xy, sem, "x in A, y in ~A, y <_*A x: y <_*AvC x", gamma2},
      {"gamma3", AC, xy, sem, "x not in min(<=, C), x in AvC, y in ~(AvC), y <=_*AvC x: y <=_*C x", gamma3},
      {"gamma4", AC, xy, sem, "x not in min(<=, C), x in AvC, y in ~(AvC), y <_*AvC x: y <_*C x", gamma4},
      {"gamma5", AC, xy, sem, "x, y in ~A, y <=_*AvC x: y <=_*C x", gamma5},
      {"gamma6", AC, xy, sem, "y in ~A, y <_*AvC x: y <_*C x", gamma6},
      {"gamma1p", AC, xy, sem, "x in A, y <=_*A x: y <=_*AvC x", gamma1p},
      {"gamma2p", AC, xy, sem, "x in A, y <_*A x: y <_*AvC x", gamma2p},
      {"omega1", AB, none, syn, "~A not in [*AvB], A not in [(*A)*B]: B not in [(*B)*A]", omega1},
      {"omega2", AB, none, syn, "~A not in [*AvB], ~A in [(*A)*B]: ~B in [(*B)*A]", omega2},
      {"omega3", AB, none, syn, "~B in [*AvB], A not in [(*A)*B]: ~B in [(*B)*A]", omega3},
      {"iia", AB, xy, sem, "A, B agree on x, y: x <=_A y iff x <=_B y", iia},
      {"sep", A, xy, sem, "x in A, y in ~A: x <_*A y or y <_*A x", sep},
      {"seps", AB, none, syn, "~A in [(*A)*B] or A in [(*A)*B]", seps},
      {"pplus", AC, xy, sem, "x in A, y in ~A, x <=_*AvC y: x <_*A y", pplus},
      {"nonflush", none, none, Flavor::structural, "no x+ ties any y-", nonflush},
      {"ik3", AB, none, syn, "[(*A)*B] within Cn([*B] + A)", ik3},
      {"ik4", AB, none, syn, "~A not in [*B]: Cn([*B] + A) within [(*A)*B]", ik4},
      {"ipres", AB, none, syn, "~A not in [*B]: [*B] within [(*A)*B]", ipres},
      {"ik7", ABC, none, syn, "[(*A&C)*B] within Cn([(*A)*B] + A&C)", ik7},
      {"ik8", ABC, none, syn, "~(A&C) not in [(*A)*B]: Cn([(*A)*B] + A&C) within [(*A&C)*B]", ik8},
      {"idr", ABC, none, syn, "[(*AvC)*B] within [(*A)*B] or [(*C)*B]", idr},
      {"ido", ABC, none, syn, "[(*A)*B] & [(*C)*B] within [(*AvC)*B]", ido},
      {"idi", ABC, none, syn, "~A not in [(*AvC)*B]: [(*AvC)*B] within [(*A)*B]", idi},
      {"idf1", ABC, none, syn, "~C in [(*AvC)*B]: [(*AvC)*B] = [(*A)*B]", idf1},
      {"idf2", ABC, none, syn, "~A, ~C not in [(*AvC)*B]: [(*AvC)*B] = [(*A)*B] & [(*C)*B]", idf2},
      {"idf3", ABC, none, syn, "~A in [(*AvC)*B]: [(*AvC)*B] = [(*C)*B]", idf3},
      {"idf1rtl", ABC, none, syn, "~C in [(*AvC)*B]: [(*A)*B] within [(*AvC)*B]", idf1rtl},
      {"idf1ltr", ABC, none, syn, "~C in [(*AvC)*B]: [(*AvC)*B] within [(*A)*B]", idf1ltr},
      {"wpuplus", AC, xyz, sem, "y <=_*A x, z <=_*C x: y <=_*AvC x or z <=_*AvC x", wpuplus},
      {"spuplus", AC, xyz, sem, "y <_*A x, z <_*C x: y <_*AvC x or z <_*AvC x", spuplus},
  };
}

}  // namespace

const std::vector<PostulateInfo>& registry() {
  static const std::vector<PostulateInfo> r = build();
  return r;
}

const PostulateInfo& postulate(std::string_view id) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const PostulateInfo& p) { return p.id == id; });
  if (it == r.end()) throw UnknownPostulate(std::string(id));
  return *it;
}

}  // namespace poirev
