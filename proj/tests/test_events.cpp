#include "bvengine/events.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"

using namespace bveng;

// Frozen counts in this file come from hand enumeration of the base
// categories: over I2 (one object, Z2 of morphisms) every comb set and every
// optic homset has exactly 2 elements; over I3 (two objects, xor tensor, only
// identities) an optic (a,a')->(b,b') exists iff a^b == a'^b' and is then
// unique, so homsets have 0 or 1 elements.

TEST_CASE("event spaces over the I2 optic engine") {
  auto Ep = make_engine(builtin_I2(), 50000000);
  Engine& E = *Ep;
  const FinCategory& O = E.O();

  int ca = comb_object(E, 0, 0), ya = rep_object(E, 0, 0);
  CHECK(E.F(ca).card[0] == 2);  // |C(x, x')| = |Z2|
  CHECK(E.F(ya).card[0] == 2);  // |Optic(o,o)| = 2

  ChuObj Fa = faithful_event(E, 0, 0);  // pairing validated on construction
  CHECK(Fa.a == ca);
  CHECK(Fa.a2 == ya);
  ChuObj Ev = event_space(E, 0, 0);
  CHECK(Ev.a == ca);

  SUBCASE("supermaps between faithful events are exactly the optics") {
    SupermapReport R = enumerate_supermaps(E, 0, 0, 0, 0);
    CHECK(R.morphisms.size() == 2);
    CHECK(R.optics.size() == 2);
    CHECK(R.all_from_optics);
    int ap = E.oc->pobj(0, 0);
    std::vector<int> got = R.optics, want = O.hom(ap, ap);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }

  SUBCASE("first-order events have base-category homsets") {
    ChuObj P = first_order_event(E, 0);
    CHECK(chu_homset(E, P, P).size() == 2);  // |C(0,0)| = 2
    // first-order collapse: tensor, seq and par all agree up to iso
    ChuObj T = chu_tensor(E, P, P), S = chu_seq(E, P, P), R = chu_par(E, P, P);
    CHECK(chu_iso_search(E, T, S).found);
    CHECK(chu_iso_search(E, S, R).found);
    CHECK(chu_iso_search(E, T, R).found);
  }

  SUBCASE("par of faithful events is the faithful event of the tensor") {
    LemmaParResult L = check_lemma_par(E, 0, 0, 0, 0);
    CHECK(E.F(L.rhs.a).card[0] == 2);
    CHECK(L.iso.found);
  }

  SUBCASE("representable multiplication and Yoneda decode are isos") {
    EMor m = rep_mult(E, 0, 0, 0, 0);
    EMor mi = E.invert(m);
    CHECK(E.comp(mi, m) == E.idm(m.src));
    CHECK(E.comp(m, mi) == E.idm(m.dst));
    EMor y = rep_hom_comb(E, 0, 0);
    EMor yi = E.invert(y);
    CHECK(E.comp(yi, y) == E.idm(y.src));
    CHECK(E.comp(y, yi) == E.idm(y.dst));
  }

  SUBCASE("the par of events maps into the combs of the tensor") {
    EMor ub = upper_bound(E, 0, 0, 0, 0);
    CHECK(ub.dst == comb_object(E, 0, 0));  // 0 tensor 0 = 0 in I2
    ChuObj Pa = event_space(E, 0, 0);
    ChuTensorData T = chu_tensor_data(E, chu_dual(E, Pa), chu_dual(E, Pa));
    CHECK(ub.src == T.obj.a2);  // source is the par carrier of the events
  }

  SUBCASE("join of orders glues the two sequential orders over the tensor") {
    ChuObj Fb = faithful_event(E, 0, 0);
    JoinOrders J = join_orders(E, Fa, Fb);
    // mediating map commutes with both pushout injections
    CHECK(chu_comp(E, J.dashed, J.po.in1) == J.tau_pl);
    CHECK(chu_comp(E, J.dashed, J.po.in2) == J.tau_pr);
    // and the tau embeddings really land where they should
    ChuObj S = chu_seq(E, Fa, Fb), P = chu_par(E, Fa, Fb);
    CHECK(J.tau_tl.f.src == chu_tensor(E, Fa, Fb).a);
    CHECK(J.tau_tl.f.dst == S.a);
    CHECK(J.tau_pl.f.src == S.a);
    CHECK(J.tau_pl.f.dst == P.a);
  }

  SUBCASE("morphisms out of a seq of faithfuls are counted by the seq rep") {
    ChuObj Fb = faithful_event(E, 0, 0), Fc = faithful_event(E, 0, 0);
    size_t via_chu = chu_homset(E, chu_seq(E, Fa, Fb), Fc).size();
    int yb = rep_object(E, 0, 0);
    int cp = E.oc->pobj(0, 0);
    CHECK((int)via_chu == E.F(E.seq(ya, yb)).card[cp]);
  }
}

TEST_CASE("event spaces over the I3 optic engine") {
  auto Ep = make_engine(builtin_I3(), 50000000);
  Engine& E = *Ep;

  ChuObj Fa = faithful_event(E, 0, 1);
  // combs (x,x') for the pair (0,1) exist iff x == x' xor 1
  CHECK(E.F(Fa.a).card[E.oc->pobj(0, 0)] == 0);
  CHECK(E.F(Fa.a).card[E.oc->pobj(0, 1)] == 1);
  CHECK(E.F(Fa.a).card[E.oc->pobj(1, 0)] == 1);
  CHECK(E.F(Fa.a).card[E.oc->pobj(1, 1)] == 0);

  SUBCASE("supermaps match the unique optic") {
    SupermapReport R = enumerate_supermaps(E, 0, 1, 0, 1);
    CHECK(R.morphisms.size() == 1);
    CHECK(R.all_from_optics);
  }

  SUBCASE("lemma par over I3") {
    LemmaParResult L = check_lemma_par(E, 0, 1, 1, 0);
    // rhs is the faithful event of (1,1); its combs sit on the diagonal
    CHECK(E.F(L.rhs.a).card[E.oc->pobj(0, 0)] == 1);
    CHECK(E.F(L.rhs.a).card[E.oc->pobj(0, 1)] == 0);
    CHECK(E.F(L.rhs.a).card[E.oc->pobj(1, 1)] == 1);
    CHECK(L.iso.found);
  }

  SUBCASE("first-order events have base-category homsets") {
    ChuObj P = first_order_event(E, 1);
    CHECK(chu_homset(E, P, P).size() == 1);  // |C(1,1)| = 1
  }

  SUBCASE("representable multiplication is an iso over I3") {
    EMor m = rep_mult(E, 0, 1, 1, 0);
    REQUIRE_NOTHROW(E.invert(m));
  }
}

TEST_CASE("event constructions reject engines without a unit pairing") {
  auto Ep = make_set_engine(1000000);
  Engine& E = *Ep;
  bool threw = false;
  try {
    faithful_event(E, 0, 0);
  } catch (const EngineError& e) {
    threw = true;
    CHECK(e.kind == ErrKind::ConfigError);
  }
  CHECK(threw);
}
