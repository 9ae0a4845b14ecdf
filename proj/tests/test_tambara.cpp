#include "doctest.h"

#include <functional>
#include <vector>

#include "bvengine/engine.hpp"

using namespace bveng;

namespace {

Budget big_budget() { return Budget{1000000, 0}; }

// tiny standalone union-find for oracle partitions, deliberately separate
// from the engine's own quotient code
struct OracleUF {
  std::vector<int> p;
  explicit OracleUF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

TEST_CASE("optic category over the terminal base is the point") {
  FinCategory C = builtin_I1();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  CHECK(oc->O.n_obj() == 1);
  CHECK(oc->O.n_mor() == 1);
  CHECK(oc->O.idm[0] == 0);
}

TEST_CASE("optic homs over I2 match an independent sliding oracle") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  const FinCategory& O = oc->O;
  CHECK(O.n_obj() == 1);
  CHECK(O.n_mor() == 2);

  // oracle: ambient (f,g) with index f*2+g, slide (f+1,g) ~ (f,g+1)
  OracleUF uf(4);
  for (int f = 0; f < 2; ++f)
    for (int g = 0; g < 2; ++g) uf.unite(((f + 1) % 2) * 2 + g, f * 2 + ((g + 1) % 2));
  const OpticCat::Block& bl = oc->block(0, 0);
  REQUIRE(bl.amb.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK((bl.q.cls[i] == bl.q.cls[j]) == (uf.find(i) == uf.find(j)));

  // the two classes compose and tensor like Z2, the identity being class 0
  CHECK(O.idm[0] == 0);
  CHECK(O.cmp[0][0] == 0);
  CHECK(O.cmp[0][1] == 1);
  CHECK(O.cmp[1][0] == 1);
  CHECK(O.cmp[1][1] == 0);
  CHECK(O.ten_mm[1][1] == 0);
  CHECK(O.sym_m[0][0] == 0);
}

TEST_CASE("optic homs over I3 follow the equal-difference rule") {
  FinCategory C = builtin_I3();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  const FinCategory& O = oc->O;
  CHECK(O.n_obj() == 4);
  int total = 0;
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int bb = 0; bb < 2; ++bb)
        for (int b2 = 0; b2 < 2; ++b2) {
          int want = ((a ^ bb) == (a2 ^ b2)) ? 1 : 0;
          CHECK((int)O.hom(oc->pobj(a, a2), oc->pobj(bb, b2)).size() == want);
          total += want;
        }
  CHECK(O.n_mor() == total);
}

TEST_CASE("pure, strength, zeta and plug agree with hand values on I2") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  auto oc = build_optic(C, b);

  CHECK(oc->pure(0, 0) == 0);
  CHECK(oc->pure(1, 0) == 1);
  CHECK(oc->pure(0, 1) == 1);
  CHECK(oc->strength(0, 0) == 0);  // strictly the identity over I2
  CHECK(oc->zeta(1, 0) == 1);

  // plugging φ into a class gives f+φ+g, independent of the representative
  CHECK(oc->plug(0, 0) == 0);
  CHECK(oc->plug(0, 1) == 1);
  CHECK(oc->plug(1, 0) == 1);
  CHECK(oc->plug(1, 1) == 0);
}

TEST_CASE("plug rejects a filler with the wrong endpoints") {
  FinCategory C = builtin_I3();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  int n = oc->O.hom(oc->pobj(0, 1), oc->pobj(0, 1))[0];
  bool threw = false;
  try {
    oc->plug(n, C.id(0));  // the hole wants C(0,1), which is empty in I3
  } catch (const EngineError& e) {
    threw = true;
    CHECK(e.kind == ErrKind::TypeMismatch);
  }
  CHECK(threw);
}

TEST_CASE("context module over I2 is the regular optic action") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  SetFunctor M = comb_module(*oc, 0, 0);
  CHECK(M.card == std::vector<int>{2});
  CHECK(M.act[0] == std::vector<int>{0, 1});
  CHECK(M.act[1] == std::vector<int>{1, 0});

  // and it is isomorphic to the representable optic module
  SetFunctor y = representable(oc->O, 0);
  IsoSearch s = iso_search(M, y, b);
  CHECK(s.found);
}

TEST_CASE("sequential tensor of context modules passes both exhaustive checks") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  OpticSeqBase sb = optic_seq_base(*oc);
  SetFunctor M = comb_module(*oc, 0, 0);

  SeqTensor MM = seq_tensor(sb, M, M, b);
  CHECK(MM.obj.card[0] == 2);
  // oracle: middle whiskers glue (p+1,q) ~ (p,q+1)
  for (size_t i = 0; i < MM.amb[0].size(); ++i)
    for (size_t j = 0; j < MM.amb[0].size(); ++j) {
      const auto& r1 = MM.amb[0][i];
      const auto& r2 = MM.amb[0][j];
      bool same = (r1.p + r1.q) % 2 == (r2.p + r2.q) % 2;
      CHECK((MM.q[0].cls[i] == MM.q[0].cls[j]) == same);
    }
  CHECK_NOTHROW(check_seq_action_reps(*oc, M, M, MM));
  CHECK_NOTHROW(check_strength_lift(*oc, M, M, MM));
}

TEST_CASE("context modules over I3 sequence along matching differences") {
  FinCategory C = builtin_I3();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  OpticSeqBase sb = optic_seq_base(*oc);

  SetFunctor M = comb_module(*oc, 0, 1);  // M(x,x') = [x' = x⊕1]
  SetFunctor N = comb_module(*oc, 1, 0);  // N(c,x') = [x' = c⊕1]
  for (int x = 0; x < 2; ++x)
    for (int x2 = 0; x2 < 2; ++x2) {
      CHECK(M.card[oc->pobj(x, x2)] == ((x2 == (x ^ 1)) ? 1 : 0));
    }

  SeqTensor MN = seq_tensor(sb, M, N, b);
  for (int x = 0; x < 2; ++x)
    for (int x2 = 0; x2 < 2; ++x2)
      CHECK(MN.obj.card[oc->pobj(x, x2)] == ((x == x2) ? 1 : 0));

  CHECK_NOTHROW(check_seq_action_reps(*oc, M, N, MN));
  CHECK_NOTHROW(check_strength_lift(*oc, M, N, MN));
}

TEST_CASE("day tensor over the optic base works off the same machinery") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  auto oc = build_optic(C, b);
  SetFunctor M = comb_module(*oc, 0, 0);
  DayTensor MM = day_tensor(oc->O, M, M, b);
  CHECK(MM.obj.card[0] == 2);
  CHECK_NOTHROW(validate_functor(MM.obj));
  // the day unit over optics is the representable at the unit pair
  SetFunctor bot = representable(oc->O, oc->O.unit);
  DayTensor BM = day_tensor(oc->O, bot, M, b);
  SetNat lu = day_lunit(BM, M);
  CHECK(compose_nat(lu, day_lunit_inv(BM, M)) == identity_nat(M));
}

TEST_CASE("budget aborts optic construction early") {
  FinCategory C = builtin_I2();
  Budget tiny{2, 0};
  bool threw = false;
  try {
    build_optic(C, tiny);
  } catch (const EngineError& e) {
    threw = true;
    CHECK(e.kind == ErrKind::BudgetExceeded);
  }
  CHECK(threw);
}

TEST_CASE("engine interns both units as one object and keeps its books") {
  auto E = make_engine(builtin_I2(), 1000000);
  // the ⊗ unit and the ⊲ unit are the same interned object, and also the
  // default pairing target
  CHECK(E->bot == E->dualizing);
  CHECK(E->add(representable(E->oc->O, E->oc->O.unit), "again") == E->bot);
  // ⊥(x,x') ≅ C(x,x'): cardinalities and the two translations round-trip
  const FinCategory& C = E->base;
  for (int t = 0; t < E->oc->O.n_obj(); ++t) {
    auto [x, x2] = E->oc->unpobj(t);
    CHECK(E->F(E->bot).card[t] == (int)C.hom(x, x2).size());
    for (int j = 0; j < E->F(E->bot).card[t]; ++j) {
      int h = E->bot_mor(t, j);
      CHECK(E->bot_elt(x, x2, h) == j);
    }
    for (int h : C.hom(x, x2)) CHECK(E->bot_mor(t, E->bot_elt(x, x2, h)) == h);
  }
  // units absorb on both sides of both tensors
  int m = E->add(comb_module(*E->oc, 0, 0), "M");
  CHECK_NOTHROW(check_engine_units(*E, m));
  CHECK_NOTHROW(check_engine_units(*E, E->bot));
  CHECK_NOTHROW(check_engine_monoid(*E));
}

TEST_CASE("engine duoidal interchange is coherent over I2 and I3") {
  auto E2 = make_engine(builtin_I2(), 4000000);
  int m = E2->add(comb_module(*E2->oc, 0, 0), "M");
  CHECK_NOTHROW(check_duoidal_units(*E2, m, m));
  CHECK_NOTHROW(check_duoidal_units(*E2, E2->bot, m));
  CHECK_NOTHROW(check_delta_sigma(*E2, m, m, E2->bot, m));
  CHECK_NOTHROW(E2->invert(E2->delta(E2->bot, E2->bot, E2->bot, E2->bot)));

  auto E3 = make_engine(builtin_I3(), 4000000);
  int n = E3->add(comb_module(*E3->oc, 0, 1), "N");
  CHECK_NOTHROW(check_duoidal_units(*E3, n, n));
  CHECK_NOTHROW(check_delta_sigma(*E3, n, E3->bot, n, n));
  CHECK_NOTHROW(check_engine_monoid(*E3));
}

TEST_CASE("engine currying is a bijection with evaluation as counit") {
  auto E = make_engine(builtin_I2(), 4000000);
  int m = E->add(comb_module(*E->oc, 0, 0), "M");
  int tmm = E->ten(m, m);
  auto fs = E->homset(tmm, m);
  for (const auto& f : fs) {
    EMor fm{tmm, m, f};
    EMor g = E->curry(fm, m, m, m);
    CHECK(E->uncurry(g, m, m, m) == fm);
  }
  auto gs = E->homset(m, E->hom(m, m));
  CHECK(fs.size() == gs.size());
  for (const auto& g : gs) {
    EMor gm{m, E->hom(m, m), g};
    CHECK(E->curry(E->uncurry(gm, m, m, m), m, m, m) == gm);
  }
}

TEST_CASE("set engine is cartesian with the and-monoid pairing target") {
  auto E = make_set_engine(1000000);
  CHECK(E->F(E->bot).card[0] == 1);
  CHECK(E->F(E->dualizing).card[0] == 2);
  int a = add_finite_set(*E, 2, "a");
  int b3 = add_finite_set(*E, 3, "b");
  CHECK(E->F(E->ten(a, b3)).card[0] == 6);
  CHECK(E->F(E->seq(a, b3)).card[0] == 6);
  CHECK(E->F(E->hom(a, b3)).card[0] == 9);
  // fold table is AND with 1 as true
  const SeqTensor& S = E->seq_of(E->dualizing, E->dualizing);
  for (int cl = 0; cl < S.obj.card[0]; ++cl) {
    const SeqTensor::Rep& r = S.rep(0, cl);
    CHECK(E->seq_fold.t.comp[0][cl] == (r.p & r.q));
  }
  CHECK(E->point_true.t.comp[0][0] == 1);
  CHECK_NOTHROW(check_engine_units(*E, a));
  CHECK_NOTHROW(check_engine_monoid(*E));
  CHECK_NOTHROW(check_duoidal_units(*E, a, b3));
  CHECK_NOTHROW(check_delta_sigma(*E, a, b3, a, b3));
  CHECK_NOTHROW(E->invert(E->delta(a, b3, b3, a)));
}
