#include "doctest.h"

#include <vector>

#include "bvengine/prof.hpp"

using namespace bveng;

namespace {

Budget big_budget() { return Budget{1000000, 0}; }

// card-1 functor on I2 (the terminal Z2-set)
SetFunctor trivial1(const FinCategory& C) {
  SetFunctor T;
  T.base = &C;
  T.card = {1};
  T.act = {{0}, {0}};
  return T;
}

// card-2 functor on I2 with both morphisms acting as identity
SetFunctor trivial2(const FinCategory& C) {
  SetFunctor T;
  T.base = &C;
  T.card = {2};
  T.act = {{0, 1}, {0, 1}};
  return T;
}

SetNat comp3(const SetNat& h, const SetNat& g, const SetNat& f) {
  return compose_nat(h, compose_nat(g, f));
}

bool is_bijection(const SetNat& t, const SetFunctor& F, const SetFunctor& G) {
  for (size_t o = 0; o < t.comp.size(); ++o) {
    if (F.card[o] != G.card[o]) return false;
    std::vector<bool> hit(G.card[o], false);
    for (int e : t.comp[o]) {
      if (hit[e]) return false;
      hit[e] = true;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("day tensor over I2 matches hand-computed orbit partitions") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor R = representable(C, 0);

  // regular ⊗ regular: the two whisker relations glue (m,p,q) along
  // (m+1,p,q) ~ (m,p+1,q) ~ (m,p,q+1), so classes are m+p+q mod 2.
  DayTensor RR = day_tensor(C, R, R, b);
  CHECK(RR.obj.card[0] == 2);
  CHECK_NOTHROW(validate_functor(RR.obj));
  for (size_t a = 0; a < RR.amb[0].size(); ++a)
    for (size_t a2 = 0; a2 < RR.amb[0].size(); ++a2) {
      const auto& r1 = RR.amb[0][a];
      const auto& r2 = RR.amb[0][a2];
      bool same = (r1.m + r1.p + r1.q) % 2 == (r2.m + r2.p + r2.q) % 2;
      CHECK((RR.q[0].cls[a] == RR.q[0].cls[a2]) == same);
    }
  // and the quotient action is again the regular one
  CHECK(RR.obj.act[1][0] != RR.obj.act[1][1]);

  // terminal ⊗ terminal collapses to a point
  SetFunctor T1 = trivial1(C);
  CHECK(day_tensor(C, T1, T1, b).obj.card[0] == 1);

  // trivial2 ⊗ trivial2 keeps all four pairs apart (only m collapses)
  SetFunctor T2 = trivial2(C);
  DayTensor TT = day_tensor(C, T2, T2, b);
  CHECK(TT.obj.card[0] == 4);
  CHECK(TT.obj.act[1] == std::vector<int>{0, 1, 2, 3});

  // mixed: regular ⊗ trivial2 collapses the regular side
  DayTensor RT = day_tensor(C, R, T2, b);
  CHECK(RT.obj.card[0] == 2);
  CHECK(RT.obj.act[1] == std::vector<int>{0, 1});
}

TEST_CASE("day unitors are mutually inverse natural isomorphisms") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor J = representable(C, C.unit);
  SetFunctor T2 = trivial2(C);

  DayTensor JT = day_tensor(C, J, T2, b);
  SetNat lu = day_lunit(JT, T2);
  SetNat lui = day_lunit_inv(JT, T2);
  CHECK_NOTHROW(validate_nat(JT.obj, T2, lu));
  CHECK_NOTHROW(validate_nat(T2, JT.obj, lui));
  CHECK(compose_nat(lu, lui) == identity_nat(T2));
  CHECK(compose_nat(lui, lu) == identity_nat(JT.obj));

  DayTensor TJ = day_tensor(C, T2, J, b);
  SetNat ru = day_runit(TJ, T2);
  SetNat rui = day_runit_inv(TJ, T2);
  CHECK_NOTHROW(validate_nat(TJ.obj, T2, ru));
  CHECK(compose_nat(ru, rui) == identity_nat(T2));
  CHECK(compose_nat(rui, ru) == identity_nat(TJ.obj));
}

TEST_CASE("day symmetry squares to the identity") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor R = representable(C, 0);
  SetFunctor T2 = trivial2(C);

  DayTensor RT = day_tensor(C, R, T2, b);
  DayTensor TR = day_tensor(C, T2, R, b);
  SetNat s = day_sym(RT, TR);
  SetNat s2 = day_sym(TR, RT);
  CHECK_NOTHROW(validate_nat(RT.obj, TR.obj, s));
  CHECK_NOTHROW(validate_nat(TR.obj, RT.obj, s2));
  CHECK(compose_nat(s2, s) == identity_nat(RT.obj));
  CHECK(compose_nat(s, s2) == identity_nat(TR.obj));
}

TEST_CASE("day associator is a natural bijection and satisfies the pentagon") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor R = representable(C, 0);
  SetNat idR = identity_nat(R);

  DayTensor RRd = day_tensor(C, R, R, b);
  SetFunctor A = RRd.obj;  // R⊗R
  DayTensor RR_R = day_tensor(C, A, R, b);
  SetFunctor B = RR_R.obj;  // (R⊗R)⊗R
  DayTensor R_RR = day_tensor(C, R, A, b);
  SetFunctor Bp = R_RR.obj;  // R⊗(R⊗R)

  SetNat al = day_assoc(RRd, RR_R, RRd, R_RR);  // B → Bp
  CHECK_NOTHROW(validate_nat(B, Bp, al));
  CHECK(is_bijection(al, B, Bp));

  // pentagon on four copies of R
  DayTensor L0 = day_tensor(C, B, R, b);    // ((RR)R)R
  DayTensor BpR = day_tensor(C, Bp, R, b);  // (R(RR))R
  DayTensor R_B = day_tensor(C, R, B, b);   // R((RR)R)
  DayTensor R_Bp = day_tensor(C, R, Bp, b); // R(R(RR))
  DayTensor AA = day_tensor(C, A, A, b);    // (RR)(RR)

  SetNat a1 = day_map(L0, BpR, al, idR);
  SetNat a2 = day_assoc(R_RR, BpR, RR_R, R_B);
  SetNat a3 = day_map(R_B, R_Bp, idR, al);
  SetNat b1 = day_assoc(RR_R, L0, RRd, AA);
  SetNat b2 = day_assoc(RRd, AA, R_RR, R_Bp);
  CHECK(comp3(a3, a2, a1) == compose_nat(b2, b1));
}

TEST_CASE("day hom carriers match equivariance counts and the adjunction") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor R = representable(C, 0);
  SetFunctor T2 = trivial2(C);

  // [R,R]: equivariant self-maps of the regular action, one per value at 0
  CHECK(day_hom(C, R, R, b).obj.card[0] == 2);
  // [T2,T2]: every function is equivariant
  CHECK(day_hom(C, T2, T2, b).obj.card[0] == 4);
  // [R,T2]: only constants; [T2,R]: none
  CHECK(day_hom(C, R, T2, b).obj.card[0] == 2);
  CHECK(day_hom(C, T2, R, b).obj.card[0] == 0);

  // |nat(F⊗G, H)| = |nat(F, [G,H])| on a non-degenerate case: 16 = 16
  DayTensor TT = day_tensor(C, T2, T2, b);
  DayHom H = day_hom(C, T2, T2, b);
  CHECK(nat_set(TT.obj, T2, b).size() == 16);
  CHECK(nat_set(T2, H.obj, b).size() == 16);

  // triangle: ev ∘ (curry(f) ⊗ id) = f, for every f : T2⊗T2 → T2
  DayTensor HT = day_tensor(C, H.obj, T2, b);
  SetNat ev = day_ev(H, HT, T2);
  CHECK_NOTHROW(validate_nat(HT.obj, T2, ev));
  for (const SetNat& f : nat_set(TT.obj, T2, b)) {
    SetNat cur = day_curry(T2, T2, T2, TT, f, H);
    CHECK_NOTHROW(validate_nat(T2, H.obj, cur));
    SetNat lifted = day_map(TT, HT, cur, identity_nat(T2));
    CHECK(compose_nat(ev, lifted) == f);
  }

  // same triangle on the regular action
  DayTensor RRd = day_tensor(C, R, R, b);
  DayHom HR = day_hom(C, R, R, b);
  DayTensor HRR = day_tensor(C, HR.obj, R, b);
  SetNat evR = day_ev(HR, HRR, R);
  for (const SetNat& f : nat_set(RRd.obj, R, b)) {
    SetNat cur = day_curry(R, R, R, RRd, f, HR);
    CHECK(compose_nat(evR, day_map(RRd, HRR, cur, identity_nat(R))) == f);
  }

  // hom functoriality composes: [id,g]∘[id,g'] = [id, g∘g']
  std::vector<SetNat> endos = nat_set(T2, T2, b);
  CHECK(endos.size() == 4);
  SetNat idT = identity_nat(T2);
  for (const SetNat& g : endos)
    for (const SetNat& g2 : endos) {
      SetNat m1 = day_hom_map(H, H, idT, g);
      SetNat m2 = day_hom_map(H, H, idT, g2);
      CHECK(compose_nat(m2, m1) == day_hom_map(H, H, idT, compose_nat(g2, g)));
    }
}

TEST_CASE("seq tensor of the hom unit over I2 matches the parity oracle") {
  FinCategory C = builtin_I2();
  auto ctx = make_prof_ctx(C);
  ProfSeqBase sb = prof_seq_base(*ctx);
  Budget b = big_budget();

  SetFunctor one = prof_hom_unit(*ctx);
  CHECK(one.card == std::vector<int>{2});
  CHECK_NOTHROW(validate_functor(one));

  SeqTensor S2 = seq_tensor(sb, one, one, b);
  CHECK(S2.obj.card[0] == 2);
  CHECK_NOTHROW(validate_functor(S2.obj));
  // oracle: (p+1,q) ~ (p,q+1), so classes are the parity of p+q
  for (size_t a = 0; a < S2.amb[0].size(); ++a)
    for (size_t a2 = 0; a2 < S2.amb[0].size(); ++a2) {
      const auto& r1 = S2.amb[0][a];
      const auto& r2 = S2.amb[0][a2];
      bool same = (r1.p + r1.q) % 2 == (r2.p + r2.q) % 2;
      CHECK((S2.q[0].cls[a] == S2.q[0].cls[a2]) == same);
    }
  // with this class numbering, 1⊲1 has literally the same tables as 1
  CHECK(S2.obj.card == one.card);
  CHECK(S2.obj.act == one.act);

  SetNat lu = seq_lunit(*ctx, S2, one);
  SetNat lui = seq_lunit_inv(*ctx, S2, one);
  SetNat ru = seq_runit(*ctx, S2, one);
  SetNat rui = seq_runit_inv(*ctx, S2, one);
  CHECK_NOTHROW(validate_nat(S2.obj, one, lu));
  CHECK(compose_nat(lu, lui) == identity_nat(one));
  CHECK(compose_nat(lui, lu) == identity_nat(S2.obj));
  CHECK(compose_nat(ru, rui) == identity_nat(one));
  CHECK(compose_nat(rui, ru) == identity_nat(S2.obj));
  // on the unit itself the two unitors agree
  CHECK(lu == ru);
}

TEST_CASE("seq tensor over I3 keeps the two strands apart") {
  FinCategory C = builtin_I3();
  auto ctx = make_prof_ctx(C);
  ProfSeqBase sb = prof_seq_base(*ctx);
  Budget b = big_budget();

  SetFunctor one = prof_hom_unit(*ctx);
  CHECK(one.card == std::vector<int>{1, 0, 0, 1});

  SeqTensor S = seq_tensor(sb, one, one, b);
  CHECK(S.obj.card == std::vector<int>{1, 0, 0, 1});

  // Day square of the unit has two classes on the diagonal (one per split
  // of z into x⊕y), and μ folds them onto the unique hom element
  DayTensor OO = day_tensor(ctx->PC, one, one, b);
  CHECK(OO.obj.card == std::vector<int>{2, 0, 0, 2});
  SetNat mu = prof_mu(*ctx, OO, one);
  CHECK_NOTHROW(validate_nat(OO.obj, one, mu));
  CHECK(mu.comp[0] == std::vector<int>{0, 0});

  // Day unit absorbs: J⊗1 ≅ 1
  SetFunctor J = prof_day_unit(*ctx);
  CHECK(J.card == std::vector<int>{1, 0, 0, 0});
  DayTensor JO = day_tensor(ctx->PC, J, one, b);
  SetNat lu = day_lunit(JO, one);
  CHECK(compose_nat(lu, day_lunit_inv(JO, one)) == identity_nat(one));
  CHECK(compose_nat(day_lunit_inv(JO, one), lu) == identity_nat(JO.obj));
}

TEST_CASE("hom unit is a day monoid and the day unit a seq comonoid") {
  FinCategory C = builtin_I2();
  auto ctx = make_prof_ctx(C);
  ProfSeqBase sb = prof_seq_base(*ctx);
  Budget b = big_budget();

  SetFunctor one = prof_hom_unit(*ctx);
  SetFunctor J = prof_day_unit(*ctx);
  CHECK(J.card == std::vector<int>{4});
  CHECK_NOTHROW(validate_functor(J));

  DayTensor OO = day_tensor(ctx->PC, one, one, b);
  SetNat mu = prof_mu(*ctx, OO, one);
  SetNat nu = prof_nu(*ctx, J, one);
  CHECK_NOTHROW(validate_nat(OO.obj, one, mu));
  CHECK_NOTHROW(validate_nat(J, one, nu));

  SetNat idO = identity_nat(one);

  // monoid associativity: μ∘(μ⊗1) = μ∘(1⊗μ)∘assoc on (1⊗1)⊗1
  DayTensor OO_O = day_tensor(ctx->PC, OO.obj, one, b);
  DayTensor O_OO = day_tensor(ctx->PC, one, OO.obj, b);
  SetNat assoc = day_assoc(OO, OO_O, OO, O_OO);
  SetNat lhs = compose_nat(mu, day_map(OO_O, OO, mu, idO));
  SetNat rhs = comp3(mu, day_map(O_OO, OO, idO, mu), assoc);
  CHECK(lhs == rhs);

  // monoid unit laws: μ∘(ν⊗1) = λ and μ∘(1⊗ν) = ρ
  DayTensor JO = day_tensor(ctx->PC, J, one, b);
  DayTensor OJ = day_tensor(ctx->PC, one, J, b);
  CHECK(compose_nat(mu, day_map(JO, OO, nu, idO)) == day_lunit(JO, one));
  CHECK(compose_nat(mu, day_map(OJ, OO, idO, nu)) == day_runit(OJ, one));

  // comonoid counit laws for Δ : J → J⊲J
  SeqTensor JJ = seq_tensor(sb, J, J, b);
  SetNat com = prof_comult(*ctx, J, JJ);
  CHECK_NOTHROW(validate_nat(J, JJ.obj, com));
  SetNat idJ = identity_nat(J);
  SeqTensor OJs = seq_tensor(sb, one, J, b);
  SeqTensor JOs = seq_tensor(sb, J, one, b);
  CHECK(comp3(seq_lunit(*ctx, OJs, J), seq_map(JJ, OJs, nu, idJ), com) == idJ);
  CHECK(comp3(seq_runit(*ctx, JOs, J), seq_map(JJ, JOs, idJ, nu), com) == idJ);

  // γ : J → 1⊲1 factors as (ν⊲ν)∘Δ
  SeqTensor S2 = seq_tensor(sb, one, one, b);
  SetNat gamma = prof_gamma(*ctx, J, S2);
  CHECK_NOTHROW(validate_nat(J, S2.obj, gamma));
  CHECK(gamma == compose_nat(seq_map(JJ, S2, nu, nu), com));
}

TEST_CASE("duoidal interchange is natural and respects symmetry") {
  FinCategory C = builtin_I2();
  auto ctx = make_prof_ctx(C);
  ProfSeqBase sb = prof_seq_base(*ctx);
  Budget b = big_budget();

  SetFunctor one = prof_hom_unit(*ctx);
  SetFunctor J = prof_day_unit(*ctx);

  SeqTensor S2 = seq_tensor(sb, one, one, b);
  DayTensor OO = day_tensor(ctx->PC, one, one, b);
  DayTensor lhs = day_tensor(ctx->PC, S2.obj, S2.obj, b);
  SeqTensor rhs = seq_tensor(sb, OO.obj, OO.obj, b);
  SetNat delta = prof_delta(*ctx, S2, S2, lhs, OO, OO, rhs);
  CHECK_NOTHROW(validate_nat(lhs.obj, rhs.obj, delta));
  CHECK(is_bijection(delta, lhs.obj, rhs.obj));

  // δ∘σ = (σ⊲σ)∘δ on (J⊲1)⊗(1⊲J)
  SeqTensor F1 = seq_tensor(sb, J, one, b);
  SeqTensor F2 = seq_tensor(sb, one, J, b);
  DayTensor lhsA = day_tensor(ctx->PC, F1.obj, F2.obj, b);
  DayTensor lhsB = day_tensor(ctx->PC, F2.obj, F1.obj, b);
  DayTensor JOd = day_tensor(ctx->PC, J, one, b);
  DayTensor OJd = day_tensor(ctx->PC, one, J, b);
  SeqTensor rhsA = seq_tensor(sb, JOd.obj, OJd.obj, b);
  SeqTensor rhsB = seq_tensor(sb, OJd.obj, JOd.obj, b);
  SetNat dA = prof_delta(*ctx, F1, F2, lhsA, JOd, OJd, rhsA);
  SetNat dB = prof_delta(*ctx, F2, F1, lhsB, OJd, JOd, rhsB);
  SetNat sDay = day_sym(lhsA, lhsB);
  SetNat t1 = day_sym(JOd, OJd);
  SetNat t2 = day_sym(OJd, JOd);
  CHECK(compose_nat(dB, sDay) == compose_nat(seq_map(rhsA, rhsB, t1, t2), dA));
}

TEST_CASE("duoidal unit compatibilities hold on the nose") {
  FinCategory C = builtin_I2();
  auto ctx = make_prof_ctx(C);
  ProfSeqBase sb = prof_seq_base(*ctx);
  Budget b = big_budget();

  SetFunctor one = prof_hom_unit(*ctx);
  SetFunctor J = prof_day_unit(*ctx);
  SetNat idO = identity_nat(one);
  SetNat idJ = identity_nat(J);

  SeqTensor S2 = seq_tensor(sb, one, one, b);
  SeqTensor JJ = seq_tensor(sb, J, J, b);
  DayTensor OO = day_tensor(ctx->PC, one, one, b);
  SetNat com = prof_comult(*ctx, J, JJ);
  SetNat mu = prof_mu(*ctx, OO, one);

  // (i) λ⊗ on 1⊲1 factors through Δ: λ = (λ⊲λ)∘δ∘(Δ⊗1)
  DayTensor J_S2 = day_tensor(ctx->PC, J, S2.obj, b);
  DayTensor JJ_S2 = day_tensor(ctx->PC, JJ.obj, S2.obj, b);
  DayTensor JOd = day_tensor(ctx->PC, J, one, b);
  SeqTensor rhs_i = seq_tensor(sb, JOd.obj, JOd.obj, b);
  SetNat step1 = day_map(J_S2, JJ_S2, com, identity_nat(S2.obj));
  SetNat step2 = prof_delta(*ctx, JJ, S2, JJ_S2, JOd, JOd, rhs_i);
  SetNat lamJO = day_lunit(JOd, one);
  SetNat step3 = seq_map(rhs_i, S2, lamJO, lamJO);
  CHECK(comp3(step3, step2, step1) == day_lunit(J_S2, S2.obj));

  // (ii) the mirrored law for ρ⊗
  DayTensor S2_J = day_tensor(ctx->PC, S2.obj, J, b);
  DayTensor S2_JJ = day_tensor(ctx->PC, S2.obj, JJ.obj, b);
  DayTensor OJd = day_tensor(ctx->PC, one, J, b);
  SeqTensor rhs_ii = seq_tensor(sb, OJd.obj, OJd.obj, b);
  SetNat s1 = day_map(S2_J, S2_JJ, identity_nat(S2.obj), com);
  SetNat s2 = prof_delta(*ctx, S2, JJ, S2_JJ, OJd, OJd, rhs_ii);
  SetNat rhoOJ = day_runit(OJd, one);
  SetNat s3 = seq_map(rhs_ii, S2, rhoOJ, rhoOJ);
  CHECK(comp3(s3, s2, s1) == day_runit(S2_J, S2.obj));

  // (iii) λ⊲⊗λ⊲ = λ⊲∘(μ⊲1)∘δ on (1⊲J)⊗(1⊲J)
  SeqTensor OJs = seq_tensor(sb, one, J, b);
  DayTensor lhs3 = day_tensor(ctx->PC, OJs.obj, OJs.obj, b);
  DayTensor JJd = day_tensor(ctx->PC, J, J, b);
  SeqTensor rhs3 = seq_tensor(sb, OO.obj, JJd.obj, b);
  SetNat d3 = prof_delta(*ctx, OJs, OJs, lhs3, OO, JJd, rhs3);
  SeqTensor O_JJd = seq_tensor(sb, one, JJd.obj, b);
  SetNat m3 = seq_map(rhs3, O_JJd, mu, identity_nat(JJd.obj));
  SetNat l3 = seq_lunit(*ctx, O_JJd, JJd.obj);
  SetNat lamSeq = seq_lunit(*ctx, OJs, J);
  CHECK(comp3(l3, m3, d3) == day_map(lhs3, JJd, lamSeq, lamSeq));

  // (iv) ρ⊲⊗ρ⊲ = ρ⊲∘(1⊲μ)∘δ on (J⊲1)⊗(J⊲1)
  SeqTensor JOs = seq_tensor(sb, J, one, b);
  DayTensor lhs4 = day_tensor(ctx->PC, JOs.obj, JOs.obj, b);
  SeqTensor rhs4 = seq_tensor(sb, JJd.obj, OO.obj, b);
  SetNat d4 = prof_delta(*ctx, JOs, JOs, lhs4, JJd, OO, rhs4);
  SeqTensor JJd_O = seq_tensor(sb, JJd.obj, one, b);
  SetNat m4 = seq_map(rhs4, JJd_O, identity_nat(JJd.obj), mu);
  SetNat r4 = seq_runit(*ctx, JJd_O, JJd.obj);
  SetNat rhoSeq = seq_runit(*ctx, JOs, J);
  CHECK(comp3(r4, m4, d4) == day_map(lhs4, JJd, rhoSeq, rhoSeq));

  (void)idO;
  (void)idJ;
}

TEST_CASE("iso search returns certificates and counts, absence included") {
  FinCategory C = builtin_I2();
  Budget b = big_budget();
  SetFunctor R = representable(C, 0);
  SetFunctor T2 = trivial2(C);
  SetFunctor T1 = trivial1(C);

  IsoSearch s1 = iso_search(R, R, b);
  CHECK(s1.found);
  CHECK(s1.n_fwd == 2);
  CHECK(compose_nat(s1.bwd, s1.fwd) == identity_nat(R));

  // same cardinality, different actions: maps one way only, no iso
  IsoSearch s2 = iso_search(R, T2, b);
  CHECK_FALSE(s2.found);
  CHECK(s2.n_fwd == 2);
  CHECK(s2.n_bwd == 0);

  IsoSearch s3 = iso_search(T1, T2, b);
  CHECK_FALSE(s3.found);
  CHECK(s3.n_fwd == 2);
  CHECK(s3.n_bwd == 1);
}

TEST_CASE("budget aborts oversized day and seq constructions") {
  FinCategory C = builtin_I2();
  SetFunctor R = representable(C, 0);
  Budget tiny{3, 0};
  bool threw = false;
  try {
    day_tensor(C, R, R, tiny);
  } catch (const EngineError& e) {
    threw = true;
    CHECK(e.kind == ErrKind::BudgetExceeded);
  }
  CHECK(threw);
}
