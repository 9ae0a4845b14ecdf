#include "bvengine/chu.hpp"

#include <utility>

namespace bveng {

bool is_chu_morphism(Engine& E, const ChuObj& A, const ChuObj& B, const ChuMor& m) {
  if (m.f.src != A.a || m.f.dst != B.a || m.f2.src != B.a2 || m.f2.dst != A.a2)
    fail(ErrKind::TypeMismatch, "chu morphism components do not match the given objects");
  EMor lhs = E.comp(B.r, E.tenM(m.f, E.idm(B.a2)));
  EMor rhs = E.comp(A.r, E.tenM(E.idm(A.a), m.f2));
  return lhs.t == rhs.t;
}

void require_chu_morphism(Engine& E, const ChuObj& A, const ChuObj& B, const ChuMor& m,
                          const std::string& what) {
  if (m.f.src != A.a || m.f.dst != B.a || m.f2.src != B.a2 || m.f2.dst != A.a2)
    fail(ErrKind::TypeMismatch, what + ": chu morphism components do not match the objects");
  EMor lhs = E.comp(B.r, E.tenM(m.f, E.idm(B.a2)));
  EMor rhs = E.comp(A.r, E.tenM(E.idm(A.a), m.f2));
  if (lhs.t == rhs.t) return;
  const FinCategory& O = E.O();
  for (int o = 0; o < O.n_obj(); ++o)
    for (int e = 0; e < (int)lhs.t.comp[o].size(); ++e)
      if (lhs.t.comp[o][e] != rhs.t.comp[o][e])
        fail(ErrKind::NotChuMorphism, what + ": pairing square fails at " + O.obj_names[o] +
                                          " element " + std::to_string(e));
  fail(ErrKind::NotChuMorphism, what + ": pairing square fails");
}

ChuMor chu_id(Engine& E, const ChuObj& A) { return {E.idm(A.a), E.idm(A.a2)}; }

ChuMor chu_comp(Engine& E, const ChuMor& g, const ChuMor& f) {
  return {E.comp(g.f, f.f), E.comp(f.f2, g.f2)};
}

ChuMor chu_mor_invert(Engine& E, const ChuMor& m) {
  return {E.invert(m.f), E.invert(m.f2)};
}

ChuObj chu_dual(Engine& E, const ChuObj& A) {
  return {A.a2, A.a, E.comp(A.r, E.sym(A.a2, A.a))};
}

ChuMor chu_dual_mor(const ChuMor& m) { return {m.f2, m.f}; }

ChuObj chu_unit(Engine& E) { return {E.bot, E.dualizing, E.lunit(E.dualizing)}; }

ChuObj chu_seq_unit(Engine& E) { return {E.bot, E.bot, E.comp(E.point_true, E.mu())}; }

ChuObj chu_par_unit(Engine& E) { return chu_dual(E, chu_unit(E)); }

ChuTensorData chu_tensor_data(Engine& E, const ChuObj& A, const ChuObj& B) {
  int a = A.a, a2 = A.a2, b = B.a, b2 = B.a2, bot = E.dualizing;
  int ab = E.ten(a, b);
  int hab2 = E.hom(a, b2), hba2 = E.hom(b, a2), habp = E.hom(ab, bot);
  // leg1 sends f : a → b' to (x,y) ↦ s(y, f x)
  EMor inner1 = E.comp(
      B.r, E.comp(E.sym(b2, b),
                  E.comp(E.tenM(E.ev(a, b2), E.idm(b)), E.assoc_inv(hab2, a, b))));
  EMor leg1 = E.curry(inner1, hab2, ab, bot);
  // leg2 sends g : b → a' to (x,y) ↦ r(x, g y)
  EMor inner2 = E.comp(
      A.r, E.comp(E.sym(a2, a),
                  E.comp(E.tenM(E.ev(b, a2), E.idm(a)),
                         E.comp(E.assoc_inv(hba2, b, a), E.tenM(E.idm(hba2), E.sym(a, b))))));
  EMor leg2 = E.curry(inner2, hba2, ab, bot);
  PullbackData pb = pullback_functors(E.F(hab2), E.F(hba2), E.F(habp), leg1.t, leg2.t);
  int p = E.add(pb.obj, "pb(" + E.names[hab2] + "," + E.names[hba2] + ")");
  EMor pi1{p, hab2, pb.pi1}, pi2{p, hba2, pb.pi2};
  // pairing evaluates the first pullback coordinate
  EMor r = E.comp(inner1, E.comp(E.tenM(pi1, E.idm(ab)), E.sym(ab, p)));
  ChuTensorData d;
  d.obj = {ab, p, r};
  d.pb = std::move(pb);
  d.leg1 = leg1;
  d.leg2 = leg2;
  d.pi1 = pi1;
  d.pi2 = pi2;
  return d;
}

ChuObj chu_tensor(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_tensor_data(E, A, B).obj;
}

ChuObj chu_par(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_dual(E, chu_tensor(E, chu_dual(E, A), chu_dual(E, B)));
}

ChuObj chu_hom(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_dual(E, chu_tensor(E, A, chu_dual(E, B)));
}

ChuObj chu_seq(Engine& E, const ChuObj& A, const ChuObj& B) {
  int ab = E.seq(A.a, B.a), ab2 = E.seq(A.a2, B.a2);
  EMor r = E.comp(E.seq_fold,
                  E.comp(E.seqM(A.r, B.r), E.delta(A.a, B.a, A.a2, B.a2)));
  return {ab, ab2, r};
}

ChuMor chu_tensor_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                      const ChuObj& D, const ChuMor& f, const ChuMor& g) {
  ChuTensorData s = chu_tensor_data(E, A, B);
  ChuTensorData d = chu_tensor_data(E, C, D);
  EMor first = E.tenM(f.f, g.f);
  EMor L1 = E.comp(E.homM(f.f, g.f2), d.pi1);
  EMor L2 = E.comp(E.homM(g.f, f.f2), d.pi2);
  SetNat sn = pullback_mediate(s.pb, E.F(d.obj.a2), L1.t, L2.t);
  ChuMor m{first, EMor{d.obj.a2, s.obj.a2, sn}};
  require_chu_morphism(E, s.obj, d.obj, m, "tensor of morphisms");
  return m;
}

ChuMor chu_par_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                   const ChuObj& D, const ChuMor& f, const ChuMor& g) {
  return chu_dual_mor(chu_tensor_mor(E, chu_dual(E, C), chu_dual(E, D), chu_dual(E, A),
                                     chu_dual(E, B), chu_dual_mor(f), chu_dual_mor(g)));
}

ChuMor chu_seq_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                   const ChuObj& D, const ChuMor& f, const ChuMor& g) {
  ChuObj s = chu_seq(E, A, B), d = chu_seq(E, C, D);
  ChuMor m{E.seqM(f.f, g.f), E.seqM(f.f2, g.f2)};
  require_chu_morphism(E, s, d, m, "seq of morphisms");
  return m;
}

ChuMor chu_lunit(Engine& E, const ChuObj& A) {
  ChuObj one = chu_unit(E);
  ChuTensorData t = chu_tensor_data(E, one, A);
  EMor c1 = E.curry(E.runit(A.a2), A.a2, E.bot, A.a2);
  EMor c2 = E.curry(E.comp(A.r, E.sym(A.a2, A.a)), A.a2, A.a, E.dualizing);
  SetNat sn = pullback_mediate(t.pb, E.F(A.a2), c1.t, c2.t);
  ChuMor m{E.lunit(A.a), EMor{A.a2, t.obj.a2, sn}};
  require_chu_morphism(E, t.obj, A, m, "tensor left unitor");
  return m;
}

ChuMor chu_runit(Engine& E, const ChuObj& A) {
  ChuObj one = chu_unit(E);
  ChuTensorData t = chu_tensor_data(E, A, one);
  EMor c1 = E.curry(E.comp(A.r, E.sym(A.a2, A.a)), A.a2, A.a, E.dualizing);
  EMor c2 = E.curry(E.runit(A.a2), A.a2, E.bot, A.a2);
  SetNat sn = pullback_mediate(t.pb, E.F(A.a2), c1.t, c2.t);
  ChuMor m{E.runit(A.a), EMor{A.a2, t.obj.a2, sn}};
  require_chu_morphism(E, t.obj, A, m, "tensor right unitor");
  return m;
}

ChuMor chu_sym(Engine& E, const ChuObj& A, const ChuObj& B) {
  ChuTensorData s = chu_tensor_data(E, A, B);
  ChuTensorData t = chu_tensor_data(E, B, A);
  SetNat sn = pullback_mediate(s.pb, E.F(t.obj.a2), t.pi2.t, t.pi1.t);
  ChuMor m{E.sym(A.a, B.a), EMor{t.obj.a2, s.obj.a2, sn}};
  require_chu_morphism(E, s.obj, t.obj, m, "tensor symmetry");
  return m;
}

// hom currying iso [a,[b,c]] -> [a(*)b, c], two evaluations under a curry
static EMor hom_curry_iso(Engine& E, int a, int b, int c) {
  int hbc = E.hom(b, c);
  int h1 = E.hom(a, hbc);
  EMor core =
      E.comp(E.ev(b, c), E.comp(E.tenM(E.ev(a, hbc), E.idm(b)), E.assoc_inv(h1, a, b)));
  return E.curry(core, h1, E.ten(a, b), c);
}

ChuMor chu_assoc(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C) {
  ChuTensorData P = chu_tensor_data(E, A, B);
  ChuTensorData Q = chu_tensor_data(E, B, C);
  ChuTensorData L = chu_tensor_data(E, P.obj, C);
  ChuTensorData R = chu_tensor_data(E, A, Q.obj);
  int Aa = A.a, Ba = B.a, Ca = C.a;
  int R2 = R.obj.a2;
  // first leg lands in [A.a (*) B.a, C.a2]: reassociate the hom nesting
  EMor u1 = E.comp(hom_curry_iso(E, Aa, Ba, C.a2),
                   E.comp(E.homM(E.idm(Aa), Q.pi1), R.pi1));
  // second leg lands in [C.a, AB co-carrier]: mediate R.a2 (*) C.a into the
  // AB pullback, then curry C.a out
  int rc = E.ten(R2, Ca);
  EMor reorg1 = E.comp(E.assoc_inv(R2, Aa, Ca),
                       E.comp(E.tenM(E.idm(R2), E.sym(Ca, Aa)), E.assoc(R2, Ca, Aa)));
  EMor evR = E.comp(E.ev(Aa, Q.obj.a2), E.tenM(R.pi1, E.idm(Aa)));
  EMor evQ = E.comp(E.ev(Ca, B.a2), E.tenM(Q.pi2, E.idm(Ca)));
  EMor w1 = E.curry(E.comp(evQ, E.comp(E.tenM(evR, E.idm(Ca)), reorg1)), rc, Aa, B.a2);
  int BCa = E.ten(Ba, Ca);
  EMor reorg2 = E.comp(E.tenM(E.idm(R2), E.sym(Ca, Ba)), E.assoc(R2, Ca, Ba));
  EMor w2 =
      E.curry(E.comp(E.ev(BCa, A.a2), E.comp(E.tenM(R.pi2, E.idm(BCa)), reorg2)), rc, Ba, A.a2);
  SetNat vmed = pullback_mediate(P.pb, E.F(rc), w1.t, w2.t);
  EMor u2 = E.curry(EMor{rc, P.obj.a2, vmed}, R2, Ca, P.obj.a2);
  SetNat sn = pullback_mediate(L.pb, E.F(R2), u1.t, u2.t);
  ChuMor m{E.assoc(Aa, Ba, Ca), EMor{R2, L.obj.a2, sn}};
  require_chu_morphism(E, L.obj, R.obj, m, "tensor associator");
  return m;
}

ChuMor chu_seq_lunit(Engine& E, const ChuObj& A) {
  ChuObj IA = chu_seq(E, chu_seq_unit(E), A);
  ChuMor m{E.slunit(A.a), E.slunit_inv(A.a2)};
  require_chu_morphism(E, IA, A, m, "seq left unitor");
  return m;
}

ChuMor chu_seq_runit(Engine& E, const ChuObj& A) {
  ChuObj AI = chu_seq(E, A, chu_seq_unit(E));
  ChuMor m{E.srunit(A.a), E.srunit_inv(A.a2)};
  require_chu_morphism(E, AI, A, m, "seq right unitor");
  return m;
}

ChuMor chu_mix(Engine& E) {
  ChuObj one = chu_unit(E);
  ChuMor m{E.point_true, E.point_true};
  require_chu_morphism(E, one, chu_dual(E, one), m, "mix");
  return m;
}

// canonical strength of the internal hom over seq:
// [x,y] ⊲ [z,w] → [x⊲z, y⊲w], currying (ev⊲ev)∘interchange
static EMor seq_hom_canonical(Engine& E, int x, int y, int z, int w) {
  int hx = E.hom(x, y), hz = E.hom(z, w);
  int hh = E.seq(hx, hz), xz = E.seq(x, z);
  EMor act = E.comp(E.seqM(E.ev(x, y), E.ev(z, w)), E.delta(hx, hz, x, z));
  return E.curry(act, hh, xz, E.seq(y, w));
}

ChuMor distributor_interchange(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                               const ChuObj& D) {
  ChuObj AB = chu_seq(E, A, B), CD = chu_seq(E, C, D);
  ChuTensorData src = chu_tensor_data(E, AB, CD);
  ChuTensorData tAC = chu_tensor_data(E, A, C);
  ChuTensorData tBD = chu_tensor_data(E, B, D);
  ChuObj dst = chu_seq(E, tAC.obj, tBD.obj);
  EMor f = E.delta(A.a, B.a, C.a, D.a);
  EMor L1 = E.comp(seq_hom_canonical(E, A.a, C.a2, B.a, D.a2), E.seqM(tAC.pi1, tBD.pi1));
  EMor L2 = E.comp(seq_hom_canonical(E, C.a, A.a2, D.a, B.a2), E.seqM(tAC.pi2, tBD.pi2));
  SetNat sn = pullback_mediate(src.pb, E.F(dst.a2), L1.t, L2.t);
  ChuMor m{f, EMor{dst.a2, src.obj.a2, sn}};
  require_chu_morphism(E, src.obj, dst, m, "interchange distributor");
  return m;
}

ChuMor distributor_seq_par(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                           const ChuObj& D) {
  return chu_dual_mor(distributor_interchange(E, chu_dual(E, A), chu_dual(E, C),
                                              chu_dual(E, B), chu_dual(E, D)));
}

ChuMor chu_transpose(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                     const ChuMor& h) {
  ChuTensorData tAB = chu_tensor_data(E, A, B);
  ChuTensorData tBCd = chu_tensor_data(E, B, chu_dual(E, C));
  ChuObj homBC = chu_dual(E, tBCd.obj);
  EMor c1 = E.curry(h.f, A.a, B.a, C.a);
  EMor pih = E.comp(tAB.pi1, h.f2);
  int hab2 = E.hom(A.a, B.a2);
  EMor in2 = E.comp(E.ev(A.a, B.a2), E.comp(E.sym(A.a, hab2), E.tenM(E.idm(A.a), pih)));
  EMor c2 = E.curry(in2, A.a, C.a2, B.a2);
  SetNat k1 = pullback_mediate(tBCd.pb, E.F(A.a), c1.t, c2.t);
  EMor pih2 = E.comp(tAB.pi2, h.f2);
  int hba2 = E.hom(B.a, A.a2);
  EMor k2 = E.comp(E.ev(B.a, A.a2), E.comp(E.sym(B.a, hba2), E.tenM(E.idm(B.a), pih2)));
  ChuMor m{EMor{A.a, homBC.a, k1}, k2};
  require_chu_morphism(E, A, homBC, m, "closure transpose");
  return m;
}

ChuMor chu_transpose_inv(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                         const ChuMor& k) {
  ChuTensorData tAB = chu_tensor_data(E, A, B);
  ChuTensorData tBCd = chu_tensor_data(E, B, chu_dual(E, C));
  EMor q1 = E.comp(tBCd.pi1, k.f);
  EMor h1 = E.uncurry(q1, A.a, B.a, C.a);
  EMor q2 = E.comp(tBCd.pi2, k.f);
  int hc2b2 = E.hom(C.a2, B.a2);
  EMor j1in = E.comp(E.ev(C.a2, B.a2), E.comp(E.sym(C.a2, hc2b2), E.tenM(E.idm(C.a2), q2)));
  EMor j1 = E.curry(j1in, C.a2, A.a, B.a2);
  EMor j2 = E.curry(E.comp(k.f2, E.sym(C.a2, B.a)), C.a2, B.a, A.a2);
  SetNat h2 = pullback_mediate(tAB.pb, E.F(C.a2), j1.t, j2.t);
  ChuMor m{h1, EMor{C.a2, tAB.obj.a2, h2}};
  require_chu_morphism(E, tAB.obj, C, m, "closure transpose inverse");
  return m;
}

ChuMor chu_switch(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C) {
  ChuObj P = chu_par(E, B, C);  // equals [B*, C] on the nose
  ChuObj Bd = chu_dual(E, B);
  ChuMor ev = chu_transpose_inv(E, P, Bd, C, chu_id(E, P));
  ChuObj PB = chu_tensor(E, P, Bd);
  ChuObj AC = chu_tensor(E, A, C);
  ChuMor s = chu_tensor_mor(E, A, PB, A, C, chu_id(E, A), ev);
  ChuMor h = chu_comp(E, s, chu_assoc(E, A, P, Bd));
  return chu_transpose(E, chu_tensor(E, A, P), Bd, AC, h);
}

ChuObj chu_embed(Engine& E, int a) {
  int d = E.hom(a, E.dualizing);
  return {a, d, E.comp(E.ev(a, E.dualizing), E.sym(a, d))};
}

ChuMor chu_embed_mor(Engine& E, const EMor& f) {
  return {f, E.homM(f, E.idm(E.dualizing))};
}

ChuProductData chu_product(Engine& E, const ChuObj& A, const ChuObj& B) {
  ProductData pd = product_functors(E.F(A.a), E.F(B.a));
  CoproductData cd = coproduct_functors(E.F(A.a2), E.F(B.a2));
  int p = E.add(pd.obj, "(" + E.names[A.a] + "&" + E.names[B.a] + ")");
  int q = E.add(cd.obj, "(" + E.names[A.a2] + "+" + E.names[B.a2] + ")");
  EMor pi1{p, A.a, pd.pi1}, pi2{p, B.a, pd.pi2};
  EMor in1{A.a2, q, cd.in1}, in2{B.a2, q, cd.in2};
  EMor u1 = E.curry(E.comp(A.r, E.comp(E.sym(A.a2, A.a), E.tenM(E.idm(A.a2), pi1))), A.a2, p,
                    E.dualizing);
  EMor u2 = E.curry(E.comp(B.r, E.comp(E.sym(B.a2, B.a), E.tenM(E.idm(B.a2), pi2))), B.a2, p,
                    E.dualizing);
  int hp = E.hom(p, E.dualizing);
  SetNat mn = coproduct_mediate(cd, E.F(hp), u1.t, u2.t);
  EMor m{q, hp, mn};
  EMor r = E.comp(E.ev(p, E.dualizing), E.comp(E.tenM(m, E.idm(p)), E.sym(p, q)));
  ChuProductData d;
  d.obj = {p, q, r};
  d.pi1 = {pi1, in1};
  d.pi2 = {pi2, in2};
  d.pd = std::move(pd);
  d.cd = std::move(cd);
  require_chu_morphism(E, d.obj, A, d.pi1, "product first projection");
  require_chu_morphism(E, d.obj, B, d.pi2, "product second projection");
  return d;
}

ChuMor chu_product_mediate(Engine& E, const ChuProductData& d, const ChuObj& W, const ChuMor& u,
                           const ChuMor& v) {
  SetNat f = product_mediate(d.pd, E.F(W.a), u.f.t, v.f.t);
  SetNat f2 = coproduct_mediate(d.cd, E.F(W.a2), u.f2.t, v.f2.t);
  ChuMor m{EMor{W.a, d.obj.a, f}, EMor{d.obj.a2, W.a2, f2}};
  require_chu_morphism(E, W, d.obj, m, "product mediator");
  return m;
}

ChuCoproductData chu_coproduct(Engine& E, const ChuObj& A, const ChuObj& B) {
  ChuProductData pd = chu_product(E, chu_dual(E, A), chu_dual(E, B));
  ChuCoproductData d;
  d.obj = chu_dual(E, pd.obj);
  d.in1 = chu_dual_mor(pd.pi1);
  d.in2 = chu_dual_mor(pd.pi2);
  d.dual_data = std::move(pd);
  return d;
}

ChuMor chu_coproduct_mediate(Engine& E, const ChuCoproductData& d, const ChuObj& W,
                             const ChuMor& u, const ChuMor& v) {
  return chu_dual_mor(chu_product_mediate(E, d.dual_data, chu_dual(E, W), chu_dual_mor(u),
                                          chu_dual_mor(v)));
}

ChuPushoutData chu_pushout(Engine& E, const ChuObj& H, const ChuObj& A, const ChuObj& B,
                           const ChuMor& f, const ChuMor& g) {
  if (f.f.src != H.a || g.f.src != H.a)
    fail(ErrKind::TypeMismatch, "pushout span legs must share the apex");
  PushoutData po = pushout_functors(E.F(H.a), E.F(A.a), E.F(B.a), f.f.t, g.f.t);
  PullbackData pb = pullback_functors(E.F(A.a2), E.F(B.a2), E.F(H.a2), f.f2.t, g.f2.t);
  int p = E.add(po.obj, "po(" + E.names[A.a] + "," + E.names[B.a] + ")");
  int q = E.add(pb.obj, "pb(" + E.names[A.a2] + "," + E.names[B.a2] + ")");
  EMor pi1{q, A.a2, pb.pi1}, pi2{q, B.a2, pb.pi2};
  EMor u = E.curry(E.comp(A.r, E.tenM(E.idm(A.a), pi1)), A.a, q, E.dualizing);
  EMor v = E.curry(E.comp(B.r, E.tenM(E.idm(B.a), pi2)), B.a, q, E.dualizing);
  int hq = E.hom(q, E.dualizing);
  SetNat mn = pushout_mediate(po, E.F(hq), u.t, v.t);
  EMor m{p, hq, mn};
  EMor r = E.comp(E.ev(q, E.dualizing), E.tenM(m, E.idm(q)));
  ChuPushoutData d;
  d.obj = {p, q, r};
  d.in1 = {EMor{A.a, p, po.in1}, pi1};
  d.in2 = {EMor{B.a, p, po.in2}, pi2};
  d.po = std::move(po);
  d.pb = std::move(pb);
  require_chu_morphism(E, A, d.obj, d.in1, "pushout first injection");
  require_chu_morphism(E, B, d.obj, d.in2, "pushout second injection");
  return d;
}

ChuMor chu_pushout_mediate(Engine& E, const ChuPushoutData& d, const ChuObj& W, const ChuMor& u,
                           const ChuMor& v) {
  SetNat f = pushout_mediate(d.po, E.F(W.a), u.f.t, v.f.t);
  SetNat f2 = pullback_mediate(d.pb, E.F(W.a2), u.f2.t, v.f2.t);
  ChuMor m{EMor{d.obj.a, W.a, f}, EMor{W.a2, d.obj.a2, f2}};
  require_chu_morphism(E, d.obj, W, m, "pushout mediator");
  return m;
}

std::vector<ChuMor> chu_homset(Engine& E, const ChuObj& A, const ChuObj& B) {
  std::vector<SetNat> fs = E.homset(A.a, B.a);
  std::vector<SetNat> gs = E.homset(B.a2, A.a2);
  E.budget.charge((long long)fs.size() * (long long)gs.size(), "chu hom enumeration");
  std::vector<EMor> lhss, rhss;
  lhss.reserve(fs.size());
  for (const SetNat& f : fs)
    lhss.push_back(E.comp(B.r, E.tenM(EMor{A.a, B.a, f}, E.idm(B.a2))));
  rhss.reserve(gs.size());
  for (const SetNat& g : gs)
    rhss.push_back(E.comp(A.r, E.tenM(E.idm(A.a), EMor{B.a2, A.a2, g})));
  std::vector<ChuMor> out;
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < gs.size(); ++j)
      if (lhss[i].t == rhss[j].t)
        out.push_back({EMor{A.a, B.a, fs[i]}, EMor{B.a2, A.a2, gs[j]}});
  return out;
}

ChuIso chu_iso_search(Engine& E, const ChuObj& A, const ChuObj& B) {
  ChuIso res;
  for (const ChuMor& m : chu_homset(E, A, B)) {
    ++res.searched;
    ChuMor inv;
    try {
      inv = chu_mor_invert(E, m);
    } catch (const EngineError&) {
      continue;
    }
    if (!is_chu_morphism(E, B, A, inv)) continue;
    res.found = true;
    res.fwd = m;
    res.bwd = inv;
    return res;
  }
  return res;
}

}  // namespace bveng
