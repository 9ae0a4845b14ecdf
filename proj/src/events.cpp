#include "bvengine/events.hpp"

#include <algorithm>

namespace bveng {

// Event constructions pair combs against the unit representable, so they need
// the engine whose dualizing object is the unit (the optic engines).
static void need_unit_pairing(const Engine& E) {
  if (E.dualizing != E.bot)
    fail(ErrKind::ConfigError, "event spaces need the unit as pairing target");
}

int comb_object(Engine& E, int a, int a2) {
  const FinCategory& C = E.base;
  return E.add(comb_module(*E.oc, a, a2),
               "C(" + C.obj_names[a] + "," + C.obj_names[a2] + ")");
}

int rep_object(Engine& E, int a, int a2) {
  const FinCategory& C = E.base;
  return E.add(representable(E.O(), E.oc->pobj(a, a2)),
               "y(" + C.obj_names[a] + "," + C.obj_names[a2] + ")");
}

ChuObj event_space(Engine& E, int a, int a2) {
  need_unit_pairing(E);
  return chu_embed(E, comb_object(E, a, a2));
}

ChuObj faithful_event(Engine& E, int a, int a2) {
  need_unit_pairing(E);
  const FinCategory& C = E.base;
  const FinCategory& O = E.O();
  const OpticCat& oc = *E.oc;
  int ca = comb_object(E, a, a2), ya = rep_object(E, a, a2);
  int cy = E.ten(ca, ya);
  const DayTensor& D = E.day_of(ca, ya);
  int ap = oc.pobj(a, a2);
  // pairing: a comb h at X against an optic ρ: a → Y closes to an element of
  // the unit module at X⊗Y by composing ρ into the comb's hole
  SetNat t;
  t.comp.resize(O.n_obj());
  for (int z = 0; z < O.n_obj(); ++z) {
    t.comp[z] = lift_class_map(
        D.q[z],
        [&](int i) {
          const DayTensor::Rep& r = D.amb[z][i];
          auto [x, x2] = oc.unpobj(r.x);
          int h = C.hom(C.ten(x, a), C.ten(x2, a2))[r.p];
          int hhat = oc.classify(O.unit, O.ten(r.x, ap), C.ten(x, a), C.id(C.ten(x, a)), h);
          int rho = O.hom(ap, r.y)[r.q];
          int o = O.compose(r.m, O.compose(O.ten_m(O.id(r.x), rho), hhat));
          return O.hom_pos(o);
        },
        "faithful pairing");
  }
  validate_nat(E.F(cy), E.F(E.bot), t);
  return {ca, ya, EMor{cy, E.bot, t}};
}

ChuObj first_order_event(Engine& E, int a) {
  need_unit_pairing(E);
  const FinCategory& C = E.base;
  const FinCategory& O = E.O();
  const OpticCat& oc = *E.oc;
  int i = C.unit;
  int yai = rep_object(E, a, i), yia = rep_object(E, i, a);
  int p = E.ten(yai, yia);
  const DayTensor& D = E.day_of(yai, yia);
  int ap = oc.pobj(a, i), bp = oc.pobj(i, a);
  int jhat = oc.classify(O.unit, oc.pobj(a, a), a, C.id(a), C.id(a));
  SetNat t;
  t.comp.resize(O.n_obj());
  for (int z = 0; z < O.n_obj(); ++z) {
    t.comp[z] = lift_class_map(
        D.q[z],
        [&](int idx) {
          const DayTensor::Rep& r = D.amb[z][idx];
          int u = O.hom(ap, r.x)[r.p];
          int v = O.hom(bp, r.y)[r.q];
          int o = O.compose(r.m, O.compose(O.ten_m(u, v), jhat));
          return O.hom_pos(o);
        },
        "first-order pairing");
  }
  validate_nat(E.F(p), E.F(E.bot), t);
  return {yai, yia, EMor{p, E.bot, t}};
}

ChuTensorData local_combs(Engine& E, int a, int a2, int b, int b2) {
  return chu_tensor_data(E, faithful_event(E, a, a2), faithful_event(E, b, b2));
}

LemmaParResult check_lemma_par(Engine& E, int a, int a2, int b, int b2) {
  const FinCategory& C = E.base;
  LemmaParResult r;
  r.lhs = chu_par(E, faithful_event(E, a, a2), faithful_event(E, b, b2));
  r.rhs = faithful_event(E, C.ten(a, b), C.ten(a2, b2));
  r.iso = chu_iso_search(E, r.lhs, r.rhs);
  return r;
}

EMor rep_mult(Engine& E, int a, int a2, int b, int b2) {
  const FinCategory& C = E.base;
  const FinCategory& O = E.O();
  const OpticCat& oc = *E.oc;
  int ya = rep_object(E, a, a2), yb = rep_object(E, b, b2);
  int tab = rep_object(E, C.ten(a, b), C.ten(a2, b2));
  int yy = E.ten(ya, yb);
  const DayTensor& D = E.day_of(ya, yb);
  int ap = oc.pobj(a, a2), bp = oc.pobj(b, b2);
  int abp = O.ten(ap, bp);
  int ida = O.hom_pos(O.id(ap)), idb = O.hom_pos(O.id(bp));
  SetNat t;
  t.comp.resize(O.n_obj());
  for (int z = 0; z < O.n_obj(); ++z) {
    const std::vector<int>& hs = O.hom(abp, z);
    t.comp[z].resize(hs.size());
    for (size_t e = 0; e < hs.size(); ++e)
      t.comp[z][e] = D.cls(z, ap, bp, hs[e], ida, idb);
  }
  validate_nat(E.F(tab), E.F(yy), t);
  return {tab, yy, t};
}

EMor rep_hom_comb(Engine& E, int a, int a2) {
  const FinCategory& C = E.base;
  const FinCategory& O = E.O();
  const OpticCat& oc = *E.oc;
  int ya = rep_object(E, a, a2), ca = comb_object(E, a, a2);
  int h = E.hom(ya, E.dualizing);
  const DayHom& H = E.hom_of(ya, E.dualizing);
  int ap = oc.pobj(a, a2);
  int idp = O.hom_pos(O.id(ap));
  SetNat t;
  t.comp.resize(O.n_obj());
  for (int x = 0; x < O.n_obj(); ++x) {
    int n = E.F(h).card[x];
    t.comp[x].resize(n);
    for (int e = 0; e < n; ++e) {
      int j = H.value(x, e, ap, idp);  // family at the source pair on the identity
      t.comp[x][e] = C.hom_pos(E.bot_mor(O.ten(x, ap), j));
    }
  }
  validate_nat(E.F(h), E.F(ca), t);
  return {h, ca, t};
}

static void need_shared_unit(Engine& E) {
  if (!(chu_unit(E) == chu_seq_unit(E)))
    fail(ErrKind::StrictnessViolation,
         "order embeddings need the tensor and seq units to coincide");
}

ChuMor tau_tensor_l(Engine& E, const ChuObj& A, const ChuObj& B) {
  need_shared_unit(E);
  ChuObj I = chu_seq_unit(E);
  ChuMor ra = chu_mor_invert(E, chu_seq_runit(E, A));  // A → A⊲I
  ChuMor lb = chu_mor_invert(E, chu_seq_lunit(E, B));  // B → I⊲B
  ChuObj SA = chu_seq(E, A, I), SB = chu_seq(E, I, B);
  ChuMor step1 = chu_tensor_mor(E, A, B, SA, SB, ra, lb);
  ChuMor d = distributor_interchange(E, A, I, I, B);
  ChuMor step3 = chu_seq_mor(E, chu_tensor(E, A, I), chu_tensor(E, I, B), A, B,
                             chu_runit(E, A), chu_lunit(E, B));
  return chu_comp(E, step3, chu_comp(E, d, step1));
}

ChuMor tau_tensor_r(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_comp(E, tau_tensor_l(E, B, A), chu_sym(E, A, B));
}

ChuMor tau_par_l(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_dual_mor(tau_tensor_l(E, chu_dual(E, A), chu_dual(E, B)));
}

ChuMor tau_par_r(Engine& E, const ChuObj& A, const ChuObj& B) {
  return chu_dual_mor(tau_tensor_r(E, chu_dual(E, A), chu_dual(E, B)));
}

JoinOrders join_orders(Engine& E, const ChuObj& A, const ChuObj& B) {
  JoinOrders J;
  ChuObj AB = chu_tensor(E, A, B);
  J.tau_tl = tau_tensor_l(E, A, B);
  J.tau_tr = tau_tensor_r(E, A, B);
  J.po = chu_pushout(E, AB, chu_seq(E, A, B), chu_seq(E, B, A), J.tau_tl, J.tau_tr);
  J.tau_pl = tau_par_l(E, A, B);
  J.tau_pr = tau_par_r(E, A, B);
  if (!(chu_comp(E, J.tau_pl, J.tau_tl) == chu_comp(E, J.tau_pr, J.tau_tr)))
    fail(ErrKind::InterchangeViolation, "order embeddings into the par disagree");
  J.dashed = chu_pushout_mediate(E, J.po, chu_par(E, A, B), J.tau_pl, J.tau_pr);
  return J;
}

EMor upper_bound(Engine& E, int a, int a2, int b, int b2) {
  const FinCategory& C = E.base;
  ChuObj Pa = event_space(E, a, a2), Pb = event_space(E, b, b2);
  ChuTensorData T = chu_tensor_data(E, chu_dual(E, Pa), chu_dual(E, Pb));
  EMor diag = E.comp(T.leg1, T.pi1);
  int ca = comb_object(E, a, a2), cb = comb_object(E, b, b2);
  int ya = rep_object(E, a, a2), yb = rep_object(E, b, b2);
  ChuObj Fa = faithful_event(E, a, a2), Fb = faithful_event(E, b, b2);
  EMor ua = E.curry(E.comp(Fa.r, E.sym(ya, ca)), ya, ca, E.dualizing);
  EMor ub = E.curry(E.comp(Fb.r, E.sym(yb, cb)), yb, cb, E.dualizing);
  EMor step1 = E.homM(E.tenM(ua, ub), E.idm(E.dualizing));
  EMor step2 = E.homM(rep_mult(E, a, a2, b, b2), E.idm(E.dualizing));
  EMor step3 = rep_hom_comb(E, C.ten(a, b), C.ten(a2, b2));
  EMor out = E.comp(step3, E.comp(step2, E.comp(step1, diag)));
  validate_nat(E.F(out.src), E.F(out.dst), out.t);
  return out;
}

SupermapReport enumerate_supermaps(Engine& E, int a, int a2, int b, int b2) {
  const FinCategory& C = E.base;
  const FinCategory& O = E.O();
  const OpticCat& oc = *E.oc;
  ChuObj Fa = faithful_event(E, a, a2), Fb = faithful_event(E, b, b2);
  SupermapReport R;
  R.morphisms = chu_homset(E, Fa, Fb);
  int ap = oc.pobj(a, a2), bp = oc.pobj(b, b2);
  const std::vector<int>& oh = O.hom(ap, bp);
  int idb = O.hom_pos(O.id(bp));
  bool ok = true;
  for (const ChuMor& m : R.morphisms) {
    // backward component is an optic by Yoneda: its value on the identity
    int o = oh[m.f2.t.comp[bp][idb]];
    R.optics.push_back(o);
    // the forward component must be that optic's action on combs
    for (int x = 0; x < O.n_obj() && ok; ++x) {
      auto [x1, x2] = oc.unpobj(x);
      const std::vector<int>& combs = C.hom(C.ten(x1, a), C.ten(x2, a2));
      for (size_t hp = 0; hp < combs.size() && ok; ++hp) {
        int hhat =
            oc.classify(O.unit, O.ten(x, ap), C.ten(x1, a), C.id(C.ten(x1, a)), combs[hp]);
        int img = O.compose(O.ten_m(O.id(x), o), hhat);
        int want = C.hom_pos(E.bot_mor(O.ten(x, bp), O.hom_pos(img)));
        ok = m.f.t.comp[x][hp] == want;
      }
    }
  }
  // bijective onto the optic homset: every optic exactly once
  std::vector<int> seen = R.optics, all(oh.begin(), oh.end());
  std::sort(seen.begin(), seen.end());
  std::sort(all.begin(), all.end());
  R.all_from_optics = ok && seen == all;
  return R;
}

}  // namespace bveng
