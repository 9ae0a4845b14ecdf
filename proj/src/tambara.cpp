#include "bvengine/tambara.hpp"

namespace bveng {

namespace {

// block-local helpers working on raw C data
int g_count(const FinCategory& C, int x, int a2, int b2) {
  return (int)C.hom(C.ten(x, a2), b2).size();
}

}  // namespace

int OpticCat::amb_index(int src, int dst, int x, int f, int g) const {
  auto [a, a2] = unpobj(src);
  auto [b, b2] = unpobj(dst);
  (void)a;
  (void)b;
  const Block& bl = block(src, dst);
  return bl.xoff[x] + C->hom_pos(f) * g_count(*C, x, a2, b2) + C->hom_pos(g);
}

int OpticCat::classify(int src, int dst, int x, int f, int g) const {
  const Block& bl = block(src, dst);
  return bl.mor_off + bl.q.cls[amb_index(src, dst, x, f, g)];
}

OpticCat::Raw OpticCat::raw(int omor) const {
  const Block& bl = block(O.dom(omor), O.cod(omor));
  const auto& t = bl.amb[bl.q.repr[omor - bl.mor_off]];
  return Raw{t[0], t[1], t[2]};
}

int OpticCat::pure(int u, int v) const {
  int src = pobj(C->cod(u), C->dom(v));
  int dst = pobj(C->dom(u), C->cod(v));
  return classify(src, dst, C->unit, u, v);
}

int OpticCat::zeta(int h, int src) const {
  auto [x, x2] = unpobj(src);
  int c = C->dom(h), d = C->cod(h);
  int dst = pobj(C->ten(c, x), C->ten(d, x2));
  return classify(src, dst, c, C->id(C->ten(c, x)), C->ten_m(h, C->id(x2)));
}

int OpticCat::plug(int omor, int phi) const {
  int src = O.dom(omor), dst = O.cod(omor);
  auto [a, a2] = unpobj(src);
  if (C->dom(phi) != a || C->cod(phi) != a2)
    fail(ErrKind::TypeMismatch, "plug: filler does not match the optic's inner pair");
  const Block& bl = block(src, dst);
  int cls = omor - bl.mor_off;
  int out = -1;
  for (size_t i = 0; i < bl.amb.size(); ++i) {
    if (bl.q.cls[(int)i] != cls) continue;
    auto [x, f, g] = bl.amb[i];
    int val = C->compose(g, C->compose(C->ten_m(C->id(x), phi), f));
    if (out < 0)
      out = val;
    else if (out != val)
      fail(ErrKind::IllDefinedMap, "plug is not constant on the sliding class");
  }
  (void)dst;
  return out;
}

std::unique_ptr<OpticCat> build_optic(const FinCategory& C, Budget& budget) {
  auto oc = std::make_unique<OpticCat>();
  oc->C = &C;
  int nC = C.n_obj();
  int nO = nC * nC;

  FinCategory& O = oc->O;
  O.name = "Optic(" + C.name + ")";
  O.obj_names.resize(nO);
  for (int a = 0; a < nC; ++a)
    for (int a2 = 0; a2 < nC; ++a2)
      O.obj_names[oc->pobj(a, a2)] = "(" + C.obj_names[a] + "," + C.obj_names[a2] + ")";

  // sliding quotients, block by block
  oc->blocks.resize(nO * nO);
  for (int src = 0; src < nO; ++src) {
    auto [a, a2] = oc->unpobj(src);
    for (int dst = 0; dst < nO; ++dst) {
      auto [b, b2] = oc->unpobj(dst);
      OpticCat::Block& bl = oc->blocks[src * nO + dst];
      bl.xoff.resize(nC);
      for (int x = 0; x < nC; ++x) {
        bl.xoff[x] = (int)bl.amb.size();
        for (int f : C.hom(b, C.ten(x, a)))
          for (int g : C.hom(C.ten(x, a2), b2)) bl.amb.push_back({x, f, g});
      }
      budget.charge((long long)bl.amb.size() + 1, "optic ambient");
      UnionFind uf((int)bl.amb.size());
      for (int m = 0; m < C.n_mor(); ++m) {
        int x = C.dom(m), xb = C.cod(m);
        int ma = C.ten_m(m, C.id(a));
        int ma2 = C.ten_m(m, C.id(a2));
        for (int f : C.hom(b, C.ten(x, a))) {
          int fb = C.compose(ma, f);
          for (int gb : C.hom(C.ten(xb, a2), b2)) {
            budget.charge(1, "optic sliding");
            int g = C.compose(gb, ma2);
            uf.unite(oc->amb_index(src, dst, xb, fb, gb),
                     oc->amb_index(src, dst, x, f, g));
          }
        }
      }
      bl.q = quotient_of(uf);
    }
  }

  // global morphism list
  int total = 0;
  for (int src = 0; src < nO; ++src)
    for (int dst = 0; dst < nO; ++dst) {
      OpticCat::Block& bl = oc->blocks[src * nO + dst];
      bl.mor_off = total;
      for (int k = 0; k < bl.q.size(); ++k) {
        O.mor_names.push_back("opt" + std::to_string(src) + "_" + std::to_string(dst) +
                              "_" + std::to_string(k));
        O.mor_src.push_back(src);
        O.mor_dst.push_back(dst);
      }
      total += bl.q.size();
    }

  O.idm.resize(nO);
  for (int t = 0; t < nO; ++t) {
    auto [a, a2] = oc->unpobj(t);
    O.idm[t] = oc->classify(t, t, C.unit, C.id(a), C.id(a2));
  }

  // composition, verified over every representative pair
  O.cmp.assign(total, std::vector<int>(total, -1));
  for (int fm = 0; fm < total; ++fm) {
    int A = O.mor_src[fm], B = O.mor_dst[fm];
    const OpticCat::Block& blf = oc->blocks[A * nO + B];
    auto [aa, aa2] = oc->unpobj(A);
    (void)aa;
    (void)aa2;
    for (int gm = 0; gm < total; ++gm) {
      if (O.mor_src[gm] != B) continue;
      int Cc = O.mor_dst[gm];
      const OpticCat::Block& blg = oc->blocks[B * nO + Cc];
      int out = -1;
      for (size_t i = 0; i < blf.amb.size(); ++i) {
        if (blf.q.cls[(int)i] != fm - blf.mor_off) continue;
        auto [x, ff, fg] = blf.amb[i];
        for (size_t j = 0; j < blg.amb.size(); ++j) {
          if (blg.q.cls[(int)j] != gm - blg.mor_off) continue;
          auto [y, gf, gg] = blg.amb[j];
          budget.charge(1, "optic composition");
          int res = C.ten(y, x);
          int nf = C.compose(C.ten_m(C.id(y), ff), gf);
          int ng = C.compose(gg, C.ten_m(C.id(y), fg));
          int cls = oc->classify(A, Cc, res, nf, ng);
          if (out < 0)
            out = cls;
          else if (out != cls)
            fail(ErrKind::IllDefinedMap,
                 O.name + ": composition depends on the representative");
        }
      }
      O.cmp[gm][fm] = out;
    }
  }

  O.ten_o.assign(nO, std::vector<int>(nO, 0));
  for (int t1 = 0; t1 < nO; ++t1)
    for (int t2 = 0; t2 < nO; ++t2) {
      auto [a, a2] = oc->unpobj(t1);
      auto [b, b2] = oc->unpobj(t2);
      O.ten_o[t1][t2] = oc->pobj(C.ten(a, b), C.ten(a2, b2));
    }

  // tensor of optics interleaves residuals with two symmetry shuffles
  O.ten_mm.assign(total, std::vector<int>(total, -1));
  for (int m1 = 0; m1 < total; ++m1) {
    int A1 = O.mor_src[m1], B1 = O.mor_dst[m1];
    const OpticCat::Block& bl1 = oc->blocks[A1 * nO + B1];
    auto [a1, a12] = oc->unpobj(A1);
    for (int m2 = 0; m2 < total; ++m2) {
      int A2 = O.mor_src[m2], B2 = O.mor_dst[m2];
      const OpticCat::Block& bl2 = oc->blocks[A2 * nO + B2];
      auto [a2, a22] = oc->unpobj(A2);
      int srcT = O.ten_o[A1][A2], dstT = O.ten_o[B1][B2];
      int out = -1;
      for (size_t i = 0; i < bl1.amb.size(); ++i) {
        if (bl1.q.cls[(int)i] != m1 - bl1.mor_off) continue;
        auto [x1, f1, g1] = bl1.amb[i];
        for (size_t j = 0; j < bl2.amb.size(); ++j) {
          if (bl2.q.cls[(int)j] != m2 - bl2.mor_off) continue;
          auto [x2, f2, g2] = bl2.amb[j];
          budget.charge(1, "optic tensor");
          int res = C.ten(x1, x2);
          int shf = C.ten_m(C.id(x1), C.ten_m(C.sym(a1, x2), C.id(a2)));
          int nf = C.compose(shf, C.ten_m(f1, f2));
          int shg = C.ten_m(C.id(x1), C.ten_m(C.sym(x2, a12), C.id(a22)));
          int ng = C.compose(C.ten_m(g1, g2), shg);
          int cls = oc->classify(srcT, dstT, res, nf, ng);
          if (out < 0)
            out = cls;
          else if (out != cls)
            fail(ErrKind::IllDefinedMap,
                 O.name + ": tensor depends on the representative");
        }
      }
      O.ten_mm[m1][m2] = out;
    }
  }

  O.sym_m.assign(nO, std::vector<int>(nO, 0));
  for (int t1 = 0; t1 < nO; ++t1)
    for (int t2 = 0; t2 < nO; ++t2) {
      auto [x, x2] = oc->unpobj(t1);
      auto [y, y2] = oc->unpobj(t2);
      O.sym_m[t1][t2] = oc->pure(C.sym(y, x), C.sym(x2, y2));
    }

  O.unit = oc->pobj(C.unit, C.unit);
  O.max_nat_candidates = C.max_nat_candidates;
  O.index();
  validate_category(O);
  return oc;
}

SetFunctor comb_module(const OpticCat& oc, int a, int a2) {
  const FinCategory& C = *oc.C;
  const FinCategory& O = oc.O;
  SetFunctor M;
  M.base = &O;
  M.card.resize(O.n_obj());
  for (int t = 0; t < O.n_obj(); ++t) {
    auto [x, x2] = oc.unpobj(t);
    M.card[t] = (int)C.hom(C.ten(x, a), C.ten(x2, a2)).size();
  }
  M.act.resize(O.n_mor());
  for (int n = 0; n < O.n_mor(); ++n) {
    int t = O.dom(n), t2 = O.cod(n);
    auto [x, x2] = oc.unpobj(t);
    const OpticCat::Block& bl = oc.block(t, t2);
    M.act[n].assign(M.card[t], -1);
    for (size_t i = 0; i < bl.amb.size(); ++i) {
      if (bl.q.cls[(int)i] != n - bl.mor_off) continue;
      auto [w, f, g] = bl.amb[i];
      for (int hp = 0; hp < M.card[t]; ++hp) {
        int h = C.hom(C.ten(x, a), C.ten(x2, a2))[hp];
        int s1 = C.ten_m(f, C.id(a));
        int s2 = C.ten_m(C.id(w), h);
        int s3 = C.ten_m(g, C.id(a2));
        int val = C.hom_pos(C.compose(s3, C.compose(s2, s1)));
        if (M.act[n][hp] < 0)
          M.act[n][hp] = val;
        else if (M.act[n][hp] != val)
          fail(ErrKind::IllDefinedMap, "context module action depends on the representative");
      }
    }
  }
  validate_functor(M);
  return M;
}

int OpticSeqBase::act_left(int n, int c) const {
  const FinCategory& C = *oc->C;
  OpticCat::Raw r = oc->raw(n);
  auto [x, x2] = oc->unpobj(oc->O.dom(n));
  auto [y, y2] = oc->unpobj(oc->O.cod(n));
  (void)x2;
  (void)y2;
  int mid = C.ten(r.x, c);
  return oc->classify(oc->pobj(x, c), oc->pobj(y, mid), r.x, r.f, C.id(mid));
}

int OpticSeqBase::act_right(int n, int c) const {
  const FinCategory& C = *oc->C;
  OpticCat::Raw r = oc->raw(n);
  auto [x, x2] = oc->unpobj(oc->O.dom(n));
  auto [y, y2] = oc->unpobj(oc->O.cod(n));
  (void)x;
  (void)y;
  int mid = C.ten(r.x, c);
  return oc->classify(oc->pobj(c, x2), oc->pobj(mid, y2), r.x, C.id(mid), r.g);
}

OpticSeqBase optic_seq_base(const OpticCat& oc) {
  OpticSeqBase sb;
  sb.oc = &oc;
  sb.base = &oc.O;
  sb.mid = oc.C;
  return sb;
}

void check_seq_action_reps(const OpticCat& oc, const SetFunctor& P, const SetFunctor& Q,
                           const SeqTensor& PQ) {
  const FinCategory& C = *oc.C;
  const FinCategory& O = oc.O;
  for (int n = 0; n < O.n_mor(); ++n) {
    int t = O.dom(n), t2 = O.cod(n);
    auto [x, x2] = oc.unpobj(t);
    auto [y, y2] = oc.unpobj(t2);
    const OpticCat::Block& bl = oc.block(t, t2);
    for (size_t i = 0; i < bl.amb.size(); ++i) {
      if (bl.q.cls[(int)i] != n - bl.mor_off) continue;
      auto [w, f, g] = bl.amb[i];
      for (size_t ai = 0; ai < PQ.amb[t].size(); ++ai) {
        const SeqTensor::Rep& r = PQ.amb[t][ai];
        int mid = C.ten(w, r.c);
        int left = oc.classify(oc.pobj(x, r.c), oc.pobj(y, mid), w, f, C.id(mid));
        int right = oc.classify(oc.pobj(r.c, x2), oc.pobj(mid, y2), w, C.id(mid), g);
        int got = PQ.cls(t2, mid, P.at(left, r.p), Q.at(right, r.q));
        int want = PQ.obj.act[n][PQ.q[t].cls[(int)ai]];
        if (got != want)
          fail(ErrKind::IllDefinedMap,
               "sequential action depends on the optic representative at " +
                   O.mor_names[n]);
      }
    }
  }
}

void check_strength_lift(const OpticCat& oc, const SetFunctor& P, const SetFunctor& Q,
                         const SeqTensor& PQ) {
  const FinCategory& C = *oc.C;
  const FinCategory& O = oc.O;
  for (int h = 0; h < C.n_mor(); ++h) {
    int c = C.dom(h), d = C.cod(h);
    for (int t = 0; t < O.n_obj(); ++t) {
      auto [x, x2] = oc.unpobj(t);
      int tL = oc.pobj(C.ten(c, x), C.ten(d, x2));
      for (size_t ai = 0; ai < PQ.amb[t].size(); ++ai) {
        const SeqTensor::Rep& r = PQ.amb[t][ai];
        int left = PQ.cls(tL, C.ten(d, r.c), P.at(oc.zeta(h, oc.pobj(x, r.c)), r.p),
                          Q.at(oc.zeta(C.id(d), oc.pobj(r.c, x2)), r.q));
        int right = PQ.cls(tL, C.ten(c, r.c), P.at(oc.zeta(C.id(c), oc.pobj(x, r.c)), r.p),
                           Q.at(oc.zeta(h, oc.pobj(r.c, x2)), r.q));
        if (left != right)
          fail(ErrKind::IllDefinedMap,
               "left and right strength lifts differ through ⊲ at " + C.mor_names[h]);
      }
    }
  }
}

}  // namespace bveng
