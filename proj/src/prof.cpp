#include "bvengine/prof.hpp"

#include <algorithm>

namespace bveng {

int DayTensor::amb_index(int z, int x, int y, int m, int p, int q) const {
  const FinCategory& B = *base;
  int k = B.hom_pos(m);
  return off[z][x][y] + (k * fcard[x] + p) * gcard[y] + q;
}

int DayTensor::cls(int z, int x, int y, int m, int p, int q) const {
  return this->q[z].cls[amb_index(z, x, y, m, p, q)];
}

DayTensor day_tensor(const FinCategory& B, const SetFunctor& F, const SetFunctor& G,
                     Budget& budget) {
  DayTensor D;
  D.base = &B;
  D.fcard = F.card;
  D.gcard = G.card;
  int n = B.n_obj();
  D.amb.resize(n);
  D.off.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  D.q.resize(n);

  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        D.off[z][x][y] = (int)D.amb[z].size();
        for (int m : B.hom(B.ten(x, y), z))
          for (int p = 0; p < F.card[x]; ++p)
            for (int qq = 0; qq < G.card[y]; ++qq) D.amb[z].push_back({x, y, m, p, qq});
      }
    budget.charge((long long)D.amb[z].size(), "day_tensor ambient");
  }

  for (int z = 0; z < n; ++z) {
    UnionFind uf((int)D.amb[z].size());
    // left slot: m'∘(u⊗1) with p  ~  m' with F(u)p
    for (int u = 0; u < B.n_mor(); ++u) {
      int x = B.dom(u), x2 = B.cod(u);
      for (int y = 0; y < n; ++y) {
        int w = B.ten_m(u, B.id(y));
        for (int m2 : B.hom(B.ten(x2, y), z)) {
          int m1 = B.compose(m2, w);
          for (int p = 0; p < F.card[x]; ++p)
            for (int qq = 0; qq < G.card[y]; ++qq) {
              budget.charge(1, "day_tensor relations");
              uf.unite(D.amb_index(z, x, y, m1, p, qq),
                       D.amb_index(z, x2, y, m2, F.at(u, p), qq));
            }
        }
      }
    }
    // right slot
    for (int v = 0; v < B.n_mor(); ++v) {
      int y = B.dom(v), y2 = B.cod(v);
      for (int x = 0; x < n; ++x) {
        int w = B.ten_m(B.id(x), v);
        for (int m2 : B.hom(B.ten(x, y2), z)) {
          int m1 = B.compose(m2, w);
          for (int p = 0; p < F.card[x]; ++p)
            for (int qq = 0; qq < G.card[y]; ++qq) {
              budget.charge(1, "day_tensor relations");
              uf.unite(D.amb_index(z, x, y, m1, p, qq),
                       D.amb_index(z, x, y2, m2, p, G.at(v, qq)));
            }
        }
      }
    }
    D.q[z] = quotient_of(uf);
  }

  D.obj.base = &B;
  D.obj.card.resize(n);
  for (int z = 0; z < n; ++z) D.obj.card[z] = D.q[z].size();
  D.obj.act.resize(B.n_mor());
  for (int w = 0; w < B.n_mor(); ++w) {
    int z = B.dom(w), z2 = B.cod(w);
    D.obj.act[w] = lift_class_map(
        D.q[z],
        [&](int a) {
          const DayTensor::Rep& r = D.amb[z][a];
          return D.cls(z2, r.x, r.y, B.compose(w, r.m), r.p, r.q);
        },
        "day_tensor action");
  }
  return D;
}

int DayHom::find(int x, const std::vector<int>& flat) const {
  const auto& v = fams[x];
  auto it = std::lower_bound(v.begin(), v.end(), flat);
  if (it == v.end() || *it != flat) return -1;
  return (int)(it - v.begin());
}

DayHom day_hom(const FinCategory& B, const SetFunctor& F, const SetFunctor& G, Budget& budget) {
  DayHom H;
  H.base = &B;
  H.fcard = F.card;
  int n = B.n_obj();
  H.ycut.assign(n + 1, 0);
  for (int y = 0; y < n; ++y) H.ycut[y + 1] = H.ycut[y] + F.card[y];
  H.fams.resize(n);
  for (int x = 0; x < n; ++x) {
    SetFunctor S;  // G(x⊗−)
    S.base = &B;
    S.card.resize(n);
    for (int y = 0; y < n; ++y) S.card[y] = G.card[B.ten(x, y)];
    S.act.resize(B.n_mor());
    for (int m = 0; m < B.n_mor(); ++m) S.act[m] = G.act[B.ten_m(B.id(x), m)];
    for (const SetNat& t : nat_set(F, S, budget)) {
      std::vector<int> flat;
      flat.reserve(H.ycut[n]);
      for (int y = 0; y < n; ++y) flat.insert(flat.end(), t.comp[y].begin(), t.comp[y].end());
      H.fams[x].push_back(std::move(flat));
    }
  }
  H.obj.base = &B;
  H.obj.card.resize(n);
  for (int x = 0; x < n; ++x) H.obj.card[x] = (int)H.fams[x].size();
  H.obj.act.resize(B.n_mor());
  for (int m = 0; m < B.n_mor(); ++m) {
    int x = B.dom(m), x2 = B.cod(m);
    H.obj.act[m].resize(H.obj.card[x]);
    for (int fi = 0; fi < H.obj.card[x]; ++fi) {
      std::vector<int> flat(H.ycut[n]);
      for (int y = 0; y < n; ++y) {
        int w = B.ten_m(m, B.id(y));
        for (int e = 0; e < F.card[y]; ++e)
          flat[H.ycut[y] + e] = G.at(w, H.value(x, fi, y, e));
      }
      int idx = H.find(x2, flat);
      if (idx < 0)
        fail(ErrKind::IllDefinedMap, "day_hom action leaves the family carrier");
      H.obj.act[m][fi] = idx;
    }
  }
  return H;
}

SetNat day_ev(const DayHom& H, const DayTensor& HF, const SetFunctor& G) {
  const FinCategory& B = *H.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z)
    t.comp[z] = lift_class_map(
        HF.q[z],
        [&](int a) {
          const DayTensor::Rep& r = HF.amb[z][a];
          return G.at(r.m, H.value(r.x, r.p, r.y, r.q));
        },
        "day_ev");
  return t;
}

SetNat day_curry(const SetFunctor& F, const SetFunctor& G, const SetFunctor& Hf,
                 const DayTensor& FG, const SetNat& f, const DayHom& H) {
  const FinCategory& B = *FG.base;
  (void)Hf;
  int n = B.n_obj();
  SetNat t;
  t.comp.resize(n);
  for (int x = 0; x < n; ++x) {
    t.comp[x].resize(F.card[x]);
    for (int p = 0; p < F.card[x]; ++p) {
      std::vector<int> flat(H.ycut[n]);
      for (int y = 0; y < n; ++y) {
        int z = B.ten(x, y);
        for (int e = 0; e < G.card[y]; ++e)
          flat[H.ycut[y] + e] = f.comp[z][FG.cls(z, x, y, B.id(z), p, e)];
      }
      int idx = H.find(x, flat);
      if (idx < 0) fail(ErrKind::IllDefinedMap, "day_curry produced a non-natural family");
      t.comp[x][p] = idx;
    }
  }
  return t;
}

SetNat day_sym(const DayTensor& FG, const DayTensor& GF) {
  const FinCategory& B = *FG.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z)
    t.comp[z] = lift_class_map(
        FG.q[z],
        [&](int a) {
          const DayTensor::Rep& r = FG.amb[z][a];
          return GF.cls(z, r.y, r.x, B.compose(r.m, B.sym(r.y, r.x)), r.q, r.p);
        },
        "day_sym");
  return t;
}

SetNat day_assoc(const DayTensor& FG, const DayTensor& FG_H, const DayTensor& GH,
                 const DayTensor& F_GH) {
  const FinCategory& B = *FG.base;
  int n = B.n_obj();
  SetNat t;
  t.comp.resize(n);
  for (int z = 0; z < n; ++z) {
    t.comp[z].assign(FG_H.q[z].size(), -1);
    for (int a = 0; a < (int)FG_H.amb[z].size(); ++a) {
      const DayTensor::Rep& r1 = FG_H.amb[z][a];
      int V = r1.x, W = r1.y;
      for (int a2 = 0; a2 < (int)FG.amb[V].size(); ++a2) {
        if (FG.q[V].cls[a2] != r1.p) continue;
        const DayTensor::Rep& r2 = FG.amb[V][a2];
        int yw = B.ten(r2.y, W);
        int mm = B.compose(r1.m, B.ten_m(r2.m, B.id(W)));
        int inner = GH.cls(yw, r2.y, W, B.id(yw), r2.q, r1.q);
        int target = F_GH.cls(z, r2.x, yw, mm, r2.p, inner);
        int c = FG_H.q[z].cls[a];
        if (t.comp[z][c] < 0)
          t.comp[z][c] = target;
        else if (t.comp[z][c] != target)
          fail(ErrKind::IllDefinedMap, "day_assoc not constant on classes");
      }
    }
    for (int c = 0; c < (int)t.comp[z].size(); ++c)
      if (t.comp[z][c] < 0) fail(ErrKind::IllDefinedMap, "day_assoc: uncovered class");
  }
  return t;
}

SetNat day_lunit(const DayTensor& JF, const SetFunctor& F) {
  const FinCategory& B = *JF.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z)
    t.comp[z] = lift_class_map(
        JF.q[z],
        [&](int a) {
          const DayTensor::Rep& r = JF.amb[z][a];
          int jm = B.hom(B.unit, r.x)[r.p];
          return F.at(B.compose(r.m, B.ten_m(jm, B.id(r.y))), r.q);
        },
        "day_lunit");
  return t;
}

SetNat day_lunit_inv(const DayTensor& JF, const SetFunctor& F) {
  const FinCategory& B = *JF.base;
  int idpos = B.hom_pos(B.id(B.unit));
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z) {
    t.comp[z].resize(F.card[z]);
    for (int p = 0; p < F.card[z]; ++p)
      t.comp[z][p] = JF.cls(z, B.unit, z, B.id(z), idpos, p);
  }
  return t;
}

SetNat day_runit(const DayTensor& FJ, const SetFunctor& F) {
  const FinCategory& B = *FJ.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z)
    t.comp[z] = lift_class_map(
        FJ.q[z],
        [&](int a) {
          const DayTensor::Rep& r = FJ.amb[z][a];
          int jm = B.hom(B.unit, r.y)[r.q];
          return F.at(B.compose(r.m, B.ten_m(B.id(r.x), jm)), r.p);
        },
        "day_runit");
  return t;
}

SetNat day_runit_inv(const DayTensor& FJ, const SetFunctor& F) {
  const FinCategory& B = *FJ.base;
  int idpos = B.hom_pos(B.id(B.unit));
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z) {
    t.comp[z].resize(F.card[z]);
    for (int p = 0; p < F.card[z]; ++p)
      t.comp[z][p] = FJ.cls(z, z, B.unit, B.id(z), p, idpos);
  }
  return t;
}

SetNat day_map(const DayTensor& FG, const DayTensor& FG2, const SetNat& f, const SetNat& g) {
  const FinCategory& B = *FG.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int z = 0; z < B.n_obj(); ++z)
    t.comp[z] = lift_class_map(
        FG.q[z],
        [&](int a) {
          const DayTensor::Rep& r = FG.amb[z][a];
          return FG2.cls(z, r.x, r.y, r.m, f.comp[r.x][r.p], g.comp[r.y][r.q]);
        },
        "day_map");
  return t;
}

SetNat day_hom_map(const DayHom& H, const DayHom& H2, const SetNat& f, const SetNat& g) {
  const FinCategory& B = *H.base;
  int n = B.n_obj();
  SetNat t;
  t.comp.resize(n);
  for (int x = 0; x < n; ++x) {
    t.comp[x].resize(H.obj.card[x]);
    for (int fi = 0; fi < H.obj.card[x]; ++fi) {
      std::vector<int> flat(H2.ycut[n]);
      for (int y = 0; y < n; ++y)
        for (int e = 0; e < H2.fcard[y]; ++e)
          flat[H2.ycut[y] + e] = g.comp[B.ten(x, y)][H.value(x, fi, y, f.comp[y][e])];
      int idx = H2.find(x, flat);
      if (idx < 0) fail(ErrKind::IllDefinedMap, "day_hom_map left the family carrier");
      t.comp[x][fi] = idx;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

int SeqTensor::amb_index(int t, int c, int p, int q) const {
  return off[t][c] + p * qcard[sb->pair_obj(c, sb->unpair(t).second)] + q;
}

int SeqTensor::cls(int t, int c, int p, int q) const {
  return this->q[t].cls[amb_index(t, c, p, q)];
}

SeqTensor seq_tensor(const SeqBase& sb, const SetFunctor& P, const SetFunctor& Q,
                     Budget& budget) {
  const FinCategory& B = *sb.base;
  const FinCategory& C = *sb.mid;
  SeqTensor S;
  S.sb = &sb;
  S.pcard = P.card;
  S.qcard = Q.card;
  int n = B.n_obj(), nc = C.n_obj();
  S.amb.resize(n);
  S.off.assign(n, std::vector<int>(nc, 0));
  S.q.resize(n);
  for (int t = 0; t < n; ++t) {
    auto [x, x2] = sb.unpair(t);
    for (int c = 0; c < nc; ++c) {
      S.off[t][c] = (int)S.amb[t].size();
      int pc = P.card[sb.pair_obj(x, c)], qc = Q.card[sb.pair_obj(c, x2)];
      for (int p = 0; p < pc; ++p)
        for (int qq = 0; qq < qc; ++qq) S.amb[t].push_back({c, p, qq});
    }
    budget.charge((long long)S.amb[t].size(), "seq_tensor ambient");
    UnionFind uf((int)S.amb[t].size());
    for (int m = 0; m < C.n_mor(); ++m) {
      int c = C.dom(m), cb = C.cod(m);
      int rw = sb.whisker_right(x, m);   // (x,c) → (x,c̄)
      int lw = sb.whisker_left(m, x2);   // (c̄,x') → (c,x')
      for (int p = 0; p < P.card[sb.pair_obj(x, c)]; ++p)
        for (int qq = 0; qq < Q.card[sb.pair_obj(cb, x2)]; ++qq) {
          budget.charge(1, "seq_tensor relations");
          uf.unite(S.amb_index(t, cb, P.at(rw, p), qq), S.amb_index(t, c, p, Q.at(lw, qq)));
        }
    }
    S.q[t] = quotient_of(uf);
  }
  S.obj.base = &B;
  S.obj.card.resize(n);
  for (int t = 0; t < n; ++t) S.obj.card[t] = S.q[t].size();
  S.obj.act.resize(B.n_mor());
  for (int nmor = 0; nmor < B.n_mor(); ++nmor) {
    int t = B.dom(nmor), t2 = B.cod(nmor);
    S.obj.act[nmor] = lift_class_map(
        S.q[t],
        [&](int a) {
          const SeqTensor::Rep& r = S.amb[t][a];
          return S.cls(t2, sb.act_mid(nmor, r.c), P.at(sb.act_left(nmor, r.c), r.p),
                       Q.at(sb.act_right(nmor, r.c), r.q));
        },
        "seq_tensor action");
  }
  return S;
}

SetNat seq_map(const SeqTensor& PQ, const SeqTensor& PQ2, const SetNat& f, const SetNat& g) {
  const SeqBase& sb = *PQ.sb;
  const FinCategory& B = *sb.base;
  SetNat t;
  t.comp.resize(B.n_obj());
  for (int to = 0; to < B.n_obj(); ++to) {
    auto [x, x2] = sb.unpair(to);
    t.comp[to] = lift_class_map(
        PQ.q[to],
        [&](int a) {
          const SeqTensor::Rep& r = PQ.amb[to][a];
          return PQ2.cls(to, r.c, f.comp[sb.pair_obj(x, r.c)][r.p],
                         g.comp[sb.pair_obj(r.c, x2)][r.q]);
        },
        "seq_map");
  }
  return t;
}

// ---------------------------------------------------------------------------

std::unique_ptr<ProfCtx> make_prof_ctx(const FinCategory& C) {
  auto ctx = std::make_unique<ProfCtx>();
  ctx->C = &C;
  ctx->CO = opposite(C);
  ctx->PC = product(ctx->CO, C);
  validate_category(ctx->PC);
  return ctx;
}

ProfSeqBase prof_seq_base(const ProfCtx& ctx) {
  ProfSeqBase sb;
  sb.ctx = &ctx;
  sb.base = &ctx.PC;
  sb.mid = ctx.C;
  return sb;
}

SetFunctor prof_hom_unit(const ProfCtx& ctx) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  SetFunctor F;
  F.base = &PC;
  F.card.resize(PC.n_obj());
  for (int a = 0; a < C.n_obj(); ++a)
    for (int b = 0; b < C.n_obj(); ++b)
      F.card[ctx.pobj(a, b)] = (int)C.hom(a, b).size();
  F.act.resize(PC.n_mor());
  for (int pm = 0; pm < PC.n_mor(); ++pm) {
    int u = pm / C.n_mor(), v = pm % C.n_mor();
    int a = C.cod(u), b = C.dom(v);  // domain object of pm is (a,b)
    F.act[pm].resize(F.card[ctx.pobj(a, b)]);
    for (int h = 0; h < F.card[ctx.pobj(a, b)]; ++h)
      F.act[pm][h] = C.hom_pos(C.compose(v, C.compose(C.hom(a, b)[h], u)));
  }
  return F;
}

SetFunctor prof_day_unit(const ProfCtx& ctx) {
  return representable(ctx.PC, ctx.pobj(ctx.C->unit, ctx.C->unit));
}

SetNat prof_delta(const ProfCtx& ctx, const SeqTensor& PQ, const SeqTensor& RS,
                  const DayTensor& lhs, const DayTensor& PR, const DayTensor& QS,
                  const SeqTensor& rhs) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  int MC = C.n_mor();
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int zz = 0; zz < PC.n_obj(); ++zz) {
    auto [z, z2] = ctx.unpobj(zz);
    t.comp[zz].assign(lhs.q[zz].size(), -1);
    for (int a = 0; a < (int)lhs.amb[zz].size(); ++a) {
      const DayTensor::Rep& r = lhs.amb[zz][a];
      int u = r.m / MC, v = r.m % MC;
      for (int a1 = 0; a1 < (int)PQ.amb[r.x].size(); ++a1) {
        if (PQ.q[r.x].cls[a1] != r.p) continue;
        const SeqTensor::Rep& r1 = PQ.amb[r.x][a1];
        auto [x, x2] = ctx.unpobj(r.x);
        for (int a2 = 0; a2 < (int)RS.amb[r.y].size(); ++a2) {
          if (RS.q[r.y].cls[a2] != r.q) continue;
          const SeqTensor::Rep& r2 = RS.amb[r.y][a2];
          auto [y, y2] = ctx.unpobj(r.y);
          int cd = C.ten(r1.c, r2.c);
          int first = PR.cls(ctx.pobj(z, cd), ctx.pobj(x, r1.c), ctx.pobj(y, r2.c),
                             ctx.pmor(u, C.id(cd)), r1.p, r2.p);
          int second = QS.cls(ctx.pobj(cd, z2), ctx.pobj(r1.c, x2), ctx.pobj(r2.c, y2),
                              ctx.pmor(C.id(cd), v), r1.q, r2.q);
          int target = rhs.cls(zz, cd, first, second);
          if (t.comp[zz][lhs.q[zz].cls[a]] < 0)
            t.comp[zz][lhs.q[zz].cls[a]] = target;
          else if (t.comp[zz][lhs.q[zz].cls[a]] != target)
            fail(ErrKind::IllDefinedMap, "duoidal interchange not constant on classes");
        }
      }
    }
    for (int c : t.comp[zz])
      if (c < 0) fail(ErrKind::IllDefinedMap, "duoidal interchange: uncovered class");
  }
  return t;
}

SetNat prof_gamma(const ProfCtx& ctx, const SetFunctor& J, const SeqTensor& one_seq_one) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  int unit_pc = ctx.pobj(C.unit, C.unit);
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int ab = 0; ab < PC.n_obj(); ++ab) {
    t.comp[ab].resize(J.card[ab]);
    for (int j = 0; j < J.card[ab]; ++j) {
      int pcm = PC.hom(unit_pc, ab)[j];
      int u = pcm / C.n_mor(), v = pcm % C.n_mor();  // u: a→i, v: i→b
      t.comp[ab][j] = one_seq_one.cls(ab, C.unit, C.hom_pos(u), C.hom_pos(v));
    }
  }
  return t;
}

SetNat prof_comult(const ProfCtx& ctx, const SetFunctor& J, const SeqTensor& JJ) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  int unit_pc = ctx.pobj(C.unit, C.unit);
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int ab = 0; ab < PC.n_obj(); ++ab) {
    auto [a, b] = ctx.unpobj(ab);
    t.comp[ab].resize(J.card[ab]);
    for (int j = 0; j < J.card[ab]; ++j) {
      int pcm = PC.hom(unit_pc, ab)[j];
      int u = pcm / C.n_mor(), v = pcm % C.n_mor();  // u: a→i, v: i→b
      int left = PC.hom_pos(ctx.pmor(u, C.id(C.unit)));   // (u, id): J element at (a,i)
      int right = PC.hom_pos(ctx.pmor(C.id(C.unit), v));  // (id, v): J element at (i,b)
      (void)a;
      (void)b;
      t.comp[ab][j] = JJ.cls(ab, C.unit, left, right);
    }
  }
  return t;
}

SetNat prof_mu(const ProfCtx& ctx, const DayTensor& one_day_one, const SetFunctor& one) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  (void)one;
  int MC = C.n_mor();
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int zz = 0; zz < PC.n_obj(); ++zz)
    t.comp[zz] = lift_class_map(
        one_day_one.q[zz],
        [&](int a) {
          const DayTensor::Rep& r = one_day_one.amb[zz][a];
          int u = r.m / MC, v = r.m % MC;
          auto [x, x2] = ctx.unpobj(r.x);
          auto [y, y2] = ctx.unpobj(r.y);
          int h1 = C.hom(x, x2)[r.p], h2 = C.hom(y, y2)[r.q];
          return C.hom_pos(C.compose(v, C.compose(C.ten_m(h1, h2), u)));
        },
        "prof_mu");
  return t;
}

SetNat prof_nu(const ProfCtx& ctx, const SetFunctor& J, const SetFunctor& one) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  (void)one;
  int unit_pc = ctx.pobj(C.unit, C.unit);
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int ab = 0; ab < PC.n_obj(); ++ab) {
    t.comp[ab].resize(J.card[ab]);
    for (int j = 0; j < J.card[ab]; ++j) {
      int pcm = PC.hom(unit_pc, ab)[j];
      int u = pcm / C.n_mor(), v = pcm % C.n_mor();
      t.comp[ab][j] = C.hom_pos(C.compose(v, u));
    }
  }
  return t;
}

SetNat seq_lunit(const ProfCtx& ctx, const SeqTensor& oneP, const SetFunctor& P) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int to = 0; to < PC.n_obj(); ++to) {
    auto [x, x2] = ctx.unpobj(to);
    t.comp[to] = lift_class_map(
        oneP.q[to],
        [&](int a) {
          const SeqTensor::Rep& r = oneP.amb[to][a];
          int h = C.hom(x, r.c)[r.p];
          return P.at(ctx.pmor(h, C.id(x2)), r.q);
        },
        "seq_lunit");
  }
  return t;
}

SetNat seq_lunit_inv(const ProfCtx& ctx, const SeqTensor& oneP, const SetFunctor& P) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int to = 0; to < PC.n_obj(); ++to) {
    auto [x, x2] = ctx.unpobj(to);
    (void)x2;
    t.comp[to].resize(P.card[to]);
    for (int p = 0; p < P.card[to]; ++p)
      t.comp[to][p] = oneP.cls(to, x, C.hom_pos(C.id(x)), p);
  }
  return t;
}

SetNat seq_runit(const ProfCtx& ctx, const SeqTensor& Pone, const SetFunctor& P) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int to = 0; to < PC.n_obj(); ++to) {
    auto [x, x2] = ctx.unpobj(to);
    (void)x;
    t.comp[to] = lift_class_map(
        Pone.q[to],
        [&](int a) {
          const SeqTensor::Rep& r = Pone.amb[to][a];
          int h = C.hom(r.c, x2)[r.q];
          return P.at(ctx.pmor(C.id(x), h), r.p);
        },
        "seq_runit");
  }
  return t;
}

SetNat seq_runit_inv(const ProfCtx& ctx, const SeqTensor& Pone, const SetFunctor& P) {
  const FinCategory& C = *ctx.C;
  const FinCategory& PC = ctx.PC;
  SetNat t;
  t.comp.resize(PC.n_obj());
  for (int to = 0; to < PC.n_obj(); ++to) {
    auto [x, x2] = ctx.unpobj(to);
    (void)x;
    t.comp[to].resize(P.card[to]);
    for (int p = 0; p < P.card[to]; ++p)
      t.comp[to][p] = Pone.cls(to, x2, p, C.hom_pos(C.id(x2)));
  }
  return t;
}

IsoSearch iso_search(const SetFunctor& F, const SetFunctor& G, Budget& budget) {
  IsoSearch r;
  r.fcard = F.card;
  r.gcard = G.card;
  auto fwd = nat_set(F, G, budget);
  auto bwd = nat_set(G, F, budget);
  r.n_fwd = (long long)fwd.size();
  r.n_bwd = (long long)bwd.size();
  SetNat idF = identity_nat(F), idG = identity_nat(G);
  for (const SetNat& f : fwd)
    for (const SetNat& g : bwd) {
      budget.charge(1, "iso_search");
      if (compose_nat(g, f) == idF && compose_nat(f, g) == idG) {
        r.found = true;
        r.fwd = f;
        r.bwd = g;
        return r;
      }
    }
  return r;
}

}  // namespace bveng
