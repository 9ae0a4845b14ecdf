#include "bvengine/setval.hpp"

#include <algorithm>
#include <numeric>

namespace bveng {

void validate_functor(const SetFunctor& F) {
  const FinCategory& B = *F.base;
  if ((int)F.card.size() != B.n_obj() || (int)F.act.size() != B.n_mor())
    fail(ErrKind::TypeMismatch, "functor tables sized wrong over " + B.name);
  for (int f = 0; f < B.n_mor(); ++f) {
    if ((int)F.act[f].size() != F.card[B.dom(f)])
      fail(ErrKind::TypeMismatch, "functor action of " + B.mor_names[f] + " sized wrong");
    for (int e : F.act[f])
      if (e < 0 || e >= F.card[B.cod(f)])
        fail(ErrKind::TypeMismatch, "functor action of " + B.mor_names[f] + " out of range");
  }
  for (int a = 0; a < B.n_obj(); ++a)
    for (int e = 0; e < F.card[a]; ++e)
      if (F.at(B.id(a), e) != e)
        fail(ErrKind::IdentityViolation, "functor does not preserve id at " + B.obj_names[a]);
  for (int g = 0; g < B.n_mor(); ++g)
    for (int f = 0; f < B.n_mor(); ++f) {
      if (B.dom(g) != B.cod(f)) continue;
      int gf = B.cmp[g][f];
      for (int e = 0; e < F.card[B.dom(f)]; ++e)
        if (F.at(gf, e) != F.at(g, F.at(f, e)))
          fail(ErrKind::IllDefinedMap, "functor breaks composition at " + B.mor_names[g] + "∘" +
                                           B.mor_names[f]);
    }
}

void validate_nat(const SetFunctor& F, const SetFunctor& G, const SetNat& t) {
  const FinCategory& B = *F.base;
  if ((int)t.comp.size() != B.n_obj()) fail(ErrKind::TypeMismatch, "nat has wrong arity");
  for (int a = 0; a < B.n_obj(); ++a) {
    if ((int)t.comp[a].size() != F.card[a])
      fail(ErrKind::TypeMismatch, "nat component at " + B.obj_names[a] + " sized wrong");
    for (int v : t.comp[a])
      if (v < 0 || v >= G.card[a])
        fail(ErrKind::TypeMismatch, "nat component at " + B.obj_names[a] + " out of range");
  }
  for (int f = 0; f < B.n_mor(); ++f) {
    int a = B.dom(f), b = B.cod(f);
    for (int e = 0; e < F.card[a]; ++e)
      if (t.comp[b][F.at(f, e)] != G.at(f, t.comp[a][e]))
        fail(ErrKind::IllDefinedMap,
             "naturality fails along " + B.mor_names[f] + " at element " + std::to_string(e));
  }
}

SetFunctor representable(const FinCategory& B, int a) {
  SetFunctor F;
  F.base = &B;
  F.card.resize(B.n_obj());
  for (int x = 0; x < B.n_obj(); ++x) F.card[x] = (int)B.hom(a, x).size();
  F.act.resize(B.n_mor());
  for (int f = 0; f < B.n_mor(); ++f) {
    int x = B.dom(f);
    F.act[f].resize(F.card[x]);
    for (int i = 0; i < F.card[x]; ++i)
      F.act[f][i] = B.hom_pos(B.compose(f, B.hom(a, x)[i]));
  }
  return F;
}

SetNat identity_nat(const SetFunctor& F) {
  SetNat t;
  t.comp.resize(F.card.size());
  for (size_t a = 0; a < F.card.size(); ++a) {
    t.comp[a].resize(F.card[a]);
    std::iota(t.comp[a].begin(), t.comp[a].end(), 0);
  }
  return t;
}

SetNat compose_nat(const SetNat& g, const SetNat& f) {
  SetNat t;
  t.comp.resize(f.comp.size());
  for (size_t a = 0; a < f.comp.size(); ++a) {
    t.comp[a].resize(f.comp[a].size());
    for (size_t e = 0; e < f.comp[a].size(); ++e) t.comp[a][e] = g.comp[a][f.comp[a][e]];
  }
  return t;
}

SetNat constant_nat(const SetFunctor& F, const SetFunctor& G, int value) {
  SetNat t;
  t.comp.resize(F.card.size());
  for (size_t a = 0; a < F.card.size(); ++a) t.comp[a].assign(F.card[a], value);
  (void)G;
  return t;
}

namespace {

// Backtracking state for nat_set: one cell per (object, element).
struct NatSearch {
  const SetFunctor& F;
  const SetFunctor& G;
  const FinCategory& B;
  Budget& budget;
  std::vector<int> cell_obj, cell_elt;          // flat cell → (object, element)
  std::vector<std::vector<int>> cell_of;        // [o][e] → flat cell
  std::vector<int> value;                       // flat cell → assigned value or -1
  // constraints[c]: for each morphism f with dom f = obj(c): target cell and f
  struct Edge {
    int f, target;
  };
  std::vector<std::vector<Edge>> out;
  std::vector<SetNat> found;

  NatSearch(const SetFunctor& F_, const SetFunctor& G_, Budget& b)
      : F(F_), G(G_), B(*F_.base), budget(b) {
    cell_of.resize(B.n_obj());
    for (int o = 0; o < B.n_obj(); ++o) {
      cell_of[o].resize(F.card[o]);
      for (int e = 0; e < F.card[o]; ++e) {
        cell_of[o][e] = (int)cell_obj.size();
        cell_obj.push_back(o);
        cell_elt.push_back(e);
      }
    }
    value.assign(cell_obj.size(), -1);
    out.resize(cell_obj.size());
    for (int f = 0; f < B.n_mor(); ++f) {
      int o = B.dom(f);
      for (int e = 0; e < F.card[o]; ++e)
        out[cell_of[o][e]].push_back({f, cell_of[B.cod(f)][F.at(f, e)]});
    }
  }

  // assign cell := v, propagating forced values; records touched cells on
  // the trail; returns false on conflict
  bool assign(int cell, int v, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{cell, v}};
    while (!queue.empty()) {
      auto [c, val] = queue.back();
      queue.pop_back();
      if (value[c] >= 0) {
        if (value[c] != val) return false;
        continue;
      }
      budget.charge(1, "nat_set");
      value[c] = val;
      trail.push_back(c);
      for (const Edge& e : out[c]) queue.push_back({e.target, G.at(e.f, val)});
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void run(int next, std::vector<int>& trail) {
    int n = (int)cell_obj.size();
    while (next < n && value[next] >= 0) ++next;
    if (next == n) {
      SetNat t;
      t.comp.resize(B.n_obj());
      for (int o = 0; o < B.n_obj(); ++o) {
        t.comp[o].resize(F.card[o]);
        for (int e = 0; e < F.card[o]; ++e) t.comp[o][e] = value[cell_of[o][e]];
      }
      found.push_back(std::move(t));
      return;
    }
    int o = cell_obj[next];
    for (int v = 0; v < G.card[o]; ++v) {
      size_t mark = trail.size();
      if (assign(next, v, trail)) run(next + 1, trail);
      undo(trail, mark);
    }
  }
};

}  // namespace

std::vector<SetNat> nat_set(const SetFunctor& F, const SetFunctor& G, Budget& budget) {
  if (F.base != G.base) fail(ErrKind::TypeMismatch, "nat_set: functors on different bases");
  NatSearch s(F, G, budget);
  std::vector<int> trail;
  // a functor with an empty carrier everywhere still has exactly one nat
  s.run(0, trail);
  return std::move(s.found);
}

Quotient quotient_of(UnionFind& uf) {
  int n = (int)uf.parent.size();
  Quotient q;
  q.cls.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (q.cls[r] < 0) {
      q.cls[r] = (int)q.repr.size();
      q.repr.push_back(r);
    }
    q.cls[i] = q.cls[r];
  }
  return q;
}

std::vector<int> lift_class_map(const Quotient& q, const std::function<int(int)>& raw,
                                const char* what) {
  std::vector<int> out(q.size(), -1);
  for (int a = 0; a < (int)q.cls.size(); ++a) {
    int c = q.cls[a], v = raw(a);
    if (out[c] < 0)
      out[c] = v;
    else if (out[c] != v)
      fail(ErrKind::IllDefinedMap, std::string(what) + ": not constant on class " +
                                       std::to_string(c) + " (ambient " + std::to_string(a) + ")");
  }
  return out;
}

PullbackData pullback_functors(const SetFunctor& F, const SetFunctor& G, const SetFunctor& H,
                               const SetNat& f, const SetNat& g) {
  const FinCategory& B = *F.base;
  (void)H;
  PullbackData pb;
  pb.obj.base = &B;
  int n = B.n_obj();
  pb.pairs.resize(n);
  pb.pair_index.resize(n);
  pb.obj.card.resize(n);
  for (int o = 0; o < n; ++o) {
    pb.pair_index[o].assign(F.card[o], std::vector<int>(G.card[o], -1));
    for (int i = 0; i < F.card[o]; ++i)
      for (int j = 0; j < G.card[o]; ++j)
        if (f.comp[o][i] == g.comp[o][j]) {
          pb.pair_index[o][i][j] = (int)pb.pairs[o].size();
          pb.pairs[o].push_back({i, j});
        }
    pb.obj.card[o] = (int)pb.pairs[o].size();
  }
  pb.obj.act.resize(B.n_mor());
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.dom(m), b = B.cod(m);
    pb.obj.act[m].resize(pb.obj.card[a]);
    for (int e = 0; e < pb.obj.card[a]; ++e) {
      auto [i, j] = pb.pairs[a][e];
      int t = pb.pair_index[b][F.at(m, i)][G.at(m, j)];
      if (t < 0) fail(ErrKind::IllDefinedMap, "pullback not closed under actions");
      pb.obj.act[m][e] = t;
    }
  }
  pb.pi1.comp.resize(n);
  pb.pi2.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    for (auto [i, j] : pb.pairs[o]) {
      pb.pi1.comp[o].push_back(i);
      pb.pi2.comp[o].push_back(j);
    }
  }
  return pb;
}

SetNat pullback_mediate(const PullbackData& pb, const SetFunctor& W, const SetNat& u,
                        const SetNat& v) {
  const FinCategory& B = *W.base;
  SetNat m;
  m.comp.resize(B.n_obj());
  for (int o = 0; o < B.n_obj(); ++o) {
    m.comp[o].resize(W.card[o]);
    for (int e = 0; e < W.card[o]; ++e) {
      int t = pb.pair_index[o][u.comp[o][e]][v.comp[o][e]];
      if (t < 0)
        fail(ErrKind::MediatorNotFound, "cone does not commute at " + B.obj_names[o] +
                                            " element " + std::to_string(e));
      m.comp[o][e] = t;
    }
  }
  return m;
}

PushoutData pushout_functors(const SetFunctor& H, const SetFunctor& F, const SetFunctor& G,
                             const SetNat& f, const SetNat& g) {
  const FinCategory& B = *H.base;
  int n = B.n_obj();
  PushoutData po;
  po.q.resize(n);
  po.obj.base = &B;
  po.obj.card.resize(n);
  for (int o = 0; o < n; ++o) {
    UnionFind uf(F.card[o] + G.card[o]);
    for (int e = 0; e < H.card[o]; ++e) uf.unite(f.comp[o][e], F.card[o] + g.comp[o][e]);
    po.q[o] = quotient_of(uf);
    po.obj.card[o] = po.q[o].size();
  }
  po.obj.act.resize(B.n_mor());
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.dom(m), b = B.cod(m);
    po.obj.act[m] = lift_class_map(
        po.q[a],
        [&](int amb) {
          int t = amb < F.card[a] ? po.q[b].cls[F.at(m, amb)]
                                  : po.q[b].cls[F.card[b] + G.at(m, amb - F.card[a])];
          return t;
        },
        "pushout action");
  }
  po.in1.comp.resize(n);
  po.in2.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    po.in1.comp[o].resize(F.card[o]);
    for (int i = 0; i < F.card[o]; ++i) po.in1.comp[o][i] = po.q[o].cls[i];
    po.in2.comp[o].resize(G.card[o]);
    for (int j = 0; j < G.card[o]; ++j) po.in2.comp[o][j] = po.q[o].cls[F.card[o] + j];
  }
  return po;
}

SetNat pushout_mediate(const PushoutData& po, const SetFunctor& W, const SetNat& u,
                       const SetNat& v) {
  const FinCategory& B = *W.base;
  (void)W;
  int n = B.n_obj();
  SetNat m;
  m.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    int nf = (int)u.comp[o].size();
    try {
      m.comp[o] = lift_class_map(
          po.q[o], [&](int amb) { return amb < nf ? u.comp[o][amb] : v.comp[o][amb - nf]; },
          "pushout mediator");
    } catch (const EngineError&) {
      fail(ErrKind::MediatorNotFound, "cocone does not commute at " + B.obj_names[o]);
    }
  }
  return m;
}

ProductData product_functors(const SetFunctor& F, const SetFunctor& G) {
  const FinCategory& B = *F.base;
  int n = B.n_obj();
  ProductData p;
  p.obj.base = &B;
  p.obj.card.resize(n);
  p.right_card = G.card;
  for (int o = 0; o < n; ++o) p.obj.card[o] = F.card[o] * G.card[o];
  p.obj.act.resize(B.n_mor());
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.dom(m), b = B.cod(m);
    p.obj.act[m].resize(p.obj.card[a]);
    for (int i = 0; i < F.card[a]; ++i)
      for (int j = 0; j < G.card[a]; ++j)
        p.obj.act[m][i * G.card[a] + j] = F.at(m, i) * G.card[b] + G.at(m, j);
  }
  p.pi1.comp.resize(n);
  p.pi2.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    p.pi1.comp[o].resize(p.obj.card[o]);
    p.pi2.comp[o].resize(p.obj.card[o]);
    for (int i = 0; i < F.card[o]; ++i)
      for (int j = 0; j < G.card[o]; ++j) {
        p.pi1.comp[o][i * G.card[o] + j] = i;
        p.pi2.comp[o][i * G.card[o] + j] = j;
      }
  }
  return p;
}

SetNat product_mediate(const ProductData& p, const SetFunctor& W, const SetNat& u,
                       const SetNat& v) {
  SetNat m;
  int n = (int)W.card.size();
  m.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    m.comp[o].resize(W.card[o]);
    for (int e = 0; e < W.card[o]; ++e)
      m.comp[o][e] = u.comp[o][e] * p.right_card[o] + v.comp[o][e];
  }
  return m;
}

CoproductData coproduct_functors(const SetFunctor& F, const SetFunctor& G) {
  const FinCategory& B = *F.base;
  int n = B.n_obj();
  CoproductData c;
  c.obj.base = &B;
  c.obj.card.resize(n);
  for (int o = 0; o < n; ++o) c.obj.card[o] = F.card[o] + G.card[o];
  c.obj.act.resize(B.n_mor());
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.dom(m), b = B.cod(m);
    c.obj.act[m].resize(c.obj.card[a]);
    for (int i = 0; i < F.card[a]; ++i) c.obj.act[m][i] = F.at(m, i);
    for (int j = 0; j < G.card[a]; ++j) c.obj.act[m][F.card[a] + j] = F.card[b] + G.at(m, j);
  }
  c.in1.comp.resize(n);
  c.in2.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    c.in1.comp[o].resize(F.card[o]);
    std::iota(c.in1.comp[o].begin(), c.in1.comp[o].end(), 0);
    c.in2.comp[o].resize(G.card[o]);
    std::iota(c.in2.comp[o].begin(), c.in2.comp[o].end(), F.card[o]);
  }
  return c;
}

SetNat coproduct_mediate(const CoproductData& c, const SetFunctor& W, const SetNat& u,
                         const SetNat& v) {
  (void)W;
  int n = (int)c.obj.card.size();
  SetNat m;
  m.comp.resize(n);
  for (int o = 0; o < n; ++o) {
    int nf = (int)u.comp[o].size();
    m.comp[o].resize(c.obj.card[o]);
    for (int i = 0; i < nf; ++i) m.comp[o][i] = u.comp[o][i];
    for (int j = nf; j < c.obj.card[o]; ++j) m.comp[o][j] = v.comp[o][j - nf];
  }
  return m;
}

CoendData coend_diagonal(const FinCategory& C, const SetFunctor& T, Budget& budget) {
  // T lives over product(opposite(C), C)
  int n = C.n_obj();
  auto pobj = [&](int a, int b) { return a * n + b; };
  CoendData ce;
  ce.offset.resize(n);
  for (int c = 0; c < n; ++c) {
    ce.offset[c] = ce.ambient;
    ce.ambient += T.card[pobj(c, c)];
  }
  UnionFind uf(ce.ambient);
  // a C-morphism f appears in the product base as the pair index; morphisms
  // of product(opC, C) are numbered fop*|C_mor| + g with fop = same id in op
  int mc = C.n_mor();
  auto pmor = [&](int fop, int g) { return fop * mc + g; };
  for (int f = 0; f < mc; ++f) {
    int c = C.dom(f), d = C.cod(f);
    // x ∈ T(d,c): T(f,1): T(d,c)→T(c,c),  T(1,f): T(d,c)→T(d,d)
    int left = pmor(f, C.id(c));   // in op(C): d→c
    int right = pmor(C.id(d), f);  // c→d in second slot
    for (int x = 0; x < T.card[pobj(d, c)]; ++x) {
      budget.charge(1, "coend");
      uf.unite(ce.offset[c] + T.at(left, x), ce.offset[d] + T.at(right, x));
    }
  }
  ce.q = quotient_of(uf);
  return ce;
}

std::vector<std::vector<int>> end_diagonal(const FinCategory& C, const SetFunctor& T,
                                           Budget& budget) {
  int n = C.n_obj();
  auto pobj = [&](int a, int b) { return a * n + b; };
  int mc = C.n_mor();
  auto pmor = [&](int fop, int g) { return fop * mc + g; };
  std::vector<std::vector<int>> out;
  std::vector<int> family(n, -1);
  // wedge condition for f: c→d:  T(1,f)(x_c) = T(f,1)(x_d) in T(c,d)
  std::function<void(int)> rec = [&](int c) {
    if (c == n) {
      out.push_back(family);
      return;
    }
    for (int x = 0; x < T.card[pobj(c, c)]; ++x) {
      budget.charge(1, "end");
      family[c] = x;
      bool ok = true;
      for (int f = 0; f < mc && ok; ++f) {
        int a = C.dom(f), b = C.cod(f);
        if (a <= c && b <= c) {
          if (family[a] < 0 || family[b] < 0) continue;
          int lhs = T.at(pmor(C.id(a), f), family[a]);
          int rhs = T.at(pmor(f, C.id(b)), family[b]);
          if (lhs != rhs) ok = false;
        }
      }
      if (ok) rec(c + 1);
    }
    family[c] = -1;
  };
  rec(0);
  return out;
}

}  // namespace bveng
