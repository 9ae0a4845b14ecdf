#include "bvengine/engine.hpp"

#include <numeric>
#include <sstream>

namespace bveng {

static std::string table_key(const SetFunctor& f) {
  std::ostringstream os;
  for (int c : f.card) os << c << ',';
  os << '|';
  for (const auto& row : f.act) {
    for (int v : row) os << v << ',';
    os << ';';
  }
  return os.str();
}

int Engine::add(SetFunctor f, const std::string& name) {
  validate_functor(f);
  std::string key = table_key(f);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  int id = (int)objs.size();
  objs.push_back(std::move(f));
  names.push_back(name);
  interned.emplace(std::move(key), id);
  return id;
}

const DayTensor& Engine::day_of(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = day_data.find(key);
  if (it != day_data.end()) return it->second;
  DayTensor d = day_tensor(oc->O, objs[a], objs[b], budget);
  return day_data.emplace(key, std::move(d)).first->second;
}

const SeqTensor& Engine::seq_of(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = seq_data.find(key);
  if (it != seq_data.end()) return it->second;
  SeqTensor s = seq_tensor(sb, objs[a], objs[b], budget);
  return seq_data.emplace(key, std::move(s)).first->second;
}

const DayHom& Engine::hom_of(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = hom_data.find(key);
  if (it != hom_data.end()) return it->second;
  DayHom h = day_hom(oc->O, objs[a], objs[b], budget);
  return hom_data.emplace(key, std::move(h)).first->second;
}

int Engine::ten(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = ten_id.find(key);
  if (it != ten_id.end()) return it->second;
  const DayTensor& d = day_of(a, b);
  int id = add(d.obj, "(" + names[a] + "*" + names[b] + ")");
  ten_id[key] = id;
  return id;
}

int Engine::seq(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = seq_id.find(key);
  if (it != seq_id.end()) return it->second;
  const SeqTensor& s = seq_of(a, b);
  int id = add(s.obj, "(" + names[a] + ";" + names[b] + ")");
  seq_id[key] = id;
  return id;
}

int Engine::hom(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = hom_id.find(key);
  if (it != hom_id.end()) return it->second;
  const DayHom& h = hom_of(a, b);
  int id = add(h.obj, "[" + names[a] + "," + names[b] + "]");
  hom_id[key] = id;
  return id;
}

EMor Engine::idm(int a) const { return {a, a, identity_nat(objs[a])}; }

EMor Engine::comp(const EMor& g, const EMor& f) const {
  if (f.dst != g.src)
    fail(ErrKind::TypeMismatch, "composite endpoints do not match: " + names[f.dst] +
                                    " versus " + names[g.src]);
  return {f.src, g.dst, compose_nat(g.t, f.t)};
}

EMor Engine::invert(const EMor& f) const {
  const SetFunctor& A = objs[f.src];
  const SetFunctor& B = objs[f.dst];
  EMor g;
  g.src = f.dst;
  g.dst = f.src;
  g.t.comp.resize(f.t.comp.size());
  for (int o = 0; o < (int)f.t.comp.size(); ++o) {
    if (A.card[o] != B.card[o])
      fail(ErrKind::IllDefinedMap, "cannot invert: carrier sizes differ at object " +
                                       std::to_string(o));
    g.t.comp[o].assign(B.card[o], -1);
    for (int i = 0; i < A.card[o]; ++i) {
      int v = f.t.comp[o][i];
      if (g.t.comp[o][v] >= 0)
        fail(ErrKind::IllDefinedMap, "cannot invert: not injective at object " +
                                         std::to_string(o));
      g.t.comp[o][v] = i;
    }
  }
  return g;
}

EMor Engine::tenM(const EMor& f, const EMor& g) {
  int s = ten(f.src, g.src);
  int d = ten(f.dst, g.dst);
  SetNat t = day_map(day_of(f.src, g.src), day_of(f.dst, g.dst), f.t, g.t);
  return {s, d, std::move(t)};
}

EMor Engine::seqM(const EMor& f, const EMor& g) {
  int s = seq(f.src, g.src);
  int d = seq(f.dst, g.dst);
  SetNat t = seq_map(seq_of(f.src, g.src), seq_of(f.dst, g.dst), f.t, g.t);
  return {s, d, std::move(t)};
}

EMor Engine::homM(const EMor& f, const EMor& g) {
  int s = hom(f.dst, g.src);
  int d = hom(f.src, g.dst);
  SetNat t = day_hom_map(hom_of(f.dst, g.src), hom_of(f.src, g.dst), f.t, g.t);
  return {s, d, std::move(t)};
}

EMor Engine::sym(int a, int b) {
  int s = ten(a, b);
  int d = ten(b, a);
  SetNat t = day_sym(day_of(a, b), day_of(b, a));
  return {s, d, std::move(t)};
}

EMor Engine::assoc(int a, int b, int c) {
  int ab = ten(a, b), bc = ten(b, c);
  int s = ten(ab, c), d = ten(a, bc);
  SetNat t = day_assoc(day_of(a, b), day_of(ab, c), day_of(b, c), day_of(a, bc));
  return {s, d, std::move(t)};
}

EMor Engine::assoc_inv(int a, int b, int c) { return invert(assoc(a, b, c)); }

EMor Engine::lunit(int a) {
  int s = ten(bot, a);
  SetNat t = day_lunit(day_of(bot, a), objs[a]);
  return {s, a, std::move(t)};
}

EMor Engine::lunit_inv(int a) {
  int d = ten(bot, a);
  SetNat t = day_lunit_inv(day_of(bot, a), objs[a]);
  return {a, d, std::move(t)};
}

EMor Engine::runit(int a) {
  int s = ten(a, bot);
  SetNat t = day_runit(day_of(a, bot), objs[a]);
  return {s, a, std::move(t)};
}

EMor Engine::runit_inv(int a) {
  int d = ten(a, bot);
  SetNat t = day_runit_inv(day_of(a, bot), objs[a]);
  return {a, d, std::move(t)};
}

// ⊥(x,c) ≅ C(x,c): an element is a sliding class over (i,i), its morphism is
// the plug with the identity filler, and the inverse picks the residual-x
// representative (x, id_x, h).
int Engine::bot_elt(int x, int c, int h) {
  const FinCategory& C = *oc->C;
  int om = oc->classify(oc->O.unit, oc->pobj(x, c), x, C.id(x), h);
  return oc->O.hom_pos(om);
}

int Engine::bot_mor(int t, int j) const {
  int om = oc->O.hom(oc->O.unit, t)[j];
  return oc->plug(om, oc->C->id(oc->C->unit));
}

EMor Engine::slunit(int a) {
  int s = seq(bot, a);
  const SeqTensor& S = seq_of(bot, a);
  const FinCategory& C = *oc->C;
  const SetFunctor& P = objs[a];
  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int tt = 0; tt < oc->O.n_obj(); ++tt) {
    auto [x, x2] = oc->unpobj(tt);
    t.comp[tt] = lift_class_map(
        S.q[tt],
        [&](int i) {
          const SeqTensor::Rep& r = S.amb[tt][i];
          int h = bot_mor(oc->pobj(x, r.c), r.p);
          return P.at(oc->pure(h, C.id(x2)), r.q);
        },
        "seq left unitor");
  }
  validate_nat(S.obj, P, t);
  return {s, a, std::move(t)};
}

EMor Engine::slunit_inv(int a) {
  int d = seq(bot, a);
  const SeqTensor& S = seq_of(bot, a);
  const FinCategory& C = *oc->C;
  const SetFunctor& P = objs[a];
  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int tt = 0; tt < oc->O.n_obj(); ++tt) {
    auto [x, x2] = oc->unpobj(tt);
    (void)x2;
    int j0 = bot_elt(x, x, C.id(x));
    t.comp[tt].resize(P.card[tt]);
    for (int p = 0; p < P.card[tt]; ++p) t.comp[tt][p] = S.cls(tt, x, j0, p);
  }
  validate_nat(P, S.obj, t);
  return {a, d, std::move(t)};
}

EMor Engine::srunit(int a) {
  int s = seq(a, bot);
  const SeqTensor& S = seq_of(a, bot);
  const FinCategory& C = *oc->C;
  const SetFunctor& P = objs[a];
  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int tt = 0; tt < oc->O.n_obj(); ++tt) {
    auto [x, x2] = oc->unpobj(tt);
    t.comp[tt] = lift_class_map(
        S.q[tt],
        [&](int i) {
          const SeqTensor::Rep& r = S.amb[tt][i];
          int h = bot_mor(oc->pobj(r.c, x2), r.q);
          return P.at(oc->pure(C.id(x), h), r.p);
        },
        "seq right unitor");
  }
  validate_nat(S.obj, P, t);
  return {s, a, std::move(t)};
}

EMor Engine::srunit_inv(int a) {
  int d = seq(a, bot);
  const SeqTensor& S = seq_of(a, bot);
  const FinCategory& C = *oc->C;
  const SetFunctor& P = objs[a];
  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int tt = 0; tt < oc->O.n_obj(); ++tt) {
    auto [x, x2] = oc->unpobj(tt);
    (void)x;
    int j0 = bot_elt(x2, x2, C.id(x2));
    t.comp[tt].resize(P.card[tt]);
    for (int p = 0; p < P.card[tt]; ++p) t.comp[tt][p] = S.cls(tt, x2, p, j0);
  }
  validate_nat(P, S.obj, t);
  return {a, d, std::move(t)};
}

// Interchange (a⊲b)⊗(c⊲d) → (a⊗c)⊲(b⊗d). Every ambient triple is first
// reduced so its optic is residual-free, by absorbing the residual into the
// left factor via the strength action; a residual-free optic splits into an
// input leg and an output leg, which are routed to the two Day factors of
// the target. The map is checked on every representative of the outer Day
// class and of both inner seq classes.
EMor Engine::delta(int a, int b, int c, int d) {
  std::array<int, 4> key{a, b, c, d};
  auto memo = delta_memo.find(key);
  if (memo != delta_memo.end()) return memo->second;

  const FinCategory& C = *oc->C;
  int ab = seq(a, b), cd = seq(c, d);
  int ac = ten(a, c), bd = ten(b, d);
  int s = ten(ab, cd), dsts = seq(ac, bd);
  const DayTensor& L = day_of(ab, cd);
  const SeqTensor& AB = seq_of(a, b);
  const SeqTensor& CD = seq_of(c, d);
  const DayTensor& AC = day_of(a, c);
  const DayTensor& BD = day_of(b, d);
  const SeqTensor& R = seq_of(ac, bd);
  const SetFunctor& ABf = objs[ab];

  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int z = 0; z < oc->O.n_obj(); ++z) {
    auto [z1, z2] = oc->unpobj(z);
    t.comp[z].assign(L.q[z].size(), -1);
    for (int i = 0; i < (int)L.amb[z].size(); ++i) {
      const DayTensor::Rep& r = L.amb[z][i];
      budget.charge(1, "duoidal interchange");
      OpticCat::Raw rw = oc->raw(r.m);
      auto [x1, x2] = oc->unpobj(r.x);
      auto [y1, y2] = oc->unpobj(r.y);
      int Xw = oc->pobj(C.ten(rw.x, x1), C.ten(rw.x, x2));
      int e1w = ABf.at(oc->zeta(C.id(rw.x), r.x), r.p);
      if (L.cls(z, Xw, r.y, oc->pure(rw.f, rw.g), e1w, r.q) != L.q[z].cls[i])
        fail(ErrKind::IllDefinedMap, "duoidal interchange: residual absorption left the class");
      int val = -1;
      for (int i1 = 0; i1 < (int)AB.amb[Xw].size(); ++i1) {
        if (AB.q[Xw].cls[i1] != e1w) continue;
        const SeqTensor::Rep& r1 = AB.amb[Xw][i1];
        for (int i2 = 0; i2 < (int)CD.amb[r.y].size(); ++i2) {
          if (CD.q[r.y].cls[i2] != r.q) continue;
          const SeqTensor::Rep& r2 = CD.amb[r.y][i2];
          budget.charge(1, "duoidal interchange");
          int cdm = C.ten(r1.c, r2.c);
          int first = AC.cls(oc->pobj(z1, cdm), oc->pobj(C.ten(rw.x, x1), r1.c),
                             oc->pobj(y1, r2.c), oc->pure(rw.f, C.id(cdm)), r1.p, r2.p);
          int second = BD.cls(oc->pobj(cdm, z2), oc->pobj(r1.c, C.ten(rw.x, x2)),
                              oc->pobj(r2.c, y2), oc->pure(C.id(cdm), rw.g), r1.q, r2.q);
          int v = R.cls(z, cdm, first, second);
          if (val < 0)
            val = v;
          else if (val != v)
            fail(ErrKind::IllDefinedMap,
                 "duoidal interchange not constant on inner representatives");
        }
      }
      int cl = L.q[z].cls[i];
      if (t.comp[z][cl] < 0)
        t.comp[z][cl] = val;
      else if (t.comp[z][cl] != val)
        fail(ErrKind::IllDefinedMap, "duoidal interchange not constant on classes");
    }
    for (int cl = 0; cl < (int)t.comp[z].size(); ++cl)
      if (t.comp[z][cl] < 0) fail(ErrKind::IllDefinedMap, "duoidal interchange: uncovered class");
  }
  validate_nat(L.obj, R.obj, t);
  EMor res{s, dsts, std::move(t)};
  delta_memo.emplace(key, res);
  return res;
}

EMor Engine::mu() {
  int s = ten(bot, bot);
  SetNat t = day_lunit(day_of(bot, bot), objs[bot]);
  return {s, bot, std::move(t)};
}

EMor Engine::comult() {
  int d = seq(bot, bot);
  const SeqTensor& S = seq_of(bot, bot);
  const FinCategory& C = *oc->C;
  const SetFunctor& B = objs[bot];
  SetNat t;
  t.comp.resize(oc->O.n_obj());
  for (int tt = 0; tt < oc->O.n_obj(); ++tt) {
    auto [x, x2] = oc->unpobj(tt);
    (void)x2;
    int j0 = bot_elt(x, x, C.id(x));
    t.comp[tt].resize(B.card[tt]);
    for (int j = 0; j < B.card[tt]; ++j) t.comp[tt][j] = S.cls(tt, x, j0, j);
  }
  validate_nat(B, S.obj, t);
  return {bot, d, std::move(t)};
}

EMor Engine::ev(int b, int c) {
  int h = hom(b, c);
  int s = ten(h, b);
  SetNat t = day_ev(hom_of(b, c), day_of(h, b), objs[c]);
  return {s, c, std::move(t)};
}

EMor Engine::curry(const EMor& f, int a, int b, int c) {
  if (f.src != ten(a, b) || f.dst != c) fail(ErrKind::TypeMismatch, "curry endpoints");
  int h = hom(b, c);
  SetNat t = day_curry(objs[a], objs[b], objs[c], day_of(a, b), f.t, hom_of(b, c));
  return {a, h, std::move(t)};
}

EMor Engine::uncurry(const EMor& g, int a, int b, int c) {
  if (g.src != a || g.dst != hom(b, c)) fail(ErrKind::TypeMismatch, "uncurry endpoints");
  return comp(ev(b, c), tenM(g, idm(b)));
}

std::vector<SetNat> Engine::homset(int a, int b) { return nat_set(objs[a], objs[b], budget); }

IsoSearch Engine::iso(int a, int b) { return iso_search(objs[a], objs[b], budget); }

std::unique_ptr<Engine> make_engine(const FinCategory& C, long long budget_limit) {
  auto E = std::make_unique<Engine>();
  E->base = C;
  E->base.index();
  E->budget.limit = budget_limit;
  E->oc = build_optic(E->base, E->budget);
  E->sb = optic_seq_base(*E->oc);
  E->bot = E->add(representable(E->oc->O, E->oc->O.unit), "1");
  E->dualizing = E->bot;
  E->seq_fold = E->slunit(E->bot);
  E->point_true = E->idm(E->bot);
  return E;
}

std::unique_ptr<Engine> make_set_engine(long long budget_limit) {
  auto E = make_engine(builtin_I1(), budget_limit);
  SetFunctor K;
  K.base = &E->oc->O;
  K.card = {2};
  K.act = {{0, 1}};
  E->dualizing = E->add(std::move(K), "two");
  int k = E->dualizing;
  int kk = E->seq(k, k);
  const SeqTensor& S = E->seq_of(k, k);
  SetNat m;
  m.comp.resize(1);
  m.comp[0].resize(S.obj.card[0]);
  for (int cl = 0; cl < S.obj.card[0]; ++cl) {
    const SeqTensor::Rep& r = S.rep(0, cl);
    m.comp[0][cl] = r.p & r.q;
  }
  validate_nat(S.obj, E->F(k), m);
  E->seq_fold = {kk, k, std::move(m)};
  SetNat u;
  u.comp = {{1}};
  E->point_true = {E->bot, k, std::move(u)};
  return E;
}

int add_finite_set(Engine& E, int n, const std::string& name) {
  SetFunctor f;
  f.base = &E.oc->O;
  f.card = {n};
  f.act.resize(1);
  f.act[0].resize(n);
  std::iota(f.act[0].begin(), f.act[0].end(), 0);
  return E.add(std::move(f), name);
}

void check_engine_units(Engine& E, int a) {
  auto round = [&](const EMor& f, const EMor& fi, const char* what) {
    validate_nat(E.F(f.src), E.F(f.dst), f.t);
    validate_nat(E.F(fi.src), E.F(fi.dst), fi.t);
    if (!(E.comp(f, fi) == E.idm(f.dst)) || !(E.comp(fi, f) == E.idm(f.src)))
      fail(ErrKind::IdentityViolation,
           std::string(what) + " fails to invert at " + E.names[a]);
  };
  round(E.lunit(a), E.lunit_inv(a), "tensor left unitor");
  round(E.runit(a), E.runit_inv(a), "tensor right unitor");
  round(E.slunit(a), E.slunit_inv(a), "seq left unitor");
  round(E.srunit(a), E.srunit_inv(a), "seq right unitor");
}

void check_engine_monoid(Engine& E) {
  int b = E.bot;
  EMor m = E.mu();
  if (!(m == E.lunit(b)) || !(m == E.runit(b)))
    fail(ErrKind::IdentityViolation, "unit fold disagrees with the unitors");
  EMor lhs = E.comp(m, E.tenM(m, E.idm(b)));
  EMor rhs = E.comp(m, E.comp(E.tenM(E.idm(b), m), E.assoc(b, b, b)));
  if (!(lhs == rhs)) fail(ErrKind::AssocViolation, "unit monoid is not associative");
  EMor dd = E.comult();
  if (!(E.comp(E.slunit(b), dd) == E.idm(b)) || !(E.comp(E.srunit(b), dd) == E.idm(b)))
    fail(ErrKind::IdentityViolation, "unit comultiplication counit law fails");
}

void check_duoidal_units(Engine& E, int a, int b) {
  int ab = E.seq(a, b);
  EMor lhs = E.lunit(ab);
  EMor rhs = E.comp(E.seqM(E.lunit(a), E.lunit(b)),
                    E.comp(E.delta(E.bot, E.bot, a, b), E.tenM(E.comult(), E.idm(ab))));
  if (!(lhs == rhs))
    fail(ErrKind::InterchangeViolation, "left unit compatibility fails at " + E.names[ab]);
  lhs = E.runit(ab);
  rhs = E.comp(E.seqM(E.runit(a), E.runit(b)),
               E.comp(E.delta(a, b, E.bot, E.bot), E.tenM(E.idm(ab), E.comult())));
  if (!(lhs == rhs))
    fail(ErrKind::InterchangeViolation, "right unit compatibility fails at " + E.names[ab]);
  int tab = E.ten(a, b);
  lhs = E.tenM(E.slunit(a), E.slunit(b));
  rhs = E.comp(E.slunit(tab),
               E.comp(E.seqM(E.mu(), E.idm(tab)), E.delta(E.bot, a, E.bot, b)));
  if (!(lhs == rhs))
    fail(ErrKind::InterchangeViolation, "seq left unit compatibility fails at " + E.names[tab]);
  lhs = E.tenM(E.srunit(a), E.srunit(b));
  rhs = E.comp(E.srunit(tab),
               E.comp(E.seqM(E.idm(tab), E.mu()), E.delta(a, E.bot, b, E.bot)));
  if (!(lhs == rhs))
    fail(ErrKind::InterchangeViolation, "seq right unit compatibility fails at " + E.names[tab]);
}

void check_delta_sigma(Engine& E, int a, int b, int c, int d) {
  EMor lhs = E.comp(E.delta(c, d, a, b), E.sym(E.seq(a, b), E.seq(c, d)));
  EMor rhs = E.comp(E.seqM(E.sym(a, c), E.sym(b, d)), E.delta(a, b, c, d));
  if (!(lhs == rhs))
    fail(ErrKind::InterchangeViolation, "interchange does not commute with symmetry");
}

}  // namespace bveng
