#pragma once

#include <memory>

#include "bvengine/setval.hpp"

namespace bveng {

// ---------------------------------------------------------------------------
// Day convolution over a strict symmetric monoidal base B.
// (F⊗G)(z) = ∫^{x,y} B(x⊗y, z) × F(x) × G(y), computed as one union-find
// pass over the two single-slot whiskering relation families.
// ---------------------------------------------------------------------------

struct DayTensor {
  const FinCategory* base = nullptr;
  SetFunctor obj;
  struct Rep {
    int x, y, m, p, q;
  };
  std::vector<std::vector<Rep>> amb;                // per target object z
  std::vector<std::vector<std::vector<int>>> off;   // [z][x][y] block start
  std::vector<Quotient> q;
  std::vector<int> fcard, gcard;

  int amb_index(int z, int x, int y, int m, int p, int q) const;
  int cls(int z, int x, int y, int m, int p, int q) const;
  const Rep& rep(int z, int c) const { return amb[z][q[z].repr[c]]; }
};

DayTensor day_tensor(const FinCategory& B, const SetFunctor& F, const SetFunctor& G,
                     Budget& budget);

// [F,G](x) = natural families t_y : F(y) → G(x⊗y); carrier = lex-sorted
// flattened families, so curry/ev are table lookups.
struct DayHom {
  const FinCategory* base = nullptr;
  SetFunctor obj;
  std::vector<std::vector<std::vector<int>>> fams;  // [x][idx] = flat family
  std::vector<int> ycut;                            // flat offset per y
  std::vector<int> fcard;

  int value(int x, int fam, int y, int e) const { return fams[x][fam][ycut[y] + e]; }
  int find(int x, const std::vector<int>& flat) const;
};

DayHom day_hom(const FinCategory& B, const SetFunctor& F, const SetFunctor& G, Budget& budget);

// Canonical structure maps; every one is verified well-defined on classes
// while it is being built (ill-definedness throws IllDefinedMap).
SetNat day_ev(const DayHom& H, const DayTensor& HF, const SetFunctor& G);
SetNat day_curry(const SetFunctor& F, const SetFunctor& G, const SetFunctor& Hf,
                 const DayTensor& FG, const SetNat& f, const DayHom& H);
SetNat day_sym(const DayTensor& FG, const DayTensor& GF);
SetNat day_assoc(const DayTensor& FG, const DayTensor& FG_H, const DayTensor& GH,
                 const DayTensor& F_GH);
SetNat day_lunit(const DayTensor& JF, const SetFunctor& F);   // J⊗F → F
SetNat day_lunit_inv(const DayTensor& JF, const SetFunctor& F);
SetNat day_runit(const DayTensor& FJ, const SetFunctor& F);   // F⊗J → F
SetNat day_runit_inv(const DayTensor& FJ, const SetFunctor& F);
// functorial action: f⊗g : F⊗G → F'⊗G' for f : F→F', g : G→G'
SetNat day_map(const DayTensor& FG, const DayTensor& FG2, const SetNat& f, const SetNat& g);
// hom functoriality: [f,g] : [B,C] → [B',C'] for f : B'→B, g : C→C'
SetNat day_hom_map(const DayHom& H, const DayHom& H2, const SetNat& f, const SetNat& g);

// ---------------------------------------------------------------------------
// Sequential tensor ∫^c P(x,c) × Q(c,x') over a base whose objects are pairs.
// The base-specific structure (how pairs are encoded, how relations whisker,
// how a base morphism splits into left/right actions) comes in via SeqBase.
// ---------------------------------------------------------------------------

struct SeqBase {
  const FinCategory* base = nullptr;  // category the modules live on
  const FinCategory* mid = nullptr;   // category the middle objects run over
  virtual ~SeqBase() = default;
  virtual int pair_obj(int a, int b) const = 0;
  virtual std::pair<int, int> unpair(int t) const = 0;
  // relation whiskers for a middle morphism m: c→c̄
  virtual int whisker_right(int x, int m) const = 0;  // (x,c) → (x,c̄)
  virtual int whisker_left(int m, int x2) const = 0;  // (c̄,x') → (c,x')
  // action split for a base morphism n: (x,x')→(y,y') at middle c
  virtual int act_mid(int n, int c) const = 0;
  virtual int act_left(int n, int c) const = 0;   // (x,c) → (y, act_mid)
  virtual int act_right(int n, int c) const = 0;  // (c,x') → (act_mid, y')
};

struct SeqTensor {
  const SeqBase* sb = nullptr;
  SetFunctor obj;
  struct Rep {
    int c, p, q;
  };
  std::vector<std::vector<Rep>> amb;   // per base object t
  std::vector<std::vector<int>> off;   // [t][c]
  std::vector<Quotient> q;
  std::vector<int> pcard, qcard;

  int amb_index(int t, int c, int p, int q) const;
  int cls(int t, int c, int p, int q) const;
  const Rep& rep(int t, int cl) const { return amb[t][q[t].repr[cl]]; }
};

SeqTensor seq_tensor(const SeqBase& sb, const SetFunctor& P, const SetFunctor& Q,
                     Budget& budget);
// (f⊲g) on classes
SetNat seq_map(const SeqTensor& PQ, const SeqTensor& PQ2, const SetNat& f, const SetNat& g);

// ---------------------------------------------------------------------------
// Profunctors on C = copresheaves on product(op(C), C).
// ---------------------------------------------------------------------------

struct ProfCtx {
  const FinCategory* C = nullptr;
  FinCategory CO;  // opposite(C)
  FinCategory PC;  // product(CO, C)

  ProfCtx() = default;
  ProfCtx(const ProfCtx&) = delete;
  ProfCtx& operator=(const ProfCtx&) = delete;

  int pobj(int a, int b) const { return a * C->n_obj() + b; }
  std::pair<int, int> unpobj(int t) const { return {t / C->n_obj(), t % C->n_obj()}; }
  // PC morphism from a C-morphism u (used contravariantly) and v
  int pmor(int u, int v) const { return u * C->n_mor() + v; }
};

std::unique_ptr<ProfCtx> make_prof_ctx(const FinCategory& C);

struct ProfSeqBase : SeqBase {
  const ProfCtx* ctx = nullptr;
  int pair_obj(int a, int b) const override { return ctx->pobj(a, b); }
  std::pair<int, int> unpair(int t) const override { return ctx->unpobj(t); }
  int whisker_right(int x, int m) const override {
    return ctx->pmor(ctx->C->id(x), m);
  }
  int whisker_left(int m, int x2) const override {
    return ctx->pmor(m, ctx->C->id(x2));
  }
  int act_mid(int, int c) const override { return c; }
  int act_left(int n, int c) const override {
    return ctx->pmor(n / ctx->C->n_mor(), ctx->C->id(c));
  }
  int act_right(int n, int c) const override {
    return ctx->pmor(ctx->C->id(c), n % ctx->C->n_mor());
  }
};

ProfSeqBase prof_seq_base(const ProfCtx& ctx);

// the hom profunctor 1_C(a,b) = C(a,b) with v∘h∘u actions (the ⊲ unit)
SetFunctor prof_hom_unit(const ProfCtx& ctx);
// the Day unit J = PC((i,i), −), i.e. J(a,b) = C(a,i)×C(i,b)
SetFunctor prof_day_unit(const ProfCtx& ctx);

// duoidal structure maps at the profunctor level, all verified on classes
SetNat prof_delta(const ProfCtx& ctx, const SeqTensor& PQ, const SeqTensor& RS,
                  const DayTensor& lhs, const DayTensor& PR, const DayTensor& QS,
                  const SeqTensor& rhs);
SetNat prof_gamma(const ProfCtx& ctx, const SetFunctor& J, const SeqTensor& one_seq_one);
SetNat prof_comult(const ProfCtx& ctx, const SetFunctor& J, const SeqTensor& JJ);
SetNat prof_mu(const ProfCtx& ctx, const DayTensor& one_day_one, const SetFunctor& one);
SetNat prof_nu(const ProfCtx& ctx, const SetFunctor& J, const SetFunctor& one);
SetNat seq_lunit(const ProfCtx& ctx, const SeqTensor& oneP, const SetFunctor& P);
SetNat seq_lunit_inv(const ProfCtx& ctx, const SeqTensor& oneP, const SetFunctor& P);
SetNat seq_runit(const ProfCtx& ctx, const SeqTensor& Pone, const SetFunctor& P);
SetNat seq_runit_inv(const ProfCtx& ctx, const SeqTensor& Pone, const SetFunctor& P);

// two-sided isomorphism search within budget; absence is data, not an error
struct IsoSearch {
  bool found = false;
  SetNat fwd, bwd;
  long long n_fwd = 0, n_bwd = 0;
  std::vector<int> fcard, gcard;
};
IsoSearch iso_search(const SetFunctor& F, const SetFunctor& G, Budget& budget);

}  // namespace bveng
