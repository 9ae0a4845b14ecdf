#pragma once

#include <array>
#include <memory>

#include "bvengine/prof.hpp"

namespace bveng {

// ---------------------------------------------------------------------------
// The category of optics over a strict symmetric monoidal C, materialized as
// a FinCategory and passed through the full validator. Objects are pairs
// (a,a') encoded a*|C|+a'. A morphism (a,a') → (b,b') is a sliding class of
// triples (x, f: b → x⊗a, g: x⊗a' → b'): for m: x→x̄ the triples
// (x, f, ḡ∘(m⊗1)) and (x̄, (m⊗1)∘f, ḡ) are identified. Composition tensors
// the residuals; every table is checked for representative independence
// while it is built.
// ---------------------------------------------------------------------------

struct OpticCat {
  const FinCategory* C = nullptr;
  FinCategory O;

  struct Block {
    std::vector<std::array<int, 3>> amb;  // raw triples (x, f, g)
    std::vector<int> xoff;                // ambient start per residual x
    Quotient q;
    int mor_off = 0;  // global index of this block's class 0
  };
  std::vector<Block> blocks;  // indexed by src * n_obj(O) + dst

  OpticCat() = default;
  OpticCat(const OpticCat&) = delete;
  OpticCat& operator=(const OpticCat&) = delete;

  int pobj(int a, int a2) const { return a * C->n_obj() + a2; }
  std::pair<int, int> unpobj(int t) const { return {t / C->n_obj(), t % C->n_obj()}; }
  const Block& block(int src, int dst) const { return blocks[src * O.n_obj() + dst]; }

  int amb_index(int src, int dst, int x, int f, int g) const;
  // class of a raw triple, as a global O-morphism index
  int classify(int src, int dst, int x, int f, int g) const;
  struct Raw {
    int x, f, g;
  };
  Raw raw(int omor) const;  // canonical (minimal-ambient) representative

  // residual-free optic from u: b→a, v: a'→b'
  int pure(int u, int v) const;
  // strength st_w : 𝐚 → (w⊗a, w⊗a'), i.e. ζ at id_w
  int strength(int w, int src) const { return zeta(C->id(w), src); }
  // the optic (c, id, h⊗id) : (x,x') → (c⊗x, d⊗x') for h: c→d
  int zeta(int h, int src) const;
  // fill the hole: optic (a,a')→(b,b') plus φ ∈ C(a,a') gives C(b,b'),
  // verified over every representative
  int plug(int omor, int phi) const;
};

std::unique_ptr<OpticCat> build_optic(const FinCategory& C, Budget& budget);

// The context module C_𝐚(x,x') = C(x⊗a, x'⊗a'), an optic acting by
// h ↦ (g⊗1)∘(1_w⊗h)∘(f⊗1); the table is verified over all representatives.
SetFunctor comb_module(const OpticCat& oc, int a, int a2);

// ⊲ on modules over optics: middle objects run over C, relations whisker
// with pure optics, and an optic (w,f,g) acts by splitting around w⊗c.
struct OpticSeqBase : SeqBase {
  const OpticCat* oc = nullptr;
  int pair_obj(int a, int b) const override { return oc->pobj(a, b); }
  std::pair<int, int> unpair(int t) const override { return oc->unpobj(t); }
  int whisker_right(int x, int m) const override {
    return oc->pure(oc->C->id(x), m);
  }
  int whisker_left(int m, int x2) const override {
    return oc->pure(m, oc->C->id(x2));
  }
  int act_mid(int n, int c) const override {
    return oc->C->ten(oc->raw(n).x, c);
  }
  int act_left(int n, int c) const override;
  int act_right(int n, int c) const override;
};

OpticSeqBase optic_seq_base(const OpticCat& oc);

// Exhaustive checks, throwing IllDefinedMap with a witness on divergence:
// the ⊲ action does not depend on which representative of an optic is used
void check_seq_action_reps(const OpticCat& oc, const SetFunctor& P, const SetFunctor& Q,
                           const SeqTensor& PQ);
// lifting a strength morphism ζ(h) through P⊲Q via the left route (middle
// d⊗c) and the right route (middle c⊗c) lands in the same class
void check_strength_lift(const OpticCat& oc, const SetFunctor& P, const SetFunctor& Q,
                         const SeqTensor& PQ);

}  // namespace bveng
