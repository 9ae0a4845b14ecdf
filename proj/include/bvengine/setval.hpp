#pragma once

#include <functional>
#include <vector>

#include "bvengine/finbase.hpp"

namespace bveng {

// A functor base → FinSet given by carrier sizes and action tables.
// Carrier elements are 0..card[o)-1; act[f] maps card[dom f] → card[cod f].
struct SetFunctor {
  const FinCategory* base = nullptr;
  std::vector<int> card;
  std::vector<std::vector<int>> act;

  int at(int f, int e) const { return act[f][e]; }
};

void validate_functor(const SetFunctor& F);

// Componentwise map F ⇒ G between functors on the same base.
struct SetNat {
  std::vector<std::vector<int>> comp;
  bool operator==(const SetNat& o) const = default;
};

void validate_nat(const SetFunctor& F, const SetFunctor& G, const SetNat& t);

// y_a = base(a,−) with postcomposition actions.
SetFunctor representable(const FinCategory& B, int a);

// All natural transformations F ⇒ G, found by cell-wise backtracking with
// forced propagation along every morphism; the budget is charged once per
// candidate cell assignment (including forced ones).
std::vector<SetNat> nat_set(const SetFunctor& F, const SetFunctor& G, Budget& budget);

SetNat identity_nat(const SetFunctor& F);
SetNat compose_nat(const SetNat& g, const SetNat& f);  // g∘f componentwise
SetNat constant_nat(const SetFunctor& F, const SetFunctor& G, int value);

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Quotient with deterministic class numbering: classes ordered by their
// minimal ambient index, which is also the canonical representative.
struct Quotient {
  std::vector<int> cls;   // ambient → class
  std::vector<int> repr;  // class → minimal ambient index
  int size() const { return (int)repr.size(); }
};

Quotient quotient_of(UnionFind& uf);

// Lift a map on ambient elements to the quotient, verifying it is constant
// on every class (throws IllDefinedMap naming `what` otherwise).
std::vector<int> lift_class_map(const Quotient& q, const std::function<int(int)>& raw,
                                const char* what);

// Pointwise (co)limits of copresheaves on a common base, with mediators.
// All carriers are ordered deterministically (lex pairs, tagged unions in
// left-then-right order, quotient classes by minimal representative).
struct PullbackData {
  SetFunctor obj;
  SetNat pi1, pi2;
  std::vector<std::vector<std::pair<int, int>>> pairs;  // per base object
  std::vector<std::vector<std::vector<int>>> pair_index;  // [o][i][j] → elt or -1
};
PullbackData pullback_functors(const SetFunctor& F, const SetFunctor& G, const SetFunctor& H,
                               const SetNat& f, const SetNat& g);  // f: F→H ← G :g
SetNat pullback_mediate(const PullbackData& pb, const SetFunctor& W, const SetNat& u,
                        const SetNat& v);

struct PushoutData {
  SetFunctor obj;
  SetNat in1, in2;
  std::vector<Quotient> q;  // per base object, ambient = F.card[o] + G.card[o]
};
PushoutData pushout_functors(const SetFunctor& H, const SetFunctor& F, const SetFunctor& G,
                             const SetNat& f, const SetNat& g);  // F ← H → G
SetNat pushout_mediate(const PushoutData& po, const SetFunctor& W, const SetNat& u,
                       const SetNat& v);

struct ProductData {
  SetFunctor obj;
  SetNat pi1, pi2;
  std::vector<int> right_card;  // |G(o)| per object, pair index = i*|G(o)|+j
};
ProductData product_functors(const SetFunctor& F, const SetFunctor& G);
SetNat product_mediate(const ProductData& p, const SetFunctor& W, const SetNat& u,
                       const SetNat& v);

struct CoproductData {
  SetFunctor obj;
  SetNat in1, in2;
};
CoproductData coproduct_functors(const SetFunctor& F, const SetFunctor& G);
SetNat coproduct_mediate(const CoproductData& c, const SetFunctor& W, const SetNat& u,
                         const SetNat& v);

// Coend and end of T : op(C)×C → FinSet (T given on the product category
// built by product(opposite(C), C); pair objects are indexed a*|C|+b).
// coend: quotient of Σ_c T(c,c) by T(f,1)x ~ T(1,f)x; end: all compatible
// diagonal families, enumerated by backtracking.
struct CoendData {
  Quotient q;
  std::vector<int> offset;  // per C-object: start of its block in the ambient
  int ambient = 0;
};
CoendData coend_diagonal(const FinCategory& C, const SetFunctor& T, Budget& budget);
std::vector<std::vector<int>> end_diagonal(const FinCategory& C, const SetFunctor& T,
                                           Budget& budget);

}  // namespace bveng
