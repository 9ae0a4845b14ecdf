// Event spaces over an optic engine: chu objects whose carriers are comb
// modules and representables, the local-comb context, the par collapse,
// the join of causal orders, and supermap enumeration.
#pragma once

#include "bvengine/chu.hpp"

namespace bveng {

// An event sits at a pair (a, a2) of C-objects. Carriers: C_a is the comb
// module, y_a the representable at the pair.
int comb_object(Engine& E, int a, int a2);
int rep_object(Engine& E, int a, int a2);

ChuObj event_space(Engine& E, int a, int a2);     // (C_a, [C_a, 1], ev)
ChuObj faithful_event(Engine& E, int a, int a2);  // (C_a, y_a, ev)
ChuObj first_order_event(Engine& E, int a);       // (y_(a,i), y_(i,a), ev)

// The co-carrier of faithful(a) (*) faithful(b): bipartite contexts that
// restrict to an optic in either input. Returned with both projections.
ChuTensorData local_combs(Engine& E, int a, int a2, int b, int b2);

// faithful(a) par faithful(b) against faithful(a⊗b), with an isomorphism
// certificate found by exhaustive search.
struct LemmaParResult {
  ChuObj lhs, rhs;
  ChuIso iso;
};
LemmaParResult check_lemma_par(Engine& E, int a, int a2, int b, int b2);

// canonical natural maps on representables
EMor rep_mult(Engine& E, int a, int a2, int b, int b2);  // y_{a⊗b} → y_a (*) y_b
EMor rep_hom_comb(Engine& E, int a, int a2);             // [y_a, 1] → C_a

// Order embeddings A(*)B → A⊲B → A par B (and mirrors), defined whenever the
// tensor and seq units coincide (true over optic engines).
ChuMor tau_tensor_l(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor tau_tensor_r(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor tau_par_l(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor tau_par_r(Engine& E, const ChuObj& A, const ChuObj& B);

// Join of the two causal orders: pushout of the order embeddings over A(*)B
// plus the mediated comparison map into A par B.
struct JoinOrders {
  ChuMor tau_tl, tau_tr;
  ChuMor tau_pl, tau_pr;
  ChuPushoutData po;
  ChuMor dashed;
};
JoinOrders join_orders(Engine& E, const ChuObj& A, const ChuObj& B);

// The par carrier of two events maps into the bipartite comb module: the
// diagonal of its pullback followed by restriction along the canonical
// y → [C, 1] units and the Yoneda identifications.
EMor upper_bound(Engine& E, int a, int a2, int b, int b2);

// Morphisms between faithful events, each identified with the optic that
// induces it. all_from_optics records that the identification is a bijection
// onto O(a, b) and that every forward component is the optic action.
struct SupermapReport {
  std::vector<ChuMor> morphisms;
  std::vector<int> optics;  // global O-morphism ids, one per morphism
  bool all_from_optics = false;
};
SupermapReport enumerate_supermaps(Engine& E, int a, int a2, int b, int b2);

}  // namespace bveng
