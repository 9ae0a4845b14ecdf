// Chu construction over a duoidal engine: objects are pairings into the
// dualizing object, morphisms are adjoint pairs, and the linear connectives
// (tensor, par, seq, hom, additives) are built from engine primitives.
#pragma once

#include <string>
#include <vector>

#include "bvengine/engine.hpp"

namespace bveng {

// A Chu object: carrier a, co-carrier a2, pairing r : a (*) a2 -> dualizing.
struct ChuObj {
  int a = -1;
  int a2 = -1;
  EMor r;
  bool operator==(const ChuObj&) const = default;
};

// A Chu morphism A -> B: f : a -> b forward, f2 : b2 -> a2 backward.
struct ChuMor {
  EMor f, f2;
  bool operator==(const ChuMor&) const = default;
};

// Adjointness square s(f x, y) = r(x, f2 y). Endpoint mismatch throws
// TypeMismatch; a failing square just returns false.
bool is_chu_morphism(Engine& E, const ChuObj& A, const ChuObj& B, const ChuMor& m);

// Like is_chu_morphism but throws NotChuMorphism with a witness cell.
void require_chu_morphism(Engine& E, const ChuObj& A, const ChuObj& B, const ChuMor& m,
                          const std::string& what);

ChuMor chu_id(Engine& E, const ChuObj& A);
ChuMor chu_comp(Engine& E, const ChuMor& g, const ChuMor& f);
// Componentwise inverse; throws IllDefinedMap when a component is not bijective.
ChuMor chu_mor_invert(Engine& E, const ChuMor& m);

// Duality (a, a2, r) -> (a2, a, r . sym); involutive on the nose.
ChuObj chu_dual(Engine& E, const ChuObj& A);
ChuMor chu_dual_mor(const ChuMor& m);

// Units. Over an optic engine both carriers coincide with the engine unit and
// the two units are equal on the nose; over the plain set engine they differ.
ChuObj chu_unit(Engine& E);       // tensor unit (i, dualizing, lunit)
ChuObj chu_seq_unit(Engine& E);   // seq unit (i, i, point . mu)
ChuObj chu_par_unit(Engine& E);   // dual of the tensor unit

// Tensor carrier data: the co-carrier is the pullback of
//   [a,b2] --leg1--> [a(*)b, dualizing] <--leg2-- [b,a2]
// and pi1/pi2 are its projections.
struct ChuTensorData {
  ChuObj obj;
  PullbackData pb;
  EMor leg1, leg2;
  EMor pi1, pi2;
};

ChuTensorData chu_tensor_data(Engine& E, const ChuObj& A, const ChuObj& B);
ChuObj chu_tensor(Engine& E, const ChuObj& A, const ChuObj& B);
ChuObj chu_par(Engine& E, const ChuObj& A, const ChuObj& B);  // (A* (*) B*)*
ChuObj chu_hom(Engine& E, const ChuObj& A, const ChuObj& B);  // (A (*) B*)*
ChuObj chu_seq(Engine& E, const ChuObj& A, const ChuObj& B);  // componentwise seq

ChuMor chu_tensor_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                      const ChuObj& D, const ChuMor& f, const ChuMor& g);
ChuMor chu_par_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                   const ChuObj& D, const ChuMor& f, const ChuMor& g);
ChuMor chu_seq_mor(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                   const ChuObj& D, const ChuMor& f, const ChuMor& g);

// Structural morphisms for the tensor and seq layers.
ChuMor chu_lunit(Engine& E, const ChuObj& A);      // 1 (*) A -> A
ChuMor chu_runit(Engine& E, const ChuObj& A);      // A (*) 1 -> A
ChuMor chu_sym(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor chu_seq_lunit(Engine& E, const ChuObj& A);  // I (;) A -> A
ChuMor chu_seq_runit(Engine& E, const ChuObj& A);  // A (;) I -> A
ChuMor chu_mix(Engine& E);                         // tensor unit -> par unit

// Associator (A (*) B) (*) C -> A (*) (B (*) C): forward is the engine
// associator on carriers, backward mediates through the nested pullbacks.
ChuMor chu_assoc(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C);

// Switch (linear distribution) A (*) (B par C) -> B par (A (*) C): the
// transpose of the evaluation composite ((A (*) [B*,C]) (*) B* -> A (*) C.
ChuMor chu_switch(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C);

// Interchange distributor (A;B) (*) (C;D) -> (A(*)C) ; (B(*)D): forward is the
// engine interchange, backward mediates into the source pullback.
ChuMor distributor_interchange(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                               const ChuObj& D);
// (A par B) ; (C par D) -> (A;C) par (B;D), the dual of the interchange.
ChuMor distributor_seq_par(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                           const ChuObj& D);

// Closure: bijection Chu(A (*) B, C) ~ Chu(A, [B, C]) and its inverse.
ChuMor chu_transpose(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                     const ChuMor& h);
ChuMor chu_transpose_inv(Engine& E, const ChuObj& A, const ChuObj& B, const ChuObj& C,
                         const ChuMor& k);

// Canonical embedding of an engine object: (a, [a, dualizing], ev . sym).
ChuObj chu_embed(Engine& E, int a);
ChuMor chu_embed_mor(Engine& E, const EMor& f);

// Additives: product is (product of carriers, coproduct of co-carriers);
// coproduct is the dual of the product of the duals, so De Morgan for the
// additives holds strictly.
struct ChuProductData {
  ChuObj obj;
  ChuMor pi1, pi2;
  ProductData pd;
  CoproductData cd;
};
ChuProductData chu_product(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor chu_product_mediate(Engine& E, const ChuProductData& d, const ChuObj& W, const ChuMor& u,
                           const ChuMor& v);

struct ChuCoproductData {
  ChuObj obj;
  ChuMor in1, in2;
  ChuProductData dual_data;
};
ChuCoproductData chu_coproduct(Engine& E, const ChuObj& A, const ChuObj& B);
ChuMor chu_coproduct_mediate(Engine& E, const ChuCoproductData& d, const ChuObj& W,
                             const ChuMor& u, const ChuMor& v);

// Pushout of A <-f- H -g-> B: pushout of carriers, pullback of co-carriers,
// pairing mediated through [co-carrier, dualizing].
struct ChuPushoutData {
  ChuObj obj;
  ChuMor in1, in2;
  PushoutData po;
  PullbackData pb;
};
ChuPushoutData chu_pushout(Engine& E, const ChuObj& H, const ChuObj& A, const ChuObj& B,
                           const ChuMor& f, const ChuMor& g);
ChuMor chu_pushout_mediate(Engine& E, const ChuPushoutData& d, const ChuObj& W, const ChuMor& u,
                           const ChuMor& v);

// Exhaustive morphism enumeration and isomorphism search with certificate.
std::vector<ChuMor> chu_homset(Engine& E, const ChuObj& A, const ChuObj& B);

struct ChuIso {
  bool found = false;
  ChuMor fwd, bwd;
  long long searched = 0;
};
ChuIso chu_iso_search(Engine& E, const ChuObj& A, const ChuObj& B);

}  // namespace bveng
