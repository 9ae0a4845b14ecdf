#pragma once

#include <array>
#include <map>
#include <string>

#include "bvengine/tambara.hpp"

namespace bveng {

// A morphism between interned engine objects: a componentwise map plus its
// endpoints. Equality is table equality.
struct EMor {
  int src = -1, dst = -1;
  SetNat t;
  bool operator==(const EMor&) const = default;
};

// The working category: modules over the optic base of an instance, with
// Day convolution ⊗, the sequential tensor ⊲, internal homs, and the
// duoidal structure maps. Objects are interned by their tables, so objects
// built twice by different routes are literally the same id; in particular
// the ⊗ unit and the ⊲ unit are one object (the representable at the unit
// pair), which is also the default pairing target.
struct Engine {
  FinCategory base;  // the instance category C
  std::unique_ptr<OpticCat> oc;
  OpticSeqBase sb;
  Budget budget;

  int bot = -1;        // y_(i,i): unit of ⊗ and of ⊲
  int dualizing = -1;  // pairing target for the Chu layer (= bot unless overridden)
  EMor seq_fold;       // dualizing⊲dualizing → dualizing
  EMor point_true;     // unit → dualizing

  std::vector<SetFunctor> objs;
  std::vector<std::string> names;
  std::map<std::string, int> interned;
  std::map<std::pair<int, int>, int> ten_id, seq_id, hom_id;
  std::map<std::pair<int, int>, DayTensor> day_data;
  std::map<std::pair<int, int>, SeqTensor> seq_data;
  std::map<std::pair<int, int>, DayHom> hom_data;
  std::map<std::array<int, 4>, EMor> delta_memo;

  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const FinCategory& O() const { return oc->O; }
  const SetFunctor& F(int id) const { return objs[id]; }
  int n_objs() const { return (int)objs.size(); }

  int add(SetFunctor f, const std::string& name);
  int ten(int a, int b);
  int seq(int a, int b);
  int hom(int a, int b);
  const DayTensor& day_of(int a, int b);
  const SeqTensor& seq_of(int a, int b);
  const DayHom& hom_of(int a, int b);

  EMor idm(int a) const;
  EMor comp(const EMor& g, const EMor& f) const;  // g∘f, endpoints checked
  EMor invert(const EMor& f) const;               // throws unless bijective
  EMor tenM(const EMor& f, const EMor& g);
  EMor seqM(const EMor& f, const EMor& g);
  EMor homM(const EMor& f, const EMor& g);  // [f,g] : [b,c] → [b',c']
  EMor sym(int a, int b);
  EMor assoc(int a, int b, int c);  // (a⊗b)⊗c → a⊗(b⊗c)
  EMor assoc_inv(int a, int b, int c);
  EMor lunit(int a);  // ⊥⊗a → a
  EMor lunit_inv(int a);
  EMor runit(int a);  // a⊗⊥ → a
  EMor runit_inv(int a);
  EMor slunit(int a);  // ⊥⊲a → a
  EMor slunit_inv(int a);
  EMor srunit(int a);  // a⊲⊥ → a
  EMor srunit_inv(int a);
  // interchange (a⊲b)⊗(c⊲d) → (a⊗c)⊲(b⊗d), verified on all representatives
  EMor delta(int a, int b, int c, int d);
  EMor mu();      // ⊥⊗⊥ → ⊥
  EMor comult();  // ⊥ → ⊥⊲⊥
  EMor ev(int b, int c);                                 // [b,c]⊗b → c
  EMor curry(const EMor& f, int a, int b, int c);        // a⊗b→c ⇒ a→[b,c]
  EMor uncurry(const EMor& g, int a, int b, int c);      // a→[b,c] ⇒ a⊗b→c

  std::vector<SetNat> homset(int a, int b);
  IsoSearch iso(int a, int b);

  // ⊥-element bookkeeping: ⊥(x,c) ≅ C(x,c) via g∘f and its inverse
  int bot_elt(int x, int c, int h);   // position of h in ⊥(x,c)
  int bot_mor(int t, int j) const;    // C-morphism encoded by element j
};

std::unique_ptr<Engine> make_engine(const FinCategory& C, long long budget_limit);
// modules over the point: plain finite sets, ⊗ = ⊲ = cartesian product,
// with the two-element AND monoid as pairing target
std::unique_ptr<Engine> make_set_engine(long long budget_limit);
int add_finite_set(Engine& E, int n, const std::string& name);

// engine self-checks (throw EngineError with a witness on failure)
void check_engine_units(Engine& E, int a);
void check_engine_monoid(Engine& E);
void check_duoidal_units(Engine& E, int a, int b);
void check_delta_sigma(Engine& E, int a, int b, int c, int d);

}  // namespace bveng
