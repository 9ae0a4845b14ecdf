#pragma once

#include <string>
#include <vector>

#include "bvengine/errors.hpp"

namespace bveng {

// A finite strict symmetric monoidal category as dense lookup tables.
// Objects and morphisms are small integers; every table is total over its
// declared domain, composition is -1 where the pair is not composable.
struct FinCategory {
  std::string name;
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<int> mor_src, mor_dst;
  std::vector<int> idm;                    // object -> identity morphism
  std::vector<std::vector<int>> cmp;       // cmp[g][f] = g∘f, -1 if not composable
  std::vector<std::vector<int>> ten_o;     // ten_o[a][b] = a⊗b
  std::vector<std::vector<int>> ten_mm;    // ten_mm[f][g] = f⊗g
  std::vector<std::vector<int>> sym_m;     // sym_m[a][b] = σ_{a,b} : a⊗b → b⊗a
  int unit = 0;
  long long max_nat_candidates = 1000000;

  // hom lists (ascending morphism ids) and position-in-hom, built by index()
  std::vector<std::vector<std::vector<int>>> homs;
  std::vector<int> hom_pos_of;

  int n_obj() const { return (int)obj_names.size(); }
  int n_mor() const { return (int)mor_names.size(); }
  int dom(int f) const { return mor_src[f]; }
  int cod(int f) const { return mor_dst[f]; }
  int id(int a) const { return idm[a]; }
  int ten(int a, int b) const { return ten_o[a][b]; }
  int ten_m(int f, int g) const { return ten_mm[f][g]; }
  int sym(int a, int b) const { return sym_m[a][b]; }

  int compose(int g, int f) const {  // g∘f
    if (mor_dst[f] != mor_src[g])
      fail(ErrKind::NotComposable, name + ": " + mor_names[g] + "∘" + mor_names[f]);
    int r = cmp[g][f];
    if (r < 0) fail(ErrKind::NotComposable, name + ": composite missing for " +
                                                mor_names[g] + "∘" + mor_names[f]);
    return r;
  }
  const std::vector<int>& hom(int a, int b) const { return homs[a][b]; }
  int hom_pos(int f) const { return hom_pos_of[f]; }
  void index();  // (re)build hom lists; call after any table edit
};

// Structural and equational validation: identities, associativity,
// strict monoid of objects, tensor functoriality/interchange, symmetry
// (involution, naturality, hexagon, unit squares). Throws EngineError.
void validate_category(const FinCategory& C);

FinCategory opposite(const FinCategory& C);
FinCategory product(const FinCategory& A, const FinCategory& B);

// Builtins. I1: terminal category. I2: one object, hom = Z2 under addition,
// f⊗g = f+g. I3: discrete two-object category with ⊗ = addition mod 2.
FinCategory builtin_I1();
FinCategory builtin_I2();
FinCategory builtin_I3();

// Load an instance from its JSON description (strict schema: objects, homs,
// comp, ids, tensor_obj, tensor_mor, unit, symmetry, budgets; unknown fields
// rejected). The result is validated before being returned.
FinCategory load_category_json(const std::string& text, const std::string& src_name);
FinCategory load_category_file(const std::string& path);

}  // namespace bveng
