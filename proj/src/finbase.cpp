#include "bvengine/finbase.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bveng {

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::AssocViolation: return "AssocViolation";
    case ErrKind::IdentityViolation: return "IdentityViolation";
    case ErrKind::InterchangeViolation: return "InterchangeViolation";
    case ErrKind::SymmetryViolation: return "SymmetryViolation";
    case ErrKind::StrictnessViolation: return "StrictnessViolation";
    case ErrKind::NotComposable: return "NotComposable";
    case ErrKind::SchemaError: return "SchemaError";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::IllDefinedMap: return "IllDefinedMap";
    case ErrKind::TypeMismatch: return "TypeMismatch";
    case ErrKind::MediatorNotFound: return "MediatorNotFound";
    case ErrKind::NotChuMorphism: return "NotChuMorphism";
    case ErrKind::UnboundAtom: return "UnboundAtom";
    case ErrKind::SyntaxError: return "SyntaxError";
    case ErrKind::ConfigError: return "ConfigError";
  }
  return "EngineError";
}

void FinCategory::index() {
  int n = n_obj(), m = n_mor();
  homs.assign(n, std::vector<std::vector<int>>(n));
  hom_pos_of.assign(m, -1);
  for (int f = 0; f < m; ++f) homs[mor_src[f]][mor_dst[f]].push_back(f);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < (int)homs[a][b].size(); ++i) hom_pos_of[homs[a][b][i]] = i;
}

namespace {

std::string mn(const FinCategory& C, int f) { return C.mor_names[f]; }
std::string on(const FinCategory& C, int a) { return C.obj_names[a]; }

void check_shapes(const FinCategory& C) {
  size_t n = C.obj_names.size(), m = C.mor_names.size();
  if (n == 0) fail(ErrKind::SchemaError, C.name + ": no objects");
  auto bad = [&](const char* what) {
    fail(ErrKind::SchemaError, C.name + ": malformed table: " + what);
  };
  if (C.mor_src.size() != m || C.mor_dst.size() != m) bad("mor src/dst");
  if (C.idm.size() != n) bad("ids");
  if (C.cmp.size() != m) bad("comp rows");
  for (auto& r : C.cmp)
    if (r.size() != m) bad("comp cols");
  if (C.ten_o.size() != n) bad("tensor_obj rows");
  for (auto& r : C.ten_o)
    if (r.size() != n) bad("tensor_obj cols");
  if (C.ten_mm.size() != m) bad("tensor_mor rows");
  for (auto& r : C.ten_mm)
    if (r.size() != m) bad("tensor_mor cols");
  if (C.sym_m.size() != n) bad("symmetry rows");
  for (auto& r : C.sym_m)
    if (r.size() != n) bad("symmetry cols");
  if (C.unit < 0 || C.unit >= (int)n) bad("unit");
  for (size_t f = 0; f < m; ++f)
    if (C.mor_src[f] < 0 || C.mor_src[f] >= (int)n || C.mor_dst[f] < 0 || C.mor_dst[f] >= (int)n)
      bad("morphism endpoints");
  for (auto& r : C.ten_o)
    for (int v : r)
      if (v < 0 || v >= (int)n) bad("tensor_obj entry");
  for (auto& r : C.sym_m)
    for (int v : r)
      if (v < 0 || v >= (int)m) bad("symmetry entry");
  for (auto& r : C.cmp)
    for (int v : r)
      if (v < -1 || v >= (int)m) bad("comp entry");
  for (auto& r : C.ten_mm)
    for (int v : r)
      if (v < 0 || v >= (int)m) bad("tensor_mor entry");
}

}  // namespace

void validate_category(const FinCategory& C) {
  check_shapes(C);
  int n = C.n_obj(), m = C.n_mor();

  for (int a = 0; a < n; ++a) {
    int e = C.idm[a];
    if (C.mor_src[e] != a || C.mor_dst[e] != a)
      fail(ErrKind::IdentityViolation, C.name + ": id of " + on(C, a) + " has wrong endpoints");
  }

  // composition table: defined exactly on composable pairs, correctly typed
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int r = C.cmp[g][f];
      bool composable = C.mor_dst[f] == C.mor_src[g];
      if (composable && r < 0)
        fail(ErrKind::NotComposable,
             C.name + ": missing composite " + mn(C, g) + "∘" + mn(C, f));
      if (!composable && r >= 0)
        fail(ErrKind::NotComposable,
             C.name + ": composite defined for non-composable " + mn(C, g) + "∘" + mn(C, f));
      if (r >= 0 && (C.mor_src[r] != C.mor_src[f] || C.mor_dst[r] != C.mor_dst[g]))
        fail(ErrKind::TypeMismatch,
             C.name + ": composite " + mn(C, g) + "∘" + mn(C, f) + " has wrong endpoints");
    }

  for (int f = 0; f < m; ++f) {
    if (C.cmp[f][C.idm[C.mor_src[f]]] != f || C.cmp[C.idm[C.mor_dst[f]]][f] != f)
      fail(ErrKind::IdentityViolation, C.name + ": identity law fails at " + mn(C, f));
  }

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (C.mor_dst[f] != C.mor_src[g]) continue;
      int gf = C.cmp[g][f];
      for (int h = 0; h < m; ++h) {
        if (C.mor_dst[g] != C.mor_src[h]) continue;
        if (C.cmp[h][gf] != C.cmp[C.cmp[h][g]][f])
          fail(ErrKind::AssocViolation, C.name + ": associativity fails at " + mn(C, h) + "∘" +
                                            mn(C, g) + "∘" + mn(C, f));
      }
    }

  // strict monoid of objects
  for (int a = 0; a < n; ++a) {
    if (C.ten(C.unit, a) != a || C.ten(a, C.unit) != a)
      fail(ErrKind::StrictnessViolation, C.name + ": unit law fails at object " + on(C, a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.ten(C.ten(a, b), c) != C.ten(a, C.ten(b, c)))
          fail(ErrKind::StrictnessViolation,
               C.name + ": object tensor not associative at (" + on(C, a) + "," + on(C, b) +
                   "," + on(C, c) + ")");
  }

  // tensor of morphisms: typing, strict functoriality, interchange
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int t = C.ten_m(f, g);
      if (C.mor_src[t] != C.ten(C.mor_src[f], C.mor_src[g]) ||
          C.mor_dst[t] != C.ten(C.mor_dst[f], C.mor_dst[g]))
        fail(ErrKind::TypeMismatch,
             C.name + ": tensor " + mn(C, f) + "⊗" + mn(C, g) + " has wrong endpoints");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (C.ten_m(C.idm[a], C.idm[b]) != C.idm[C.ten(a, b)])
        fail(ErrKind::StrictnessViolation,
             C.name + ": id⊗id ≠ id at (" + on(C, a) + "," + on(C, b) + ")");
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (C.ten_m(C.ten_m(f, g), h) != C.ten_m(f, C.ten_m(g, h)))
          fail(ErrKind::StrictnessViolation, C.name + ": morphism tensor not associative");
  for (int f = 0; f < m; ++f)
    if (C.ten_m(f, C.idm[C.unit]) != f || C.ten_m(C.idm[C.unit], f) != f)
      fail(ErrKind::StrictnessViolation, C.name + ": morphism tensor unit law fails at " + mn(C, f));
  for (int f2 = 0; f2 < m; ++f2)
    for (int f1 = 0; f1 < m; ++f1) {
      if (C.mor_dst[f1] != C.mor_src[f2]) continue;
      for (int g2 = 0; g2 < m; ++g2)
        for (int g1 = 0; g1 < m; ++g1) {
          if (C.mor_dst[g1] != C.mor_src[g2]) continue;
          if (C.ten_m(C.cmp[f2][f1], C.cmp[g2][g1]) !=
              C.cmp[C.ten_m(f2, g2)][C.ten_m(f1, g1)])
            fail(ErrKind::InterchangeViolation,
                 C.name + ": interchange fails at (" + mn(C, f2) + "∘" + mn(C, f1) + ")⊗(" +
                     mn(C, g2) + "∘" + mn(C, g1) + ")");
        }
    }

  // symmetry: typing, involution, naturality, hexagon, unit
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = C.sym(a, b);
      if (C.mor_src[s] != C.ten(a, b) || C.mor_dst[s] != C.ten(b, a))
        fail(ErrKind::SymmetryViolation,
             C.name + ": σ_{" + on(C, a) + "," + on(C, b) + "} has wrong endpoints");
      if (C.cmp[C.sym(b, a)][s] != C.idm[C.ten(a, b)])
        fail(ErrKind::SymmetryViolation,
             C.name + ": σ not involutive at (" + on(C, a) + "," + on(C, b) + ")");
    }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int a = C.mor_src[f], b = C.mor_src[g];
      int a2 = C.mor_dst[f], b2 = C.mor_dst[g];
      if (C.cmp[C.sym(a2, b2)][C.ten_m(f, g)] != C.cmp[C.ten_m(g, f)][C.sym(a, b)])
        fail(ErrKind::SymmetryViolation,
             C.name + ": σ not natural at (" + mn(C, f) + "," + mn(C, g) + ")");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.sym(a, C.ten(b, c)) !=
            C.cmp[C.ten_m(C.idm[b], C.sym(a, c))][C.ten_m(C.sym(a, b), C.idm[c])])
          fail(ErrKind::SymmetryViolation,
               C.name + ": hexagon fails at (" + on(C, a) + "," + on(C, b) + "," + on(C, c) + ")");
  for (int a = 0; a < n; ++a)
    if (C.sym(a, C.unit) != C.idm[a] || C.sym(C.unit, a) != C.idm[a])
      fail(ErrKind::SymmetryViolation, C.name + ": unit symmetry not identity at " + on(C, a));
}

FinCategory opposite(const FinCategory& C) {
  FinCategory D = C;
  D.name = "op(" + C.name + ")";
  D.mor_src = C.mor_dst;
  D.mor_dst = C.mor_src;
  int m = C.n_mor(), n = C.n_obj();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) D.cmp[g][f] = C.cmp[f][g];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) D.sym_m[a][b] = C.sym_m[b][a];
  D.index();
  return D;
}

FinCategory product(const FinCategory& A, const FinCategory& B) {
  FinCategory P;
  P.name = A.name + "×" + B.name;
  int na = A.n_obj(), nb = B.n_obj(), ma = A.n_mor(), mb = B.n_mor();
  auto po = [&](int a, int b) { return a * nb + b; };
  auto pm = [&](int f, int g) { return f * mb + g; };
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      P.obj_names.push_back("(" + A.obj_names[a] + "," + B.obj_names[b] + ")");
  P.mor_src.resize(ma * mb);
  P.mor_dst.resize(ma * mb);
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g) {
      P.mor_names.push_back("(" + A.mor_names[f] + "," + B.mor_names[g] + ")");
      P.mor_src[pm(f, g)] = po(A.mor_src[f], B.mor_src[g]);
      P.mor_dst[pm(f, g)] = po(A.mor_dst[f], B.mor_dst[g]);
    }
  P.idm.resize(na * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) P.idm[po(a, b)] = pm(A.idm[a], B.idm[b]);
  P.cmp.assign(ma * mb, std::vector<int>(ma * mb, -1));
  for (int f2 = 0; f2 < ma; ++f2)
    for (int g2 = 0; g2 < mb; ++g2)
      for (int f1 = 0; f1 < ma; ++f1)
        for (int g1 = 0; g1 < mb; ++g1) {
          if (A.cmp[f2][f1] < 0 || B.cmp[g2][g1] < 0) continue;
          P.cmp[pm(f2, g2)][pm(f1, g1)] = pm(A.cmp[f2][f1], B.cmp[g2][g1]);
        }
  P.ten_o.assign(na * nb, std::vector<int>(na * nb));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < na; ++c)
        for (int d = 0; d < nb; ++d)
          P.ten_o[po(a, b)][po(c, d)] = po(A.ten(a, c), B.ten(b, d));
  P.ten_mm.assign(ma * mb, std::vector<int>(ma * mb));
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g)
      for (int f2 = 0; f2 < ma; ++f2)
        for (int g2 = 0; g2 < mb; ++g2)
          P.ten_mm[pm(f, g)][pm(f2, g2)] = pm(A.ten_m(f, f2), B.ten_m(g, g2));
  P.sym_m.assign(na * nb, std::vector<int>(na * nb));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < na; ++c)
        for (int d = 0; d < nb; ++d)
          P.sym_m[po(a, b)][po(c, d)] = pm(A.sym(a, c), B.sym(b, d));
  P.unit = po(A.unit, B.unit);
  P.max_nat_candidates = std::min(A.max_nat_candidates, B.max_nat_candidates);
  P.index();
  return P;
}

FinCategory builtin_I1() {
  FinCategory C;
  C.name = "I1";
  C.obj_names = {"i"};
  C.mor_names = {"id_i"};
  C.mor_src = {0};
  C.mor_dst = {0};
  C.idm = {0};
  C.cmp = {{0}};
  C.ten_o = {{0}};
  C.ten_mm = {{0}};
  C.sym_m = {{0}};
  C.unit = 0;
  C.index();
  return C;
}

FinCategory builtin_I2() {
  // one object, hom = Z2 under addition; f⊗g = f+g, σ = 0
  FinCategory C;
  C.name = "I2";
  C.obj_names = {"o"};
  C.mor_names = {"e0", "e1"};
  C.mor_src = {0, 0};
  C.mor_dst = {0, 0};
  C.idm = {0};
  C.cmp = {{0, 1}, {1, 0}};
  C.ten_o = {{0}};
  C.ten_mm = {{0, 1}, {1, 0}};
  C.sym_m = {{0}};
  C.unit = 0;
  C.index();
  return C;
}

FinCategory builtin_I3() {
  // discrete category on the two-element group, ⊗ = addition mod 2
  FinCategory C;
  C.name = "I3";
  C.obj_names = {"a0", "a1"};
  C.mor_names = {"id_a0", "id_a1"};
  C.mor_src = {0, 1};
  C.mor_dst = {0, 1};
  C.idm = {0, 1};
  C.cmp = {{0, -1}, {-1, 1}};
  C.ten_o = {{0, 1}, {1, 0}};
  C.ten_mm = {{0, 1}, {1, 0}};
  C.sym_m = {{0, 1}, {1, 0}};
  C.unit = 0;
  C.index();
  return C;
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& src, const std::string& msg) {
  fail(ErrKind::SchemaError, src + ": " + msg);
}

std::pair<std::string, std::string> split_pair(const std::string& key, const std::string& src) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    schema(src, "key '" + key + "' is not a 'x,y' pair");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

}  // namespace

FinCategory load_category_json(const std::string& text, const std::string& src) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    schema(src, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema(src, "top level must be an object");
  static const std::set<std::string> known = {"objects",    "homs", "comp",     "ids",
                                              "tensor_obj", "tensor_mor", "unit", "symmetry",
                                              "budgets",    "name"};
  for (auto& [k, v] : j.items()) {
    (void)v;
    if (!known.count(k)) schema(src, "unknown field '" + k + "'");
  }
  for (const char* req : {"objects", "homs", "comp", "ids", "tensor_obj", "tensor_mor", "unit",
                          "symmetry"})
    if (!j.contains(req)) schema(src, std::string("missing field '") + req + "'");

  FinCategory C;
  C.name = j.contains("name") ? j["name"].get<std::string>() : src;

  std::map<std::string, int> obj_of;
  if (!j["objects"].is_array() || j["objects"].empty()) schema(src, "'objects' must be a nonempty array");
  for (auto& o : j["objects"]) {
    if (!o.is_string()) schema(src, "'objects' entries must be strings");
    std::string nm = o.get<std::string>();
    if (obj_of.count(nm)) schema(src, "duplicate object '" + nm + "'");
    obj_of[nm] = (int)C.obj_names.size();
    C.obj_names.push_back(nm);
  }
  auto obj_id = [&](const std::string& nm) {
    auto it = obj_of.find(nm);
    if (it == obj_of.end()) schema(src, "unknown object '" + nm + "'");
    return it->second;
  };

  std::map<std::string, int> mor_of;
  if (!j["homs"].is_object()) schema(src, "'homs' must be an object");
  for (auto& [key, arr] : j["homs"].items()) {
    auto [sa, sb] = split_pair(key, src);
    int a = obj_id(sa), b = obj_id(sb);
    if (!arr.is_array()) schema(src, "homs['" + key + "'] must be an array");
    for (auto& mnm : arr) {
      if (!mnm.is_string()) schema(src, "morphism names must be strings");
      std::string nm = mnm.get<std::string>();
      if (mor_of.count(nm)) schema(src, "duplicate morphism '" + nm + "'");
      mor_of[nm] = (int)C.mor_names.size();
      C.mor_names.push_back(nm);
      C.mor_src.push_back(a);
      C.mor_dst.push_back(b);
    }
  }
  auto mor_id = [&](const std::string& nm) {
    auto it = mor_of.find(nm);
    if (it == mor_of.end()) schema(src, "unknown morphism '" + nm + "'");
    return it->second;
  };
  int n = C.n_obj(), m = C.n_mor();

  if (!j["ids"].is_object()) schema(src, "'ids' must be an object");
  C.idm.assign(n, -1);
  for (auto& [onm, mnm] : j["ids"].items()) C.idm[obj_id(onm)] = mor_id(mnm.get<std::string>());
  for (int a = 0; a < n; ++a)
    if (C.idm[a] < 0) schema(src, "missing identity for object '" + C.obj_names[a] + "'");

  C.cmp.assign(m, std::vector<int>(m, -1));
  if (!j["comp"].is_array()) schema(src, "'comp' must be an array");
  for (auto& t : j["comp"]) {
    if (!t.is_array() || t.size() != 3) schema(src, "'comp' entries must be [g, f, g∘f] triples");
    int g = mor_id(t[0].get<std::string>()), f = mor_id(t[1].get<std::string>()),
        r = mor_id(t[2].get<std::string>());
    if (C.mor_dst[f] != C.mor_src[g])
      schema(src, "comp triple for non-composable pair (" + t[0].get<std::string>() + "," +
                      t[1].get<std::string>() + ")");
    if (C.cmp[g][f] >= 0 && C.cmp[g][f] != r) schema(src, "conflicting comp entries");
    C.cmp[g][f] = r;
  }
  // composites with an identity are derivable
  for (int f = 0; f < m; ++f) {
    int ds = C.idm[C.mor_src[f]], dd = C.idm[C.mor_dst[f]];
    if (C.cmp[f][ds] < 0) C.cmp[f][ds] = f;
    if (C.cmp[dd][f] < 0) C.cmp[dd][f] = f;
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (C.mor_dst[f] == C.mor_src[g] && C.cmp[g][f] < 0)
        schema(src, "missing composite " + C.mor_names[g] + "∘" + C.mor_names[f]);

  C.ten_o.assign(n, std::vector<int>(n, -1));
  if (!j["tensor_obj"].is_object()) schema(src, "'tensor_obj' must be an object");
  for (auto& [key, val] : j["tensor_obj"].items()) {
    auto [sa, sb] = split_pair(key, src);
    C.ten_o[obj_id(sa)][obj_id(sb)] = obj_id(val.get<std::string>());
  }
  for (auto& row : C.ten_o)
    for (int v : row)
      if (v < 0) schema(src, "tensor_obj table incomplete");

  C.ten_mm.assign(m, std::vector<int>(m, -1));
  if (!j["tensor_mor"].is_object()) schema(src, "'tensor_mor' must be an object");
  for (auto& [key, val] : j["tensor_mor"].items()) {
    auto [sf, sg] = split_pair(key, src);
    C.ten_mm[mor_id(sf)][mor_id(sg)] = mor_id(val.get<std::string>());
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (C.ten_mm[C.idm[a]][C.idm[b]] < 0) C.ten_mm[C.idm[a]][C.idm[b]] = C.idm[C.ten_o[a][b]];
  for (auto& row : C.ten_mm)
    for (int v : row)
      if (v < 0) schema(src, "tensor_mor table incomplete");

  C.unit = obj_id(j["unit"].get<std::string>());

  C.sym_m.assign(n, std::vector<int>(n, -1));
  if (!j["symmetry"].is_object()) schema(src, "'symmetry' must be an object");
  for (auto& [key, val] : j["symmetry"].items()) {
    auto [sa, sb] = split_pair(key, src);
    C.sym_m[obj_id(sa)][obj_id(sb)] = mor_id(val.get<std::string>());
  }
  for (auto& row : C.sym_m)
    for (int v : row)
      if (v < 0) schema(src, "symmetry table incomplete");

  if (j.contains("budgets")) {
    if (!j["budgets"].is_object()) schema(src, "'budgets' must be an object");
    for (auto& [k, v] : j["budgets"].items()) {
      if (k == "max_nat_candidates") {
        if (!v.is_number_integer() || v.get<long long>() <= 0)
          schema(src, "budgets.max_nat_candidates must be a positive integer");
        C.max_nat_candidates = v.get<long long>();
      } else {
        schema(src, "unknown budget '" + k + "'");
      }
    }
  }

  C.index();
  validate_category(C);
  return C;
}

FinCategory load_category_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::ConfigError, "cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_category_json(ss.str(), path);
}

}  // namespace bveng
