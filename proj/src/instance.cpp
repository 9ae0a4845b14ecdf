#include "bvengine/instance.hpp"

#include <fstream>
#include <sstream>

#include "bvengine/events.hpp"
#include "json.hpp"

namespace bveng {

using json = nlohmann::json;

std::unique_ptr<Engine> make_instance_engine(const std::string& name_or_path,
                                             long long budget) {
  if (name_or_path == "I1") return make_engine(builtin_I1(), budget);
  if (name_or_path == "I2") return make_engine(builtin_I2(), budget);
  if (name_or_path == "I3") return make_engine(builtin_I3(), budget);
  if (name_or_path == "I4") return make_set_engine(budget);
  return make_engine(load_category_file(name_or_path), budget);
}

// explicit chu object over a single-object engine from a pairing table in lex
// order; used for set-engine bindings
static ChuObj explicit_chu(Engine& E, int n, int m, const std::vector<int>& pairing,
                           const std::string& name) {
  if (E.O().n_obj() != 1)
    fail(ErrKind::SchemaError, "explicit chu bindings need a single-object engine");
  int ca = add_finite_set(E, n, name + ".carrier");
  int cc = add_finite_set(E, m, name + ".cocarrier");
  int prod = E.ten(ca, cc);
  if ((int)pairing.size() != n * m)
    fail(ErrKind::SchemaError, "pairing table for '" + name + "' must have " +
                                   std::to_string(n * m) + " entries");
  int dual_card = E.F(E.dualizing).card[0];
  for (int v : pairing)
    if (v < 0 || v >= dual_card)
      fail(ErrKind::SchemaError, "pairing entry out of range for '" + name + "'");
  SetNat t;
  t.comp.push_back(pairing);
  validate_nat(E.F(prod), E.F(E.dualizing), t);
  return {ca, cc, EMor{prod, E.dualizing, t}};
}

ChuEnv default_bindings(Engine& E, const std::string& name_or_path) {
  ChuEnv env;
  if (E.dualizing != E.bot) {
    env["a"] = explicit_chu(E, 2, 2, {0, 0, 0, 1}, "a");  // AND
    env["b"] = chu_embed(E, add_finite_set(E, 2, "b.set"));
    env["c"] = explicit_chu(E, 2, 2, {0, 1, 1, 0}, "c");  // XOR
    return env;
  }
  if (name_or_path == "I3") {
    env["a"] = faithful_event(E, 0, 1);
    env["b"] = faithful_event(E, 1, 0);
    env["c"] = first_order_event(E, 1);
    return env;
  }
  env["a"] = faithful_event(E, 0, 0);
  env["b"] = first_order_event(E, 0);
  env["c"] = event_space(E, 0, 0);
  return env;
}

std::vector<std::string> default_corpus(const std::string&) {
  return {"a", "b", "c", "1", "~a", "a*b", "a;b", "a||b", "a;(b*c)"};
}

static void want(bool ok, const std::string& src, const std::string& msg) {
  if (!ok) fail(ErrKind::SchemaError, src + ": " + msg);
}

static int obj_index(Engine& E, const json& v, const std::string& src) {
  want(v.is_number_integer(), src, "object references must be integers");
  int a = v.get<int>();
  want(a >= 0 && a < E.base.n_obj(), src, "object index out of range");
  return a;
}

ChuEnv parse_bindings(Engine& E, const std::string& json_text, const std::string& src) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrKind::SchemaError, src + ": invalid JSON: " + e.what());
  }
  want(j.is_object() && j.contains("atoms") && j["atoms"].is_object(), src,
       "expected an object with an 'atoms' object");
  ChuEnv env;
  for (auto& [name, desc] : j["atoms"].items()) {
    want(desc.is_object() && desc.contains("kind") && desc["kind"].is_string(), src,
         "binding '" + name + "' must be an object with a 'kind'");
    std::string kind = desc["kind"].get<std::string>();
    if (kind == "faithful" || kind == "event") {
      want(desc.contains("pair") && desc["pair"].is_array() && desc["pair"].size() == 2, src,
           "binding '" + name + "' needs \"pair\": [a, a2]");
      int a = obj_index(E, desc["pair"][0], src), a2 = obj_index(E, desc["pair"][1], src);
      env[name] = kind == "faithful" ? faithful_event(E, a, a2) : event_space(E, a, a2);
    } else if (kind == "first_order") {
      want(desc.contains("object"), src, "binding '" + name + "' needs \"object\"");
      env[name] = first_order_event(E, obj_index(E, desc["object"], src));
    } else if (kind == "set") {
      want(desc.contains("elements") && desc["elements"].is_number_integer() &&
               desc["elements"].get<int>() >= 0,
           src, "binding '" + name + "' needs a non-negative \"elements\"");
      env[name] = chu_embed(E, add_finite_set(E, desc["elements"].get<int>(), name));
    } else if (kind == "chu") {
      want(desc.contains("carrier") && desc.contains("cocarrier") && desc.contains("pairing") &&
               desc["carrier"].is_number_integer() && desc["cocarrier"].is_number_integer() &&
               desc["pairing"].is_array(),
           src, "binding '" + name + "' needs \"carrier\", \"cocarrier\", \"pairing\"");
      std::vector<int> table;
      for (auto& v : desc["pairing"]) {
        want(v.is_number_integer(), src, "pairing entries must be integers");
        table.push_back(v.get<int>());
      }
      env[name] =
          explicit_chu(E, desc["carrier"].get<int>(), desc["cocarrier"].get<int>(), table, name);
    } else {
      fail(ErrKind::SchemaError, src + ": binding '" + name + "' has unknown kind '" + kind + "'");
    }
  }
  return env;
}

ChuEnv load_bindings(Engine& E, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::ConfigError, "cannot open bindings file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bindings(E, ss.str(), path);
}

}  // namespace bveng
