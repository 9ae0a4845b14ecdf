#include "bvengine/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "bvengine/events.hpp"
#include "json.hpp"

namespace bveng {

namespace {

using Clock = std::chrono::steady_clock;

long long total_card(Engine& E, int a) {
  long long n = 0;
  for (int c : E.F(a).card) n += c;
  return n;
}

struct Check {
  std::string name;
  // returns a witness: empty = pass, "skip:" prefix = not applicable
  std::function<std::string(std::vector<long long>&)> run;
};

CheckResult execute(const Check& c, const std::string& instance) {
  CheckResult r;
  r.check = c.name;
  r.instance = instance;
  r.status = "pass";
  auto t0 = Clock::now();
  try {
    std::string w = c.run(r.cardinalities);
    if (w.rfind("skip:", 0) == 0) {
      r.status = "skip";
      r.witness = w.substr(5);
    } else if (!w.empty()) {
      r.status = "fail";
      r.witness = w;
    }
  } catch (const EngineError& e) {
    bool cfg = e.kind == ErrKind::BudgetExceeded || e.kind == ErrKind::ConfigError ||
               e.kind == ErrKind::SchemaError;
    r.status = cfg ? "error" : "fail";
    r.witness = e.what();
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

struct Ctx {
  std::string instance;
  long long budget;
};

// every check builds its own engine, so checks share no mutable state
Check mk(const Ctx& cx, std::string name,
         std::function<std::string(Engine&, ChuEnv&, std::vector<long long>&)> body) {
  return {std::move(name), [cx, body = std::move(body)](std::vector<long long>& cards) {
            auto Ep = make_instance_engine(cx.instance, cx.budget);
            ChuEnv env = default_bindings(*Ep, cx.instance);
            return body(*Ep, env, cards);
          }};
}

// event construction sites per instance: two faithful pairs and their tensor
struct EventPairs {
  int a = 0, a2 = 0, b = 0, b2 = 0;
};

EventPairs event_pairs(Engine& E) {
  if (E.base.n_obj() > 1) return {0, 1, 1, 0};
  return {0, 0, 0, 0};
}

std::vector<Check> finbase_checks(const Ctx& cx) {
  std::vector<Check> v;
  v.push_back(mk(cx, "category validates", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
    validate_category(E.base);
    c = {E.base.n_obj(), E.base.n_mor()};
    return std::string();
  }));
  v.push_back(mk(cx, "opposite validates", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
    FinCategory op = opposite(E.base);
    validate_category(op);
    c = {op.n_obj(), op.n_mor()};
    return std::string();
  }));
  v.push_back(mk(cx, "product validates", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
    FinCategory pr = product(E.base, E.base);
    validate_category(pr);
    c = {pr.n_obj(), pr.n_mor()};
    return std::string();
  }));
  v.push_back(
      mk(cx, "symmetry is involutive", [](Engine& E, ChuEnv&, std::vector<long long>&) {
        const FinCategory& C = E.base;
        for (int a = 0; a < C.n_obj(); ++a)
          for (int b = 0; b < C.n_obj(); ++b)
            if (C.compose(C.sym(b, a), C.sym(a, b)) != C.id(C.ten(a, b)))
              return "sym(b,a).sym(a,b) != id at (" + C.obj_names[a] + "," + C.obj_names[b] + ")";
        return std::string();
      }));
  return v;
}

std::vector<Check> prof_checks(const Ctx& cx) {
  std::vector<Check> v;
  v.push_back(mk(cx, "tensor unit laws", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
    check_engine_units(E, env["a"].a);
    check_engine_units(E, env["b"].a);
    return std::string();
  }));
  v.push_back(mk(cx, "day monoid laws", [](Engine& E, ChuEnv&, std::vector<long long>&) {
    check_engine_monoid(E);
    return std::string();
  }));
  v.push_back(mk(cx, "duoidal unit laws", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
    check_duoidal_units(E, env["a"].a, env["b"].a);
    return std::string();
  }));
  v.push_back(mk(cx, "interchange respects symmetry",
                 [](Engine& E, ChuEnv& env, std::vector<long long>&) {
                   check_delta_sigma(E, env["a"].a, env["b"].a, env["c"].a, env["a"].a);
                   return std::string();
                 }));
  return v;
}

std::vector<Check> tambara_checks(const Ctx& cx) {
  std::vector<Check> v;
  v.push_back(mk(cx, "optic category validates", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
    validate_category(E.O());
    c = {E.O().n_obj(), E.O().n_mor()};
    return std::string();
  }));
  v.push_back(
      mk(cx, "comb modules are well defined", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
        EventPairs p = event_pairs(E);
        c = {total_card(E, comb_object(E, p.a, p.a2)), total_card(E, comb_object(E, p.b, p.b2))};
        return std::string();  // the construction verifies its own action
      }));
  v.push_back(mk(cx, "representable multiplication is an iso",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   EventPairs p = event_pairs(E);
                   EMor m = rep_mult(E, p.a, p.a2, p.b, p.b2);
                   (void)E.invert(m);
                   c = {total_card(E, m.src), total_card(E, m.dst)};
                   return std::string();
                 }));
  v.push_back(mk(cx, "yoneda decode is an iso", [](Engine& E, ChuEnv&, std::vector<long long>& c) {
    if (E.dualizing != E.bot) return std::string("skip:needs the unit as pairing target");
    EventPairs p = event_pairs(E);
    EMor m = rep_hom_comb(E, p.a, p.a2);
    (void)E.invert(m);
    c = {total_card(E, m.src), total_card(E, m.dst)};
    return std::string();
  }));
  return v;
}

std::vector<Check> chu_checks(const Ctx& cx) {
  std::vector<Check> v;
  v.push_back(
      mk(cx, "duality is a strict involution", [cx](Engine& E, ChuEnv& env, std::vector<long long>& c) {
        for (const std::string& text : default_corpus(cx.instance)) {
          ChuObj X = eval_formula(E, env, parse_formula(text));
          if (!(chu_dual(E, chu_dual(E, X)) == X)) return "dual(dual(" + text + ")) != " + text;
          c.push_back(total_card(E, X.a));
        }
        return std::string();
      }));
  v.push_back(mk(cx, "de morgan laws hold strictly", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
    ChuObj A = env["a"], B = env["b"];
    if (!(chu_dual(E, chu_tensor(E, A, B)) == chu_par(E, chu_dual(E, A), chu_dual(E, B))))
      return std::string("dual(a*b) != ~a||~b");
    if (!(chu_hom(E, A, B) == chu_par(E, chu_dual(E, A), B)))
      return std::string("[a,b] != ~a||b");
    return std::string();
  }));
  v.push_back(
      mk(cx, "seq is strictly self-dual", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
        ChuObj A = env["a"], B = env["b"];
        if (!(chu_dual(E, chu_seq(E, A, B)) == chu_seq(E, chu_dual(E, A), chu_dual(E, B))))
          return std::string("dual(a;b) != ~a;~b");
        return std::string();
      }));
  v.push_back(mk(cx, "unitors are invertible", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
    ChuObj A = env["a"];
    for (const ChuMor& m :
         {chu_lunit(E, A), chu_runit(E, A), chu_seq_lunit(E, A), chu_seq_runit(E, A)})
      (void)chu_mor_invert(E, m);
    return std::string();
  }));
  v.push_back(mk(cx, "symmetry squares to the identity",
                 [](Engine& E, ChuEnv& env, std::vector<long long>&) {
                   ChuObj A = env["a"], B = env["b"];
                   ChuMor s = chu_sym(E, A, B), s2 = chu_sym(E, B, A);
                   if (!(chu_comp(E, s2, s) == chu_id(E, chu_tensor(E, A, B))))
                     return std::string("sym(b,a).sym(a,b) != id");
                   return std::string();
                 }));
  v.push_back(
      mk(cx, "closure transposes biject", [](Engine& E, ChuEnv& env, std::vector<long long>& c) {
        ChuObj A = env["a"], B = env["b"], C = env["c"];
        ChuObj T = chu_tensor(E, A, B), H = chu_hom(E, B, C);
        std::vector<ChuMor> hs = chu_homset(E, T, C);
        std::vector<ChuMor> ks = chu_homset(E, A, H);
        c = {(long long)hs.size(), (long long)ks.size()};
        if (hs.size() != ks.size()) return std::string("|Chu(a*b,c)| != |Chu(a,[b,c])|");
        for (const ChuMor& h : hs)
          if (!(chu_transpose_inv(E, A, B, C, chu_transpose(E, A, B, C, h)) == h))
            return std::string("transpose round trip failed");
        return std::string();
      }));
  v.push_back(mk(cx, "associator is invertible", [](Engine& E, ChuEnv& env, std::vector<long long>&) {
    ChuObj A = env["a"], B = env["b"];
    ChuMor m = chu_assoc(E, A, chu_unit(E), B);
    ChuMor mi = chu_mor_invert(E, m);
    if (!(chu_comp(E, mi, m) == chu_id(E, chu_tensor(E, chu_tensor(E, A, chu_unit(E)), B))))
      return std::string("assoc inverse does not round trip");
    return std::string();
  }));
  v.push_back(mk(cx, "interchange distributor is a chu morphism",
                 [](Engine& E, ChuEnv& env, std::vector<long long>& c) {
                   ChuObj A = env["a"], B = env["b"], one = chu_unit(E);
                   ChuMor d = distributor_interchange(E, A, one, one, B);
                   c = {total_card(E, d.f.src), total_card(E, d.f.dst)};
                   return std::string();  // validated on construction
                 }));
  v.push_back(mk(cx, "additive de morgan holds strictly",
                 [](Engine& E, ChuEnv& env, std::vector<long long>& c) {
                   ChuObj A = env["a"], B = env["b"];
                   ChuProductData pd = chu_product(E, A, B);
                   ChuCoproductData cd = chu_coproduct(E, chu_dual(E, A), chu_dual(E, B));
                   c = {total_card(E, pd.obj.a), total_card(E, cd.obj.a)};
                   if (!(chu_dual(E, pd.obj) == cd.obj))
                     return std::string("dual(a x b) != ~a + ~b");
                   return std::string();
                 }));
  return v;
}

std::vector<Check> events_checks(const Ctx& cx) {
  std::vector<Check> v;
  v.push_back(mk(cx, "par of faithfuls is the faithful of the tensor",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   EventPairs p = event_pairs(E);
                   LemmaParResult L = check_lemma_par(E, p.a, p.a2, p.b, p.b2);
                   c = {total_card(E, L.lhs.a), total_card(E, L.rhs.a), L.iso.searched};
                   if (!L.iso.found) return std::string("no isomorphism found");
                   return std::string();
                 }));
  v.push_back(mk(cx, "supermaps are exactly the optics",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   EventPairs p = event_pairs(E);
                   SupermapReport R = enumerate_supermaps(E, p.a, p.a2, p.b, p.b2);
                   c = {(long long)R.morphisms.size(), (long long)R.optics.size()};
                   if (!R.all_from_optics) return std::string("supermaps and optics disagree");
                   return std::string();
                 }));
  v.push_back(mk(cx, "first-order homsets are base homsets",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   int x = E.base.n_obj() > 1 ? 1 : 0;
                   ChuObj P = first_order_event(E, x), Q = first_order_event(E, x);
                   size_t n = chu_homset(E, P, Q).size();
                   size_t base = E.base.hom(x, x).size();
                   c = {(long long)n, (long long)base};
                   if (n != base) return std::string("|Chu(P,Q)| != |C(x,x)|");
                   return std::string();
                 }));
  v.push_back(mk(cx, "order join mediates into the par",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   EventPairs p = event_pairs(E);
                   ChuObj Fa = faithful_event(E, p.a, p.a2), Fb = faithful_event(E, p.b, p.b2);
                   JoinOrders J = join_orders(E, Fa, Fb);
                   c = {total_card(E, J.po.obj.a), total_card(E, chu_par(E, Fa, Fb).a)};
                   if (!(chu_comp(E, J.dashed, J.po.in1) == J.tau_pl) ||
                       !(chu_comp(E, J.dashed, J.po.in2) == J.tau_pr))
                     return std::string("mediating map does not commute");
                   return std::string();
                 }));
  v.push_back(mk(cx, "event par maps into the tensor combs",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   EventPairs p = event_pairs(E);
                   EMor ub = upper_bound(E, p.a, p.a2, p.b, p.b2);
                   c = {total_card(E, ub.src), total_card(E, ub.dst)};
                   return std::string();  // naturality validated on construction
                 }));
  v.push_back(mk(cx, "seq supermaps counted by the seq representable",
                 [](Engine& E, ChuEnv&, std::vector<long long>& c) {
                   if (E.dualizing != E.bot)
                     return std::string("skip:needs the unit as pairing target");
                   EventPairs p = event_pairs(E);
                   int ca = E.base.ten(p.a, p.b), ca2 = E.base.ten(p.a2, p.b2);
                   ChuObj Fa = faithful_event(E, p.a, p.a2), Fb = faithful_event(E, p.b, p.b2);
                   ChuObj Fc = faithful_event(E, ca, ca2);
                   size_t n = chu_homset(E, chu_seq(E, Fa, Fb), Fc).size();
                   int ya = rep_object(E, p.a, p.a2), yb = rep_object(E, p.b, p.b2);
                   long long m = E.F(E.seq(ya, yb)).card[E.oc->pobj(ca, ca2)];
                   c = {(long long)n, m};
                   if ((long long)n != m) return std::string("counts disagree");
                   return std::string();
                 }));
  return v;
}

std::vector<Check> checks_for(const std::string& suite, const Ctx& cx) {
  if (suite == "finbase") return finbase_checks(cx);
  if (suite == "prof") return prof_checks(cx);
  if (suite == "tambara") return tambara_checks(cx);
  if (suite == "chu") return chu_checks(cx);
  return events_checks(cx);
}

}  // namespace

std::vector<std::string> suite_names() { return {"finbase", "prof", "tambara", "chu", "events"}; }

std::vector<SuiteReport> run_suites(const std::string& suite_sel, const std::string& instance,
                                    long long budget) {
  std::vector<std::string> wanted;
  if (suite_sel == "all") {
    wanted = suite_names();
  } else {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite_sel) == names.end())
      fail(ErrKind::ConfigError, "unknown suite '" + suite_sel + "'");
    wanted = {suite_sel};
  }
  // validate the instance once up front; a failing load is a config error
  try {
    auto Ep = make_instance_engine(instance, budget);
    (void)Ep;
  } catch (const EngineError& e) {
    SuiteReport rep{wanted.front(), instance, {}};
    rep.results.push_back(CheckResult{"instance loads", instance, "error", e.what(), {}, 0});
    return {rep};
  }
  Ctx cx{instance, budget};
  std::vector<SuiteReport> out;
  for (const std::string& s : wanted) {
    std::vector<Check> checks = checks_for(s, cx);
    SuiteReport rep{s, instance, {}};
    std::vector<std::future<CheckResult>> futs;
    futs.reserve(checks.size());
    for (const Check& c : checks)
      futs.push_back(
          std::async(std::launch::async, [&c, &instance] { return execute(c, instance); }));
    for (auto& f : futs) rep.results.push_back(f.get());
    out.push_back(std::move(rep));
  }
  return out;
}

CheckResult check_rule(Engine& E, const std::string& rule, const std::vector<ChuObj>& args,
                       const std::string& instance) {
  CheckResult r;
  r.check = "rule:" + rule;
  r.instance = instance;
  r.status = "pass";
  auto t0 = Clock::now();
  try {
    auto need = [&](size_t n) {
      if (args.size() != n)
        fail(ErrKind::ConfigError,
             "rule '" + rule + "' takes " + std::to_string(n) + " formulas");
    };
    ChuMor m;
    if (rule == "interchange") {
      need(4);
      m = distributor_interchange(E, args[0], args[1], args[2], args[3]);
    } else if (rule == "sequence") {
      need(4);
      m = distributor_seq_par(E, args[0], args[1], args[2], args[3]);
    } else if (rule == "switch") {
      need(3);
      m = chu_switch(E, args[0], args[1], args[2]);
    } else {
      fail(ErrKind::ConfigError,
           "unknown rule '" + rule + "' (expected switch, sequence or interchange)");
    }
    r.cardinalities = {total_card(E, m.f.src), total_card(E, m.f.dst), total_card(E, m.f2.src),
                       total_card(E, m.f2.dst)};
  } catch (const EngineError& e) {
    bool cfg = e.kind == ErrKind::BudgetExceeded || e.kind == ErrKind::ConfigError ||
               e.kind == ErrKind::SchemaError;
    r.status = cfg ? "error" : "fail";
    r.witness = e.what();
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

int report_exit_code(const std::vector<SuiteReport>& reports) {
  int code = 0;
  for (const SuiteReport& s : reports)
    for (const CheckResult& r : s.results) {
      if (r.status == "error") return 2;
      if (r.status == "fail") code = 1;
    }
  return code;
}

std::string report_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  for (const SuiteReport& s : reports) {
    os << "suite " << s.suite << " (instance " << s.instance << ")\n";
    for (const CheckResult& r : s.results) {
      std::string tag = r.status == "pass"   ? "PASS "
                        : r.status == "skip" ? "SKIP "
                        : r.status == "fail" ? "FAIL "
                                             : "ERROR";
      os << "  " << tag << " " << r.check << " (" << r.millis << " ms)";
      if (!r.cardinalities.empty()) {
        os << " [";
        for (size_t i = 0; i < r.cardinalities.size(); ++i)
          os << (i ? "," : "") << r.cardinalities[i];
        os << "]";
      }
      os << "\n";
      if (!r.witness.empty()) os << "         " << r.witness << "\n";
    }
  }
  return os.str();
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const SuiteReport& s : reports) {
    nlohmann::json rep;
    rep["suite"] = s.suite;
    rep["instance"] = s.instance;
    rep["results"] = nlohmann::json::array();
    for (const CheckResult& r : s.results) {
      nlohmann::json c;
      c["check"] = r.check;
      c["instance"] = r.instance;
      c["status"] = r.status;
      c["witness"] = r.witness;
      c["cardinalities"] = r.cardinalities;
      c["millis"] = r.millis;
      rep["results"].push_back(std::move(c));
    }
    out.push_back(std::move(rep));
  }
  return out.dump(2) + "\n";
}

}  // namespace bveng
