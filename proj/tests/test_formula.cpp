#include "bvengine/formula.hpp"

#include <string>

#include "bvengine/events.hpp"
#include "doctest.h"

using namespace bveng;

TEST_CASE("parser shapes and precedence") {
  CHECK(parse_formula("~(a * b)") == f_neg(f_tensor(f_atom("a"), f_atom("b"))));
  CHECK(parse_formula("a ; b ; c") == f_seq(f_seq(f_atom("a"), f_atom("b")), f_atom("c")));
  CHECK(parse_formula("~a*b") == f_tensor(f_neg(f_atom("a")), f_atom("b")));
  CHECK(parse_formula("a*b||c;d") ==
        f_par(f_tensor(f_atom("a"), f_atom("b")), f_seq(f_atom("c"), f_atom("d"))));
  CHECK(parse_formula("1") == f_unit());
  CHECK(parse_formula("~~x_1") == f_neg(f_neg(f_atom("x_1"))));
  CHECK(print_formula(parse_formula("a * (b || c)")) == "a*(b||c)");
  CHECK(print_formula(parse_formula("(a;b);c")) == "a;b;c");
  CHECK(print_formula(parse_formula("a;(b;c)")) == "a;(b;c)");
}

TEST_CASE("parser errors carry positions") {
  for (const char* bad : {"a *", "(a", "a||", ")", "a | b", "~", "a b", "a & b", ""}) {
    bool threw = false;
    try {
      parse_formula(bad);
    } catch (const EngineError& e) {
      threw = true;
      CHECK(e.kind == ErrKind::SyntaxError);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    CHECK(threw);
  }
}

TEST_CASE("printer inverts the parser on the generated corpus") {
  auto corpus = random_formulas(42, 200, 4, {"a", "b", "c"});
  REQUIRE(corpus.size() == 200);
  for (const Formula& f : corpus) {
    CHECK(connective_count(f) <= 4);
    CHECK(parse_formula(print_formula(f)) == f);
  }
  CHECK(random_formulas(42, 200, 4, {"a", "b", "c"}) == corpus);
}

TEST_CASE("interpretation over the I2 optic engine") {
  auto Ep = make_engine(builtin_I2(), 50000000);
  Engine& E = *Ep;
  ChuEnv env;
  env["a"] = faithful_event(E, 0, 0);
  env["b"] = first_order_event(E, 0);
  CHECK(eval_formula(E, env, parse_formula("~~a")) == env["a"]);
  CHECK(eval_formula(E, env, parse_formula("~(a*b)")) ==
        eval_formula(E, env, parse_formula("~a||~b")));
  CHECK(eval_formula(E, env, parse_formula("1")) == chu_unit(E));
  CHECK(eval_formula(E, env, parse_formula("a;b")) == chu_seq(E, env["a"], env["b"]));
  CHECK(eval_formula(E, env, parse_formula("a*1")) == chu_tensor(E, env["a"], chu_unit(E)));
  bool threw = false;
  try {
    eval_formula(E, env, parse_formula("zzz"));
  } catch (const EngineError& e) {
    threw = true;
    CHECK(e.kind == ErrKind::UnboundAtom);
  }
  CHECK(threw);
}
