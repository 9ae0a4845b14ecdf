#include "doctest.h"

#include <functional>

#include "bvengine/finbase.hpp"

using namespace bveng;

namespace {

ErrKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const EngineError& e) {
    return e.kind;
  }
  REQUIRE(false);
  return ErrKind::ConfigError;
}

}  // namespace

TEST_CASE("builtins validate") {
  for (auto C : {builtin_I1(), builtin_I2(), builtin_I3()}) {
    CHECK_NOTHROW(validate_category(C));
  }
}

TEST_CASE("I2 is Z2 under addition") {
  FinCategory C = builtin_I2();
  CHECK(C.compose(1, 1) == 0);
  CHECK(C.compose(1, 0) == 1);
  CHECK(C.ten_m(1, 1) == 0);
  CHECK(C.sym(0, 0) == C.id(0));
  CHECK(C.hom(0, 0).size() == 2);
  CHECK(C.hom_pos(1) == 1);
}

TEST_CASE("I3 is discrete on two objects with ⊗ = addition") {
  FinCategory C = builtin_I3();
  CHECK(C.n_obj() == 2);
  CHECK(C.ten(1, 1) == 0);
  CHECK(C.hom(0, 1).empty());
  CHECK(C.hom(1, 1).size() == 1);
}

TEST_CASE("opposite and product validate and compose correctly") {
  FinCategory C = builtin_I2();
  FinCategory D = opposite(C);
  CHECK_NOTHROW(validate_category(D));
  CHECK(D.compose(1, 1) == 0);
  FinCategory P = product(opposite(C), C);
  CHECK_NOTHROW(validate_category(P));
  CHECK(P.n_obj() == 1);
  CHECK(P.n_mor() == 4);
  // (e1,e0)∘(e0,e1) = (e1,e1)
  CHECK(P.compose(1 * 2 + 0, 0 * 2 + 1) == 1 * 2 + 1);
  FinCategory P3 = product(opposite(builtin_I3()), builtin_I3());
  CHECK_NOTHROW(validate_category(P3));
  CHECK(P3.n_obj() == 4);
}

TEST_CASE("validator catches broken associativity") {
  FinCategory C;
  C.name = "bad_assoc";
  C.obj_names = {"o"};
  C.mor_names = {"id", "f", "g"};
  C.mor_src = {0, 0, 0};
  C.mor_dst = {0, 0, 0};
  C.idm = {0};
  // f∘f = g, f∘g = id, g∘f = id, g∘g = g breaks f∘(f∘g) = (f∘f)∘g
  C.cmp = {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}};
  C.ten_o = {{0}};
  C.ten_mm = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  C.sym_m = {{0}};
  C.index();
  CHECK(kind_of([&] { validate_category(C); }) == ErrKind::AssocViolation);
}

TEST_CASE("validator catches broken interchange") {
  FinCategory C = builtin_I2();
  C.cmp[1][1] = 1;  // make e1 idempotent but keep e1⊗e0 = e1
  CHECK(kind_of([&] { validate_category(C); }) == ErrKind::InterchangeViolation);
}

TEST_CASE("validator catches broken symmetry") {
  FinCategory C = builtin_I2();
  C.sym_m[0][0] = 1;
  CHECK(kind_of([&] { validate_category(C); }) == ErrKind::SymmetryViolation);
}

TEST_CASE("validator catches broken identity") {
  FinCategory C = builtin_I2();
  C.cmp[0][1] = 0;  // id∘e1 = e0
  CHECK(kind_of([&] { validate_category(C); }) == ErrKind::IdentityViolation);
}

static const char* kI2Json = R"({
  "name": "I2_from_json",
  "objects": ["o"],
  "homs": {"o,o": ["e0", "e1"]},
  "comp": [["e1","e1","e0"], ["e1","e0","e1"], ["e0","e1","e1"]],
  "ids": {"o": "e0"},
  "tensor_obj": {"o,o": "o"},
  "tensor_mor": {"e0,e1": "e1", "e1,e0": "e1", "e1,e1": "e0"},
  "unit": "o",
  "symmetry": {"o,o": "e0"},
  "budgets": {"max_nat_candidates": 500000}
})";

TEST_CASE("JSON loader round-trips a category") {
  FinCategory C = load_category_json(kI2Json, "test");
  CHECK(C.n_mor() == 2);
  CHECK(C.compose(1, 1) == 0);
  CHECK(C.max_nat_candidates == 500000);
  CHECK(C.name == "I2_from_json");
}

TEST_CASE("JSON loader rejects unknown fields") {
  std::string t = kI2Json;
  t.insert(t.rfind('}'), ", \"extra\": 1");
  CHECK(kind_of([&] { load_category_json(t, "test"); }) == ErrKind::SchemaError);
}

TEST_CASE("JSON loader rejects missing composites") {
  std::string t = R"({
    "objects": ["o"],
    "homs": {"o,o": ["e0", "e1"]},
    "comp": [],
    "ids": {"o": "e0"},
    "tensor_obj": {"o,o": "o"},
    "tensor_mor": {"e0,e1": "e1", "e1,e0": "e1", "e1,e1": "e0"},
    "unit": "o",
    "symmetry": {"o,o": "e0"}
  })";
  CHECK(kind_of([&] { load_category_json(t, "test"); }) == ErrKind::SchemaError);
}

TEST_CASE("JSON loader surfaces identity violations from the validator") {
  // e1 declared as the identity of o
  std::string t = R"({
    "objects": ["o"],
    "homs": {"o,o": ["e0", "e1"]},
    "comp": [["e1","e1","e0"], ["e1","e0","e1"], ["e0","e1","e1"], ["e0","e0","e0"]],
    "ids": {"o": "e1"},
    "tensor_obj": {"o,o": "o"},
    "tensor_mor": {"e0,e0": "e0", "e0,e1": "e1", "e1,e0": "e1", "e1,e1": "e0"},
    "unit": "o",
    "symmetry": {"o,o": "e1"}
  })";
  CHECK(kind_of([&] { load_category_json(t, "test"); }) == ErrKind::IdentityViolation);
}
