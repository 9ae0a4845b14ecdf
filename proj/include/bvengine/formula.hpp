// BV formula front end: AST, recursive-descent parser, canonical printer,
// deterministic formula generator, and interpretation into the Chu layer.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "bvengine/chu.hpp"

namespace bveng {

enum class FKind { Unit, Atom, Neg, Tensor, Par, Seq };

struct Formula {
  FKind kind = FKind::Unit;
  std::string atom;           // payload for Atom nodes
  std::vector<Formula> kids;  // one child for Neg, two for binary nodes
  bool operator==(const Formula&) const = default;
};

Formula f_unit();
Formula f_atom(std::string name);
Formula f_neg(Formula x);
Formula f_tensor(Formula l, Formula r);
Formula f_par(Formula l, Formula r);
Formula f_seq(Formula l, Formula r);

// grammar:  par := seq ("||" seq)*   seq := tens (";" tens)*
//           tens := unary ("*" unary)*
//           unary := "~" unary | "1" | ident | "(" par ")"
// binary operators left-associative, precedence ~ > * > ; > ||
Formula parse_formula(const std::string& text);  // throws SyntaxError with position
std::string print_formula(const Formula& f);     // parse(print(f)) == f

int connective_count(const Formula& f);

// fixed-seed corpus of formulas with at most max_connectives connectives each;
// uses raw mt19937 draws so the output is identical across platforms
std::vector<Formula> random_formulas(unsigned seed, int count, int max_connectives,
                                     const std::vector<std::string>& atoms);

using ChuEnv = std::map<std::string, ChuObj>;

// structural recursion: ~ -> dual, * -> tensor, || -> par, ; -> seq, 1 -> unit
ChuObj eval_formula(Engine& E, const ChuEnv& env, const Formula& f);

}  // namespace bveng
