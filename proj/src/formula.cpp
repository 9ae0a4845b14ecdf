#include "bvengine/formula.hpp"

#include <cctype>
#include <random>

namespace bveng {

Formula f_unit() { return {}; }

Formula f_atom(std::string name) {
  Formula f;
  f.kind = FKind::Atom;
  f.atom = std::move(name);
  return f;
}

static Formula mk1(FKind k, Formula x) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(x));
  return f;
}

static Formula mk2(FKind k, Formula l, Formula r) {
  Formula f;
  f.kind = k;
  f.kids.push_back(std::move(l));
  f.kids.push_back(std::move(r));
  return f;
}

Formula f_neg(Formula x) { return mk1(FKind::Neg, std::move(x)); }
Formula f_tensor(Formula l, Formula r) { return mk2(FKind::Tensor, std::move(l), std::move(r)); }
Formula f_par(Formula l, Formula r) { return mk2(FKind::Par, std::move(l), std::move(r)); }
Formula f_seq(Formula l, Formula r) { return mk2(FKind::Seq, std::move(l), std::move(r)); }

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void err(const std::string& what) {
    fail(ErrKind::SyntaxError, what + " at position " + std::to_string(pos));
  }

  Formula par() {
    Formula f = seq();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '|') {
        if (pos + 1 < s.size() && s[pos + 1] == '|') {
          pos += 2;
          f = f_par(std::move(f), seq());
        } else {
          err("single '|', expected '||'");
        }
      } else {
        break;
      }
    }
    return f;
  }

  Formula seq() {
    Formula f = tens();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == ';') {
        ++pos;
        f = f_seq(std::move(f), tens());
      } else {
        break;
      }
    }
    return f;
  }

  Formula tens() {
    Formula f = unary();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        f = f_tensor(std::move(f), unary());
      } else {
        break;
      }
    }
    return f;
  }

  Formula unary() {
    skip();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '~') {
      ++pos;
      return f_neg(unary());
    }
    if (c == '1') {
      ++pos;
      return f_unit();
    }
    if (c == '(') {
      ++pos;
      Formula f = par();
      skip();
      if (pos >= s.size() || s[pos] != ')') err("expected ')'");
      ++pos;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t b = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return f_atom(s.substr(b, pos - b));
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

// precedence level used by the printer; higher binds tighter
int level(FKind k) {
  switch (k) {
    case FKind::Par: return 0;
    case FKind::Seq: return 1;
    case FKind::Tensor: return 2;
    default: return 3;
  }
}

void print_rec(const Formula& f, int min_level, std::string& out) {
  bool paren = level(f.kind) < min_level;
  if (paren) out += '(';
  switch (f.kind) {
    case FKind::Unit: out += '1'; break;
    case FKind::Atom: out += f.atom; break;
    case FKind::Neg:
      out += '~';
      print_rec(f.kids[0], 3, out);
      break;
    case FKind::Tensor:
      print_rec(f.kids[0], 2, out);
      out += '*';
      print_rec(f.kids[1], 3, out);
      break;
    case FKind::Seq:
      print_rec(f.kids[0], 1, out);
      out += ';';
      print_rec(f.kids[1], 2, out);
      break;
    case FKind::Par:
      print_rec(f.kids[0], 0, out);
      out += "||";
      print_rec(f.kids[1], 1, out);
      break;
  }
  if (paren) out += ')';
}

Formula gen(std::mt19937& rng, int budget, const std::vector<std::string>& atoms) {
  if (budget == 0) {
    if (atoms.empty() || rng() % 5 == 0) return f_unit();
    return f_atom(atoms[rng() % atoms.size()]);
  }
  switch (rng() % 4) {
    case 0: return f_neg(gen(rng, budget - 1, atoms));
    case 1: {
      int l = static_cast<int>(rng() % budget);
      return f_tensor(gen(rng, l, atoms), gen(rng, budget - 1 - l, atoms));
    }
    case 2: {
      int l = static_cast<int>(rng() % budget);
      return f_par(gen(rng, l, atoms), gen(rng, budget - 1 - l, atoms));
    }
    default: {
      int l = static_cast<int>(rng() % budget);
      return f_seq(gen(rng, l, atoms), gen(rng, budget - 1 - l, atoms));
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p{text};
  Formula f = p.par();
  p.skip();
  if (p.pos != text.size()) p.err("unexpected trailing input");
  return f;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

int connective_count(const Formula& f) {
  int n = f.kind == FKind::Unit || f.kind == FKind::Atom ? 0 : 1;
  for (const Formula& k : f.kids) n += connective_count(k);
  return n;
}

std::vector<Formula> random_formulas(unsigned seed, int count, int max_connectives,
                                     const std::vector<std::string>& atoms) {
  std::mt19937 rng(seed);
  std::vector<Formula> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(gen(rng, static_cast<int>(rng() % (max_connectives + 1)), atoms));
  return out;
}

ChuObj eval_formula(Engine& E, const ChuEnv& env, const Formula& f) {
  switch (f.kind) {
    case FKind::Unit: return chu_unit(E);
    case FKind::Atom: {
      auto it = env.find(f.atom);
      if (it == env.end()) fail(ErrKind::UnboundAtom, "atom '" + f.atom + "' has no binding");
      return it->second;
    }
    case FKind::Neg: return chu_dual(E, eval_formula(E, env, f.kids[0]));
    case FKind::Tensor:
      return chu_tensor(E, eval_formula(E, env, f.kids[0]), eval_formula(E, env, f.kids[1]));
    case FKind::Par:
      return chu_par(E, eval_formula(E, env, f.kids[0]), eval_formula(E, env, f.kids[1]));
    case FKind::Seq:
      return chu_seq(E, eval_formula(E, env, f.kids[0]), eval_formula(E, env, f.kids[1]));
  }
  fail(ErrKind::SyntaxError, "corrupt formula node");
}

}  // namespace bveng
