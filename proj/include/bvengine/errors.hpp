#pragma once

#include <stdexcept>
#include <string>

namespace bveng {

// Structured failure kinds. Law violations carry the smallest witness we
// found in the message; callers that want machine-readable reports catch
// EngineError and read `kind`.
enum class ErrKind {
  AssocViolation,
  IdentityViolation,
  InterchangeViolation,
  SymmetryViolation,
  StrictnessViolation,
  NotComposable,
  SchemaError,
  BudgetExceeded,
  IllDefinedMap,
  TypeMismatch,
  MediatorNotFound,
  NotChuMorphism,
  UnboundAtom,
  SyntaxError,
  ConfigError,
};

const char* to_string(ErrKind k);

class EngineError : public std::runtime_error {
 public:
  ErrKind kind;
  EngineError(ErrKind k, const std::string& msg)
      : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) {
  throw EngineError(k, msg);
}

// Enumeration budget, charged per elementary step (one candidate cell
// assignment, one ambient element visited, ...). Shared across the checks of
// one run so a pathological instance cannot stall the suite.
struct Budget {
  long long limit = 1000000;
  long long used = 0;
  void charge(long long n, const char* what) {
    used += n;
    if (used > limit)
      fail(ErrKind::BudgetExceeded,
           std::string(what) + " exceeded max_nat_candidates=" + std::to_string(limit));
  }
};

}  // namespace bveng
