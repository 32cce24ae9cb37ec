// Size limits with graceful refusal.
//
// Every potentially explosive computation checks an explicit limit first and
// throws GuardrailError with the offending size instead of grinding away.
// BGGKIT_GUARDRAIL_SCALE in the environment multiplies all limits.

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bggkit {

struct GuardrailError : std::runtime_error {
  explicit GuardrailError(const std::string& what) : std::runtime_error(what) {}
};

// A computed value contradicted a structural fact that must hold; indicates a
// bug in the library, never bad user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct Guardrails {
  long long weyl_order = 1000000;
  long long algebra_dim = 300;
  long long irrep_dim = 200;
  long long chain_dim = 20000;  // per homogeneous degree

  static Guardrails from_env() {
    Guardrails g;
    if (const char* s = std::getenv("BGGKIT_GUARDRAIL_SCALE")) {
      const double scale = std::atof(s);
      if (scale > 0) {
        g.weyl_order = static_cast<long long>(g.weyl_order * scale);
        g.algebra_dim = static_cast<long long>(g.algebra_dim * scale);
        g.irrep_dim = static_cast<long long>(g.irrep_dim * scale);
        g.chain_dim = static_cast<long long>(g.chain_dim * scale);
      }
    }
    return g;
  }

  static void check(long long value, long long limit, const std::string& what) {
    if (value > limit)
      throw GuardrailError(what + " = " + std::to_string(value) + " exceeds limit " +
                           std::to_string(limit) +
                           " (raise via BGGKIT_GUARDRAIL_SCALE or an explicit override)");
  }
};

}  // namespace bggkit
