#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bfc/boson.h"
#include "bfc/fermion.h"
#include "bfc/geometric.h"

namespace bfc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// A state literal on any of the four sides.
using AnyState = std::variant<FermionState, BosonPolynomial, QuiverClass, LocalizedClass>;

// Fermionic literals mention "phi" or "vac", quiver classes contain "@[",
// localized classes are sums of "[lambda]" terms, anything else is a
// bosonic polynomial.
AnyState parse_any_state(const std::string& text);
std::string render(const AnyState& state);

// One parsed operator token, e.g. psi*(3) or alpha(-1).
struct OperatorToken {
  std::string name;  // psi, psi*, alpha, e, f, E, F, p
  int index = 0;
};
std::vector<OperatorToken> parse_operators(const std::string& text);
// Applies the tokens right to left.  Error{"domain-mismatch"} when an
// operator does not act on the state's side.
AnyState apply_operators(const std::vector<OperatorToken>& ops, AnyState state);

// Full command-line entry point; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfc::cli
