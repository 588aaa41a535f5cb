#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "bfc/combinatorics.h"
#include "bfc/linear.h"
#include "bfc/rational.h"

namespace bfc {

// Semi-infinite monomial i_0 ^ i_1 ^ ... encoded by its charge m and the
// partition lambda with i_k = (m - k) + lambda_{k+1}.
struct ChargedMonomial {
  int charge = 0;
  Partition shape;

  int energy() const noexcept { return shape.size(); }

  friend bool operator==(const ChargedMonomial&, const ChargedMonomial&) = default;
};

// Charge, then energy, then reverse-lexicographic shape.
struct MonomialOrder {
  bool operator()(const ChargedMonomial& a, const ChargedMonomial& b) const {
    if (a.charge != b.charge) return a.charge < b.charge;
    return ShapeOrder{}(a.shape, b.shape);
  }
};

using FermionState = LinearCombination<ChargedMonomial, Rational, MonomialOrder>;

// Finitely supported matrix in gl-infinity.
using GlMatrix = std::map<std::pair<int, int>, Rational>;

namespace fermion {

FermionState basis(const Partition& lambda, int charge = 0);
FermionState vacuum(int charge);

// Wedging operator psi_j: inserts j, sign (-1)^s where s is the number of
// indices above j.  Raises the charge by one.
FermionState psi(int j, const FermionState& s);
// Contracting operator psi*_j: deletes j from position s with sign (-1)^s.
FermionState psi_star(int j, const FermionState& s);

// r(a) = sum a_ij psi_i psi*_j.
FermionState gl_action(const GlMatrix& a, const FermionState& s);
GlMatrix elementary(int i, int j, const Rational& value = 1);
GlMatrix transpose(const GlMatrix& a);

// e_k = r(E_{k,k+1}), f_k = r(E_{k+1,k}).  On charge 0 these remove / add a
// box of residue k.
FermionState chevalley_e(int k, const FermionState& s);
FermionState chevalley_f(int k, const FermionState& s);

// Free boson alpha_n = sum_j psi_j psi*_{j+n} (n != 0); alpha_0 is the charge.
FermionState alpha(int n, const FermionState& s);

// Symmetric bilinear form in which the monomials are orthonormal.
Rational hermitian_form(const FermionState& a, const FermionState& b);

// Common charge / energy; Error{"zero-state"} or Error{"inhomogeneous-state"}.
int charge(const FermionState& s);
int energy(const FermionState& s);

// Text: "phi[2,1]" (charge 0), "phi[2,1]@m", "vac(m)" for the empty shape,
// with coefficients "c*" in front ("(-1/2)*" when not a natural number).
std::string to_string(const FermionState& s);
FermionState parse_state(std::string_view text);

}  // namespace fermion
}  // namespace bfc
