#pragma once

#include "bfc/boson.h"
#include "bfc/fermion.h"

namespace bfc::correspondence {

// sigma(phi_lambda at charge m) = q^m S_lambda, extended linearly.
BosonPolynomial sigma(const FermionState& s);

// Inverse of sigma: each (q^m, degree n) component is expanded in the Schur
// basis through the Hall form and S_lambda is sent to phi_lambda at charge m.
FermionState sigma_inverse(const BosonPolynomial& f);

}  // namespace bfc::correspondence
