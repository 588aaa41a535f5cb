#include "bfc/correspondence.h"

namespace bfc::correspondence {

BosonPolynomial sigma(const FermionState& s) {
  BosonPolynomial out;
  for (const auto& [mono, c] : s) {
    out += c * (boson::q(mono.charge) * boson::schur(mono.shape));
  }
  return out;
}

FermionState sigma_inverse(const BosonPolynomial& f) {
  FermionState out;
  for (const auto& [grade, part] : boson::graded_components(f)) {
    const int m = grade.first;
    BosonPolynomial untwisted = boson::q(-m) * part;
    for (const auto& [lambda, c] : boson::schur_expand(untwisted)) {
      out.add(ChargedMonomial{m, lambda}, c);
    }
  }
  return out;
}

}  // namespace bfc::correspondence
