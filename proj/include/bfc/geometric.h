#pragma once

// Localized T-equivariant cohomology model.
//
// Fermionic side: the quiver varieties M(v^lambda) are points labelled by
// partitions, so a class on their union is a finite sum c_lambda(t) 1_lambda
// with c_lambda in Q[t].  Bosonic side: a class on the Hilbert scheme X_n is
// stored through its restrictions to the fixed points, which are exactly the
// M(v^lambda) with |lambda| = n.  Tangent weights at lambda are +-hook(b),
// with e_T(theta^a) = a t.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bfc/boson.h"
#include "bfc/combinatorics.h"
#include "bfc/fermion.h"
#include "bfc/linear.h"
#include "bfc/scalars.h"

namespace bfc {

using QuiverClass = LinearCombination<Partition, TLaurent, ShapeOrder>;

// A class on X_n given by its fixed-point restrictions i_lambda^*(alpha).
// Every lambda |- n has an entry, possibly zero.
class LocalizedClass {
 public:
  using Restrictions = std::map<Partition, TScalar, ShapeOrder>;

  static LocalizedClass zero(int n);

  int n() const noexcept { return n_; }
  const Restrictions& restrictions() const noexcept { return restrictions_; }
  const TScalar& at(const Partition& lambda) const;
  void set(const Partition& lambda, TScalar value);
  bool is_zero() const;

  LocalizedClass& operator+=(const LocalizedClass& o);
  LocalizedClass& operator-=(const LocalizedClass& o);
  LocalizedClass& operator*=(const TScalar& c);
  friend LocalizedClass operator+(LocalizedClass a, const LocalizedClass& b) { return a += b; }
  friend LocalizedClass operator-(LocalizedClass a, const LocalizedClass& b) { return a -= b; }
  friend LocalizedClass operator*(const TScalar& c, LocalizedClass a) { return a *= c; }
  friend bool operator==(const LocalizedClass&, const LocalizedClass&) = default;

 private:
  explicit LocalizedClass(int n);
  int n_ = 0;
  Restrictions restrictions_;
};

// Pairings <wt, alpha_k^vee>; only nonzero entries are stored.
using WeightVector = std::map<int, int>;

namespace geometric {

// Tangent weights {+hook(b), -hook(b)} at the fixed point lambda.
std::vector<int> tangent_weights(const Partition& lambda);
// prod over tangent weights of (weight * t), box by box.
TScalar euler_class(const Partition& lambda);

// i_lambda!(a): restriction a * e_T(lambda) at lambda, zero elsewhere.
// Error{"size-mismatch"} if |lambda| != n.
LocalizedClass pushforward(const Partition& lambda, const TScalar& a, int n);
// [M(v^lambda)] = i_lambda!(1)
LocalizedClass fundamental_class(const Partition& lambda);
TScalar pullback(const LocalizedClass& alpha, const Partition& lambda);
LocalizedClass cup(const LocalizedClass& a, const LocalizedClass& b);
// sum_lambda i_lambda^*(alpha) / e_T(lambda)
TScalar integrate(const LocalizedClass& alpha);
// [lambda] = ((-1)^n / h(lambda)) t^{-n} [M(v^lambda)]; restriction h t^n.
LocalizedClass normalized_class(const Partition& lambda);
// (-1)^n integral of a cup b.
TScalar bilinear_form(const LocalizedClass& a, const LocalizedClass& b);

// Hecke operators.  F_k adds a box of residue k and multiplies by t; E_k
// removes one and divides by t.  Error{"non-divisible-coefficient"} when E_k
// would leave Q[t].
QuiverClass hecke_e(int k, const QuiverClass& c);
QuiverClass hecke_f(int k, const QuiverClass& c);
// Form on the quiver side for which {t^|lambda| 1_lambda} is orthonormal.
TScalar quiver_form(const QuiverClass& a, const QuiverClass& b);

// k -> delta_{k0} - (C v^lambda)_k
WeightVector weight_of(const Partition& lambda);

// tau(phi_lambda) = t^|lambda| 1_lambda on charge 0.  Error{"nonzero-charge"}.
QuiverClass tau(const FermionState& s);

// eta with the degree identification applied: c(t) 1_lambda goes to the
// class with restriction c(t) h(lambda) at lambda, so t^n 1_lambda maps to
// [lambda].  Input must be supported on a single size n
// (Error{"inhomogeneous-input"}); n_hint fixes n for the zero class.
LocalizedClass eta(const QuiverClass& c, std::optional<int> n_hint = std::nullopt);
// Inverse of eta: coefficient i_lambda^*(beta) / h(lambda).
// Error{"not-a-class"} if a coefficient leaves Q[t].
QuiverClass eta_inverse(const LocalizedClass& beta);
// The literal formulas before the degree identification:
//   eta_raw(alpha) = ((-1)^n / h) t^{-n} i_lambda!(alpha)
//   eta_inverse_raw(beta)_lambda = (1/h) t^{-n} i_lambda^*(beta)
LocalizedClass eta_raw(const QuiverClass& c, std::optional<int> n_hint = std::nullopt);
std::map<Partition, TScalar, ShapeOrder> eta_inverse_raw(const LocalizedClass& beta);

// phi([lambda]) = S_lambda.  Error{"inhomogeneous-input"} if beta is not a
// Q-combination of the [lambda].
BosonPolynomial phi(const LocalizedClass& beta);
// Error{"inhomogeneous-input"} unless f is homogeneous at q^0; n_hint gives
// the size for f = 0.
LocalizedClass phi_inverse(const BosonPolynomial& f, std::optional<int> n_hint = std::nullopt);
// Coefficients of beta in the basis {[lambda]} (as elements of Q(t)).
std::map<Partition, TScalar, ShapeOrder> normalized_coordinates(const LocalizedClass& beta);

// Heisenberg operator p_k on H_T(X_n), realized as phi^{-1} s_k phi; p_0 = 0.
// Error{"degree-underflow"} when k > n.
LocalizedClass geometric_boson(int k, const LocalizedClass& beta);
// p_lambda = prod_i p_{-i}^{m_i} applied to the unit [empty].
LocalizedClass power_sum_class(const Partition& lambda);

// One-fixed-point model of C^2 at the origin u: T_u C^2 = theta^{-1} + theta,
// Sigma the x-axis.  Under the standard convention T_u Sigma = theta^{-1};
// the flipped convention swaps the two lines.
enum class WeightConvention { Standard, Flipped };
struct C2ToyResult {
  TScalar tangent_euler;  // e_T(T_u C^2)
  TScalar sigma_class;    // [Sigma] restricted to u
  TScalar point_class;    // [u] restricted to u
  bool holds = false;     // [Sigma] == -t^{-1} [u]
};
C2ToyResult c2_toy(WeightConvention convention = WeightConvention::Standard);
bool c2_toy_check(WeightConvention convention = WeightConvention::Standard);

// Text forms.
//   QuiverClass:    "1@[]", "t*1@[1]", "(t^2 + 1)*1@[2] + 3*1@[1,1]"
//   LocalizedClass: combination of normalized classes, "[2] + (-1)*[1,1]"
std::string to_string(const QuiverClass& c);
QuiverClass parse_quiver_class(std::string_view text);
std::string to_string(const LocalizedClass& beta);
LocalizedClass parse_localized_class(std::string_view text);

}  // namespace geometric
}  // namespace bfc
