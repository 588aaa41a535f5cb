#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bfc/combinatorics.h"
#include "bfc/linear.h"
#include "bfc/rational.h"

namespace bfc {

// q^m p_1^{e_1} p_2^{e_2} ...; no zero exponent is stored.
struct BosonMonomial {
  int q_power = 0;
  std::map<int, int> exponents;

  // sum_i i * e_i
  int degree() const;
  // The partition with m_i = e_i.
  Partition partition() const;
  static BosonMonomial from_partition(const Partition& lambda, int q_power = 0);

  friend bool operator==(const BosonMonomial&, const BosonMonomial&) = default;
};

// q-power ascending, then p-degree descending, then exponent vector
// (e_1, e_2, ...) lexicographically descending.  Puts p1^3 before p3.
struct BosonMonomialOrder {
  bool operator()(const BosonMonomial& a, const BosonMonomial& b) const;
};

using BosonPolynomial = LinearCombination<BosonMonomial, Rational, BosonMonomialOrder>;

BosonPolynomial operator*(const BosonPolynomial& f, const BosonPolynomial& g);

namespace boson {

BosonPolynomial constant(const Rational& c);
// p_i (i >= 1)
BosonPolynomial p(int i);
// q^m
BosonPolynomial q(int m);

// r^B(s_m): m d/dp_m for m > 0, multiplication by p_{-m} for m < 0, and
// q d/dq for m = 0.
BosonPolynomial oscillator(int m, const BosonPolynomial& f);

// S_n = sum_{mu |- n} p^mu / z_mu; 0 for n < 0 and 1 for n = 0.
BosonPolynomial elementary_schur(int n);
// Jacobi-Trudi det(S_{lambda_i + j - i}) of size length(lambda).
BosonPolynomial schur(const Partition& lambda);
// p_lambda = prod_i p_i^{m_i(lambda)}
BosonPolynomial power_sum(const Partition& lambda);

// Determinant of a square matrix of polynomials by cofactor expansion with
// memoized minors.
BosonPolynomial determinant(const std::vector<std::vector<BosonPolynomial>>& m);

// Symmetric form with <p_lambda, p_mu> = delta z_lambda on the q^0 part.
// Error{"nonzero-q-power"} if either argument has a q^m term, m != 0.
Rational hall_form(const BosonPolynomial& f, const BosonPolynomial& g);

// Coefficients in the Schur basis of a homogeneous q^0 polynomial.
// Error{"inhomogeneous-input"} / Error{"nonzero-q-power"}.
std::map<Partition, Rational, ShapeOrder> schur_expand(const BosonPolynomial& f);

// Splits f by (q-power, p-degree).
std::map<std::pair<int, int>, BosonPolynomial> graded_components(const BosonPolynomial& f);

// "(1/3)*p1^3 + (-1/3)*p3"; q-graded pieces as "q^m * (...)".
std::string to_string(const BosonPolynomial& f);
BosonPolynomial parse_polynomial(std::string_view text);

}  // namespace boson
}  // namespace bfc
