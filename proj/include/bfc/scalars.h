#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bfc/rational.h"

namespace bfc {

// Laurent polynomial in the equivariant parameter t with rational
// coefficients.  No zero coefficient is ever stored.
class TLaurent {
 public:
  TLaurent() = default;
  TLaurent(const Rational& c, int exponent = 0);  // NOLINT: implicit from constants
  TLaurent(int c) : TLaurent(Rational(c)) {}      // NOLINT

  static TLaurent t(int exponent = 1) { return TLaurent(Rational(1), exponent); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<int, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int exponent) const;

  // Highest / lowest exponent present.  Undefined (asserted) on zero.
  int top() const;
  int bottom() const;
  const Rational& leading() const;

  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_constant() const noexcept {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  // True when no negative exponent occurs.
  bool is_polynomial() const noexcept { return coeffs_.empty() || bottom() >= 0; }

  // Multiplies by t^k.
  TLaurent shifted(int k) const;

  TLaurent& operator+=(const TLaurent& o);
  TLaurent& operator-=(const TLaurent& o);
  TLaurent& operator*=(const TLaurent& o);
  TLaurent& operator*=(const Rational& c);

  friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
  friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
  friend TLaurent operator*(TLaurent a, const TLaurent& b) { return a *= b; }
  friend TLaurent operator-(TLaurent a) { return a *= Rational(-1); }
  friend bool operator==(const TLaurent& a, const TLaurent& b) = default;

 private:
  void put(int e, const Rational& c);
  std::map<int, Rational> coeffs_;
};

inline bool is_zero(const TLaurent& x) { return x.is_zero(); }

// Element of Q(t).  Canonical form: the denominator is a monic polynomial
// with nonzero constant term, every power of t lives in the (Laurent)
// numerator, and gcd(numerator, denominator) = 1.  Zero is 0 / 1.
class TScalar {
 public:
  TScalar() : den_(1) {}
  TScalar(const TLaurent& num);  // NOLINT
  TScalar(const Rational& c) : TScalar(TLaurent(c)) {}  // NOLINT
  TScalar(int c) : TScalar(TLaurent(c)) {}               // NOLINT
  TScalar(const TLaurent& num, const TLaurent& den);

  static TScalar monomial(const Rational& c, int exponent) { return TLaurent(c, exponent); }

  const TLaurent& numerator() const noexcept { return num_; }
  const TLaurent& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  // Denominator 1 and no negative exponent.
  bool is_polynomial() const noexcept;
  // Denominator 1.
  bool is_laurent() const noexcept;
  // Exponent of the numerator's top term minus the degree of the denominator;
  // empty for zero.
  std::optional<int> t_degree() const;

  // Re-applies canonicalization; a no-op on any constructed value.
  TScalar normalized() const { return TScalar(num_, den_); }

  TScalar& operator+=(const TScalar& o);
  TScalar& operator-=(const TScalar& o);
  TScalar& operator*=(const TScalar& o);
  TScalar& operator/=(const TScalar& o);

  friend TScalar operator+(TScalar a, const TScalar& b) { return a += b; }
  friend TScalar operator-(TScalar a, const TScalar& b) { return a -= b; }
  friend TScalar operator*(TScalar a, const TScalar& b) { return a *= b; }
  friend TScalar operator/(TScalar a, const TScalar& b) { return a /= b; }
  friend TScalar operator-(const TScalar& a) { return TScalar(-a.num_, a.den_); }
  friend bool operator==(const TScalar& a, const TScalar& b) = default;

 private:
  TLaurent num_;
  TLaurent den_;
};

inline bool is_zero(const TScalar& x) { return x.is_zero(); }

// Polynomial division in Q[t]; both arguments must be polynomials and the
// divisor nonzero.
struct PolyDivision {
  TLaurent quotient;
  TLaurent remainder;
};
PolyDivision divide(const TLaurent& dividend, const TLaurent& divisor);
// Monic gcd in Q[t] of two polynomials (0 if both are 0).
TLaurent gcd(const TLaurent& a, const TLaurent& b);

// Text forms.  Laurent: terms in descending exponent, "c*t^e" with the usual
// abbreviations ("t", "-t^2", "3/2", "1/2*t^-1"), joined by " + " / " - ".
// TScalar: the Laurent numerator, or "(num) / (den)" when den != 1.
std::string to_string(const TLaurent& x);
std::string to_string(const TScalar& x);
TLaurent parse_laurent(std::string_view text);
TScalar parse_tscalar(std::string_view text);

}  // namespace bfc
