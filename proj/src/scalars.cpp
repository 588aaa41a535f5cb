#include "bfc/scalars.h"

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bfc/error.h"
#include "text_parse.h"

namespace bfc {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error("parse-error", "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  if (sgn(r.get_den()) == 0) throw Error("parse-error", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- TLaurent

TLaurent::TLaurent(const Rational& c, int exponent) { put(exponent, c); }

void TLaurent::put(int e, const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.erase(e);
  } else {
    coeffs_[e] = c;
  }
}

Rational TLaurent::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int TLaurent::top() const {
  assert(!coeffs_.empty());
  return coeffs_.rbegin()->first;
}

int TLaurent::bottom() const {
  assert(!coeffs_.empty());
  return coeffs_.begin()->first;
}

const Rational& TLaurent::leading() const {
  assert(!coeffs_.empty());
  return coeffs_.rbegin()->second;
}

TLaurent TLaurent::shifted(int k) const {
  TLaurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), e + k, c);
  return out;
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
  for (const auto& [e, c] : o.coeffs_) put(e, coefficient(e) + c);
  return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) {
  for (const auto& [e, c] : o.coeffs_) put(e, coefficient(e) - c);
  return *this;
}

TLaurent& TLaurent::operator*=(const TLaurent& o) {
  TLaurent out;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      Rational& slot = out.coeffs_[e1 + e2];
      slot += c1 * c2;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return sgn(kv.second) == 0; });
  *this = std::move(out);
  return *this;
}

TLaurent& TLaurent::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// Dense image of a polynomial modulo p, or nothing if p divides a
// denominator or the leading coefficient.
std::optional<Residues> reduce_mod(const TLaurent& x, std::uint64_t p) {
  Residues out(x.top() + 1, 0);
  for (const auto& [e, c] : x.coefficients()) {
    const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
    out[e] = num * pow_mod(den, p - 2, p) % p;
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd(a, b) over F_p.
int gcd_degree_mod(Residues a, Residues b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + (p - f) * b[i]) % p;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True only when a and b are certainly coprime over Q: a gcd of positive
// degree survives reduction at any prime that keeps both degrees.
bool certainly_coprime(const TLaurent& a, const TLaurent& b) {
  for (std::uint64_t p : {2147483647ULL, 1000000007ULL, 998244353ULL}) {
    auto ra = reduce_mod(a, p);
    auto rb = reduce_mod(b, p);
    if (ra && rb) return gcd_degree_mod(std::move(*ra), std::move(*rb), p) == 0;
  }
  return false;
}

}  // namespace

PolyDivision divide(const TLaurent& dividend, const TLaurent& divisor) {
  if (divisor.is_zero()) throw Error("division-by-zero", "polynomial division by zero");
  assert(dividend.is_polynomial() && divisor.is_polynomial());
  PolyDivision out{TLaurent(), dividend};
  const int dtop = divisor.top();
  const Rational& lead = divisor.leading();
  while (!out.remainder.is_zero() && out.remainder.top() >= dtop) {
    TLaurent step(out.remainder.leading() / lead, out.remainder.top() - dtop);
    out.quotient += step;
    out.remainder -= step * divisor;
  }
  return out;
}

namespace {

// Integer polynomials for the exact gcd path, lowest degree first.
using Dense = std::vector<Integer>;

void make_primitive(Dense& x) {
  Integer g = 0;
  for (const Integer& c : x) g = ::gcd(g, c);
  if (sgn(g) < 0) g = -g;
  if (g > 1) {
    for (Integer& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

Dense primitive_part(const TLaurent& x) {
  Integer l = 1;
  for (const auto& [e, c] : x.coefficients()) l = lcm(l, c.get_den());
  Dense out(x.top() + 1, 0);
  for (const auto& [e, c] : x.coefficients()) out[e] = c.get_num() * (l / c.get_den());
  make_primitive(out);
  return out;
}

// Remainder of lc(y)^k x by y over Z, with content stripped as it goes.
Dense pseudo_remainder(Dense x, const Dense& y) {
  const Integer& ly = y.back();
  while (x.size() >= y.size()) {
    const Integer lx = x.back();
    const std::size_t shift = x.size() - y.size();
    for (Integer& c : x) c *= ly;
    for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= lx * y[i];
    while (!x.empty() && sgn(x.back()) == 0) x.pop_back();
    make_primitive(x);
  }
  return x;
}

// Plain Euclid over Q; only reached for Laurent inputs.
TLaurent rational_gcd(const TLaurent& a, const TLaurent& b) {
  TLaurent x = a, y = b;
  while (!y.is_zero()) {
    TLaurent r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  x *= Rational(1) / x.leading();
  return x;
}

}  // namespace

TLaurent gcd(const TLaurent& a, const TLaurent& b) {
  if (a.is_zero() || b.is_zero() || a.bottom() < 0 || b.bottom() < 0) return rational_gcd(a, b);
  if (a.top() == 0 || b.top() == 0) return TLaurent(1);
  if (certainly_coprime(a, b)) return TLaurent(1);

  Dense x = primitive_part(a), y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    Dense r = pseudo_remainder(std::move(x), y);
    if (r.empty()) break;
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (y.size() == 1) return TLaurent(1);
  TLaurent g;
  for (std::size_t e = 0; e < y.size(); ++e) {
    Rational c(y[e], y.back());
    c.canonicalize();
    g += TLaurent(c, static_cast<int>(e));
  }
  return g;
}

// ----------------------------------------------------------------- TScalar

TScalar::TScalar(const TLaurent& num) : num_(num), den_(1) {}

TScalar::TScalar(const TLaurent& num, const TLaurent& den) {
  if (den.is_zero()) throw Error("division-by-zero", "zero denominator in Q(t)");
  if (num.is_zero()) {
    num_ = TLaurent();
    den_ = TLaurent(1);
    return;
  }
  // Strip powers of t: num = t^a P, den = t^b Q with P(0), Q(0) nonzero.
  const int a = num.bottom();
  const int b = den.bottom();
  TLaurent p = num.shifted(-a);
  TLaurent q = den.shifted(-b);
  TLaurent g = gcd(p, q);
  if (g.top() > 0) {
    p = divide(p, g).quotient;
    q = divide(q, g).quotient;
  }
  const Rational inv = Rational(1) / q.leading();
  p *= inv;
  q *= inv;
  num_ = p.shifted(a - b);
  den_ = std::move(q);
}

bool TScalar::is_laurent() const noexcept { return den_ == TLaurent(1); }

bool TScalar::is_polynomial() const noexcept { return is_laurent() && num_.is_polynomial(); }

std::optional<int> TScalar::t_degree() const {
  if (num_.is_zero()) return std::nullopt;
  return num_.top() - den_.top();
}

TScalar& TScalar::operator+=(const TScalar& o) {
  if (den_ == o.den_) {
    *this = TScalar(num_ + o.num_, den_);
  } else {
    *this = TScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

TScalar& TScalar::operator-=(const TScalar& o) { return *this += -o; }

TScalar& TScalar::operator*=(const TScalar& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    if (num_.is_zero()) den_ = TLaurent(1);
    return *this;
  }
  *this = TScalar(num_ * o.num_, den_ * o.den_);
  return *this;
}

TScalar& TScalar::operator/=(const TScalar& o) {
  if (o.is_zero()) throw Error("division-by-zero", "division by zero in Q(t)");
  *this = TScalar(num_ * o.den_, den_ * o.num_);
  return *this;
}

// -------------------------------------------------------------------- text

namespace {

std::string term_string(int e, const Rational& c, bool leading) {
  std::string out;
  Rational mag = abs(c);
  const bool negative = sgn(c) < 0;
  if (leading) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (e == 0) return out + to_string(mag);
  if (mag != 1) out += to_string(mag) + "*";
  out += "t";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string to_string(const TLaurent& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = x.coefficients().rbegin(); it != x.coefficients().rend(); ++it) {
    out += term_string(it->first, it->second, leading);
    leading = false;
  }
  return out;
}

std::string to_string(const TScalar& x) {
  if (x.is_laurent()) return to_string(x.numerator());
  return "(" + to_string(x.numerator()) + ") / (" + to_string(x.denominator()) + ")";
}

TScalar parse_tscalar(std::string_view text) {
  detail::Lexer lex(text);
  TScalar value = detail::parse_scalar_expr(lex);
  lex.expect_end();
  return value;
}

TLaurent parse_laurent(std::string_view text) {
  TScalar v = parse_tscalar(text);
  if (!v.is_laurent()) {
    throw Error("parse-error", "expected a Laurent polynomial in t, got '" + std::string(text) + "'");
  }
  return v.numerator();
}

}  // namespace bfc
