#include "bfc/geometric.h"

#include <cassert>
#include <cstdlib>

#include "bfc/error.h"
#include "text_format.h"
#include "text_parse.h"

namespace bfc {

// --------------------------------------------------------- LocalizedClass

LocalizedClass::LocalizedClass(int n) : n_(n) {
  for (const Partition& lambda : partitions_of(n)) restrictions_.emplace(lambda, TScalar());
}

LocalizedClass LocalizedClass::zero(int n) {
  if (n < 0) throw Error("degree-underflow", "X_n needs n >= 0");
  return LocalizedClass(n);
}

const TScalar& LocalizedClass::at(const Partition& lambda) const {
  auto it = restrictions_.find(lambda);
  if (it == restrictions_.end()) {
    throw Error("size-mismatch", to_string(lambda) + " is not a fixed point of X_" +
                                     std::to_string(n_));
  }
  return it->second;
}

void LocalizedClass::set(const Partition& lambda, TScalar value) {
  auto it = restrictions_.find(lambda);
  if (it == restrictions_.end()) {
    throw Error("size-mismatch", to_string(lambda) + " is not a fixed point of X_" +
                                     std::to_string(n_));
  }
  it->second = std::move(value);
}

bool LocalizedClass::is_zero() const {
  for (const auto& [lambda, r] : restrictions_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

namespace {

void require_same_size(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.n() != b.n()) {
    throw Error("size-mismatch", "classes live on X_" + std::to_string(a.n()) + " and X_" +
                                     std::to_string(b.n()));
  }
}

}  // namespace

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& o) {
  require_same_size(*this, o);
  for (auto& [lambda, r] : restrictions_) r += o.at(lambda);
  return *this;
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& o) {
  require_same_size(*this, o);
  for (auto& [lambda, r] : restrictions_) r -= o.at(lambda);
  return *this;
}

LocalizedClass& LocalizedClass::operator*=(const TScalar& c) {
  for (auto& [lambda, r] : restrictions_) r *= c;
  return *this;
}

namespace geometric {

namespace {

TScalar sign_power(int n) { return TScalar(n % 2 == 0 ? 1 : -1); }

TScalar rational_scalar(const Integer& z) { return TScalar(Rational(z)); }

int single_size(const QuiverClass& c, std::optional<int> n_hint) {
  std::optional<int> n = n_hint;
  for (const auto& [lambda, coeff] : c) {
    if (n && *n != lambda.size()) {
      throw Error("inhomogeneous-input", "class is not supported on a single size");
    }
    n = lambda.size();
  }
  return n.value_or(0);
}

}  // namespace

std::vector<int> tangent_weights(const Partition& lambda) {
  std::vector<int> out;
  for (const Box& b : boxes(lambda)) {
    const int h = hook(lambda, b);
    out.push_back(h);
    out.push_back(-h);
  }
  return out;
}

TScalar euler_class(const Partition& lambda) {
  TLaurent e(1);
  for (int w : tangent_weights(lambda)) e *= TLaurent(Rational(w), 1);
  return e;
}

LocalizedClass pushforward(const Partition& lambda, const TScalar& a, int n) {
  if (lambda.size() != n) {
    throw Error("size-mismatch", to_string(lambda) + " is not a fixed point of X_" +
                                     std::to_string(n));
  }
  LocalizedClass out = LocalizedClass::zero(n);
  out.set(lambda, a * euler_class(lambda));
  return out;
}

LocalizedClass fundamental_class(const Partition& lambda) {
  return pushforward(lambda, TScalar(1), lambda.size());
}

TScalar pullback(const LocalizedClass& alpha, const Partition& lambda) { return alpha.at(lambda); }

LocalizedClass cup(const LocalizedClass& a, const LocalizedClass& b) {
  require_same_size(a, b);
  LocalizedClass out = LocalizedClass::zero(a.n());
  for (const auto& [lambda, r] : a.restrictions()) out.set(lambda, r * b.at(lambda));
  return out;
}

TScalar integrate(const LocalizedClass& alpha) {
  TScalar total;
  for (const auto& [lambda, r] : alpha.restrictions()) {
    if (!r.is_zero()) total += r / euler_class(lambda);
  }
  return total;
}

LocalizedClass normalized_class(const Partition& lambda) {
  const int n = lambda.size();
  TScalar scale = sign_power(n) / rational_scalar(hook_product(lambda)) *
                  TScalar::monomial(Rational(1), -n);
  return scale * fundamental_class(lambda);
}

TScalar bilinear_form(const LocalizedClass& a, const LocalizedClass& b) {
  return sign_power(a.n()) * integrate(cup(a, b));
}

QuiverClass hecke_e(int k, const QuiverClass& c) {
  QuiverClass out;
  for (const auto& [lambda, coeff] : c) {
    for (const Box& b : removable_boxes(lambda, k)) {
      if (coeff.bottom() < 1) {
        throw Error("non-divisible-coefficient",
                    "E_" + std::to_string(k) + " needs a coefficient divisible by t at " +
                        to_string(lambda));
      }
      out.add(remove_box(lambda, b), coeff.shifted(-1));
    }
  }
  return out;
}

QuiverClass hecke_f(int k, const QuiverClass& c) {
  QuiverClass out;
  for (const auto& [mu, coeff] : c) {
    for (const Box& b : addable_boxes(mu, k)) out.add(add_box(mu, b), coeff.shifted(1));
  }
  return out;
}

TScalar quiver_form(const QuiverClass& a, const QuiverClass& b) {
  TScalar total;
  for (const auto& [lambda, ca] : a) {
    auto it = b.terms().find(lambda);
    if (it == b.terms().end()) continue;
    total += TScalar((ca * it->second).shifted(-2 * lambda.size()));
  }
  return total;
}

WeightVector weight_of(const Partition& lambda) {
  const DimensionVector v = dimension_vector(lambda);
  int lo = 0, hi = 0;
  if (!v.empty()) {
    lo = std::min(lo, v.begin()->first);
    hi = std::max(hi, v.rbegin()->first);
  }
  WeightVector out;
  for (int k = lo - 1; k <= hi + 1; ++k) {
    const int w = (k == 0 ? 1 : 0) - cartan_apply(v, k);
    if (w != 0) out[k] = w;
  }
  return out;
}

QuiverClass tau(const FermionState& s) {
  QuiverClass out;
  for (const auto& [mono, c] : s) {
    if (mono.charge != 0) throw Error("nonzero-charge", "tau is defined on charge 0 only");
    out.add(mono.shape, TLaurent(c, mono.energy()));
  }
  return out;
}

LocalizedClass eta(const QuiverClass& c, std::optional<int> n_hint) {
  const int n = single_size(c, n_hint);
  LocalizedClass out = LocalizedClass::zero(n);
  for (const auto& [lambda, coeff] : c) {
    out.set(lambda, TScalar(coeff) * rational_scalar(hook_product(lambda)));
  }
  return out;
}

LocalizedClass eta_raw(const QuiverClass& c, std::optional<int> n_hint) {
  const int n = single_size(c, n_hint);
  LocalizedClass out = LocalizedClass::zero(n);
  for (const auto& [lambda, coeff] : c) {
    TScalar scale = sign_power(n) / rational_scalar(hook_product(lambda)) *
                    TScalar::monomial(Rational(1), -n);
    out += scale * pushforward(lambda, TScalar(coeff), n);
  }
  return out;
}

QuiverClass eta_inverse(const LocalizedClass& beta) {
  QuiverClass out;
  for (const auto& [lambda, r] : beta.restrictions()) {
    TScalar coeff = r / rational_scalar(hook_product(lambda));
    if (!coeff.is_polynomial()) {
      throw Error("not-a-class", "restriction at " + to_string(lambda) +
                                     " does not come from a class in Q[t]");
    }
    out.add(lambda, coeff.numerator());
  }
  return out;
}

std::map<Partition, TScalar, ShapeOrder> eta_inverse_raw(const LocalizedClass& beta) {
  std::map<Partition, TScalar, ShapeOrder> out;
  const TScalar shift = TScalar::monomial(Rational(1), -beta.n());
  for (const auto& [lambda, r] : beta.restrictions()) {
    out.emplace(lambda, r / rational_scalar(hook_product(lambda)) * shift);
  }
  return out;
}

std::map<Partition, TScalar, ShapeOrder> normalized_coordinates(const LocalizedClass& beta) {
  std::map<Partition, TScalar, ShapeOrder> out;
  const TScalar tn = TScalar::monomial(Rational(1), beta.n());
  for (const auto& [lambda, r] : beta.restrictions()) {
    out.emplace(lambda, r / (rational_scalar(hook_product(lambda)) * tn));
  }
  return out;
}

BosonPolynomial phi(const LocalizedClass& beta) {
  BosonPolynomial out;
  for (const auto& [lambda, c] : normalized_coordinates(beta)) {
    if (c.is_zero()) continue;
    if (!c.is_laurent() || !c.numerator().is_constant()) {
      throw Error("inhomogeneous-input", "class is not a rational combination of the [lambda] at " +
                                             to_string(lambda));
    }
    out += c.numerator().coefficient(0) * boson::schur(lambda);
  }
  return out;
}

LocalizedClass phi_inverse(const BosonPolynomial& f, std::optional<int> n_hint) {
  int n = n_hint.value_or(0);
  if (!f.empty()) {
    n = f.begin()->first.degree();
    if (n_hint && *n_hint != n) {
      throw Error("inhomogeneous-input", "polynomial degree does not match the requested size");
    }
  }
  LocalizedClass out = LocalizedClass::zero(n);
  for (const auto& [lambda, c] : boson::schur_expand(f)) {
    out += TScalar(c) * normalized_class(lambda);
  }
  return out;
}

LocalizedClass geometric_boson(int k, const LocalizedClass& beta) {
  if (k == 0) return LocalizedClass::zero(beta.n());
  const int target = beta.n() - k;
  if (target < 0) {
    throw Error("degree-underflow", "p_" + std::to_string(k) + " cannot act on X_" +
                                        std::to_string(beta.n()));
  }
  return phi_inverse(boson::oscillator(k, phi(beta)), target);
}

LocalizedClass power_sum_class(const Partition& lambda) {
  LocalizedClass out = normalized_class(Partition());
  for (int part : lambda.parts()) out = geometric_boson(-part, out);
  return out;
}

C2ToyResult c2_toy(WeightConvention convention) {
  // Weights of the two coordinate lines at u: the x-axis (Sigma) and its
  // normal direction.
  const int sigma_weight = convention == WeightConvention::Standard ? -1 : 1;
  const int normal_weight = -sigma_weight;
  auto euler = [](int w) { return TScalar::monomial(Rational(w), 1); };

  C2ToyResult r;
  r.tangent_euler = euler(sigma_weight) * euler(normal_weight);
  // i_u! 1 restricts to the Euler class of the normal bundle of {u} in C^2,
  // i.e. the whole tangent space; [Sigma] restricts to the normal line of
  // Sigma.
  r.point_class = r.tangent_euler;
  r.sigma_class = euler(normal_weight);
  r.holds = (r.sigma_class == -TScalar::monomial(Rational(1), -1) * r.point_class);
  return r;
}

bool c2_toy_check(WeightConvention convention) { return c2_toy(convention).holds; }

// ------------------------------------------------------------------- text

namespace {

std::string laurent_prefix(const TLaurent& c) {
  if (c.is_constant()) return detail::coefficient_prefix(c.coefficient(0));
  if (c.is_monomial() && c.leading() == 1) return to_string(c) + "*";
  return "(" + to_string(c) + ")*";
}

std::string scalar_prefix(const TScalar& c) {
  if (c.is_laurent()) return laurent_prefix(c.numerator());
  return "(" + to_string(c) + ")*";
}

// Parses "factor (('*'|'/') factor)*" as a scalar.
TScalar parse_product(detail::Lexer& lex) {
  TScalar v = detail::parse_scalar_factor(lex);
  for (;;) {
    if (lex.accept('*')) {
      v *= detail::parse_scalar_factor(lex);
    } else if (lex.accept('/')) {
      v /= detail::parse_scalar_factor(lex);
    } else {
      return v;
    }
  }
}

Partition parse_shape(detail::Lexer& lex) {
  try {
    return Partition(detail::parse_int_list(lex));
  } catch (const Error& e) {
    if (e.kind() == "parse-error") throw;
    throw Error("parse-error", e.what());
  }
}

bool starts_zero(detail::Lexer& lex) {
  if (lex.peek().kind == detail::Tok::Number && lex.peek().text == "0") {
    lex.take();
    lex.expect_end();
    return true;
  }
  return false;
}

}  // namespace

std::string to_string(const QuiverClass& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [lambda, coeff] : c) {
    if (!out.empty()) out += " + ";
    out += laurent_prefix(coeff) + "1@" + bfc::to_string(lambda);
  }
  return out;
}

QuiverClass parse_quiver_class(std::string_view text) {
  detail::Lexer lex(text);
  QuiverClass out;
  if (starts_zero(lex)) return out;
  bool negate = lex.accept('-');
  for (;;) {
    // "c*1@[..]": the trailing 1 is just another factor of the product.
    TScalar coeff = parse_product(lex);
    lex.expect('@');
    Partition lambda = parse_shape(lex);
    if (!coeff.is_polynomial()) lex.fail("quiver class coefficients must lie in Q[t]");
    out.add(lambda, negate ? -coeff.numerator() : coeff.numerator());
    if (lex.accept('+')) {
      negate = false;
    } else if (lex.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  lex.expect_end();
  return out;
}

std::string to_string(const LocalizedClass& beta) {
  std::string out;
  for (const auto& [lambda, c] : normalized_coordinates(beta)) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += scalar_prefix(c) + bfc::to_string(lambda);
  }
  return out.empty() ? "0" : out;
}

LocalizedClass parse_localized_class(std::string_view text) {
  detail::Lexer lex(text);
  if (starts_zero(lex)) return LocalizedClass::zero(0);
  std::optional<LocalizedClass> out;
  bool negate = lex.accept('-');
  for (;;) {
    TScalar coeff = 1;
    if (!lex.is_symbol('[')) {
      coeff = detail::parse_scalar_factor(lex);
      for (;;) {
        if (lex.accept('/')) {
          coeff /= detail::parse_scalar_factor(lex);
        } else {
          lex.expect('*');
          if (lex.is_symbol('[')) break;
          coeff *= detail::parse_scalar_factor(lex);
        }
      }
    }
    Partition lambda = parse_shape(lex);
    LocalizedClass term = (negate ? -coeff : coeff) * normalized_class(lambda);
    if (!out) {
      out = term;
    } else if (out->n() != term.n()) {
      throw Error("inhomogeneous-input", "all classes must live on the same X_n");
    } else {
      *out += term;
    }
    if (lex.accept('+')) {
      negate = false;
    } else if (lex.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  lex.expect_end();
  return *out;
}

}  // namespace geometric
}  // namespace bfc
