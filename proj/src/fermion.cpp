#include "bfc/fermion.h"

#include <algorithm>
#include <cstdlib>

#include "bfc/error.h"
#include "text_format.h"
#include "text_parse.h"

namespace bfc::fermion {

namespace {

// Leading window (i_0, ..., i_{count-1}) of a monomial, long enough that
// every index at or above `floor` is inside it.
std::vector<int> window(const ChargedMonomial& mono, int floor) {
  const int count = std::max(mono.shape.length(), mono.charge - floor + 1) + 1;
  return monomial_indices(mono.shape, mono.charge, count);
}

template <class Fn>
FermionState map_monomials(const FermionState& s, Fn&& fn) {
  FermionState out;
  for (const auto& [mono, c] : s) {
    for (const auto& [image, sign] : fn(mono)) out.add(image, c * sign);
  }
  return out;
}

using Images = std::vector<std::pair<ChargedMonomial, int>>;

Images psi_monomial(int j, const ChargedMonomial& mono) {
  std::vector<int> idx = window(mono, j);
  if (std::find(idx.begin(), idx.end(), j) != idx.end()) return {};
  // idx is strictly decreasing and its last entry is below j.
  auto pos = std::find_if(idx.begin(), idx.end(), [j](int i) { return i < j; });
  const int s = static_cast<int>(pos - idx.begin());
  idx.insert(pos, j);
  ChargedMonomial out{mono.charge + 1, shape_from_indices(idx, mono.charge + 1)};
  return {{std::move(out), (s % 2 == 0) ? 1 : -1}};
}

Images psi_star_monomial(int j, const ChargedMonomial& mono) {
  std::vector<int> idx = window(mono, j);
  auto pos = std::find(idx.begin(), idx.end(), j);
  if (pos == idx.end()) return {};
  const int s = static_cast<int>(pos - idx.begin());
  idx.erase(pos);
  ChargedMonomial out{mono.charge - 1, shape_from_indices(idx, mono.charge - 1)};
  return {{std::move(out), (s % 2 == 0) ? 1 : -1}};
}

}  // namespace

FermionState basis(const Partition& lambda, int charge) {
  return FermionState(ChargedMonomial{charge, lambda}, Rational(1));
}

FermionState vacuum(int charge) { return basis(Partition(), charge); }

FermionState psi(int j, const FermionState& s) {
  return map_monomials(s, [j](const ChargedMonomial& m) { return psi_monomial(j, m); });
}

FermionState psi_star(int j, const FermionState& s) {
  return map_monomials(s, [j](const ChargedMonomial& m) { return psi_star_monomial(j, m); });
}

GlMatrix elementary(int i, int j, const Rational& value) {
  GlMatrix a;
  if (sgn(value) != 0) a[{i, j}] = value;
  return a;
}

GlMatrix transpose(const GlMatrix& a) {
  GlMatrix out;
  for (const auto& [ij, v] : a) out[{ij.second, ij.first}] = v;
  return out;
}

FermionState gl_action(const GlMatrix& a, const FermionState& s) {
  FermionState out;
  for (const auto& [ij, v] : a) {
    FermionState term = psi(ij.first, psi_star(ij.second, s));
    out += v * term;
  }
  return out;
}

FermionState chevalley_e(int k, const FermionState& s) {
  return psi(k, psi_star(k + 1, s));
}

FermionState chevalley_f(int k, const FermionState& s) {
  return psi(k + 1, psi_star(k, s));
}

FermionState alpha(int n, const FermionState& s) {
  FermionState out;
  for (const auto& [mono, c] : s) {
    const FermionState single(mono, c);
    if (n == 0) {
      out += Rational(mono.charge) * single;
      continue;
    }
    // Only psi_j psi*_{j+n} with j + n inside the window and j vacant act
    // nontrivially; the window covers the tail region shifted by |n|.
    const int count = mono.shape.length() + std::abs(n) + 1;
    for (int x : monomial_indices(mono.shape, mono.charge, count)) {
      out += psi(x - n, psi_star(x, single));
    }
  }
  return out;
}

Rational hermitian_form(const FermionState& a, const FermionState& b) {
  const FermionState& small = a.size() <= b.size() ? a : b;
  const FermionState& large = a.size() <= b.size() ? b : a;
  Rational total = 0;
  for (const auto& [mono, c] : small) {
    auto it = large.terms().find(mono);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

namespace {

template <class Grade>
int common_grade(const FermionState& s, Grade grade, const char* what) {
  if (s.empty()) throw Error("zero-state", std::string(what) + " of the zero state is undefined");
  const int g = grade(s.begin()->first);
  for (const auto& [mono, c] : s) {
    if (grade(mono) != g) {
      throw Error("inhomogeneous-state", std::string("state has no single ") + what);
    }
  }
  return g;
}

}  // namespace

int charge(const FermionState& s) {
  return common_grade(s, [](const ChargedMonomial& m) { return m.charge; }, "charge");
}

int energy(const FermionState& s) {
  return common_grade(s, [](const ChargedMonomial& m) { return m.energy(); }, "energy");
}

// ------------------------------------------------------------------- text

namespace {

std::string monomial_string(const ChargedMonomial& m) {
  if (m.shape.empty()) return "vac(" + std::to_string(m.charge) + ")";
  std::string s = "phi" + bfc::to_string(m.shape);
  if (m.charge != 0) s += "@" + std::to_string(m.charge);
  return s;
}

ChargedMonomial parse_monomial(detail::Lexer& lex) {
  if (lex.is_ident("vac")) {
    lex.take();
    lex.expect('(');
    const int m = static_cast<int>(lex.take_int());
    lex.expect(')');
    return {m, Partition()};
  }
  if (lex.is_ident("phi")) {
    lex.take();
    std::vector<int> parts = detail::parse_int_list(lex);
    int m = 0;
    if (lex.accept('@')) m = static_cast<int>(lex.take_int());
    try {
      return {m, Partition(std::move(parts))};
    } catch (const Error& e) {
      throw Error("parse-error", e.what());
    }
  }
  lex.fail("expected 'phi[...]' or 'vac(m)'");
}

}  // namespace

std::string to_string(const FermionState& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : s) {
    if (!out.empty()) out += " + ";
    out += detail::coefficient_prefix(c) + monomial_string(mono);
  }
  return out;
}

FermionState parse_state(std::string_view text) {
  detail::Lexer lex(text);
  FermionState out;
  if (lex.peek().kind == detail::Tok::Number && lex.peek().text == "0") {
    lex.take();
    lex.expect_end();
    return out;
  }
  bool negate = lex.accept('-');
  for (;;) {
    Rational coeff = 1;
    if (lex.peek().kind == detail::Tok::Number || lex.is_symbol('(')) {
      TScalar c = detail::parse_scalar_factor(lex);
      while (lex.accept('/')) c /= detail::parse_scalar_factor(lex);
      if (!c.is_laurent() || !c.numerator().is_constant()) lex.fail("coefficient must be rational");
      coeff = c.numerator().coefficient(0);
      lex.expect('*');
    }
    out.add(parse_monomial(lex), negate ? Rational(-coeff) : coeff);
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

}  // namespace bfc::fermion
