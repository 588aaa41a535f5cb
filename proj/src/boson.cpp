#include "bfc/boson.h"

#include <cassert>
#include <mutex>

#include "bfc/error.h"
#include "text_format.h"
#include "text_parse.h"

namespace bfc {

int BosonMonomial::degree() const {
  int d = 0;
  for (const auto& [i, e] : exponents) d += i * e;
  return d;
}

Partition BosonMonomial::partition() const {
  std::vector<int> parts;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    parts.insert(parts.end(), it->second, it->first);
  }
  return Partition(std::move(parts));
}

BosonMonomial BosonMonomial::from_partition(const Partition& lambda, int q_power) {
  BosonMonomial m;
  m.q_power = q_power;
  for (int part : lambda.parts()) ++m.exponents[part];
  return m;
}

bool BosonMonomialOrder::operator()(const BosonMonomial& a, const BosonMonomial& b) const {
  if (a.q_power != b.q_power) return a.q_power < b.q_power;
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ia = a.exponents.begin();
  auto ib = b.exponents.begin();
  // Walk both exponent vectors from p_1 upward.
  while (ia != a.exponents.end() || ib != b.exponents.end()) {
    if (ib == b.exponents.end()) return true;
    if (ia == a.exponents.end()) return false;
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

BosonPolynomial operator*(const BosonPolynomial& f, const BosonPolynomial& g) {
  BosonPolynomial out;
  for (const auto& [mf, cf] : f) {
    for (const auto& [mg, cg] : g) {
      BosonMonomial m = mf;
      m.q_power += mg.q_power;
      for (const auto& [i, e] : mg.exponents) m.exponents[i] += e;
      out.add(m, cf * cg);
    }
  }
  return out;
}

namespace boson {

BosonPolynomial constant(const Rational& c) { return BosonPolynomial(BosonMonomial{}, c); }

BosonPolynomial p(int i) {
  assert(i >= 1);
  BosonMonomial m;
  m.exponents[i] = 1;
  return BosonPolynomial(m, Rational(1));
}

BosonPolynomial q(int power) {
  BosonMonomial m;
  m.q_power = power;
  return BosonPolynomial(m, Rational(1));
}

BosonPolynomial oscillator(int m, const BosonPolynomial& f) {
  if (m < 0) return p(-m) * f;
  BosonPolynomial out;
  for (const auto& [mono, c] : f) {
    if (m == 0) {
      out.add(mono, c * mono.q_power);
      continue;
    }
    auto it = mono.exponents.find(m);
    if (it == mono.exponents.end()) continue;
    BosonMonomial d = mono;
    const int e = it->second;
    if (e == 1) {
      d.exponents.erase(m);
    } else {
      --d.exponents[m];
    }
    out.add(d, c * m * e);
  }
  return out;
}

namespace {

template <class Key, class Value, class Less = std::less<Key>>
class Memo {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value, Less> cache_;
};

}  // namespace

BosonPolynomial elementary_schur(int n) {
  if (n < 0) return {};
  if (n == 0) return constant(1);
  static Memo<int, BosonPolynomial> memo;
  return memo.get(n, [n] {
    BosonPolynomial out;
    for (const Partition& mu : partitions_of(n)) {
      out.add(BosonMonomial::from_partition(mu), Rational(1) / Rational(z_factor(mu)));
    }
    return out;
  });
}

BosonPolynomial determinant(const std::vector<std::vector<BosonPolynomial>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return constant(1);
  assert(n < 31);
  // minor[mask] = det of rows (n - popcount(mask))..n-1 restricted to the
  // columns in mask.
  std::map<unsigned, BosonPolynomial> minors;
  minors[0] = constant(1);
  for (int size = 1; size <= n; ++size) {
    const int r = n - size;
    std::map<unsigned, BosonPolynomial> next;
    for (const auto& [mask, sub] : minors) {
      if (sub.empty()) continue;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        if (m[r][c].empty()) continue;
        // Sign of putting column c in front of the columns already in mask.
        const int before = __builtin_popcount(mask & ((1u << c) - 1));
        BosonPolynomial term = m[r][c] * sub;
        if (before % 2) term *= Rational(-1);
        next[mask | (1u << c)] += term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((n == 32) ? ~0u : ((1u << n) - 1));
  return it == minors.end() ? BosonPolynomial{} : it->second;
}

BosonPolynomial schur(const Partition& lambda) {
  static Memo<Partition, BosonPolynomial> memo;
  return memo.get(lambda, [&lambda] {
    const int l = lambda.length();
    std::vector<std::vector<BosonPolynomial>> m(l, std::vector<BosonPolynomial>(l));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) m[i][j] = elementary_schur(lambda.row(i) + j - i);
    }
    return determinant(m);
  });
}

BosonPolynomial power_sum(const Partition& lambda) {
  return BosonPolynomial(BosonMonomial::from_partition(lambda), Rational(1));
}

namespace {

void require_q0(const BosonPolynomial& f) {
  for (const auto& [mono, c] : f) {
    if (mono.q_power != 0) {
      throw Error("nonzero-q-power", "form is defined on the q^0 component only");
    }
  }
}

}  // namespace

Rational hall_form(const BosonPolynomial& f, const BosonPolynomial& g) {
  require_q0(f);
  require_q0(g);
  Rational total = 0;
  for (const auto& [mono, c] : f) {
    auto it = g.terms().find(mono);
    if (it == g.terms().end()) continue;
    total += c * it->second * Rational(z_factor(mono.partition()));
  }
  return total;
}

std::map<Partition, Rational, ShapeOrder> schur_expand(const BosonPolynomial& f) {
  require_q0(f);
  std::map<Partition, Rational, ShapeOrder> out;
  if (f.empty()) return out;
  const int n = f.begin()->first.degree();
  for (const auto& [mono, c] : f) {
    if (mono.degree() != n) throw Error("inhomogeneous-input", "polynomial is not homogeneous");
  }
  BosonPolynomial rebuilt;
  for (const Partition& lambda : partitions_of(n)) {
    const BosonPolynomial s = schur(lambda);
    Rational c = hall_form(f, s);
    if (sgn(c) == 0) continue;
    rebuilt += c * s;
    out.emplace(lambda, c);
  }
  if (!(rebuilt == f)) throw Error("internal", "Schur expansion failed to reconstruct input");
  return out;
}

std::map<std::pair<int, int>, BosonPolynomial> graded_components(const BosonPolynomial& f) {
  std::map<std::pair<int, int>, BosonPolynomial> out;
  for (const auto& [mono, c] : f) out[{mono.q_power, mono.degree()}].add(mono, c);
  return out;
}

// ------------------------------------------------------------------- text

namespace {

std::string monomial_string(const BosonMonomial& m) {
  std::string s;
  for (const auto& [i, e] : m.exponents) {
    if (!s.empty()) s += "*";
    s += "p" + std::to_string(i);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string q0_string(const BosonPolynomial& f) {
  std::string out;
  for (const auto& [mono, c] : f) {
    if (!out.empty()) out += " + ";
    out += mono.exponents.empty() ? detail::constant_term(c)
                                  : detail::coefficient_prefix(c) + monomial_string(mono);
  }
  return out;
}

BosonPolynomial parse_expr(detail::Lexer& lex);

BosonPolynomial parse_factor(detail::Lexer& lex) {
  if (lex.accept('(')) {
    BosonPolynomial v = parse_expr(lex);
    lex.expect(')');
    return v;
  }
  const detail::Token tok = lex.peek();
  if (tok.kind == detail::Tok::Number) {
    lex.take();
    return constant(Rational(tok.text));
  }
  if (tok.kind == detail::Tok::Ident) {
    if (tok.text == "q") {
      lex.take();
      long long e = 1;
      if (lex.accept('^')) e = lex.take_int();
      return q(static_cast<int>(e));
    }
    if (tok.text.size() > 1 && tok.text[0] == 'p' &&
        tok.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      lex.take();
      const int i = std::stoi(tok.text.substr(1));
      if (i < 1) lex.fail("power-sum index must be positive");
      long long e = 1;
      if (lex.accept('^')) e = lex.take_int();
      if (e < 0) lex.fail("negative exponent of a p variable");
      BosonPolynomial out = constant(1);
      for (long long r = 0; r < e; ++r) out = out * p(i);
      return out;
    }
  }
  lex.fail("expected a number, p<i>, q or '('");
}

BosonPolynomial parse_term(detail::Lexer& lex) {
  BosonPolynomial v = parse_factor(lex);
  for (;;) {
    if (lex.accept('*')) {
      v = v * parse_factor(lex);
    } else if (lex.accept('/')) {
      BosonPolynomial d = parse_factor(lex);
      if (d.size() != 1 || !(d.begin()->first == BosonMonomial{})) {
        lex.fail("division only by nonzero rational constants");
      }
      v *= Rational(1) / d.begin()->second;
    } else {
      return v;
    }
  }
}

BosonPolynomial parse_expr(detail::Lexer& lex) {
  const bool negate = lex.accept('-');
  if (!negate) lex.accept('+');
  BosonPolynomial v = parse_term(lex);
  if (negate) v *= Rational(-1);
  for (;;) {
    if (lex.accept('+')) {
      v += parse_term(lex);
    } else if (lex.accept('-')) {
      v -= parse_term(lex);
    } else {
      return v;
    }
  }
}

}  // namespace

std::string to_string(const BosonPolynomial& f) {
  if (f.empty()) return "0";
  std::map<int, BosonPolynomial> by_q;
  for (const auto& [mono, c] : f) {
    BosonMonomial m = mono;
    m.q_power = 0;
    by_q[mono.q_power].add(m, c);
  }
  std::string out;
  for (const auto& [m, part] : by_q) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += q0_string(part);
    } else if (part == constant(1)) {
      out += "q^" + std::to_string(m);
    } else {
      out += "q^" + std::to_string(m) + " * (" + q0_string(part) + ")";
    }
  }
  return out;
}

BosonPolynomial parse_polynomial(std::string_view text) {
  detail::Lexer lex(text);
  BosonPolynomial v = parse_expr(lex);
  lex.expect_end();
  return v;
}

}  // namespace boson
}  // namespace bfc
