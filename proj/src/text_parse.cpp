#include "text_parse.h"

#include <vector>

namespace bfc::detail {

TScalar parse_scalar_factor(Lexer& lex) {
  if (lex.accept('(')) {
    TScalar v = parse_scalar_expr(lex);
    lex.expect(')');
    return v;
  }
  if (lex.peek().kind == Tok::Number) {
    return Rational(lex.take().text);
  }
  if (lex.is_ident("t")) {
    lex.take();
    long long e = 1;
    if (lex.accept('^')) e = lex.take_int();
    return TScalar::monomial(Rational(1), static_cast<int>(e));
  }
  lex.fail("expected a number, 't' or '('");
}

namespace {

TScalar parse_term(Lexer& lex) {
  TScalar v = parse_scalar_factor(lex);
  for (;;) {
    if (lex.accept('*')) {
      v *= parse_scalar_factor(lex);
    } else if (lex.accept('/')) {
      v /= parse_scalar_factor(lex);
    } else {
      return v;
    }
  }
}

}  // namespace

TScalar parse_scalar_expr(Lexer& lex) {
  TScalar v;
  bool negate = lex.accept('-');
  if (!negate) lex.accept('+');
  TScalar term = parse_term(lex);
  v = negate ? -term : term;
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

std::vector<int> parse_int_list(Lexer& lex) {
  std::vector<int> out;
  lex.expect('[');
  if (lex.accept(']')) return out;
  for (;;) {
    out.push_back(static_cast<int>(lex.take_int()));
    if (lex.accept(']')) return out;
    lex.expect(',');
  }
}

}  // namespace bfc::detail
