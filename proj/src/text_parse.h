#pragma once

// Internal tokenizer and recursive-descent helpers shared by the text
// parsers of every module.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bfc/error.h"
#include "bfc/rational.h"
#include "bfc/scalars.h"

namespace bfc::detail {

enum class Tok { End, Number, Ident, Symbol };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  bool at_end() const { return cur_.kind == Tok::End; }
  bool is_symbol(char c) const { return cur_.kind == Tok::Symbol && cur_.text[0] == c; }
  bool is_ident(std::string_view s) const { return cur_.kind == Tok::Ident && cur_.text == s; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  bool accept(char c) {
    if (!is_symbol(c)) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  // Optionally signed integer literal.
  long long take_int() {
    bool neg = accept('-');
    if (!neg) accept('+');
    if (cur_.kind != Tok::Number) fail("expected integer");
    long long v = 0;
    try {
      v = std::stoll(cur_.text);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
    advance();
    return neg ? -v : v;
  }

  // Character-level access for literals such as "psi*" where '*' is part
  // of the name.  Returns true and consumes the char if the very next
  // source character (no whitespace) is c.
  bool glued(char c) {
    if (cur_.kind != Tok::Symbol || cur_.text[0] != c || cur_.pos != last_end_) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse-error", what + " at offset " + std::to_string(cur_.pos) + " in '" +
                                   std::string(src_) + "'");
  }

 private:
  void advance() {
    last_end_ = pos_;
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.pos = pos_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      cur_.kind = Tok::Number;
      cur_.text = std::string(src_.substr(b, pos_ - b));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_.kind = Tok::Ident;
      cur_.text = std::string(src_.substr(b, pos_ - b));
    } else {
      cur_.kind = Tok::Symbol;
      cur_.text = std::string(1, c);
      ++pos_;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t last_end_ = 0;
  Token cur_;
};

// Rational-coefficient expression in t:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := number | 't' ['^' int] | '(' expr ')'
TScalar parse_scalar_expr(Lexer& lex);

// A coefficient in front of a basis symbol: a bare rational "3/2" or a
// parenthesized scalar expression.  Returns the value of the expression.
TScalar parse_scalar_factor(Lexer& lex);

// "[a,b,...]" as a vector of ints (validation left to the caller).
std::vector<int> parse_int_list(Lexer& lex);

}  // namespace bfc::detail
