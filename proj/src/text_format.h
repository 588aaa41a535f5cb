#pragma once

#include <string>

#include "bfc/rational.h"

namespace bfc::detail {

// Prefix printed in front of a basis symbol: "" for 1, "3*" for a natural
// number, "(-1/2)*" otherwise.
inline std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (sgn(c) > 0 && c.get_den() == 1) return c.get_str() + "*";
  return "(" + c.get_str() + ")*";
}

// A standalone constant term: "3", or "(-1/2)".
inline std::string constant_term(const Rational& c) {
  if (sgn(c) > 0 && c.get_den() == 1) return c.get_str();
  return "(" + c.get_str() + ")";
}

}  // namespace bfc::detail
