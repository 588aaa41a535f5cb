#include "bfc/json_io.h"

#include "bfc/error.h"

namespace bfc::json_io {

namespace {

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error("parse-error", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json to_json(const FermionState& s) {
  json out = json::array();
  for (const auto& [mono, c] : s) {
    out.push_back({{"charge", mono.charge}, {"partition", mono.shape.parts()}, {"coeff", to_string(c)}});
  }
  return out;
}

FermionState fermion_from_json(const json& j) {
  return guarded([&] {
    FermionState out;
    for (const json& term : j) {
      Partition shape(term.at("partition").get<std::vector<int>>());
      out.add(ChargedMonomial{term.at("charge").get<int>(), std::move(shape)},
              parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const BosonPolynomial& f) {
  json out = json::array();
  for (const auto& [mono, c] : f) {
    json p = json::object();
    for (const auto& [i, e] : mono.exponents) p[std::to_string(i)] = e;
    out.push_back({{"q", mono.q_power}, {"p", p}, {"coeff", to_string(c)}});
  }
  return out;
}

BosonPolynomial boson_from_json(const json& j) {
  return guarded([&] {
    BosonPolynomial out;
    for (const json& term : j) {
      BosonMonomial mono;
      mono.q_power = term.at("q").get<int>();
      for (const auto& [key, e] : term.at("p").items()) {
        const int i = std::stoi(key);
        const int exponent = e.get<int>();
        if (i < 1 || exponent < 0) throw Error("parse-error", "bad p exponent entry");
        if (exponent > 0) mono.exponents[i] = exponent;
      }
      out.add(mono, parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const LocalizedClass& beta) {
  json r = json::object();
  for (const auto& [lambda, value] : beta.restrictions()) r[to_string(lambda)] = to_string(value);
  return {{"n", beta.n()}, {"restrictions", r}};
}

LocalizedClass localized_from_json(const json& j) {
  return guarded([&] {
    LocalizedClass out = LocalizedClass::zero(j.at("n").get<int>());
    for (const auto& [key, value] : j.at("restrictions").items()) {
      out.set(parse_partition(key), parse_tscalar(value.get<std::string>()));
    }
    return out;
  });
}

json to_json(const QuiverClass& c) {
  json coeffs = json::object();
  for (const auto& [lambda, coeff] : c) coeffs[to_string(lambda)] = to_string(coeff);
  return {{"coefficients", coeffs}};
}

QuiverClass quiver_from_json(const json& j) {
  return guarded([&] {
    QuiverClass out;
    for (const auto& [key, value] : j.at("coefficients").items()) {
      TLaurent c = parse_laurent(value.get<std::string>());
      if (!c.is_polynomial()) throw Error("parse-error", "quiver coefficients must lie in Q[t]");
      out.add(parse_partition(key), c);
    }
    return out;
  });
}

json to_json(const verify::Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    checks.push_back(entry);
  }
  return {{"suite", r.suite}, {"grid", r.grid}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace bfc::json_io
