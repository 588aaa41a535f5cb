#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "bfc/correspondence.h"
#include "bfc/error.h"
#include "bfc/json_io.h"
#include "bfc/verify.h"
#include "text_parse.h"

namespace bfc::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* side_name(const AnyState& s) {
  return std::visit(Overloaded{[](const FermionState&) { return "fermionic"; },
                               [](const BosonPolynomial&) { return "bosonic"; },
                               [](const QuiverClass&) { return "quiver"; },
                               [](const LocalizedClass&) { return "localized"; }},
                    s);
}

json_io::json state_json(const AnyState& s) {
  return std::visit([](const auto& v) { return json_io::to_json(v); }, s);
}

[[noreturn]] void mismatch(const OperatorToken& op, const AnyState& s) {
  throw Error("domain-mismatch", "operator " + op.name + "(" + std::to_string(op.index) +
                                     ") does not act on a " + side_name(s) + " state");
}

AnyState apply_one(const OperatorToken& op, const AnyState& state) {
  const std::string& n = op.name;
  const int k = op.index;
  if (const auto* f = std::get_if<FermionState>(&state)) {
    if (n == "psi") return fermion::psi(k, *f);
    if (n == "psi*") return fermion::psi_star(k, *f);
    if (n == "alpha") return fermion::alpha(k, *f);
    if (n == "e") return fermion::chevalley_e(k, *f);
    if (n == "f") return fermion::chevalley_f(k, *f);
  } else if (const auto* b = std::get_if<BosonPolynomial>(&state)) {
    if (n == "alpha" || n == "p") return boson::oscillator(k, *b);
  } else if (const auto* q = std::get_if<QuiverClass>(&state)) {
    if (n == "e" || n == "E") return geometric::hecke_e(k, *q);
    if (n == "f" || n == "F") return geometric::hecke_f(k, *q);
  } else if (const auto* l = std::get_if<LocalizedClass>(&state)) {
    if (n == "p") return geometric::geometric_boson(k, *l);
  }
  mismatch(op, state);
}

void print_error(const Error& e, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    out << json_io::json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
  }
  err << "error[" << e.kind() << "]: " << e.what() << "\n";
}

std::string map_string(const std::map<int, int>& m) {
  std::string s = "{";
  for (const auto& [k, v] : m) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ": " + std::to_string(v);
  }
  return s + "}";
}

json_io::json map_json(const std::map<int, int>& m) {
  json_io::json j = json_io::json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

AnyState parse_any_state(const std::string& text) {
  if (text.find("@[") != std::string::npos) return geometric::parse_quiver_class(text);
  if (text.find("phi") != std::string::npos || text.find("vac") != std::string::npos) {
    return fermion::parse_state(text);
  }
  if (text.find('[') != std::string::npos) return geometric::parse_localized_class(text);
  return boson::parse_polynomial(text);
}

std::string render(const AnyState& state) {
  return std::visit(Overloaded{[](const FermionState& s) { return fermion::to_string(s); },
                               [](const BosonPolynomial& f) { return boson::to_string(f); },
                               [](const QuiverClass& c) { return geometric::to_string(c); },
                               [](const LocalizedClass& b) { return geometric::to_string(b); }},
                    state);
}

std::vector<OperatorToken> parse_operators(const std::string& text) {
  detail::Lexer lex(text);
  std::vector<OperatorToken> out;
  while (!lex.at_end()) {
    if (lex.peek().kind != detail::Tok::Ident) lex.fail("expected an operator name");
    OperatorToken op{lex.take().text, 0};
    if (op.name == "psi" && lex.glued('*')) op.name = "psi*";
    static const std::vector<std::string> known = {"psi", "psi*", "alpha", "e", "f", "E", "F", "p"};
    if (std::find(known.begin(), known.end(), op.name) == known.end()) {
      lex.fail("unknown operator '" + op.name + "'");
    }
    lex.expect('(');
    op.index = static_cast<int>(lex.take_int());
    lex.expect(')');
    out.push_back(op);
  }
  if (out.empty()) throw Error("parse-error", "no operators given");
  return out;
}

AnyState apply_operators(const std::vector<OperatorToken>& ops, AnyState state) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) state = apply_one(*it, state);
  return state;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact boson-fermion correspondence toolkit", "bfc"};
  app.require_subcommand(1);
  bool json = false;

  std::string partition_text, ops_text, state_text, other_text, suite;
  bool inverse = false, geometric_route = false;
  int charge = 0;
  verify::Options vopts;

  auto* schur_cmd = app.add_subcommand("schur", "Print the Schur polynomial S_lambda in p-variables");
  schur_cmd->add_option("partition", partition_text, "Partition literal, e.g. [2,1]")->required();
  schur_cmd->add_option("--charge", charge, "Multiply by q^charge");
  schur_cmd->add_flag("--json", json, "Emit JSON");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a product of operators, rightmost first");
  apply_cmd->footer(
      "Tokens by side:\n"
      "  fermionic   psi(j) psi*(j) alpha(n) e(k) f(k)\n"
      "  bosonic     alpha(n) p(n)          (the oscillator action)\n"
      "  quiver      e(k) f(k) E(k) F(k)    (Hecke operators)\n"
      "  localized   p(k)                   (geometric bosons)");
  apply_cmd->add_option("operators", ops_text, "Operator tokens, e.g. \"alpha(-1) psi*(0)\"")->required();
  apply_cmd->add_option("state", state_text,
                        "State literal: phi[2,1]@m, vac(m); p1^2*p3 + q^2; t*1@[1]; [2] + (-1)*[1,1]")
      ->required();
  apply_cmd->add_flag("--json", json, "Emit JSON");

  auto* corr_cmd = app.add_subcommand("correspond", "Map a fermionic state through sigma");
  corr_cmd->add_option("state", state_text, "Fermionic state (bosonic with --inverse)")->required();
  corr_cmd->add_flag("--inverse", inverse, "Apply sigma^{-1} to a bosonic polynomial");
  corr_cmd->add_flag("--geometric", geometric_route, "Also route through tau, eta and phi");
  corr_cmd->add_flag("--json", json, "Emit JSON");

  auto* inner_cmd = app.add_subcommand("inner", "Pair two states of the same side with its form");
  inner_cmd->add_option("a", state_text, "First state")->required();
  inner_cmd->add_option("b", other_text, "Second state")->required();
  inner_cmd->add_flag("--json", json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run an identity sweep");
  std::string suite_list;
  for (const auto& name : verify::suite_names()) suite_list += " " + name;
  verify_cmd->add_option("suite", suite, "One of:" + suite_list)->required();
  verify_cmd->add_option("--max-size", vopts.max_size, "Largest energy / partition size")
      ->check(CLI::Range(0, 14));
  verify_cmd->add_option("--max-index", vopts.max_index, "Bound on operator indices")
      ->check(CLI::Range(0, 16));
  verify_cmd->add_option("--charge", vopts.max_charge, "Sweep charges -C..C")->check(CLI::Range(0, 8));
  verify_cmd->add_flag("--json", json, "Emit JSON");

  auto* localize_cmd =
      app.add_subcommand("localize", "Fixed-point data of X_n at the point labelled by lambda");
  localize_cmd->add_option("partition", partition_text, "Partition literal")->required();
  localize_cmd->add_flag("--json", json, "Emit JSON");

  std::vector<const char*> argv;
  argv.push_back("bfc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*schur_cmd) {
      const Partition lambda = parse_partition(partition_text);
      const BosonPolynomial s = boson::q(charge) * boson::schur(lambda);
      if (json) {
        out << json_io::json{{"partition", to_string(lambda)},
                             {"charge", charge},
                             {"text", boson::to_string(s)},
                             {"polynomial", json_io::to_json(s)}}
                   .dump(2)
            << "\n";
      } else {
        out << boson::to_string(s) << "\n";
      }
      return kOk;
    }

    if (*apply_cmd) {
      const auto ops = parse_operators(ops_text);
      const AnyState result = apply_operators(ops, parse_any_state(state_text));
      if (json) {
        out << json_io::json{{"side", side_name(result)},
                             {"text", render(result)},
                             {"state", state_json(result)}}
                   .dump(2)
            << "\n";
      } else {
        out << render(result) << "\n";
      }
      return kOk;
    }

    if (*corr_cmd) {
      if (inverse) {
        const FermionState s = correspondence::sigma_inverse(boson::parse_polynomial(state_text));
        if (json) {
          out << json_io::json{{"text", fermion::to_string(s)}, {"state", json_io::to_json(s)}}.dump(2)
              << "\n";
        } else {
          out << fermion::to_string(s) << "\n";
        }
        return kOk;
      }
      const FermionState s = fermion::parse_state(state_text);
      const BosonPolynomial image = correspondence::sigma(s);
      if (!geometric_route) {
        if (json) {
          out << json_io::json{{"text", boson::to_string(image)}, {"polynomial", json_io::to_json(image)}}
                     .dump(2)
              << "\n";
        } else {
          out << boson::to_string(image) << "\n";
        }
        return kOk;
      }
      std::optional<int> n_hint;
      if (!s.empty()) n_hint = fermion::energy(s);
      const QuiverClass t = geometric::tau(s);
      const LocalizedClass e = geometric::eta(t, n_hint);
      const BosonPolynomial p = geometric::phi(e);
      const bool commutes = (p == image);
      if (json) {
        out << json_io::json{{"tau", json_io::to_json(t)},
                             {"eta", json_io::to_json(e)},
                             {"phi", json_io::to_json(p)},
                             {"sigma", json_io::to_json(image)},
                             {"commutes", commutes}}
                   .dump(2)
            << "\n";
      } else {
        out << "tau:   " << geometric::to_string(t) << "\n"
            << "eta:   " << geometric::to_string(e) << "\n"
            << "phi:   " << boson::to_string(p) << "\n"
            << "sigma: " << boson::to_string(image) << "\n"
            << "commutes: " << (commutes ? "yes" : "no") << "\n";
      }
      return commutes ? kOk : kVerificationFailed;
    }

    if (*inner_cmd) {
      const AnyState a = parse_any_state(state_text);
      const AnyState b = parse_any_state(other_text);
      if (a.index() != b.index()) {
        throw Error("domain-mismatch", std::string("cannot pair a ") + side_name(a) + " state with a " +
                                           side_name(b) + " state");
      }
      std::string value = std::visit(
          Overloaded{
              [&](const FermionState& x) {
                return to_string(fermion::hermitian_form(x, std::get<FermionState>(b)));
              },
              [&](const BosonPolynomial& x) {
                return to_string(boson::hall_form(x, std::get<BosonPolynomial>(b)));
              },
              [&](const QuiverClass& x) {
                return to_string(geometric::quiver_form(x, std::get<QuiverClass>(b)));
              },
              [&](const LocalizedClass& x) {
                return to_string(geometric::bilinear_form(x, std::get<LocalizedClass>(b)));
              }},
          a);
      if (json) {
        out << json_io::json{{"side", side_name(a)}, {"value", value}}.dump(2) << "\n";
      } else {
        out << value << "\n";
      }
      return kOk;
    }

    if (*verify_cmd) {
      const auto reports = verify::run(suite, vopts);
      bool ok = true;
      json_io::json list = json_io::json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        list.push_back(json_io::to_json(r));
      }
      if (json) {
        out << json_io::json{{"passed", ok}, {"reports", list}}.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          for (const auto& c : r.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " (" << c.cases
                << " cases)";
            if (!c.passed) out << " counterexample: " << c.counterexample;
            out << "\n";
          }
        }
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
      }
      return ok ? kOk : kVerificationFailed;
    }

    if (*localize_cmd) {
      const Partition lambda = parse_partition(partition_text);
      const LocalizedClass cls = geometric::normalized_class(lambda);
      std::vector<int> hooks;
      for (const Box& b : boxes(lambda)) hooks.push_back(hook(lambda, b));
      const auto dv = dimension_vector(lambda);
      const auto wt = geometric::weight_of(lambda);
      const TScalar e = geometric::euler_class(lambda);
      const TScalar restriction = cls.at(lambda);
      if (json) {
        out << json_io::json{{"partition", to_string(lambda)},
                             {"n", lambda.size()},
                             {"hooks", hooks},
                             {"hook_product", hook_product(lambda).get_str()},
                             {"z", z_factor(lambda).get_str()},
                             {"euler_class", to_string(e)},
                             {"normalized_class_restriction", to_string(restriction)},
                             {"dimension_vector", map_json(dv)},
                             {"weight", map_json(wt)}}
                   .dump(2)
            << "\n";
      } else {
        std::string hook_list;
        for (int h : hooks) hook_list += (hook_list.empty() ? "" : " ") + std::to_string(h);
        out << "partition: " << to_string(lambda) << "\n"
            << "hooks: " << hook_list << "\n"
            << "hook_product: " << hook_product(lambda).get_str() << "\n"
            << "z: " << z_factor(lambda).get_str() << "\n"
            << "euler_class: " << to_string(e) << "\n"
            << "normalized_class_restriction: " << to_string(restriction) << "\n"
            << "dimension_vector: " << map_string(dv) << "\n"
            << "weight: " << map_string(wt) << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    print_error(e, json, out, err);
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bfc::cli
