#include "bfc/verify.h"

#include <cstdlib>
#include <optional>

#include "bfc/boson.h"
#include "bfc/correspondence.h"
#include "bfc/error.h"
#include "bfc/fermion.h"
#include "bfc/geometric.h"

namespace bfc::verify {

bool Report::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

class Recorder {
 public:
  Recorder(Report& report, std::string name) : report_(report) {
    report_.checks.push_back(Check{std::move(name), true, 0, {}});
    index_ = report_.checks.size() - 1;
  }

  template <class Witness>
  void expect(bool ok, Witness&& witness) {
    Check& c = report_.checks[index_];
    ++c.cases;
    if (!ok && c.passed) {
      c.passed = false;
      c.counterexample = witness();
    }
  }

 private:
  Report& report_;
  std::size_t index_;
};

std::string grid_text(const Options& o) {
  return "max_size=" + std::to_string(o.max_size) + " max_index=" + std::to_string(o.max_index) +
         " charges=" + std::to_string(-o.max_charge) + ".." + std::to_string(o.max_charge);
}

std::vector<ChargedMonomial> fermion_grid(int min_charge, int max_charge, int max_size) {
  std::vector<ChargedMonomial> out;
  for (int m = min_charge; m <= max_charge; ++m) {
    for (int n = 0; n <= max_size; ++n) {
      for (Partition& lambda : partitions_of(n)) out.push_back({m, std::move(lambda)});
    }
  }
  return out;
}

std::vector<Partition> shapes_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    for (Partition& lambda : partitions_of(n)) out.push_back(std::move(lambda));
  }
  return out;
}

FermionState single(const ChargedMonomial& m) { return FermionState(m, Rational(1)); }

std::string describe(const ChargedMonomial& m) { return fermion::to_string(single(m)); }

std::string op_label(const char* name, int a, int b, const std::string& on) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ") on " + on;
}

// Applies p_k, treating an action below X_0 as zero.
std::optional<LocalizedClass> boson_or_zero(int k, const std::optional<LocalizedClass>& beta) {
  if (!beta) return std::nullopt;
  if (beta->n() - k < 0) return std::nullopt;
  return geometric::geometric_boson(k, *beta);
}

bool equal_or_zero(const std::optional<LocalizedClass>& a, const std::optional<LocalizedClass>& b) {
  if (a && b) return *a == *b;
  if (a) return a->is_zero();
  if (b) return b->is_zero();
  return true;
}

}  // namespace

// ------------------------------------------------------------------ suites

Report clifford(const Options& opts) {
  Report report{"clifford", grid_text(opts), {}};
  const auto grid = fermion_grid(-opts.max_charge, opts.max_charge, opts.max_size);
  const int K = opts.max_index;
  {
    Recorder anti_mixed(report, "psi_i psi*_j + psi*_j psi_i = delta_ij");
    Recorder anti_psi(report, "psi_i psi_j + psi_j psi_i = 0");
    Recorder anti_star(report, "psi*_i psi*_j + psi*_j psi*_i = 0");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      for (int i = -K; i <= K; ++i) {
        for (int j = -K; j <= K; ++j) {
          using namespace fermion;
          FermionState mixed = psi(i, psi_star(j, s)) + psi_star(j, psi(i, s));
          FermionState expected = (i == j) ? s : FermionState();
          anti_mixed.expect(mixed == expected, [&] { return op_label("mixed", i, j, describe(mono)); });
          anti_psi.expect((psi(i, psi(j, s)) + psi(j, psi(i, s))).empty(),
                          [&] { return op_label("psi", i, j, describe(mono)); });
          anti_star.expect((psi_star(i, psi_star(j, s)) + psi_star(j, psi_star(i, s))).empty(),
                           [&] { return op_label("psi*", i, j, describe(mono)); });
        }
      }
    }
  }
  {
    Recorder adjoint(report, "H(psi_j a, b) = H(a, psi*_j b)");
    Recorder shifts(report, "psi_j raises and psi*_j lowers the charge by one");
    for (int j = -K; j <= K; ++j) {
      std::vector<FermionState> up, down;
      for (const auto& mono : grid) {
        up.push_back(fermion::psi(j, single(mono)));
        down.push_back(fermion::psi_star(j, single(mono)));
        const FermionState& u = up.back();
        const FermionState& d = down.back();
        shifts.expect((u.empty() || fermion::charge(u) == mono.charge + 1) &&
                          (d.empty() || fermion::charge(d) == mono.charge - 1),
                      [&] { return "j=" + std::to_string(j) + " on " + describe(mono); });
      }
      for (std::size_t a = 0; a < grid.size(); ++a) {
        for (std::size_t b = 0; b < grid.size(); ++b) {
          if (grid[a].charge + 1 != grid[b].charge) continue;
          const Rational lhs = fermion::hermitian_form(up[a], single(grid[b]));
          const Rational rhs = fermion::hermitian_form(single(grid[a]), down[b]);
          adjoint.expect(lhs == rhs, [&] {
            return "j=" + std::to_string(j) + " a=" + describe(grid[a]) + " b=" + describe(grid[b]);
          });
        }
      }
    }
  }
  {
    Recorder vac(report, "psi_j vac(m) = 0 (j <= m), psi*_j vac(m) = 0 (j > m)");
    for (int m = -opts.max_charge; m <= opts.max_charge; ++m) {
      for (int j = m - K - 1; j <= m + K + 1; ++j) {
        const FermionState v = fermion::vacuum(m);
        const bool ok = (j <= m) ? fermion::psi(j, v).empty() : fermion::psi_star(j, v).empty();
        vac.expect(ok, [&] { return "j=" + std::to_string(j) + " m=" + std::to_string(m); });
      }
    }
  }
  {
    Recorder gl_adj(report, "H(r(E_ij) a, b) = H(a, r(E_ji) b)");
    for (int i = -K; i <= K; ++i) {
      for (int j = -K; j <= K; ++j) {
        std::vector<FermionState> fwd, back;
        for (const auto& mono : grid) {
          fwd.push_back(fermion::gl_action(fermion::elementary(i, j), single(mono)));
          back.push_back(fermion::gl_action(fermion::elementary(j, i), single(mono)));
        }
        for (std::size_t a = 0; a < grid.size(); ++a) {
          if (fwd[a].empty()) continue;
          for (std::size_t b = 0; b < grid.size(); ++b) {
            if (grid[a].charge != grid[b].charge) continue;
            gl_adj.expect(fermion::hermitian_form(fwd[a], single(grid[b])) ==
                              fermion::hermitian_form(single(grid[a]), back[b]),
                          [&] { return op_label("E", i, j, describe(grid[a])); });
          }
        }
      }
    }
  }
  return report;
}

Report heisenberg_fermion(const Options& opts) {
  Report report{"heisenberg-fermion", grid_text(opts), {}};
  const auto grid = fermion_grid(0, 0, opts.max_size);
  const int K = opts.max_index;
  {
    Recorder rel(report, "[alpha_k, alpha_l] = k delta_{k,-l} Id");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      for (int k = -K; k <= K; ++k) {
        const FermionState ak = fermion::alpha(k, s);
        for (int l = -K; l <= K; ++l) {
          FermionState lhs = fermion::alpha(k, fermion::alpha(l, s)) - fermion::alpha(l, ak);
          FermionState rhs = (k == -l) ? Rational(k) * s : FermionState();
          rel.expect(lhs == rhs, [&] { return op_label("[alpha,alpha]", k, l, describe(mono)); });
        }
      }
    }
  }
  {
    Recorder zero(report, "alpha_0 acts as the charge m");
    for (const auto& mono : fermion_grid(-opts.max_charge, opts.max_charge, opts.max_size)) {
      const FermionState s = single(mono);
      zero.expect(fermion::alpha(0, s) == Rational(mono.charge) * s,
                  [&] { return describe(mono); });
    }
  }
  {
    Recorder adj(report, "H(alpha_{-m} a, b) = H(a, alpha_m b)");
    for (int m = 1; m <= K; ++m) {
      for (const auto& a : grid) {
        const FermionState lhs_state = fermion::alpha(-m, single(a));
        for (const auto& b : grid) {
          if (b.energy() != a.energy() + m) continue;
          adj.expect(fermion::hermitian_form(lhs_state, single(b)) ==
                         fermion::hermitian_form(single(a), fermion::alpha(m, single(b))),
                     [&] { return "m=" + std::to_string(m) + " a=" + describe(a) + " b=" + describe(b); });
        }
      }
    }
  }
  return report;
}

Report heisenberg_boson(const Options& opts) {
  Report report{"heisenberg-boson", grid_text(opts), {}};
  const int K = opts.max_index;
  const auto shapes = shapes_up_to(opts.max_size);
  {
    Recorder rel(report, "[r(s_m), r(s_n)] = m delta_{m,-n} Id");
    for (const Partition& lambda : shapes) {
      for (int q = -1; q <= 1; ++q) {
        const BosonPolynomial f = boson::q(q) * boson::power_sum(lambda);
        for (int m = -K; m <= K; ++m) {
          for (int n = -K; n <= K; ++n) {
            BosonPolynomial lhs = boson::oscillator(m, boson::oscillator(n, f)) -
                                  boson::oscillator(n, boson::oscillator(m, f));
            BosonPolynomial rhs = (m == -n) ? Rational(m) * f : BosonPolynomial();
            rel.expect(lhs == rhs, [&] { return op_label("[s,s]", m, n, boson::to_string(f)); });
          }
        }
      }
    }
  }
  {
    Recorder adj(report, "<p_m f, g> = <f, m d/dp_m g>");
    for (int m = 1; m <= K; ++m) {
      for (const Partition& a : shapes) {
        const BosonPolynomial lhs_poly = boson::oscillator(-m, boson::power_sum(a));
        for (const Partition& b : partitions_of(a.size() + m)) {
          if (b.size() > opts.max_size) continue;
          const BosonPolynomial g = boson::power_sum(b);
          adj.expect(boson::hall_form(lhs_poly, g) ==
                         boson::hall_form(boson::power_sum(a), boson::oscillator(m, g)),
                     [&] { return "m=" + std::to_string(m) + " f=p" + to_string(a) + " g=p" + to_string(b); });
        }
      }
    }
  }
  return report;
}

Report heisenberg_geometric(const Options& opts) {
  Report report{"heisenberg-geometric", grid_text(opts), {}};
  const int K = opts.max_index;
  const auto shapes = shapes_up_to(opts.max_size);
  {
    Recorder rel(report, "[p_k, p_l] = k delta_{k,-l} Id on [lambda]");
    for (const Partition& lambda : shapes) {
      const std::optional<LocalizedClass> beta = geometric::normalized_class(lambda);
      for (int k = -K; k <= K; ++k) {
        const auto pk = boson_or_zero(k, beta);
        for (int l = -K; l <= K; ++l) {
          const auto kl = boson_or_zero(k, boson_or_zero(l, beta));
          const auto lk = boson_or_zero(l, pk);
          std::optional<LocalizedClass> lhs;
          if (kl && lk) {
            lhs = *kl - *lk;
          } else if (kl) {
            lhs = kl;
          } else if (lk) {
            lhs = TScalar(-1) * *lk;
          }
          std::optional<LocalizedClass> rhs;
          if (k == -l && k != 0) rhs = TScalar(k) * *beta;
          rel.expect(equal_or_zero(lhs, rhs),
                     [&] { return op_label("[p,p]", k, l, to_string(lambda)); });
        }
      }
    }
  }
  {
    Recorder adj(report, "<p_{-i} a, b> = <a, p_i b> under the localization form");
    for (int i = 1; i <= K; ++i) {
      for (const Partition& a : shapes) {
        if (a.size() + i > opts.max_size) continue;
        const LocalizedClass lhs = geometric::geometric_boson(-i, geometric::normalized_class(a));
        for (const Partition& b : partitions_of(a.size() + i)) {
          const LocalizedClass rhs =
              geometric::geometric_boson(i, geometric::normalized_class(b));
          adj.expect(geometric::bilinear_form(lhs, geometric::normalized_class(b)) ==
                         geometric::bilinear_form(geometric::normalized_class(a), rhs),
                     [&] { return "i=" + std::to_string(i) + " a=" + to_string(a) + " b=" + to_string(b); });
        }
      }
    }
  }
  return report;
}

Report serre(const Options& opts) {
  using geometric::hecke_e;
  using geometric::hecke_f;
  Report report{"serre", grid_text(opts), {}};
  const int K = opts.max_index;
  const auto shapes = shapes_up_to(opts.max_size);
  auto basis = [](const Partition& lambda) {
    return QuiverClass(lambda, TLaurent::t(lambda.size()));
  };
  Recorder ef(report, "[E_k, F_l] = 0 for k != l");
  Recorder cartan(report, "[E_k, F_k] = (delta_k0 - (C v)_k) Id");
  Recorder boxes_count(report, "delta_k0 - (C v)_k = #addable - #removable of residue k");
  Recorder serre_e(report, "ad(E_k)^2 E_l = 0 (|k-l| = 1), [E_k, E_l] = 0 (|k-l| > 1)");
  Recorder serre_f(report, "ad(F_k)^2 F_l = 0 (|k-l| = 1), [F_k, F_l] = 0 (|k-l| > 1)");
  for (const Partition& lambda : shapes) {
    const QuiverClass c = basis(lambda);
    const WeightVector wt = geometric::weight_of(lambda);
    const DimensionVector v = dimension_vector(lambda);
    for (int k = -K; k <= K; ++k) {
      auto weight_at = [&](int kk) {
        auto it = wt.find(kk);
        return it == wt.end() ? 0 : it->second;
      };
      const int expected = (k == 0 ? 1 : 0) - cartan_apply(v, k);
      boxes_count.expect(
          expected == static_cast<int>(addable_boxes(lambda, k).size()) -
                          static_cast<int>(removable_boxes(lambda, k).size()) &&
              weight_at(k) == expected,
          [&] { return "k=" + std::to_string(k) + " on " + to_string(lambda); });
      for (int l = -K; l <= K; ++l) {
        const QuiverClass comm = hecke_e(k, hecke_f(l, c)) - hecke_f(l, hecke_e(k, c));
        if (k == l) {
          cartan.expect(comm == TLaurent(expected) * c,
                        [&] { return "k=" + std::to_string(k) + " on " + to_string(lambda); });
        } else {
          ef.expect(comm.empty(), [&] { return op_label("[E,F]", k, l, to_string(lambda)); });
        }
        if (k == l) continue;
        if (std::abs(k - l) == 1) {
          // E_k^2 E_l - 2 E_k E_l E_k + E_l E_k^2
          QuiverClass se = hecke_e(k, hecke_e(k, hecke_e(l, c))) -
                           TLaurent(2) * hecke_e(k, hecke_e(l, hecke_e(k, c))) +
                           hecke_e(l, hecke_e(k, hecke_e(k, c)));
          QuiverClass sf = hecke_f(k, hecke_f(k, hecke_f(l, c))) -
                           TLaurent(2) * hecke_f(k, hecke_f(l, hecke_f(k, c))) +
                           hecke_f(l, hecke_f(k, hecke_f(k, c)));
          serre_e.expect(se.empty(), [&] { return op_label("serre E", k, l, to_string(lambda)); });
          serre_f.expect(sf.empty(), [&] { return op_label("serre F", k, l, to_string(lambda)); });
        } else {
          serre_e.expect((hecke_e(k, hecke_e(l, c)) - hecke_e(l, hecke_e(k, c))).empty(),
                         [&] { return op_label("[E,E]", k, l, to_string(lambda)); });
          serre_f.expect((hecke_f(k, hecke_f(l, c)) - hecke_f(l, hecke_f(k, c))).empty(),
                         [&] { return op_label("[F,F]", k, l, to_string(lambda)); });
        }
      }
    }
  }
  Recorder highest(report, "E_k 1_[] = 0 and weight([]) = omega_0");
  for (int k = -K; k <= K; ++k) {
    highest.expect(hecke_e(k, basis(Partition())).empty(), [&] { return "k=" + std::to_string(k); });
  }
  highest.expect(geometric::weight_of(Partition()) == WeightVector{{0, 1}},
                 [] { return std::string("weight of []"); });
  Recorder dim(report, "2 v_0 - v.Cv = 0 on every v^lambda");
  for (const Partition& lambda : shapes_up_to(opts.max_size + 2)) {
    const DimensionVector v = dimension_vector(lambda);
    const int v0 = v.count(0) ? v.at(0) : 0;
    dim.expect(2 * v0 - cartan_form(v) == 0, [&] { return to_string(lambda); });
  }
  return report;
}

Report orthonormality(const Options& opts) {
  Report report{"orthonormality", grid_text(opts), {}};
  Recorder schur(report, "<S_lambda, S_mu> = delta");
  Recorder power(report, "<p_lambda, p_mu> = z_lambda delta");
  Recorder classes(report, "<[lambda], [mu]> = delta");
  Recorder geo_power(report, "<p_lambda, p_mu> = z_lambda delta for geometric power sums");
  for (int n = 0; n <= opts.max_size; ++n) {
    const auto parts = partitions_of(n);
    std::vector<BosonPolynomial> s, p;
    std::vector<LocalizedClass> cls, gp;
    for (const Partition& lambda : parts) {
      s.push_back(boson::schur(lambda));
      p.push_back(boson::power_sum(lambda));
      cls.push_back(geometric::normalized_class(lambda));
      gp.push_back(geometric::power_sum_class(lambda));
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        const bool same = a == b;
        const Rational z = same ? Rational(z_factor(parts[a])) : Rational(0);
        auto witness = [&] { return to_string(parts[a]) + " vs " + to_string(parts[b]); };
        schur.expect(boson::hall_form(s[a], s[b]) == (same ? 1 : 0), witness);
        power.expect(boson::hall_form(p[a], p[b]) == z, witness);
        classes.expect(geometric::bilinear_form(cls[a], cls[b]) == TScalar(same ? 1 : 0), witness);
        geo_power.expect(geometric::bilinear_form(gp[a], gp[b]) == TScalar(z), witness);
      }
    }
  }
  return report;
}

CorrespondenceReport verify_intertwining(const Options& opts) {
  Report report{"correspondence", grid_text(opts), {}};
  const int K = opts.max_index;
  const auto grid = fermion_grid(-opts.max_charge, opts.max_charge, opts.max_size);
  {
    Recorder image(report, "sigma(phi_lambda) = q^m S_lambda, S_lambda by l- and |lambda|-sized determinants");
    for (const auto& mono : grid) {
      const Partition& lambda = mono.shape;
      const int n = lambda.size();
      std::vector<std::vector<BosonPolynomial>> full(n, std::vector<BosonPolynomial>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) full[i][j] = boson::elementary_schur(lambda.row(i) + j - i);
      }
      const BosonPolynomial s_full = boson::q(mono.charge) * boson::determinant(full);
      const BosonPolynomial s_short = boson::q(mono.charge) * boson::schur(lambda);
      image.expect(correspondence::sigma(single(mono)) == s_short && s_short == s_full,
                   [&] { return describe(mono); });
    }
  }
  {
    Recorder inter(report, "sigma(alpha_n s) = r(s_n) sigma(s)");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      const BosonPolynomial image = correspondence::sigma(s);
      for (int n = -K; n <= K; ++n) {
        inter.expect(correspondence::sigma(fermion::alpha(n, s)) == boson::oscillator(n, image),
                     [&] { return "n=" + std::to_string(n) + " on " + describe(mono); });
      }
    }
  }
  {
    Recorder forms(report, "H(a, b) = <sigma a, sigma b> on charge 0");
    const auto charge0 = fermion_grid(0, 0, opts.max_size);
    std::vector<BosonPolynomial> images;
    for (const auto& m : charge0) images.push_back(correspondence::sigma(single(m)));
    for (std::size_t a = 0; a < charge0.size(); ++a) {
      for (std::size_t b = 0; b < charge0.size(); ++b) {
        forms.expect(fermion::hermitian_form(single(charge0[a]), single(charge0[b])) ==
                         boson::hall_form(images[a], images[b]),
                     [&] { return describe(charge0[a]) + " vs " + describe(charge0[b]); });
      }
    }
  }
  {
    Recorder inverse(report, "sigma_inverse(sigma(s)) = s and sigma(sigma_inverse(f)) = f");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      inverse.expect(correspondence::sigma_inverse(correspondence::sigma(s)) == s,
                     [&] { return describe(mono); });
    }
    for (const Partition& lambda : shapes_up_to(opts.max_size)) {
      const BosonPolynomial f = boson::q(1) * boson::power_sum(lambda);
      inverse.expect(correspondence::sigma(correspondence::sigma_inverse(f)) == f,
                     [&] { return boson::to_string(f); });
    }
  }
  return report;
}

Report commuting_square(const Options& opts) {
  Report report{"commuting-square", grid_text(opts), {}};
  const int K = opts.max_index;
  const auto grid = fermion_grid(0, 0, opts.max_size);
  {
    Recorder tau_e(report, "tau(e_k s) = E_k tau(s)");
    Recorder tau_f(report, "tau(f_k s) = F_k tau(s)");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      const QuiverClass ts = geometric::tau(s);
      for (int k = -K; k <= K; ++k) {
        tau_e.expect(geometric::tau(fermion::chevalley_e(k, s)) == geometric::hecke_e(k, ts),
                     [&] { return "k=" + std::to_string(k) + " on " + describe(mono); });
        tau_f.expect(geometric::tau(fermion::chevalley_f(k, s)) == geometric::hecke_f(k, ts),
                     [&] { return "k=" + std::to_string(k) + " on " + describe(mono); });
      }
    }
  }
  {
    Recorder grading(report, "tau maps energy n onto span{t^n 1_lambda : lambda |- n}");
    for (const auto& mono : grid) {
      const QuiverClass c = geometric::tau(single(mono));
      grading.expect(c.size() == 1 && c.begin()->first == mono.shape &&
                         c.begin()->second == TLaurent::t(mono.energy()),
                     [&] { return describe(mono); });
    }
  }
  {
    Recorder iso(report, "eta is an isometry");
    Recorder bij(report, "eta_inverse o eta = id and eta o eta_inverse = id");
    for (int n = 0; n <= opts.max_size; ++n) {
      const auto parts = partitions_of(n);
      std::vector<QuiverClass> basis;
      std::vector<LocalizedClass> images;
      for (const Partition& lambda : parts) {
        basis.emplace_back(lambda, TLaurent::t(n));
        images.push_back(geometric::eta(basis.back()));
      }
      for (std::size_t a = 0; a < parts.size(); ++a) {
        bij.expect(geometric::eta_inverse(images[a]) == basis[a] &&
                       geometric::eta(geometric::eta_inverse(geometric::normalized_class(parts[a]))) ==
                           geometric::normalized_class(parts[a]),
                   [&] { return to_string(parts[a]); });
        for (std::size_t b = 0; b < parts.size(); ++b) {
          iso.expect(geometric::bilinear_form(images[a], images[b]) ==
                         geometric::quiver_form(basis[a], basis[b]),
                     [&] { return to_string(parts[a]) + " vs " + to_string(parts[b]); });
        }
      }
    }
  }
  {
    Recorder square(report, "phi(eta(tau(phi_lambda))) = sigma(phi_lambda)");
    Recorder phi_basis(report, "phi(p_lambda) = p_lambda and phi([lambda]) = S_lambda");
    for (const auto& mono : grid) {
      const FermionState s = single(mono);
      square.expect(geometric::phi(geometric::eta(geometric::tau(s))) == correspondence::sigma(s),
                    [&] { return describe(mono); });
      phi_basis.expect(
          geometric::phi(geometric::power_sum_class(mono.shape)) == boson::power_sum(mono.shape) &&
              geometric::phi(geometric::normalized_class(mono.shape)) == boson::schur(mono.shape),
          [&] { return to_string(mono.shape); });
    }
  }
  return report;
}

Report c2_toy(const Options& opts) {
  Report report{"c2-toy", grid_text(opts), {}};
  Recorder toy(report, "[Sigma] = -t^{-1} [u] in the one-point model of C^2");
  toy.expect(geometric::c2_toy_check(geometric::WeightConvention::Standard),
             [] { return std::string("standard convention"); });
  Recorder flipped(report, "flipped weight convention breaks [Sigma] = -t^{-1} [u]");
  flipped.expect(!geometric::c2_toy_check(geometric::WeightConvention::Flipped),
                 [] { return std::string("flipped convention"); });
  Recorder euler(report, "e_T(lambda) = (-1)^n h(lambda)^2 t^{2n}");
  Recorder unit(report, "integral of [M(v^lambda)] = 1");
  for (const Partition& lambda : shapes_up_to(opts.max_size + 2)) {
    const int n = lambda.size();
    const Integer h = hook_product(lambda);
    const Rational closed = Rational((n % 2 ? -1 : 1) * h * h);
    euler.expect(geometric::euler_class(lambda) == TScalar::monomial(closed, 2 * n),
                 [&] { return to_string(lambda); });
    unit.expect(geometric::integrate(geometric::fundamental_class(lambda)) == TScalar(1),
                [&] { return to_string(lambda); });
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "clifford", "heisenberg-fermion", "heisenberg-boson", "heisenberg-geometric", "serre",
      "orthonormality", "correspondence", "commuting-square", "c2-toy", "all"};
  return names;
}

std::vector<Report> run(const std::string& suite, const Options& opts) {
  using Fn = Report (*)(const Options&);
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"clifford", &clifford},
      {"heisenberg-fermion", &heisenberg_fermion},
      {"heisenberg-boson", &heisenberg_boson},
      {"heisenberg-geometric", &heisenberg_geometric},
      {"serre", &serre},
      {"orthonormality", &orthonormality},
      {"correspondence", &verify_intertwining},
      {"commuting-square", &commuting_square},
      {"c2-toy", &c2_toy},
  };
  std::vector<Report> out;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) out.push_back(fn(opts));
  }
  if (out.empty()) throw Error("unknown-suite", "unknown verification suite '" + suite + "'");
  return out;
}

}  // namespace bfc::verify
