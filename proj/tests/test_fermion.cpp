#include <doctest.h>

#include <cstdlib>

#include "bfc/combinatorics.h"
#include "bfc/error.h"
#include "bfc/fermion.h"
#include "oracles.h"

using namespace bfc;
using fermion::basis;
using fermion::vacuum;

namespace {

FermionState phi(std::initializer_list<int> parts, int m = 0) { return basis(Partition(parts), m); }

// E_ij on a basis monomial through the substitution oracle.
FermionState substitute(int i, int j, const Partition& lambda, int m) {
  const int count = lambda.length() + std::abs(i) + std::abs(j) + std::abs(m) + 2;
  auto [sign, w] = oracle::substitute(i, j, oracle::wedge_of(lambda.parts(), m, count));
  if (sign == 0) return {};
  FermionState out = basis(Partition(oracle::rows_of(w)), m);
  out *= Rational(sign);
  return out;
}

std::vector<FermionState> grid(int max_size, int max_charge) {
  std::vector<FermionState> out;
  for (int m = -max_charge; m <= max_charge; ++m)
    for (int n = 0; n <= max_size; ++n)
      for (const Partition& lambda : partitions_of(n)) out.push_back(basis(lambda, m));
  return out;
}

}  // namespace

TEST_CASE("wedging") {
  CHECK(fermion::psi(1, vacuum(0)) == vacuum(1));
  CHECK(fermion::psi(0, vacuum(0)).empty());
  CHECK(fermion::psi(2, vacuum(0)) == phi({1}, 1));
  // 2 ^ 0 ^ -1 ^ ... with -2 inserted after two larger factors keeps the sign
  CHECK(fermion::psi(-1, phi({2, 1}, -1)) == FermionState{});
}

TEST_CASE("contracting") {
  CHECK(fermion::psi_star(0, vacuum(0)) == vacuum(-1));
  CHECK(fermion::psi_star(1, vacuum(0)).empty());
  CHECK(fermion::psi_star(-1, vacuum(0)) == -phi({1}, -1));
}

TEST_CASE("gl action") {
  CHECK(fermion::gl_action(fermion::elementary(1, 0), vacuum(0)) == phi({1}));
  for (int m = -2; m <= 2; ++m) {
    for (int j = -4; j <= 4; ++j) {
      const FermionState r = fermion::gl_action(fermion::elementary(j, j), vacuum(m));
      CHECK(r == (j <= m ? vacuum(m) : FermionState{}));
      for (int i = j - 4; i < j; ++i) {
        CHECK(fermion::gl_action(fermion::elementary(i, j), vacuum(m)).empty());
      }
    }
  }
  GlMatrix a = fermion::elementary(1, 0, 2);
  a[{0, 0}] = Rational(-1, 2);
  a[{0, -1}] = 5;  // 0 is occupied in the vacuum, so this entry contributes nothing
  CHECK(fermion::transpose(a).at({0, 1}) == 2);
  CHECK(fermion::gl_action(a, vacuum(0)) == 2 * phi({1}) - Rational(1, 2) * vacuum(0));
}

TEST_CASE("gl action agrees with single-slot substitution") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int m : {-1, 0, 2}) {
        for (int i = -4; i <= 4; ++i) {
          for (int j = -4; j <= 4; ++j) {
            CHECK(fermion::gl_action(fermion::elementary(i, j), basis(lambda, m)) ==
                  substitute(i, j, lambda, m));
          }
        }
      }
    }
  }
}

TEST_CASE("Chevalley generators") {
  CHECK(fermion::chevalley_f(0, vacuum(0)) == phi({1}));
  CHECK(fermion::chevalley_f(1, phi({1})) == phi({2}));
  CHECK(fermion::chevalley_e(0, phi({1})) == vacuum(0));
  CHECK(fermion::chevalley_f(-1, phi({1})) == phi({1, 1}));
  CHECK(fermion::chevalley_e(0, vacuum(0)).empty());
}

TEST_CASE("free bosons") {
  CHECK(fermion::alpha(-1, vacuum(0)) == phi({1}));
  CHECK(fermion::alpha(-1, phi({1})) == phi({2}) + phi({1, 1}));
  CHECK(fermion::alpha(1, phi({2}) + phi({1, 1})) == 2 * phi({1}));
  CHECK(fermion::alpha(-2, vacuum(0)) == phi({2}) - phi({1, 1}));
  for (int m = -2; m <= 2; ++m) {
    for (const FermionState& s : grid(5, 0)) {
      const FermionState shifted = fermion::basis(s.begin()->first.shape, m);
      CHECK(fermion::alpha(0, shifted) == Rational(m) * shifted);
    }
  }
}

TEST_CASE("alpha matches the bilinear fermion sum") {
  // alpha_n = sum_j psi_j psi*_{j+n}, summed over a window that covers every
  // occupied/unoccupied boundary of the monomial.
  for (const FermionState& s : grid(5, 1)) {
    const auto& [mono, c] = *s.begin();
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      FermionState direct;
      const int lo = mono.charge - mono.shape.length() - 8;
      const int hi = mono.charge + mono.shape.size() + 8;
      for (int j = lo; j <= hi; ++j) direct += fermion::psi(j, fermion::psi_star(j + n, s));
      CHECK(fermion::alpha(n, s) == direct);
    }
  }
}

TEST_CASE("hermitian form") {
  CHECK(fermion::hermitian_form(phi({2, 1}), phi({2, 1})) == 1);
  CHECK(fermion::hermitian_form(phi({2, 1}), phi({3})) == 0);
  CHECK(fermion::hermitian_form(phi({1}), phi({1}, 1)) == 0);
  CHECK(fermion::hermitian_form(2 * phi({1}) + 3 * phi({2}), phi({2})) == 3);
}

TEST_CASE("charge and energy") {
  CHECK(fermion::charge(phi({2, 1})) == 0);
  CHECK(fermion::energy(phi({2, 1})) == 3);
  CHECK(fermion::charge(vacuum(5)) == 5);
  CHECK(fermion::energy(vacuum(-5)) == 0);
  const FermionState mixed = phi({1}) + phi({2});
  CHECK(fermion::charge(mixed) == 0);
  try {
    fermion::energy(mixed);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "inhomogeneous-state");
  }
  try {
    fermion::charge(FermionState{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "zero-state");
  }
  CHECK_THROWS_AS(fermion::charge(vacuum(0) + vacuum(1)), Error);
}

TEST_CASE("Clifford relations on a small grid") {
  const auto states = grid(4, 1);
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      for (const FermionState& s : states) {
        using namespace fermion;
        const FermionState mixed = psi(i, psi_star(j, s)) + psi_star(j, psi(i, s));
        CHECK(mixed == (i == j ? s : FermionState{}));
        CHECK((psi(i, psi(j, s)) + psi(j, psi(i, s))).empty());
        CHECK((psi_star(i, psi_star(j, s)) + psi_star(j, psi_star(i, s))).empty());
      }
    }
  }
}

TEST_CASE("state text") {
  CHECK(fermion::to_string(vacuum(0)) == "vac(0)");
  CHECK(fermion::to_string(vacuum(-2)) == "vac(-2)");
  CHECK(fermion::to_string(phi({2}) + phi({1, 1})) == "phi[2] + phi[1,1]");
  CHECK(fermion::to_string(FermionState{}) == "0");
  CHECK(fermion::to_string(Rational(-1, 2) * phi({1}, 1)) == "(-1/2)*phi[1]@1");
  CHECK(fermion::parse_state("phi[2,1]") == phi({2, 1}));
  CHECK(fermion::parse_state("phi[]@3") == vacuum(3));
  CHECK(fermion::parse_state("2*phi[1] - vac(0)") == 2 * phi({1}) - vacuum(0));
  CHECK(fermion::parse_state("0").empty());
  for (const char* bad : {"phi[1,2]", "phi", "vac(", "phi[1] +", "psi[1]"}) {
    CHECK_THROWS_AS(fermion::parse_state(bad), Error);
  }
}
