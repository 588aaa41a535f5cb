#pragma once

// Independent reference computations.  Nothing here calls into the library
// except for plain data types, so a bug in production code cannot hide in
// both places at once.

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "bfc/boson.h"
#include "bfc/rational.h"

namespace oracle {

// p(n) by the standard coin-change recurrence.
inline long long partition_count(int n) {
  std::vector<long long> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) dp[s] += dp[s - part];
  }
  return dp[n];
}

// Number of standard Young tableaux, by peeling off the cell holding the
// largest entry in every possible way.
inline long long syt_count(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  long long total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int below = i + 1 < rows.size() ? rows[i + 1] : 0;
    if (rows[i] > below) {
      std::vector<int> smaller = rows;
      --smaller[i];
      total += syt_count(smaller);
    }
  }
  return total;
}

// Hook lengths straight from the definition: count cells to the right and
// cells below.
inline std::vector<int> hooks(const std::vector<int>& rows) {
  std::vector<int> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int j = 0; j < rows[k]; ++j) {
      int arm = rows[k] - j - 1;
      int leg = 0;
      for (std::size_t r = k + 1; r < rows.size() && rows[r] > j; ++r) ++leg;
      out.push_back(arm + leg + 1);
    }
  }
  return out;
}

inline bfc::Integer hook_product(const std::vector<int>& rows) {
  bfc::Integer h = 1;
  for (int x : hooks(rows)) h *= x;
  return h;
}

inline bfc::Integer factorial(int n) {
  bfc::Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Complete homogeneous h_n through Newton's identity n h_n = sum p_k h_{n-k}.
inline const bfc::BosonPolynomial& complete_h(int n) {
  static std::vector<bfc::BosonPolynomial> memo;
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    if (m == 0) {
      memo.push_back(bfc::boson::constant(1));
      continue;
    }
    bfc::BosonPolynomial acc;
    for (int k = 1; k <= m; ++k) acc += bfc::boson::p(k) * memo[m - k];
    acc *= bfc::Rational(1, m);
    memo.push_back(acc);
  }
  return memo[n];
}

// Jacobi-Trudi with the full |lambda| x |lambda| matrix, expanded as a
// signed sum over permutations.  Rows are filled in order and a branch is
// cut as soon as it hits a zero entry.
inline bfc::BosonPolynomial jacobi_trudi_full(const std::vector<int>& rows) {
  int n = std::accumulate(rows.begin(), rows.end(), 0);
  if (n == 0) return bfc::boson::constant(1);
  auto part = [&](int i) { return i < static_cast<int>(rows.size()) ? rows[i] : 0; };
  auto entry_index = [&](int i, int j) { return part(i) + j - i; };

  bfc::BosonPolynomial total;
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self, int i, bfc::BosonPolynomial prod) -> void {
    if (i == n) {
      int inversions = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
      if (inversions % 2) prod *= bfc::Rational(-1);
      total += prod;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const int e = entry_index(i, j);
      if (e < 0) continue;
      used[j] = true;
      perm.push_back(j);
      self(self, i + 1, e == 0 ? prod : prod * complete_h(e));
      perm.pop_back();
      used[j] = false;
    }
  };
  recurse(recurse, 0, bfc::boson::constant(1));
  return total;
}

// A semi-infinite wedge truncated to a finite strictly decreasing prefix;
// everything below the prefix is the vacuum tail.
struct Wedge {
  std::vector<int> top;
  int charge = 0;
};

inline Wedge wedge_of(const std::vector<int>& rows, int charge, int count) {
  Wedge w{{}, charge};
  for (int k = 0; k < count; ++k) {
    const int part = k < static_cast<int>(rows.size()) ? rows[k] : 0;
    w.top.push_back(charge - k + part);
  }
  return w;
}

inline std::vector<int> rows_of(const Wedge& w) {
  std::vector<int> rows;
  for (std::size_t k = 0; k < w.top.size(); ++k) {
    const int part = w.top[k] - (w.charge - static_cast<int>(k));
    if (part > 0) rows.push_back(part);
  }
  return rows;
}

// Single-slot substitution: E_ij replaces the factor j by i in place, then
// sorts back into decreasing order, tracking the sign of the sort.  Returns
// sign 0 when the result vanishes.
inline std::pair<int, Wedge> substitute(int i, int j, Wedge w) {
  auto slot = std::find(w.top.begin(), w.top.end(), j);
  if (slot == w.top.end()) return {0, w};
  if (i != j && std::find(w.top.begin(), w.top.end(), i) != w.top.end()) return {0, w};
  *slot = i;
  int sign = 1;
  for (std::size_t a = 0; a < w.top.size(); ++a) {
    for (std::size_t b = 0; b + 1 < w.top.size() - a; ++b) {
      if (w.top[b] < w.top[b + 1]) {
        std::swap(w.top[b], w.top[b + 1]);
        sign = -sign;
      }
    }
  }
  return {sign, w};
}

}  // namespace oracle
