#include "bfc/combinatorics.h"

#include <algorithm>
#include <functional>

#include "bfc/error.h"
#include "text_parse.h"

namespace bfc {

namespace {

std::string list_string(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(parts[j]);
  }
  return s + "]";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error("invalid-partition",
                  "parts must be positive and weakly decreasing: " + list_string(parts_));
    }
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int i) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  const int cols = empty() ? 0 : parts_.front();
  for (int j = 0; j < cols; ++j) {
    int n = 0;
    while (n < length() && parts_[n] > j) ++n;
    out.push_back(n);
  }
  return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Box& b) {
  return b.col >= 0 && b.row >= 0 && b.col < lambda.row(b.row);
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(lambda.size());
  for (int k = 0; k < lambda.length(); ++k) {
    for (int j = 0; j < lambda.row(k); ++j) out.push_back({j, k});
  }
  return out;
}

int hook(const Partition& lambda, const Box& b) {
  if (!contains(lambda, b)) {
    throw Error("box-outside-diagram", "box b_{" + std::to_string(b.col) + "," +
                                           std::to_string(b.row) + "} is not in " +
                                           to_string(lambda));
  }
  const int arm = lambda.row(b.row) - b.col - 1;
  int leg = 0;
  while (lambda.row(b.row + leg + 1) > b.col) ++leg;
  return arm + leg + 1;
}

Integer hook_product(const Partition& lambda) {
  Integer h = 1;
  for (const Box& b : boxes(lambda)) h *= hook(lambda, b);
  return h;
}

DimensionVector dimension_vector(const Partition& lambda) {
  DimensionVector v;
  for (const Box& b : boxes(lambda)) ++v[residue(b)];
  return v;
}

Integer z_factor(const Partition& lambda) {
  Integer z = 1;
  for (int i = 1; i <= (lambda.empty() ? 0 : lambda.parts().front()); ++i) {
    const int m = lambda.multiplicity(i);
    for (int r = 0; r < m; ++r) z *= i;
    for (int r = 2; r <= m; ++r) z *= r;
  }
  return z;
}

std::vector<Box> addable_boxes(const Partition& lambda, int k) {
  std::vector<Box> out;
  for (int r = 0; r <= lambda.length(); ++r) {
    const Box b{lambda.row(r), r};
    if ((r == 0 || lambda.row(r - 1) > lambda.row(r)) && residue(b) == k) out.push_back(b);
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& lambda, int k) {
  std::vector<Box> out;
  for (int r = 0; r < lambda.length(); ++r) {
    const Box b{lambda.row(r) - 1, r};
    if (lambda.row(r) > lambda.row(r + 1) && residue(b) == k) out.push_back(b);
  }
  return out;
}

Partition add_box(const Partition& lambda, const Box& b) {
  std::vector<int> parts = lambda.parts();
  if (b.row == lambda.length()) {
    parts.push_back(1);
  } else {
    ++parts.at(b.row);
  }
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& lambda, const Box& b) {
  std::vector<int> parts = lambda.parts();
  if (--parts.at(b.row) == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int cartan_apply(const DimensionVector& v, int k) {
  auto at = [&](int i) {
    auto it = v.find(i);
    return it == v.end() ? 0 : it->second;
  };
  return 2 * at(k) - at(k - 1) - at(k + 1);
}

long long cartan_form(const DimensionVector& v) {
  long long total = 0;
  for (const auto& [k, vk] : v) total += static_cast<long long>(vk) * cartan_apply(v, k);
  return total;
}

std::vector<int> monomial_indices(const Partition& lambda, int charge, int count) {
  std::vector<int> out(count);
  for (int k = 0; k < count; ++k) out[k] = charge - k + lambda.row(k);
  return out;
}

Partition shape_from_indices(const std::vector<int>& indices, int charge) {
  std::vector<int> parts;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int part = indices[k] - (charge - static_cast<int>(k));
    if (part < 0) throw Error("invalid-partition", "index sequence below the vacuum tail");
    parts.push_back(part);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string to_string(const Partition& lambda) { return list_string(lambda.parts()); }

Partition parse_partition(std::string_view text) {
  detail::Lexer lex(text);
  std::vector<int> parts = detail::parse_int_list(lex);
  lex.expect_end();
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error("parse-error", e.what());
  }
}

}  // namespace bfc
