#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bfc/rational.h"

namespace bfc {

// Integer partition: weakly decreasing positive parts, no stored zeros.  The
// empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws Error{"invalid-partition"} unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  // 0-indexed row length; 0 past the last row.
  int row(int k) const noexcept { return k < length() ? parts_[k] : 0; }
  // Number of parts equal to i.
  int multiplicity(int i) const noexcept;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic order on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Orders partitions by size, then reverse-lexicographically: the display and
// enumeration order used everywhere ((3) before (2,1) before (1,1,1)).
struct ShapeOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  }
};

// Box b_{jk}: column j, row k, both from zero.
struct Box {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline int residue(const Box& b) { return b.col - b.row; }
bool contains(const Partition& lambda, const Box& b);

// Sparse v^lambda: residue -> number of boxes with that residue.
using DimensionVector = std::map<int, int>;

// All boxes of D_lambda in row-major order.
std::vector<Box> boxes(const Partition& lambda);
// arm + leg + 1; throws Error{"box-outside-diagram"}.
int hook(const Partition& lambda, const Box& b);
Integer hook_product(const Partition& lambda);
DimensionVector dimension_vector(const Partition& lambda);
// z_lambda = prod_i i^{m_i} m_i!
Integer z_factor(const Partition& lambda);

std::vector<Box> addable_boxes(const Partition& lambda, int residue);
std::vector<Box> removable_boxes(const Partition& lambda, int residue);
// Preconditions: b addable / removable respectively.
Partition add_box(const Partition& lambda, const Box& b);
Partition remove_box(const Partition& lambda, const Box& b);

// (C v)_k for the A-infinity Cartan matrix C_ij = 2 d_ij - d_{i-1,j} - d_{i+1,j}.
int cartan_apply(const DimensionVector& v, int k);
// v . C v
long long cartan_form(const DimensionVector& v);

// (i_0, ..., i_{count-1}) with i_k = (m - k) + lambda_{k+1}.
std::vector<int> monomial_indices(const Partition& lambda, int charge, int count);
// Inverse of monomial_indices: reads lambda off a strictly decreasing prefix
// whose continuation is the vacuum tail of the given charge.  Throws
// Error{"invalid-partition"} if the prefix is not such a sequence.
Partition shape_from_indices(const std::vector<int>& indices, int charge);

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

// "[2,1]"; "[]" for the empty partition.
std::string to_string(const Partition& lambda);
Partition parse_partition(std::string_view text);

}  // namespace bfc
