#include <doctest.h>

#include "bfc/combinatorics.h"
#include "bfc/error.h"
#include "oracles.h"

using namespace bfc;

namespace {

int cartan_direct(const DimensionVector& v, int k) {
  auto at = [&](int i) {
    auto it = v.find(i);
    return it == v.end() ? 0 : it->second;
  };
  return 2 * at(k) - at(k - 1) - at(k + 1);
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK(Partition{}.empty());
  CHECK(Partition{3, 1, 1}.size() == 5);
  CHECK(Partition{3, 1, 1}.length() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  try {
    Partition({1, 2});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "invalid-partition");
  }
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{2, 2, 1}.multiplicity(2) == 2);
}

TEST_CASE("boxes in row-major order") {
  CHECK(boxes(Partition{}).empty());
  CHECK(boxes(Partition{2, 1}) == std::vector<Box>{{0, 0}, {1, 0}, {0, 1}});

  const Partition fig{4, 4, 3, 1};
  const auto bs = boxes(fig);
  REQUIRE(bs.size() == 12);
  std::vector<Box> expected;
  for (int k : {0, 1})
    for (int j = 0; j < 4; ++j) expected.push_back({j, k});
  for (int j = 0; j < 3; ++j) expected.push_back({j, 2});
  expected.push_back({0, 3});
  CHECK(bs == expected);
  for (const Box& b : bs) CHECK(contains(fig, b));
  CHECK_FALSE(contains(fig, Box{3, 2}));
}

TEST_CASE("residues") {
  CHECK(residue(Box{0, 0}) == 0);
  CHECK(residue(Box{1, 0}) == 1);
  CHECK(residue(Box{0, 1}) == -1);
}

TEST_CASE("hook lengths") {
  CHECK(hook(Partition{1}, Box{0, 0}) == 1);
  CHECK(hook(Partition{2, 1}, Box{0, 0}) == 3);
  // Two rows of six, then five, three, two; the box in column 2 of the
  // second row has three cells to its right and two below.
  CHECK(hook(Partition{6, 6, 5, 3, 2}, Box{2, 1}) == 6);
  CHECK_THROWS_AS(hook(Partition{2, 1}, Box{1, 1}), Error);
  try {
    hook(Partition{}, Box{0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == "box-outside-diagram");
  }

  for (int n = 0; n <= 10; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::vector<int> mine;
      for (const Box& b : boxes(lambda)) mine.push_back(hook(lambda, b));
      CHECK(mine == oracle::hooks(lambda.parts()));
    }
  }
}

TEST_CASE("hook products") {
  CHECK(hook_product(Partition{}) == 1);
  CHECK(hook_product(Partition{2, 1}) == 3);
  CHECK(hook_product(Partition{1, 1}) == 2);
}

TEST_CASE("sum of squared dimensions equals n factorial") {
  for (int n = 0; n <= 8; ++n) {
    Integer total = 0;
    for (const Partition& lambda : partitions_of(n)) {
      Integer dim = oracle::factorial(n) / hook_product(lambda);
      if (n <= 6) CHECK(dim == Integer(std::to_string(oracle::syt_count(lambda.parts()))));
      total += dim * dim;
    }
    CHECK(total == oracle::factorial(n));
  }
}

TEST_CASE("dimension vectors") {
  CHECK(dimension_vector(Partition{}).empty());
  CHECK(dimension_vector(Partition{2, 1}) == DimensionVector{{-1, 1}, {0, 1}, {1, 1}});
  CHECK(dimension_vector(Partition{2}) == DimensionVector{{0, 1}, {1, 1}});
  for (int n = 0; n <= 8; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      int total = 0;
      for (const auto& [k, c] : dimension_vector(lambda)) {
        CHECK(c > 0);
        total += c;
      }
      CHECK(total == n);
    }
  }
}

TEST_CASE("z factors") {
  CHECK(z_factor(Partition{}) == 1);
  CHECK(z_factor(Partition{1, 1}) == 2);
  CHECK(z_factor(Partition{2, 1}) == 2);
  CHECK(z_factor(Partition{2, 2, 1, 1, 1}) == 2 * 2 * 2 * 6);
  // sum of n!/z over cycle types counts all permutations
  for (int n = 0; n <= 8; ++n) {
    Integer count = 0;
    for (const Partition& mu : partitions_of(n)) count += oracle::factorial(n) / z_factor(mu);
    CHECK(count == oracle::factorial(n));
  }
}

TEST_CASE("addable and removable boxes") {
  CHECK(addable_boxes(Partition{}, 0) == std::vector<Box>{{0, 0}});
  CHECK(addable_boxes(Partition{1}, 1) == std::vector<Box>{{1, 0}});
  CHECK(addable_boxes(Partition{1}, -1) == std::vector<Box>{{0, 1}});
  CHECK(removable_boxes(Partition{1}, 0) == std::vector<Box>{{0, 0}});
  CHECK(removable_boxes(Partition{1}, 1).empty());
  CHECK(add_box(Partition{1}, Box{0, 1}) == Partition{1, 1});
  CHECK(remove_box(Partition{2, 1}, Box{1, 0}) == Partition{1, 1});
}

TEST_CASE("addable minus removable matches the Cartan pairing") {
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const auto v = dimension_vector(lambda);
      for (int k = -12; k <= 12; ++k) {
        const int diff = static_cast<int>(addable_boxes(lambda, k).size()) -
                         static_cast<int>(removable_boxes(lambda, k).size());
        CHECK(diff == (k == 0 ? 1 : 0) - cartan_direct(v, k));
        CHECK(cartan_apply(v, k) == cartan_direct(v, k));
      }
    }
  }
}

TEST_CASE("dimension formula vanishes on every fixed point") {
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const auto v = dimension_vector(lambda);
      long long vcv = 0;
      for (const auto& [k, c] : v) vcv += static_cast<long long>(c) * cartan_direct(v, k);
      CHECK(cartan_form(v) == vcv);
      const int v0 = v.count(0) ? v.at(0) : 0;
      CHECK(2 * v0 - vcv == 0);
    }
  }
}

TEST_CASE("monomial indices") {
  CHECK(monomial_indices(Partition{}, 0, 4) == std::vector<int>{0, -1, -2, -3});
  CHECK(monomial_indices(Partition{2, 1}, 0, 4) == std::vector<int>{2, 0, -2, -3});
  CHECK(monomial_indices(Partition{}, 5, 3) == std::vector<int>{5, 4, 3});
  CHECK(monomial_indices(Partition{}, -2, 3) == std::vector<int>{-2, -3, -4});

  for (int n = 0; n <= 12; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int m = -2; m <= 2; ++m) {
        const auto idx = monomial_indices(lambda, m, lambda.length() + 3);
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) CHECK(idx[k] > idx[k + 1]);
        std::vector<int> read;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          const int part = idx[k] - (m - static_cast<int>(k));
          if (part > 0) read.push_back(part);
        }
        CHECK(Partition(read) == lambda);
        CHECK(shape_from_indices(idx, m) == lambda);
      }
    }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(8).size() == 22);
  for (int n = 0; n <= 14; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long long>(ps.size()) == oracle::partition_count(n));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i].parts() > ps[i + 1].parts());
  }
}

TEST_CASE("partition text") {
  CHECK(to_string(Partition{}) == "[]");
  CHECK(to_string(Partition{2, 1}) == "[2,1]");
  CHECK(parse_partition("[2,1]") == Partition{2, 1});
  CHECK(parse_partition(" [ 3 , 3 ] ") == Partition{3, 3});
  CHECK(parse_partition("[]") == Partition{});
  for (const char* bad : {"[2,", "2,1", "[a]", "[2,1]x", "[1,2]", "[0]"}) {
    CHECK_THROWS_AS(parse_partition(bad), Error);
  }
}
