#pragma once

#include <functional>
#include <map>
#include <type_traits>
#include <utility>

#include "bfc/rational.h"

namespace bfc {

// Finite formal linear combination: a sparse map from basis keys to
// coefficients.  Zero coefficients are never stored, so the zero element is
// the empty map and equality is structural.
template <class Key, class Coeff, class Less = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Coeff, Less>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  LinearCombination(Key key, Coeff coeff) { add(std::move(key), coeff); }

  void add(const Key& key, const Coeff& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  template <class Scalar>
    requires(!std::is_same_v<Scalar, LinearCombination>)
  LinearCombination& operator*=(const Scalar& s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Coeff(-1); }
  template <class Scalar>
    requires(!std::is_same_v<Scalar, LinearCombination>)
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) {
    return a *= s;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace bfc
