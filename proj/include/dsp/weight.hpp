#pragma once

// Weights of the diagonal torus of u(n), written in the standard
// coordinates (c_1, ..., c_n). Every weight handled by the library lives in
// (1/2)Z^n with all entries in a single coset of Z, which is enforced on
// construction.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsp/error.hpp"
#include "dsp/rational.hpp"

namespace dsp {

class Weight {
 public:
  Weight() = default;

  explicit Weight(std::vector<Rational> entries) : entries_(std::move(entries)) { validate(); }

  Weight(std::initializer_list<Rational> entries) : entries_(entries) { validate(); }

  // Builds a weight from twice its entries, e.g. halves({9, 5}) = (9/2, 5/2).
  static Weight halves(std::initializer_list<std::int64_t> doubled) {
    std::vector<Rational> v;
    v.reserve(doubled.size());
    for (auto d : doubled) v.emplace_back(d, 2);
    return Weight(std::move(v));
  }

  static Weight zero(std::size_t n) { return Weight(std::vector<Rational>(n, Rational(0))); }

  static Weight constant(std::size_t n, const Rational& c) {
    return Weight(std::vector<Rational>(n, c));
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational sum() const {
    Rational s(0);
    for (const auto& e : entries_) s += e;
    return s;
  }

  // True when every entry is an integer (the coset is Z rather than 1/2 + Z).
  bool integral() const { return entries_.empty() || is_integer(entries_.front()); }

  // Entries [first, first + count).
  Weight slice(std::size_t first, std::size_t count) const {
    if (first + count > size()) throw DimensionError("weight slice out of range");
    return Weight(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(first),
                                        entries_.begin() + static_cast<std::ptrdiff_t>(first + count)));
  }

  bool strictly_decreasing() const {
    return std::adjacent_find(begin(), end(), [](const Rational& x, const Rational& y) {
             return !(x > y);
           }) == end();
  }

  bool non_increasing() const {
    return std::adjacent_find(begin(), end(), [](const Rational& x, const Rational& y) {
             return x < y;
           }) == end();
  }

  // Pairwise distinct entries, i.e. no root of u(n) is orthogonal.
  bool regular() const {
    std::vector<Rational> sorted(entries_);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  friend bool operator==(const Weight&, const Weight&) = default;

  friend Weight operator+(const Weight& x, const Weight& y) {
    check_same_size(x, y);
    std::vector<Rational> v(x.entries_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.entries_[i];
    return Weight(std::move(v));
  }

  friend Weight operator-(const Weight& x, const Weight& y) {
    check_same_size(x, y);
    std::vector<Rational> v(x.entries_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= y.entries_[i];
    return Weight(std::move(v));
  }

  friend Weight operator-(const Weight& x) {
    std::vector<Rational> v(x.entries_);
    for (auto& e : v) e = -e;
    return Weight(std::move(v));
  }

  friend Weight operator*(const Rational& c, const Weight& x) {
    std::vector<Rational> v(x.entries_);
    for (auto& e : v) e *= c;
    return Weight(std::move(v));
  }

  static void check_same_size(const Weight& x, const Weight& y) {
    if (x.size() != y.size()) {
      throw DimensionError("weight length mismatch: " + std::to_string(x.size()) + " vs " +
                           std::to_string(y.size()));
    }
  }

 private:
  void validate() const {
    for (const auto& e : entries_) {
      if (!is_half_integer(e)) throw DomainError("weight entry " + to_string(e) + " is not in (1/2)Z");
      if (is_integer(e) != is_integer(entries_.front())) {
        throw DomainError("weight entries mix Z and 1/2 + Z");
      }
    }
  }

  std::vector<Rational> entries_;
};

inline Weight concat(const Weight& x, const Weight& y) {
  std::vector<Rational> v(x.begin(), x.end());
  v.insert(v.end(), y.begin(), y.end());
  return Weight(std::move(v));
}

// Standard dot product on coordinates (the trace form of u(n)).
inline Rational pairing(const Weight& x, const Weight& y) {
  Weight::check_same_size(x, y);
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Half-sum of the positive roots of the upper triangular Borel:
// ((n-1)/2, (n-3)/2, ..., (1-n)/2).
inline Weight rho(std::size_t n) {
  if (n == 0) throw DomainError("rho requires n >= 1");
  std::vector<Rational> v;
  v.reserve(n);
  const auto top = static_cast<std::int64_t>(n) - 1;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) v.emplace_back(top - 2 * i, 2);
  return Weight(std::move(v));
}

// (n-1, n-2, ..., 1, 0).
inline Weight rho_tilde(std::size_t n) {
  if (n == 0) throw DomainError("rho_tilde requires n >= 1");
  std::vector<Rational> v;
  v.reserve(n);
  for (std::int64_t i = static_cast<std::int64_t>(n) - 1; i >= 0; --i) v.emplace_back(i);
  return Weight(std::move(v));
}

// lambda + (n-1)/2 (1, ..., 1). Integral whenever lambda lies in rho + Z^n.
inline Weight hodge_parameter(const Weight& lambda) {
  if (lambda.empty()) throw DomainError("hodge_parameter requires n >= 1");
  const auto n = static_cast<std::int64_t>(lambda.size());
  return lambda + Weight::constant(lambda.size(), Rational(n - 1, 2));
}

// Weight -> string "(x1,x2,...)".
inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + ")";
}

}  // namespace dsp
