#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dsp/error.hpp"
#include "dsp/weight.hpp"

namespace dsp {

// Signature (r, s) of a hermitian form; K = U(r) x U(s) sits block-diagonally,
// coordinates 1..r belong to U(r) and r+1..n to U(s).
struct Signature {
  int r = 0;
  int s = 0;

  Signature() = default;
  Signature(int r_, int s_) : r(r_), s(s_) {
    if (r < 0 || s < 0 || r + s < 1) {
      throw DomainError("invalid signature (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
  }

  int n() const { return r + s; }
  std::size_t size() const { return static_cast<std::size_t>(r + s); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& sig) {
  return "(" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
}

// The root e_i - e_j, 1-based.
struct Root {
  int i = 1;
  int j = 2;

  friend auto operator<=>(const Root&, const Root&) = default;

  // <alpha, x> = x_i - x_j.
  Rational pair(const Weight& x) const {
    return x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)];
  }

  Weight as_weight(std::size_t n) const {
    std::vector<Rational> v(n, Rational(0));
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(j - 1)] = -1;
    return Weight(std::move(v));
  }
};

// Ordered, duplicate-free set of roots of u(n).
class RootSet {
 public:
  explicit RootSet(std::size_t n = 0, std::vector<Root> roots = {}) : n_(n), roots_(std::move(roots)) {
    for (const auto& a : roots_) {
      if (a.i < 1 || a.j < 1 || a.i == a.j || static_cast<std::size_t>(a.i) > n_ ||
          static_cast<std::size_t>(a.j) > n_) {
        throw DomainError("invalid root (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                          ") for n=" + std::to_string(n_));
      }
    }
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  }

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  bool contains(const Root& a) const { return std::binary_search(roots_.begin(), roots_.end(), a); }
  auto begin() const { return roots_.begin(); }
  auto end() const { return roots_.end(); }
  const std::vector<Root>& roots() const { return roots_; }

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::size_t n_;
  std::vector<Root> roots_;
};

// All roots e_i - e_j of u(n), i != j.
inline RootSet roots_g(std::size_t n) {
  std::vector<Root> v;
  v.reserve(n * (n - (n ? 1 : 0)));
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j)
      if (i != j) v.push_back({i, j});
  return RootSet(n, std::move(v));
}

// Roots of k = u(r) + u(s): both indices in the same block.
inline RootSet compact_roots(Signature sig) {
  std::vector<Root> v;
  const int n = sig.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && ((i <= sig.r) == (j <= sig.r))) v.push_back({i, j});
  return RootSet(sig.size(), std::move(v));
}

// e_i - e_{r+j}, 1 <= i <= r, 1 <= j <= s.
inline RootSet noncompact_positive(Signature sig) {
  std::vector<Root> v;
  v.reserve(static_cast<std::size_t>(sig.r * sig.s));
  for (int i = 1; i <= sig.r; ++i)
    for (int j = 1; j <= sig.s; ++j) v.push_back({i, sig.r + j});
  return RootSet(sig.size(), std::move(v));
}

// Members alpha of `roots` with <alpha, lambda> > 0. Zero pairings are excluded.
inline RootSet positive_on(const RootSet& roots, const Weight& lambda) {
  if (lambda.size() != roots.ambient()) {
    throw DimensionError("positive_on: weight of length " + std::to_string(lambda.size()) +
                         " against roots of u(" + std::to_string(roots.ambient()) + ")");
  }
  std::vector<Root> v;
  for (const auto& a : roots)
    if (a.pair(lambda) > 0) v.push_back(a);
  return RootSet(roots.ambient(), std::move(v));
}

inline Weight sum_of_roots(const RootSet& subset) {
  std::vector<Rational> v(subset.ambient(), Rational(0));
  for (const auto& a : subset) {
    v[static_cast<std::size_t>(a.i - 1)] += 1;
    v[static_cast<std::size_t>(a.j - 1)] -= 1;
  }
  return Weight(std::move(v));
}

// Non-increasing within each block of the signature, i.e. a highest weight
// for K = U(r) x U(s).
inline bool is_k_dominant(const Weight& mu, Signature sig) {
  if (mu.size() != sig.size()) return false;
  const auto r = static_cast<std::size_t>(sig.r);
  return mu.slice(0, r).non_increasing() && mu.slice(r, mu.size() - r).non_increasing();
}

}  // namespace dsp
