#pragma once

// Generators and independent oracles shared by the test suites. Nothing here
// calls into the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dsp/packets.hpp"
#include "dsp/roots.hpp"
#include "dsp/weight.hpp"

namespace dsp::testing {

inline Weight ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return Weight(std::move(v));
}

inline HCParameter hc(std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> b) {
  return HCParameter(ints(a), ints(b));
}

// Strictly decreasing integral highest weight of length n, entries in [lo, hi].
// Gives lambda_sigma = a_sigma + rho with all consecutive gaps >= 2.
inline Weight random_regular_highest_weight(std::mt19937& rng, std::size_t n, int lo = -12, int hi = 12) {
  std::vector<int> pool;
  for (int x = lo; x <= hi; ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> pick(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(pick.begin(), pick.end(), std::greater<>());
  std::vector<Rational> v(pick.begin(), pick.end());
  return Weight(std::move(v));
}

// Non-increasing integral highest weight, repeats allowed.
inline Weight random_highest_weight(std::mt19937& rng, std::size_t n, int lo = -8, int hi = 8) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> xs(n);
  for (auto& x : xs) x = d(rng);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::vector<Rational> v(xs.begin(), xs.end());
  return Weight(std::move(v));
}

inline std::vector<Signature> signatures(std::size_t n, bool with_r_zero = true) {
  std::vector<Signature> out;
  for (int r = with_r_zero ? 0 : 1; r <= static_cast<int>(n); ++r) out.emplace_back(r, static_cast<int>(n) - r);
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Packet by brute force: all n! rearrangements of lambda_sigma, kept when
// both blocks are decreasing.
inline std::set<std::vector<Rational>> brute_force_packet(const Weight& inf, Signature sig) {
  std::vector<Rational> v(inf.begin(), inf.end());
  std::sort(v.begin(), v.end());
  std::set<std::vector<Rational>> out;
  const auto r = static_cast<std::size_t>(sig.r);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (i + 1 != r && !(v[i] > v[i + 1])) ok = false;
    if (ok) out.insert(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Pairs (i,j) with a_i > b_j, by direct comparison.
inline int count_pairs(const HCParameter& lambda) {
  int c = 0;
  for (const auto& x : lambda.a())
    for (const auto& y : lambda.b())
      if (x > y) ++c;
  return c;
}

// Classical Blattner formula lambda + rho_n(lambda) - rho_c, rho_n the half
// sum of noncompact roots positive on lambda, rho_c for the standard compact
// positive system. Written in coordinates without the library's root sets.
inline std::vector<Rational> classical_blattner(const HCParameter& lambda) {
  const auto r = lambda.a().size(), s = lambda.b().size(), n = r + s;
  std::vector<Rational> x;
  for (const auto& e : lambda.a()) x.push_back(e);
  for (const auto& e : lambda.b()) x.push_back(e);
  std::vector<Rational> out(x);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j) {
      const Rational sign = x[i] > x[j] ? Rational(1, 2) : Rational(-1, 2);
      out[i] += sign;
      out[j] -= sign;
    }
  // rho_c: ((r-1)/2, ..., (1-r)/2 ; (s-1)/2, ..., (1-s)/2)
  for (std::size_t i = 0; i < r; ++i) out[i] -= Rational(static_cast<std::int64_t>(r) - 1 - 2 * static_cast<std::int64_t>(i), 2);
  for (std::size_t j = 0; j < s; ++j) out[r + j] -= Rational(static_cast<std::int64_t>(s) - 1 - 2 * static_cast<std::int64_t>(j), 2);
  return out;
}

}  // namespace dsp::testing
