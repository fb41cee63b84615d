#pragma once

// U(m) -> U(m-1) x U(1) branching by interlacing, the Weyl dimension formula
// used to check it, and the K -> K' = U(r-1) x U(1) x U(s) restriction of a
// K-type of U(r) x U(s).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsp/error.hpp"
#include "dsp/roots.hpp"
#include "dsp/weight.hpp"

namespace dsp {

struct BranchConstituent {
  Weight lower;
  Rational u1_weight;  // sum(upper) - sum(lower)

  friend bool operator==(const BranchConstituent&, const BranchConstituent&) = default;
};

// Highest weight of K' = U(r-1) x U(1) x U(s).
struct KPrimeWeight {
  Weight head;  // U(r-1)
  Rational u1;  // U(1)
  Weight tail;  // U(s)

  friend bool operator==(const KPrimeWeight&, const KPrimeWeight&) = default;
};

inline void require_dominant(const Weight& w, const char* what) {
  if (!w.non_increasing()) throw DomainError(std::string(what) + " " + to_string(w) + " is not dominant");
}

// upper_1 >= lower_1 >= upper_2 >= ... >= lower_{m-1} >= upper_m.
inline bool interlaces(const Weight& upper, const Weight& lower) {
  if (upper.empty() || lower.size() + 1 != upper.size()) {
    throw DimensionError("interlacing needs lengths m and m-1, got " + std::to_string(upper.size()) +
                         " and " + std::to_string(lower.size()));
  }
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  return true;
}

// Every constituent of the restriction to U(m-1) x U(1), lower weights in
// descending lexicographic order. Each occurs with multiplicity one.
inline std::vector<BranchConstituent> branch(const Weight& upper) {
  if (upper.empty()) throw DimensionError("branch needs m >= 1");
  require_dominant(upper, "upper weight");
  const std::size_t m = upper.size();
  const Rational total = upper.sum();

  std::vector<BranchConstituent> out;
  std::vector<Rational> lower(m - 1);
  // odometer over lower_i in [upper_{i+1}, upper_i], counting down
  for (std::size_t i = 0; i + 1 < m; ++i) lower[i] = upper[i];
  for (;;) {
    Weight w(lower);
    out.push_back({w, total - w.sum()});
    std::size_t k = m - 1;
    while (k > 0 && lower[k - 1] == upper[k]) --k;
    if (k == 0) break;
    lower[k - 1] -= 1;
    for (std::size_t i = k; i + 1 < m; ++i) lower[i] = upper[i];
  }
  return out;
}

// prod_{i<j} (w_i - w_j + j - i) / (j - i).
inline std::int64_t weyl_dim(const Weight& w) {
  require_dominant(w, "weight");
  Rational d(1);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const auto gap = static_cast<std::int64_t>(j - i);
      d *= (w[i] - w[j] + gap) / Rational(gap);
    }
  if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer: " + to_string(d));
  return d.numerator();
}

// Split the last entry of the U(r) block off as the U(1) weight; the U(s)
// block is unchanged.
inline KPrimeWeight restrict_ktype(const Weight& Lambda, Signature sig) {
  if (Lambda.size() != sig.size()) throw DimensionError("K-type length does not match signature");
  if (sig.r == 0) throw DomainError("restrict_ktype needs r >= 1");
  if (!is_k_dominant(Lambda, sig)) throw DomainError("K-type " + to_string(Lambda) + " is not K-dominant");
  const auto r = static_cast<std::size_t>(sig.r);
  return {Lambda.slice(0, r - 1), Lambda[r - 1], Lambda.slice(r, Lambda.size() - r)};
}

// Whether the restriction of the K-type Lambda to K' contains `candidate`.
inline bool contains(const Weight& Lambda, Signature sig, const KPrimeWeight& candidate) {
  if (Lambda.size() != sig.size() || sig.r == 0 ||
      candidate.head.size() + 1 != static_cast<std::size_t>(sig.r) ||
      candidate.tail.size() != static_cast<std::size_t>(sig.s)) {
    throw DimensionError("K' weight shape does not match signature " + to_string(sig));
  }
  if (!is_k_dominant(Lambda, sig)) throw DomainError("K-type " + to_string(Lambda) + " is not K-dominant");
  const auto r = static_cast<std::size_t>(sig.r);
  const Weight a = Lambda.slice(0, r);
  const Weight b = Lambda.slice(r, Lambda.size() - r);
  if (!candidate.head.non_increasing() || !interlaces(a, candidate.head)) return false;
  if (candidate.u1 != a.sum() - candidate.head.sum()) return false;
  return candidate.tail == b;
}

}  // namespace dsp
