#pragma once

// Discrete series L-packets of U(r,s) with regular integral infinitesimal
// character. A member is recorded by its Harish-Chandra parameter written as
// an (r,s)-shuffle (a_1 > ... > a_r ; b_1 > ... > b_s) of the entries of the
// infinitesimal character.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dsp/error.hpp"
#include "dsp/roots.hpp"
#include "dsp/weight.hpp"

namespace dsp {

class HCParameter {
 public:
  HCParameter(Weight a, Weight b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() + b_.size() == 0) throw DomainError("Harish-Chandra parameter needs n >= 1");
    if (!a_.strictly_decreasing() || !b_.strictly_decreasing()) {
      throw DomainError("Harish-Chandra parameter blocks must be strictly decreasing: " + str());
    }
    // concatenation re-checks the common coset
    const Weight all = dsp::concat(a_, b_);
    if (!all.regular()) throw DomainError("Harish-Chandra parameter is singular: " + str());
  }

  static HCParameter split(const Weight& w, Signature sig) {
    if (w.size() != sig.size()) {
      throw DimensionError("weight of length " + std::to_string(w.size()) + " for signature " +
                           to_string(sig));
    }
    const auto r = static_cast<std::size_t>(sig.r);
    return HCParameter(w.slice(0, r), w.slice(r, w.size() - r));
  }

  const Weight& a() const { return a_; }
  const Weight& b() const { return b_; }
  Signature signature() const { return {static_cast<int>(a_.size()), static_cast<int>(b_.size())}; }
  std::size_t n() const { return a_.size() + b_.size(); }
  Weight concat() const { return dsp::concat(a_, b_); }

  // "(a_1,...,a_r;b_1,...,b_s)"
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + to_string(a_[i]);
    s += ";";
    for (std::size_t i = 0; i < b_.size(); ++i) s += (i ? "," : "") + to_string(b_[i]);
    return s + ")";
  }

  friend bool operator==(const HCParameter&, const HCParameter&) = default;

 private:
  Weight a_;
  Weight b_;
};

inline std::string to_string(const HCParameter& p) { return p.str(); }

// Strictly decreasing weight lambda_sigma = a_sigma + rho.
class InfinitesimalCharacter {
 public:
  explicit InfinitesimalCharacter(Weight w) : w_(std::move(w)) {
    if (w_.empty()) throw DomainError("infinitesimal character needs n >= 1");
    if (!w_.strictly_decreasing()) {
      throw DomainError("infinitesimal character must be strictly decreasing: " + to_string(w_));
    }
  }

  // The infinitesimal character of the packet containing lambda.
  static InfinitesimalCharacter of(const HCParameter& lambda) {
    const Weight all = lambda.concat();
    std::vector<Rational> v(all.begin(), all.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return InfinitesimalCharacter(Weight(std::move(v)));
  }

  const Weight& weight() const { return w_; }
  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }

  friend bool operator==(const InfinitesimalCharacter&, const InfinitesimalCharacter&) = default;

 private:
  Weight w_;
};

struct PacketMember {
  HCParameter hc;
  int degree = 0;
  // shuffle_word[k] is the 1-based position in lambda_sigma of the k-th entry of hc.
  std::vector<int> shuffle_word;
  int length = 0;
  Weight blattner;
  Weight coherent;
};

// lambda_sigma = a_sigma + rho for a non-increasing integral highest weight.
inline InfinitesimalCharacter infinitesimal_character(const Weight& highest_weight) {
  if (highest_weight.empty()) throw DomainError("highest weight needs n >= 1");
  if (!highest_weight.integral()) throw DomainError("highest weight must be integral");
  if (!highest_weight.non_increasing()) {
    throw DomainError("highest weight must be non-increasing: " + to_string(highest_weight));
  }
  return InfinitesimalCharacter(highest_weight + rho(highest_weight.size()));
}

// q(lambda) = #{(i,j) : a_i > b_j} = |Delta^{nc,+}(lambda)|.
inline int degree(const HCParameter& lambda) {
  return static_cast<int>(positive_on(noncompact_positive(lambda.signature()), lambda.concat()).size());
}

// Positions (1-based) in lambda_sigma of the entries of lambda.
inline std::vector<int> shuffle_word(const HCParameter& lambda, const InfinitesimalCharacter& inf) {
  const Weight w = lambda.concat();
  if (w.size() != inf.size()) throw DimensionError("parameter and infinitesimal character differ in length");
  std::vector<int> word;
  word.reserve(w.size());
  for (const auto& x : w) {
    auto it = std::find(inf.weight().begin(), inf.weight().end(), x);
    if (it == inf.weight().end()) {
      throw DomainError(lambda.str() + " is not a shuffle of " + to_string(inf.weight()));
    }
    word.push_back(static_cast<int>(it - inf.weight().begin()) + 1);
  }
  return word;
}

// Inversion count of the permutation carrying lambda_sigma to lambda.
inline int shuffle_length(const HCParameter& lambda, const InfinitesimalCharacter& inf) {
  const auto word = shuffle_word(lambda, inf);
  int inv = 0;
  for (std::size_t p = 0; p < word.size(); ++p)
    for (std::size_t q = p + 1; q < word.size(); ++q)
      if (word[p] > word[q]) ++inv;
  return inv;
}

// Lambda = lambda - rho, a highest weight for K.
inline Weight coherent_parameter(const HCParameter& lambda) {
  return lambda.concat() - rho(lambda.n());
}

// Highest weight of the minimal K-type: Lambda + sum of Delta^{nc,+}(lambda).
inline Weight blattner(const HCParameter& lambda) {
  return coherent_parameter(lambda) +
         sum_of_roots(positive_on(noncompact_positive(lambda.signature()), lambda.concat()));
}

inline PacketMember make_member(const HCParameter& lambda, const InfinitesimalCharacter& inf) {
  return PacketMember{lambda, degree(lambda), shuffle_word(lambda, inf), shuffle_length(lambda, inf),
                      blattner(lambda), coherent_parameter(lambda)};
}

// Members of the packet of U(r,s) with infinitesimal character inf, one per
// r-subset of positions sent to the a-block, subsets in colexicographic order.
inline std::vector<PacketMember> enumerate_packet(const InfinitesimalCharacter& inf, Signature sig) {
  if (inf.size() != sig.size()) {
    throw DimensionError("infinitesimal character of length " + std::to_string(inf.size()) +
                         " for signature " + to_string(sig));
  }
  const auto n = sig.size();
  const auto r = static_cast<std::size_t>(sig.r);
  std::vector<PacketMember> packet;

  std::vector<std::size_t> subset(r);
  for (std::size_t k = 0; k < r; ++k) subset[k] = k;
  for (;;) {
    std::vector<bool> in_a(n, false);
    for (auto k : subset) in_a[k] = true;
    std::vector<Rational> a, b;
    for (std::size_t k = 0; k < n; ++k) (in_a[k] ? a : b).push_back(inf[k]);
    packet.push_back(make_member(HCParameter(Weight(std::move(a)), Weight(std::move(b))), inf));

    // colex successor: bump the lowest element that can move, reset those below it
    std::size_t k = 0;
    while (k < r && subset[k] + 1 == (k + 1 < r ? subset[k + 1] : n)) ++k;
    if (k == r) break;
    ++subset[k];
    for (std::size_t m = 0; m < k; ++m) subset[m] = m;
  }
  return packet;
}

struct Extremes {
  PacketMember holomorphic;      // degree 0
  PacketMember antiholomorphic;  // degree rs, parameter lambda_sigma
};

inline Extremes extremes(const std::vector<PacketMember>& packet) {
  if (packet.empty()) throw DomainError("extremes of an empty packet");
  const Signature sig = packet.front().hc.signature();
  const auto inf = InfinitesimalCharacter::of(packet.front().hc);
  const PacketMember* holo = nullptr;
  const PacketMember* anti = nullptr;
  for (const auto& m : packet) {
    if (m.hc.signature() != sig || InfinitesimalCharacter::of(m.hc) != inf) {
      throw DomainError("packet mixes signatures or infinitesimal characters");
    }
    if (m.degree == 0) {
      if (holo) throw DomainError("packet has two degree-0 members");
      holo = &m;
    }
    if (m.degree == sig.r * sig.s) {
      if (anti) throw DomainError("packet has two members of top degree");
      anti = &m;
    }
  }
  if (!holo || !anti) throw DomainError("packet is missing an extreme member");
  return {*holo, *anti};
}

// Contragredient: negate and reverse each block.
inline HCParameter dual_parameter(const HCParameter& lambda) {
  auto flip = [](const Weight& w) {
    std::vector<Rational> v(w.begin(), w.end());
    std::reverse(v.begin(), v.end());
    for (auto& x : v) x = -x;
    return Weight(std::move(v));
  };
  return HCParameter(flip(lambda.a()), flip(lambda.b()));
}

}  // namespace dsp
