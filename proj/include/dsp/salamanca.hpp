#pragma once

// Lowest K-type test for discrete series. Starting from a K-highest weight mu:
//
//   mu'       = mu + sum of compact roots alpha with (alpha, mu) > 0
//   Delta(u)  = roots alpha of g with (alpha, mu') > 0
//   (a)       q(mu') is a Borel subalgebra, i.e. mu' is regular
//   (b)       (mu', alpha) >= (2 rho(u), alpha) for every alpha in Delta(u)
//
// When both hold the Harish-Chandra parameter is recovered as mu' - rho(u).
// The value mu' - 2 rho(u) is kept alongside as a diagnostic; on the basic
// example mu = (5,3;0) it is singular while mu' - rho(u) = (5,2;1) has
// Blattner parameter mu again.

#include <optional>
#include <string>

#include "dsp/error.hpp"
#include "dsp/packets.hpp"
#include "dsp/roots.hpp"
#include "dsp/weight.hpp"

namespace dsp {

struct ThetaParabolic {
  RootSet delta_u;
  bool is_borel = false;
  Weight two_rho_u;
};

struct SRVerdict {
  bool accepted = false;
  bool borel_ok = false;
  bool positivity_ok = false;
  bool hc_regular = false;
  int equalities = 0;  // roots where condition (b) holds with equality
  Weight mu_prime;
  ThetaParabolic parabolic;
  std::optional<HCParameter> hc_corrected;
  Weight hc_paper_literal;  // mu' - 2 rho(u)

  // Name of the first failing condition, empty when accepted.
  std::string failure() const {
    if (!borel_ok) return "borel";
    if (!positivity_ok) return "positivity";
    if (!hc_regular) return "regularity";
    return {};
  }
};

inline Weight mu_prime(const Weight& mu, Signature sig) {
  if (mu.size() != sig.size()) {
    throw DimensionError("K-type of length " + std::to_string(mu.size()) + " for signature " +
                         to_string(sig));
  }
  if (!is_k_dominant(mu, sig)) throw DomainError("K-type " + to_string(mu) + " is not K-dominant");
  return mu + sum_of_roots(positive_on(compact_roots(sig), mu));
}

inline ThetaParabolic theta_parabolic(const Weight& mu_p) {
  auto delta = positive_on(roots_g(mu_p.size()), mu_p);
  const auto n = mu_p.size();
  const bool borel = delta.size() == n * (n - (n ? 1 : 0)) / 2;
  auto two_rho = sum_of_roots(delta);
  return {std::move(delta), borel, std::move(two_rho)};
}

// Smallest |(lambda, alpha)| over the roots of u(n); nullopt for n < 2.
inline std::optional<Rational> regularity_margin(const Weight& lambda) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const Rational gap = abs(lambda[i] - lambda[j]);
      if (!best || gap < *best) best = gap;
    }
  return best;
}

inline SRVerdict sr_test(const Weight& mu, Signature sig) {
  SRVerdict v;
  v.mu_prime = mu_prime(mu, sig);
  v.parabolic = theta_parabolic(v.mu_prime);
  v.borel_ok = v.parabolic.is_borel;

  v.positivity_ok = true;
  for (const auto& alpha : v.parabolic.delta_u) {
    const Rational lhs = alpha.pair(v.mu_prime);
    const Rational rhs = alpha.pair(v.parabolic.two_rho_u);
    if (lhs < rhs) v.positivity_ok = false;
    if (lhs == rhs) ++v.equalities;
  }

  v.hc_paper_literal = v.mu_prime - v.parabolic.two_rho_u;

  // Outside the Borel case the half-sum need not lie in one coset of Z.
  if (v.borel_ok) {
    const Weight candidate = v.mu_prime - Rational(1, 2) * v.parabolic.two_rho_u;
    v.hc_regular = candidate.regular();
    v.accepted = v.positivity_ok && v.hc_regular;
    if (v.accepted) v.hc_corrected = HCParameter::split(candidate, sig);
  }
  return v;
}

}  // namespace dsp
