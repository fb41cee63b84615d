#pragma once

// Descent of discrete series parameters along U(r,s) -> U(r-1,s) x U(1), one
// real place at a time, and the test deciding whether the restriction map on
// coherent cohomology in degree q(lambda) is an isomorphism or zero.
//
// For lambda = (a_1 > ... > a_r ; b_1 > ... > b_s) with Lambda = lambda - rho,
// the restricted parameter is
//
//   lambda' = (a_1 - 1/2 > ... > a_{r-1} - 1/2 ; b_1 + 1/2 > ... > b_s + 1/2)
//
// together with the U(1) weight Lambda_r. The map is an isomorphism exactly
// when a_r is the smallest entry of lambda at every place, which is the same
// as Delta'^{nc,+}(lambda') = Delta^{nc,+}(lambda) under i' -> i, r-1+j -> r+j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsp/branching.hpp"
#include "dsp/error.hpp"
#include "dsp/packets.hpp"
#include "dsp/roots.hpp"
#include "dsp/weight.hpp"

namespace dsp {

// One Harish-Chandra parameter per archimedean place, all of the same rank.
class PlacedParameter {
 public:
  explicit PlacedParameter(std::vector<HCParameter> places) : places_(std::move(places)) {
    if (places_.empty()) throw DomainError("placed parameter needs at least one place");
    for (const auto& p : places_)
      if (p.n() != places_.front().n()) throw DimensionError("places have different n");
  }
  PlacedParameter(std::initializer_list<HCParameter> places)
      : PlacedParameter(std::vector<HCParameter>(places)) {}

  std::size_t n() const { return places_.front().n(); }
  std::size_t size() const { return places_.size(); }
  const HCParameter& operator[](std::size_t v) const { return places_[v]; }
  auto begin() const { return places_.begin(); }
  auto end() const { return places_.end(); }

  friend bool operator==(const PlacedParameter&, const PlacedParameter&) = default;

 private:
  std::vector<HCParameter> places_;
};

// lambda' for U(r-1,s) plus the U(1) weight. The blocks are kept as bare
// weights because lambda' can be singular outside the regularity hypothesis.
struct RestrictedParameter {
  Weight a;
  Weight b;
  Rational u1_weight;

  std::size_t n() const { return a.size() + b.size(); }
  Weight concat() const { return dsp::concat(a, b); }
  HCParameter as_hc() const { return HCParameter(a, b); }

  friend bool operator==(const RestrictedParameter&, const RestrictedParameter&) = default;
};

enum class RestrictionClass { Isomorphism, Zero };

inline std::string to_string(RestrictionClass c) {
  return c == RestrictionClass::Isomorphism ? "iso" : "zero";
}

struct RestrictionVerdict {
  RestrictionClass kind = RestrictionClass::Zero;
  bool regw = false;          // consecutive gaps >= 2 at every place
  bool routes_agree = true;   // root-set route vs. smallest-entry route
};

// lambda_i - lambda_{i+1} >= 2 for all i, i.e. a_sigma = lambda_sigma - rho regular.
inline bool check_regw(const InfinitesimalCharacter& inf) {
  for (std::size_t i = 0; i + 1 < inf.size(); ++i)
    if (inf[i] - inf[i + 1] < 2) return false;
  return true;
}

inline bool check_regw(const PlacedParameter& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const HCParameter& h) { return check_regw(InfinitesimalCharacter::of(h)); });
}

inline RestrictedParameter restrict_parameter(const HCParameter& lambda) {
  const Signature sig = lambda.signature();
  if (sig.r == 0) throw DomainError("restrict_parameter needs r >= 1");
  const auto r = static_cast<std::size_t>(sig.r);
  const auto n = lambda.n();

  std::vector<Rational> a, b;
  for (std::size_t i = 0; i + 1 < r; ++i) a.push_back(lambda.a()[i] - Rational(1, 2));
  for (const auto& x : lambda.b()) b.push_back(x + Rational(1, 2));
  RestrictedParameter out{Weight(std::move(a)), Weight(std::move(b)), lambda.a()[r - 1] - rho(n)[r - 1]};

  // Second route: Lambda' + rho' from the K-type splitting of Lambda.
  const KPrimeWeight split = restrict_ktype(coherent_parameter(lambda), sig);
  if (split.u1 != out.u1_weight) throw std::logic_error("U(1) weight mismatch in restrict_parameter");
  if (n > 1) {
    const Weight via_k = concat(split.head, split.tail) + rho(n - 1);
    if (via_k != out.concat()) throw std::logic_error("lambda' mismatch in restrict_parameter");
  }
  return out;
}

inline RestrictedParameter restrict_parameter(Signature sig, const HCParameter& lambda) {
  if (lambda.signature() != sig) throw DimensionError("parameter does not have signature " + to_string(sig));
  return restrict_parameter(lambda);
}

// lambda' regular and in ((n-2)/2 + Z)^{n-1}.
inline bool check_lemma_hc(const RestrictedParameter& rp, std::size_t n) {
  const Weight w = rp.concat();
  if (!w.regular()) return false;
  const Rational shift(static_cast<std::int64_t>(n) - 2, 2);
  return std::all_of(w.begin(), w.end(), [&](const Rational& x) { return is_integer(x - shift); });
}

// a_r is the smallest entry. A place with r = 0 has no a_r and fails.
inline bool knownknown(const HCParameter& lambda) {
  if (lambda.a().empty()) return false;
  const Weight all = lambda.concat();
  return lambda.a()[lambda.a().size() - 1] == *std::min_element(all.begin(), all.end());
}

inline bool knownknown(const PlacedParameter& p) {
  return std::all_of(p.begin(), p.end(), [](const HCParameter& h) { return knownknown(h); });
}

// Delta'^{nc,+}(lambda') embedded in the roots of u(n) equals Delta^{nc,+}(lambda).
inline bool compat(Signature sig, const HCParameter& lambda, const RestrictedParameter& rp) {
  if (lambda.signature() != sig || sig.r == 0 || rp.a.size() + 1 != static_cast<std::size_t>(sig.r) ||
      rp.b.size() != static_cast<std::size_t>(sig.s)) {
    throw DimensionError("compat: restricted parameter does not match " + lambda.str());
  }
  const RootSet full = positive_on(noncompact_positive(sig), lambda.concat());
  if (sig.r == 1) return full.empty();  // U(0,s) has no noncompact roots

  const Signature sig_prime{sig.r - 1, sig.s};
  std::vector<Root> embedded;
  for (const auto& alpha : positive_on(noncompact_positive(sig_prime), rp.concat()))
    embedded.push_back({alpha.i, alpha.j + 1});
  return RootSet(sig.size(), std::move(embedded)) == full;
}

inline RestrictionVerdict classify_restriction(const PlacedParameter& p) {
  RestrictionVerdict v;
  v.regw = check_regw(p);
  bool via_roots = true;
  for (const auto& lambda : p) via_roots = compat(lambda.signature(), lambda, restrict_parameter(lambda)) && via_roots;
  const bool via_min = knownknown(p);
  v.routes_agree = via_roots == via_min;
  if (v.regw && !v.routes_agree) {
    throw std::logic_error("root-set and smallest-entry criteria disagree under the regularity hypothesis");
  }
  v.kind = via_roots ? RestrictionClass::Isomorphism : RestrictionClass::Zero;
  return v;
}

// prod_v r_v / n.
inline Rational expected_knownknown_fraction(const std::vector<Signature>& sigs) {
  Rational q(1);
  for (const auto& sig : sigs) q *= Rational(sig.r, sig.n());
  return q;
}

// Share of the product packet prod_v Pi_{sigma_v} satisfying knownknown at
// every place, by enumeration of all prod_v C(n, r_v) members.
inline Rational knownknown_fraction(const std::vector<std::pair<InfinitesimalCharacter, Signature>>& places) {
  if (places.empty()) throw DomainError("knownknown_fraction needs at least one place");
  // per place: which members satisfy the condition
  std::vector<std::vector<bool>> ok;
  for (const auto& [inf, sig] : places) {
    std::vector<bool> flags;
    for (const auto& m : enumerate_packet(inf, sig)) flags.push_back(knownknown(m.hc));
    ok.push_back(std::move(flags));
  }
  std::int64_t hits = 0, total = 0;
  std::vector<std::size_t> idx(ok.size(), 0);
  for (;;) {
    ++total;
    bool all = true;
    for (std::size_t v = 0; v < ok.size(); ++v) all = all && ok[v][idx[v]];
    if (all) ++hits;
    std::size_t v = 0;
    while (v < ok.size() && ++idx[v] == ok[v].size()) idx[v++] = 0;
    if (v == ok.size()) break;
  }
  return Rational(hits, total);
}

struct ChainLink {
  std::size_t level;  // n at this step
  PlacedParameter params;
  std::vector<Rational> u1;  // U(1) weight split off at each place
  RestrictionVerdict verdict;
  bool dual_knownknown = false;
};

// Iterated restriction U(r,s) -> U(r-1,s), keeping only the U(r-1,s)
// parameter at each step. The number of links is min(depth, n - 1).
inline std::vector<ChainLink> descent_chain(const PlacedParameter& start, std::size_t depth) {
  if (depth == 0) throw DomainError("descent depth must be positive");
  std::vector<ChainLink> chain;
  std::vector<HCParameter> current(start.begin(), start.end());
  const std::size_t steps = std::min(depth, start.n() - 1);
  for (std::size_t step = 0; step < steps; ++step) {
    PlacedParameter here(current);
    std::vector<Rational> u1;
    std::vector<HCParameter> next;
    std::vector<HCParameter> duals;
    for (const auto& lambda : here) {
      if (lambda.signature().r == 0) {
        throw DomainError("descent reached a place with r = 0 at level " + std::to_string(here.n()));
      }
      const auto rp = restrict_parameter(lambda);
      u1.push_back(rp.u1_weight);
      duals.push_back(dual_parameter(lambda));
      if (rp.n() > 0) {
        if (!rp.concat().regular()) {
          throw DomainError("restricted parameter of " + lambda.str() + " is singular");
        }
        next.push_back(rp.as_hc());
      }
    }
    chain.push_back({here.n(), here, std::move(u1), classify_restriction(here),
                     knownknown(PlacedParameter(std::move(duals)))});
    current = std::move(next);
  }
  return chain;
}

}  // namespace dsp
