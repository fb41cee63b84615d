#pragma once

// Text and JSON forms of weights and reports.
//
// Text weights are comma separated entries, each an integer or "p/2", with an
// optional block break written ";" or "/": "5,3/0" and "5,3;0" both read as
// the blocks (5,3) and (0). A "/" directly followed by "2" and then a comma,
// a block break or the end of the token is read as a fraction bar, so
// "1,1/2" is the (rejected) weight (1, 1/2). When the block sizes are known
// from a signature, parse_blocks tries both readings of such a "/" and
// keeps the one that fits.
//
// JSON weights are arrays of strings in the same entry syntax.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsp/branching.hpp"
#include "dsp/error.hpp"
#include "dsp/ggp.hpp"
#include "dsp/packets.hpp"
#include "dsp/roots.hpp"
#include "dsp/salamanca.hpp"
#include "dsp/weight.hpp"

namespace dsp {

using json = nlohmann::ordered_json;

struct ParsedWeight {
  Weight weight;
  std::optional<std::size_t> split;  // size of the first block when a break was given
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
  const std::string t = trim(s);
  std::size_t k = 0;
  if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
  if (k == t.size()) throw ParseError("bad entry '" + std::string(whole) + "'");
  for (std::size_t i = k; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("bad entry '" + std::string(whole) + "'");
  try {
    return std::stoll(t);
  } catch (const std::out_of_range&) {
    throw ParseError("entry out of range '" + std::string(whole) + "'");
  }
}

}  // namespace detail

// "p", "p/1" or "p/2".
inline Rational parse_rational(std::string_view token) {
  const std::string t = detail::trim(token);
  if (t.empty()) throw ParseError("empty entry");
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(detail::parse_int(t, t));
  const std::int64_t den = detail::parse_int(std::string_view(t).substr(slash + 1), t);
  if (den != 1 && den != 2) throw ParseError("entry '" + t + "' has denominator other than 1 or 2");
  return Rational(detail::parse_int(std::string_view(t).substr(0, slash), t), den);
}

namespace detail {

// A position of a '/' that may be a fraction bar: followed by "2" and then
// ',', ';', '/' or the end.
inline bool fraction_candidate(const std::string& s, std::size_t pos) {
  std::size_t k = pos + 1;
  while (k < s.size() && s[k] == ' ') ++k;
  if (k >= s.size() || s[k] != '2') return false;
  ++k;
  while (k < s.size() && s[k] == ' ') ++k;
  return k == s.size() || s[k] == ',' || s[k] == ';' || s[k] == '/';
}

// Parses with every '/' already resolved: `bars` lists the '/' positions read
// as fraction bars, every other '/' is a block break.
inline ParsedWeight parse_resolved(const std::string& text, const std::set<std::size_t>& bars) {
  std::string s = text;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '/' && !bars.count(i)) s[i] = ';';
  const auto brk = s.find(';');
  if (brk != std::string::npos && s.find(';', brk + 1) != std::string::npos) {
    throw ParseError("more than one block break in '" + text + "'");
  }
  std::vector<Rational> entries;
  std::optional<std::size_t> split;
  auto read_block = [&](std::string_view block) {
    if (trim(block).empty()) return;
    std::size_t start = 0;
    for (;;) {
      const auto comma = block.find(',', start);
      const auto tok = block.substr(start, comma == std::string_view::npos ? block.npos : comma - start);
      entries.push_back(parse_rational(tok));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  };
  const std::string_view sv(s);
  if (brk == std::string::npos) {
    read_block(sv);
  } else {
    read_block(sv.substr(0, brk));
    split = entries.size();
    read_block(sv.substr(brk + 1));
  }
  return {Weight(std::move(entries)), split};
}

}  // namespace detail

inline ParsedWeight parse_weight(std::string_view text) {
  const std::string s(text);
  std::set<std::size_t> bars;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '/' && detail::fraction_candidate(s, i)) bars.insert(i);
  try {
    return detail::parse_resolved(s, bars);
  } catch (const DomainError& e) {
    throw ParseError("'" + s + "': " + e.what());
  }
}

// Parses a Harish-Chandra parameter or K-type for a known signature. Every
// reading of an ambiguous '/' is tried; exactly one must produce blocks of
// sizes (r, s).
inline Weight parse_blocks(std::string_view text, Signature sig) {
  const std::string s(text);
  std::vector<std::size_t> ambiguous;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '/' && detail::fraction_candidate(s, i)) ambiguous.push_back(i);
  if (ambiguous.size() > 16) throw ParseError("too many '/' in '" + s + "'");

  std::vector<Weight> fits;
  std::string last_error = "no block break";
  for (std::uint32_t mask = 0; mask < (1u << ambiguous.size()); ++mask) {
    std::set<std::size_t> bars;
    for (std::size_t k = 0; k < ambiguous.size(); ++k)
      if (mask & (1u << k)) bars.insert(ambiguous[k]);
    try {
      auto pw = detail::parse_resolved(s, bars);
      if (pw.weight.size() != sig.size()) {
        last_error = "expected " + std::to_string(sig.n()) + " entries";
        continue;
      }
      const auto first = pw.split.value_or(sig.s == 0 ? pw.weight.size() : (sig.r == 0 ? 0 : SIZE_MAX));
      if (first != static_cast<std::size_t>(sig.r)) {
        last_error = "blocks do not match signature " + to_string(sig);
        continue;
      }
      if (std::find(fits.begin(), fits.end(), pw.weight) == fits.end()) fits.push_back(pw.weight);
    } catch (const std::invalid_argument& e) {
      last_error = e.what();
    }
  }
  if (fits.empty()) throw ParseError("'" + s + "' for signature " + to_string(sig) + ": " + last_error);
  if (fits.size() > 1) throw ParseError("'" + s + "' is ambiguous; separate blocks with ';'");
  return fits.front();
}

inline HCParameter parse_hc(std::string_view text, Signature sig) {
  try {
    return HCParameter::split(parse_blocks(text, sig), sig);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// "r,s"
inline Signature parse_signature(std::string_view text) {
  const std::string t = detail::trim(text);
  const auto comma = t.find(',');
  if (comma == std::string::npos) throw ParseError("signature must be 'r,s', got '" + t + "'");
  const auto r = detail::parse_int(std::string_view(t).substr(0, comma), t);
  const auto s = detail::parse_int(std::string_view(t).substr(comma + 1), t);
  try {
    return Signature(static_cast<int>(r), static_cast<int>(s));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// "r,s:a-block/b-block"
inline HCParameter parse_place(std::string_view text) {
  const std::string t(text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("place must be 'r,s:a/b', got '" + t + "'");
  return parse_hc(t.substr(colon + 1), parse_signature(t.substr(0, colon)));
}

// Comma separated entries, the inverse of parse_weight on a single block.
inline std::string format_entries(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s;
}

// ---- JSON ----

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const Weight& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(to_string(x));
  return arr;
}

inline Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("weight must be a JSON array");
  std::vector<Rational> v;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("weight entries must be strings");
    v.push_back(parse_rational(e.get<std::string>()));
  }
  try {
    return Weight(std::move(v));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline json to_json(const Root& a) { return json::array({a.i, a.j}); }

inline json to_json(const RootSet& roots) {
  json arr = json::array();
  for (const auto& a : roots) arr.push_back(to_json(a));
  return arr;
}

inline json to_json(const PacketMember& m) {
  return json{{"a", to_json(m.hc.a())},          {"b", to_json(m.hc.b())},
              {"degree", m.degree},               {"length", m.length},
              {"blattner", to_json(m.blattner)},  {"coherent", to_json(m.coherent)}};
}

// Header plus one row per member, packet order.
inline std::string packet_tsv(const std::vector<PacketMember>& packet) {
  std::string s = "a\tb\tdegree\tlength\tblattner\tcoherent\n";
  for (const auto& m : packet) {
    s += format_entries(m.hc.a()) + "\t" + format_entries(m.hc.b()) + "\t" + std::to_string(m.degree) +
         "\t" + std::to_string(m.length) + "\t" + format_entries(m.blattner) + "\t" +
         format_entries(m.coherent) + "\n";
  }
  return s;
}

inline json to_json(const HCParameter& p) { return json{{"a", to_json(p.a())}, {"b", to_json(p.b())}}; }

inline json to_json(const SRVerdict& v) {
  json j{{"accepted", v.accepted},
         {"borel_ok", v.borel_ok},
         {"positivity_ok", v.positivity_ok},
         {"hc_regular", v.hc_regular},
         {"equalities", v.equalities},
         {"mu_prime", to_json(v.mu_prime)},
         {"delta_u", to_json(v.parabolic.delta_u)},
         {"two_rho_u", to_json(v.parabolic.two_rho_u)}};
  j["hc_corrected"] = v.hc_corrected ? to_json(*v.hc_corrected) : json(nullptr);
  j["hc_paper_literal"] = to_json(v.hc_paper_literal);
  return j;
}

inline json to_json(const BranchConstituent& c) {
  return json{{"lower", to_json(c.lower)}, {"u1", to_json(c.u1_weight)}};
}

inline json to_json(const ChainLink& link) {
  json places = json::array();
  for (const auto& p : link.params) {
    const auto sig = p.signature();
    places.push_back(json{{"sig", json::array({sig.r, sig.s})}, {"a", to_json(p.a())}, {"b", to_json(p.b())}});
  }
  json u1 = json::array();
  for (const auto& q : link.u1) u1.push_back(to_json(q));
  return json{{"level", link.level},
              {"places", std::move(places)},
              {"u1", std::move(u1)},
              {"class", to_string(link.verdict.kind)},
              {"dual_knownknown", link.dual_knownknown}};
}

}  // namespace dsp
