#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 ok, 2 input error, 3 hypothesis violation under --strict.

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dsp/branching.hpp"
#include "dsp/error.hpp"
#include "dsp/ggp.hpp"
#include "dsp/io.hpp"
#include "dsp/packets.hpp"
#include "dsp/salamanca.hpp"

namespace dsp::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kHypothesis = 3;

struct Options {
  std::vector<std::string> sigs;
  std::string hw;
  std::string hcp;
  std::string ktype;
  std::vector<std::string> places;
  std::size_t depth = 0;
  std::string margin = "2";
  std::string format = "pretty";
  bool strict = false;
};

namespace detail {

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Signature single_sig(const Options& o) {
  if (o.sigs.size() != 1) throw ParseError("exactly one --sig is required");
  return parse_signature(o.sigs.front());
}

// --place entries, or --sig with --hcp.
inline PlacedParameter read_places(const Options& o) {
  std::vector<HCParameter> v;
  if (!o.places.empty()) {
    if (!o.hcp.empty()) throw ParseError("use either --place or --sig/--hcp");
    for (const auto& p : o.places) v.push_back(parse_place(p));
  } else {
    if (o.hcp.empty()) throw ParseError("--hcp or --place is required");
    v.push_back(parse_hc(o.hcp, single_sig(o)));
  }
  return PlacedParameter(std::move(v));
}

inline Weight read_highest_weight(const std::string& text) {
  auto pw = parse_weight(text);
  if (pw.split) throw ParseError("--hw takes a single block");
  return pw.weight;
}

// Under --strict a violated hypothesis aborts; otherwise it is a warning.
inline void hypothesis(const Options& o, bool holds, const std::string& what, std::ostream& err) {
  if (holds) return;
  if (o.strict) throw HypothesisViolation(what);
  err << "warning: " << what << "; result is outside stated hypotheses\n";
}

inline std::string sig_label(Signature sig) {
  return "U(" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
}

inline void dump(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- subcommands ----

inline void cmd_packet(const Options& o, std::ostream& out) {
  const Signature sig = single_sig(o);
  if (o.hw.empty()) throw ParseError("--hw is required");
  const auto inf = infinitesimal_character(read_highest_weight(o.hw));
  const auto packet = enumerate_packet(inf, sig);
  if (o.format == "tsv") {
    out << packet_tsv(packet);
  } else if (o.format == "json") {
    json members = json::array();
    for (const auto& m : packet) members.push_back(to_json(m));
    dump(out, json{{"sig", json::array({sig.r, sig.s})},
                   {"infinitesimal_character", to_json(inf.weight())},
                   {"members", std::move(members)}});
  } else {
    out << "packet of " << sig_label(sig) << " at infinitesimal character " << to_string(inf.weight())
        << ": " << packet.size() << " members\n";
    for (const auto& m : packet) {
      out << "  " << m.hc.str() << "  degree " << m.degree << "  length " << m.length << "  blattner "
          << to_string(m.blattner) << "  coherent " << to_string(m.coherent) << "\n";
    }
    const auto ext = extremes(packet);
    out << "holomorphic " << ext.holomorphic.hc.str() << "  antiholomorphic " << ext.antiholomorphic.hc.str()
        << "\n";
  }
}

inline void cmd_sr(const Options& o, std::ostream& out, std::ostream& err) {
  const Signature sig = single_sig(o);
  if (o.ktype.empty()) throw ParseError("--ktype is required");
  const Weight mu = parse_blocks(o.ktype, sig);
  const Rational bound = parse_rational(o.margin);
  const auto v = sr_test(mu, sig);
  const auto margin = regularity_margin(v.mu_prime);
  const bool margin_ok = !margin || *margin >= bound;
  hypothesis(o, margin_ok, "regularity margin of mu' below " + to_string(bound), err);

  if (o.format == "json") {
    json j = to_json(v);
    j["margin"] = margin ? json(to_string(*margin)) : json(nullptr);
    dump(out, j);
    return;
  }
  if (v.accepted) {
    out << "PASS hc " << v.hc_corrected->str();
  } else {
    out << "FAIL " << v.failure();
  }
  out << "  mu' " << to_string(v.mu_prime) << "  2rho(u) " << to_string(v.parabolic.two_rho_u)
      << "  mu'-2rho(u) " << to_string(v.hc_paper_literal) << "  margin "
      << (margin ? to_string(*margin) : std::string("none")) << "\n";
}

inline void cmd_branch(const Options& o, std::ostream& out) {
  if (o.ktype.empty()) throw ParseError("--ktype is required");
  auto pw = parse_weight(o.ktype);
  if (pw.split) throw ParseError("branch takes a single block");
  const auto parts = branch(pw.weight);
  std::int64_t total = 0;
  for (const auto& c : parts) total += weyl_dim(c.lower);
  const auto dim = weyl_dim(pw.weight);

  if (o.format == "json") {
    json list = json::array();
    for (const auto& c : parts) list.push_back(to_json(c));
    dump(out, json{{"upper", to_json(pw.weight)},
                   {"count", parts.size()},
                   {"dim", dim},
                   {"dim_sum", total},
                   {"constituents", std::move(list)}});
  } else if (o.format == "tsv") {
    out << "lower\tu1\tdim\n";
    for (const auto& c : parts) out << format_entries(c.lower) << "\t" << to_string(c.u1_weight) << "\t" << weyl_dim(c.lower) << "\n";
  } else {
    out << parts.size() << " constituents; dim " << dim << " = sum " << total << ": "
        << (dim == total ? "OK" : "MISMATCH") << "\n";
    for (const auto& c : parts) out << "  " << to_string(c.lower) << "  u1 " << to_string(c.u1_weight) << "\n";
  }
}

inline json place_json(const HCParameter& p) {
  const auto sig = p.signature();
  return json{{"sig", json::array({sig.r, sig.s})}, {"a", to_json(p.a())}, {"b", to_json(p.b())}};
}

inline void cmd_restrict(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = read_places(o);
  hypothesis(o, check_regw(p), "consecutive gaps of the infinitesimal character below 2", err);
  const auto verdict = classify_restriction(p);

  json places = json::array();
  std::ostringstream text;
  for (const auto& lambda : p) {
    const auto rp = restrict_parameter(lambda);
    const bool lemma = check_lemma_hc(rp, p.n());
    const bool cmp = compat(lambda.signature(), lambda, rp);
    json j = place_json(lambda);
    j["prime"] = json{{"a", to_json(rp.a)}, {"b", to_json(rp.b)}};
    j["u1"] = to_json(rp.u1_weight);
    j["lemma_ok"] = lemma;
    j["compat"] = cmp;
    j["knownknown"] = knownknown(lambda);
    places.push_back(std::move(j));
    text << sig_label(lambda.signature()) << " " << lambda.str() << " -> (" << format_entries(rp.a) << ";"
         << format_entries(rp.b) << ")  u1 " << to_string(rp.u1_weight) << "  lemma " << (lemma ? "ok" : "fails")
         << "  compat " << (cmp ? "yes" : "no") << "  knownknown " << (knownknown(lambda) ? "yes" : "no") << "\n";
  }
  if (o.format == "json") {
    dump(out, json{{"places", std::move(places)}, {"class", to_string(verdict.kind)}, {"regw", verdict.regw}});
  } else {
    out << text.str() << "class " << to_string(verdict.kind) << "\n";
  }
}

inline void cmd_chain(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = read_places(o);
  hypothesis(o, check_regw(p), "consecutive gaps of the infinitesimal character below 2", err);
  const std::size_t depth = o.depth ? o.depth : std::max<std::size_t>(p.n() - 1, 1);
  const auto chain = descent_chain(p, depth);
  for (const auto& link : chain)
    if (!link.verdict.regw && &link != &chain.front()) {
      hypothesis(o, false, "level " + std::to_string(link.level) + " violates the gap condition", err);
    }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& link : chain) arr.push_back(to_json(link));
    dump(out, arr);
    return;
  }
  for (const auto& link : chain) {
    out << "level " << link.level << ":";
    for (const auto& lambda : link.params) out << " " << sig_label(lambda.signature()) << " " << lambda.str();
    out << "  u1";
    for (const auto& q : link.u1) out << " " << to_string(q);
    out << "  class " << to_string(link.verdict.kind) << "  dual_knownknown "
        << (link.dual_knownknown ? "yes" : "no") << "\n";
  }
}

inline void cmd_fraction(const Options& o, std::ostream& out) {
  std::vector<std::pair<InfinitesimalCharacter, Signature>> places;
  if (!o.places.empty()) {
    for (const auto& text : o.places) {
      const auto hc = parse_place(text);
      places.emplace_back(InfinitesimalCharacter::of(hc), hc.signature());
    }
  } else {
    if (o.sigs.empty() || o.hw.empty()) throw ParseError("--sig and --hw (or --place) are required");
    const auto inf = infinitesimal_character(read_highest_weight(o.hw));
    for (const auto& s : o.sigs) places.emplace_back(inf, parse_signature(s));
  }
  std::vector<Signature> sigs;
  for (const auto& pl : places) sigs.push_back(pl.second);
  const Rational got = knownknown_fraction(places);
  const Rational want = expected_knownknown_fraction(sigs);
  if (o.format == "json") {
    dump(out, json{{"fraction", to_string(got)}, {"expected", to_string(want)}, {"ok", got == want}});
  } else {
    out << to_string(got) << " (expected " << to_string(want) << ": " << (got == want ? "OK" : "MISMATCH")
        << ")\n";
  }
}

inline void cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = read_places(o);
  hypothesis(o, check_regw(p), "consecutive gaps of the infinitesimal character below 2", err);
  const auto verdict = classify_restriction(p);
  std::vector<HCParameter> duals;
  for (const auto& lambda : p) duals.push_back(dual_parameter(lambda));
  const bool dual_kk = knownknown(PlacedParameter(duals));

  json places = json::array();
  std::ostringstream text;
  for (const auto& lambda : p) {
    const auto sig = lambda.signature();
    const auto inf = InfinitesimalCharacter::of(lambda);
    const auto packet = enumerate_packet(inf, sig);
    std::size_t index = 0;
    while (packet[index].hc != lambda) ++index;
    const auto& m = packet[index];
    const auto rp = restrict_parameter(lambda);

    json j = place_json(lambda);
    j["infinitesimal_character"] = to_json(inf.weight());
    j["packet_index"] = index + 1;
    j["packet_size"] = packet.size();
    j["degree"] = m.degree;
    j["length"] = m.length;
    j["coherent"] = to_json(m.coherent);
    j["blattner"] = to_json(m.blattner);
    j["regw"] = check_regw(inf);
    j["prime"] = json{{"a", to_json(rp.a)}, {"b", to_json(rp.b)}};
    j["u1"] = to_json(rp.u1_weight);
    j["lemma_ok"] = check_lemma_hc(rp, lambda.n());
    j["knownknown"] = knownknown(lambda);
    j["dual"] = to_json(dual_parameter(lambda));
    places.push_back(std::move(j));

    text << sig_label(sig) << " " << lambda.str() << "\n"
         << "  member " << index + 1 << " of " << packet.size() << " at " << to_string(inf.weight()) << "\n"
         << "  degree " << m.degree << "  length " << m.length << "\n"
         << "  coherent " << to_string(m.coherent) << "  blattner " << to_string(m.blattner) << "\n"
         << "  restriction (" << format_entries(rp.a) << ";" << format_entries(rp.b) << ")  u1 "
         << to_string(rp.u1_weight) << "  lemma " << (check_lemma_hc(rp, lambda.n()) ? "ok" : "fails") << "\n"
         << "  knownknown " << (knownknown(lambda) ? "yes" : "no") << "  dual " << dual_parameter(lambda).str()
         << "\n";
  }
  if (o.format == "json") {
    dump(out, json{{"places", std::move(places)},
                   {"class", to_string(verdict.kind)},
                   {"regw", verdict.regw},
                   {"dual_knownknown", dual_kk}});
  } else {
    out << text.str() << "class " << to_string(verdict.kind) << "  dual_knownknown " << (dual_kk ? "yes" : "no")
        << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete series parameters of U(r,s)", "dsparam"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict", o.strict, "Fail instead of warning on hypothesis violations");
  };
  auto add_places = [&](CLI::App* sub) {
    sub->add_option("--sig", o.sigs, "Signature r,s")->allow_extra_args(false);
    sub->add_option("--hcp", o.hcp, "Harish-Chandra parameter a-block/b-block");
    sub->add_option("--place", o.places, "Place r,s:a-block/b-block (repeatable)")->allow_extra_args(false);
  };

  auto* packet = app.add_subcommand("packet", "Enumerate an L-packet");
  packet->add_option("--sig", o.sigs, "Signature r,s")->required()->allow_extra_args(false);
  packet->add_option("--hw", o.hw, "Highest weight a_sigma")->required();
  add_format(packet);

  auto* sr = app.add_subcommand("sr", "Lowest K-type test for a K-type");
  sr->add_option("--sig", o.sigs, "Signature r,s")->required()->allow_extra_args(false);
  sr->add_option("--ktype", o.ktype, "K-type highest weight a-block/b-block")->required();
  sr->add_option("--margin", o.margin, "Required regularity margin of mu'")->capture_default_str();
  add_format(sr);
  add_strict(sr);

  auto* br = app.add_subcommand("branch", "Branch a U(m) highest weight to U(m-1)");
  br->add_option("--ktype", o.ktype, "Dominant weight")->required();
  add_format(br);

  auto* restrict = app.add_subcommand("restrict", "Restriction parameters to U(r-1,s) x U(1)");
  add_places(restrict);
  add_format(restrict);
  add_strict(restrict);

  auto* chain = app.add_subcommand("chain", "Iterated descent");
  add_places(chain);
  chain->add_option("--depth", o.depth, "Number of descent steps (default n-1)")->check(CLI::PositiveNumber);
  add_format(chain);
  add_strict(chain);

  auto* fraction = app.add_subcommand("fraction", "Share of the packet satisfying the smallest-entry condition");
  fraction->add_option("--sig", o.sigs, "Signature r,s (repeat for several places)")->allow_extra_args(false);
  fraction->add_option("--hw", o.hw, "Highest weight a_sigma shared by the --sig places");
  fraction->add_option("--place", o.places, "Place r,s:a-block/b-block (repeatable)")->allow_extra_args(false);
  add_format(fraction);

  auto* analyze = app.add_subcommand("analyze", "Full report for a parameter");
  add_places(analyze);
  add_format(analyze);
  add_strict(analyze);

  std::vector<const char*> argv{"dsparam"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  std::ostringstream report;
  try {
    if (*packet) detail::cmd_packet(o, report);
    if (*sr) detail::cmd_sr(o, report, err);
    if (*br) detail::cmd_branch(o, report);
    if (*restrict) detail::cmd_restrict(o, report, err);
    if (*chain) detail::cmd_chain(o, report, err);
    if (*fraction) detail::cmd_fraction(o, report);
    if (*analyze) detail::cmd_analyze(o, report, err);
  } catch (const detail::HypothesisViolation& e) {
    err << "error: hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  out << report.str();
  return kOk;
}

}  // namespace dsp::cli
