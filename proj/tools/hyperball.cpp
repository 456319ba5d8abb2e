// Command-line front end for the hyperball library.
//
// Grammar:
//   hyperball [--json] space     <space>
//   hyperball [--json] dist      <space> <x> <y>          [--variant d|dinv|dstar|q]
//   hyperball [--json] hausdorff <space> <setA> <setB>    [--variant full|plus|minus]
//   hyperball [--json] chain     <space> <chain1> <chain2> --op leq|equiv|waybelow|D
//   hyperball [--json] embed     <space> <K> <L>           --check isometry|order|recover
//                                                          [--depth N]
//
// <space> is a JSON space file or a builtin alias ("sorgenfrey" /
// "sorgenfrey_unit"); the remaining file arguments use the json_io formats.
// --json replaces the human-readable output with a canonical JSON report
// (sorted keys, two-space indent, byte-deterministic for equal inputs); the
// JSON form is the machine contract, the text form a courtesy.
//
// Every JSON report carries: "command" (subcommand echo), "digest" (FNV-1a
// over the argument tokens and the raw bytes of every file read), "outcome"
// ("pass" | "fail" | "value"), "details", "exit_code", and — for value
// queries — "value" (a canonical rational string) or "result" (a structured
// value, used by chain --op D).
//
// Exit codes: 0 = check passed or value computed, 1 = check failed,
// 2 = input error (unreadable file, malformed JSON, invalid point text,
// uncertified chain, oracle-backed set where enumeration is required, or a
// depth beyond HYPERBALL_MAX_DEPTH, default 1000).

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "hyperball/json_io.hpp"

namespace {

using hyperball::CertifiedDistance;
using hyperball::CompactSet;
using hyperball::FormalBall;
using hyperball::Point;
using hyperball::PointSet;
using hyperball::Rational;
using hyperball::SpaceDef;
using hyperball::TriState;
namespace jio = hyperball::json_io;
using jio::json;

// A failure that aborts the command with a message and an exit code.
struct CliError {
  int exit_code;
  std::string message;
};

// FNV-1a (64-bit) over the invocation's inputs: every argument token except
// the output-mode switch, then the raw bytes of every file read, each chunk
// terminated by a zero byte.
class InputDigest {
 public:
  void feed(std::string_view bytes) {
    for (unsigned char c : bytes) step(c);
    step(0);
  }
  std::string str() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  void step(unsigned char c) {
    hash_ ^= c;
    hash_ *= 1099511628211ULL;
  }
  std::uint64_t hash_ = 14695981039346656037ULL;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError{2, origin + ": " + e.what()};
  }
}

json load_file_json(const std::string& path, InputDigest& digest) {
  const std::string bytes = slurp(path);
  digest.feed(bytes);
  return parse_json(bytes, "file '" + path + "'");
}

// The space argument accepts either a JSON space file or a builtin alias, so
// parameter-free spaces need no file on disk.
SpaceDef load_space(const std::string& arg, InputDigest& digest) {
  if (arg == "sorgenfrey" || arg == "sorgenfrey_unit")
    return SpaceDef::sorgenfrey_unit();
  const std::string bytes = slurp(arg);
  digest.feed(bytes);
  return jio::space_from_json(parse_json(bytes, "space file '" + arg + "'"));
}

std::size_t depth_cap() {
  const char* env = std::getenv("HYPERBALL_MAX_DEPTH");
  if (env == nullptr || *env == '\0') return 1000;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0' || v == 0)
    throw CliError{2, std::string("invalid HYPERBALL_MAX_DEPTH '") + env + "'"};
  return static_cast<std::size_t>(v);
}

void check_depth(std::size_t depth, std::size_t cap, const std::string& what) {
  if (depth > cap)
    throw CliError{2, what + " exceeds HYPERBALL_MAX_DEPTH (" +
                          std::to_string(depth) + " > " + std::to_string(cap) + ")"};
}

// Loads, certifies, and depth-checks a chain file.  A prefix whose adjacent
// sets are not in strict Egli-Milner refinement is rejected as input.
jio::ParsedChain load_chain(const SpaceDef& space, const std::string& path,
                            InputDigest& digest, std::size_t cap) {
  jio::ParsedChain parsed = jio::chain_from_json(space, load_file_json(path, digest));
  check_depth(parsed.chain.depth(), cap, "chain '" + path + "'");
  const hyperball::ChainValidation v = hyperball::validate_chain(space, parsed.chain);
  if (!v.ok)
    throw CliError{2, "chain '" + path + "': sets " + std::to_string(v.failed_index) +
                          " and " + std::to_string(v.failed_index + 1) +
                          " are not in strict Egli-Milner refinement"};
  return parsed;
}

struct Report {
  std::string command;
  std::string outcome;  // "pass" | "fail" | "value"
  int exit_code = 0;
  json details = json::object();
  std::optional<json> value;   // canonical rational string (value queries)
  std::optional<json> result;  // structured value (chain --op D)
  std::string text;            // human-readable form, newline-terminated
};

int emit(bool json_mode, const InputDigest& digest, const Report& r) {
  if (json_mode) {
    json out;
    out["command"] = r.command;
    out["details"] = r.details;
    out["digest"] = digest.str();
    out["exit_code"] = r.exit_code;
    out["outcome"] = r.outcome;
    if (r.value) out["value"] = *r.value;
    if (r.result) out["result"] = *r.result;
    std::cout << jio::dump_canonical(out);
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

int emit_error(bool json_mode, const std::string& command, const CliError& e) {
  if (json_mode) {
    json out;
    out["command"] = command;
    out["error"] = e.message;
    out["exit_code"] = e.exit_code;
    std::cout << jio::dump_canonical(out);
  } else {
    std::cerr << "error: " << e.message << "\n";
  }
  return e.exit_code;
}

const char* violation_kind_name(hyperball::AxiomViolation::Kind k) {
  using Kind = hyperball::AxiomViolation::Kind;
  switch (k) {
    case Kind::SelfDistance: return "self_distance";
    case Kind::Separation: return "separation";
    case Kind::Triangle: return "triangle";
    case Kind::Bound: return "bound";
  }
  return "unknown";
}

Report run_space(const SpaceDef& space) {
  const hyperball::AxiomReport report =
      hyperball::verify_axioms(space, space.default_sample());
  Report r;
  r.command = "space";
  r.outcome = report.ok() ? "pass" : "fail";
  r.exit_code = report.ok() ? 0 : 1;
  r.details = jio::axiom_report_to_json(space, report);
  std::ostringstream text;
  if (report.ok()) {
    text << "axioms ok: " << report.sample_size << " sample points, "
         << report.pairs_checked << " ordered pairs, " << report.triples_checked
         << " triples (" << (report.exhaustive_triples ? "exhaustive" : "sampled")
         << ")\n";
  } else {
    text << "axiom violations (" << report.violations.size() << " shown):\n";
    for (const hyperball::AxiomViolation& v : report.violations) {
      text << "  " << violation_kind_name(v.kind)
           << ": x=" << space.point_to_text(v.x) << " y=" << space.point_to_text(v.y);
      if (v.kind == hyperball::AxiomViolation::Kind::Triangle)
        text << " z=" << space.point_to_text(v.z);
      text << "  (" << v.lhs.str() << " vs " << v.rhs.str() << ")\n";
    }
  }
  r.text = text.str();
  return r;
}

Report run_dist(const SpaceDef& space, const std::string& variant,
                const std::string& x_text, const std::string& y_text) {
  Rational value;
  json details;
  details["variant"] = variant;
  if (variant == "q") {
    const FormalBall a = hyperball::ball_from_text(space, x_text);
    const FormalBall b = hyperball::ball_from_text(space, y_text);
    value = hyperball::q_dist(space, a, b);
    details["x"] = hyperball::ball_to_text(space, a);
    details["y"] = hyperball::ball_to_text(space, b);
  } else {
    const Point x = space.point_from_text(x_text);
    const Point y = space.point_from_text(y_text);
    if (variant == "d")
      value = space.dist(x, y);
    else if (variant == "dinv")
      value = hyperball::conjugate_dist(space, x, y);
    else
      value = hyperball::sym_dist(space, x, y);
    details["x"] = space.point_to_text(x);
    details["y"] = space.point_to_text(y);
  }
  Report r;
  r.command = "dist";
  r.outcome = "value";
  r.details = details;
  r.value = value.str();
  r.text = value.str() + "\n";
  return r;
}

Report run_hausdorff(const SpaceDef& space, const std::string& variant,
                     const PointSet& A, const PointSet& B) {
  Rational value;
  if (variant == "minus")
    value = hyperball::hausdorff_minus(space, A, B);
  else if (variant == "plus")
    value = hyperball::hausdorff_plus(space, A, B);
  else
    value = hyperball::hausdorff(space, A, B);
  Report r;
  r.command = "hausdorff";
  r.outcome = "value";
  json details;
  details["size_a"] = A.size();
  details["size_b"] = B.size();
  details["variant"] = variant;
  r.details = details;
  r.value = value.str();
  r.text = value.str() + "\n";
  return r;
}

Report run_chain(const SpaceDef& space, const std::string& op,
                 const jio::ParsedChain& c1, const jio::ParsedChain& c2) {
  Report r;
  r.command = "chain";
  json details;
  details["depths"] = json::array({c1.chain.depth(), c2.chain.depth()});
  details["op"] = op;
  if (op == "D") {
    const bool radius_vanishing = c1.radius_vanishing && c2.radius_vanishing;
    const CertifiedDistance d =
        hyperball::d_truncated(space, c1.chain, c2.chain, radius_vanishing);
    details["radius_vanishing"] = radius_vanishing;
    r.outcome = "value";
    r.details = details;
    r.result = jio::certified_distance_to_json(d, c1.chain.depth(), c2.chain.depth());
    std::ostringstream text;
    text << "value " << d.value.str() << "  error_radius " << d.error_radius.str()
         << "  certificate "
         << (d.valid ? "valid" : "not valid (radius_vanishing undeclared)")
         << "  depths " << c1.chain.depth() << "/" << c2.chain.depth() << "\n";
    r.text = text.str();
    return r;
  }
  TriState verdict;
  if (op == "leq")
    verdict = hyperball::chain_leq_at_depth(space, c1.chain, c2.chain);
  else if (op == "equiv")
    verdict = hyperball::chain_equiv_at_depth(space, c1.chain, c2.chain);
  else
    verdict = hyperball::way_below_at_depth(space, c1.chain, c2.chain);
  const bool established = verdict == TriState::Established;
  details["verdict"] = jio::tristate_name(verdict);
  r.outcome = established ? "pass" : "fail";
  r.exit_code = established ? 0 : 1;
  r.details = details;
  r.text = std::string(jio::tristate_name(verdict)) + "\n";
  return r;
}

Report run_embed(const SpaceDef& space, const std::string& check, std::size_t depth,
                 const CompactSet& K, const CompactSet& L) {
  Report r;
  r.command = "embed";
  json details;
  details["check"] = check;
  details["depth"] = depth;
  std::ostringstream text;
  if (check == "isometry") {
    const hyperball::IsometryReport rep = hyperball::verify_isometry(space, K, L, depth);
    details["report"] = jio::isometry_report_to_json(rep);
    r.outcome = rep.pass ? "pass" : "fail";
    r.exit_code = rep.pass ? 0 : 1;
    text << (rep.pass ? "pass" : "fail") << ": hausdorff " << rep.hausdorff_value.str()
         << ", truncated " << rep.truncated.value.str() << " (error radius "
         << rep.truncated.error_radius.str() << "), margin " << rep.margin.str();
    if (rep.slack != Rational(0)) text << ", net slack " << rep.slack.str();
    text << "\n";
  } else if (check == "order") {
    if (!K.is_finite() || !L.is_finite())
      throw CliError{2, "order: both sets must enumerate their points"};
    const hyperball::OrderReport rep =
        hyperball::verify_order_correspondence(space, K, L, depth);
    details["report"] = jio::order_report_to_json(rep);
    r.outcome = rep.consistent ? "pass" : "fail";
    r.exit_code = rep.consistent ? 0 : 1;
    text << (rep.consistent ? "consistent" : "inconsistent") << ": chain_order "
         << jio::tristate_name(rep.chain_order) << ", hausdorff_zero "
         << (rep.hausdorff_zero ? "true" : "false") << ", subset "
         << (rep.subset_rel ? "true" : "false") << "\n";
  } else {  // recover
    if (!K.is_finite())
      throw CliError{2, "recover: the compact set must enumerate its points"};
    if (!L.is_finite())
      throw CliError{2, "recover: the universe file must enumerate its points"};
    const hyperball::RecoveryReport rep =
        hyperball::recover_compact(space, K, L.points(), depth);
    details["report"] = jio::recovery_report_to_json(space, rep);
    r.outcome = rep.pass ? "pass" : "fail";
    r.exit_code = rep.pass ? 0 : 1;
    text << (rep.pass ? "pass" : "fail") << ": recovered {";
    for (std::size_t i = 0; i < rep.recovered.size(); ++i) {
      if (i > 0) text << ", ";
      text << space.point_to_text(rep.recovered[i]);
    }
    text << "}\n";
  }
  r.details = details;
  r.text = text.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);

  InputDigest digest;
  for (const std::string& a : args)
    if (a != "--json") digest.feed(a);

  bool json_mode = false;
  CLI::App app{"exact quasi-metric hyperspace toolkit"};
  app.require_subcommand(1);

  std::string space_arg, x_arg, y_arg, file_a, file_b;
  std::string dist_variant = "d";
  std::string haus_variant = "full";
  std::string chain_op, embed_check;
  std::size_t embed_depth = 50;

  const auto add_json = [&json_mode](CLI::App* cmd) {
    cmd->add_flag("--json", json_mode, "emit a canonical JSON report");
  };
  add_json(&app);

  CLI::App* sp =
      app.add_subcommand("space", "check the quasi-metric axioms over the declared sample");
  sp->add_option("space", space_arg, "space file or builtin alias")->required();
  add_json(sp);

  CLI::App* di = app.add_subcommand(
      "dist", "distance between two points (formal balls with --variant q)");
  di->add_option("space", space_arg, "space file or builtin alias")->required();
  di->add_option("x", x_arg, "first point (or ball point@radius)")->required();
  di->add_option("y", y_arg, "second point (or ball point@radius)")->required();
  di->add_option("--variant", dist_variant,
                 "d (native), dinv (conjugate), dstar (symmetrized), q (ball order)")
      ->check(CLI::IsMember({"d", "dinv", "dstar", "q"}));
  add_json(di);

  CLI::App* ha =
      app.add_subcommand("hausdorff", "Hausdorff distance between two finite point sets");
  ha->add_option("space", space_arg, "space file or builtin alias")->required();
  ha->add_option("setA", file_a, "point-set file")->required();
  ha->add_option("setB", file_b, "point-set file")->required();
  ha->add_option("--variant", haus_variant, "full (max), plus, or minus lift")
      ->check(CLI::IsMember({"full", "plus", "minus"}));
  add_json(ha);

  CLI::App* ch = app.add_subcommand("chain", "compare two certified chain prefixes");
  ch->add_option("space", space_arg, "space file or builtin alias")->required();
  ch->add_option("chain1", file_a, "chain file")->required();
  ch->add_option("chain2", file_b, "chain file")->required();
  ch->add_option("--op", chain_op,
                 "leq | equiv | waybelow (order verdicts) or D (truncated distance)")
      ->required()
      ->check(CLI::IsMember({"leq", "equiv", "waybelow", "D"}));
  add_json(ch);

  CLI::App* em =
      app.add_subcommand("embed", "verify the standard representation of compact sets");
  em->add_option("space", space_arg, "space file or builtin alias")->required();
  em->add_option("K", file_a, "compact-set file")->required();
  em->add_option("L", file_b, "compact-set file (universe for --check recover)")
      ->required();
  em->add_option("--check", embed_check, "isometry | order | recover")
      ->required()
      ->check(CLI::IsMember({"isometry", "order", "recover"}));
  em->add_option("--depth", embed_depth, "representation depth")->capture_default_str();
  add_json(em);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    const bool want_json = std::find(args.begin(), args.end(), "--json") != args.end();
    return emit_error(want_json, "hyperball", CliError{2, e.what()});
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const std::size_t cap = depth_cap();
    const SpaceDef space = load_space(space_arg, digest);
    Report report;
    if (command == "space") {
      report = run_space(space);
    } else if (command == "dist") {
      report = run_dist(space, dist_variant, x_arg, y_arg);
    } else if (command == "hausdorff") {
      const PointSet A = jio::pointset_from_json(space, load_file_json(file_a, digest));
      const PointSet B = jio::pointset_from_json(space, load_file_json(file_b, digest));
      report = run_hausdorff(space, haus_variant, A, B);
    } else if (command == "chain") {
      const jio::ParsedChain c1 = load_chain(space, file_a, digest, cap);
      const jio::ParsedChain c2 = load_chain(space, file_b, digest, cap);
      report = run_chain(space, chain_op, c1, c2);
    } else {  // embed
      if (embed_depth == 0) throw CliError{2, "embed: --depth must be positive"};
      check_depth(embed_depth, cap, "embed depth");
      const CompactSet K = jio::compact_from_json(space, load_file_json(file_a, digest));
      const CompactSet L = jio::compact_from_json(space, load_file_json(file_b, digest));
      report = run_embed(space, embed_check, embed_depth, K, L);
    }
    return emit(json_mode, digest, report);
  } catch (const CliError& e) {
    return emit_error(json_mode, command, e);
  } catch (const std::invalid_argument& e) {
    return emit_error(json_mode, command, CliError{2, e.what()});
  } catch (const std::runtime_error& e) {
    return emit_error(json_mode, command, CliError{2, e.what()});
  }
}
