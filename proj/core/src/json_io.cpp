#include "hyperball/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperball::json_io {

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON string");
  }
  return j.get<std::string>();
}

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  }
  return j;
}

std::size_t require_size(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0)) {
    throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

bool require_bool(const json& j, const char* what) {
  if (!j.is_boolean()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON boolean");
  }
  return j.get<bool>();
}

const char* violation_kind_name(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::SelfDistance: return "self_distance";
    case AxiomViolation::Kind::Separation: return "separation";
    case AxiomViolation::Kind::Triangle: return "triangle";
    case AxiomViolation::Kind::Bound: return "bound";
  }
  return "unknown";
}

}  // namespace

// ---- rationals -------------------------------------------------------------

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  return Rational::from_string(require_string(j, "rational"));
}

// ---- spaces ----------------------------------------------------------------

json space_to_json(const SpaceDef& space) {
  json j = json::object();
  Rational default_bound(1);
  switch (space.kind()) {
    case SpaceKind::SorgenfreyUnit:
      j["kind"] = "sorgenfrey_unit";
      break;
    case SpaceKind::Words: {
      j["kind"] = "words";
      json letters = json::array();
      for (char c : space.alphabet()) letters.push_back(std::string(1, c));
      j["alphabet"] = std::move(letters);
      j["max_len"] = space.max_len();
      break;
    }
    case SpaceKind::FiniteMatrix: {
      j["kind"] = "finite_matrix";
      j["points"] = space.point_names();
      json rows = json::array();
      default_bound = Rational(0);
      for (const auto& row : space.matrix()) {
        json cells = json::array();
        for (const auto& cell : row) {
          cells.push_back(rational_to_json(cell));
          default_bound = rat_max(default_bound, cell);
        }
        rows.push_back(std::move(cells));
      }
      j["matrix"] = std::move(rows);
      break;
    }
  }
  if (space.bound() != default_bound) j["bound"] = rational_to_json(space.bound());
  return j;
}

namespace {

SpaceDef space_from_json_fields(const json& j) {
  const std::string kind = require_string(require_field(j, "kind", "space"), "space kind");
  if (kind == "sorgenfrey_unit") {
    return SpaceDef::sorgenfrey_unit();
  } else if (kind == "words") {
    const json& letters = require_array(require_field(j, "alphabet", "words space"),
                                        "words alphabet");
    std::string alphabet;
    for (const auto& entry : letters) {
      const std::string letter = require_string(entry, "alphabet letter");
      if (letter.size() != 1) {
        throw std::invalid_argument("alphabet letter '" + letter +
                                    "' must be a single character");
      }
      alphabet += letter;
    }
    const std::size_t max_len =
        require_size(require_field(j, "max_len", "words space"), "words max_len");
    return SpaceDef::words(std::move(alphabet), max_len);
  } else if (kind == "finite_matrix") {
    const json& names_json = require_array(require_field(j, "points", "matrix space"),
                                           "matrix point names");
    std::vector<std::string> names;
    names.reserve(names_json.size());
    for (const auto& entry : names_json) names.push_back(require_string(entry, "point name"));
    const json& rows = require_array(require_field(j, "matrix", "matrix space"),
                                     "distance matrix");
    std::vector<std::vector<Rational>> matrix;
    matrix.reserve(rows.size());
    for (const auto& row : rows) {
      const json& cells = require_array(row, "matrix row");
      std::vector<Rational> out;
      out.reserve(cells.size());
      for (const auto& cell : cells) out.push_back(rational_from_json(cell));
      matrix.push_back(std::move(out));
    }
    return SpaceDef::finite_matrix(std::move(names), std::move(matrix));
  }
  throw std::invalid_argument("unknown space kind '" + kind + "'");
}

}  // namespace

SpaceDef space_from_json(const json& j) {
  SpaceDef space = space_from_json_fields(j);
  if (auto it = j.find("bound"); it != j.end()) {
    space.declare_bound(rational_from_json(*it));
  }
  return space;
}

// ---- points, balls, sets ----------------------------------------------------

json point_to_json(const SpaceDef& space, const Point& p) {
  return space.point_to_text(p);
}

Point point_from_json(const SpaceDef& space, const json& j) {
  return space.point_from_text(require_string(j, "point"));
}

json ball_to_json(const SpaceDef& space, const FormalBall& b) {
  json j = json::object();
  j["point"] = point_to_json(space, b.point);
  j["radius"] = rational_to_json(b.radius);
  return j;
}

FormalBall ball_from_json(const SpaceDef& space, const json& j) {
  Point p = point_from_json(space, require_field(j, "point", "ball"));
  Rational r = rational_from_json(require_field(j, "radius", "ball"));
  return FormalBall(std::move(p), std::move(r));
}

json pointset_to_json(const SpaceDef& space, const PointSet& ps) {
  json j = json::array();
  for (const Point& p : ps.points()) j.push_back(point_to_json(space, p));
  return j;
}

PointSet pointset_from_json(const SpaceDef& space, const json& j) {
  const json& arr = require_array(j, "point set");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& entry : arr) pts.push_back(point_from_json(space, entry));
  return PointSet(std::move(pts));
}

json ballset_to_json(const SpaceDef& space, const BallSet& bs) {
  json j = json::array();
  for (const FormalBall& b : bs.balls()) j.push_back(ball_to_json(space, b));
  return j;
}

BallSet ballset_from_json(const SpaceDef& space, const json& j) {
  const json& arr = require_array(j, "ball set");
  std::vector<FormalBall> balls;
  balls.reserve(arr.size());
  for (const auto& entry : arr) balls.push_back(ball_from_json(space, entry));
  return BallSet(std::move(balls));
}

// ---- chains ------------------------------------------------------------------

json chain_to_json(const SpaceDef& space, const ChainPrefix& chain,
                   bool radius_vanishing) {
  json sets = json::array();
  for (const BallSet& s : chain.sets()) sets.push_back(ballset_to_json(space, s));
  json j = json::object();
  j["sets"] = std::move(sets);
  j["certified"] = chain.certified();
  if (radius_vanishing) j["radius_vanishing"] = true;
  return j;
}

ParsedChain chain_from_json(const SpaceDef& space, const json& j) {
  const json& arr = require_array(require_field(j, "sets", "chain"), "chain sets");
  std::vector<BallSet> sets;
  sets.reserve(arr.size());
  for (const auto& entry : arr) sets.push_back(ballset_from_json(space, entry));
  // The file may carry a "certified" flag, but certification is earned
  // through validate_chain, never read from disk.
  if (auto it = j.find("certified"); it != j.end()) {
    (void)require_bool(*it, "chain certified flag");
  }
  bool radius_vanishing = false;
  if (auto it = j.find("radius_vanishing"); it != j.end()) {
    radius_vanishing = require_bool(*it, "chain radius_vanishing flag");
  }
  return ParsedChain{ChainPrefix(std::move(sets)), radius_vanishing};
}

// ---- compact sets ---------------------------------------------------------------

json compact_to_json(const SpaceDef& space, const CompactSet& K) {
  json j = json::object();
  if (K.is_finite()) {
    j["finite"] = pointset_to_json(space, K.points());
  } else {
    j["oracle"] = "builtin:" + K.oracle_name();
    j["sample"] = pointset_to_json(space, K.sample());
  }
  return j;
}

CompactSet compact_from_json(const SpaceDef& space, const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("compact set: expected a JSON object");
  }
  if (auto it = j.find("finite"); it != j.end()) {
    return CompactSet::finite(pointset_from_json(space, *it));
  }
  if (auto it = j.find("oracle"); it != j.end()) {
    const std::string ref = require_string(*it, "oracle reference");
    constexpr std::string_view prefix = "builtin:";
    if (ref.rfind(prefix, 0) != 0) {
      throw std::invalid_argument("oracle reference '" + ref +
                                  "' must start with 'builtin:'");
    }
    std::optional<PointSet> sample;
    if (auto s = j.find("sample"); s != j.end()) {
      sample = pointset_from_json(space, *s);
    }
    return builtin_oracle(space, std::string_view(ref).substr(prefix.size()),
                          std::move(sample));
  }
  throw std::invalid_argument("compact set: expected a 'finite' or 'oracle' field");
}

// ---- reports ---------------------------------------------------------------------

const char* tristate_name(TriState t) {
  switch (t) {
    case TriState::Established: return "Established";
    case TriState::Refuted: return "Refuted";
    case TriState::Unknown: return "Unknown";
  }
  return "Unknown";
}

json axiom_report_to_json(const SpaceDef& space, const AxiomReport& report) {
  json j = json::object();
  j["sample_size"] = report.sample_size;
  j["pairs_checked"] = report.pairs_checked;
  j["triples_checked"] = report.triples_checked;
  j["exhaustive_triples"] = report.exhaustive_triples;
  j["ok"] = report.ok();
  json violations = json::array();
  for (const AxiomViolation& v : report.violations) {
    json entry = json::object();
    entry["kind"] = violation_kind_name(v.kind);
    entry["x"] = point_to_json(space, v.x);
    entry["y"] = point_to_json(space, v.y);
    if (v.kind == AxiomViolation::Kind::Triangle) {
      entry["z"] = point_to_json(space, v.z);
    }
    entry["lhs"] = rational_to_json(v.lhs);
    entry["rhs"] = rational_to_json(v.rhs);
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

json certified_distance_to_json(const CertifiedDistance& d, std::size_t depth1,
                                std::size_t depth2) {
  json j = json::object();
  j["value"] = rational_to_json(d.value);
  j["error_radius"] = rational_to_json(d.error_radius);
  j["valid"] = d.valid;
  j["depths"] = json::array({depth1, depth2});
  return j;
}

json isometry_report_to_json(const IsometryReport& report) {
  json j = json::object();
  j["depth"] = report.depth;
  j["exact"] = report.exact;
  j["hausdorff"] = rational_to_json(report.hausdorff_value);
  j["margin"] = rational_to_json(report.margin);
  j["pass"] = report.pass;
  j["slack"] = rational_to_json(report.slack);
  json truncated = json::object();
  truncated["value"] = rational_to_json(report.truncated.value);
  truncated["error_radius"] = rational_to_json(report.truncated.error_radius);
  truncated["valid"] = report.truncated.valid;
  j["truncated"] = std::move(truncated);
  return j;
}

json order_report_to_json(const OrderReport& report) {
  json j = json::object();
  j["chain_order"] = tristate_name(report.chain_order);
  j["hausdorff_zero"] = report.hausdorff_zero;
  j["subset_rel"] = report.subset_rel;
  j["consistent"] = report.consistent;
  return j;
}

json recovery_report_to_json(const SpaceDef& space, const RecoveryReport& report) {
  json j = json::object();
  json recovered = json::array();
  for (const Point& p : report.recovered) recovered.push_back(point_to_json(space, p));
  j["recovered"] = std::move(recovered);
  j["pass"] = report.pass;
  return j;
}

// ---- files --------------------------------------------------------------------------

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  return json::parse(in);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hyperball::json_io
