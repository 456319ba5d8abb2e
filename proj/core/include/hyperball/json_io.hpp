#pragma once

// JSON encodings for every value that crosses a file or CLI boundary.
//
// Conventions shared by all encoders:
//   - Rationals are canonical strings: "num/den" with gcd(num, den) = 1 and
//     den > 0, or a bare integer string when den = 1 ("0", "1", "-3/4").
//   - Points use the space-specific text form of SpaceDef::point_to_text.
//   - Objects serialize with lexicographically sorted keys (the library's
//     default object order), so equal values produce byte-identical text.
//
// Decoders throw std::invalid_argument on schema violations (wrong type,
// missing field, unknown kind); underlying JSON syntax errors surface as
// nlohmann::json exceptions from parse().

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperball/hyperspace.hpp"

namespace hyperball::json_io {

using json = nlohmann::json;

// ---- rationals -----------------------------------------------------------

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// ---- spaces --------------------------------------------------------------
// {"kind": "sorgenfrey_unit"}
// {"kind": "words", "alphabet": ["a","b"], "max_len": 16}
// {"kind": "finite_matrix", "points": ["p","q"],
//  "matrix": [["0","1/2"],["1","0"]]}
// Any kind may carry an optional "bound" rational (must dominate the
// kind-derived bound).

json space_to_json(const SpaceDef& space);
SpaceDef space_from_json(const json& j);

// ---- points, balls, sets -------------------------------------------------
// Point: text string.  Ball: {"point": <text>, "radius": "num/den"}.
// PointSet / BallSet: arrays of their element encodings.

json point_to_json(const SpaceDef& space, const Point& p);
Point point_from_json(const SpaceDef& space, const json& j);

json ball_to_json(const SpaceDef& space, const FormalBall& b);
FormalBall ball_from_json(const SpaceDef& space, const json& j);

json pointset_to_json(const SpaceDef& space, const PointSet& ps);
PointSet pointset_from_json(const SpaceDef& space, const json& j);

json ballset_to_json(const SpaceDef& space, const BallSet& bs);
BallSet ballset_from_json(const SpaceDef& space, const json& j);

// ---- chains ----------------------------------------------------------------
// {"sets": [BallSet, ...], "certified": bool} plus an optional
// "radius_vanishing": bool (default false) asserting that the radii of the
// full chain the prefix was cut from vanish in the limit — a property of
// the unwritten tail, so it can only be declared, never checked here.
//
// Parsing never trusts the file's "certified" flag: the returned prefix is
// uncertified and must go through validate_chain before certified use.

struct ParsedChain {
  ChainPrefix chain;
  bool radius_vanishing = false;
};

json chain_to_json(const SpaceDef& space, const ChainPrefix& chain,
                   bool radius_vanishing = false);
ParsedChain chain_from_json(const SpaceDef& space, const json& j);

// ---- compact sets ----------------------------------------------------------
// {"finite": [Point, ...]}
// {"oracle": "builtin:<name>", "sample": [Point, ...]}   (sample optional)

json compact_to_json(const SpaceDef& space, const CompactSet& K);
CompactSet compact_from_json(const SpaceDef& space, const json& j);

// ---- reports ---------------------------------------------------------------

const char* tristate_name(TriState t);  // "Established" | "Refuted" | "Unknown"

json axiom_report_to_json(const SpaceDef& space, const AxiomReport& report);

// {"value": "...", "error_radius": "...", "valid": bool, "depths": [N1, N2]}
json certified_distance_to_json(const CertifiedDistance& d, std::size_t depth1,
                                std::size_t depth2);

json isometry_report_to_json(const IsometryReport& report);
json order_report_to_json(const OrderReport& report);
json recovery_report_to_json(const SpaceDef& space, const RecoveryReport& report);

// ---- files -----------------------------------------------------------------

// Parses the file at `path`; throws std::runtime_error naming the path on
// read failure and nlohmann exceptions on malformed JSON.
json load_json_file(const std::string& path);

// Canonical text form used for all emitted reports: sorted keys, two-space
// indentation, trailing newline.
std::string dump_canonical(const json& j);

}  // namespace hyperball::json_io
