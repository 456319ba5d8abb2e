#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperball/omega_plotkin.hpp"

namespace hyperball {

// A nonempty compact subset of the space, presented either as an explicit
// finite point set or as a net oracle: a thunk that, for any rational
// eps > 0, returns finitely many points x with every member of the set
// within eps of some x (d(x, k) < eps).  Oracle-backed sets also carry a
// finite sample of members used to spot-check that contract.
class CompactSet {
 public:
  using NetFn = std::function<PointSet(const Rational& eps)>;

  static CompactSet finite(PointSet pts);
  static CompactSet net_oracle(std::string name, NetFn net, PointSet sample);

  bool is_finite() const { return !net_; }
  // Explicit members; throws std::invalid_argument for oracle-backed sets.
  const PointSet& points() const;
  // Known members: all of them when finite, the declared sample otherwise.
  const PointSet& sample() const { return sample_; }
  const std::string& oracle_name() const { return name_; }

  // The eps-net.  For a finite set this is the set itself.  For an oracle
  // the returned points are validated against the space and the sample is
  // spot-checked for coverage; a violation throws std::runtime_error.
  PointSet net(const SpaceDef& space, const Rational& eps) const;

 private:
  CompactSet(std::string name, NetFn net, PointSet sample)
      : name_(std::move(name)), net_(std::move(net)), sample_(std::move(sample)) {}
  std::string name_;
  NetFn net_;  // empty for finite sets
  PointSet sample_;
};

// Net oracles usable by name (files and the CLI can only reference these):
//   "zero_union_reciprocals"  (SorgenfreyUnit)  {0} u {1/k : k >= 1}
//   "word_tail_closure"       (Words)           {a^k : k <= max_len} u {a^w}
//                                               for the first letter a
std::vector<std::string> builtin_oracle_names();
// `sample_override` replaces the oracle's default spot-check sample.
CompactSet builtin_oracle(const SpaceDef& space, std::string_view name,
                          std::optional<PointSet> sample_override = std::nullopt);

// The standard representation of a compact set as a certified chain:
//   F_n = { (x, 1/n) : x in union over i <= n of net(1/(2 i^2)) }.
// Radii vanish with depth while the accumulated nets refine, so the chain
// is ascending; the construction is validated before it is returned.
ChainPrefix standard_representation(const SpaceDef& space, const CompactSet& K,
                                    std::size_t depth);

// The embedding of compact sets into chains: an alias of
// standard_representation, under the embedding's conventional name.
ChainPrefix phi(const SpaceDef& space, const CompactSet& K, std::size_t depth);

// Hausdorff quasi-metric between explicitly enumerated compact sets.
// Throws std::invalid_argument for oracle-backed input.
Rational hd_compact(const SpaceDef& space, const CompactSet& K, const CompactSet& L);

// Evidence that the embedding preserves distances at a given depth: the
// Hausdorff distance between the sets must land inside the certified
// interval of the truncated chain distance between their representations.
struct IsometryReport {
  Rational hausdorff_value;    // exact for finite sets, else net approximation
  CertifiedDistance truncated; // d_truncated over the two representations
  Rational slack;              // extra tolerance from net resolution (0 if exact)
  Rational margin;             // (error_radius + slack) - |H - value|
  bool exact = true;           // both sides explicitly enumerated
  bool pass = false;           // margin >= 0
  std::size_t depth = 0;
};
IsometryReport verify_isometry(const SpaceDef& space, const CompactSet& K,
                               const CompactSet& L, std::size_t depth);

// Evidence that the embedding preserves order.  Three views of K vs L:
//  (a) chain order of the representations (the right-hand one built one
//      level deeper so strict witnesses exist when the sets coincide),
//  (b) hausdorff(K, L) == 0,
//  (c) L subset of K subset of closure(L); finite sets are closed in a
//      separating space, so this is mutual containment.
// `consistent` checks the expected implications at this depth:
//  (a) => (b), (b) <=> (c), and (b) => (a).
struct OrderReport {
  TriState chain_order = TriState::Unknown;
  bool hausdorff_zero = false;
  bool subset_rel = false;
  bool consistent = false;
};
OrderReport verify_order_correspondence(const SpaceDef& space, const CompactSet& K,
                                        const CompactSet& L, std::size_t depth);

// Round trip through the representation: the points of the universe reached
// by every level of phi(K, depth) should be exactly K.  The universe must
// contain K's points; decoys survive only if they sit within 1/depth of K.
struct RecoveryReport {
  std::vector<Point> recovered;
  bool pass = false;
};
RecoveryReport recover_compact(const SpaceDef& space, const CompactSet& K,
                               const PointSet& universe, std::size_t depth);

// Membership of K in the subbasic opens of the hit-and-miss (Vietoris)
// topology generated by open balls.  Explicitly enumerated sets only.
//   diamond: K meets the ball.    box: K is covered by the balls' union.
bool vietoris_diamond_member(const SpaceDef& space, const CompactSet& K,
                             const Point& center, const Rational& radius);
bool vietoris_box_member(const SpaceDef& space, const CompactSet& K,
                         std::span<const FormalBall> balls);

}  // namespace hyperball
