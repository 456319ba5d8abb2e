#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperball/ballset.hpp"

namespace hyperball {

// Verdict of a check that can only accumulate positive evidence at finite
// depth: Established means witnesses were found for everything the prefix
// obliges; Unknown means some obligation had no witness within the prefix.
// Refuted is reserved for checks that can exhibit a genuine counterexample;
// the chain comparisons below never produce it.
enum class TriState { Established, Refuted, Unknown };

// An exact value together with the radius of the interval certified to
// contain the quantity being approximated.  `valid` records whether the
// certificate's hypotheses were supplied (see d_truncated).
struct CertifiedDistance {
  Rational value;
  Rational error_radius;
  bool valid = false;
};

struct ChainValidation;

// A finite prefix F_1, ..., F_N of an ascending chain of ball sets.
// `certified` records that consecutive sets were checked to be in strict
// Egli-Milner refinement (validate_chain does this); operations that rely
// on the chain structure require it.
class ChainPrefix {
 public:
  explicit ChainPrefix(std::vector<BallSet> sets, bool certified = false);

  const std::vector<BallSet>& sets() const { return sets_; }
  std::size_t depth() const { return sets_.size(); }
  bool certified() const { return certified_; }

 private:
  friend ChainValidation validate_chain(const SpaceDef& space, ChainPrefix& chain);
  std::vector<BallSet> sets_;
  bool certified_ = false;
};

struct ChainValidation {
  bool ok = false;
  // 1-based index i of the first adjacent pair (F_i, F_i+1) that is not in
  // strict Egli-Milner refinement; 0 when ok.
  std::size_t failed_index = 0;
};

// Checks em(F_i, F_i+1) for every adjacent pair and stamps the chain's
// certified flag with the outcome.
ChainValidation validate_chain(const SpaceDef& space, ChainPrefix& chain);

// Chain order at depth: Established iff every F_n in C1 has some G_m in C2
// with em(F_n, G_m).  Absence of a witness within a finite prefix is not a
// refutation, so the negative verdict is Unknown.
// Requires both chains certified.
TriState chain_leq_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                            const ChainPrefix& C2);

// Chain equivalence at depth: mutual domination of the comparable region.
// Direction A -> B holds when every set S of A either is dominated at
// distance zero by some T of B (below_em(S, T), equivalently h_q(S,T) = 0)
// or lies beyond B's certified resolution (max_radius(S) < rbar(B)), in
// which case no prefix of B's depth could witness it yet.  Established iff
// both directions hold.  Requires both chains certified.
TriState chain_equiv_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                              const ChainPrefix& C2);

// Way-below at depth: Established iff one single G_m in C2 satisfies
// em(F_n, G_m) for every F_n in C1's prefix.  Requires both certified.
TriState way_below_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                            const ChainPrefix& C2);

// Resolution reached by the prefix: min over its sets of the set's max
// radius (for a certified chain this is the last set's max radius).
Rational rbar(const ChainPrefix& chain);

// The points of the universe that every level of the chain reaches:
//   { u in universe : for every n there is a ball b in F_n with
//     below(b, iota(u)) }.
// May be empty.  Requires a certified chain.
std::vector<Point> iplus_points(const SpaceDef& space, const ChainPrefix& chain,
                                const PointSet& universe);

// One ball from each level forming an ascending path under `below` that
// ends below `target`:  below(a_n, a_n+1) and below(a_N, target).
// Exhaustive over the layered graph; returns nullopt when no path exists.
// Requires a certified chain.
std::optional<std::vector<FormalBall>> ascending_selection(const SpaceDef& space,
                                                           const ChainPrefix& chain,
                                                           const FormalBall& target);

// Truncated chain distance:
//   value = max over n <= depth(C1) of (min over m <= depth(C2) of
//           h_q(F_n, G_m)),
//   error_radius = rbar(C1) + 2 * rbar(C2).
// The certificate (true value within error_radius of `value`) is sound
// only for chains whose radii vanish in the limit; the caller flags that
// hypothesis via radius_vanishing, and `valid` records it.  Standard
// representations of compact sets always qualify.
// Requires both chains certified.
CertifiedDistance d_truncated(const SpaceDef& space, const ChainPrefix& C1,
                              const ChainPrefix& C2, bool radius_vanishing = false);

// Truncated completion distance between two arbitrary sequences of ball
// sets (no chain structure assumed):
//   min over n of (max over k in [n, N1] of (max over m of (min over p in
//   [m, N2] of h_q(s1[k], s2[p])))).
// Evaluated exactly.  Throws on empty sequences.
Rational yhat_truncated(const SpaceDef& space, std::span<const BallSet> s1,
                        std::span<const BallSet> s2);

// Whether the prefix exhibits a start index N from which the sets stay
// within epsilon of each other in h_q, in both orders:
//   exists N with h_q(F_m, F_k) < epsilon for all m, k in [N, depth].
// For depth >= 2 the index N must leave a tail of at least two sets
// (N <= depth - 1), so the certificate always covers at least one pair in
// both orders; a single-set prefix is trivially within any positive
// epsilon of itself.  Requires a certified chain.
bool bicauchy_at_depth(const SpaceDef& space, const ChainPrefix& chain,
                       const Rational& epsilon);

}  // namespace hyperball
