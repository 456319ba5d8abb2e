#pragma once

#include <span>
#include <string>

#include "hyperball/space.hpp"

namespace hyperball {

// A formal ball (x, r): a point together with a nonnegative rational
// radius.  Formal balls carry the approximation order of the space: a
// smaller radius means a sharper stage of approximation.
struct FormalBall {
  Point point;
  Rational radius;

  FormalBall(Point p, Rational r);

  friend bool operator==(const FormalBall& a, const FormalBall& b) {
    return a.point == b.point && a.radius == b.radius;
  }
  friend bool operator!=(const FormalBall& a, const FormalBall& b) { return !(a == b); }
  // Total order for canonical set storage and deterministic reports.
  friend bool operator<(const FormalBall& a, const FormalBall& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.radius < b.radius;
  }
};

// Approximation (partial) order:  (x,r) below (y,s)  iff  d(x,y) <= r - s.
// Reflexive, transitive, and antisymmetric whenever the space separates
// points.
bool below(const SpaceDef& space, const FormalBall& a, const FormalBall& b);

// Strict refinement: d(x,y) < r - s.  The way-below relation of the ball
// order; irreflexive, and interpolative (see interpolant).
bool way(const SpaceDef& space, const FormalBall& a, const FormalBall& b);

// Embedding of points as radius-zero balls: maximal elements of the order.
FormalBall iota(const Point& x);

// Quasi-metric on formal balls:
//   q((x,r), (y,s)) = max{ d(x,y), |r - s| } + (s - r).
// Always nonnegative, and zero exactly when (x,r) is below (y,s), so the
// order is recovered from the metric structure.
Rational q_dist(const SpaceDef& space, const FormalBall& a, const FormalBall& b);

// Given finitely many balls each strictly refined by `upper`, produces a
// ball strictly between all of them and `upper`:
//   c = (upper.point, upper.radius + delta/2),
//   delta = min over m of (m.radius - upper.radius - d(m.point, upper.point)).
// Then way(m, c) for every m in lower, and way(c, upper).
// Throws std::invalid_argument on an empty lower set, or if way(m, upper)
// fails for some member.
FormalBall interpolant(const SpaceDef& space, std::span<const FormalBall> lower,
                       const FormalBall& upper);

// Membership of b in the basic open set determined by `base` in the
// topology generated by strict refinement: way(base, b).
bool pseudoscott_basic_member(const SpaceDef& space, const FormalBall& base,
                              const FormalBall& b);

// Text form "point@radius", e.g. "1/2@1/4".
std::string ball_to_text(const SpaceDef& space, const FormalBall& b);
FormalBall ball_from_text(const SpaceDef& space, std::string_view text);

}  // namespace hyperball
