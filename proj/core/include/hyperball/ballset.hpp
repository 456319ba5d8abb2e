#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hyperball/formal_ball.hpp"

namespace hyperball {

// Nonempty finite set of points, stored sorted without duplicates so that
// structural equality is set equality and serialization is deterministic.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> pts);
  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool contains(const Point& p) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  std::vector<Point> pts_;
};

// Nonempty finite set of formal balls, canonicalized the same way.
class BallSet {
 public:
  explicit BallSet(std::vector<FormalBall> balls);
  const std::vector<FormalBall>& balls() const { return balls_; }
  std::size_t size() const { return balls_.size(); }

  Rational max_radius() const;
  Rational min_radius() const;

  friend bool operator==(const BallSet& a, const BallSet& b) { return a.balls_ == b.balls_; }
  friend bool operator!=(const BallSet& a, const BallSet& b) { return !(a == b); }

 private:
  std::vector<FormalBall> balls_;
};

// Lift of a point set to radius-zero balls.
BallSet to_ballset(const PointSet& pts);

// Upper half of the Egli-Milner refinement: every g in G is strictly
// refined by some f in F.
bool em_upper(const SpaceDef& space, const BallSet& F, const BallSet& G);
// Lower half: every f in F strictly refines some g in G.
bool em_lower(const SpaceDef& space, const BallSet& F, const BallSet& G);
// Both halves: F strictly refines G as a set approximation.
bool em(const SpaceDef& space, const BallSet& F, const BallSet& G);

// Non-strict Egli-Milner domination (below in place of way).  Holds
// exactly when h_q(F, G) = 0.
bool below_em(const SpaceDef& space, const BallSet& F, const BallSet& G);

// F + epsilon: every radius enlarged by epsilon (a coarser stage).
// Throws std::invalid_argument on negative epsilon.
BallSet shift(const BallSet& F, const Rational& epsilon);

// Uniform slack of a strict refinement:
//   gap(F, G) = min{ (r - s) - d(x, y) : (x,r) in F, (y,s) in G,
//                    (x,r) way (y,s) }.
// Positive whenever em(F, G) holds; and em(F, shift(G, eps)) keeps holding
// for every eps < gap(F, G).  Throws if em(F, G) is false.
Rational gap(const SpaceDef& space, const BallSet& F, const BallSet& G);

// Directed and symmetrized Hausdorff lifts of an arbitrary element
// distance to finite sets (exact min/max over the elements):
//   minus: sup over a in A of inf over b in B of dist(a, b)
//   plus:  sup over b in B of inf over a in A of dist(a, b)
//   full:  max of the two.
template <class Elem>
using ElemDist = std::function<Rational(const Elem&, const Elem&)>;

template <class Elem, class Dist>
Rational hausdorff_minus_generic(std::span<const Elem> A, std::span<const Elem> B, Dist dist) {
  Rational sup(0);
  bool first_a = true;
  for (const Elem& a : A) {
    Rational inf;
    bool first_b = true;
    for (const Elem& b : B) {
      Rational d = dist(a, b);
      if (first_b || d < inf) inf = std::move(d);
      first_b = false;
    }
    if (first_a || sup < inf) sup = std::move(inf);
    first_a = false;
  }
  return sup;
}

template <class Elem, class Dist>
Rational hausdorff_plus_generic(std::span<const Elem> A, std::span<const Elem> B, Dist dist) {
  Rational sup(0);
  bool first_b = true;
  for (const Elem& b : B) {
    Rational inf;
    bool first_a = true;
    for (const Elem& a : A) {
      Rational d = dist(a, b);
      if (first_a || d < inf) inf = std::move(d);
      first_a = false;
    }
    if (first_b || sup < inf) sup = std::move(inf);
    first_b = false;
  }
  return sup;
}

// Hausdorff quasi-metric on point sets, over the space's quasi-metric.
Rational hausdorff_minus(const SpaceDef& space, const PointSet& A, const PointSet& B);
Rational hausdorff_plus(const SpaceDef& space, const PointSet& A, const PointSet& B);
Rational hausdorff(const SpaceDef& space, const PointSet& A, const PointSet& B);

// Hausdorff quasi-metric on ball sets, over q_dist.
Rational h_q(const SpaceDef& space, const BallSet& F, const BallSet& G);

}  // namespace hyperball
