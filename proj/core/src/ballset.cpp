#include "hyperball/ballset.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperball {

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  if (pts_.empty()) throw std::invalid_argument("PointSet: empty set where nonempty required");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

BallSet::BallSet(std::vector<FormalBall> balls) : balls_(std::move(balls)) {
  if (balls_.empty()) throw std::invalid_argument("BallSet: empty set where nonempty required");
  std::sort(balls_.begin(), balls_.end());
  balls_.erase(std::unique(balls_.begin(), balls_.end()), balls_.end());
}

Rational BallSet::max_radius() const {
  Rational m = balls_.front().radius;
  for (const FormalBall& b : balls_) m = rat_max(m, b.radius);
  return m;
}

Rational BallSet::min_radius() const {
  Rational m = balls_.front().radius;
  for (const FormalBall& b : balls_) m = rat_min(m, b.radius);
  return m;
}

BallSet to_ballset(const PointSet& pts) {
  std::vector<FormalBall> balls;
  balls.reserve(pts.size());
  for (const Point& p : pts.points()) balls.push_back(iota(p));
  return BallSet(std::move(balls));
}

bool em_upper(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  for (const FormalBall& g : G.balls()) {
    bool refined = false;
    for (const FormalBall& f : F.balls()) {
      if (way(space, f, g)) { refined = true; break; }
    }
    if (!refined) return false;
  }
  return true;
}

bool em_lower(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  for (const FormalBall& f : F.balls()) {
    bool refines = false;
    for (const FormalBall& g : G.balls()) {
      if (way(space, f, g)) { refines = true; break; }
    }
    if (!refines) return false;
  }
  return true;
}

bool em(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  return em_upper(space, F, G) && em_lower(space, F, G);
}

bool below_em(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  for (const FormalBall& g : G.balls()) {
    bool ok = false;
    for (const FormalBall& f : F.balls()) {
      if (below(space, f, g)) { ok = true; break; }
    }
    if (!ok) return false;
  }
  for (const FormalBall& f : F.balls()) {
    bool ok = false;
    for (const FormalBall& g : G.balls()) {
      if (below(space, f, g)) { ok = true; break; }
    }
    if (!ok) return false;
  }
  return true;
}

BallSet shift(const BallSet& F, const Rational& epsilon) {
  if (epsilon.is_negative()) throw std::invalid_argument("shift: negative epsilon");
  std::vector<FormalBall> out;
  out.reserve(F.size());
  for (const FormalBall& b : F.balls()) out.emplace_back(b.point, b.radius + epsilon);
  return BallSet(std::move(out));
}

Rational gap(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  if (!em(space, F, G)) throw std::invalid_argument("gap: em(F, G) does not hold");
  Rational best;
  bool first = true;
  for (const FormalBall& f : F.balls()) {
    for (const FormalBall& g : G.balls()) {
      const Rational slack = f.radius - g.radius - space.dist(f.point, g.point);
      if (slack.is_positive()) {
        if (first || slack < best) best = slack;
        first = false;
      }
    }
  }
  // em(F, G) guarantees at least one strictly refining pair.
  return best;
}

Rational hausdorff_minus(const SpaceDef& space, const PointSet& A, const PointSet& B) {
  auto d = [&space](const Point& a, const Point& b) { return space.dist(a, b); };
  return hausdorff_minus_generic<Point>(std::span(A.points()), std::span(B.points()), d);
}

Rational hausdorff_plus(const SpaceDef& space, const PointSet& A, const PointSet& B) {
  auto d = [&space](const Point& a, const Point& b) { return space.dist(a, b); };
  return hausdorff_plus_generic<Point>(std::span(A.points()), std::span(B.points()), d);
}

Rational hausdorff(const SpaceDef& space, const PointSet& A, const PointSet& B) {
  return rat_max(hausdorff_minus(space, A, B), hausdorff_plus(space, A, B));
}

Rational h_q(const SpaceDef& space, const BallSet& F, const BallSet& G) {
  auto q = [&space](const FormalBall& a, const FormalBall& b) { return q_dist(space, a, b); };
  const auto f = std::span(F.balls());
  const auto g = std::span(G.balls());
  return rat_max(hausdorff_minus_generic<FormalBall>(f, g, q),
                 hausdorff_plus_generic<FormalBall>(f, g, q));
}

}  // namespace hyperball
