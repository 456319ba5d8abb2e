#include "hyperball/formal_ball.hpp"

#include <stdexcept>
#include <utility>

namespace hyperball {

FormalBall::FormalBall(Point p, Rational r) : point(std::move(p)), radius(std::move(r)) {
  if (radius.is_negative()) throw std::invalid_argument("FormalBall: negative radius");
}

bool below(const SpaceDef& space, const FormalBall& a, const FormalBall& b) {
  return space.dist(a.point, b.point) <= a.radius - b.radius;
}

bool way(const SpaceDef& space, const FormalBall& a, const FormalBall& b) {
  return space.dist(a.point, b.point) < a.radius - b.radius;
}

FormalBall iota(const Point& x) { return FormalBall(x, Rational(0)); }

Rational q_dist(const SpaceDef& space, const FormalBall& a, const FormalBall& b) {
  const Rational d = space.dist(a.point, b.point);
  const Rational rs = a.radius - b.radius;
  return rat_max(d, rs.abs()) + (b.radius - a.radius);
}

FormalBall interpolant(const SpaceDef& space, std::span<const FormalBall> lower,
                       const FormalBall& upper) {
  if (lower.empty()) throw std::invalid_argument("interpolant: empty lower set");
  // delta = min slack of the strict refinements; positive iff every member
  // strictly refines to upper.
  Rational delta;
  bool first = true;
  for (const FormalBall& m : lower) {
    const Rational slack = m.radius - upper.radius - space.dist(m.point, upper.point);
    if (!slack.is_positive()) {
      throw std::invalid_argument("interpolant: way(lower member, upper) does not hold");
    }
    delta = first ? slack : rat_min(delta, slack);
    first = false;
  }
  return FormalBall(upper.point, upper.radius + delta / Rational(2));
}

bool pseudoscott_basic_member(const SpaceDef& space, const FormalBall& base,
                              const FormalBall& b) {
  return way(space, base, b);
}

std::string ball_to_text(const SpaceDef& space, const FormalBall& b) {
  return space.point_to_text(b.point) + "@" + b.radius.str();
}

FormalBall ball_from_text(const SpaceDef& space, std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("ball text must be 'point@radius': '" + std::string(text) + "'");
  }
  Point p = space.point_from_text(text.substr(0, at));
  Rational r = Rational::from_string(text.substr(at + 1));
  return FormalBall(std::move(p), std::move(r));
}

}  // namespace hyperball
