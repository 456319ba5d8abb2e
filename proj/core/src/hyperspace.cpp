#include "hyperball/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperball {

CompactSet CompactSet::finite(PointSet pts) {
  return CompactSet("", NetFn(), std::move(pts));
}

CompactSet CompactSet::net_oracle(std::string name, NetFn net, PointSet sample) {
  if (!net) throw std::invalid_argument("CompactSet: null net oracle");
  return CompactSet(std::move(name), std::move(net), std::move(sample));
}

const PointSet& CompactSet::points() const {
  if (!is_finite()) {
    throw std::invalid_argument("CompactSet: points() requires an explicitly enumerated set");
  }
  return sample_;
}

PointSet CompactSet::net(const SpaceDef& space, const Rational& eps) const {
  if (!eps.is_positive()) throw std::invalid_argument("CompactSet::net: nonpositive eps");
  if (is_finite()) return sample_;
  PointSet pts = net_(eps);
  for (const Point& p : pts.points()) space.require_point(p);
  // Spot check of the oracle contract on the declared sample: every known
  // member must be within eps of some net point.
  for (const Point& s : sample_.points()) {
    bool covered = false;
    for (const Point& x : pts.points()) {
      if (space.dist(x, s) < eps) { covered = true; break; }
    }
    if (!covered) {
      throw std::runtime_error("net oracle '" + name_ + "' violated its contract: sample point " +
                               space.point_to_text(s) + " not covered at eps = " + eps.str());
    }
  }
  return pts;
}

std::vector<std::string> builtin_oracle_names() {
  return {"zero_union_reciprocals", "word_tail_closure"};
}

CompactSet builtin_oracle(const SpaceDef& space, std::string_view name,
                          std::optional<PointSet> sample_override) {
  if (name == "zero_union_reciprocals") {
    if (space.kind() != SpaceKind::SorgenfreyUnit) {
      throw std::invalid_argument("oracle zero_union_reciprocals requires the SorgenfreyUnit space");
    }
    // K = {0} u {1/k : k >= 1}.  Every member below eps is within eps of 0;
    // the finitely many others are net points themselves.
    CompactSet::NetFn net = [](const Rational& eps) {
      if (!eps.is_positive()) throw std::invalid_argument("net: nonpositive eps");
      const Rational inv = Rational(1) / eps;
      // kmax = floor(1/eps) + 1, as a machine integer; nets of this size are
      // only reachable through unreasonably small eps.
      mpz_class fl = inv.raw().get_num() / inv.raw().get_den();
      if (!fl.fits_ulong_p()) throw std::invalid_argument("net: eps too small");
      const unsigned long kmax = fl.get_ui() + 1;
      std::vector<Point> pts{Point::rational(Rational(0))};
      for (unsigned long k = 1; k <= kmax; ++k) pts.push_back(Point::rational(Rational(1, static_cast<long>(k))));
      return PointSet(std::move(pts));
    };
    PointSet sample = sample_override
        ? *std::move(sample_override)
        : PointSet(std::vector<Point>{
              Point::rational(Rational(0)), Point::rational(Rational(1)),
              Point::rational(Rational(1, 2)), Point::rational(Rational(1, 3))});
    return CompactSet::net_oracle("zero_union_reciprocals", std::move(net), std::move(sample));
  }
  if (name == "word_tail_closure") {
    if (space.kind() != SpaceKind::Words) {
      throw std::invalid_argument("oracle word_tail_closure requires a words space");
    }
    // K = {a^k : 0 <= k <= max_len} u {a^omega} for the first letter a.
    const char a = space.alphabet().front();
    const std::size_t max_len = space.max_len();
    CompactSet::NetFn net = [a, max_len](const Rational& eps) {
      if (!eps.is_positive()) throw std::invalid_argument("net: nonpositive eps");
      // Smallest k with 2^-k < eps, capped at max_len; stems past the cap
      // are covered by a^cap, and the infinite word covers itself.
      std::size_t cap = max_len;
      Rational p(1);
      for (std::size_t k = 0; k <= max_len; ++k) {
        if (p < eps) { cap = k; break; }
        p = p / Rational(2);
      }
      std::vector<Point> pts;
      for (std::size_t k = 0; k <= cap; ++k) pts.push_back(Point::word(std::string(k, a)));
      pts.push_back(Point::word("", true));
      return PointSet(std::move(pts));
    };
    std::vector<Point> sample_pts{Point::word(""), Point::word(std::string(1, a)),
                                  Point::word(std::string(max_len, a)), Point::word("", true)};
    PointSet sample = sample_override ? *std::move(sample_override)
                                      : PointSet(std::move(sample_pts));
    return CompactSet::net_oracle("word_tail_closure", std::move(net), std::move(sample));
  }
  throw std::invalid_argument("unknown built-in oracle '" + std::string(name) + "'");
}

ChainPrefix standard_representation(const SpaceDef& space, const CompactSet& K,
                                    std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("standard_representation: depth must be positive");
  std::vector<BallSet> sets;
  sets.reserve(depth);
  std::vector<Point> accumulated;
  for (std::size_t n = 1; n <= depth; ++n) {
    // Net at resolution 1/(2 n^2); the accumulation keeps earlier net
    // points so each level's set refines the one before it.
    const Rational eps = Rational(1, 2 * static_cast<long>(n) * static_cast<long>(n));
    PointSet net = K.net(space, eps);
    accumulated.insert(accumulated.end(), net.points().begin(), net.points().end());
    PointSet level(accumulated);
    accumulated = level.points();  // keep deduplicated
    std::vector<FormalBall> balls;
    balls.reserve(level.size());
    const Rational radius(1, static_cast<long>(n));
    for (const Point& p : level.points()) balls.emplace_back(p, radius);
    sets.emplace_back(std::move(balls));
  }
  ChainPrefix chain(std::move(sets));
  const ChainValidation v = validate_chain(space, chain);
  if (!v.ok) {
    throw std::runtime_error("standard_representation: net oracle produced a non-ascending chain at level " +
                             std::to_string(v.failed_index));
  }
  return chain;
}

ChainPrefix phi(const SpaceDef& space, const CompactSet& K, std::size_t depth) {
  return standard_representation(space, K, depth);
}

Rational hd_compact(const SpaceDef& space, const CompactSet& K, const CompactSet& L) {
  return hausdorff(space, K.points(), L.points());
}

IsometryReport verify_isometry(const SpaceDef& space, const CompactSet& K,
                               const CompactSet& L, std::size_t depth) {
  IsometryReport report;
  report.depth = depth;
  const ChainPrefix C1 = standard_representation(space, K, depth);
  const ChainPrefix C2 = standard_representation(space, L, depth);
  report.truncated = d_truncated(space, C1, C2, /*radius_vanishing=*/true);

  report.exact = K.is_finite() && L.is_finite();
  if (report.exact) {
    report.hausdorff_value = hd_compact(space, K, L);
    report.slack = Rational(0);
  } else {
    // Compare against the deepest accumulated nets; each oracle side can
    // misplace the true set by up to its net resolution at this depth.
    auto level_points = [](const ChainPrefix& c) {
      std::vector<Point> pts;
      for (const FormalBall& b : c.sets().back().balls()) pts.push_back(b.point);
      return PointSet(std::move(pts));
    };
    report.hausdorff_value = hausdorff(space, level_points(C1), level_points(C2));
    const Rational res = Rational(1, 2 * static_cast<long>(depth) * static_cast<long>(depth));
    report.slack = Rational(0);
    if (!K.is_finite()) report.slack += res;
    if (!L.is_finite()) report.slack += res;
  }
  const Rational diff = (report.hausdorff_value - report.truncated.value).abs();
  report.margin = report.truncated.error_radius + report.slack - diff;
  report.pass = !report.margin.is_negative();
  return report;
}

OrderReport verify_order_correspondence(const SpaceDef& space, const CompactSet& K,
                                        const CompactSet& L, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("verify_order_correspondence: depth must be positive");
  // Both sets must enumerate their points; reject oracle input before the
  // representations are built.
  const PointSet& kp = K.points();
  const PointSet& lp = L.points();

  OrderReport report;
  const ChainPrefix CK = standard_representation(space, K, depth);
  // One extra level on the right supplies strictly smaller radii, so a set
  // equal to K can still witness every level of CK.
  const ChainPrefix CL = standard_representation(space, L, depth + 1);
  report.chain_order = chain_leq_at_depth(space, CK, CL);

  report.hausdorff_zero = hd_compact(space, K, L).is_zero();

  // Finite sets are closed in a separating space, so closure(L) = L and the
  // sandwich L subset K subset closure(L) is mutual containment.
  bool l_in_k = true, k_in_l = true;
  for (const Point& p : lp.points()) l_in_k = l_in_k && kp.contains(p);
  for (const Point& p : kp.points()) k_in_l = k_in_l && lp.contains(p);
  report.subset_rel = l_in_k && k_in_l;

  const bool a = report.chain_order == TriState::Established;
  const bool b = report.hausdorff_zero;
  const bool c = report.subset_rel;
  report.consistent = (!a || b) && (b == c) && (!b || a);
  return report;
}

RecoveryReport recover_compact(const SpaceDef& space, const CompactSet& K,
                               const PointSet& universe, std::size_t depth) {
  const PointSet& kp = K.points();
  for (const Point& p : kp.points()) {
    if (!universe.contains(p)) {
      throw std::invalid_argument("recover_compact: universe must contain the compact set");
    }
  }
  RecoveryReport report;
  const ChainPrefix chain = standard_representation(space, K, depth);
  report.recovered = iplus_points(space, chain, universe);
  report.pass = report.recovered == kp.points();
  return report;
}

bool vietoris_diamond_member(const SpaceDef& space, const CompactSet& K,
                             const Point& center, const Rational& radius) {
  if (!radius.is_positive()) throw std::invalid_argument("vietoris_diamond_member: nonpositive radius");
  for (const Point& k : K.points().points()) {
    if (ball_contains(space, center, radius, k)) return true;
  }
  return false;
}

bool vietoris_box_member(const SpaceDef& space, const CompactSet& K,
                         std::span<const FormalBall> balls) {
  for (const FormalBall& b : balls) {
    if (!b.radius.is_positive()) throw std::invalid_argument("vietoris_box_member: nonpositive radius");
  }
  for (const Point& k : K.points().points()) {
    bool covered = false;
    for (const FormalBall& b : balls) {
      if (ball_contains(space, b.point, b.radius, k)) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace hyperball
