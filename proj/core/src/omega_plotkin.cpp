#include "hyperball/omega_plotkin.hpp"

#include <stdexcept>

namespace hyperball {

namespace {

void require_certified(const ChainPrefix& chain, const char* op) {
  if (!chain.certified()) {
    throw std::invalid_argument(std::string(op) + ": uncertified chain (run validate_chain first)");
  }
}

// When every level of a chain carries one shared point set and one uniform
// radius -- the shape of every standard representation of an explicitly
// enumerated compact set -- q against a level factors through the point
// distance:  q((x,r),(y,s)) = max{d(x,y), |r-s|} + (s-r) with r, s fixed,
// so the Hausdorff lift of q over a level pair is
//   h_q(F_n, G_m) = max{ H_d(P, Q), |r_n - s_m| } + (s_m - r_n),
// with H_d(P, Q) independent of (n, m).  d_truncated exploits this to hoist
// the point-Hausdorff value out of the depth-by-depth loop; a property test
// checks the factored route against the generic one for exact equality.
struct UniformChainView {
  bool applicable = false;
  std::vector<Rational> radii;  // one radius per level
};

UniformChainView uniform_view(const ChainPrefix& chain) {
  UniformChainView view;
  const auto& sets = chain.sets();
  std::vector<Point> first_points;
  for (const FormalBall& b : sets.front().balls()) first_points.push_back(b.point);
  for (const BallSet& s : sets) {
    const auto& balls = s.balls();
    const Rational& r = balls.front().radius;
    if (balls.size() != first_points.size()) return view;
    for (std::size_t i = 0; i < balls.size(); ++i) {
      if (balls[i].radius != r) return view;
      if (!(balls[i].point == first_points[i])) return view;
    }
    view.radii.push_back(r);
  }
  view.applicable = true;
  return view;
}

}  // namespace

ChainPrefix::ChainPrefix(std::vector<BallSet> sets, bool certified)
    : sets_(std::move(sets)), certified_(certified) {
  if (sets_.empty()) throw std::invalid_argument("ChainPrefix: empty chain");
}

ChainValidation validate_chain(const SpaceDef& space, ChainPrefix& chain) {
  ChainValidation result;
  for (std::size_t i = 0; i + 1 < chain.sets_.size(); ++i) {
    if (!em(space, chain.sets_[i], chain.sets_[i + 1])) {
      chain.certified_ = false;
      result.ok = false;
      result.failed_index = i + 1;
      return result;
    }
  }
  chain.certified_ = true;
  result.ok = true;
  return result;
}

TriState chain_leq_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                            const ChainPrefix& C2) {
  require_certified(C1, "chain_leq_at_depth");
  require_certified(C2, "chain_leq_at_depth");
  for (const BallSet& F : C1.sets()) {
    bool witnessed = false;
    for (const BallSet& G : C2.sets()) {
      if (em(space, F, G)) { witnessed = true; break; }
    }
    if (!witnessed) return TriState::Unknown;
  }
  return TriState::Established;
}

namespace {

// One direction of equivalence at depth; see the header for the rule.
bool equiv_direction(const SpaceDef& space, const ChainPrefix& A, const ChainPrefix& B) {
  const Rational resolution = rbar(B);
  for (const BallSet& S : A.sets()) {
    bool witnessed = false;
    for (const BallSet& T : B.sets()) {
      if (below_em(space, S, T)) { witnessed = true; break; }
    }
    if (witnessed) continue;
    if (S.max_radius() < resolution) continue;  // beyond B's certified depth
    return false;
  }
  return true;
}

}  // namespace

TriState chain_equiv_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                              const ChainPrefix& C2) {
  require_certified(C1, "chain_equiv_at_depth");
  require_certified(C2, "chain_equiv_at_depth");
  return equiv_direction(space, C1, C2) && equiv_direction(space, C2, C1)
             ? TriState::Established
             : TriState::Unknown;
}

TriState way_below_at_depth(const SpaceDef& space, const ChainPrefix& C1,
                            const ChainPrefix& C2) {
  require_certified(C1, "way_below_at_depth");
  require_certified(C2, "way_below_at_depth");
  for (const BallSet& G : C2.sets()) {
    bool dominates_all = true;
    for (const BallSet& F : C1.sets()) {
      if (!em(space, F, G)) { dominates_all = false; break; }
    }
    if (dominates_all) return TriState::Established;
  }
  return TriState::Unknown;
}

Rational rbar(const ChainPrefix& chain) {
  Rational m = chain.sets().front().max_radius();
  for (const BallSet& s : chain.sets()) m = rat_min(m, s.max_radius());
  return m;
}

std::vector<Point> iplus_points(const SpaceDef& space, const ChainPrefix& chain,
                                const PointSet& universe) {
  require_certified(chain, "iplus_points");
  std::vector<Point> out;
  for (const Point& u : universe.points()) {
    const FormalBall top = iota(u);
    bool reached_everywhere = true;
    for (const BallSet& level : chain.sets()) {
      bool reached = false;
      for (const FormalBall& b : level.balls()) {
        if (below(space, b, top)) { reached = true; break; }
      }
      if (!reached) { reached_everywhere = false; break; }
    }
    if (reached_everywhere) out.push_back(u);
  }
  return out;
}

std::optional<std::vector<FormalBall>> ascending_selection(const SpaceDef& space,
                                                           const ChainPrefix& chain,
                                                           const FormalBall& target) {
  require_certified(chain, "ascending_selection");
  const auto& levels = chain.sets();
  const std::size_t n = levels.size();

  // feasible[k][i]: ball i of level k starts an ascending path through the
  // remaining levels that ends below the target.
  std::vector<std::vector<bool>> feasible(n);
  feasible[n - 1].resize(levels[n - 1].size());
  for (std::size_t i = 0; i < levels[n - 1].size(); ++i) {
    feasible[n - 1][i] = below(space, levels[n - 1].balls()[i], target);
  }
  for (std::size_t k = n - 1; k-- > 0;) {
    feasible[k].resize(levels[k].size());
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      bool ok = false;
      for (std::size_t j = 0; j < levels[k + 1].size(); ++j) {
        if (feasible[k + 1][j] && below(space, levels[k].balls()[i], levels[k + 1].balls()[j])) {
          ok = true;
          break;
        }
      }
      feasible[k][i] = ok;
    }
  }

  std::vector<FormalBall> path;
  std::size_t current = levels[0].size();
  for (std::size_t i = 0; i < levels[0].size(); ++i) {
    if (feasible[0][i]) { current = i; break; }
  }
  if (current == levels[0].size()) return std::nullopt;
  path.push_back(levels[0].balls()[current]);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < levels[k].size(); ++j) {
      if (feasible[k][j] && below(space, path.back(), levels[k].balls()[j])) {
        path.push_back(levels[k].balls()[j]);
        break;
      }
    }
  }
  return path;
}

CertifiedDistance d_truncated(const SpaceDef& space, const ChainPrefix& C1,
                              const ChainPrefix& C2, bool radius_vanishing) {
  require_certified(C1, "d_truncated");
  require_certified(C2, "d_truncated");

  CertifiedDistance out;
  out.error_radius = rbar(C1) + Rational(2) * rbar(C2);
  out.valid = radius_vanishing;

  UniformChainView v1 = uniform_view(C1);
  UniformChainView v2 = uniform_view(C2);
  if (v1.applicable && v2.applicable) {
    std::vector<Point> P, Q;
    for (const FormalBall& b : C1.sets().front().balls()) P.push_back(b.point);
    for (const FormalBall& b : C2.sets().front().balls()) Q.push_back(b.point);
    auto d = [&space](const Point& a, const Point& b) { return space.dist(a, b); };
    const Rational hd = rat_max(
        hausdorff_minus_generic<Point>(std::span<const Point>(P), std::span<const Point>(Q), d),
        hausdorff_plus_generic<Point>(std::span<const Point>(P), std::span<const Point>(Q), d));

    Rational value(0);
    bool first_n = true;
    for (const Rational& r : v1.radii) {
      Rational row;
      bool first_m = true;
      for (const Rational& s : v2.radii) {
        const Rational diff = s - r;
        Rational cell = rat_max(hd, diff.abs()) + diff;
        if (first_m || cell < row) row = std::move(cell);
        first_m = false;
      }
      if (first_n || value < row) value = std::move(row);
      first_n = false;
    }
    out.value = std::move(value);
    return out;
  }

  Rational value(0);
  bool first_n = true;
  for (const BallSet& F : C1.sets()) {
    Rational row;
    bool first_m = true;
    for (const BallSet& G : C2.sets()) {
      Rational cell = h_q(space, F, G);
      if (first_m || cell < row) row = std::move(cell);
      first_m = false;
    }
    if (first_n || value < row) value = std::move(row);
    first_n = false;
  }
  out.value = std::move(value);
  return out;
}

Rational yhat_truncated(const SpaceDef& space, std::span<const BallSet> s1,
                        std::span<const BallSet> s2) {
  const std::size_t n1 = s1.size();
  const std::size_t n2 = s2.size();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("yhat_truncated: empty sequence");

  std::vector<std::vector<Rational>> grid(n1, std::vector<Rational>(n2));
  for (std::size_t k = 0; k < n1; ++k) {
    for (std::size_t p = 0; p < n2; ++p) grid[k][p] = h_q(space, s1[k], s2[p]);
  }

  // inner(k) = max over m of (min over p >= m of grid[k][p]), by a suffix
  // scan; then the result is min over n of (max over k >= n of inner(k)).
  std::vector<Rational> inner(n1);
  for (std::size_t k = 0; k < n1; ++k) {
    Rational suffix_min = grid[k][n2 - 1];
    Rational best = suffix_min;
    for (std::size_t p = n2 - 1; p-- > 0;) {
      suffix_min = rat_min(suffix_min, grid[k][p]);
      best = rat_max(best, suffix_min);
    }
    inner[k] = best;
  }
  Rational suffix_max = inner[n1 - 1];
  Rational result = suffix_max;
  for (std::size_t k = n1 - 1; k-- > 0;) {
    suffix_max = rat_max(suffix_max, inner[k]);
    result = rat_min(result, suffix_max);
  }
  return result;
}

bool bicauchy_at_depth(const SpaceDef& space, const ChainPrefix& chain,
                       const Rational& epsilon) {
  require_certified(chain, "bicauchy_at_depth");
  const auto& sets = chain.sets();
  const std::size_t n = sets.size();
  if (n == 1) return Rational(0) < epsilon;

  std::vector<std::vector<Rational>> grid(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = h_q(space, sets[i], sets[j]);
  }
  // tail_max[N] = max over i, j >= N of grid[i][j] (0-based N).
  Rational tail_max = grid[n - 1][n - 1];
  std::vector<Rational> tails(n);
  tails[n - 1] = tail_max;
  for (std::size_t N = n - 1; N-- > 0;) {
    for (std::size_t j = N; j < n; ++j) {
      tail_max = rat_max(tail_max, grid[N][j]);
      tail_max = rat_max(tail_max, grid[j][N]);
    }
    tails[N] = tail_max;
  }
  // N ranges over [1, depth-1] 1-based, i.e. [0, n-2] 0-based: the
  // certified tail must contain at least one pair in both orders.
  for (std::size_t N = 0; N + 1 < n; ++N) {
    if (tails[N] < epsilon) return true;
  }
  return false;
}

}  // namespace hyperball
