// Microbenchmarks for the operations that dominate property suites and
// acceptance runs: point distances, the ball quasi-metric, Hausdorff lifts,
// truncated chain distances (uniform fast route and generic route), and
// standard-representation construction.

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "hyperball/hyperspace.hpp"

namespace {

using hyperball::BallSet;
using hyperball::ChainPrefix;
using hyperball::CompactSet;
using hyperball::FormalBall;
using hyperball::Point;
using hyperball::PointSet;
using hyperball::Rational;
using hyperball::SpaceDef;

PointSet eight_points(long stride) {
  std::vector<Point> pts;
  for (long k = 1; k <= 8; ++k) pts.push_back(Point::rational(Rational(k, 8 * stride + 1)));
  return PointSet(std::move(pts));
}

BallSet eight_balls(long stride) {
  std::vector<FormalBall> balls;
  for (long k = 1; k <= 8; ++k)
    balls.emplace_back(Point::rational(Rational(k, 8 * stride + 1)), Rational(1, k + stride));
  return BallSet(std::move(balls));
}

CompactSet three_point_compact() {
  return CompactSet::finite(PointSet({Point::rational(Rational(0)),
                                      Point::rational(Rational(1, 2)),
                                      Point::rational(Rational(1))}));
}

// Ascending chain whose levels carry two different radii each, which keeps
// the truncated distance on its generic route (the fast route requires
// uniform radii per level).
ChainPrefix ragged_chain(const SpaceDef& space, std::size_t depth) {
  std::vector<BallSet> sets;
  sets.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    sets.push_back(BallSet({FormalBall(Point::rational(Rational(0)), Rational(1, n)),
                            FormalBall(Point::rational(Rational(1, 2)), Rational(1, n + 1))}));
  }
  ChainPrefix chain(std::move(sets));
  hyperball::validate_chain(space, chain);
  return chain;
}

void BM_DistSorgenfrey(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const Point x = s.point_from_text("1/3");
  const Point y = s.point_from_text("5/7");
  for (auto _ : state) benchmark::DoNotOptimize(s.dist(x, y));
}
BENCHMARK(BM_DistSorgenfrey);

void BM_DistWords(benchmark::State& state) {
  const SpaceDef w = SpaceDef::words("ab", 16);
  const Point x = w.point_from_text("abbabbab");
  const Point y = w.point_from_text("abbabbabababab");
  for (auto _ : state) benchmark::DoNotOptimize(w.dist(x, y));
}
BENCHMARK(BM_DistWords);

void BM_QDist(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const FormalBall a(Point::rational(Rational(1, 3)), Rational(1, 4));
  const FormalBall b(Point::rational(Rational(2, 3)), Rational(1, 8));
  for (auto _ : state) benchmark::DoNotOptimize(hyperball::q_dist(s, a, b));
}
BENCHMARK(BM_QDist);

void BM_HausdorffPoints(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const PointSet a = eight_points(2);
  const PointSet b = eight_points(3);
  for (auto _ : state) benchmark::DoNotOptimize(hyperball::hausdorff(s, a, b));
}
BENCHMARK(BM_HausdorffPoints);

void BM_HQBallSets(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const BallSet f = eight_balls(2);
  const BallSet g = eight_balls(3);
  for (auto _ : state) benchmark::DoNotOptimize(hyperball::h_q(s, f, g));
}
BENCHMARK(BM_HQBallSets);

void BM_DTruncatedUniform(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  const ChainPrefix c1 = hyperball::phi(s, three_point_compact(), depth);
  const ChainPrefix c2 = hyperball::phi(
      s, CompactSet::finite(PointSet({Point::rational(Rational(1, 3))})), depth);
  for (auto _ : state) benchmark::DoNotOptimize(hyperball::d_truncated(s, c1, c2, true));
}
BENCHMARK(BM_DTruncatedUniform)->Arg(10)->Arg(50)->Arg(200);

void BM_DTruncatedGeneric(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  const ChainPrefix c1 = ragged_chain(s, depth);
  const ChainPrefix c2 = ragged_chain(s, depth);
  for (auto _ : state) benchmark::DoNotOptimize(hyperball::d_truncated(s, c1, c2, false));
}
BENCHMARK(BM_DTruncatedGeneric)->Arg(10)->Arg(50);

void BM_StandardRepresentation(benchmark::State& state) {
  const SpaceDef s = SpaceDef::sorgenfrey_unit();
  const CompactSet K = three_point_compact();
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hyperball::standard_representation(s, K, depth));
}
BENCHMARK(BM_StandardRepresentation)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
