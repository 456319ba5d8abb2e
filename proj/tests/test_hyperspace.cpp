#include "hyperball/hyperspace.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace hyperball {
namespace {

Point rat(long n, long d = 1) { return Point::rational(Rational(n, d)); }

CompactSet finite_compact(std::vector<Point> pts) {
  return CompactSet::finite(PointSet(std::move(pts)));
}

// ---- CompactSet basics ---------------------------------------------------------------

TEST(CompactSet, FiniteAccessors) {
  CompactSet K = finite_compact({rat(0), rat(1)});
  EXPECT_TRUE(K.is_finite());
  EXPECT_EQ(K.points(), PointSet({rat(0), rat(1)}));
  EXPECT_EQ(K.sample(), K.points());
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  // The net of an explicitly enumerated set is the set itself, at any eps.
  EXPECT_EQ(K.net(s, Rational(1, 100)), K.points());
  EXPECT_EQ(K.net(s, Rational(100)), K.points());
  EXPECT_THROW(K.net(s, Rational(0)), std::invalid_argument);
}

TEST(CompactSet, OracleAccessors) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals");
  EXPECT_FALSE(K.is_finite());
  EXPECT_EQ(K.oracle_name(), "zero_union_reciprocals");
  EXPECT_THROW(K.points(), std::invalid_argument);
  EXPECT_EQ(K.sample().size(), 4u);
  EXPECT_TRUE(K.sample().contains(rat(0)));
}

TEST(CompactSet, NullOracleThrows) {
  EXPECT_THROW(CompactSet::net_oracle("broken", CompactSet::NetFn(),
                                      PointSet({rat(0)})),
               std::invalid_argument);
}

TEST(CompactSet, NetContractIsSpotChecked) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  // Claims to contain 1 but its net never covers it.
  CompactSet cheat = CompactSet::net_oracle(
      "cheater", [](const Rational&) { return PointSet({rat(0)}); },
      PointSet({rat(0), rat(1)}));
  EXPECT_THROW(cheat.net(s, Rational(1, 4)), std::runtime_error);
  // At coarse resolution the single net point does cover both samples.
  EXPECT_NO_THROW(cheat.net(s, Rational(2)));
}

TEST(CompactSet, NetPointsMustLieInTheSpace) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet escape = CompactSet::net_oracle(
      "escape", [](const Rational&) { return PointSet({rat(2)}); },
      PointSet({rat(0)}));
  EXPECT_THROW(escape.net(s, Rational(1, 2)), std::invalid_argument);
}

// ---- built-in oracles ----------------------------------------------------------------

TEST(BuiltinOracle, Names) {
  std::vector<std::string> names = builtin_oracle_names();
  ASSERT_EQ(names.size(), 2u);
  EXPECT_EQ(names[0], "zero_union_reciprocals");
  EXPECT_EQ(names[1], "word_tail_closure");
}

TEST(BuiltinOracle, ZeroUnionReciprocalsNet) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals");
  // eps = 1/10 keeps 1/k for k <= floor(10) + 1 = 11, plus 0.
  PointSet net = K.net(s, Rational(1, 10));
  EXPECT_EQ(net.size(), 12u);
  EXPECT_TRUE(net.contains(rat(0)));
  EXPECT_TRUE(net.contains(rat(1, 11)));
  EXPECT_FALSE(net.contains(rat(1, 12)));
}

TEST(BuiltinOracle, WordTailClosureNet) {
  SpaceDef s = testing::small_words();
  CompactSet K = builtin_oracle(s, "word_tail_closure");
  // Smallest k with 2^-k < 1/4 is 3: stems up to aaa plus the infinite word.
  PointSet net = K.net(s, Rational(1, 4));
  EXPECT_EQ(net.size(), 5u);
  EXPECT_TRUE(net.contains(Point::word("")));
  EXPECT_TRUE(net.contains(Point::word("aaa")));
  EXPECT_TRUE(net.contains(Point::word("", true)));
  EXPECT_FALSE(net.contains(Point::word("aaaa")));
  // Coarse eps > 1 collapses the stems to the empty word.
  EXPECT_EQ(K.net(s, Rational(2)).size(), 2u);
  // eps below the space resolution keeps every stem.
  EXPECT_EQ(K.net(s, Rational(1, 1000)).size(), s.max_len() + 2);
}

TEST(BuiltinOracle, WrongSpaceOrUnknownNameThrows) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  SpaceDef w = testing::small_words();
  EXPECT_THROW(builtin_oracle(w, "zero_union_reciprocals"), std::invalid_argument);
  EXPECT_THROW(builtin_oracle(s, "word_tail_closure"), std::invalid_argument);
  EXPECT_THROW(builtin_oracle(s, "no_such_oracle"), std::invalid_argument);
}

TEST(BuiltinOracle, SampleOverride) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals",
                                PointSet({rat(0), rat(1, 5)}));
  EXPECT_EQ(K.sample(), PointSet({rat(0), rat(1, 5)}));
  EXPECT_NO_THROW(K.net(s, Rational(1, 7)));
}

// ---- standard representation ------------------------------------------------------

TEST(StandardRepresentation, SingletonLevels) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  ChainPrefix rep = standard_representation(s, finite_compact({rat(0)}), 3);
  ASSERT_EQ(rep.depth(), 3u);
  EXPECT_TRUE(rep.certified());
  EXPECT_EQ(rep.sets()[0], BallSet({FormalBall(rat(0), Rational(1))}));
  EXPECT_EQ(rep.sets()[1], BallSet({FormalBall(rat(0), Rational(1, 2))}));
  EXPECT_EQ(rep.sets()[2], BallSet({FormalBall(rat(0), Rational(1, 3))}));
}

TEST(StandardRepresentation, PairLevelsRefine) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  ChainPrefix rep = standard_representation(s, finite_compact({rat(0), rat(1)}), 2);
  ASSERT_EQ(rep.depth(), 2u);
  EXPECT_EQ(rep.sets()[0], BallSet({FormalBall(rat(0), Rational(1)),
                                    FormalBall(rat(1), Rational(1))}));
  EXPECT_EQ(rep.sets()[1], BallSet({FormalBall(rat(0), Rational(1, 2)),
                                    FormalBall(rat(1), Rational(1, 2))}));
  EXPECT_TRUE(em(s, rep.sets()[0], rep.sets()[1]));
}

TEST(StandardRepresentation, OracleNetsAccumulate) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals");
  ChainPrefix rep = standard_representation(s, K, 4);
  EXPECT_TRUE(rep.certified());
  // Net resolutions 1/2, 1/8, 1/18, 1/32 keep reciprocals down to
  // 1/3, 1/9, 1/19, 1/33; accumulation makes the levels grow.
  EXPECT_EQ(rep.sets()[0].size(), 4u);
  EXPECT_EQ(rep.sets()[1].size(), 10u);
  EXPECT_EQ(rep.sets()[2].size(), 20u);
  EXPECT_EQ(rep.sets()[3].size(), 34u);
  EXPECT_EQ(rbar(rep), Rational(1, 4));
}

TEST(StandardRepresentation, WordOracleLevels) {
  SpaceDef s = testing::small_words();
  CompactSet K = builtin_oracle(s, "word_tail_closure");
  ChainPrefix rep = standard_representation(s, K, 3);
  EXPECT_TRUE(rep.certified());
  EXPECT_EQ(rep.sets()[0].size(), 4u);  // eps 1/2:  stems to aa
  EXPECT_EQ(rep.sets()[1].size(), 6u);  // eps 1/8:  stems to aaaa
  EXPECT_EQ(rep.sets()[2].size(), 7u);  // eps 1/18: stems to aaaaa
  bool has_infinite = false;
  for (const FormalBall& b : rep.sets()[0].balls()) {
    if (b.point == Point::word("", true)) has_infinite = true;
  }
  EXPECT_TRUE(has_infinite);
}

TEST(StandardRepresentation, DepthZeroThrows) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  EXPECT_THROW(standard_representation(s, finite_compact({rat(0)}), 0),
               std::invalid_argument);
}

TEST(Phi, IsTheStandardRepresentation) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0), rat(1, 2)});
  ChainPrefix a = phi(s, K, 6);
  ChainPrefix b = standard_representation(s, K, 6);
  EXPECT_EQ(a.sets(), b.sets());
  EXPECT_TRUE(a.certified());
}

// ---- Hausdorff distance between compacts ----------------------------------------

TEST(HdCompact, Examples) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  EXPECT_EQ(hd_compact(s, finite_compact({rat(0), rat(1)}), finite_compact({rat(1, 2)})),
            Rational(1));
  CompactSet K = finite_compact({rat(0), rat(1, 2)});
  EXPECT_EQ(hd_compact(s, K, K), Rational(0));
  EXPECT_EQ(hd_compact(s, finite_compact({rat(0)}), finite_compact({rat(1)})),
            Rational(1));
}

TEST(HdCompact, OracleInputThrows) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals");
  EXPECT_THROW(hd_compact(s, K, finite_compact({rat(0)})), std::invalid_argument);
}

// ---- isometry evidence ----------------------------------------------------------------

TEST(VerifyIsometry, SeparatedSingletons) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  IsometryReport r = verify_isometry(s, finite_compact({rat(0)}),
                                     finite_compact({rat(1)}), 50);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.slack, Rational(0));
  EXPECT_EQ(r.hausdorff_value, Rational(1));
  EXPECT_EQ(r.truncated.value, Rational(1));
  EXPECT_GE(r.truncated.value, Rational(24, 25));
  EXPECT_LE(r.truncated.value, Rational(1));
  EXPECT_EQ(r.truncated.error_radius, Rational(3, 50));
  EXPECT_TRUE(r.truncated.valid);
  EXPECT_EQ(r.margin, Rational(3, 50));
  EXPECT_EQ(r.depth, 50u);
}

TEST(VerifyIsometry, IdenticalSets) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0), rat(1, 2)});
  IsometryReport r = verify_isometry(s, K, K, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.hausdorff_value, Rational(0));
  EXPECT_EQ(r.truncated.value, Rational(0));
}

TEST(VerifyIsometry, PairAgainstMidpoint) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  IsometryReport r = verify_isometry(s, finite_compact({rat(0), rat(1)}),
                                     finite_compact({rat(1, 2)}), 30);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.hausdorff_value, Rational(1));
  EXPECT_EQ(r.truncated.value, Rational(1));
}

TEST(VerifyIsometry, OracleSideAddsNetSlack) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = builtin_oracle(s, "zero_union_reciprocals");
  IsometryReport one_side = verify_isometry(s, K, finite_compact({rat(0)}), 12);
  EXPECT_FALSE(one_side.exact);
  EXPECT_EQ(one_side.slack, Rational(1, 288));  // 1/(2 * 12^2)
  EXPECT_TRUE(one_side.pass);

  IsometryReport both_sides = verify_isometry(s, K, K, 12);
  EXPECT_FALSE(both_sides.exact);
  EXPECT_EQ(both_sides.slack, Rational(1, 144));
  EXPECT_EQ(both_sides.hausdorff_value, Rational(0));
  EXPECT_EQ(both_sides.truncated.value, Rational(0));
  EXPECT_TRUE(both_sides.pass);
}

// ---- order evidence ---------------------------------------------------------------------

TEST(VerifyOrder, IdenticalSets) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0), rat(1, 2)});
  OrderReport r = verify_order_correspondence(s, K, K, 6);
  EXPECT_EQ(r.chain_order, TriState::Established);
  EXPECT_TRUE(r.hausdorff_zero);
  EXPECT_TRUE(r.subset_rel);
  EXPECT_TRUE(r.consistent);
}

TEST(VerifyOrder, SeparatedSingletons) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  OrderReport r = verify_order_correspondence(s, finite_compact({rat(0)}),
                                              finite_compact({rat(1)}), 6);
  EXPECT_EQ(r.chain_order, TriState::Unknown);
  EXPECT_FALSE(r.hausdorff_zero);
  EXPECT_FALSE(r.subset_rel);
  EXPECT_TRUE(r.consistent);
}

TEST(VerifyOrder, ProperSupersetStaysUnknown) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  OrderReport r = verify_order_correspondence(s, finite_compact({rat(0), rat(1, 2)}),
                                              finite_compact({rat(0)}), 6);
  EXPECT_EQ(r.chain_order, TriState::Unknown);
  EXPECT_FALSE(r.hausdorff_zero);
  EXPECT_FALSE(r.subset_rel);
  EXPECT_TRUE(r.consistent);
}

TEST(VerifyOrder, DepthZeroThrows) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0)});
  EXPECT_THROW(verify_order_correspondence(s, K, K, 0), std::invalid_argument);
}

// ---- recovery ---------------------------------------------------------------------------------

TEST(RecoverCompact, FiltersDecoys) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  RecoveryReport r = recover_compact(s, finite_compact({rat(0)}),
                                     PointSet({rat(0), rat(1, 2), rat(1)}), 10);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.recovered.size(), 1u);
  EXPECT_EQ(r.recovered[0], rat(0));
}

TEST(RecoverCompact, FullUniverse) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  PointSet pts({rat(0), rat(1, 2), rat(1)});
  RecoveryReport r = recover_compact(s, CompactSet::finite(pts), pts, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.recovered, pts.points());
}

TEST(RecoverCompact, NearbyDecoyNeedsDepth) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0)});
  PointSet universe({rat(0), rat(1, 100)});
  // d(0, 1/100) = 1/100 <= 1/n for every n <= 100, so the decoy survives
  // shallow prefixes and dies only once the radii drop below it.
  EXPECT_FALSE(recover_compact(s, K, universe, 10).pass);
  EXPECT_TRUE(recover_compact(s, K, universe, 101).pass);
}

TEST(RecoverCompact, UniverseMustContainTheSet) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  EXPECT_THROW(recover_compact(s, finite_compact({rat(0), rat(1)}),
                               PointSet({rat(0)}), 5),
               std::invalid_argument);
}

TEST(RecoverCompact, RepresentationsSeparateDistinctSets) {
  // The chain of K recovers K and nothing else from a shared universe, for
  // every pair of distinct sets in a small pool.
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  std::vector<PointSet> pool = {
      PointSet({rat(0)}),           PointSet({rat(1, 2)}),
      PointSet({rat(1)}),           PointSet({rat(0), rat(1, 2)}),
      PointSet({rat(1, 4), rat(3, 4)}),
      PointSet({rat(0), rat(1, 2), rat(1)})};
  for (const PointSet& kp : pool) {
    for (const PointSet& lp : pool) {
      if (kp == lp) continue;
      std::vector<Point> all = kp.points();
      all.insert(all.end(), lp.points().begin(), lp.points().end());
      RecoveryReport r = recover_compact(s, CompactSet::finite(kp), PointSet(all), 10);
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.recovered, kp.points());
    }
  }
}

TEST(ChainEquivalence, RepresentationDepthDoesNotMatter) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet oracle = builtin_oracle(s, "zero_union_reciprocals");
  ChainPrefix shallow = phi(s, oracle, 5);
  ChainPrefix deep = phi(s, oracle, 9);
  EXPECT_EQ(chain_equiv_at_depth(s, shallow, deep), TriState::Established);
}

// ---- hit-and-miss membership ---------------------------------------------------------

TEST(Vietoris, DiamondMembership) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0), rat(1)});
  EXPECT_TRUE(vietoris_diamond_member(s, K, rat(0), Rational(1, 2)));
  EXPECT_FALSE(vietoris_diamond_member(s, finite_compact({rat(1)}), rat(0), Rational(1, 2)));
  EXPECT_TRUE(vietoris_diamond_member(s, finite_compact({rat(1, 4)}), rat(0), Rational(1, 2)));
  // Open balls: a member exactly at the radius does not witness a hit.
  EXPECT_FALSE(vietoris_diamond_member(s, finite_compact({rat(1, 2)}), rat(0), Rational(1, 2)));
}

TEST(Vietoris, DiamondOnWords) {
  SpaceDef s = testing::small_words();
  CompactSet K = CompactSet::finite(PointSet({Point::word("ab")}));
  EXPECT_TRUE(vietoris_diamond_member(s, K, Point::word("a"), Rational(1, 2)));
  EXPECT_FALSE(vietoris_diamond_member(s, K, Point::word("b"), Rational(1, 2)));
}

TEST(Vietoris, BoxMembership) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0), rat(1)});
  std::vector<FormalBall> cover = {FormalBall(rat(0), Rational(1, 2)),
                                   FormalBall(rat(1), Rational(1, 2))};
  EXPECT_TRUE(vietoris_box_member(s, K, cover));
  std::vector<FormalBall> half = {FormalBall(rat(0), Rational(1, 2))};
  EXPECT_FALSE(vietoris_box_member(s, K, half));
  // Strict openness at the boundary.
  EXPECT_FALSE(vietoris_box_member(s, finite_compact({rat(1, 2)}), half));
  std::vector<FormalBall> wider = {FormalBall(rat(0), Rational(3, 4))};
  EXPECT_TRUE(vietoris_box_member(s, finite_compact({rat(1, 2)}), wider));
  // No balls cover nothing.
  EXPECT_FALSE(vietoris_box_member(s, K, {}));
}

TEST(Vietoris, InvalidInputsThrow) {
  SpaceDef s = SpaceDef::sorgenfrey_unit();
  CompactSet K = finite_compact({rat(0)});
  EXPECT_THROW(vietoris_diamond_member(s, K, rat(0), Rational(0)), std::invalid_argument);
  std::vector<FormalBall> zero = {FormalBall(rat(0), Rational(0))};
  EXPECT_THROW(vietoris_box_member(s, K, zero), std::invalid_argument);
  CompactSet oracle = builtin_oracle(s, "zero_union_reciprocals");
  EXPECT_THROW(vietoris_diamond_member(s, oracle, rat(0), Rational(1, 2)), std::invalid_argument);
  std::vector<FormalBall> one = {FormalBall(rat(0), Rational(1, 2))};
  EXPECT_THROW(vietoris_box_member(s, oracle, one), std::invalid_argument);
}

}  // namespace
}  // namespace hyperball
