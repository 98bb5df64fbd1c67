#include <gtest/gtest.h>

#include "phg/constructions.hpp"
#include "phg/search.hpp"

using namespace phg;

TEST(Search, ScoreIsOneWithNothingLeftToPlace) {
  const Plane P = build_plane(ring_by_name("Z4"));
  SearchConfig cfg;
  cfg.n = 2;
  cfg.target_k = 1;
  EXPECT_DOUBLE_EQ(heuristic_score(P, Multiset(P.num_points(), 0), 0, cfg), 1.0);
}

TEST(Search, ScoreDropsWhenLinesAreNearlyFull) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const Multiset h = hyperoval_galois(P);
  Multiset m = h;
  int removed = -1;
  for (int x = 0; x < P.num_points() && removed < 0; ++x)
    if (m[x]) {
      m[x] = 0;
      removed = x;
    }
  SearchConfig cfg;
  cfg.n = 2;
  cfg.target_k = 8;
  const double s = heuristic_score(P, m, removed, cfg);
  EXPECT_GE(s, 0.0);
  EXPECT_LT(s, 1.0);
  Multiset full = h;
  for (int x = 0; x < P.num_points(); ++x)
    if (!h[x]) EXPECT_EQ(heuristic_score(P, full, x, cfg), 0.0);
}

TEST(Search, HeuristicReachesSmallOptima) {
  SearchConfig cfg;
  cfg.n = 2;
  cfg.target_k = 7;
  EXPECT_EQ(heuristic_search(build_plane(ring_by_name("Z4")), cfg).k, 7);
  cfg.n = 3;
  cfg.target_k = 18;
  cfg.time_budget = 30;
  EXPECT_EQ(heuristic_search(build_plane(ring_by_name("S3")), cfg).k, 18);
}

TEST(Search, HeuristicZ9SixArcIsLarge) {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.target_k = 49;
  cfg.time_budget = 5;
  const Plane P = build_plane(ring_by_name("Z9"));
  const SearchResult r = heuristic_search(P, cfg);
  EXPECT_GE(r.k, 45);
  EXPECT_LE(verify(P, r.best).n_max, 6);
}

TEST(Search, TrivialGroupOrbitSearch) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const OrbitProblem prob = orbit_problem(P, {Collineation{}});
  EXPECT_EQ(prob.orbits.size(), 28u);
  SearchConfig cfg;
  cfg.n = 2;
  EXPECT_EQ(orbit_search(P, prob, cfg).k, 7);
}

TEST(Search, ExtendCompleteArcIsUnchanged) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const Multiset h = hyperoval_galois(P);
  SearchConfig cfg;
  cfg.time_budget = 5;
  const SearchResult r = extend_arc(P, h, 2, cfg);
  EXPECT_EQ(r.best, h);
}

TEST(Search, ReduceFullPlaneToLineSizeIsUnchanged) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const Multiset full(P.num_points(), 1);
  const SearchResult r = reduce_arc(P, full, 6, SearchConfig{});
  EXPECT_EQ(r.k, 28);
  EXPECT_EQ(r.best, full);
}

TEST(Search, ReduceProducesArc) {
  const Plane P = build_plane(ring_by_name("Z9"));
  const Multiset m = construct(P, ConstructionId::Q2Minus1).points;
  const SearchResult r = reduce_arc(P, m, 6, SearchConfig{});
  EXPECT_LE(verify(P, r.best).n_max, 6);
  EXPECT_GT(r.k, 0);
}

TEST(Search, ExhaustiveSmallCases) {
  const Plane Z4 = build_plane(ring_by_name("Z4"));
  const Plane S2 = build_plane(ring_by_name("S2"));
  const ExhaustiveResult a = exhaustive_search(Z4, 2);
  EXPECT_TRUE(a.complete);
  EXPECT_EQ(a.value, 7);
  EXPECT_TRUE(verify(Z4, a.certificate).is_arc(7, 2));
  EXPECT_EQ(exhaustive_search(S2, 2).value, 6);
  EXPECT_EQ(exhaustive_search(Z4, 3).value, 10);
  EXPECT_EQ(exhaustive_search(S2, 3).value, 10);
}

TEST(Search, GroupOrder) {
  const Ring Z4 = ring_by_name("Z4");
  EXPECT_EQ(group_order_formula(Z4), 43008);
  EXPECT_EQ(group_order_check(build_plane(Z4)), 43008);
  const Ring S2 = ring_by_name("S2");
  EXPECT_EQ(group_order_check(build_plane(S2)), group_order_formula(S2));
}

TEST(Search, ClassProfileFindsS3FourArc) {
  const Plane P = build_plane(ring_by_name("S3"));
  std::vector<int> mult(P.num_classes(), 3);
  mult[6] = mult[8] = mult[10] = 0;
  const auto m = class_profile_search(P, 30, 4, mult, P.segments(8, 3)[0]);
  ASSERT_TRUE(m);
  EXPECT_TRUE(verify(P, *m).is_arc(30, 4));
}
