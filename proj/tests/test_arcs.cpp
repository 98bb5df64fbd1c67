#include <gtest/gtest.h>

#include "phg/arcs.hpp"
#include "phg/constructions.hpp"

using namespace phg;

TEST(Arcs, EmptyAndFullMultisets) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const ArcReport empty = verify(P, Multiset(P.num_points(), 0));
  EXPECT_EQ(empty.k, 0);
  EXPECT_EQ(empty.n_max, 0);
  EXPECT_EQ(empty.spectrum[0], P.num_lines());

  const Multiset full(P.num_points(), 1);
  const ArcReport r = verify(P, full);
  EXPECT_EQ(r.k, 28);
  EXPECT_EQ(r.n_max, 6);
  EXPECT_EQ(r.n_min, 6);
  EXPECT_EQ(r.spectrum[6], 28);
  EXPECT_TRUE(is_complete(P, full, 6));
  const ArcReport comp = verify(P, complement_blocking(P, full));
  EXPECT_EQ(comp.k, 0);
  EXPECT_EQ(comp.n_min, 0);
}

TEST(Arcs, SpectrumAndCensusSums) {
  const Plane P = build_plane(ring_by_name("Z9"));
  const Multiset m = construct(P, ConstructionId::TriangleSinger).points;
  const ArcReport r = verify(P, m);
  int lines = 0, incid = 0, classes = 0, pts = 0;
  for (size_t i = 0; i < r.spectrum.size(); ++i) {
    lines += r.spectrum[i];
    incid += static_cast<int>(i) * r.spectrum[i];
  }
  for (size_t i = 0; i < r.class_census.size(); ++i) {
    classes += r.class_census[i];
    pts += static_cast<int>(i) * r.class_census[i];
  }
  EXPECT_EQ(lines, P.num_lines());
  EXPECT_EQ(incid, r.k * (P.q() * P.q() + P.q()));
  EXPECT_EQ(classes, P.num_classes());
  EXPECT_EQ(pts, r.k);
}

TEST(Arcs, SinglePointIsNotComplete) {
  const Plane P = build_plane(ring_by_name("Z4"));
  Multiset m(P.num_points(), 0);
  m[0] = 1;
  EXPECT_FALSE(is_complete(P, m, 2));
}

TEST(Arcs, HyperovalIsCompleteAndSelfDual) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const Multiset h = hyperoval_galois(P);
  EXPECT_TRUE(verify(P, h).is_arc(7, 2));
  EXPECT_TRUE(is_complete(P, h, 2));
  const Plane D = dualize(P);
  const Multiset d = dual_passant_set(P, h);
  EXPECT_TRUE(verify(D, d).is_arc(7, 2));
  EXPECT_EQ(verify(D, dual_passant_set(P, Multiset(P.num_points(), 1))).k, 0);
}

TEST(Arcs, BlockingComplementOf69_8) {
  const Plane P = build_plane(ring_by_name("Z9"));
  const Construction c = construct(P, ConstructionId::Q2Minus1);
  ASSERT_TRUE(c.report.is_arc(69, 8));
  const ArcReport b = verify(P, complement_blocking(P, c.points));
  EXPECT_TRUE(b.is_blocking(48, 4));
}

TEST(Arcs, OrbitClosure) {
  const Plane P = build_plane(ring_by_name("Z25"));
  Multiset m(P.num_points(), 0);
  m[0] = 1;
  EXPECT_EQ(orbit_closure(P, m, Collineation{}), m);
  const Collineation g = singer_collineation(P);
  const Multiset orbit = orbit_closure(P, m, g);
  EXPECT_EQ(verify(P, orbit).k, 31);
  EXPECT_EQ(orbit_closure(P, orbit, g), orbit);
}
