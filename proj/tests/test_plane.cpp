#include <gtest/gtest.h>

#include <set>

#include "phg/arcs.hpp"
#include "phg/plane.hpp"

using namespace phg;

TEST(Plane, CountsForAllRings) {
  for (const auto& name : ring_names()) {
    const Plane P = build_plane(ring_by_name(name));
    const int q = P.q();
    EXPECT_EQ(P.num_points(), q * q * (q * q + q + 1)) << name;
    EXPECT_EQ(P.num_lines(), P.num_points()) << name;
    EXPECT_EQ(P.num_classes(), q * q + q + 1) << name;
    for (int l = 0; l < P.num_lines(); ++l) ASSERT_EQ(static_cast<int>(P.line_points(l).size()), q * q + q);
    for (int x = 0; x < P.num_points(); ++x) ASSERT_EQ(static_cast<int>(P.point_lines(x).size()), q * q + q);
    for (int c = 0; c < P.num_classes(); ++c) ASSERT_EQ(static_cast<int>(P.class_points(c).size()), q * q);
  }
}

TEST(Plane, NonNeighboursSpanExactlyOneLine) {
  for (const char* name : {"Z4", "S2", "T4"}) {
    const Plane P = build_plane(ring_by_name(name));
    for (int x = 0; x < P.num_points(); ++x)
      for (int y = x + 1; y < P.num_points(); ++y) {
        int common = 0;
        for (int l : P.point_lines(x)) common += P.incident(y, l);
        if (P.neighbours(x, y))
          ASSERT_NE(common, 1) << name;
        else
          ASSERT_EQ(common, 1) << name;
      }
  }
}

TEST(Plane, QuotientIsProjectivePlane) {
  const Plane P = build_plane(ring_by_name("Z9"));
  for (int l = 0; l < P.num_lines(); ++l)
    for (int x : P.line_points(l)) ASSERT_TRUE(P.quotient().incident(P.point_class(x), P.line_class(l)));
}

TEST(Plane, SegmentsPartitionClass) {
  const Plane P = build_plane(ring_by_name("G4"));
  const int q = P.q();
  for (int pc = 0; pc < P.num_classes(); ++pc)
    for (int lc : P.quotient().point_lines[pc]) {
      const auto& segs = P.segments(lc, pc);
      ASSERT_EQ(static_cast<int>(segs.size()), q);
      std::set<int> all;
      for (const auto& s : segs) {
        ASSERT_EQ(static_cast<int>(s.size()), q);
        all.insert(s.begin(), s.end());
      }
      ASSERT_EQ(all.size(), static_cast<size_t>(q * q));
    }
}

TEST(Plane, SegmentGridOfFullLine) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const int l = 0, lc = P.line_class(l);
  Multiset m(P.num_points(), 0);
  EXPECT_EQ(P.segment_grid(lc, m), std::vector<std::vector<int>>(2, std::vector<int>(3, 0)));
  for (int x : P.line_points(l)) m[x] = 1;
  const auto grid = P.segment_grid(lc, m);
  for (int col = 0; col < 3; ++col) {
    int twos = 0, zeros = 0;
    for (int row = 0; row < 2; ++row) {
      twos += grid[row][col] == 2;
      zeros += grid[row][col] == 0;
    }
    EXPECT_EQ(twos, 1);
    EXPECT_EQ(zeros, 1);
  }
}

TEST(Plane, ClassType) {
  const Plane P = build_plane(ring_by_name("S3"));
  Multiset m(P.num_points(), 0);
  const int pc = 0, lc = P.quotient().point_lines[0][0];
  EXPECT_EQ(P.class_type(pc, m, lc), (std::vector<int>{0, 0, 0}));
  for (int x : P.class_points(pc)) m[x] = 1;
  EXPECT_EQ(P.class_type(pc, m, lc), (std::vector<int>{3, 3, 3}));
}

TEST(Plane, CollineationOrders) {
  const Plane P = build_plane(ring_by_name("Z9"));
  Collineation id;
  EXPECT_EQ(P.order(id), 1);
  Collineation scalar;
  scalar.matrix = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  EXPECT_EQ(P.order(scalar), 1);
}

TEST(Plane, DualIsInvolution) {
  const Plane P = build_plane(ring_by_name("Z4"));
  const Plane D = dualize(P);
  EXPECT_EQ(D.num_points(), 28);
  EXPECT_EQ(D.line_points(0).size(), 6u);
  const Plane DD = dualize(D);
  for (int l = 0; l < P.num_lines(); ++l)
    for (int x = 0; x < P.num_points(); ++x) ASSERT_EQ(P.incident(x, l), DD.incident(x, l));
}

TEST(Plane, PointIdRejectsNonUnitTriples) {
  const Plane P = build_plane(ring_by_name("Z4"));
  EXPECT_EQ(P.point_id({2, 2, 2}), -1);
  EXPECT_EQ(P.point_id({3, 3, 3}), P.point_id({1, 1, 1}));
}
