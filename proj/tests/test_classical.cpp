#include <gtest/gtest.h>

#include "phg/classical.hpp"

using namespace phg;

namespace {

using Census = std::map<std::string, int>;

int max_on_lines(const ClassicalPlane& P, const std::vector<int>& pts) {
  std::vector<int> mult(P.num_points(), 0);
  for (int x : pts) ++mult[x];
  int m = 0;
  for (const auto& l : P.line_points) {
    int c = 0;
    for (int x : l) c += mult[x];
    m = std::max(m, c);
  }
  return m;
}

}  // namespace

TEST(Classical, PlaneCounts) {
  for (int q : {2, 3, 4, 5}) {
    const ClassicalPlane P = make_pg(q);
    EXPECT_EQ(P.num_points(), q * q + q + 1);
    EXPECT_EQ(P.num_lines(), q * q + q + 1);
    const ClassicalPlane A = make_ag(q);
    EXPECT_EQ(A.num_points(), q * q);
    EXPECT_EQ(A.num_lines(), q * q + q);
    EXPECT_EQ(A.parallel_classes.size(), static_cast<size_t>(q + 1));
  }
}

TEST(Classical, HyperovalAvoidingTwoLines) {
  const ClassicalPlane P = make_pg(4);
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Hyperoval;
  req.avoid_lines = {0, 1};
  const FindResult r = find_object(P, req);
  ASSERT_TRUE(r.points);
  EXPECT_EQ(r.points->size(), 6u);
  EXPECT_LE(max_on_lines(P, *r.points), 2);
}

TEST(Classical, AffineBlockingSetOfSize2qMinus1) {
  const ClassicalPlane A = make_ag(5);
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Blocking;
  req.k = 9;
  req.s = 1;
  const FindResult r = find_object(A, req);
  ASSERT_TRUE(r.points);
  EXPECT_EQ(r.points->size(), 9u);
  req.k = 8;
  const FindResult none = find_object(A, req);
  EXPECT_FALSE(none.points);
  EXPECT_TRUE(none.exhausted);
}

TEST(Classical, ArcsInPG25) {
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Arc;
  req.n = 3;
  req.k = 11;
  EXPECT_TRUE(find_object(make_pg(5), req).points);
  req.k = 12;
  const FindResult r = find_object(make_pg(5), req);
  EXPECT_FALSE(r.points);
  EXPECT_TRUE(r.exhausted);
}

TEST(Classical, MaxArcTablesAgreeWithExhaustiveSearch) {
  for (int q : {2, 3, 4, 5})
    for (int n = 2; n <= q; ++n) {
      EXPECT_EQ(max_arc_exhaustive(make_pg(q), n).value, classical_max_arc(q, n).value) << q << " " << n;
      EXPECT_EQ(max_arc_exhaustive(make_ag(q), n).value, classical_max_affine_arc(q, n).value) << q << " " << n;
    }
  EXPECT_EQ(classical_max_arc(5, 3).value, 11);
  EXPECT_EQ(classical_max_arc(5, 4).value, 16);
  EXPECT_EQ(classical_max_arc(4, 3).value, 9);
}

TEST(Classical, TriangleSets) {
  EXPECT_EQ(triangle_set(3), (std::vector<std::array<int, 2>>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(triangle_set(5).size(), 10u);
  AffineMap shift;
  shift.e = shift.f = 1;
  EXPECT_EQ(triangle_set(3, shift), (std::vector<std::array<int, 2>>{{1, 1}, {1, 2}, {2, 1}}));
}

TEST(Classical, LineTypesOf22_6Arcs) {
  const ClassicalPlane P = make_pg(4);
  const std::map<std::string, Census> table{
      {"1L", {{"21111", 5}, {"11111", 16}}},
      {"2L", {{"22110", 1}, {"21111", 8}, {"11111", 8}, {"11110", 4}}},
      {"3L", {{"22200", 1}, {"21111", 12}, {"11110", 8}}},
      {"Q", {{"22110", 6}, {"21111", 8}, {"11110", 6}, {"11000", 1}}},
      {"H", {{"22110", 15}, {"11110", 5}, {"00000", 1}}},
      {"DA", {{"22200", 3}, {"22110", 12}, {"21111", 2}, {"11000", 4}}},
  };
  for (const auto& [name, census] : table) {
    const std::vector<int> m = classical_22_6(name);
    int k = 0;
    for (int v : m) k += v;
    EXPECT_EQ(k, 22) << name;
    EXPECT_EQ(line_type_census(P, m), census) << name;
  }
  EXPECT_EQ(line_type_census(P, std::vector<int>(21, 0)), (Census{{"00000", 21}}));
}

TEST(Classical, LineTypesOf27_7Arcs) {
  const ClassicalPlane P = make_pg(4);
  EXPECT_EQ(line_type_census(P, classical_27_7("H")), (Census{{"22111", 15}, {"11111", 6}}));
  EXPECT_EQ(line_type_census(P, classical_27_7("DA")), (Census{{"22210", 9}, {"22111", 9}, {"11100", 3}}));
}

TEST(Classical, DoublePointLemmas) {
  for (int D = 8; D <= 11; ++D) EXPECT_LE(lemma_double_points_max(D), 19) << D;
  EXPECT_LE(lemma_concurrent_four_lines_max(), 12);
}
