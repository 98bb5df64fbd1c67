#include <gtest/gtest.h>

#include "phg/constructions.hpp"

using namespace phg;

namespace {

void expect_claim(const Plane& P, ConstructionId id, int param, int k, int n) {
  const Construction c = construct(P, id, param);
  const ArcReport r = verify(P, c.points);
  EXPECT_EQ(c.claimed.k, k) << construction_name(id);
  EXPECT_EQ(c.claimed.n, n) << construction_name(id);
  EXPECT_EQ(r.k, k) << construction_name(id) << " over " << P.ring().name();
  if (c.claimed.blocking)
    EXPECT_GE(r.n_min, n) << construction_name(id);
  else
    EXPECT_LE(r.n_max, n) << construction_name(id) << " over " << P.ring().name();
}

}  // namespace

TEST(Constructions, NamesRoundTrip) {
  for (ConstructionId id : all_constructions()) EXPECT_EQ(construction_from_name(construction_name(id)), id);
  EXPECT_FALSE(construction_from_name("NOPE"));
}

TEST(Constructions, SporadicQ4) {
  const std::vector<std::pair<ConstructionId, std::pair<int, int>>> cases{
      {ConstructionId::Q4N8, {120, 8}},  {ConstructionId::Q4N9, {140, 9}},   {ConstructionId::Q4N10, {152, 10}},
      {ConstructionId::Q4N11, {166, 11}}, {ConstructionId::Q4N12, {186, 12}}, {ConstructionId::Q4N13, {201, 13}}};
  for (const char* ring : {"G4", "S4", "T4"}) {
    const Plane P = build_plane(ring_by_name(ring));
    for (const auto& [id, kn] : cases) expect_claim(P, id, 0, kn.first, kn.second);
  }
}

TEST(Constructions, SporadicQ5) {
  const std::vector<std::pair<ConstructionId, std::pair<int, int>>> cases{
      {ConstructionId::Q5N15, {355, 15}}, {ConstructionId::Q5N16, {375, 16}}, {ConstructionId::Q5N17, {395, 17}},
      {ConstructionId::Q5N18, {425, 18}}, {ConstructionId::Q5N19, {455, 19}}};
  for (const char* ring : {"Z25", "S5"}) {
    const Plane P = build_plane(ring_by_name(ring));
    for (const auto& [id, kn] : cases) expect_claim(P, id, 0, kn.first, kn.second);
  }
}

TEST(Constructions, Q3Family) {
  for (const char* ring : {"Z9", "S3"}) {
    const Plane P = build_plane(ring_by_name(ring));
    expect_claim(P, ConstructionId::Q2Minus1, 0, 69, 8);
    const Construction b = construct(P, ConstructionId::Q3N7Blocking);
    EXPECT_TRUE(b.claimed.blocking);
    EXPECT_TRUE(verify(P, b.points).is_blocking(57, 5));
    EXPECT_TRUE(verify(P, complement_blocking(P, b.points)).is_arc(60, 7));
  }
}

TEST(Constructions, GeneralFamiliesMatchClaims) {
  for (const auto& name : ring_names()) {
    const Ring R = ring_by_name(name);
    const Plane P = build_plane(R);
    for (ConstructionId id : {ConstructionId::LargeN, ConstructionId::Q2Minus1, ConstructionId::Q2Range,
                              ConstructionId::TwoqRange}) {
      std::vector<int> params;
      try {
        params = parameter_range(R, id);
      } catch (const ConstructionError&) {
        continue;
      }
      for (int t : params) {
        const ClaimedParams cp = claimed_params(R, id, t);
        expect_claim(P, id, t, cp.k, cp.n);
      }
    }
  }
}

TEST(Constructions, HyperovalsAndDuality) {
  EXPECT_TRUE(verify(build_plane(ring_by_name("Z4")), hyperoval_galois(build_plane(ring_by_name("Z4")))).is_arc(7, 2));
  const Plane G = build_plane(ring_by_name("G4"));
  EXPECT_TRUE(verify(G, hyperoval_galois(G)).is_arc(21, 2));
  const Construction d = construct(G, ConstructionId::DualPassant);
  EXPECT_EQ(d.report.k, 126);
  EXPECT_EQ(d.report.n_max, 8);
  for (size_t i = 0; i < d.report.spectrum.size(); ++i)
    if (i != 0 && i != 8) EXPECT_EQ(d.report.spectrum[i], 0) << i;
  const Plane Z9 = build_plane(ring_by_name("Z9"));
  try {
    construct(Z9, ConstructionId::HyperovalGalois);
    FAIL() << "expected InapplicableRing";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), ConstructionError::Kind::InapplicableRing);
  }
}

TEST(Constructions, TriangleSinger) { expect_claim(build_plane(ring_by_name("Z9")), ConstructionId::TriangleSinger, 0, 39, 5); }

TEST(Constructions, SingerOrders) {
  EXPECT_EQ(build_plane(ring_by_name("Z4")).order(singer_collineation(build_plane(ring_by_name("Z4")))), 7);
  const Plane Z9 = build_plane(ring_by_name("Z9"));
  EXPECT_EQ(Z9.order(singer_collineation(Z9)), 13);
  const Plane Z25 = build_plane(ring_by_name("Z25"));
  const Collineation g = singer_collineation(Z25);
  EXPECT_EQ(Z25.order(g), 31);
  const auto orbits = point_orbits(Z25, {g});
  EXPECT_EQ(orbits.size(), 25u);
  for (const auto& o : orbits) EXPECT_EQ(o.size(), 31u);
}

TEST(Constructions, OutOfRangeParameter) {
  const Plane P = build_plane(ring_by_name("Z4"));
  try {
    construct(P, ConstructionId::LargeN, 99);
    FAIL() << "expected ParameterOutOfRange";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), ConstructionError::Kind::ParameterOutOfRange);
  }
}
