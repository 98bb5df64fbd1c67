#include <gtest/gtest.h>

#include "phg/bounds.hpp"

using namespace phg;

TEST(Bounds, EllOracleMatchesTable) {
  for (int q : {2, 3, 4, 5}) {
    const auto row = ell_oracle_row(q);
    for (int u = 1; u <= q * q; ++u) EXPECT_EQ(row[u - 1], ell_q(q, u)) << q << " " << u;
  }
  EXPECT_EQ(ell_q(3, 5), 9);
  EXPECT_EQ(ell_q(5, 13), 20);
}

TEST(Bounds, EllNearMultiplesOfQ) {
  for (int q = 2; q <= 5; ++q) {
    const auto row = ell_oracle_row(q);
    for (int s = 1; s <= q; ++s)
      for (int t = 0; t < s; ++t) EXPECT_EQ(row[s * q - t - 1], s * q + q) << q << " " << s << " " << t;
  }
}

TEST(Bounds, EvaluatorsAgree) {
  for (int q = 2; q <= 5; ++q)
    for (int n = 2; n <= q * q + q; ++n) EXPECT_EQ(M_qn_direct(q, n), M_qn_closed(q, n)) << q << " " << n;
}

TEST(Bounds, KnownValues) {
  EXPECT_EQ(M_qn(3, 6), 52);
  EXPECT_EQ(M_qn(3, 7), 63);
  EXPECT_EQ(M_qn(4, 11), 169);
  EXPECT_EQ(M_qn(5, 7), 156);
  EXPECT_EQ(M_qn(5, 16), 395);
  EXPECT_EQ(floor_bound(3, 7), 65);
  EXPECT_EQ(floor_bound(2, 2), 7);
  EXPECT_EQ(floor_bound(5, 2), 31);
  EXPECT_EQ(large_n_upper(5, 24), 615);
  EXPECT_EQ(large_n_upper(4, 16), 256);
  EXPECT_EQ(large_n_upper(3, 6), 52);
  EXPECT_THROW(large_n_upper(3, 5), std::out_of_range);
}

TEST(Bounds, SpecialConstants) {
  EXPECT_EQ(special_upper(ring_by_name("Z9"), 7)->value, 62);
  EXPECT_EQ(special_upper(ring_by_name("S4"), 8)->value, 125);
  EXPECT_FALSE(special_upper(ring_by_name("G4"), 8));
  EXPECT_EQ(special_upper(ring_by_name("Z25"), 3)->value, 43);
  EXPECT_EQ(special_upper(ring_by_name("G4"), 6)->value, 84);
  EXPECT_EQ(special_upper(ring_by_name("T4"), 6)->value, 83);
  for (const char* ring : {"Z9", "G4", "Z25"})
    for (int n = 2; n < 10; ++n)
      if (auto s = special_upper(ring_by_name(ring), n)) EXPECT_FALSE(s->anchor.empty());
}

TEST(Bounds, BestKnown) {
  const BestKnown z9 = best_known(ring_by_name("Z9"), 5, {{39, 5, "construction:TRIANGLE_SINGER", false}});
  EXPECT_EQ(z9.lower.value, 39);
  EXPECT_EQ(z9.upper.value, 39);
  const BestKnown g4 = best_known(ring_by_name("G4"), 10, {{152, 10, "construction:Q4_N10", false}});
  EXPECT_EQ(g4.lower.value, 152);
  EXPECT_EQ(g4.upper.value, 160);
  const BestKnown s5 = best_known(ring_by_name("S5"), 6, {{130, 6, "search", false}});
  EXPECT_EQ(s5.lower.value, 130);
  EXPECT_EQ(s5.upper.value, 130);
  EXPECT_THROW(best_known(ring_by_name("Z9"), 5, {{40, 5, "bogus", false}}), std::logic_error);
  const BestKnown mono = best_known(ring_by_name("Z9"), 6, {{39, 5, "smaller n", false}});
  EXPECT_EQ(mono.lower.value, 39);
}

TEST(Bounds, UpperRecordsMatchPublishedTables) {
  for (int q = 2; q <= 5; ++q)
    for (const auto& name : published_table_rings(q)) {
      const Ring R = ring_by_name(name);
      for (int n = 0;; ++n) {
        const auto cell = published_cell(name, n);
        if (!cell) break;
        int best = 1 << 30;
        for (const auto& r : upper_records(R, n)) best = std::min(best, r.value);
        EXPECT_EQ(best, cell->upper) << name << " n=" << n;
      }
    }
}

TEST(Bounds, PublishedTablesAreSane) {
  for (int q = 2; q <= 5; ++q)
    for (const auto& name : published_table_rings(q)) {
      int n = 0, prev = -1;
      for (;; ++n) {
        const auto cell = published_cell(name, n);
        if (!cell) break;
        EXPECT_LE(cell->lower, cell->upper) << name << " " << n;
        EXPECT_GE(cell->lower, prev) << name << " " << n;
        prev = cell->lower;
      }
      EXPECT_EQ(n, q * q + q + 1) << name;
      EXPECT_EQ(published_cell(name, q * q + q)->lower, q * q * (q * q + q + 1)) << name;
    }
  const auto c = published_cell("G4", 7);
  EXPECT_EQ(c->lower, 94);
  EXPECT_EQ(c->upper, 101);
  EXPECT_EQ(c->lower_mark, "D");
  EXPECT_EQ(c->upper_mark, "F");
}
