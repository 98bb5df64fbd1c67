// Upper bounds for m_n(R) and assembly of best-known intervals.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phg/ring.hpp"

namespace phg {

// l_q(u), 1 <= u <= q^2, q <= 5.
int ell_q(int q, int u);
// Recomputes l_q(u) for u = 1..q^2 by enumerating all point sets of AG(2,q):
// the maximum over transversals is the sum over parallel classes of the
// largest line multiplicity.
std::vector<int> ell_oracle_row(int q);
int ell_oracle(int q, int u);

int M_qn_direct(int q, int n);
int M_qn_closed(int q, int n);
int M_qn(int q, int n);  // throws std::logic_error if the two evaluators disagree
int floor_bound(int q, int n);
// Throws std::out_of_range if n is outside the ranges with a closed-form bound.
int large_n_upper(int q, int n);

enum class BoundDirection { Lower, Upper };

struct BoundRecord {
  int value = 0;
  BoundDirection direction = BoundDirection::Upper;
  std::string source;  // formula id, construction id, fixture id, constant id
  std::string anchor;  // quote or reference tag
};

std::optional<BoundRecord> special_upper(const Ring& ring, int n);
// Exact values or bounds established in the literature the tables cite.
std::optional<BoundRecord> external_upper(const Ring& ring, int n);
std::vector<BoundRecord> upper_records(const Ring& ring, int n);

// A verified arc (or a certified maximum) available as a lower bound.
struct Artifact {
  int k = 0;
  int n = 0;
  std::string source;
  bool certified_maximum = false;  // exhaustive search proved k = m_n
};

struct BestKnown {
  BoundRecord lower, upper;
};
// Throws std::logic_error if lower > upper.
BestKnown best_known(const Ring& ring, int n, const std::vector<Artifact>& artifacts);

struct PublishedCell {
  int lower = 0, upper = 0;
  std::string lower_mark, upper_mark;
};
const std::vector<std::string>& published_table_rings(int q);
std::optional<PublishedCell> published_cell(const std::string& ring, int n);

}  // namespace phg
