// Point multisets in PHG(2,R): arc and blocking parameters, spectra, censuses.
#pragma once

#include <optional>
#include <vector>

#include "phg/plane.hpp"

namespace phg {

struct ArcReport {
  int k = 0;
  int n_max = 0;
  int n_min = 0;
  std::vector<int> spectrum;      // spectrum[i]: lines of multiplicity i
  std::vector<int> class_census;  // class_census[i]: point classes of multiplicity i
  bool projective = true;
  std::optional<int> complete_at;

  bool is_arc(int k_, int n) const { return k == k_ && n_max <= n; }
  bool is_blocking(int k_, int s) const { return k == k_ && n_min >= s; }
};

Multiset make_multiset(const Plane& plane, const std::vector<int>& points);
std::vector<int> line_multiplicities(const Plane& plane, const Multiset& m);
ArcReport verify(const Plane& plane, const Multiset& m, bool check_completeness = false);
Multiset complement_blocking(const Plane& plane, const Multiset& m);
bool is_complete(const Plane& plane, const Multiset& m, int n);
// Characteristic multiset of the 0-lines, as points of dualize(plane).
Multiset dual_passant_set(const Plane& plane, const Multiset& m);
Multiset orbit_closure(const Plane& plane, const Multiset& m, const Collineation& g);
// Point orbits of the group generated by the given collineations.
std::vector<std::vector<int>> point_orbits(const Plane& plane, const std::vector<Collineation>& gens);

}  // namespace phg
