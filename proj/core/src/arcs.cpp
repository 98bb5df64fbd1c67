#include "phg/arcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace phg {

namespace {

void check_length(const Plane& P, const Multiset& m) {
  if (static_cast<int>(m.size()) != P.num_points()) throw std::invalid_argument("multiset length does not match the plane");
  for (int v : m)
    if (v < 0) throw std::invalid_argument("negative multiplicity");
}

}  // namespace

Multiset make_multiset(const Plane& P, const std::vector<int>& points) {
  Multiset m(P.num_points(), 0);
  for (int x : points) ++m.at(x);
  return m;
}

std::vector<int> line_multiplicities(const Plane& P, const Multiset& m) {
  check_length(P, m);
  std::vector<int> out(P.num_lines(), 0);
  for (int l = 0; l < P.num_lines(); ++l)
    for (int x : P.line_points(l)) out[l] += m[x];
  return out;
}

ArcReport verify(const Plane& P, const Multiset& m, bool check_completeness) {
  ArcReport r;
  auto lm = line_multiplicities(P, m);
  for (int v : m) {
    r.k += v;
    if (v > 1) r.projective = false;
  }
  r.n_max = *std::max_element(lm.begin(), lm.end());
  r.n_min = *std::min_element(lm.begin(), lm.end());
  r.spectrum.assign(r.n_max + 1, 0);
  for (int v : lm) ++r.spectrum[v];
  std::vector<int> cm(P.num_classes(), 0);
  for (int x = 0; x < P.num_points(); ++x) cm[P.point_class(x)] += m[x];
  r.class_census.assign(*std::max_element(cm.begin(), cm.end()) + 1, 0);
  for (int v : cm) ++r.class_census[v];
  if (check_completeness && is_complete(P, m, r.n_max)) r.complete_at = r.n_max;
  return r;
}

Multiset complement_blocking(const Plane& P, const Multiset& m) {
  check_length(P, m);
  Multiset out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 1) throw std::invalid_argument("complement requires a projective multiset");
    out[i] = 1 - m[i];
  }
  return out;
}

bool is_complete(const Plane& P, const Multiset& m, int n) {
  auto lm = line_multiplicities(P, m);
  if (*std::max_element(lm.begin(), lm.end()) > n) throw std::invalid_argument("multiset is not an n-arc");
  for (int x = 0; x < P.num_points(); ++x) {
    bool seen = false;
    for (int l : P.point_lines(x))
      if (lm[l] == n) {
        seen = true;
        break;
      }
    if (!seen) return false;
  }
  return true;
}

Multiset dual_passant_set(const Plane& P, const Multiset& m) {
  auto lm = line_multiplicities(P, m);
  Multiset out(P.num_lines(), 0);
  for (int l = 0; l < P.num_lines(); ++l) out[l] = lm[l] == 0 ? 1 : 0;
  return out;
}

std::vector<std::vector<int>> point_orbits(const Plane& P, const std::vector<Collineation>& gens) {
  std::vector<std::vector<int>> perms;
  for (const auto& g : gens) perms.push_back(P.permutation(g));
  std::vector<int> orbit_of(P.num_points(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < P.num_points(); ++s) {
    if (orbit_of[s] >= 0) continue;
    std::vector<int> orb{s};
    orbit_of[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < orb.size(); ++i)
      for (const auto& p : perms) {
        int y = p[orb[i]];
        if (orbit_of[y] < 0) {
          orbit_of[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

Multiset orbit_closure(const Plane& P, const Multiset& m, const Collineation& g) {
  check_length(P, m);
  Multiset out(m.size(), 0);
  for (const auto& orb : point_orbits(P, {g})) {
    int best = 0;
    for (int x : orb) best = std::max(best, m[x]);
    for (int x : orb) out[x] = best;
  }
  return out;
}

}  // namespace phg
