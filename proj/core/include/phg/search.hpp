// Searches for arcs in PHG(2,R): heuristic depth-first search, prescribed
// automorphism groups, extension/reduction and small exhaustive searches.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phg/arcs.hpp"
#include "phg/plane.hpp"

namespace phg {

struct SearchConfig {
  int target_k = 0;  // 0: no target, search until the budget runs out
  int n = 0;
  uint64_t seed = 0;
  double time_budget = 60.0;  // seconds
  long long node_budget = 10'000'000;
  bool invariant_screen = true;
};

struct SearchResult {
  Multiset best;
  int k = 0;
  bool budget_exhausted = false;
  long long nodes = 0;
};

// Probability that r = target_k - |K| - 1 further random free points keep every
// line through x within n, assuming x is added. 0 if x is not addable.
double heuristic_score(const Plane& plane, const Multiset& current, int x, const SearchConfig& config);
SearchResult heuristic_search(const Plane& plane, const SearchConfig& config, const Multiset& start = {});

struct OrbitProblem {
  std::vector<Collineation> generators;
  std::vector<std::vector<int>> orbits;
  std::vector<int> line_reps;
  std::vector<std::vector<int>> counts;  // counts[orbit][rep] = |orbit cap rep|
};
OrbitProblem orbit_problem(const Plane& plane, const std::vector<Collineation>& generators);
SearchResult orbit_search(const Plane& plane, const OrbitProblem& problem, const SearchConfig& config);
// All n-arcs that are unions of orbits with exactly k points, up to limit.
std::vector<Multiset> orbit_solutions(const Plane& plane, const OrbitProblem& problem, int n, int k, size_t limit = 1000);

SearchResult extend_arc(const Plane& plane, const Multiset& m, int new_n, const SearchConfig& config);
SearchResult reduce_arc(const Plane& plane, const Multiset& m, int new_n, const SearchConfig& config);

struct ExhaustiveResult {
  int value = 0;
  Multiset certificate;
  bool complete = true;  // false: budget exceeded, value is only a lower bound
  long long nodes = 0;
};
// Projective (k,n)-arc with prescribed point-class multiplicities and forced points.
std::optional<Multiset> class_profile_search(const Plane& plane, int k, int n, const std::vector<int>& class_mult,
                                             const std::vector<int>& forced, uint64_t seed = 0,
                                             long long node_budget = 100'000'000);

// Largest projective n-arc.
ExhaustiveResult exhaustive_search(const Plane& plane, int n, long long node_budget = 2'000'000'000);

// |PGammaL(3,R)| by enumerating invertible matrices modulo central units (q = 2 only).
long long group_order_check(const Plane& plane);
long long group_order_formula(const Ring& ring);

}  // namespace phg
