// Classical planes PG(2,q), AG(2,q) and small incidence structures of order q.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phg/ring.hpp"

namespace phg {

// A finite incidence structure of order q. PG(2,q), AG(2,q) and the planes
// induced on neighbour classes of PHG(2,R) are all represented this way.
struct ClassicalPlane {
  int q = 0;
  bool projective = true;
  std::vector<std::vector<int>> line_points;
  std::vector<std::vector<int>> point_lines;
  // Projective coordinates over F_q (PG and AG only; empty otherwise).
  std::vector<std::array<int, 3>> coords;
  // AG(2,q): ids of the enclosing PG points/lines and the removed line.
  std::vector<int> pg_point, pg_line;
  int infinite_line = -1;
  // AG(2,q): lines grouped into parallel classes.
  std::vector<std::vector<int>> parallel_classes;

  int num_points() const { return static_cast<int>(point_lines.size()); }
  int num_lines() const { return static_cast<int>(line_points.size()); }
  bool incident(int point, int line) const;
  int line_through(int a, int b) const;  // -1 if none
  int point_id(const std::array<int, 3>& c) const;

  static ClassicalPlane from_lines(int q, bool projective, int num_points, std::vector<std::vector<int>> lines);
};

ClassicalPlane make_pg(int q);
ClassicalPlane make_ag(int q);
const FiniteField& classical_field(int q);
std::array<int, 3> normalize_pg(const FiniteField& F, std::array<int, 3> c);

enum class ObjectKind { Arc, Blocking, Hyperoval, Oval, Grid };

struct ClassicalObjectRequest {
  ObjectKind kind = ObjectKind::Arc;
  int k = 0;  // size (Arc, Blocking)
  int n = 0;  // max line multiplicity (Arc)
  int s = 0;  // min line multiplicity (Blocking)
  int grid_r = 0, grid_s = 0;
  std::vector<int> avoid_points;
  std::vector<int> require_points;
  std::vector<int> avoid_lines;  // no chosen point on these lines
  struct LineBound {
    int line, lo, hi;
  };
  std::vector<LineBound> line_bounds;
  uint64_t seed = 0;
  long long node_budget = 200'000'000;
};

struct FindResult {
  std::optional<std::vector<int>> points;
  bool exhausted = true;  // false if the node budget ran out before a proof
  long long nodes = 0;
};

FindResult find_object(const ClassicalPlane& plane, const ClassicalObjectRequest& req);

// Generic engine: exactly k points, lo <= |S cap L| <= hi for every line,
// with forced and forbidden points.
struct SubsetProblem {
  std::vector<int> lo, hi;
  std::vector<char> allowed, forced;
  int k = 0;
};
FindResult solve_subset(const ClassicalPlane& plane, const SubsetProblem& prob, uint64_t seed = 0,
                        long long node_budget = 200'000'000);

// Largest projective n-arc, exhaustively (symmetry-reduced for PG and AG).
struct MaxArcResult {
  int value = 0;
  std::vector<int> witness;
  bool exact = true;
  long long nodes = 0;
};
MaxArcResult max_arc_exhaustive(const ClassicalPlane& plane, int n, long long node_budget = 2'000'000'000);

std::map<std::string, int> line_type_census(const ClassicalPlane& plane, const std::vector<int>& mult);

struct AffineMap {
  // (x, y) -> (a x + b y + e, c x + d y + f)
  int a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;
};
// Triangle set {x + y < p - 1} in AG(2,p) mapped by g; returned as (x, y) pairs.
std::vector<std::array<int, 2>> triangle_set(int p, const AffineMap& g = {});
std::vector<AffineMap> affine_group(int p);

struct TableValue {
  int value;
  std::string provenance;
};
TableValue classical_max_arc(int q, int n);
TableValue classical_max_affine_arc(int q, int n);

// Named (22,6)- and (27,7)-arcs in PG(2,4), as multiplicity vectors.
std::vector<int> classical_22_6(const std::string& name);
std::vector<int> classical_27_7(const std::string& name);

// Largest k of a (k,6)-arc in PG(2,4) with point multiplicities <= 2 and
// exactly D double points.
int lemma_double_points_max(int D);
// Largest projective (k,4)-arc in PG(2,5) whose 4-lines pass through a common point.
int lemma_concurrent_four_lines_max();

}  // namespace phg
