// The projective Hjelmslev plane PHG(2,R) as an explicit incidence structure.
#pragma once

#include <array>
#include <vector>

#include "phg/classical.hpp"
#include "phg/ring.hpp"

namespace phg {

using Coords = std::array<int, 3>;
using Multiset = std::vector<int>;

struct Collineation {
  std::array<std::array<int, 3>, 3> matrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  int aut = 0;  // index into Ring::automorphisms()
};

// Π_[L]: the q(q+1) segments of direction [L] plus the point p_inf, with
// the q^2 lines of [L] and the q+1 class lines through p_inf.
struct LineClassPlane {
  ClassicalPlane plane;
  std::vector<int> columns;               // point classes on [L], by quotient id
  std::vector<std::vector<int>> segment;  // plane point id -> PHG points (empty for p_inf)
  std::vector<int> line;                  // plane line id -> PHG line id, -1 for class lines
  std::vector<int> class_line;            // column -> plane line id through p_inf
  int p_inf = 0;
  int point(int column, int row) const;
};

// Π_[x]: the affine plane of order q on a point class, lines are segments.
struct PointClassPlane {
  ClassicalPlane plane;
  std::vector<int> points;      // plane point id -> PHG point
  std::vector<int> directions;  // parallel class index -> line class
};

class Plane {
 public:
  static Plane build(const Ring& ring);
  // Points and lines swapped, incidence transposed. Point coordinates of
  // the dual are the line coefficients of the original.
  Plane dual() const;

  const Ring& ring() const { return ring_; }
  int q() const { return ring_.q(); }
  int num_points() const { return static_cast<int>(point_coords_.size()); }
  int num_lines() const { return static_cast<int>(line_coords_.size()); }
  int num_classes() const { return static_cast<int>(quotient_.num_points()); }

  const Coords& point(int x) const { return point_coords_[x]; }
  const Coords& line(int l) const { return line_coords_[l]; }
  const std::vector<int>& line_points(int l) const { return line_points_[l]; }
  const std::vector<int>& point_lines(int x) const { return point_lines_[x]; }
  bool incident(int x, int l) const { return incidence_[static_cast<size_t>(l) * num_points() + x] != 0; }

  // Normalizes and looks up; -1 if the triple has no unit coordinate.
  int point_id(const Coords& c) const;
  int line_id(const Coords& c) const;
  Coords normalize_point(const Coords& c) const;
  Coords normalize_line(const Coords& c) const;
  int line_through(int x, int y) const;  // -1 for neighbouring points

  int point_class(int x) const { return point_class_[x]; }
  int line_class(int l) const { return line_class_[l]; }
  const std::vector<int>& class_points(int c) const { return class_points_[c]; }
  const std::vector<int>& class_lines(int c) const { return class_lines_[c]; }
  // Quotient PG(2,q): point class c is PG point c, line class c is PG line c.
  const ClassicalPlane& quotient() const { return quotient_; }
  bool neighbours(int x, int y) const { return point_class_[x] == point_class_[y]; }

  // Segments of direction lc in point class pc, ordered by least point id.
  const std::vector<std::vector<int>>& segments(int lc, int pc) const;
  // Row of the segment of direction lc containing x.
  int segment_row(int lc, int x) const { return seg_row_[static_cast<size_t>(lc) * num_points() + x]; }

  // q x (q+1) grid: rows are segments, columns the point classes on lc.
  std::vector<std::vector<int>> segment_grid(int lc, const Multiset& m) const;
  // Multiplicities of the q parallel segments of direction lc in pc, non-increasing.
  std::vector<int> class_type(int pc, const Multiset& m, int lc) const;

  // The bare incidence structure, for the generic subset search.
  ClassicalPlane incidence_structure() const;
  LineClassPlane line_class_plane(int lc) const;
  PointClassPlane point_class_plane(int pc) const;

  int apply(const Collineation& g, int x) const;
  std::vector<int> permutation(const Collineation& g) const;
  std::vector<int> line_permutation(const Collineation& g) const;
  long long order(const Collineation& g) const;
  bool invertible(const Collineation& g) const;

 private:
  Ring ring_ = Ring::make(ChainRingSpec{RingKind::Galois, 2, 1, 0, {0, 1}, "Z4"});
  std::vector<Coords> point_coords_, line_coords_;
  std::vector<std::vector<int>> line_points_, point_lines_;
  std::vector<char> incidence_;
  std::vector<int> point_lookup_, line_lookup_;
  std::vector<int> point_class_, line_class_;
  std::vector<std::vector<int>> class_points_, class_lines_;
  ClassicalPlane quotient_;
  // segs_[lc][j]: segments in the j-th point class on lc
  std::vector<std::vector<std::vector<std::vector<int>>>> segs_;
  std::vector<int> seg_row_;
  bool dual_ = false;

  int code(const Coords& c) const;
  void finish();
};

Plane build_plane(const Ring& ring);
Plane dualize(const Plane& plane);

}  // namespace phg
