#include "phg/plane.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace phg {

int LineClassPlane::point(int column, int row) const { return column * plane.q + row; }

int Plane::code(const Coords& c) const {
  const int n = ring_.size();
  return c[0] + n * c[1] + n * n * c[2];
}

Coords Plane::normalize_point(const Coords& c) const {
  const bool left = dual_;
  for (int i = 0; i < 3; ++i) {
    if (ring_.is_unit(c[i])) {
      const int u = ring_.inv(c[i]);
      Coords r;
      for (int j = 0; j < 3; ++j) r[j] = left ? ring_.mul(u, c[j]) : ring_.mul(c[j], u);
      return r;
    }
  }
  throw std::invalid_argument("coordinate triple has no unit entry");
}

Coords Plane::normalize_line(const Coords& c) const {
  const bool left = !dual_;
  for (int i = 0; i < 3; ++i) {
    if (ring_.is_unit(c[i])) {
      const int u = ring_.inv(c[i]);
      Coords r;
      for (int j = 0; j < 3; ++j) r[j] = left ? ring_.mul(u, c[j]) : ring_.mul(c[j], u);
      return r;
    }
  }
  throw std::invalid_argument("coefficient triple has no unit entry");
}

int Plane::point_id(const Coords& c) const {
  const int n = ring_.size();
  for (int v : c)
    if (v < 0 || v >= n) return -1;
  return point_lookup_[code(c)];
}

int Plane::line_id(const Coords& c) const {
  const int n = ring_.size();
  for (int v : c)
    if (v < 0 || v >= n) return -1;
  return line_lookup_[code(c)];
}

Plane Plane::build(const Ring& ring) {
  Plane P;
  P.ring_ = ring;
  const int n = ring.size();
  P.point_lookup_.assign(n * n * n, -1);
  P.line_lookup_.assign(n * n * n, -1);
  for (int c = 0; c < n * n * n; ++c) {
    Coords v{c % n, (c / n) % n, c / (n * n)};
    if (!ring.is_unit(v[0]) && !ring.is_unit(v[1]) && !ring.is_unit(v[2])) continue;
    if (P.normalize_point(v) == v) P.point_coords_.push_back(v);
    if (P.normalize_line(v) == v) P.line_coords_.push_back(v);
  }
  auto lex = [](const Coords& a, const Coords& b) { return a < b; };
  std::sort(P.point_coords_.begin(), P.point_coords_.end(), lex);
  std::sort(P.line_coords_.begin(), P.line_coords_.end(), lex);
  const int np = P.num_points(), nl = P.num_lines();
  {
    std::map<Coords, int> pid, lid;
    for (int i = 0; i < np; ++i) pid[P.point_coords_[i]] = i;
    for (int i = 0; i < nl; ++i) lid[P.line_coords_[i]] = i;
    for (int c = 0; c < n * n * n; ++c) {
      Coords v{c % n, (c / n) % n, c / (n * n)};
      if (!ring.is_unit(v[0]) && !ring.is_unit(v[1]) && !ring.is_unit(v[2])) continue;
      P.point_lookup_[c] = pid.at(P.normalize_point(v));
      P.line_lookup_[c] = lid.at(P.normalize_line(v));
    }
  }
  P.incidence_.assign(static_cast<size_t>(np) * nl, 0);
  P.line_points_.assign(nl, {});
  for (int l = 0; l < nl; ++l) {
    const Coords& a = P.line_coords_[l];
    for (int x = 0; x < np; ++x) {
      const Coords& v = P.point_coords_[x];
      int s = ring.add(ring.add(ring.mul(a[0], v[0]), ring.mul(a[1], v[1])), ring.mul(a[2], v[2]));
      if (s == 0) {
        P.incidence_[static_cast<size_t>(l) * np + x] = 1;
        P.line_points_[l].push_back(x);
      }
    }
  }
  const ClassicalPlane pg = make_pg(ring.q());
  const FiniteField& F = classical_field(ring.q());
  auto residue_class = [&](const Coords& c) {
    Coords r{ring.residue(c[0]), ring.residue(c[1]), ring.residue(c[2])};
    return pg.point_id(normalize_pg(F, r));
  };
  for (int x = 0; x < np; ++x) P.point_class_.push_back(residue_class(P.point_coords_[x]));
  for (int l = 0; l < nl; ++l) P.line_class_.push_back(residue_class(P.line_coords_[l]));
  P.quotient_ = pg;
  P.finish();
  return P;
}

void Plane::finish() {
  const int np = num_points(), nl = num_lines(), q = ring_.q();
  point_lines_.assign(np, {});
  for (int l = 0; l < nl; ++l)
    for (int x : line_points_[l]) point_lines_[x].push_back(l);
  const int nc = quotient_.num_points();
  class_points_.assign(nc, {});
  class_lines_.assign(nc, {});
  for (int x = 0; x < np; ++x) class_points_[point_class_[x]].push_back(x);
  for (int l = 0; l < nl; ++l) class_lines_[line_class_[l]].push_back(l);
  segs_.assign(nc, {});
  seg_row_.assign(static_cast<size_t>(nc) * np, -1);
  for (int lc = 0; lc < nc; ++lc) {
    const auto& cols = quotient_.line_points[lc];
    for (int pc : cols) {
      std::vector<std::vector<int>> found;
      for (int l : class_lines_[lc]) {
        std::vector<int> seg;
        for (int x : line_points_[l])
          if (point_class_[x] == pc) seg.push_back(x);
        if (static_cast<int>(seg.size()) != q) throw std::logic_error("segment of wrong size");
        found.push_back(seg);
      }
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      if (static_cast<int>(found.size()) != q) throw std::logic_error("wrong number of parallel segments");
      for (int row = 0; row < q; ++row)
        for (int x : found[row]) seg_row_[static_cast<size_t>(lc) * np + x] = row;
      segs_[lc].push_back(std::move(found));
    }
  }
}

Plane Plane::dual() const {
  Plane D;
  D.ring_ = ring_;
  D.dual_ = !dual_;
  D.point_coords_ = line_coords_;
  D.line_coords_ = point_coords_;
  D.point_lookup_ = line_lookup_;
  D.line_lookup_ = point_lookup_;
  D.point_class_ = line_class_;
  D.line_class_ = point_class_;
  D.quotient_ = quotient_;
  const int np = num_points(), nl = num_lines();
  D.line_points_ = point_lines_;
  D.incidence_.assign(static_cast<size_t>(np) * nl, 0);
  for (int l = 0; l < np; ++l)
    for (int x : D.line_points_[l]) D.incidence_[static_cast<size_t>(l) * nl + x] = 1;
  D.finish();
  return D;
}

int Plane::line_through(int x, int y) const {
  if (neighbours(x, y)) return -1;
  for (int l : point_lines_[x])
    if (incident(y, l)) return l;
  return -1;
}

const std::vector<std::vector<int>>& Plane::segments(int lc, int pc) const {
  const auto& cols = quotient_.line_points[lc];
  auto it = std::find(cols.begin(), cols.end(), pc);
  if (it == cols.end()) throw std::invalid_argument("point class is not incident with the direction");
  return segs_[lc][it - cols.begin()];
}

std::vector<std::vector<int>> Plane::segment_grid(int lc, const Multiset& m) const {
  if (static_cast<int>(m.size()) != num_points()) throw std::invalid_argument("multiset length mismatch");
  const int q = ring_.q();
  const auto& cols = quotient_.line_points[lc];
  std::vector<std::vector<int>> grid(q, std::vector<int>(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < q; ++i)
      for (int x : segs_[lc][j][i]) grid[i][j] += m[x];
  return grid;
}

std::vector<int> Plane::class_type(int pc, const Multiset& m, int lc) const {
  if (static_cast<int>(m.size()) != num_points()) throw std::invalid_argument("multiset length mismatch");
  std::vector<int> t;
  for (const auto& seg : segments(lc, pc)) {
    int s = 0;
    for (int x : seg) s += m[x];
    t.push_back(s);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

ClassicalPlane Plane::incidence_structure() const {
  return ClassicalPlane::from_lines(q(), true, num_points(), line_points_);
}

LineClassPlane Plane::line_class_plane(int lc) const {
  const int q = ring_.q();
  LineClassPlane L;
  L.columns = quotient_.line_points[lc];
  const int ncol = static_cast<int>(L.columns.size());
  L.p_inf = q * ncol;
  L.segment.assign(L.p_inf + 1, {});
  for (int j = 0; j < ncol; ++j)
    for (int i = 0; i < q; ++i) L.segment[j * q + i] = segs_[lc][j][i];
  std::vector<std::vector<int>> lines;
  for (int l : class_lines_[lc]) {
    std::vector<int> pts;
    for (int x : line_points_[l]) {
      int j = static_cast<int>(std::find(L.columns.begin(), L.columns.end(), point_class_[x]) - L.columns.begin());
      pts.push_back(j * q + segment_row(lc, x));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    lines.push_back(pts);
    L.line.push_back(l);
  }
  for (int j = 0; j < ncol; ++j) {
    std::vector<int> pts;
    for (int i = 0; i < q; ++i) pts.push_back(j * q + i);
    pts.push_back(L.p_inf);
    L.class_line.push_back(static_cast<int>(lines.size()));
    lines.push_back(pts);
    L.line.push_back(-1);
  }
  L.plane = ClassicalPlane::from_lines(q, true, L.p_inf + 1, std::move(lines));
  return L;
}

PointClassPlane Plane::point_class_plane(int pc) const {
  PointClassPlane A;
  A.points = class_points_[pc];
  std::map<int, int> local;
  for (size_t i = 0; i < A.points.size(); ++i) local[A.points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> classes;
  for (int lc : quotient_.point_lines[pc]) {
    std::vector<int> cls;
    for (const auto& seg : segments(lc, pc)) {
      std::vector<int> pts;
      for (int x : seg) pts.push_back(local.at(x));
      cls.push_back(static_cast<int>(lines.size()));
      lines.push_back(pts);
    }
    classes.push_back(cls);
    A.directions.push_back(lc);
  }
  A.plane = ClassicalPlane::from_lines(ring_.q(), false, static_cast<int>(A.points.size()), std::move(lines));
  A.plane.parallel_classes = classes;
  return A;
}

bool Plane::invertible(const Collineation& g) const {
  const FiniteField& F = ring_.residue_field();
  std::array<std::array<int, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = ring_.residue(g.matrix[i][j]);
  auto m = [&](int a, int b) { return F.mul(a, b); };
  int d = F.sub(m(r[1][1], r[2][2]), m(r[1][2], r[2][1]));
  int det = m(r[0][0], d);
  det = F.sub(det, m(r[0][1], F.sub(m(r[1][0], r[2][2]), m(r[1][2], r[2][0]))));
  det = F.add(det, m(r[0][2], F.sub(m(r[1][0], r[2][1]), m(r[1][1], r[2][0]))));
  return det != 0;
}

int Plane::apply(const Collineation& g, int x) const {
  if (dual_) throw std::logic_error("collineations act on primal planes only");
  const Coords& v = point_coords_[x];
  Coords s{ring_.apply_auto(g.aut, v[0]), ring_.apply_auto(g.aut, v[1]), ring_.apply_auto(g.aut, v[2])};
  Coords w{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] = ring_.add(w[i], ring_.mul(g.matrix[i][j], s[j]));
  int id = point_id(w);
  if (id < 0) throw std::invalid_argument("singular collineation matrix");
  return id;
}

std::vector<int> Plane::permutation(const Collineation& g) const {
  if (!invertible(g)) throw std::invalid_argument("singular collineation matrix");
  std::vector<int> perm(num_points());
  for (int x = 0; x < num_points(); ++x) perm[x] = apply(g, x);
  return perm;
}

std::vector<int> Plane::line_permutation(const Collineation& g) const {
  auto perm = permutation(g);
  std::vector<int> out(num_lines());
  for (int l = 0; l < num_lines(); ++l) {
    const auto& pts = line_points_[l];
    int a = pts.front(), b = -1;
    for (int x : pts)
      if (!neighbours(a, x)) {
        b = x;
        break;
      }
    out[l] = line_through(perm[a], perm[b]);
  }
  return out;
}

long long Plane::order(const Collineation& g) const {
  auto perm = permutation(g);
  std::vector<char> seen(perm.size(), 0);
  long long ord = 1;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    long long len = 0;
    for (size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Plane build_plane(const Ring& ring) { return Plane::build(ring); }
Plane dualize(const Plane& plane) { return plane.dual(); }

}  // namespace phg
