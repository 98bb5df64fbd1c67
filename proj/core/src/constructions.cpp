#include "phg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "phg/classical.hpp"

namespace phg {

namespace {

using Kind = ConstructionError::Kind;

const std::map<ConstructionId, std::string>& names() {
  static const std::map<ConstructionId, std::string> m{
      {ConstructionId::LargeN, "LARGE_N"},
      {ConstructionId::Q2Minus1, "Q2_MINUS_1"},
      {ConstructionId::Q2Range, "Q2_RANGE"},
      {ConstructionId::TwoqRange, "TWOQ_RANGE"},
      {ConstructionId::Q3N7Blocking, "Q3_N7_BLOCKING"},
      {ConstructionId::Q4N8, "Q4_N8"},
      {ConstructionId::Q4N9, "Q4_N9"},
      {ConstructionId::Q4N10, "Q4_N10"},
      {ConstructionId::Q4N11, "Q4_N11"},
      {ConstructionId::Q4N12, "Q4_N12"},
      {ConstructionId::Q4N13, "Q4_N13"},
      {ConstructionId::Q5N15, "Q5_N15"},
      {ConstructionId::Q5N16, "Q5_N16"},
      {ConstructionId::Q5N17, "Q5_N17"},
      {ConstructionId::Q5N18, "Q5_N18"},
      {ConstructionId::Q5N19, "Q5_N19"},
      {ConstructionId::HyperovalGalois, "HYPEROVAL_GALOIS"},
      {ConstructionId::OvalTruncated, "OVAL_TRUNCATED"},
      {ConstructionId::DualPassant, "DUAL_PASSANT"},
      {ConstructionId::TriangleSinger, "TRIANGLE_SINGER"},
  };
  return m;
}

[[noreturn]] void fail(Kind kind, const std::string& msg) { throw ConstructionError(kind, msg); }

void require_q(const Ring& R, int q, ConstructionId id) {
  if (R.q() != q) fail(Kind::InapplicableRing, construction_name(id) + " needs q = " + std::to_string(q));
}

void require_range(int v, int lo, int hi, const std::string& what) {
  if (v < lo || v > hi)
    fail(Kind::ParameterOutOfRange,
         what + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

int meet(const ClassicalPlane& Q, int l1, int l2) {
  for (int x : Q.line_points[l1])
    if (Q.incident(x, l2)) return x;
  return -1;
}

std::vector<int> others_on(const ClassicalPlane& Q, int line, std::initializer_list<int> skip) {
  std::vector<int> out;
  for (int x : Q.line_points[line])
    if (std::find(skip.begin(), skip.end(), x) == skip.end()) out.push_back(x);
  return out;
}

// Perfect matching of points to lines with point on line (augmenting paths).
std::vector<int> incident_matching(const ClassicalPlane& Q, const std::vector<int>& pts, const std::vector<int>& lines) {
  std::vector<int> match_line(lines.size(), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (size_t j = 0; j < lines.size(); ++j) {
      if (seen[j] || !Q.incident(pts[i], lines[j])) continue;
      seen[j] = 1;
      if (match_line[j] < 0 || augment(match_line[j], seen)) {
        match_line[j] = i;
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<char> seen(lines.size(), 0);
    if (!augment(static_cast<int>(i), seen)) fail(Kind::SubObjectNotFound, "no incident perfect matching");
  }
  std::vector<int> dir(pts.size());
  for (size_t j = 0; j < lines.size(); ++j) dir[match_line[j]] = lines[j];
  return dir;
}

struct Builder {
  const Plane& P;
  const ClassicalPlane& Q;
  Skeleton sk;

  explicit Builder(const Plane& plane) : P(plane), Q(plane.quotient()) {
    sk.plan.assign(P.num_classes(), {});
    sk.fixed.assign(P.num_points(), 0);
  }
  void seg(int pc, int count, int dir) {
    if (!Q.incident(pc, dir)) throw std::logic_error("segment direction not through its class");
    sk.plan[pc] = {count, dir};
  }
  void full_class(int pc) {
    for (int x : P.class_points(pc)) sk.fixed[x] = 1;
  }
  // Points of the r x c grid formed by segments of two directions in class pc.
  void grid(int pc, int dir_a, int rows, int dir_b, int cols, std::mt19937_64* rng) {
    auto a = P.segments(dir_a, pc);
    auto b = P.segments(dir_b, pc);
    if (rng) {
      std::shuffle(a.begin(), a.end(), *rng);
      std::shuffle(b.begin(), b.end(), *rng);
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int x : a[i])
          if (std::find(b[j].begin(), b[j].end(), x) != b[j].end()) sk.fixed[x] = 1;
  }
  // Union of the segments cut out on class pc by the given lines.
  void trace(int pc, int line) {
    for (int x : P.line_points(line))
      if (P.point_class(x) == pc) sk.fixed[x] = 1;
  }
};

// Standard labelling around a point class z: L[0..q] the lines through z,
// x[0..q-1] the other classes on L[0].
struct Pencil {
  int z;
  std::vector<int> L, x;
};

Pencil pencil(const ClassicalPlane& Q, int z) {
  Pencil p;
  p.z = z;
  p.L = Q.point_lines[z];
  p.x = others_on(Q, p.L[0], {z});
  return p;
}

std::vector<int> triangle_sides(const ClassicalPlane& Q, const std::array<int, 3>& v) {
  // side i is opposite vertex i
  return {Q.line_through(v[1], v[2]), Q.line_through(v[0], v[2]), Q.line_through(v[0], v[1])};
}

// ---------------------------------------------------------------- skeletons

Skeleton large_n(const Plane& P, int s) {
  Builder b(P);
  const int L = 0;
  for (int pc : b.Q.line_points[L])
    if (s > 0) b.seg(pc, s, L);
  return b.sk;
}

Skeleton q2_minus_1(const Plane& P) {
  Builder b(P);
  const int q = P.q();
  const std::array<int, 3> x{b.Q.point_id({1, 0, 0}), b.Q.point_id({0, 1, 0}), b.Q.point_id({0, 0, 1})};
  // L[i] meets L[i+1] in x[i+2]
  const int L0 = b.Q.line_through(x[1], x[2]), L1 = b.Q.line_through(x[2], x[0]), L2 = b.Q.line_through(x[0], x[1]);
  b.full_class(x[2]);
  b.seg(x[0], 3, L1);
  b.seg(x[1], q - 1, L0);
  for (int c : others_on(b.Q, L0, {x[1], x[2]})) b.seg(c, q - 2, L0);
  for (int c : others_on(b.Q, L1, {x[2], x[0]})) b.seg(c, 2, L1);
  for (int c : others_on(b.Q, L2, {x[0], x[1]})) b.seg(c, 1, L2);
  return b.sk;
}

Skeleton q2_range(const Plane& P, int t) {
  Builder b(P);
  const int q = P.q();
  const Pencil pe = pencil(b.Q, 0);
  for (int i = 1; i <= q; ++i)
    for (int c : others_on(b.Q, pe.L[i], {pe.z})) {
      if (i <= t + 2)
        b.seg(c, q - 1, b.Q.line_through(c, pe.x[i - 1]));
      else if (q > 2)
        b.seg(c, q - 2, pe.L[i]);
    }
  for (int j = 0; j < q; ++j) {
    const int cnt = j < t + 2 ? q - 3 : q - 2;
    if (cnt > 0) b.seg(pe.x[j], cnt, pe.L[0]);
  }
  if (t > 0) b.seg(pe.z, t, pe.L[0]);
  return b.sk;
}

Skeleton twoq_range(const Plane& P, int t, std::mt19937_64* rng) {
  Builder b(P);
  const int q = P.q();
  const Pencil pe = pencil(b.Q, 0);
  for (int i = 1; i <= q; ++i)
    for (int c : others_on(b.Q, pe.L[i], {pe.z})) {
      if (i <= t + 2)
        b.seg(c, 2, b.Q.line_through(c, pe.x[i - 1]));
      else
        b.seg(c, 1, pe.L[i]);
    }
  std::vector<int> y(pe.x.begin() + std::min(q, t + 2), pe.x.end());
  if (t <= q - 5) {
    b.seg(y[0], q - 2, pe.L[0]);
    b.seg(y[1], q - 2, pe.L[0]);
    int other = -1;
    for (int l : b.Q.point_lines[y[2]])
      if (l != pe.L[0]) {
        other = l;
        break;
      }
    b.grid(y[2], pe.L[0], q - 2, other, t, rng);
  } else if (t == q - 4) {
    b.seg(y[0], q - 2, pe.L[0]);
    b.seg(y[1], q - 2, pe.L[0]);
    b.grid(pe.z, pe.L[0], q - 4, pe.L[1], q - 4, rng);
  } else if (t == q - 3) {
    b.seg(y[0], q - 2, pe.L[0]);
    if (q > 3) b.seg(pe.z, q - 3, pe.L[0]);
  } else if (q > 2) {
    b.seg(pe.z, q - 2, pe.L[0]);
  }
  return b.sk;
}

struct OvalLabels {
  std::vector<int> x, L, E;
  int y[4][4];
  int z[3][3];
};

OvalLabels q3_labels(const ClassicalPlane& Q) {
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Oval;
  auto r = find_object(Q, req);
  if (!r.points) fail(Kind::SubObjectNotFound, "no oval in PG(2,3)");
  OvalLabels o{};
  o.x = *r.points;
  std::vector<int> on(Q.num_lines(), 0);
  for (int p : o.x)
    for (int l : Q.point_lines[p]) ++on[l];
  for (int p : o.x)
    for (int l : Q.point_lines[p])
      if (on[l] == 1) o.L.push_back(l);
  for (int l = 0; l < Q.num_lines(); ++l)
    if (on[l] == 0) o.E.push_back(l);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o.y[i][j] = i == j ? -1 : meet(Q, o.L[i], o.L[j]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) o.z[i][j] = i == j ? -1 : meet(Q, o.E[i], o.E[j]);
  return o;
}

Skeleton q3_blocking(const Plane& P, bool with_internal) {
  Builder b(P);
  const OvalLabels o = q3_labels(b.Q);
  for (int i = 0; i < 4; ++i) b.seg(o.x[i], 1, o.L[i]);
  for (int i = 0; i < 3; ++i) b.seg(o.y[i][3], 2, o.L[i]);
  b.seg(o.y[0][1], 2, o.L[0]);
  b.seg(o.y[0][2], 2, o.L[2]);
  b.seg(o.y[1][2], 2, o.L[1]);
  if (with_internal) {
    b.seg(o.z[0][1], 1, o.E[0]);
    b.seg(o.z[0][2], 1, o.E[2]);
    b.seg(o.z[1][2], 1, o.E[1]);
  }
  return b.sk;
}

// Q4_N8, Q4_N9: z and a line L not through it, x_i the classes on L.
Skeleton q4_n8(const Plane& P, bool plus_l) {
  Builder b(P);
  const int z = 0;
  int L = 0;
  while (b.Q.incident(z, L)) ++L;
  for (int c = 0; c < b.Q.num_points(); ++c) {
    if (c == z) continue;
    if (b.Q.incident(c, L)) {
      if (plus_l) b.seg(c, 1, L);
    } else {
      b.seg(c, 2, b.Q.line_through(c, z));
    }
  }
  return b.sk;
}

Skeleton q4_n10(const Plane& P) {
  Builder b(P);
  const ClassicalPlane& Q = b.Q;
  const int z = 0;
  const int L0 = Q.point_lines[z][0];
  const int x0 = others_on(Q, L0, {z})[0];
  std::vector<int> diag = others_on(Q, L0, {z, x0});
  std::sort(diag.begin(), diag.end());
  std::vector<int> off;
  for (int c = 0; c < Q.num_points(); ++c)
    if (!Q.incident(c, L0)) off.push_back(c);
  std::vector<int> quad;
  const int m = static_cast<int>(off.size());
  for (int a = 0; a < m && quad.empty(); ++a)
    for (int bb = a + 1; bb < m && quad.empty(); ++bb)
      for (int c = bb + 1; c < m && quad.empty(); ++c)
        for (int d = c + 1; d < m && quad.empty(); ++d) {
          std::array<int, 4> v{off[a], off[bb], off[c], off[d]};
          bool general = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              for (int k = j + 1; k < 4; ++k)
                if (Q.incident(v[k], Q.line_through(v[i], v[j]))) general = false;
          if (!general) continue;
          std::vector<int> dp{meet(Q, Q.line_through(v[0], v[1]), Q.line_through(v[2], v[3])),
                              meet(Q, Q.line_through(v[0], v[2]), Q.line_through(v[1], v[3])),
                              meet(Q, Q.line_through(v[0], v[3]), Q.line_through(v[1], v[2]))};
          std::sort(dp.begin(), dp.end());
          if (dp == diag) quad.assign(v.begin(), v.end());
        }
  if (quad.empty()) fail(Kind::SubObjectNotFound, "no quadrangle with the prescribed diagonal points");
  for (int y : quad) b.seg(y, 2, Q.line_through(y, x0));
  for (int c = 0; c < Q.num_points(); ++c) {
    if (c == z || c == x0 || std::find(quad.begin(), quad.end(), c) != quad.end()) continue;
    b.seg(c, 2, Q.line_through(c, z));
  }
  return b.sk;
}

Skeleton q4_n11_12(const Plane& P, bool n12, uint64_t seed) {
  Builder b(P);
  const ClassicalPlane& Q = b.Q;
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Hyperoval;
  auto h = find_object(Q, req);
  if (!h.points) fail(Kind::SubObjectNotFound, "no hyperoval in PG(2,4)");
  const std::vector<int> H = *h.points;
  const int x0 = H[0];
  std::vector<int> on(Q.num_lines(), 0);
  for (int p : H)
    for (int l : Q.point_lines[p]) ++on[l];
  std::vector<int> L;
  for (int l = 0; l < Q.num_lines(); ++l)
    if (on[l] == 0) L.push_back(l);
  for (size_t i = 1; i < H.size(); ++i) b.seg(H[i], 3, Q.line_through(H[i], x0));
  // affine hyperoval inside the nucleus class
  const PointClassPlane A = P.point_class_plane(x0);
  ClassicalObjectRequest areq;
  areq.kind = ObjectKind::Arc;
  areq.k = 6;
  areq.n = 2;
  areq.seed = seed;
  auto ah = find_object(A.plane, areq);
  if (!ah.points) fail(Kind::SubObjectNotFound, "no (6,2)-arc in AG(2,4)");
  for (int p : *ah.points) b.sk.fixed[A.points[p]] = 1;
  if (!n12) {
    for (int c : Q.line_points[L[0]]) b.seg(c, 1, L[0]);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) b.seg(meet(Q, L[i], L[j]), 2, (i == 1 && j == 3) ? L[3] : L[i]);
  } else {
    for (int i = 0; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        int dir;
        if (i == 0)
          dir = L[j];
        else
          dir = ((j - i) % 5 == 1 || (j - i) % 5 == 2) ? L[i] : L[j];
        b.seg(meet(Q, L[i], L[j]), 2, dir);
      }
  }
  return b.sk;
}

std::array<int, 3> standard_triangle(const ClassicalPlane& Q) {
  return {Q.point_id({1, 0, 0}), Q.point_id({0, 1, 0}), Q.point_id({0, 0, 1})};
}

// Remaining classes and line classes off a triangle, matched by incidence.
void match_off_triangle(Builder& b, const std::array<int, 3>& v, const std::vector<int>& sides, int count) {
  const ClassicalPlane& Q = b.Q;
  std::vector<int> pts, lines;
  for (int c = 0; c < Q.num_points(); ++c) {
    bool on_side = false;
    for (int s : sides) on_side |= Q.incident(c, s);
    if (!on_side) pts.push_back(c);
  }
  for (int l = 0; l < Q.num_lines(); ++l) {
    bool through_vertex = false;
    for (int x : v) through_vertex |= Q.incident(x, l);
    if (!through_vertex) lines.push_back(l);
  }
  auto dir = incident_matching(Q, pts, lines);
  for (size_t i = 0; i < pts.size(); ++i) b.seg(pts[i], count, dir[i]);
}

Skeleton q4_n13(const Plane& P) {
  Builder b(P);
  const ClassicalPlane& Q = b.Q;
  const auto v = standard_triangle(Q);
  const auto sides = triangle_sides(Q, v);
  std::vector<int> actual;
  for (int s : sides) actual.push_back(P.class_lines(s).front());
  for (int i = 0; i < 3; ++i)
    for (int c : Q.line_points[sides[i]])
      if (std::find(v.begin(), v.end(), c) == v.end()) b.seg(c, 2, sides[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (j != i) b.trace(v[i], actual[j]);
  match_off_triangle(b, v, sides, 3);
  return b.sk;
}

Skeleton q5_n15_17(const Plane& P, int t) {
  Builder b(P);
  const Pencil pe = pencil(b.Q, 0);
  for (int i = 1; i <= 5; ++i)
    for (int c : others_on(b.Q, pe.L[i], {pe.z})) {
      if (i <= t + 2)
        b.seg(c, 3, b.Q.line_through(c, pe.x[i - 1]));
      else
        b.seg(c, 2, pe.L[i]);
    }
  const int L0 = pe.L[0];
  const auto& x = pe.x;
  if (t == 0) {
    b.seg(x[0], 1, L0);
    b.seg(x[1], 1, L0);
    for (int j = 2; j < 5; ++j) b.seg(x[j], 3, L0);
  } else if (t == 1) {
    b.seg(pe.z, 1, L0);
    for (int j = 0; j < 3; ++j) b.seg(x[j], 1, L0);
    for (int j = 3; j < 5; ++j) b.seg(x[j], 3, L0);
  } else {
    b.seg(pe.z, 2, L0);
    for (int j = 0; j < 4; ++j) b.seg(x[j], 1, L0);
    b.seg(x[4], 3, L0);
  }
  return b.sk;
}

Skeleton q5_n18_19(const Plane& P, bool n19) {
  Builder b(P);
  const ClassicalPlane& Q = b.Q;
  const auto v = standard_triangle(Q);
  const auto L = triangle_sides(Q, v);
  for (int i = 0; i < 3; ++i)
    for (int c : Q.line_points[L[i]])
      if (std::find(v.begin(), v.end(), c) == v.end()) b.seg(c, (!n19 && i == 0) ? 1 : 2, L[i]);
  for (int i = 0; i < 3; ++i) {
    if (!n19 && i != 0) continue;
    b.seg(v[i], 1, L[(i + 1) % 3]);
  }
  match_off_triangle(b, v, L, 4);
  return b.sk;
}

uint64_t mix(uint64_t seed, int attempt) {
  return attempt == 0 ? seed : std::mt19937_64(seed * 1000003ULL + attempt)();
}

Multiset complement(const Plane& P, const Multiset& m) { return complement_blocking(P, m); }

Multiset search_plane(const Plane& P, int k, int n, uint64_t seed, long long budget) {
  const ClassicalPlane I = P.incidence_structure();
  SubsetProblem prob;
  prob.lo.assign(I.num_lines(), 0);
  prob.hi.assign(I.num_lines(), n);
  prob.allowed.assign(I.num_points(), 1);
  prob.forced.assign(I.num_points(), 0);
  prob.forced[0] = 1;
  prob.k = k;
  auto r = solve_subset(I, prob, seed, budget);
  if (!r.points) fail(Kind::SubObjectNotFound, "search found no (" + std::to_string(k) + "," + std::to_string(n) + ")-arc");
  return make_multiset(P, *r.points);
}

bool is_galois_char4(const Ring& R) { return R.kind() == RingKind::Galois && R.p() == 2; }

Multiset triangle_singer(const Plane& P, const ClaimedParams& c) {
  const int p = P.ring().p();
  const Collineation s = singer_collineation(P);
  for (const AffineMap& g : affine_group(p)) {
    Multiset m(P.num_points(), 0);
    for (auto [u, v] : triangle_set(p, g)) {
      int id = P.point_id({1, p * u, p * v});
      if (id < 0) throw std::logic_error("chart point outside the plane");
      m[id] = 1;
    }
    m = orbit_closure(P, m, s);
    const ArcReport r = verify(P, m);
    if (r.is_arc(c.k, c.n)) return m;
  }
  fail(Kind::SubObjectNotFound, "no affine image of the triangle set induces the claimed arc");
}

Multiset build(const Plane& P, ConstructionId id, int t, const ClaimedParams& c, uint64_t seed) {
  const int q = P.q();
  std::mt19937_64 rng(seed);
  auto arc_from = [&](const Skeleton& sk, int bound, bool blocking) {
    auto m = realize_skeleton(P, sk, bound, blocking, seed);
    if (!m) fail(Kind::SubObjectNotFound, construction_name(id) + ": no segment arrangement found");
    return *m;
  };
  switch (id) {
    case ConstructionId::LargeN:
      return complement(P, arc_from(large_n(P, t), t, true));
    case ConstructionId::Q2Minus1:
      if (q == 2) return search_plane(P, c.k, c.n, seed, 50'000'000);
      if (q == 3) return complement(P, arc_from(q3_blocking(P, false), 4, true));
      return complement(P, arc_from(q2_minus_1(P), q + 1, true));
    case ConstructionId::Q2Range:
      if (q == 2) return search_plane(P, c.k, c.n, seed, 50'000'000);
      return arc_from(q2_range(P, t), c.n, false);
    case ConstructionId::TwoqRange:
      return arc_from(twoq_range(P, t, seed ? &rng : nullptr), c.n, false);
    case ConstructionId::Q3N7Blocking:
      return arc_from(q3_blocking(P, true), 5, true);
    case ConstructionId::Q4N8:
      return arc_from(q4_n8(P, false), c.n, false);
    case ConstructionId::Q4N9:
      return arc_from(q4_n8(P, true), c.n, false);
    case ConstructionId::Q4N10:
      return arc_from(q4_n10(P), c.n, false);
    case ConstructionId::Q4N11:
      return arc_from(q4_n11_12(P, false, seed), c.n, false);
    case ConstructionId::Q4N12:
      return arc_from(q4_n11_12(P, true, seed), c.n, false);
    case ConstructionId::Q4N13:
      return arc_from(q4_n13(P), c.n, false);
    case ConstructionId::Q5N15:
    case ConstructionId::Q5N16:
    case ConstructionId::Q5N17:
      return arc_from(q5_n15_17(P, c.n - 15), c.n, false);
    case ConstructionId::Q5N18:
      return arc_from(q5_n18_19(P, false), c.n, false);
    case ConstructionId::Q5N19:
      return arc_from(q5_n18_19(P, true), c.n, false);
    case ConstructionId::HyperovalGalois:
      return hyperoval_galois(P);
    case ConstructionId::OvalTruncated:
      return search_plane(P, c.k, c.n, seed, q <= 3 ? 200'000'000 : 20'000'000);
    case ConstructionId::DualPassant: {
      const Multiset passants = dual_passant_set(P, hyperoval_galois(P));
      Multiset m(P.num_points(), 0);
      for (int l = 0; l < P.num_lines(); ++l)
        if (passants[l]) m[P.point_id(P.line(l))] = 1;
      return m;
    }
    case ConstructionId::TriangleSinger:
      return triangle_singer(P, c);
  }
  throw std::logic_error("unhandled construction");
}

}  // namespace

const std::vector<ConstructionId>& all_constructions() {
  static const std::vector<ConstructionId> v = [] {
    std::vector<ConstructionId> out;
    for (const auto& [id, name] : names()) out.push_back(id);
    return out;
  }();
  return v;
}

std::string construction_name(ConstructionId id) { return names().at(id); }

std::optional<ConstructionId> construction_from_name(const std::string& name) {
  for (const auto& [id, n] : names())
    if (n == name) return id;
  return std::nullopt;
}

bool construction_has_param(ConstructionId id) {
  return id == ConstructionId::LargeN || id == ConstructionId::Q2Range || id == ConstructionId::TwoqRange;
}

ClaimedParams claimed_params(const Ring& R, ConstructionId id, int t) {
  const int q = R.q();
  if (!construction_has_param(id) && t != 0) fail(Kind::ParameterOutOfRange, construction_name(id) + " takes no parameter");
  switch (id) {
    case ConstructionId::LargeN: {
      require_range(t, 0, q, "s");
      const int n = q * q + q - t;
      return {q * (q + 1) * n - q * q * q, n, false};
    }
    case ConstructionId::Q2Minus1:
      return {q * q * q * q - q * q - q, q * q - 1, false};
    case ConstructionId::Q2Range: {
      require_range(t, 0, q - 2, "t");
      const int n = q * q - q + t;
      return {q * q * n - 2 * q, n, false};
    }
    case ConstructionId::TwoqRange: {
      require_range(t, 0, q - 2, "t");
      const int q2 = q * q, q3 = q2 * q;
      int k;
      if (t <= q - 5)
        k = q3 + (t + 4) * q2 + (t - 4) * q - 2 * t;
      else if (t == q - 4)
        k = 2 * q3 + q2 - 12 * q + 16;
      else if (t == q - 3)
        k = 2 * q3 + q2 - 5 * q;
      else
        k = 2 * q3 + q2 - 2 * q;
      return {k, 2 * q + t, false};
    }
    case ConstructionId::Q3N7Blocking:
      require_q(R, 3, id);
      return {57, 5, true};
    case ConstructionId::Q4N8:
      require_q(R, 4, id);
      return {120, 8, false};
    case ConstructionId::Q4N9:
      require_q(R, 4, id);
      return {140, 9, false};
    case ConstructionId::Q4N10:
      require_q(R, 4, id);
      return {152, 10, false};
    case ConstructionId::Q4N11:
      require_q(R, 4, id);
      return {166, 11, false};
    case ConstructionId::Q4N12:
      require_q(R, 4, id);
      return {186, 12, false};
    case ConstructionId::Q4N13:
      require_q(R, 4, id);
      return {201, 13, false};
    case ConstructionId::Q5N15:
      require_q(R, 5, id);
      return {355, 15, false};
    case ConstructionId::Q5N16:
      require_q(R, 5, id);
      return {375, 16, false};
    case ConstructionId::Q5N17:
      require_q(R, 5, id);
      return {395, 17, false};
    case ConstructionId::Q5N18:
      require_q(R, 5, id);
      return {425, 18, false};
    case ConstructionId::Q5N19:
      require_q(R, 5, id);
      return {455, 19, false};
    case ConstructionId::HyperovalGalois:
      if (!is_galois_char4(R)) fail(Kind::InapplicableRing, "HYPEROVAL_GALOIS needs a Galois ring of characteristic 4");
      return {q * q + q + 1, 2, false};
    case ConstructionId::OvalTruncated:
      if (R.kind() != RingKind::Truncated) fail(Kind::InapplicableRing, "OVAL_TRUNCATED needs a truncated ring");
      return {q * q, 2, false};
    case ConstructionId::DualPassant:
      if (!is_galois_char4(R)) fail(Kind::InapplicableRing, "DUAL_PASSANT needs a Galois ring of characteristic 4");
      return {(q * q * q * q - q) / 2, q * q / 2, false};
    case ConstructionId::TriangleSinger: {
      const int p = R.p();
      if (R.kind() != RingKind::Galois || R.r() != 1 || p == 2)
        fail(Kind::InapplicableRing, "TRIANGLE_SINGER needs Z_{p^2} with p odd");
      return {(p * p * p * p - p) / 2, (p * p + p) / 2 - 1, false};
    }
  }
  throw std::logic_error("unhandled construction");
}

std::vector<int> parameter_range(const Ring& R, ConstructionId id) {
  const int q = R.q();
  std::vector<int> out;
  switch (id) {
    case ConstructionId::LargeN:
      for (int s = 0; s <= q; ++s) out.push_back(s);
      break;
    case ConstructionId::Q2Range:
    case ConstructionId::TwoqRange:
      for (int t = 0; t <= q - 2; ++t) out.push_back(t);
      break;
    default:
      out.push_back(0);
  }
  return out;
}

std::optional<Multiset> realize_skeleton(const Plane& P, const Skeleton& sk, int bound, bool blocking, uint64_t seed) {
  const ClassicalPlane& Q = P.quotient();
  const int q = P.q(), nc = P.num_classes();
  if (static_cast<int>(sk.plan.size()) != nc) throw std::invalid_argument("skeleton plan must cover every class");
  Multiset m = sk.fixed.empty() ? Multiset(P.num_points(), 0) : sk.fixed;
  const std::vector<int> E = line_multiplicities(P, m);
  for (int lc = 0; lc < nc; ++lc) {
    const auto& cols = Q.line_points[lc];
    int base = 0, k = 0;
    for (int pc : cols) {
      const SegmentPlan& sp = sk.plan[pc];
      if (sp.count == 0) continue;
      if (sp.direction == lc)
        k += sp.count;
      else
        base += sp.count;
    }
    if (k == 0) continue;
    const LineClassPlane L = P.line_class_plane(lc);
    const int np = L.plane.num_points(), nl = L.plane.num_lines();
    SubsetProblem prob;
    prob.lo.assign(nl, 0);
    prob.hi.assign(nl, np);
    prob.allowed.assign(np, 1);
    prob.forced.assign(np, 0);
    prob.allowed[L.p_inf] = 0;
    prob.k = k;
    for (size_t j = 0; j < cols.size(); ++j) {
      const SegmentPlan& sp = sk.plan[cols[j]];
      const int c = sp.direction == lc ? sp.count : 0;
      prob.lo[L.class_line[j]] = prob.hi[L.class_line[j]] = c;
    }
    bool possible = true;
    for (int i = 0; i < nl; ++i) {
      if (L.line[i] < 0) continue;
      const int b = base + E[L.line[i]];
      if (blocking) {
        const int need = bound - b;
        prob.lo[i] = need <= 0 ? 0 : (need + q - 1) / q;
      } else {
        if (b > bound) possible = false;
        prob.hi[i] = b > bound ? 0 : (bound - b) / q;
      }
    }
    if (!possible) return std::nullopt;
    std::optional<std::vector<int>> pts;
    for (int attempt = 0; attempt < 6 && !pts; ++attempt)
      pts = solve_subset(L.plane, prob, mix(seed + lc, attempt), 5'000'000).points;
    if (!pts) return std::nullopt;
    for (int pt : *pts)
      for (int x : L.segment[pt]) ++m[x];
  }
  return m;
}

Construction construct(const Plane& P, ConstructionId id, int param, uint64_t seed) {
  Construction out;
  out.id = id;
  out.param = param;
  out.claimed = claimed_params(P.ring(), id, param);
  const ClaimedParams& c = out.claimed;
  std::string last = "no attempt";
  for (int attempt = 0; attempt < 8; ++attempt) {
    Multiset m;
    try {
      m = build(P, id, param, c, mix(seed, attempt));
    } catch (const ConstructionError& e) {
      if (e.kind() != Kind::SubObjectNotFound) throw;
      last = e.what();
      continue;
    }
    const ArcReport r = verify(P, m);
    const bool ok = c.blocking ? r.is_blocking(c.k, c.n) : r.is_arc(c.k, c.n);
    if (ok) {
      out.points = std::move(m);
      out.report = r;
      return out;
    }
    last = construction_name(id) + ": output verified as k=" + std::to_string(r.k) +
           " n_max=" + std::to_string(r.n_max) + " n_min=" + std::to_string(r.n_min);
    if (id == ConstructionId::HyperovalGalois || id == ConstructionId::DualPassant ||
        id == ConstructionId::TriangleSinger)
      fail(Kind::VerificationFailed, last);
  }
  fail(Kind::SubObjectNotFound, last);
}

Collineation singer_collineation(const Plane& P) {
  if (P.ring().kind() != RingKind::Galois) fail(Kind::InapplicableRing, "Singer collineations need a Galois ring");
  const ExtensionRing X = extend_ring(P.ring());
  Collineation g;
  g.matrix = X.theta_matrix();
  return g;
}

Multiset hyperoval_galois(const Plane& P) {
  if (!is_galois_char4(P.ring())) fail(Kind::InapplicableRing, "hyperovals need a Galois ring of characteristic 4");
  const Collineation g = singer_collineation(P);
  Multiset m(P.num_points(), 0);
  int x = P.point_id({1, 0, 0});
  while (!m[x]) {
    m[x] = 1;
    x = P.apply(g, x);
  }
  const ArcReport r = verify(P, m);
  if (r.n_max != 2) fail(Kind::VerificationFailed, "Teichmueller orbit is not a hyperoval");
  return m;
}

}  // namespace phg
