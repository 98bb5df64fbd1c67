#include "phg/classical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace phg {

bool ClassicalPlane::incident(int point, int line) const {
  const auto& pts = line_points[line];
  return std::find(pts.begin(), pts.end(), point) != pts.end();
}

int ClassicalPlane::line_through(int a, int b) const {
  for (int l : point_lines[a])
    if (incident(b, l)) return l;
  return -1;
}

int ClassicalPlane::point_id(const std::array<int, 3>& c) const {
  auto it = std::find(coords.begin(), coords.end(), c);
  return it == coords.end() ? -1 : static_cast<int>(it - coords.begin());
}

ClassicalPlane ClassicalPlane::from_lines(int q, bool projective, int num_points, std::vector<std::vector<int>> lines) {
  ClassicalPlane P;
  P.q = q;
  P.projective = projective;
  P.line_points = std::move(lines);
  P.point_lines.assign(num_points, {});
  for (int l = 0; l < P.num_lines(); ++l) {
    std::sort(P.line_points[l].begin(), P.line_points[l].end());
    for (int x : P.line_points[l]) P.point_lines[x].push_back(l);
  }
  return P;
}

const FiniteField& classical_field(int q) {
  static const FiniteField f2 = FiniteField::standard(2), f3 = FiniteField::standard(3),
                           f4 = FiniteField::standard(4), f5 = FiniteField::standard(5);
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    default: throw std::invalid_argument("classical planes need q <= 5");
  }
}

std::array<int, 3> normalize_pg(const FiniteField& F, std::array<int, 3> c) {
  for (int i = 0; i < 3; ++i) {
    if (c[i] != 0) {
      int inv = F.inv(c[i]);
      for (int j = 0; j < 3; ++j) c[j] = F.mul(c[j], inv);
      return c;
    }
  }
  throw std::invalid_argument("zero vector is not a projective point");
}

ClassicalPlane make_pg(int q) {
  const FiniteField& F = classical_field(q);
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        if (v == std::array<int, 3>{0, 0, 0}) continue;
        if (normalize_pg(F, v) == v) pts.push_back(v);
      }
  std::vector<std::vector<int>> lines;
  for (const auto& a : pts) {
    std::vector<int> on;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const auto& x = pts[i];
      int s = F.add(F.add(F.mul(a[0], x[0]), F.mul(a[1], x[1])), F.mul(a[2], x[2]));
      if (s == 0) on.push_back(i);
    }
    lines.push_back(on);
  }
  auto P = ClassicalPlane::from_lines(q, true, static_cast<int>(pts.size()), std::move(lines));
  P.coords = pts;
  return P;
}

ClassicalPlane make_ag(int q) {
  ClassicalPlane pg = make_pg(q);
  int inf_line = -1;
  for (int l = 0; l < pg.num_lines(); ++l) {
    bool all = true;
    for (int x : pg.line_points[l])
      if (pg.coords[x][0] != 0) all = false;
    if (all) inf_line = l;
  }
  std::vector<int> to_aff(pg.num_points(), -1), pg_point;
  for (int x = 0; x < pg.num_points(); ++x) {
    if (pg.coords[x][0] != 0) {
      to_aff[x] = static_cast<int>(pg_point.size());
      pg_point.push_back(x);
    }
  }
  std::vector<std::vector<int>> lines;
  std::vector<int> pg_line;
  std::map<int, std::vector<int>> by_inf_point;
  for (int l = 0; l < pg.num_lines(); ++l) {
    if (l == inf_line) continue;
    std::vector<int> on;
    int at_inf = -1;
    for (int x : pg.line_points[l]) {
      if (to_aff[x] >= 0) on.push_back(to_aff[x]);
      else at_inf = x;
    }
    by_inf_point[at_inf].push_back(static_cast<int>(lines.size()));
    lines.push_back(on);
    pg_line.push_back(l);
  }
  auto A = ClassicalPlane::from_lines(q, false, static_cast<int>(pg_point.size()), std::move(lines));
  for (int x : pg_point) A.coords.push_back(pg.coords[x]);
  A.pg_point = pg_point;
  A.pg_line = pg_line;
  A.infinite_line = inf_line;
  for (auto& [pt, ls] : by_inf_point) A.parallel_classes.push_back(ls);
  return A;
}

// --------------------------------------------------------------- subset search

namespace {

std::vector<int> symmetry_prefix(const ClassicalPlane& P) {
  if (P.coords.empty()) return {};
  if (P.projective) {
    return {P.point_id({1, 0, 0}), P.point_id({0, 1, 0}), P.point_id({0, 0, 1}), P.point_id({1, 1, 1})};
  }
  return {P.point_id({1, 0, 0}), P.point_id({1, 1, 0}), P.point_id({1, 0, 1})};
}


struct SubsetSearch {
  const ClassicalPlane& P;
  const SubsetProblem& prob;
  std::vector<int> order;
  std::vector<int> cnt, rem;
  std::vector<int> chosen;
  int undecided = 0;
  long long nodes = 0, budget;
  bool out_of_budget = false;

  SubsetSearch(const ClassicalPlane& plane, const SubsetProblem& pr, uint64_t seed, long long b)
      : P(plane), prob(pr), budget(b) {
    const int np = P.num_points();
    std::vector<int> forced, free;
    for (int x = 0; x < np; ++x) {
      if (!prob.allowed[x]) continue;
      (prob.forced[x] ? forced : free).push_back(x);
    }
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(free.begin(), free.end(), rng);
    }
    order = forced;
    order.insert(order.end(), free.begin(), free.end());
    cnt.assign(P.num_lines(), 0);
    rem.assign(P.num_lines(), 0);
    for (int x : order)
      for (int l : P.point_lines[x]) ++rem[l];
    undecided = static_cast<int>(order.size());
  }

  bool feasible_start() const {
    for (int l = 0; l < P.num_lines(); ++l)
      if (rem[l] < prob.lo[l]) return false;
    return true;
  }

  bool run(size_t i) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    const int have = static_cast<int>(chosen.size());
    if (have == prob.k) {
      for (int l = 0; l < P.num_lines(); ++l)
        if (cnt[l] < prob.lo[l]) return false;
      return true;
    }
    if (have + undecided < prob.k || i >= order.size()) return false;
    const int x = order[i];
    bool can_in = true;
    for (int l : P.point_lines[x])
      if (cnt[l] + 1 > prob.hi[l]) can_in = false;
    --undecided;
    if (can_in) {
      chosen.push_back(x);
      for (int l : P.point_lines[x]) {
        ++cnt[l];
        --rem[l];
      }
      if (run(i + 1)) return true;
      for (int l : P.point_lines[x]) {
        --cnt[l];
        ++rem[l];
      }
      chosen.pop_back();
      if (out_of_budget) {
        ++undecided;
        return false;
      }
    }
    if (!prob.forced[x]) {
      bool can_out = true;
      for (int l : P.point_lines[x])
        if (cnt[l] + rem[l] - 1 < prob.lo[l]) can_out = false;
      if (can_out) {
        for (int l : P.point_lines[x]) --rem[l];
        bool ok = run(i + 1);
        for (int l : P.point_lines[x]) ++rem[l];
        if (ok) return true;
      }
    }
    ++undecided;
    return false;
  }
};

}  // namespace

FindResult solve_subset(const ClassicalPlane& plane, const SubsetProblem& prob, uint64_t seed, long long node_budget) {
  FindResult res;
  SubsetSearch s(plane, prob, seed, node_budget);
  if (!s.feasible_start()) return res;
  bool ok = s.run(0);
  res.nodes = s.nodes;
  res.exhausted = !s.out_of_budget;
  if (ok) {
    auto pts = s.chosen;
    std::sort(pts.begin(), pts.end());
    res.points = pts;
  }
  return res;
}

FindResult find_object(const ClassicalPlane& P, const ClassicalObjectRequest& req) {
  const int np = P.num_points(), nl = P.num_lines();
  SubsetProblem prob;
  prob.lo.assign(nl, 0);
  prob.hi.assign(nl, np);
  prob.allowed.assign(np, 1);
  prob.forced.assign(np, 0);
  switch (req.kind) {
    case ObjectKind::Arc:
      prob.k = req.k;
      prob.hi.assign(nl, req.n);
      break;
    case ObjectKind::Blocking:
      prob.k = req.k;
      prob.lo.assign(nl, req.s);
      break;
    case ObjectKind::Hyperoval:
      if (P.q % 2 != 0) return {};
      prob.k = P.q + 2;
      prob.hi.assign(nl, 2);
      break;
    case ObjectKind::Oval:
      prob.k = P.q + 1;
      prob.hi.assign(nl, 2);
      break;
    case ObjectKind::Grid: {
      if (P.projective || P.parallel_classes.size() < 2) throw std::invalid_argument("grids live in AG(2,q)");
      // r lines of the first parallel class times s lines of the second.
      std::vector<int> pts;
      const auto& A = P.parallel_classes[0];
      const auto& B = P.parallel_classes[1];
      if (req.grid_r > static_cast<int>(A.size()) || req.grid_s > static_cast<int>(B.size())) return {};
      for (int i = 0; i < req.grid_r; ++i)
        for (int j = 0; j < req.grid_s; ++j)
          for (int x : P.line_points[A[i]])
            if (P.incident(x, B[j])) pts.push_back(x);
      std::sort(pts.begin(), pts.end());
      FindResult r;
      r.points = pts;
      return r;
    }
  }
  for (int x : req.avoid_points) prob.allowed[x] = 0;
  for (int x : req.require_points) prob.forced[x] = 1;
  for (int l : req.avoid_lines)
    for (int x : P.line_points[l]) prob.allowed[x] = 0;
  for (const auto& b : req.line_bounds) {
    prob.lo[b.line] = std::max(prob.lo[b.line], b.lo);
    prob.hi[b.line] = std::min(prob.hi[b.line], b.hi);
  }
  for (int x = 0; x < np; ++x)
    if (prob.forced[x] && !prob.allowed[x]) return {};
  // An unconstrained n-arc with more than n+1 (projective) or n (affine)
  // points contains a frame resp. a triangle; fixing it loses nothing.
  const bool unconstrained = req.avoid_points.empty() && req.require_points.empty() && req.avoid_lines.empty() &&
                             req.line_bounds.empty() && req.seed == 0;
  if (req.kind == ObjectKind::Arc && unconstrained && req.k > (P.projective ? req.n + 1 : req.n)) {
    for (int x : symmetry_prefix(P)) prob.forced[x] = 1;
  }
  auto res = solve_subset(P, prob, req.seed, req.node_budget);
  if (res.points) {
    // self-check
    std::vector<int> c(nl, 0);
    for (int x : *res.points)
      for (int l : P.point_lines[x]) ++c[l];
    for (int l = 0; l < nl; ++l)
      if (c[l] < prob.lo[l] || c[l] > prob.hi[l]) throw std::logic_error("find_object self-check failed");
    if (static_cast<int>(res.points->size()) != prob.k) throw std::logic_error("find_object size mismatch");
  }
  return res;
}

// ------------------------------------------------------------- max arc search

namespace {

struct MaxArc {
  const ClassicalPlane& P;
  int n;
  std::vector<int> cnt, chosen, best;
  std::vector<char> state;  // 0 undecided, 1 in, 2 out
  std::function<bool(const MaxArc&)> reject;
  long long nodes = 0, budget;
  bool out_of_budget = false;

  MaxArc(const ClassicalPlane& p, int n_, long long b) : P(p), n(n_), budget(b) {
    cnt.assign(P.num_lines(), 0);
    state.assign(P.num_points(), 0);
  }

  bool addable(int x) const {
    for (int l : P.point_lines[x])
      if (cnt[l] >= n) return false;
    return true;
  }

  int bound() const {
    const int nl = P.num_lines();
    std::vector<int> avail(nl, 0);
    int total = 0;
    for (int x = 0; x < P.num_points(); ++x) {
      if (state[x] != 0 || !addable(x)) continue;
      ++total;
      for (int l : P.point_lines[x]) ++avail[l];
    }
    int b = static_cast<int>(chosen.size()) + total;
    if (!P.projective) return b;
    for (int x = 0; x < P.num_points(); ++x) {
      int s = state[x] == 1 ? 1 : 0;
      int t = s;
      for (int l : P.point_lines[x]) {
        int on = std::min(n, cnt[l] + avail[l] - (state[x] == 0 && addable(x) ? 1 : 0));
        t += on - s;
      }
      if (state[x] == 0 && addable(x)) t += 1;
      b = std::min(b, t);
    }
    return b;
  }

  void run(int i) {
    if (++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (chosen.size() > best.size()) best = chosen;
    if (i >= P.num_points()) return;
    if (bound() <= static_cast<int>(best.size())) return;
    if (state[i] != 0) {
      run(i + 1);
      return;
    }
    if (addable(i)) {
      state[i] = 1;
      chosen.push_back(i);
      for (int l : P.point_lines[i]) ++cnt[l];
      if (!reject || !reject(*this)) run(i + 1);
      for (int l : P.point_lines[i]) --cnt[l];
      chosen.pop_back();
      if (out_of_budget) {
        state[i] = 0;
        return;
      }
    }
    state[i] = 2;
    run(i + 1);
    state[i] = 0;
  }

  bool force(const std::vector<int>& pts) {
    for (int x : pts) {
      if (!addable(x)) return false;
      state[x] = 1;
      chosen.push_back(x);
      for (int l : P.point_lines[x]) ++cnt[l];
    }
    return true;
  }
};

}  // namespace

MaxArcResult max_arc_exhaustive(const ClassicalPlane& P, int n, long long node_budget) {
  MaxArcResult res;
  auto prefix = symmetry_prefix(P);
  // Any arc with more than n+1 points (projective) resp. n points (affine)
  // contains a frame resp. a triangle, so the prefix can be fixed.
  const int threshold = P.projective ? n + 1 : n;
  if (!prefix.empty()) {
    MaxArc s(P, n, node_budget);
    if (s.force(prefix)) {
      s.best = s.chosen;
      s.run(0);
      res.nodes += s.nodes;
      if (s.out_of_budget) res.exact = false;
      if (static_cast<int>(s.best.size()) > threshold) {
        res.value = static_cast<int>(s.best.size());
        res.witness = s.best;
        std::sort(res.witness.begin(), res.witness.end());
        return res;
      }
    }
  }
  MaxArc s(P, n, node_budget);
  s.run(0);
  res.nodes += s.nodes;
  if (s.out_of_budget) res.exact = false;
  res.value = static_cast<int>(s.best.size());
  res.witness = s.best;
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

// ------------------------------------------------------------------- census

std::map<std::string, int> line_type_census(const ClassicalPlane& P, const std::vector<int>& mult) {
  std::map<std::string, int> out;
  for (const auto& pts : P.line_points) {
    std::vector<int> m;
    for (int x : pts) m.push_back(mult[x]);
    std::sort(m.rbegin(), m.rend());
    std::string key;
    for (int v : m) key += std::to_string(v);
    ++out[key];
  }
  return out;
}

// ------------------------------------------------------------ triangle sets

std::vector<std::array<int, 2>> triangle_set(int p, const AffineMap& g) {
  if (p != 3 && p != 5) throw std::invalid_argument("triangle sets need an odd prime p <= 5");
  std::vector<std::array<int, 2>> out;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if (x + y < p - 1) out.push_back({((g.a * x + g.b * y + g.e) % p + p) % p, ((g.c * x + g.d * y + g.f) % p + p) % p});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineMap> affine_group(int p) {
  std::vector<AffineMap> out;
  for (int e = 0; e < p; ++e)
    for (int f = 0; f < p; ++f)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          for (int c = 0; c < p; ++c)
            for (int d = 0; d < p; ++d)
              if (((a * d - b * c) % p + p) % p != 0) out.push_back({a, b, c, d, e, f});
  // identity first
  std::stable_partition(out.begin(), out.end(), [](const AffineMap& m) {
    return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1 && m.e == 0 && m.f == 0;
  });
  return out;
}

// ------------------------------------------------------------ stored tables

TableValue classical_max_arc(int q, int n) {
  if (q < 2 || q > 5 || n < 0 || n > q + 1) throw std::out_of_range("classical_max_arc: q <= 5, 0 <= n <= q+1");
  if (n == 0) return {0, "trivial"};
  if (n == 1) return {1, "trivial"};
  if (n == q + 1) return {q * q + q + 1, "trivial: whole plane"};
  static const std::map<std::pair<int, int>, TableValue> table{
      {{2, 2}, {4, "hyperoval of PG(2,2); exhaustive search certificate"}},
      {{3, 2}, {4, "oval of PG(2,3); exhaustive search certificate"}},
      {{3, 3}, {9, "exhaustive search certificate"}},
      {{4, 2}, {6, "hyperoval of PG(2,4); exhaustive search certificate"}},
      {{4, 3}, {9, "quoted: \"since m_3(4)=9\"; exhaustive search certificate"}},
      {{4, 4}, {16, "complement of a line; exhaustive search certificate"}},
      {{5, 2}, {6, "oval of PG(2,5); exhaustive search certificate"}},
      {{5, 3}, {11, "quoted: \"using m_3(5)=11\"; exhaustive search certificate"}},
      {{5, 4}, {16, "quoted: \"together with m_4(5)=16\"; exhaustive search certificate"}},
      {{5, 5}, {25, "complement of a line; exhaustive search certificate"}},
  };
  return table.at({q, n});
}

TableValue classical_max_affine_arc(int q, int n) {
  if (q < 2 || q > 5 || n < 0 || n > q) throw std::out_of_range("classical_max_affine_arc: q <= 5, 0 <= n <= q");
  if (n == 0) return {0, "trivial"};
  if (n == 1) return {1, "trivial"};
  if (n == q) return {q * q, "trivial: whole plane"};
  static const std::map<std::pair<int, int>, TableValue> table{
      {{3, 2}, {4, "exhaustive search certificate"}},
      {{4, 2}, {6, "hyperoval disjoint from a line; exhaustive search certificate"}},
      {{4, 3}, {9, "exhaustive search certificate"}},
      {{5, 2}, {6, "oval with a passant; exhaustive search certificate"}},
      {{5, 3}, {11, "quoted: \"maximum number of points on a (k,3)-arc in AG(2,5) is 11\"; exhaustive search certificate"}},
      {{5, 4}, {16, "exhaustive search certificate"}},
  };
  return table.at({q, n});
}

// ------------------------------------------------- (22,6) and (27,7) arcs

namespace {

int meet(const ClassicalPlane& P, int l1, int l2) {
  for (int x : P.line_points[l1])
    if (P.incident(x, l2)) return x;
  return -1;
}

std::vector<int> first_hyperoval(const ClassicalPlane& P) {
  ClassicalObjectRequest req;
  req.kind = ObjectKind::Hyperoval;
  auto r = find_object(P, req);
  if (!r.points) throw std::logic_error("no hyperoval");
  return *r.points;
}

}  // namespace

std::vector<int> classical_22_6(const std::string& name) {
  const ClassicalPlane P = make_pg(4);
  std::vector<int> m(P.num_points(), 1);
  const auto& l0 = P.line_points[0];
  if (name == "1L" || name == "2L" || name == "3L") {
    int D = name[0] - '0';
    for (int i = 0; i < D; ++i) m[l0[i]] = 2;
    for (int i = D; i < 2 * D - 1; ++i) m[l0[i]] = 0;
  } else if (name == "Q") {
    int a = P.point_id({1, 0, 0}), b = P.point_id({0, 1, 0}), c = P.point_id({0, 0, 1}), d = P.point_id({1, 1, 1});
    for (int x : {a, b, c, d}) m[x] = 2;
    int d1 = meet(P, P.line_through(a, b), P.line_through(c, d));
    int d2 = meet(P, P.line_through(a, c), P.line_through(b, d));
    int d3 = meet(P, P.line_through(a, d), P.line_through(b, c));
    for (int x : {d1, d2, d3}) m[x] = 0;
  } else if (name == "H") {
    auto H = first_hyperoval(P);
    for (int x : H) m[x] = 2;
    for (int l = 0; l < P.num_lines(); ++l) {
      bool passant = true;
      for (int x : P.line_points[l])
        if (m[x] == 2) passant = false;
      if (passant) {
        for (int x : P.line_points[l]) m[x] = 0;
        break;
      }
    }
  } else if (name == "DA") {
    // four lines in general position: a hyperoval in the dual plane
    std::vector<int> lines;
    for (int a = 0; a < P.num_lines() && lines.empty(); ++a)
      for (int b = a + 1; b < P.num_lines() && lines.empty(); ++b)
        for (int c = b + 1; c < P.num_lines() && lines.empty(); ++c) {
          if (meet(P, a, b) == meet(P, a, c)) continue;
          for (int d = c + 1; d < P.num_lines(); ++d) {
            int ab = meet(P, a, b), ac = meet(P, a, c), ad = meet(P, a, d), bc = meet(P, b, c), bd = meet(P, b, d),
                cd = meet(P, c, d);
            if (ab == ad || ac == ad || bc == bd || ab == ac || bc == cd || bd == cd) continue;
            lines = {a, b, c, d};
            break;
          }
        }
    std::vector<int> on(P.num_points(), 0);
    for (int l : lines)
      for (int x : P.line_points[l]) ++on[x];
    for (int x = 0; x < P.num_points(); ++x) m[x] = on[x] == 0 ? 2 : (on[x] == 1 ? 1 : 0);
  } else {
    throw std::invalid_argument("unknown (22,6)-arc " + name);
  }
  return m;
}

std::vector<int> classical_27_7(const std::string& name) {
  const ClassicalPlane P = make_pg(4);
  std::vector<int> m(P.num_points(), 1);
  if (name == "H") {
    for (int x : first_hyperoval(P)) m[x] = 2;
  } else if (name == "DA") {
    int a = P.point_id({1, 0, 0}), b = P.point_id({0, 1, 0}), c = P.point_id({0, 0, 1});
    std::vector<int> on(P.num_points(), 0);
    for (int l : {P.line_through(a, b), P.line_through(a, c), P.line_through(b, c)})
      for (int x : P.line_points[l]) ++on[x];
    for (int x = 0; x < P.num_points(); ++x) m[x] = on[x] == 0 ? 2 : (on[x] == 1 ? 1 : 0);
  } else {
    throw std::invalid_argument("unknown (27,7)-arc " + name);
  }
  return m;
}

// ------------------------------------------------------------ lemma checks

int lemma_double_points_max(int D) {
  const ClassicalPlane P = make_pg(4);
  const int np = P.num_points(), nl = P.num_lines();
  int best = -1;
  std::vector<int> S, cntS(nl, 0);
  std::function<void(int)> pick = [&](int start) {
    if (static_cast<int>(S.size()) == D) {
      // maximise the number of single points
      std::vector<int> cand;
      for (int x = 0; x < np; ++x) {
        if (std::find(S.begin(), S.end(), x) != S.end()) continue;
        bool ok = true;
        for (int l : P.point_lines[x])
          if (2 * cntS[l] + 1 > 6) ok = false;
        if (ok) cand.push_back(x);
      }
      std::vector<int> cnt(nl, 0);
      int bestT = 0;
      std::function<void(size_t, int)> grow = [&](size_t i, int t) {
        bestT = std::max(bestT, t);
        if (t + static_cast<int>(cand.size() - i) <= bestT) return;
        for (size_t j = i; j < cand.size(); ++j) {
          int x = cand[j];
          bool ok = true;
          for (int l : P.point_lines[x])
            if (2 * cntS[l] + cnt[l] + 1 > 6) ok = false;
          if (!ok) continue;
          for (int l : P.point_lines[x]) ++cnt[l];
          grow(j + 1, t + 1);
          for (int l : P.point_lines[x]) --cnt[l];
        }
      };
      grow(0, 0);
      best = std::max(best, 2 * D + bestT);
      return;
    }
    for (int x = start; x < np; ++x) {
      bool ok = true;
      for (int l : P.point_lines[x])
        if (2 * (cntS[l] + 1) > 6) ok = false;
      if (!ok) continue;
      S.push_back(x);
      for (int l : P.point_lines[x]) ++cntS[l];
      pick(x + 1);
      for (int l : P.point_lines[x]) --cntS[l];
      S.pop_back();
    }
  };
  pick(0);
  return best;
}

int lemma_concurrent_four_lines_max() {
  const ClassicalPlane P = make_pg(5);
  MaxArc s(P, 4, 2'000'000'000);
  s.reject = [&P](const MaxArc& m) {
    std::vector<int> common;
    bool first = true;
    for (int l = 0; l < P.num_lines(); ++l) {
      if (m.cnt[l] < 4) continue;
      if (first) {
        common = P.line_points[l];
        first = false;
      } else {
        std::vector<int> nxt;
        for (int x : common)
          if (P.incident(x, l)) nxt.push_back(x);
        common = nxt;
        if (common.empty()) return true;
      }
    }
    return false;
  };
  auto prefix = symmetry_prefix(P);
  s.force(prefix);
  s.best = s.chosen;
  s.run(0);
  return static_cast<int>(s.best.size());
}

}  // namespace phg
