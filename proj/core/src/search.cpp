#include "phg/search.hpp"

#include <array>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "phg/classical.hpp"

namespace phg {

namespace {

using Clock = std::chrono::steady_clock;

double log_choose(int n, int k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// P(X <= m) for X hypergeometric: r draws from N items, f of them marked.
double hypergeometric_cdf(int N, int f, int r, int m) {
  if (m < 0) return 0.0;
  if (m >= std::min(f, r)) return 1.0;
  const double total = log_choose(N, r);
  double s = 0.0;
  for (int j = std::max(0, r - (N - f)); j <= m; ++j) s += std::exp(log_choose(f, j) + log_choose(N - f, r - j) - total);
  return std::min(1.0, s);
}

// Arc state for projective searches.
struct ArcState {
  const Plane& P;
  int n;
  Multiset m;
  std::vector<int> cnt;
  int k = 0;

  ArcState(const Plane& plane, int n_, const Multiset& start) : P(plane), n(n_) {
    m = start.empty() ? Multiset(P.num_points(), 0) : start;
    cnt = line_multiplicities(P, m);
    for (int v : m) k += v;
  }
  bool addable(int x) const {
    if (m[x]) return false;
    for (int l : P.point_lines(x))
      if (cnt[l] >= n) return false;
    return true;
  }
  void add(int x) {
    ++m[x];
    ++k;
    for (int l : P.point_lines(x)) ++cnt[l];
  }
  void remove(int x) {
    --m[x];
    --k;
    for (int l : P.point_lines(x)) --cnt[l];
  }
  std::vector<int> addable_points() const {
    std::vector<int> out;
    for (int x = 0; x < P.num_points(); ++x)
      if (addable(x)) out.push_back(x);
    return out;
  }
};

double score_in(const ArcState& s, const std::vector<char>& free, int nfree, int x, int target) {
  const int r = target - s.k - 1;
  if (r <= 0) return 1.0;
  const int N = nfree - 1;
  if (r > N) return 0.0;
  double p = 1.0;
  for (int l : s.P.point_lines(x)) {
    int f = 0;
    for (int y : s.P.line_points(l))
      if (y != x && free[y]) ++f;
    p *= hypergeometric_cdf(N, f, r, s.n - s.cnt[l] - 1);
  }
  return p;
}

// Isomorphism invariant: line spectrum, sorted per-point line-type sums and
// sorted line-class multiplicities.
std::vector<int> invariant(const ArcState& s) {
  std::vector<int> inv(s.n + 1, 0);
  for (int c : s.cnt) ++inv[c];
  std::vector<int> pts;
  for (int x = 0; x < s.P.num_points(); ++x)
    if (s.m[x]) {
      int t = 0;
      for (int l : s.P.point_lines(x)) t += s.cnt[l] * s.cnt[l];
      pts.push_back(t);
    }
  std::sort(pts.begin(), pts.end());
  inv.push_back(-1);
  inv.insert(inv.end(), pts.begin(), pts.end());
  std::vector<int> cls(s.P.num_classes(), 0);
  for (int x = 0; x < s.P.num_points(); ++x) cls[s.P.point_class(x)] += s.m[x];
  std::sort(cls.begin(), cls.end());
  inv.push_back(-1);
  inv.insert(inv.end(), cls.begin(), cls.end());
  return inv;
}

struct Heuristic {
  ArcState s;
  SearchConfig cfg;
  int target;
  Multiset best;
  int best_k = 0;
  long long nodes = 0;
  bool exhausted = false, done = false;
  Clock::time_point deadline;
  std::set<std::vector<int>> seen;
  std::vector<double> tie;
  bool root_transitive = false;

  Heuristic(const Plane& P, const SearchConfig& c, const Multiset& start) : s(P, c.n, start), cfg(c) {
    target = c.target_k > 0 ? c.target_k : P.num_points();
    best = s.m;
    best_k = s.k;
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(c.time_budget));
    tie.assign(P.num_points(), 0.0);
    if (c.seed != 0) {
      std::mt19937_64 rng(c.seed);
      std::uniform_real_distribution<double> u(0.0, 1e-9);
      for (auto& t : tie) t = u(rng);
    }
    // The collineation group is transitive on points.
    root_transitive = s.k == 0;
  }

  bool out_of_budget() {
    if (nodes >= cfg.node_budget || ((nodes & 255) == 0 && Clock::now() > deadline)) {
      exhausted = true;
      return true;
    }
    return false;
  }

  void dfs() {
    ++nodes;
    if (s.k > best_k) {
      best_k = s.k;
      best = s.m;
      if (best_k >= target) {
        done = true;
        return;
      }
    }
    if (out_of_budget()) return;
    std::vector<int> cand = s.addable_points();
    if (s.k + static_cast<int>(cand.size()) <= best_k) return;
    if (root_transitive && s.k == 0 && !cand.empty()) cand.resize(1);
    std::vector<char> free(s.P.num_points(), 0);
    for (int x : cand) free[x] = 1;
    std::vector<std::pair<double, int>> order;
    for (int x : cand) order.push_back({score_in(s, free, static_cast<int>(cand.size()), x, target) + tie[x], x});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (const auto& [sc, x] : order) {
      s.add(x);
      bool fresh = true;
      if (cfg.invariant_screen) fresh = seen.insert(invariant(s)).second;
      if (fresh) dfs();
      s.remove(x);
      if (done || exhausted) return;
    }
  }

  void complete_greedily() {
    ArcState t(s.P, cfg.n, best);
    for (int x = 0; x < t.P.num_points(); ++x)
      if (t.addable(x)) t.add(x);
    best = t.m;
    best_k = t.k;
  }
};

void check_arc(const Plane& P, const Multiset& m, int n) {
  const ArcReport r = verify(P, m);
  if (r.n_max > n) throw std::logic_error("search produced a multiset violating the arc condition");
}

}  // namespace

double heuristic_score(const Plane& P, const Multiset& current, int x, const SearchConfig& config) {
  ArcState s(P, config.n, current);
  if (!s.addable(x)) return 0.0;
  std::vector<char> free(P.num_points(), 0);
  int nfree = 0;
  for (int y = 0; y < P.num_points(); ++y)
    if (s.addable(y)) {
      free[y] = 1;
      ++nfree;
    }
  return score_in(s, free, nfree, x, config.target_k);
}

SearchResult heuristic_search(const Plane& P, const SearchConfig& config, const Multiset& start) {
  Heuristic h(P, config, start);
  if (verify(P, h.s.m).n_max > config.n) throw std::invalid_argument("start multiset is not an n-arc");
  h.dfs();
  if (h.exhausted) h.complete_greedily();
  check_arc(P, h.best, config.n);
  return {h.best, h.best_k, h.exhausted, h.nodes};
}

OrbitProblem orbit_problem(const Plane& P, const std::vector<Collineation>& gens) {
  OrbitProblem prob;
  prob.generators = gens;
  prob.orbits = point_orbits(P, gens);
  std::vector<std::vector<int>> lperms;
  for (const auto& g : gens) lperms.push_back(P.line_permutation(g));
  std::vector<char> seen(P.num_lines(), 0);
  std::vector<std::vector<int>> line_orbits;
  for (int l = 0; l < P.num_lines(); ++l) {
    if (seen[l]) continue;
    std::vector<int> orb{l};
    seen[l] = 1;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const auto& p : lperms)
        if (!seen[p[orb[i]]]) {
          seen[p[orb[i]]] = 1;
          orb.push_back(p[orb[i]]);
        }
    line_orbits.push_back(orb);
    prob.line_reps.push_back(l);
  }
  std::vector<int> orbit_of(P.num_points());
  for (size_t o = 0; o < prob.orbits.size(); ++o)
    for (int x : prob.orbits[o]) orbit_of[x] = static_cast<int>(o);
  auto counts_on = [&](int l) {
    std::vector<int> c(prob.orbits.size(), 0);
    for (int x : P.line_points(l)) ++c[orbit_of[x]];
    return c;
  };
  prob.counts.assign(prob.orbits.size(), std::vector<int>(prob.line_reps.size(), 0));
  for (size_t r = 0; r < prob.line_reps.size(); ++r) {
    const auto c = counts_on(prob.line_reps[r]);
    for (size_t o = 0; o < c.size(); ++o) prob.counts[o][r] = c[o];
    const auto& orb = line_orbits[r];
    for (size_t i = 1; i < orb.size(); i += std::max<size_t>(1, orb.size() / 3))
      if (counts_on(orb[i]) != c) throw std::logic_error("orbit counts differ within a line orbit");
  }
  return prob;
}

SearchResult orbit_search(const Plane& P, const OrbitProblem& prob, const SearchConfig& cfg) {
  const int no = static_cast<int>(prob.orbits.size()), nr = static_cast<int>(prob.line_reps.size());
  const int target = cfg.target_k > 0 ? cfg.target_k : P.num_points();
  std::vector<int> order(no);
  for (int o = 0; o < no; ++o) order[o] = o;
  if (cfg.seed != 0) std::shuffle(order.begin(), order.end(), std::mt19937_64(cfg.seed));
  std::vector<int> suffix(no + 1, 0);
  for (int i = no - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + static_cast<int>(prob.orbits[order[i]].size());
  std::vector<int> load(nr, 0), chosen, best;
  int size = 0, best_size = 0;
  long long nodes = 0;
  bool exhausted = false, done = false;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget));
  auto rec = [&](auto&& self, int i) -> void {
    if (++nodes >= cfg.node_budget || ((nodes & 1023) == 0 && Clock::now() > deadline)) {
      exhausted = true;
      return;
    }
    if (size > best_size) {
      best_size = size;
      best = chosen;
      if (best_size >= target) {
        done = true;
        return;
      }
    }
    if (i == no || size + suffix[i] <= best_size) return;
    const int o = order[i];
    bool fits = true;
    for (int r = 0; r < nr && fits; ++r) fits = load[r] + prob.counts[o][r] <= cfg.n;
    if (fits) {
      for (int r = 0; r < nr; ++r) load[r] += prob.counts[o][r];
      chosen.push_back(o);
      size += static_cast<int>(prob.orbits[o].size());
      self(self, i + 1);
      size -= static_cast<int>(prob.orbits[o].size());
      chosen.pop_back();
      for (int r = 0; r < nr; ++r) load[r] -= prob.counts[o][r];
      if (done || exhausted) return;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  Multiset m(P.num_points(), 0);
  for (int o : best)
    for (int x : prob.orbits[o]) m[x] = 1;
  check_arc(P, m, cfg.n);
  return {m, best_size, exhausted, nodes};
}

std::vector<Multiset> orbit_solutions(const Plane& P, const OrbitProblem& prob, int n, int k, size_t limit) {
  const int no = static_cast<int>(prob.orbits.size()), nr = static_cast<int>(prob.line_reps.size());
  std::vector<int> load(nr, 0), chosen;
  std::vector<int> suffix(no + 1, 0);
  for (int i = no - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + static_cast<int>(prob.orbits[i].size());
  std::vector<Multiset> out;
  int size = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (out.size() >= limit) return;
    if (size == k) {
      Multiset m(P.num_points(), 0);
      for (int o : chosen)
        for (int x : prob.orbits[o]) m[x] = 1;
      check_arc(P, m, n);
      out.push_back(std::move(m));
      return;
    }
    if (i == no || size + suffix[i] < k) return;
    const int osz = static_cast<int>(prob.orbits[i].size());
    bool fits = size + osz <= k;
    for (int r = 0; r < nr && fits; ++r) fits = load[r] + prob.counts[i][r] <= n;
    if (fits) {
      for (int r = 0; r < nr; ++r) load[r] += prob.counts[i][r];
      chosen.push_back(i);
      size += osz;
      self(self, i + 1);
      size -= osz;
      chosen.pop_back();
      for (int r = 0; r < nr; ++r) load[r] -= prob.counts[i][r];
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

std::optional<Multiset> class_profile_search(const Plane& P, int k, int n, const std::vector<int>& class_mult,
                                             const std::vector<int>& forced, uint64_t seed, long long node_budget) {
  if (static_cast<int>(class_mult.size()) != P.num_classes()) throw std::invalid_argument("one multiplicity per class");
  std::vector<std::vector<int>> blocks;
  for (int l = 0; l < P.num_lines(); ++l) blocks.push_back(P.line_points(l));
  const int nl = P.num_lines();
  for (int c = 0; c < P.num_classes(); ++c) blocks.push_back(P.class_points(c));
  const ClassicalPlane I = ClassicalPlane::from_lines(P.q(), false, P.num_points(), blocks);
  SubsetProblem prob;
  prob.lo.assign(blocks.size(), 0);
  prob.hi.assign(blocks.size(), n);
  for (int c = 0; c < P.num_classes(); ++c) prob.lo[nl + c] = prob.hi[nl + c] = class_mult[c];
  prob.allowed.assign(P.num_points(), 1);
  prob.forced.assign(P.num_points(), 0);
  for (int x : forced) prob.forced[x] = 1;
  prob.k = k;
  auto r = solve_subset(I, prob, seed, node_budget);
  if (!r.points) return std::nullopt;
  Multiset m = make_multiset(P, *r.points);
  check_arc(P, m, n);
  return m;
}

SearchResult extend_arc(const Plane& P, const Multiset& m, int new_n, const SearchConfig& config) {
  const ArcReport r = verify(P, m);
  if (!r.projective) throw std::invalid_argument("extend_arc needs a projective arc");
  if (new_n < r.n_max) throw std::invalid_argument("extend_arc: new n below the current maximum line multiplicity");
  SearchConfig c = config;
  c.n = new_n;
  Heuristic h(P, c, m);
  h.root_transitive = false;
  h.dfs();
  h.complete_greedily();
  check_arc(P, h.best, new_n);
  return {h.best, h.best_k, h.exhausted, h.nodes};
}

SearchResult reduce_arc(const Plane& P, const Multiset& m, int new_n, const SearchConfig& config) {
  (void)config;
  Multiset cur = m;
  std::vector<int> cnt = line_multiplicities(P, cur);
  long long nodes = 0;
  auto excess_at = [&](int x) {
    int e = 0;
    for (int l : P.point_lines(x)) e += std::max(0, cnt[l] - new_n);
    return e;
  };
  for (;;) {
    int pick = -1, best = 0;
    for (int x = 0; x < P.num_points(); ++x) {
      if (!cur[x]) continue;
      const int e = excess_at(x);
      if (e > best) {
        best = e;
        pick = x;
      }
    }
    if (pick < 0) break;
    ++nodes;
    --cur[pick];
    for (int l : P.point_lines(pick)) --cnt[l];
  }
  // Greedy removal can overshoot: put back whatever still fits.
  for (int x = 0; x < P.num_points(); ++x) {
    while (cur[x] < m[x]) {
      bool fits = true;
      for (int l : P.point_lines(x)) fits = fits && cnt[l] < new_n;
      if (!fits) break;
      ++cur[x];
      for (int l : P.point_lines(x)) ++cnt[l];
    }
  }
  check_arc(P, cur, new_n);
  int k = 0;
  for (int v : cur) k += v;
  return {cur, k, false, nodes};
}

namespace {

// Branch and bound for projective arcs with a forced prefix. The bound uses
// that the lines through a point x partition the points not neighbouring x.
struct Exhaustive {
  const Plane& P;
  int n;
  std::vector<int> cnt, chosen, best;
  std::vector<char> state;  // 0 undecided, 1 in, 2 out
  long long nodes = 0, budget;
  bool out = false;
  int floor = 0;  // size already achieved elsewhere

  Exhaustive(const Plane& p, int n_, long long b) : P(p), n(n_), budget(b) {
    cnt.assign(P.num_lines(), 0);
    state.assign(P.num_points(), 0);
  }
  bool addable(int x) const {
    for (int l : P.point_lines(x))
      if (cnt[l] >= n) return false;
    return true;
  }
  int bound() const {
    std::vector<char> avail(P.num_points(), 0);
    int total = static_cast<int>(chosen.size());
    for (int x = 0; x < P.num_points(); ++x)
      if (state[x] == 0 && addable(x)) {
        avail[x] = 1;
        ++total;
      }
    int b = total;
    for (int x : chosen) {
      int t = 0;
      const int cx = P.point_class(x);
      for (int y : P.class_points(cx))
        if (state[y] == 1 || avail[y]) ++t;
      for (int l : P.point_lines(x)) {
        int on = 0;
        for (int y : P.line_points(l))
          if (P.point_class(y) != cx && (state[y] == 1 || avail[y])) ++on;
        t += std::min(n - 1, on);
      }
      b = std::min(b, t);
    }
    return b;
  }
  void run(int i) {
    if (++nodes > budget) {
      out = true;
      return;
    }
    if (chosen.size() > best.size() && static_cast<int>(chosen.size()) > floor) best = chosen;
    if (i >= P.num_points()) return;
    if (state[i] != 0) {
      run(i + 1);
      return;
    }
    if (bound() <= std::max(floor, static_cast<int>(best.size()))) return;
    if (addable(i)) {
      state[i] = 1;
      chosen.push_back(i);
      for (int l : P.point_lines(i)) ++cnt[l];
      run(i + 1);
      for (int l : P.point_lines(i)) --cnt[l];
      chosen.pop_back();
      if (out) {
        state[i] = 0;
        return;
      }
    }
    state[i] = 2;
    run(i + 1);
    state[i] = 0;
  }
};

}  // namespace

ExhaustiveResult exhaustive_search(const Plane& P, int n, long long node_budget) {
  ExhaustiveResult res;
  if (n < 1) return {0, Multiset(P.num_points(), 0), true, 0};
  // Arcs inside a single neighbour class: an n-arc of the affine plane on the class.
  const PointClassPlane A = P.point_class_plane(P.point_class(0));
  const MaxArcResult inner = max_arc_exhaustive(A.plane, n, node_budget);
  res.nodes += inner.nodes;
  res.complete = inner.exact;
  std::vector<int> best;
  for (int p : inner.witness) best.push_back(A.points[p]);
  // Otherwise the arc has two non-neighbouring points, which the collineation
  // group maps to point 0 and its first non-neighbour.
  int y0 = -1;
  for (int y = 0; y < P.num_points() && y0 < 0; ++y)
    if (!P.neighbours(0, y)) y0 = y;
  if (n >= 2) {
    Exhaustive s(P, n, node_budget);
    s.floor = static_cast<int>(best.size());
    for (int x : {0, y0}) {
      s.state[x] = 1;
      s.chosen.push_back(x);
      for (int l : P.point_lines(x)) ++s.cnt[l];
    }
    s.run(0);
    res.nodes += s.nodes;
    if (s.out) res.complete = false;
    if (s.best.size() > best.size()) best = s.best;
  }
  res.value = static_cast<int>(best.size());
  res.certificate = make_multiset(P, best);
  check_arc(P, res.certificate, n);
  return res;
}

long long group_order_check(const Plane& P) {
  const Ring& R = P.ring();
  if (R.q() != 2) throw std::invalid_argument("group order enumeration is implemented for q = 2 only");
  const int s = R.size();
  long long invertible = 0;
  std::array<int, 9> e{};
  const long long total = static_cast<long long>(std::pow(s, 9));
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < 9; ++i) {
      e[i] = R.residue(static_cast<int>(c % s)) % 2;
      c /= s;
    }
    const int det = e[0] * (e[4] * e[8] + e[5] * e[7]) + e[1] * (e[3] * e[8] + e[5] * e[6]) +
                    e[2] * (e[3] * e[7] + e[4] * e[6]);
    if (det % 2) ++invertible;
  }
  int central_units = 0;
  for (int u = 0; u < s; ++u) {
    if (!R.is_unit(u)) continue;
    bool central = true;
    for (int a = 0; a < s && central; ++a) central = R.mul(u, a) == R.mul(a, u);
    if (central) ++central_units;
  }
  return invertible / central_units * static_cast<long long>(R.automorphisms().size());
}

long long group_order_formula(const Ring& R) {
  const long long q = R.q();
  long long v = 1;
  for (int i = 0; i < 11; ++i) v *= q;
  return v * (q - 1) * (q - 1) * (q + 1) * (q * q + q + 1) * static_cast<long long>(R.automorphisms().size());
}

}  // namespace phg
