#include "phg/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <regex>
#include <stdexcept>

#include "phg/classical.hpp"

namespace phg {

namespace {

const std::vector<int>& ell_row(int q) {
  static const std::map<int, std::vector<int>> table{
      {2, {3, 4, 6, 6}},
      {3, {4, 5, 6, 8, 9, 9, 12, 12, 12}},
      {4, {5, 6, 7, 8, 10, 10, 12, 12, 15, 16, 16, 16, 20, 20, 20, 20}},
      {5, {6, 7, 8, 9, 10, 12, 14, 14, 15, 15, 18, 19, 20, 20, 20, 24, 25, 25, 25, 25, 30, 30, 30, 30, 30}},
  };
  auto it = table.find(q);
  if (it == table.end()) throw std::out_of_range("l_q(u) is tabulated for 2 <= q <= 5");
  return it->second;
}

void check_qn(int q, int n) {
  if (q < 2 || q > 5) throw std::out_of_range("q must be in [2, 5]");
  if (n < 2 || n > q * q + q) throw std::out_of_range("n must be in [2, q^2+q]");
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int ell_q(int q, int u) {
  const auto& row = ell_row(q);
  if (u < 1 || u > q * q) throw std::out_of_range("u must be in [1, q^2]");
  return row[u - 1];
}

std::vector<int> ell_oracle_row(int q) {
  const ClassicalPlane A = make_ag(q);
  const int np = A.num_points(), nl = A.num_lines();
  std::vector<int> class_of(nl, -1);
  for (size_t c = 0; c < A.parallel_classes.size(); ++c)
    for (int l : A.parallel_classes[c]) class_of[l] = static_cast<int>(c);
  std::vector<int> cnt(nl, 0), best(np + 1, 1 << 30);
  best[0] = 0;
  std::vector<char> in(np, 0);
  int size = 0;
  // Gray code walk over all subsets of the q^2 points.
  const uint64_t total = uint64_t{1} << np;
  for (uint64_t i = 1; i < total; ++i) {
    const int x = __builtin_ctzll(i);
    const int d = in[x] ? -1 : 1;
    in[x] = !in[x];
    size += d;
    for (int l : A.point_lines[x]) cnt[l] += d;
    int t = 0;
    for (const auto& cls : A.parallel_classes) {
      int m = 0;
      for (int l : cls) m = std::max(m, cnt[l]);
      t += m;
    }
    best[size] = std::min(best[size], t);
  }
  return {best.begin() + 1, best.end()};
}

int ell_oracle(int q, int u) {
  if (u < 1 || u > q * q) throw std::out_of_range("u must be in [1, q^2]");
  return ell_oracle_row(q)[u - 1];
}

int M_qn_direct(int q, int n) {
  check_qn(q, n);
  int best = 0;
  for (int u = 1; u <= q * q; ++u)
    best = std::max(best, std::min(u * (q * q + q + 1), q * (q + 1) * n - q * ell_q(q, u) + u));
  return best;
}

int M_qn_closed(int q, int n) {
  check_qn(q, n);
  const int u0 = n - ceil_div(n + 2 * q - 1, q + 2);
  const int u1 = std::min(q * q, n - (n + q) / (q + 2));
  int t = 0;
  while (u1 + t + 1 <= q * q && ell_q(q, u1 + t + 1) == ell_q(q, u1)) ++t;
  const int a = std::max(u0 * (q * q + q + 1), q * (q + 1) * n - q * ell_q(q, u1) + u1 + t);
  const int r = n % (q + 2);
  if (r >= 2 && r <= 5) return a;
  const int b = std::min((u0 + 1) * (q * q + q + 1), q * (q + 1) * n - q * ell_q(q, u0 + 1) + u0 + 1);
  return std::max(a, b);
}

int M_qn(int q, int n) {
  const int a = M_qn_direct(q, n), b = M_qn_closed(q, n);
  if (a != b) throw std::logic_error("M_qn evaluators disagree");
  return a;
}

int floor_bound(int q, int n) {
  if (n < 1 || n > q * q + q) throw std::out_of_range("n must be in [1, q^2+q]");
  return ((q + 1) * n - q) * (q * q + q + 1) / (q + 2);
}

int large_n_upper(int q, int n) {
  const int q2 = q * q, q3 = q2 * q;
  if (q2 - q + 1 <= n && n <= q2 - 1) return q * (q + 1) * n - q3 + q2 - q;
  if (n == q2 - q) return q2 * q2 - q3 - q + 1;
  if (q2 <= n && n <= q2 + q) return q * (q + 1) * n - q3;
  throw std::out_of_range("n outside the large-n ranges");
}

std::optional<BoundRecord> special_upper(const Ring& R, int n) {
  const int q = R.q();
  const std::string& name = R.name();
  auto rec = [](int v, std::string id, std::string anchor) {
    return BoundRecord{v, BoundDirection::Upper, std::move(id), std::move(anchor)};
  };
  if (q == 3 && n == 7) return rec(62, "special:q3n7", "m_7(R) <= 62 for R=Z9 or S3");
  if (q == 4) {
    if (n == 5) return rec(68, "special:q4n5", "Let R be one of the rings G4, S4, T4. Then m_5(R) <= 68");
    if (n == 6) {
      if (name != "G4") return rec(83, "special:q4n6", "m_6(R) < 84 if R != G4");
      return rec(84, "special:q4n6", "m_6(R) <= 84");
    }
    if (n == 7) return rec(101, "special:q4n7", "m_7(R) <= 101");
    if (n == 8 && name != "G4") return rec(125, "special:q4n8", "Let R be one of the rings S4, T4. Then m_8(R) <= 125");
  }
  if (q == 5) {
    if (n == 3) return rec(43, "special:q5n3", "m_3(R) <= 43 for R=Z25 and R=S5");
    if (n == 4) return rec(70, "special:q5n4", "m_4(R) <= 70");
    if (n == 5) return rec(102, "special:q5n5", "m_5(R) <= 102");
    if (n == 6) return rec(130, "special:q5n6", "m_6(R) <= 130");
  }
  return std::nullopt;
}

std::optional<BoundRecord> external_upper(const Ring& R, int n) {
  struct Entry {
    const char* ring;
    int n, value;
    const char* tag;
  };
  // Values from the literature cited by the tables, keyed by the tables' note letters.
  static const std::vector<Entry> entries{
      {"Z4", 2, 7, "a"},    {"Z4", 3, 10, "a"},   {"S2", 2, 6, "a"},    {"S2", 3, 10, "a"},
      {"Z9", 2, 9, "a"},    {"S3", 2, 9, "a"},    {"Z9", 3, 19, "a"},   {"S3", 3, 18, "c"},
      {"Z9", 4, 30, "b"},   {"S3", 4, 30, "b"},   {"Z9", 5, 39, "h"},   {"S3", 5, 38, "h"},
      {"Z9", 6, 49, "i"},   {"S3", 6, 50, "i"},   {"Z9", 7, 60, "i"},   {"S3", 7, 60, "i"},
      {"Z9", 8, 69, "h"},   {"S3", 8, 69, "h"},   {"G4", 2, 21, "a"},   {"S4", 2, 18, "e"},
      {"T4", 2, 18, "e"},   {"G4", 3, 30, "b"},   {"S4", 3, 30, "b"},   {"T4", 3, 30, "b"},
      {"G4", 4, 52, "b"},   {"S4", 4, 52, "b"},   {"T4", 4, 52, "b"},   {"G4", 8, 126, "b"},
      {"G4", 10, 160, "b"}, {"S4", 10, 160, "b"}, {"T4", 10, 160, "b"}, {"Z25", 2, 25, "a"},
      {"S5", 2, 25, "a"},
  };
  for (const auto& e : entries)
    if (R.name() == e.ring && n == e.n)
      return BoundRecord{e.value, BoundDirection::Upper, std::string("external:") + e.tag, std::string("note ") + e.tag};
  return std::nullopt;
}

std::vector<BoundRecord> upper_records(const Ring& R, int n) {
  const int q = R.q(), total = q * q * (q * q + q + 1);
  std::vector<BoundRecord> out;
  if (n <= 0) return {{0, BoundDirection::Upper, "trivial", "n = 0"}};
  if (n == 1) return {{1, BoundDirection::Upper, "trivial", "n = 1"}};
  if (n >= q * q + q) return {{total, BoundDirection::Upper, "trivial", "whole point set"}};
  out.push_back({M_qn(q, n), BoundDirection::Upper, "formula:M_qn", "q(q+1)n-q*l_q(u,n)+u"});
  out.push_back({floor_bound(q, n), BoundDirection::Upper, "formula:floor", "floor(((q+1)n-q)/(q+2)*(q^2+q+1))"});
  try {
    out.push_back({large_n_upper(q, n), BoundDirection::Upper, "formula:large_n",
                   n >= q * q ? "q(q+1)n-q^3" : (n == q * q - q ? "k <= q^4-q^3-q+1" : "k <= q(q+1)n-q^3+q^2-q")});
  } catch (const std::out_of_range&) {
  }
  if (n == 3 && q >= 5 && q % 2 == 1)
    out.push_back({2 * q * q - 2 * q + 4, BoundDirection::Upper, "formula:m3_odd", "m_3(R) <= 2q^2-2q+4 for q odd"});
  if (auto s = special_upper(R, n)) out.push_back(*s);
  if (auto e = external_upper(R, n)) out.push_back(*e);
  return out;
}

BestKnown best_known(const Ring& R, int n, const std::vector<Artifact>& artifacts) {
  BestKnown b;
  b.lower = {n <= 0 ? 0 : 1, BoundDirection::Lower, "trivial", "single point"};
  std::vector<BoundRecord> ups = upper_records(R, n);
  for (const auto& a : artifacts) {
    if (a.n <= n && a.k > b.lower.value) b.lower = {a.k, BoundDirection::Lower, a.source, "verified arc"};
    if (a.certified_maximum && a.n == n)
      ups.push_back({a.k, BoundDirection::Upper, a.source, "exhaustive search certificate"});
  }
  b.upper = *std::min_element(ups.begin(), ups.end(),
                              [](const BoundRecord& x, const BoundRecord& y) { return x.value < y.value; });
  if (b.lower.value > b.upper.value)
    throw std::logic_error("lower bound " + std::to_string(b.lower.value) + " exceeds upper bound " +
                           std::to_string(b.upper.value) + " for " + R.name() + ", n=" + std::to_string(n));
  return b;
}

// ------------------------------------------------------------ published tables

namespace {

// Cells as "<lower marks><lower>[-<upper>]<upper marks>", rows n = 0, 1, 2, ...
const std::map<std::string, std::vector<std::string>>& transcription() {
  static const std::map<std::string, std::vector<std::string>> t{
      // The table for order 4 is headed Z9/S3 in the source; its values are for Z4/S2.
      {"Z4", {"0", "1", "7a", "10a", "16a", "22a", "28"}},
      {"S2", {"0", "1", "6a", "10a", "16a", "22a", "28"}},
      {"Z9", {"0", "1", "9a", "c19a", "f30b", "f39h", "D49i", "fB60i", "fh69h", "81a", "93a", "105a", "117"}},
      {"S3", {"0", "1", "9a", "18c", "D30b", "38h", "D50i", "B60i", "69h", "81a", "93a", "105a", "117"}},
      {"G4", {"0",        "1",        "d21a",     "D29-30b",  "f52b",     "f68F",     "f84F",
              "D94-101F", "fC126b",   "fB140E",   "fB152-160b", "B166-169E", "B186-189E", "B201-208E",
              "D224-228E", "fA236-248b", "256a",   "276a",     "296a",     "316a",     "336"}},
      {"S4", {"0",        "1",        "b18e",     "D29-30b",  "D52b",     "f68F",     "D81-83F",
              "D99-101F", "B120-125C", "B140E",   "B152-160b", "B166-169E", "B186-189E", "D202-208E",
              "D216-228E", "fA236-248b", "256a",   "276a",     "296a",     "316a",     "336"}},
      {"T4", {"0",        "1",        "18e",      "D29-30b",  "D52b",     "f68F",     "D81-83F",
              "D96-101F", "B120-125C", "B140E",   "B152-160b", "B166-169E", "B186-189E", "D202-208E",
              "D219-228E", "fA236-248b", "256a",   "276a",     "296a",     "316a",     "336"}},
      {"Z25", {"0",         "1",         "g21-25a",   "D40-43F",   "D64-70F",   "D85-102F",  "D114-130F",
               "D135-156E", "D162-186E", "D186-208E", "D210-238E", "D234-265E", "D259-295b", "f310-311E",
               "D319-341E", "B355-367E", "B375-395E", "D400-425E", "B425-455b", "f465-466E", "A490-496E",
               "A515-525E", "A540-555E", "fA565-585E", "A595-615b", "625a",     "655a",      "685a",
               "715a",      "745a",      "775a"}},
      {"S5", {"0",         "1",         "D25a",      "D42-43F",   "D64-70F",   "D90-102F",  "D130F",
              "D152-156E", "D162-186E", "D190-208E", "D225-238E", "D250-265E", "D280-295b", "D297-311E",
              "D318-341E", "B355-367E", "B375-395E", "D405-425E", "D433-455b", "B455-466E", "A490-496E",
              "A515-525E", "A540-555E", "A565-585E", "A595-615b", "625a",      "655a",      "685a",
              "715a",      "745a",      "775a"}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& published_table_rings(int q) {
  static const std::map<int, std::vector<std::string>> rings{
      {2, {"Z4", "S2"}}, {3, {"Z9", "S3"}}, {4, {"G4", "S4", "T4"}}, {5, {"Z25", "S5"}}};
  auto it = rings.find(q);
  if (it == rings.end()) throw std::out_of_range("tables exist for 2 <= q <= 5");
  return it->second;
}

std::optional<PublishedCell> published_cell(const std::string& ring, int n) {
  const auto& t = transcription();
  auto it = t.find(ring);
  if (it == t.end() || n < 0 || n >= static_cast<int>(it->second.size())) return std::nullopt;
  static const std::regex cell(R"(^([A-Za-z]*)(\d+)(?:-(\d+))?([A-Za-z]*)$)");
  std::smatch m;
  const std::string& s = it->second[n];
  if (!std::regex_match(s, m, cell)) throw std::logic_error("malformed table cell " + s);
  PublishedCell c;
  c.lower_mark = m[1];
  c.lower = std::stoi(m[2]);
  c.upper = m[3].matched ? std::stoi(m[3]) : c.lower;
  c.upper_mark = m[4];
  return c;
}

}  // namespace phg
