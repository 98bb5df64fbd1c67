#include "phgcli/tables.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "phg/constructions.hpp"
#include "phg/search.hpp"
#include "phgcli/fixtures.hpp"

namespace phgcli {

using Clock = std::chrono::steady_clock;

double default_budget() {
  if (const char* env = std::getenv("PHG_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 10.0;
}

namespace {

int upper_value(const phg::Ring& R, int n) {
  int best = R.q() * R.q() * (R.q() * R.q() + R.q() + 1);
  for (const auto& r : phg::upper_records(R, n)) best = std::min(best, r.value);
  return best;
}

constexpr int kSeeds = 4;

void note(ArtifactSet& out, const TableOptions& opt, const std::string& msg) {
  out.log.push_back(msg);
  if (opt.progress) opt.progress(msg);
}

void add(ArtifactSet& out, const TableOptions& opt, const phg::Artifact& a) {
  out.artifacts.push_back(a);
  note(out, opt, a.source + ": (" + std::to_string(a.k) + "," + std::to_string(a.n) + ")" +
                     (a.certified_maximum ? " certified maximum" : ""));
}

}  // namespace

ArtifactSet gather_artifacts(const phg::Plane& P, const TableOptions& opt) {
  const phg::Ring& R = P.ring();
  const int q = R.q();
  ArtifactSet out;

  for (phg::ConstructionId id : phg::all_constructions()) {
    std::vector<int> params;
    try {
      params = phg::parameter_range(R, id);
    } catch (const phg::ConstructionError&) {
      continue;
    }
    for (int param : params) {
      const std::string name =
          "construction:" + phg::construction_name(id) + (phg::construction_has_param(id) ? "[" + std::to_string(param) + "]" : "");
      try {
        const phg::Construction c = phg::construct(P, id, param);
        if (c.claimed.blocking) {
          const phg::ArcReport r = phg::verify(P, phg::complement_blocking(P, c.points));
          add(out, opt, {r.k, r.n_max, name + " complement", false});
        } else {
          add(out, opt, {c.report.k, c.report.n_max, name, false});
        }
      } catch (const phg::ConstructionError& e) {
        note(out, opt, name + ": unavailable (" + e.what() + ")");
      }
    }
  }

  for (const auto& f : fixtures()) {
    const ArcFile file = parse_arc(f.text);
    if (file.ring != R.name()) continue;
    const ArcCheck c = check_arc(P, file);
    add(out, opt, {c.report.k, c.report.n_max, "fixture:" + f.id, false});
  }

  std::vector<int> exhaustive_ns;
  if (q == 2) exhaustive_ns = {2, 3};
  if (q == 3) exhaustive_ns = {2};
  for (int n : exhaustive_ns) {
    const phg::ExhaustiveResult e = phg::exhaustive_search(P, n);
    add(out, opt, {e.value, n, "search:exhaustive", e.complete});
  }

  if (!opt.run_search) return out;

  auto lower_at = [&](int n) {
    int best = 0;
    for (const auto& a : out.artifacts)
      if (a.n <= n) best = std::max(best, a.k);
    return best;
  };
  auto settled = [&](int n) { return lower_at(n) >= upper_value(R, n); };

  int heuristic_max_n = q <= 3 ? 2 * q : q + 3;
  if (q == 5) heuristic_max_n = R.kind() == phg::RingKind::Galois ? 2 : 2 * q - 1;
  for (int n = 2; n <= heuristic_max_n; ++n) {
    if (settled(n)) continue;
    phg::SearchConfig cfg;
    cfg.n = n;
    cfg.target_k = upper_value(R, n);
    cfg.time_budget = opt.search_seconds / kSeeds;
    int best = 0;
    for (int seed = 0; seed < kSeeds && best < cfg.target_k; ++seed) {
      cfg.seed = static_cast<uint64_t>(seed);
      best = std::max(best, phg::heuristic_search(P, cfg).k);
    }
    add(out, opt, {best, n, "search:heuristic", false});
  }

  std::optional<phg::OrbitProblem> prob;
  try {
    prob = phg::orbit_problem(P, {phg::singer_collineation(P)});
  } catch (const std::exception& e) {
    note(out, opt, std::string("search:orbit: no Singer collineation (") + e.what() + ")");
  }
  if (prob) {
    for (int n = 2; n < q * q; ++n) {
      if (settled(n) && settled(n + 1)) continue;
      phg::SearchConfig cfg;
      cfg.n = n;
      cfg.target_k = upper_value(R, n);
      cfg.time_budget = opt.search_seconds;
      const phg::SearchResult r = phg::orbit_search(P, *prob, cfg);
      if (r.k == 0) continue;
      add(out, opt, {r.k, n, "search:orbit", false});
      if (q < 5 || settled(n + 1)) continue;
      int best = 0;
      for (const auto& start : phg::orbit_solutions(P, *prob, n, r.k, 4)) {
        phg::SearchConfig ec;
        ec.n = n + 1;
        ec.target_k = upper_value(R, n + 1);
        ec.time_budget = opt.search_seconds / 2;
        best = std::max(best, phg::extend_arc(P, start, n + 1, ec).k);
      }
      if (best > 0) add(out, opt, {best, n + 1, "search:orbit+extend", false});
    }
  }
  return out;
}

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Match:
      return "match";
    case CellStatus::SearchBudget:
      return "search-budget";
    case CellStatus::Discrepancy:
      return "discrepancy";
  }
  return "?";
}

int TableReport::count(CellStatus s) const {
  int c = 0;
  for (const auto& cell : cells) c += (cell.lower_status == s) + (cell.upper_status == s);
  return c;
}

const CellReport* TableReport::cell(const std::string& ring, int n) const {
  for (const auto& c : cells)
    if (c.ring == ring && c.n == n) return &c;
  return nullptr;
}

TableReport reproduce_tables(int q, const TableOptions& opt) {
  const auto t0 = Clock::now();
  TableReport rep;
  rep.q = q;
  rep.rings = phg::published_table_rings(q);
  for (const auto& name : rep.rings) {
    const phg::Plane P = phg::build_plane(phg::ring_by_name(name));
    const ArtifactSet arts = gather_artifacts(P, opt);
    for (const auto& line : arts.log) rep.log.push_back(name + " " + line);
    for (int n = 0;; ++n) {
      const auto pub = phg::published_cell(name, n);
      if (!pub) break;
      CellReport c;
      c.ring = name;
      c.n = n;
      c.published = pub;
      c.ours = phg::best_known(P.ring(), n, arts.artifacts);
      c.upper_status = c.ours.upper.value == pub->upper ? CellStatus::Match : CellStatus::Discrepancy;
      if (c.ours.lower.value == pub->lower) {
        c.lower_status = CellStatus::Match;
      } else if (c.ours.lower.value < pub->lower) {
        c.lower_status = CellStatus::SearchBudget;
        c.lower_gap = pub->lower - c.ours.lower.value;
      } else {
        c.lower_status = CellStatus::Discrepancy;
      }
      rep.cells.push_back(std::move(c));
    }
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

std::string format_report(const TableReport& rep) {
  std::ostringstream out;
  out << "q=" << rep.q << "\n";
  out << std::left << std::setw(5) << "ring" << std::setw(4) << "n" << std::setw(12) << "ours" << std::setw(12)
      << "published" << std::setw(19) << "lower" << std::setw(13) << "upper"
      << "sources\n";
  for (const auto& c : rep.cells) {
    auto range = [](int lo, int hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi); };
    std::string lower = status_name(c.lower_status);
    if (c.lower_gap > 0) lower += "(" + std::to_string(c.lower_gap) + ")";
    out << std::setw(5) << c.ring << std::setw(4) << c.n << std::setw(12) << range(c.ours.lower.value, c.ours.upper.value)
        << std::setw(12) << range(c.published->lower, c.published->upper) << std::setw(19) << lower << std::setw(13)
        << status_name(c.upper_status) << c.ours.lower.source << " / " << c.ours.upper.source << "\n";
  }
  out << "match=" << rep.count(CellStatus::Match) << " search-budget=" << rep.count(CellStatus::SearchBudget)
      << " discrepancy=" << rep.count(CellStatus::Discrepancy) << " time=" << std::fixed << std::setprecision(1)
      << rep.seconds << "s\n";
  return out.str();
}

std::string report_json(const TableReport& rep) {
  nlohmann::json j;
  j["q"] = rep.q;
  j["seconds"] = rep.seconds;
  j["rings"] = rep.rings;
  auto record = [](const phg::BoundRecord& r) {
    return nlohmann::json{{"value", r.value}, {"source", r.source}, {"anchor", r.anchor}};
  };
  for (const auto& c : rep.cells) {
    nlohmann::json cell{{"ring", c.ring},
                        {"n", c.n},
                        {"lower", record(c.ours.lower)},
                        {"upper", record(c.ours.upper)},
                        {"lower_status", status_name(c.lower_status)},
                        {"upper_status", status_name(c.upper_status)},
                        {"lower_gap", c.lower_gap}};
    if (c.published)
      cell["published"] = {{"lower", c.published->lower},
                           {"upper", c.published->upper},
                           {"lower_mark", c.published->lower_mark},
                           {"upper_mark", c.published->upper_mark}};
    j["cells"].push_back(cell);
  }
  j["summary"] = {{"match", rep.count(CellStatus::Match)},
                  {"search_budget", rep.count(CellStatus::SearchBudget)},
                  {"discrepancy", rep.count(CellStatus::Discrepancy)}};
  return j.dump(2);
}

}  // namespace phgcli
