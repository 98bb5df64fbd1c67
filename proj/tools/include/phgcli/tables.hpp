// Best-known tables assembled from constructions, fixtures, searches and the bound engine,
// compared cell by cell with the published tables.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phg/bounds.hpp"
#include "phg/plane.hpp"

namespace phgcli {

struct TableOptions {
  double search_seconds = 10.0;  // per individual search
  bool run_search = true;
  std::function<void(const std::string&)> progress;
};

// Default per-search budget: PHG_BUDGET (seconds) if set, else 10.
double default_budget();

struct ArtifactSet {
  std::vector<phg::Artifact> artifacts;
  std::vector<std::string> log;
};
ArtifactSet gather_artifacts(const phg::Plane& plane, const TableOptions& options);

enum class CellStatus { Match, SearchBudget, Discrepancy };
std::string status_name(CellStatus s);

struct CellReport {
  std::string ring;
  int n = 0;
  phg::BestKnown ours;
  std::optional<phg::PublishedCell> published;
  CellStatus lower_status = CellStatus::Match;
  CellStatus upper_status = CellStatus::Match;
  int lower_gap = 0;  // published lower minus ours, when positive
};

struct TableReport {
  int q = 0;
  std::vector<std::string> rings;
  std::vector<CellReport> cells;
  std::vector<std::string> log;
  double seconds = 0.0;

  int count(CellStatus s) const;
  const CellReport* cell(const std::string& ring, int n) const;
};

TableReport reproduce_tables(int q, const TableOptions& options = {});
std::string format_report(const TableReport& report);
std::string report_json(const TableReport& report);

}  // namespace phgcli
