#include "phgcli/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phg/bounds.hpp"
#include "phg/classical.hpp"
#include "phg/constructions.hpp"
#include "phg/search.hpp"
#include "phgcli/arc_file.hpp"
#include "phgcli/fixtures.hpp"
#include "phgcli/tables.hpp"

namespace phgcli {

namespace {

using nlohmann::json;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

json arc_json(const phg::ArcReport& r) {
  return {{"k", r.k}, {"n_max", r.n_max}, {"n_min", r.n_min}, {"spectrum", r.spectrum},
          {"class_census", r.class_census}, {"projective", r.projective}};
}

void print_report(std::ostream& out, const phg::ArcReport& r) {
  out << "k=" << r.k << " n=" << r.n_max << "\n";
  out << "spectrum: " << join(r.spectrum) << "\n";
  out << "class census: " << join(r.class_census) << "\n";
  out << "projective: " << (r.projective ? "yes" : "no") << "\n";
}

ArcFile load_source(const std::string& src) {
  if (src.rfind("fixture:", 0) == 0) return load_fixture(src.substr(8));
  return load_arc(src);
}

int write_or_print(std::ostream& out, const phg::Plane& P, const phg::Multiset& m, const std::string& path,
                   const std::string& provenance) {
  const phg::ArcReport r = phg::verify(P, m);
  const ArcFile f = from_multiset(P, m, std::make_pair(r.k, r.n_max), provenance);
  if (path.empty() || path == "-") {
    out << format_arc(f);
  } else {
    save_arc(path, f);
  }
  return kOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arcs, blocking sets and bounds in projective Hjelmslev planes over chain rings", "phg"};
  app.require_subcommand(1);

  // plane info
  auto* plane_cmd = app.add_subcommand("plane", "Plane queries");
  plane_cmd->require_subcommand(1);
  auto* plane_info = plane_cmd->add_subcommand("info", "Counts and sanity invariants of PHG(2,R)");
  std::string ring_name;
  plane_info->add_option("ring", ring_name, "Ring name")->required();

  // arc verify | construct
  auto* arc_cmd = app.add_subcommand("arc", "Arc files");
  arc_cmd->require_subcommand(1);
  auto* arc_verify = arc_cmd->add_subcommand("verify", "Verify an arc file or fixture:<id>");
  std::string arc_src, encoding = "native";
  bool as_json = false;
  arc_verify->add_option("file", arc_src, "Arc file, or fixture:<id>")->required();
  arc_verify->add_option("--encoding", encoding, "Element code encoding: native or swapped");
  arc_verify->add_flag("--json", as_json, "JSON output");

  auto* arc_construct = arc_cmd->add_subcommand("construct", "Run a named construction");
  std::string construction, out_path;
  int param = 0;
  uint64_t seed = 0;
  arc_construct->add_option("--ring", ring_name, "Ring name")->required();
  arc_construct->add_option("--id", construction, "Construction id, e.g. Q4_N8")->required();
  arc_construct->add_option("--param", param, "Construction parameter");
  arc_construct->add_option("--seed", seed, "Random seed");
  arc_construct->add_option("--out", out_path, "Write the arc file here ('-' for stdout)");
  arc_construct->add_flag("--json", as_json, "JSON output");

  // classical find
  auto* classical_cmd = app.add_subcommand("classical", "Objects in PG(2,q) and AG(2,q)");
  classical_cmd->require_subcommand(1);
  auto* classical_find = classical_cmd->add_subcommand("find", "Find an arc, blocking set, (hyper)oval or grid");
  int q = 0, k = 0, n = 0, s = 0;
  std::string kind = "arc";
  bool affine = false;
  classical_find->add_option("--q", q, "Order")->required();
  classical_find->add_option("--kind", kind, "arc | blocking | hyperoval | oval")
      ->check(CLI::IsMember({"arc", "blocking", "hyperoval", "oval"}));
  classical_find->add_option("--k", k, "Size");
  classical_find->add_option("--n", n, "Max line multiplicity (arc)");
  classical_find->add_option("--s", s, "Min line multiplicity (blocking)");
  classical_find->add_flag("--affine", affine, "Search in AG(2,q)");
  classical_find->add_option("--seed", seed, "Random seed");

  // bounds table
  auto* bounds_cmd = app.add_subcommand("bounds", "Upper bounds with provenance");
  bounds_cmd->require_subcommand(1);
  auto* bounds_table = bounds_cmd->add_subcommand("table", "Bound records per n");
  int n_only = -1;
  bounds_table->add_option("--ring", ring_name, "Ring name")->required();
  bounds_table->add_option("--n", n_only, "Only this n");
  bounds_table->add_flag("--json", as_json, "JSON output");

  // search heuristic | orbit
  auto* search_cmd = app.add_subcommand("search", "Arc searches");
  search_cmd->require_subcommand(1);
  double budget = default_budget();
  int target = 0;
  auto* search_heur = search_cmd->add_subcommand("heuristic", "Hypergeometric-score depth-first search");
  auto* search_orbit = search_cmd->add_subcommand("orbit", "Unions of Singer orbits");
  for (auto* c : {search_heur, search_orbit}) {
    c->add_option("--ring", ring_name, "Ring name")->required();
    c->add_option("--n", n, "Max line multiplicity")->required();
    c->add_option("--target", target, "Stop at this size");
    c->add_option("--budget", budget, "Time budget in seconds (default $PHG_BUDGET or 10)");
    c->add_option("--seed", seed, "Random seed");
    c->add_option("--out", out_path, "Write the arc file here");
  }
  int extend_to = 0;
  search_orbit->add_option("--extend", extend_to, "Extend the orbit arc to this n");

  // tables reproduce
  auto* tables_cmd = app.add_subcommand("tables", "Best-known tables");
  tables_cmd->require_subcommand(1);
  auto* tables_repro = tables_cmd->add_subcommand("reproduce", "Rebuild a table and diff it against the published one");
  bool no_search = false, verbose = false;
  tables_repro->add_option("--q", q, "Residue field order (2..5)")->required()->check(CLI::Range(2, 5));
  tables_repro->add_option("--budget", budget, "Per-search budget in seconds");
  tables_repro->add_flag("--no-search", no_search, "Skip heuristic and orbit searches");
  tables_repro->add_flag("--json", as_json, "JSON output");
  tables_repro->add_flag("--verbose", verbose, "Print artifact log");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return kUsage;
  }

  try {
    if (plane_info->parsed()) {
      const phg::Plane P = phg::build_plane(phg::ring_by_name(ring_name));
      const int qq = P.q();
      bool ok = P.num_points() == qq * qq * (qq * qq + qq + 1) && P.num_lines() == P.num_points();
      for (int l = 0; l < P.num_lines(); ++l) ok &= static_cast<int>(P.line_points(l).size()) == qq * qq + qq;
      for (int c = 0; c < P.num_classes(); ++c) ok &= static_cast<int>(P.class_points(c).size()) == qq * qq;
      out << "ring " << P.ring().name() << " q=" << qq << " |R|=" << P.ring().size() << "\n";
      out << P.num_points() << " points, " << P.num_lines() << " lines\n";
      out << qq * qq + qq << " points per line, " << qq * qq << " points per neighbour class, " << P.num_classes()
          << " classes\n";
      out << "invariants: " << (ok ? "ok" : "FAILED") << "\n";
      return ok ? kOk : kMismatch;
    }

    if (arc_verify->parsed()) {
      const ArcFile f = load_source(arc_src);
      const phg::Plane P = phg::build_plane(phg::ring_by_name(f.ring));
      const ArcCheck c = check_arc(P, f, encoding_from_name(encoding));
      if (as_json) {
        json j = arc_json(c.report);
        j["ring"] = f.ring;
        if (f.declared) j["declared"] = {f.declared->first, f.declared->second};
        j["declared_matches"] = c.declared_matches;
        out << j.dump(2) << "\n";
      } else {
        out << "ring " << f.ring << "\n";
        print_report(out, c.report);
        if (f.declared && !c.declared_matches)
          out << "declared (" << f.declared->first << "," << f.declared->second << ") does not match verified ("
              << c.report.k << "," << c.report.n_max << ")\n";
      }
      return c.declared_matches ? kOk : kMismatch;
    }

    if (arc_construct->parsed()) {
      const auto id = phg::construction_from_name(construction);
      if (!id) {
        err << "unknown construction " << construction << "\n";
        return kUsage;
      }
      const phg::Plane P = phg::build_plane(phg::ring_by_name(ring_name));
      phg::Construction c;
      try {
        c = phg::construct(P, *id, param, seed);
      } catch (const phg::ConstructionError& e) {
        err << e.what() << "\n";
        const bool usage = e.kind() == phg::ConstructionError::Kind::InapplicableRing ||
                           e.kind() == phg::ConstructionError::Kind::ParameterOutOfRange;
        return usage ? kUsage : kMismatch;
      }
      const std::string what = c.claimed.blocking ? "blocking" : "arc";
      if (as_json) {
        json j = arc_json(c.report);
        j["construction"] = construction;
        j["claimed"] = {{"k", c.claimed.k}, {"n", c.claimed.n}, {"blocking", c.claimed.blocking}};
        out << j.dump(2) << "\n";
      } else {
        out << construction << " over " << ring_name << ": claimed (" << c.claimed.k << "," << c.claimed.n << ")-"
            << what << "\n";
        print_report(out, c.report);
      }
      if (!out_path.empty()) {
        const phg::Plane& target_plane = P;
        write_or_print(out, target_plane, c.points, out_path, "construction " + construction);
      }
      return kOk;
    }

    if (classical_find->parsed()) {
      const phg::ClassicalPlane C = affine ? phg::make_ag(q) : phg::make_pg(q);
      phg::ClassicalObjectRequest req;
      req.kind = kind == "arc"         ? phg::ObjectKind::Arc
                 : kind == "blocking"  ? phg::ObjectKind::Blocking
                 : kind == "hyperoval" ? phg::ObjectKind::Hyperoval
                                       : phg::ObjectKind::Oval;
      req.k = k;
      req.n = n;
      req.s = s;
      req.seed = seed;
      const phg::FindResult r = phg::find_object(C, req);
      if (!r.points) {
        out << (r.exhausted ? "none exists" : "not found within budget") << " (" << r.nodes << " nodes)\n";
        return kMismatch;
      }
      out << "points:";
      for (int x : *r.points) out << " (" << C.coords[x][0] << "," << C.coords[x][1] << "," << C.coords[x][2] << ")";
      out << "\n";
      return kOk;
    }

    if (bounds_table->parsed()) {
      const phg::Ring R = phg::ring_by_name(ring_name);
      const int qq = R.q();
      const int lo = n_only >= 0 ? n_only : 0, hi = n_only >= 0 ? n_only : qq * qq + qq;
      std::vector<phg::Artifact> arts;
      for (const auto& f : fixtures()) {
        const ArcFile file = parse_arc(f.text);
        if (file.ring != R.name()) continue;
        const phg::Plane P = phg::build_plane(R);
        const ArcCheck c = check_arc(P, file);
        arts.push_back({c.report.k, c.report.n_max, "fixture:" + f.id, false});
      }
      for (phg::ConstructionId id : phg::all_constructions()) {
        std::vector<int> params;
        try {
          params = phg::parameter_range(R, id);
        } catch (const phg::ConstructionError&) {
          continue;
        }
        for (int p : params) {
          try {
            const phg::ClaimedParams cp = phg::claimed_params(R, id, p);
            const int total = qq * qq * (qq * qq + qq + 1);
            const std::string src = "construction:" + phg::construction_name(id);
            if (cp.blocking)
              arts.push_back({total - cp.k, qq * qq + qq - cp.n, src + " complement (claimed)", false});
            else
              arts.push_back({cp.k, cp.n, src + " (claimed)", false});
          } catch (const phg::ConstructionError&) {
          }
        }
      }
      json rows = json::array();
      for (int nn = lo; nn <= hi; ++nn) {
        const phg::BestKnown b = phg::best_known(R, nn, arts);
        const auto recs = phg::upper_records(R, nn);
        const auto pub = phg::published_cell(R.name(), nn);
        if (as_json) {
          json row{{"n", nn}, {"lower", {{"value", b.lower.value}, {"source", b.lower.source}}},
                   {"upper", {{"value", b.upper.value}, {"source", b.upper.source}, {"anchor", b.upper.anchor}}}};
          for (const auto& r : recs)
            row["records"].push_back({{"value", r.value}, {"source", r.source}, {"anchor", r.anchor}});
          if (pub) row["published"] = {{"lower", pub->lower}, {"upper", pub->upper}};
          rows.push_back(row);
        } else {
          out << R.name() << " n=" << nn << ": " << b.lower.value;
          if (b.upper.value != b.lower.value) out << "-" << b.upper.value;
          out << "  lower from " << b.lower.source << "\n";
          for (const auto& r : recs) out << "    <= " << r.value << "  " << r.source << "  \"" << r.anchor << "\"\n";
          if (pub) {
            out << "    published: " << pub->lower;
            if (pub->upper != pub->lower) out << "-" << pub->upper;
            out << "\n";
          }
        }
      }
      if (as_json) out << json{{"ring", R.name()}, {"rows", rows}}.dump(2) << "\n";
      return kOk;
    }

    if (search_heur->parsed() || search_orbit->parsed()) {
      const phg::Plane P = phg::build_plane(phg::ring_by_name(ring_name));
      phg::SearchConfig cfg;
      cfg.n = n;
      cfg.target_k = target;
      cfg.time_budget = budget;
      cfg.seed = seed;
      phg::SearchResult r;
      std::string prov;
      if (search_heur->parsed()) {
        r = phg::heuristic_search(P, cfg);
        prov = "heuristic search, seed " + std::to_string(seed);
      } else {
        const phg::OrbitProblem prob = phg::orbit_problem(P, {phg::singer_collineation(P)});
        r = phg::orbit_search(P, prob, cfg);
        prov = "Singer orbit search";
        out << "orbit search: k=" << r.k << " n=" << n << " (" << prob.orbits.size() << " orbits)\n";
        if (extend_to > n && r.k > 0) {
          phg::SearchResult best;
          for (const auto& start : phg::orbit_solutions(P, prob, n, r.k, 8)) {
            phg::SearchConfig ec = cfg;
            ec.target_k = target > 0 ? target : 0;
            const phg::SearchResult e = phg::extend_arc(P, start, extend_to, ec);
            if (e.k > best.k) best = e;
          }
          r = best;
          n = extend_to;
          prov += ", extended";
        }
      }
      out << "k=" << r.k << " n=" << n << " nodes=" << r.nodes << (r.budget_exhausted ? " (budget exhausted)" : "")
          << "\n";
      if (!out_path.empty()) write_or_print(out, P, r.best, out_path, prov);
      return (target > 0 && r.k < target) ? kMismatch : kOk;
    }

    if (tables_repro->parsed()) {
      TableOptions opt;
      opt.search_seconds = budget;
      opt.run_search = !no_search;
      if (verbose) opt.progress = [&](const std::string& m) { err << m << "\n"; };
      const TableReport rep = reproduce_tables(q, opt);
      out << (as_json ? report_json(rep) + "\n" : format_report(rep));
      return rep.count(CellStatus::Discrepancy) == 0 ? kOk : kMismatch;
    }
  } catch (const ArcFileError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const phg::RingError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace phgcli
