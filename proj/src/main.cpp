// paretoscope: sample and diagnose weak Pareto solution mappings.
//
// Subcommands:
//   analyze        run scalarizations over a weight grid, emit JSON report + SVG
//   oracle-check   compare a builtin's sampled graph against its closed-form map
//   list-problems  show the builtin catalog
//   replot         regenerate the SVG from a saved report
//
// Exit codes: 0 ok, 1 oracle-check violation, 2 bad input, 3 output failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "paretoscope/builtins.hpp"
#include "paretoscope/diagnose.hpp"
#include "paretoscope/json_io.hpp"
#include "paretoscope/svg.hpp"

namespace {

using namespace paretoscope;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  out.flush();
  return static_cast<bool>(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report_summary(const Report& rep, std::ostream& os) {
  os << "problem " << rep.problem.name << " (n=" << rep.problem.n << ", m=" << rep.problem.m
     << "), N=" << rep.run.N << ", seed=" << rep.run.seed << "\n";
  for (const ProbeSummary& p : rep.probes)
    os << "  probe objective " << p.objective_index + 1 << ": "
       << (p.passed ? "passed" : "COUNTEREXAMPLE") << " (" << p.trials_completed
       << " trials)\n";
  for (const GraphAnalysis& ga : rep.graphs) {
    int unb = 0;
    for (const Component& c : ga.components)
      if (!c.bounded_at_scale) ++unb;
    int checkable = 0, inconsistent = 0;
    for (const TheoremCheck& c : ga.checks) {
      if (c.mode == "checkable") ++checkable;
      if (!c.consistent) ++inconsistent;
    }
    os << "  graph " << to_string(ga.graph.kind) << (ga.graph.oracle_driven ? " (map-driven)" : "")
       << ": domain " << dom_weight_indices(ga.graph).size() << "/" << ga.graph.weights.size()
       << " weights in " << ga.domain_comps.size() << " component(s), closed="
       << (ga.closedness.closed_observed ? "yes" : "no") << "; image " << ga.image.size()
       << " points in " << ga.components.size() << " component(s) (" << unb
       << " unbounded); checks " << checkable << "/" << ga.checks.size() << " checkable, "
       << inconsistent << " inconsistent\n";
  }
  for (const std::string& n : rep.notes) os << "  note: " << n << "\n";
}

struct OracleCheckStats {
  int mismatches = 0;
  int violations = 0;
  double worst_ratio = 0.0;
  int worst_weight = -1;
};

double set_scheme_distance(const VectorProblem& pb, const OraclePiece& pc,
                           const std::vector<double>& xi,
                           const std::vector<std::vector<double>>& actual) {
  // Bounded set payloads (segments, boxes) are compared exactly: every
  // sampled point must lie on the set, and every set anchor (endpoint,
  // corner, formula point) must be approximated by some sampled point.
  std::vector<std::vector<double>> anchors;
  for (const auto& formulas : pc.points) {
    std::vector<double> pt(formulas.size());
    for (std::size_t i = 0; i < formulas.size(); ++i) pt[i] = formulas[i].eval(xi);
    anchors.push_back(std::move(pt));
  }
  for (const auto& seg : pc.segments) {
    anchors.push_back(seg.a);
    anchors.push_back(seg.b);
  }
  if (pc.has_box) {
    const std::size_t n = pc.box_lower.size();
    for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<double> corner(n);
      for (std::size_t i = 0; i < n; ++i)
        corner[i] = (mask >> i) & 1 ? pc.box_upper[i] : pc.box_lower[i];
      anchors.push_back(std::move(corner));
    }
  }

  double worst = 0.0;
  for (const auto& p : actual) {
    double d = kInf;
    for (const auto& a : anchors)
      if (a.size() == p.size()) d = std::min(d, dist_2(p, a));
    for (const auto& seg : pc.segments) d = std::min(d, point_segment_distance(p, seg.a, seg.b));
    if (pc.has_box) d = std::min(d, point_box_distance(p, pc.box_lower, pc.box_upper));
    worst = std::max(worst, d);
  }
  for (const auto& a : anchors) {
    double d = kInf;
    for (const auto& p : actual) d = std::min(d, dist_2(a, p));
    worst = std::max(worst, d);
  }
  return worst;
}

int run_oracle_check(const std::string& name, int N, std::ostream& os) {
  VectorProblem pb = builtin(name);
  if (!pb.oracle) throw std::invalid_argument("builtin has no reference map: " + name);
  SolverConfig cfg;
  std::vector<Weight> grid = simplex_grid(pb.m, N);
  GraphSample g = solve_grid(pb, pb.oracle->kind, grid, cfg, N);

  OracleCheckStats st;
  os << "oracle-check " << name << " (" << to_string(pb.oracle->kind)
     << " scalarization, N=" << N << (g.oracle_driven ? ", map-driven graph" : "") << ")\n";
  for (std::size_t w = 0; w < grid.size(); ++w) {
    OracleValue expected = oracle_eval(pb, grid[w], cfg.radii.back());
    const SolveOutcome& out = g.outcomes[w];
    bool actual_in = out.kind == SolveOutcome::Kind::Minimizers;

    std::ostringstream line;
    line << "  w=" << w << " xi1=" << grid[w].coords[0] << " expected="
         << (expected.in_domain ? "in" : "out") << " actual=" << to_string(out.kind);
    if (expected.in_domain != actual_in) {
      ++st.mismatches;
      line << "  DOMAIN MISMATCH";
      os << line.str() << "\n";
      continue;
    }
    if (!expected.in_domain) {
      os << line.str() << "  ok\n";
      continue;
    }

    const OraclePiece* pc = find_piece(pb, grid[w].coords[0]);
    double dist;
    if (pc && (!pc->segments.empty() || pc->has_box))
      dist = set_scheme_distance(pb, *pc, grid[w].coords, out.points);
    else
      dist = hausdorff(out.points, expected.points);

    double scale = 0.0;
    for (const auto& p : expected.points) scale = std::max(scale, norm_inf(p));
    for (const auto& p : out.points) scale = std::max(scale, norm_inf(p));
    double tol = 5e-3 * (1.0 + scale);
    bool ok = dist <= tol;
    if (!ok) ++st.violations;
    double ratio = tol > 0 ? dist / tol : 0.0;
    if (ratio > st.worst_ratio) {
      st.worst_ratio = ratio;
      st.worst_weight = static_cast<int>(w);
    }
    line << " dist=" << dist << " tol=" << tol << (ok ? "  ok" : "  TOLERANCE FAIL");
    os << line.str() << "\n";
  }

  os << "summary: " << st.mismatches << " domain mismatch(es), " << st.violations
     << " tolerance violation(s)";
  if (st.worst_weight >= 0) os << ", worst dist/tol " << st.worst_ratio << " at w=" << st.worst_weight;
  os << "\n";
  return st.mismatches + st.violations > 0 ? 1 : 0;
}

int run_list_problems(const std::string& format, std::ostream& os) {
  if (format == "json") {
    JsonValue arr = JsonValue::array();
    for (const std::string& name : builtin_names()) {
      VectorProblem pb = builtin(name);
      JsonValue j = JsonValue::object();
      j.set("name", pb.name);
      j.set("n", pb.n);
      j.set("m", pb.m);
      j.set("has_objectives", pb.has_objectives());
      j.set("convexity_tag", to_string(pb.convexity_tag));
      j.set("lower_bound_tag", to_string(pb.lower_bound_tag));
      j.set("oracle_scalarization", to_string(pb.oracle->kind));
      j.set("oracle_drives_graph", pb.oracle->drives_graph);
      j.set("summary", builtin_summary(name));
      arr.push(std::move(j));
    }
    os << serialize(arr);
    return 0;
  }
  for (const std::string& name : builtin_names()) {
    VectorProblem pb = builtin(name);
    os << name << "  (n=" << pb.n << ", m=" << pb.m << ")\n";
    os << "  objectives: " << (pb.has_objectives() ? std::to_string(pb.objectives.size()) : "none")
       << ", tags: " << to_string(pb.convexity_tag) << " / " << to_string(pb.lower_bound_tag)
       << "\n";
    os << "  reference map: " << to_string(pb.oracle->kind) << " scalarization"
       << (pb.oracle->drives_graph ? " (drives the sampled graph)" : "") << "\n";
    os << "  " << builtin_summary(name) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"numeric explorer for weak Pareto solution mappings"};
  app.require_subcommand(1);

  // analyze
  std::string builtin_name, problem_path, scalarization = "both";
  std::string json_path, svg_path;
  int resolution = 24;
  std::uint64_t seed = 7;
  long probe_trials = 400;
  ComponentConfig comp_defaults;
  SolverConfig solver_defaults;
  double eps_link = comp_defaults.eps_link;
  double core_radius = comp_defaults.core_radius;
  double rho = comp_defaults.rho;
  std::vector<double> radii = solver_defaults.radii;
  int lattice = solver_defaults.lattice_per_axis;
  int refine_steps = solver_defaults.refine_steps;
  int pool_cap = solver_defaults.pool_cap;

  CLI::App* analyze = app.add_subcommand("analyze", "sample scalarizations and run the checks");
  auto* src_b = analyze->add_option("--builtin", builtin_name, "builtin problem name");
  auto* src_p = analyze->add_option("--problem", problem_path, "problem description JSON file");
  src_b->excludes(src_p);
  analyze->add_option("--scalarization", scalarization, "sum, max, or both")
      ->check(CLI::IsMember({"sum", "max", "both"}))
      ->capture_default_str();
  analyze->add_option("--resolution,-N", resolution, "weight grid resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--seed", seed, "probe RNG seed")->capture_default_str();
  analyze->add_option("--json", json_path, "write the JSON report here (default: stdout)");
  analyze->add_option("--svg", svg_path, "also render an SVG plot here");
  analyze->add_option("--probe-trials", probe_trials, "randomized probe trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--eps-link", eps_link, "component linking distance")
      ->capture_default_str();
  analyze->add_option("--core-radius", core_radius, "direct-linking core radius")
      ->capture_default_str();
  analyze->add_option("--rho", rho, "window-crowding fraction for unboundedness")
      ->capture_default_str();
  analyze->add_option("--window-radii", radii, "expanding window radii")->expected(1, 8);
  analyze->add_option("--lattice-per-axis", lattice, "seed lattice points per axis")
      ->check(CLI::Range(3, 1025))
      ->capture_default_str();
  analyze->add_option("--refine-steps", refine_steps, "descent rounds per seed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--pool-cap", pool_cap, "max near-optimal points kept per weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // oracle-check
  std::string check_name;
  int check_resolution = 16;
  CLI::App* ocheck = app.add_subcommand("oracle-check",
                                        "compare a builtin against its closed-form map");
  ocheck->add_option("name", check_name, "builtin problem name")->required();
  ocheck->add_option("--resolution,-N", check_resolution, "weight grid resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // list-problems
  std::string list_format = "table";
  CLI::App* list = app.add_subcommand("list-problems", "show the builtin catalog");
  list->add_option("--format", list_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  // replot
  std::string replot_in, replot_out;
  CLI::App* replot = app.add_subcommand("replot", "render the SVG from a saved report");
  replot->add_option("report", replot_in, "report JSON produced by analyze")->required();
  replot->add_option("svg", replot_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      if (builtin_name.empty() == problem_path.empty()) {
        std::cerr << "analyze needs exactly one of --builtin or --problem\n";
        return 2;
      }
      VectorProblem pb =
          builtin_name.empty() ? problem_from_json_text(read_file(problem_path))
                               : builtin(builtin_name);
      RunConfig rc;
      rc.N = resolution;
      rc.seed = seed;
      rc.probe_trials = probe_trials;
      if (scalarization == "sum") rc.kinds = KindSelection::Sum;
      else if (scalarization == "max") rc.kinds = KindSelection::Max;
      else rc.kinds = KindSelection::Both;
      rc.solver.radii = radii;
      rc.solver.lattice_per_axis = lattice;
      rc.solver.refine_steps = refine_steps;
      rc.solver.pool_cap = pool_cap;
      rc.comp.eps_link = eps_link;
      rc.comp.core_radius = core_radius;
      rc.comp.rho = rho;

      Report rep = run_report(pb, rc);
      std::string json_text = report_to_json_string(rep);
      if (json_path.empty()) {
        std::cout << json_text;
      } else {
        if (!write_file(json_path, json_text)) {
          std::cerr << "cannot write report: " << json_path << "\n";
          return 3;
        }
        print_report_summary(rep, std::cout);
        std::cout << "report written to " << json_path << "\n";
      }
      if (!svg_path.empty()) {
        std::string svg = render_svg(nlohmann::ordered_json::parse(json_text));
        if (!write_file(svg_path, svg)) {
          std::cerr << "cannot write plot: " << svg_path << "\n";
          return 3;
        }
        if (!json_path.empty()) std::cout << "plot written to " << svg_path << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(ocheck)) return run_oracle_check(check_name, check_resolution, std::cout);

    if (app.got_subcommand(list)) return run_list_problems(list_format, std::cout);

    if (app.got_subcommand(replot)) {
      nlohmann::ordered_json rj = nlohmann::ordered_json::parse(read_file(replot_in));
      if (!rj.contains("schema_version") ||
          rj.at("schema_version").get<int>() != paretoscope::kReportSchemaVersion) {
        std::cerr << "unsupported or missing report schema version in " << replot_in << "\n";
        return 2;
      }
      std::string svg = render_svg(rj);
      if (!write_file(replot_out, svg)) {
        std::cerr << "cannot write plot: " << replot_out << "\n";
        return 3;
      }
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "bad expression: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
