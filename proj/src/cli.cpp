#include "hexstore/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hexstore/io.hpp"
#include "hexstore/render.hpp"

namespace hexstore::cli {

namespace {

/// Error that maps straight onto an exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Exit{kFailure, "cannot write " + path};
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Exit{kFailure, "cannot write " + path};
}

Json load_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const JsonSyntaxError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

std::vector<double> number_list(const std::string& text, const char* flag,
                                std::optional<std::size_t> count = std::nullopt) {
  std::vector<double> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Exit{kUsage, std::string(flag) + ": not a number: '" + item + "'"};
    }
  }
  if (count && values.size() != *count) {
    throw Exit{kUsage, std::string(flag) + " expects " + std::to_string(*count) +
                           " comma-separated values"};
  }
  return values;
}

Coord coord_arg(const std::string& text, const char* flag) {
  const auto v = number_list(text, flag, 3);
  for (double x : v) {
    if (x != static_cast<int>(x)) throw Exit{kUsage, std::string(flag) + " expects integers"};
  }
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

WarehouseConfig load_config(const std::string& path) {
  try {
    WarehouseConfig cfg = config_from_json(load_json(path));
    require_valid(cfg);
    return cfg;
  } catch (const ConfigError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

struct Common {
  double alpha = 0.5;
  std::string weights;
  std::string norms;
  double unit = 1.0;
  bool json = false;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--alpha", c.alpha, "Weight of the speed criterion in [0,1]")
      ->capture_default_str();
  cmd->add_option("--weights", c.weights, "Per-axis transfer weights wx,wy,wz (default 1,1,1)");
  cmd->add_option("--norms", c.norms,
                  "Normalizers speed,cost (default: the all-three-axis warehouse)");
  cmd->add_option("--unit", c.unit, "Multiplier applied to every transfer weight")
      ->capture_default_str();
  cmd->add_flag("--json", c.json, "Print machine-readable JSON");
  cmd->add_option("-o,--out", c.out, "Also write the JSON result to this file");
}

MoveWeights weights_of(const Common& c) {
  MoveWeights w;
  if (!c.weights.empty()) {
    const auto v = number_list(c.weights, "--weights", 3);
    w = {v[0], v[1], v[2]};
  }
  w = w.scaled(c.unit);
  try {
    check_weights(w);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  return w;
}

std::optional<Norms> norms_override(const Common& c) {
  if (c.norms.empty()) return std::nullopt;
  const auto v = number_list(c.norms, "--norms", 2);
  return Norms{v[0], v[1]};
}

ObjectiveParams params_of(const Common& c, const Norms& n) {
  ObjectiveParams p{c.alpha, n.speed, n.cost};
  try {
    check_params(p);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  return p;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_value(const std::optional<double>& v) {
  if (!v) return "infeasible";
  std::ostringstream os;
  os << *v;
  return os.str();
}

// ---------------------------------------------------------------- discover

struct DiscoverArgs {
  std::string topology;
  std::string origin;
  std::size_t hop_limit = 0;  // 0 = unlimited
  std::size_t max_flood_cells = 10;
  std::string routes_out;
  std::string map_out;
  std::string dump_out;
  bool json = false;
};

int cmd_discover(const DiscoverArgs& a, std::ostream& out) {
  LinkTopology topo;
  try {
    topo = topology_from_json(load_json(a.topology));
  } catch (const TopologyError& e) {
    throw Exit{kUsage, a.topology + ": " + e.what()};
  }
  if (topo.cells.empty()) throw Exit{kUsage, a.topology + ": topology has no cells"};
  CellId origin = topo.cells.front();
  if (!a.origin.empty()) {
    try {
      origin = CellId::from_hex(a.origin);
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, std::string("--origin: ") + e.what()};
    }
    if (!topo.has_cell(origin)) throw Exit{kUsage, "--origin: unknown cell " + origin.hex()};
  }
  std::optional<std::size_t> hop_limit;
  if (a.hop_limit > 0) hop_limit = a.hop_limit;
  if (!hop_limit && topo.cells.size() > a.max_flood_cells) {
    throw Exit{kUsage, "unlimited flooding enumerates every simple cycle; it is allowed only up to " +
                           std::to_string(a.max_flood_cells) +
                           " cells (use --hop-limit or --max-flood-cells)"};
  }

  RouteSet routes;
  TopologyMap map;
  try {
    routes = run_flood(topo, origin, hop_limit);
    map = build_map(neighbor_discovery(topo), origin);
  } catch (const TopologyError& e) {
    throw Exit{kInconsistent, e.what()};
  } catch (const TopologyFault& e) {
    throw Exit{kInconsistent, e.what()};
  } catch (const GeometryError& e) {
    throw Exit{kInconsistent, e.what()};
  }

  const Json routes_json = to_json(routes);
  const Json map_json = to_json(map);
  if (!a.routes_out.empty()) write_file(a.routes_out, dump(routes_json));
  if (!a.map_out.empty()) write_file(a.map_out, dump(map_json));
  if (!a.dump_out.empty()) {
    const auto bytes = route_dump(routes);
    write_file(a.dump_out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  }
  if (a.json) {
    out << dump({{"routes", routes_json}, {"map", map_json}});
  } else {
    out << "origin " << origin.hex() << ": " << routes.routes.size() << " routes, "
        << routes.crisscross << " crisscross discards, " << routes.hop_limited
        << " hop-limited discards\n";
    for (const auto& r : routes_json["routes"]) {
      std::string sep;
      for (const auto& c : r["cells"]) {
        out << sep << c.get<std::string>();
        sep = " - ";
      }
      out << '\n';
    }
    out << "map: " << map.coords.size() << " cells placed, " << map.adjacency.size()
        << " adjacency entries\n";
    for (const auto& [id, c] : map.coords) out << "  " << id.hex() << " " << c << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string config;
  Common common;
  std::optional<double> f_speed;
  std::string report_out;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const WarehouseConfig cfg = load_config(a.config);
  const MoveWeights w = weights_of(a.common);
  const CostModel cm;
  const Norms own = self_norms(cfg.dims, cfg.loading, w, cm);
  const auto override = norms_override(a.common);
  const ObjectiveParams p = params_of(a.common, override.value_or(own));

  const SimReport report = simulate_loading(cfg, w);
  const std::optional<double> speed = a.f_speed ? a.f_speed : report.f_speed;
  const Evaluation e = evaluate_with_speed(cfg, speed, cm, p);
  const Json j = to_json(e);

  if (!a.common.out.empty()) write_file(a.common.out, dump(j));
  if (!a.report_out.empty()) write_file(a.report_out, dump(to_json(report)));
  if (a.common.json) {
    out << dump(j);
  } else {
    out << "three-axis cells: " << e.triaxial << "\n"
        << "F_speed:          " << format_value(e.f_speed) << "\n"
        << "F_cost:           " << e.f_cost << "\n"
        << "F_target:         " << format_value(e.f_target) << " (alpha " << p.alpha << ")\n"
        << "norms:            " << p.f_speed_norm << ", " << p.f_cost_norm << "\n";
    if (override) out << "self norms:       " << own.speed << ", " << own.cost << "\n";
  }
  return e.feasible() ? kOk : kInfeasible;
}

// ---------------------------------------------------------------- optimize

struct SearchArgs {
  std::string dims;
  std::string loading = "0,0,0";
  std::string mode = "anneal";
  std::optional<std::uint64_t> seed;
  std::size_t iterations = 20000;
  double t0 = 1.0;
  double cooling = 0.995;
  std::size_t k = 2;
  Common common;
};

Problem problem_of(const SearchArgs& a) {
  const Coord d = coord_arg(a.dims, "--dims");
  Problem pb;
  pb.dims = {d.x, d.y, d.z};
  pb.loading = coord_arg(a.loading, "--loading");
  pb.weights = weights_of(a.common);
  const auto probe = WarehouseConfig::uniform(pb.dims, CellKind::ThreeAxis, pb.loading);
  if (auto issues = validate(probe); !issues.empty()) {
    throw Exit{kUsage, ConfigError(std::move(issues)).what()};
  }
  const Norms n = norms_override(a.common).value_or(self_norms(pb.dims, pb.loading, pb.weights, pb.costs));
  pb.params = params_of(a.common, n);
  return pb;
}

SearchParams search_params_of(const SearchArgs& a) {
  SearchParams sp;
  if (a.mode == "exhaustive") {
    sp.mode = SearchMode::Exhaustive;
  } else if (a.mode == "column" || a.mode == "column_scan") {
    sp.mode = SearchMode::ColumnScan;
  } else if (a.mode == "anneal") {
    sp.mode = SearchMode::Anneal;
    if (!a.seed) throw Exit{kUsage, "anneal mode requires an explicit --seed"};
  } else {
    throw Exit{kUsage, "unknown --mode '" + a.mode + "'"};
  }
  sp.seed = a.seed.value_or(0);
  sp.iterations = a.iterations;
  sp.t0 = a.t0;
  sp.cooling = a.cooling;
  sp.k = a.k;
  try {
    check_search_params(sp);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  return sp;
}

int cmd_optimize(const SearchArgs& a, const std::string& trace_out, std::ostream& out) {
  const Problem pb = problem_of(a);
  const SearchParams sp = search_params_of(a);
  SearchResult r;
  try {
    r = search(pb, sp);
  } catch (const SearchLimitError& e) {
    throw Exit{kSizeGuard, e.what()};
  }
  Json j = to_json(r);
  j["mode"] = a.mode;
  j["alpha"] = pb.params.alpha;
  j["norms"] = Json::array({pb.params.f_speed_norm, pb.params.f_cost_norm});
  if (sp.mode == SearchMode::Anneal) j["seed"] = sp.seed;

  if (!a.common.out.empty()) write_file(a.common.out, dump(j));
  if (!trace_out.empty()) write_file(trace_out, trace_csv(r));
  if (a.common.json) {
    out << dump(j);
  } else {
    out << r.evaluated << " configurations evaluated\n";
    for (std::size_t i = 0; i < r.best.size(); ++i) {
      const Evaluation& e = r.best[i].evaluation;
      out << "#" << i + 1 << "  three-axis " << e.triaxial << "  F_speed "
          << format_value(e.f_speed) << "  F_cost " << e.f_cost << "  F_target "
          << format_value(e.f_target) << "\n"
          << render_layers(r.best[i].config) << "\n";
    }
    out << "pareto front (" << r.pareto.size() << " points):\n";
    for (const ParetoPoint& p : r.pareto) {
      out << "  F_speed " << p.f_speed << "  F_cost " << p.f_cost << "  three-axis "
          << p.config.triaxial_count() << "\n";
    }
  }
  return r.best.empty() ? kInfeasible : kOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const SearchArgs& a, const std::string& alphas_text,
              const std::vector<std::string>& fixed_rows, const std::string& csv_out,
              std::ostream& out) {
  if (alphas_text.empty()) throw Exit{kUsage, "--alphas needs at least one value"};
  const std::vector<double> alphas = number_list(alphas_text, "--alphas");
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Exit{kUsage, "--alphas values must lie in [0,1]"};
  }

  std::vector<SweepSection> table;
  if (!fixed_rows.empty()) {
    const auto norms = norms_override(a.common);
    if (!norms) throw Exit{kUsage, "--row requires --norms"};
    std::vector<SweepRow> rows;
    for (const std::string& text : fixed_rows) {
      const auto v = number_list(text, "--row", 3);
      if (v[0] < 0 || v[0] != static_cast<double>(static_cast<std::size_t>(v[0]))) {
        throw Exit{kUsage, "--row: triaxial count must be a nonnegative integer"};
      }
      rows.push_back({static_cast<std::size_t>(v[0]), v[1], v[2], std::nullopt, std::nullopt});
    }
    params_of(a.common, *norms);
    table = sweep_fixed(rows, alphas, *norms);
  } else {
    if (a.dims.empty()) throw Exit{kUsage, "sweep needs --dims or --row"};
    const Problem pb = problem_of(a);
    const SearchParams sp = search_params_of(a);
    try {
      table = sweep_search(pb, alphas, sp);
    } catch (const SearchLimitError& e) {
      throw Exit{kSizeGuard, e.what()};
    }
  }

  const std::string csv = sweep_to_csv(table);
  const Json j = sweep_to_json(table);
  if (!csv_out.empty()) write_file(csv_out, csv);
  if (!a.common.out.empty()) write_file(a.common.out, dump(j));
  out << (a.common.json ? dump(j) : csv);
  return kOk;
}

// ---------------------------------------------------------------- render

int cmd_render(const std::string& path, bool color, bool json, std::ostream& out) {
  const WarehouseConfig cfg = load_config(path);
  if (json) {
    out << dump({{"config", to_json(cfg)}, {"layers", render_layers(cfg, false)}});
  } else {
    out << render_layers(cfg, color);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hexstore: modular warehouse mesh simulator and configuration optimizer"};
  app.require_subcommand(1);

  DiscoverArgs disc;
  auto* discover = app.add_subcommand("discover", "Simulate addressing floods and build the cell map");
  discover->add_option("topology", disc.topology, "Topology JSON file")->required();
  discover->add_option("--origin", disc.origin, "Flooding cell id (default: first cell)");
  discover->add_option("--hop-limit", disc.hop_limit, "Drop packets at this many records (0 = unlimited)")
      ->capture_default_str();
  discover->add_option("--max-flood-cells", disc.max_flood_cells,
                       "Largest topology allowed for unlimited flooding")
      ->capture_default_str();
  discover->add_option("--routes", disc.routes_out, "Write the route set JSON here");
  discover->add_option("--map", disc.map_out, "Write the topology map JSON here");
  discover->add_option("--dump", disc.dump_out, "Write stored route packets as binary frames here");
  discover->add_flag("--json", disc.json, "Print machine-readable JSON");

  EvaluateArgs eval;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score one warehouse configuration");
  evaluate_cmd->add_option("config", eval.config, "Configuration JSON file")->required();
  add_common(evaluate_cmd, eval.common);
  evaluate_cmd->add_option("--f-speed", eval.f_speed, "Use this F_speed instead of simulating");
  evaluate_cmd->add_option("--report", eval.report_out, "Write the loading simulation report here");

  SearchArgs opt;
  std::string trace_out;
  auto add_search = [](CLI::App* cmd, SearchArgs& s) {
    cmd->add_option("--dims", s.dims, "Warehouse size nx,ny,nz");
    cmd->add_option("--loading", s.loading, "Loading cell x,y,z")->capture_default_str();
    cmd->add_option("--mode", s.mode, "exhaustive | column | anneal")->capture_default_str();
    cmd->add_option("--seed", s.seed, "Random seed (required for anneal)");
    cmd->add_option("--iterations", s.iterations, "Annealing steps")->capture_default_str();
    cmd->add_option("--t0", s.t0, "Initial annealing temperature")->capture_default_str();
    cmd->add_option("--cooling", s.cooling, "Temperature factor per step")->capture_default_str();
    cmd->add_option("--k", s.k, "Number of best configurations to report")->capture_default_str();
    add_common(cmd, s.common);
  };
  auto* optimize = app.add_subcommand("optimize", "Search for the best configurations");
  add_search(optimize, opt);
  optimize->get_option("--dims")->required();
  optimize->add_option("--trace", trace_out, "Write the annealing trace as CSV here");

  SearchArgs sw;
  std::string alphas_text;
  std::vector<std::string> fixed_rows;
  std::string csv_out;
  auto* sweep = app.add_subcommand("sweep", "Tabulate F_target over several alpha values");
  add_search(sweep, sw);
  sweep->add_option("--alphas", alphas_text, "Comma-separated alpha values")->required();
  sweep->add_option("--row", fixed_rows,
                    "Fixed row 'triaxial,f_speed,f_cost' instead of searching (repeatable)");
  sweep->add_option("--csv", csv_out, "Write the table as CSV here");

  std::string render_path;
  bool color = false;
  bool render_json = false;
  auto* render = app.add_subcommand("render", "Print a configuration layer by layer");
  render->add_option("config", render_path, "Configuration JSON file")->required();
  render->add_flag("--color", color, "Green two-axis cells, blue three-axis cells");
  render->add_flag("--json", render_json, "Print the config and layers as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*discover) return cmd_discover(disc, out);
    if (*evaluate_cmd) return cmd_evaluate(eval, out);
    if (*optimize) return cmd_optimize(opt, trace_out, out);
    if (*sweep) return cmd_sweep(sw, alphas_text, fixed_rows, csv_out, out);
    if (*render) return cmd_render(render_path, color, render_json, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace hexstore::cli
