#include "hexstore/io.hpp"

#include <iomanip>
#include <sstream>

namespace hexstore {

JsonSyntaxError::JsonSyntaxError(std::size_t line, std::size_t column, const std::string& detail)
    : std::runtime_error("JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

namespace {

Json coord_json(const Coord& c) { return Json::array({c.x, c.y, c.z}); }

Json speed_json(const std::optional<double>& v) {
  if (!v) return "infeasible";
  return *v;
}

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string display3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << round3(v);
  return os.str();
}

Coord coord_from(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(field, "expected an array of three integers");
  }
  int v[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) {
      throw ConfigError(field, "expected an array of three integers");
    }
    v[i] = j[i].get<int>();
  }
  return {v[0], v[1], v[2]};
}

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw TopologyError(std::string(what) + " is missing \"" + key + "\"");
  }
  return j.at(key);
}

CellId id_from(const Json& j) {
  if (!j.is_string()) throw TopologyError("cell id must be a string");
  try {
    return CellId::from_hex(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw TopologyError(e.what());
  }
}

Face face_from(const Json& j) {
  if (!j.is_number_integer()) throw TopologyError("face must be an integer 1..6");
  auto f = Face::try_from_index(j.get<int>());
  if (!f) throw TopologyError("face must be an integer 1..6");
  return *f;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonSyntaxError(line, column, e.what());
  }
}

Json to_json(const WarehouseConfig& cfg) {
  Json j;
  j["dims"] = Json::array({cfg.dims.nx, cfg.dims.ny, cfg.dims.nz});
  j["loading"] = coord_json(cfg.loading);
  j["cells"] = cfg.kinds_string();
  return j;
}

WarehouseConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  for (const char* key : {"dims", "loading", "cells"}) {
    if (!j.contains(key)) throw ConfigError(key, "missing");
  }
  const Coord d = coord_from(j.at("dims"), "dims");
  const Coord loading = coord_from(j.at("loading"), "loading");
  if (!j.at("cells").is_string()) throw ConfigError("cells", "expected a string");
  return WarehouseConfig::from_kinds_string({d.x, d.y, d.z}, j.at("cells").get<std::string>(),
                                            loading);
}

Json to_json(const LinkTopology& topo) {
  Json cells = Json::array();
  for (const CellId& c : topo.cells) cells.push_back({{"id", c.hex()}});
  Json links = Json::array();
  for (const Link& l : topo.links) {
    links.push_back({{"a", l.a.hex()}, {"fa", l.fa.index()}, {"b", l.b.hex()}, {"fb", l.fb.index()}});
  }
  return {{"cells", std::move(cells)}, {"links", std::move(links)}};
}

LinkTopology topology_from_json(const Json& j) {
  LinkTopology topo;
  const Json& cells = member(j, "cells", "topology");
  if (!cells.is_array()) throw TopologyError("\"cells\" must be an array");
  for (const Json& c : cells) topo.cells.push_back(id_from(member(c, "id", "cell entry")));
  if (j.contains("links")) {
    const Json& links = j.at("links");
    if (!links.is_array()) throw TopologyError("\"links\" must be an array");
    for (const Json& l : links) {
      topo.links.push_back({id_from(member(l, "a", "link")), face_from(member(l, "fa", "link")),
                            id_from(member(l, "b", "link")), face_from(member(l, "fb", "link"))});
    }
  }
  return topo;
}

Json to_json(const AddressingPacket& pkt) {
  Json cells = Json::array();
  Json faces = Json::array();
  for (const HopRecord& r : pkt.records) {
    cells.push_back(r.cell.hex());
    faces.push_back(r.egress.index());
  }
  return {{"cells", std::move(cells)}, {"faces", std::move(faces)}};
}

Json to_json(const RouteSet& rs) {
  Json routes = Json::array();
  for (const AddressingPacket& p : rs.routes) {
    Json r = to_json(p);
    r["cells"].push_back(rs.origin.hex());  // closing hop back to the origin
    routes.push_back(std::move(r));
  }
  Json rejected = Json::array();
  for (const Rejection& rej : rs.rejections) {
    Json r = to_json(rej.packet);
    r["cells"].push_back(rej.at.hex());
    rejected.push_back(std::move(r));
  }
  return {{"origin", rs.origin.hex()},
          {"routes", std::move(routes)},
          {"crisscross", rs.crisscross},
          {"hop_limited", rs.hop_limited},
          {"rejected", std::move(rejected)}};
}

Json to_json(const TopologyMap& map) {
  Json cells = Json::array();
  for (const auto& [id, c] : map.coords) cells.push_back({{"id", id.hex()}, {"xyz", coord_json(c)}});
  Json adjacency = Json::array();
  for (const auto& [port, nb] : map.adjacency) {
    adjacency.push_back({{"cell", port.cell.hex()}, {"face", port.face.index()}, {"neighbor", nb.hex()}});
  }
  return {{"root", map.root.hex()}, {"cells", std::move(cells)}, {"adjacency", std::move(adjacency)}};
}

std::vector<std::uint8_t> route_dump(const RouteSet& rs) {
  std::vector<std::uint8_t> out;
  for (const AddressingPacket& p : rs.routes) {
    const auto frame = wire::encode(p);
    out.insert(out.end(), frame.begin(), frame.end());
  }
  return out;
}

Json to_json(const SimReport& report) {
  Json loads = Json::array();
  for (const LoadRecord& l : report.loads) {
    Json path = Json::array();
    for (const Coord& c : l.path) path.push_back(coord_json(c));
    loads.push_back({{"dest", coord_json(l.dest)}, {"cost", l.cost}, {"path", std::move(path)}});
  }
  Json j = {{"f_speed", speed_json(report.f_speed)}, {"loads", std::move(loads)}};
  if (report.blocked) j["blocked"] = coord_json(*report.blocked);
  return j;
}

Json to_json(const Evaluation& e) {
  return {{"triaxial", e.triaxial},
          {"f_speed", speed_json(e.f_speed)},
          {"f_cost", e.f_cost},
          {"f_target", speed_json(e.f_target)},
          {"alpha", e.params.alpha},
          {"norms", Json::array({e.params.f_speed_norm, e.params.f_cost_norm})}};
}

Json to_json(const SearchResult& r) {
  Json best = Json::array();
  for (std::size_t i = 0; i < r.best.size(); ++i) {
    best.push_back({{"rank", i + 1},
                    {"config", to_json(r.best[i].config)},
                    {"evaluation", to_json(r.best[i].evaluation)}});
  }
  Json front = Json::array();
  for (const ParetoPoint& p : r.pareto) {
    front.push_back({{"f_speed", p.f_speed},
                     {"f_cost", p.f_cost},
                     {"triaxial", p.config.triaxial_count()},
                     {"config", to_json(p.config)}});
  }
  return {{"best", std::move(best)}, {"pareto", std::move(front)}, {"evaluated", r.evaluated}};
}

std::string trace_csv(const SearchResult& r) {
  std::ostringstream os;
  os << "iteration,best_f_target\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    os << i << ',' << (std::isfinite(r.trace[i]) ? number(r.trace[i]) : "inf") << '\n';
  }
  return os.str();
}

Json sweep_to_json(std::span<const SweepSection> sections) {
  Json out = Json::array();
  for (const SweepSection& s : sections) {
    Json rows = Json::array();
    for (const SweepRow& r : s.rows) {
      Json row = {{"triaxial", r.triaxial},
                  {"f_speed", speed_json(r.f_speed)},
                  {"f_cost", r.f_cost},
                  {"f_target", speed_json(r.f_target)},
                  {"display", r.f_target ? display3(*r.f_target) : "infeasible"}};
      if (r.kinds) row["cells"] = *r.kinds;
      rows.push_back(std::move(row));
    }
    out.push_back({{"alpha", s.alpha}, {"rows", std::move(rows)}});
  }
  return out;
}

std::string sweep_to_csv(std::span<const SweepSection> sections) {
  std::ostringstream os;
  os << "alpha,triaxial,f_speed,f_cost,f_target\n";
  for (const SweepSection& s : sections) {
    for (const SweepRow& r : s.rows) {
      os << number(s.alpha) << ',' << r.triaxial << ','
         << (r.f_speed ? number(*r.f_speed) : "infeasible") << ',' << number(r.f_cost) << ','
         << (r.f_target ? display3(*r.f_target) : "infeasible") << '\n';
    }
  }
  return os.str();
}

}  // namespace hexstore
