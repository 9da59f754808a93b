#pragma once

#include <json.hpp>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hexstore/discovery.hpp"
#include "hexstore/load_sim.hpp"
#include "hexstore/optimizer.hpp"

namespace hexstore {

using Json = nlohmann::json;

/// Malformed JSON text; carries 1-based line and column of the failure.
class JsonSyntaxError : public std::runtime_error {
 public:
  JsonSyntaxError(std::size_t line, std::size_t column, const std::string& detail);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_json(std::string_view text);

// {"dims":[nx,ny,nz],"loading":[x,y,z],"cells":"TD..."}
Json to_json(const WarehouseConfig& cfg);
/// Throws ConfigError naming the offending field. Does not run validate().
WarehouseConfig config_from_json(const Json& j);

// {"cells":[{"id":hex}...],"links":[{"a":hex,"fa":f,"b":hex,"fb":f}...]}
Json to_json(const LinkTopology& topo);
/// Throws TopologyError for structural problems (not for wiring conflicts).
LinkTopology topology_from_json(const Json& j);

Json to_json(const AddressingPacket& pkt);
Json to_json(const RouteSet& rs);
Json to_json(const TopologyMap& map);
/// Concatenated wire frames of every stored route.
std::vector<std::uint8_t> route_dump(const RouteSet& rs);

// {"f_speed":s|"infeasible","loads":[{"dest":[..],"cost":c,"path":[[..]..]}..]}
Json to_json(const SimReport& report);

// {"triaxial":n,"f_speed":s,"f_cost":c,"f_target":t,"alpha":a,"norms":[sn,cn]}
Json to_json(const Evaluation& e);

Json to_json(const SearchResult& r);
std::string trace_csv(const SearchResult& r);

Json sweep_to_json(std::span<const SweepSection> sections);
std::string sweep_to_csv(std::span<const SweepSection> sections);

}  // namespace hexstore
