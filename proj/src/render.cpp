#include "hexstore/render.hpp"

#include <sstream>
#include <vector>

namespace hexstore {

namespace {

constexpr std::string_view kGreen = "\x1b[32m";
constexpr std::string_view kBlue = "\x1b[34m";
constexpr std::string_view kReset = "\x1b[0m";

std::string strip_ansi(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\x1b' && i + 1 < text.size() && text[i + 1] == '[') {
      i += 2;
      while (i < text.size() && text[i] != 'm') ++i;
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

[[noreturn]] void malformed(const std::string& why) { throw ConfigError("render", why); }

}  // namespace

std::string render_layers(const WarehouseConfig& cfg, bool color) {
  require_valid(cfg);
  const Dims& d = cfg.dims;
  std::ostringstream os;
  for (int z = 0; z < d.nz; ++z) {
    if (z) os << '\n';
    os << "z=" << z << '\n';
    for (int y = 0; y < d.ny; ++y) {
      for (int x = 0; x < d.nx; ++x) {
        const Coord c{x, y, z};
        const CellKind k = cfg.kind_at(c);
        if (x) os << ' ';
        if (color) os << (k == CellKind::ThreeAxis ? kBlue : kGreen);
        os << kind_char(k);
        if (color) os << kReset;
        if (c == cfg.loading) os << '@';
      }
      os << '\n';
    }
  }
  return os.str();
}

WarehouseConfig parse_layers(std::string_view text) {
  std::istringstream in(strip_ansi(text));
  std::vector<std::vector<std::vector<std::string>>> layers;  // [z][y][x]
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("z=", 0) == 0) {
      if (line.substr(2) != std::to_string(layers.size())) malformed("unexpected layer header " + line);
      layers.emplace_back();
      continue;
    }
    if (layers.empty()) malformed("cell row before first layer header");
    std::istringstream row(line);
    std::vector<std::string> tokens;
    for (std::string tok; row >> tok;) tokens.push_back(tok);
    layers.back().push_back(std::move(tokens));
  }
  if (layers.empty() || layers[0].empty() || layers[0][0].empty()) malformed("no cells");

  Dims dims{static_cast<int>(layers[0][0].size()), static_cast<int>(layers[0].size()),
            static_cast<int>(layers.size())};
  WarehouseConfig cfg{dims, std::vector<CellKind>(dims.cell_count()), {}};
  bool have_loading = false;
  for (int z = 0; z < dims.nz; ++z) {
    if (static_cast<int>(layers[z].size()) != dims.ny) malformed("layers differ in row count");
    for (int y = 0; y < dims.ny; ++y) {
      if (static_cast<int>(layers[z][y].size()) != dims.nx) malformed("rows differ in length");
      for (int x = 0; x < dims.nx; ++x) {
        const std::string& tok = layers[z][y][x];
        const Coord c{x, y, z};
        if (tok.empty() || tok.size() > 2 || (tok.size() == 2 && tok[1] != '@')) {
          malformed("bad cell token '" + tok + "'");
        }
        if (tok[0] == 'T') {
          cfg.kinds[dims.index_of(c)] = CellKind::ThreeAxis;
        } else if (tok[0] == 'D') {
          cfg.kinds[dims.index_of(c)] = CellKind::TwoAxis;
        } else {
          malformed("bad cell token '" + tok + "'");
        }
        if (tok.size() == 2) {
          if (have_loading) malformed("more than one loading cell");
          cfg.loading = c;
          have_loading = true;
        }
      }
    }
  }
  if (!have_loading) malformed("no loading cell marked");
  return cfg;
}

}  // namespace hexstore
