#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hexstore/cli.hpp"
#include "hexstore/io.hpp"
#include "hexstore/render.hpp"

using namespace hexstore;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HEXSTORE_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hexstore_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"render", data("missing.json")}).code == cli::kUsage);
}

TEST_CASE("discover") {
  const auto r = run({"discover", data("grid3x3.json"), "--json"});
  REQUIRE(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["routes"]["routes"].size() == 14);
  CHECK(j["routes"]["rejected"].size() == j["routes"]["crisscross"].get<std::size_t>());
  CHECK(j["map"]["cells"].size() == 9);
  CHECK(j["map"]["adjacency"].size() == 24);

  const auto limited = run({"discover", data("grid3x3.json"), "--hop-limit", "1", "--json"});
  REQUIRE(limited.code == cli::kOk);
  const Json lj = Json::parse(limited.out);
  CHECK(lj["routes"]["routes"].empty());
  CHECK(lj["map"]["cells"].size() == 9);

  const auto other = run({"discover", data("grid3x3.json"), "--origin",
                          "000000000000000000000005", "--json"});
  REQUIRE(other.code == cli::kOk);
  CHECK(Json::parse(other.out)["routes"]["origin"] == "000000000000000000000005");

  CHECK(run({"discover", data("grid3x3.json"), "--max-flood-cells", "8"}).code == cli::kUsage);
  CHECK(run({"discover", data("grid3x3.json"), "--origin", "zz"}).code == cli::kUsage);
  CHECK(run({"discover", data("grid3x3.json"), "--origin", "0000000000000000000000ff"}).code ==
        cli::kUsage);
  CHECK(run({"discover", data("malformed.json")}).code == cli::kUsage);
  const auto bad = run({"discover", data("grid3x3_mislabeled.json")});
  CHECK(bad.code == cli::kInconsistent);
  CHECK(bad.err.find("inconsistent") != std::string::npos);
}

TEST_CASE("discover writes route, map and frame files") {
  const auto routes = scratch("routes.json"), map = scratch("map.json"), frames = scratch("routes.bin");
  REQUIRE(run({"discover", data("grid3x3.json"), "--routes", routes.string(), "--map",
               map.string(), "--dump", frames.string()})
              .code == cli::kOk);
  CHECK(Json::parse(slurp(routes))["routes"].size() == 14);
  CHECK(Json::parse(slurp(map))["root"] == "000000000000000000000001");
  const std::string bin = slurp(frames);
  REQUIRE_FALSE(bin.empty());
  CHECK(static_cast<unsigned char>(bin[0]) == 0x7E);
}

TEST_CASE("evaluate") {
  const auto all_d = run({"evaluate", data("warehouse_4x4x3_D.json"), "--json"});
  CHECK(all_d.code == cli::kInfeasible);
  CHECK(Json::parse(all_d.out)["f_target"] == "infeasible");

  const auto square = run({"evaluate", data("warehouse_2x2x1_D.json"), "--json"});
  REQUIRE(square.code == cli::kOk);
  // speed matches the all three-axis layer, cost is 0.6 of it
  CHECK(Json::parse(square.out)["f_target"].get<double>() == doctest::Approx(0.8));

  const auto full = run({"evaluate", data("warehouse_4x4x3_T.json"), "--norms", "7808,48",
                         "--alpha", "1", "--json"});
  REQUIRE(full.code == cli::kOk);
  const Json fj = Json::parse(full.out);
  CHECK(fj["f_cost"] == 48.0);
  CHECK(fj["triaxial"] == 48);

  const auto pinned = run({"evaluate", data("warehouse_4x4x3_T.json"), "--norms", "7808,48",
                           "--f-speed", "7808", "--json"});
  CHECK(Json::parse(pinned.out)["f_target"] == 1.0);

  const auto text = run({"evaluate", data("warehouse_2x2x1_D.json"), "--norms", "8,4"});
  CHECK(text.out.find("self norms") != std::string::npos);

  const auto report = scratch("report.json"), result = scratch("eval.json");
  REQUIRE(run({"evaluate", data("warehouse_2x2x1_D.json"), "--report", report.string(), "-o",
               result.string()})
              .code == cli::kOk);
  CHECK(Json::parse(slurp(report))["loads"].size() == 4);
  CHECK(Json::parse(slurp(result))["triaxial"] == 0);

  const auto doubled = run({"evaluate", data("warehouse_2x2x1_D.json"), "--unit", "2", "--norms",
                            "1,1", "--alpha", "1", "--json"});
  CHECK(Json::parse(doubled.out)["f_speed"] == 8.0);

  CHECK(run({"evaluate", data("warehouse_2x2x1_D.json"), "--alpha", "1.5"}).code == cli::kUsage);
  CHECK(run({"evaluate", data("warehouse_2x2x1_D.json"), "--weights", "1,x,1"}).code ==
        cli::kUsage);
  CHECK(run({"evaluate", data("warehouse_2x2x1_D.json"), "--weights", "1,-1,1"}).code ==
        cli::kUsage);
  CHECK(run({"evaluate", data("malformed.json")}).code == cli::kUsage);
}

TEST_CASE("optimize") {
  CHECK(run({"optimize", "--dims", "4,4,3", "--mode", "exhaustive"}).code == cli::kSizeGuard);
  CHECK(run({"optimize", "--dims", "2,2,2"}).code == cli::kUsage);
  CHECK(run({"optimize", "--dims", "2,2,2", "--mode", "bogus"}).code == cli::kUsage);
  CHECK(run({"optimize", "--dims", "2,2", "--mode", "exhaustive"}).code == cli::kUsage);
  CHECK(run({"optimize", "--dims", "2,2,2", "--loading", "5,0,0", "--mode", "exhaustive"}).code ==
        cli::kUsage);

  const auto ex = run({"optimize", "--dims", "1,1,2", "--mode", "exhaustive", "--alpha", "0",
                       "--json"});
  REQUIRE(ex.code == cli::kOk);
  const Json j = Json::parse(ex.out);
  CHECK(j["best"][0]["config"]["cells"] == "TD");
  CHECK(j["evaluated"] == 4);

  const auto trace = scratch("trace.csv");
  const auto an = run({"optimize", "--dims", "2,2,2", "--seed", "3", "--iterations", "50",
                       "--trace", trace.string()});
  REQUIRE(an.code == cli::kOk);
  CHECK(an.out.find("pareto front") != std::string::npos);
  const std::string csv = slurp(trace);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 52);
}

TEST_CASE("sweep") {
  CHECK(run({"sweep", "--alphas", ""}).code == cli::kUsage);
  CHECK(run({"sweep", "--alphas", "0.5,2", "--row", "1,2,3", "--norms", "1,1"}).code ==
        cli::kUsage);
  CHECK(run({"sweep", "--alphas", "0.5", "--row", "1,2,3"}).code == cli::kUsage);

  const auto table = run({"sweep", "--alphas", "1,0.5,0.1", "--norms", "7808,48",
                          "--row", "48,7808,48", "--row", "45,7820,46.8", "--row", "15,8144,34.8",
                          "--row", "12,8360,33.6", "--row", "6,8960,31.2"});
  REQUIRE(table.code == cli::kOk);
  for (const char* line : {"1,45,7820,46.8,1.002", "1,6,8960,31.2,1.148", "0.5,15,8144,34.8,0.884",
                           "0.5,12,8360,33.6,0.885", "0.1,12,8360,33.6,0.737",
                           "0.1,6,8960,31.2,0.700"}) {
    CAPTURE(line);
    CHECK(table.out.find(std::string(line) + "\n") != std::string::npos);
  }

  const auto searched = run({"sweep", "--alphas", "1,0.5,0.1", "--dims", "2,2,2", "--mode",
                             "exhaustive", "--json"});
  REQUIRE(searched.code == cli::kOk);
  CHECK(Json::parse(searched.out).size() == 3);
}

TEST_CASE("render") {
  const auto plain = run({"render", data("warehouse_2x2x1_D.json")});
  REQUIRE(plain.code == cli::kOk);
  CHECK(plain.out == "z=0\nD@ D\nD D\n");

  const auto tall = run({"render", data("warehouse_1x1x2_DT.json")});
  CHECK(tall.out == "z=0\nD@\n\nz=1\nT\n");
  const auto parsed = parse_layers(tall.out);
  CHECK(parsed.kinds_string() == "DT");
  CHECK(parsed.loading == Coord{0, 0, 0});

  const auto colored = run({"render", data("warehouse_1x1x2_DT.json"), "--color"});
  CHECK(colored.out.find("\x1b[") != std::string::npos);
  CHECK(parse_layers(colored.out).kinds_string() == "DT");

  const auto j = run({"render", data("warehouse_2x2x1_D.json"), "--json"});
  CHECK(Json::parse(j.out)["config"]["cells"] == "DDDD");

  const auto bad = scratch("bad_config.json");
  std::ofstream(bad) << R"({"dims":[2,2,1],"loading":[3,0,0],"cells":"DDDD"})";
  const auto invalid = run({"render", bad.string()});
  CHECK(invalid.code == cli::kUsage);
  CHECK(invalid.err.find("loading") != std::string::npos);
}

TEST_CASE("repeated runs print identical bytes") {
  const std::vector<std::vector<std::string>> commands = {
      {"discover", data("grid3x3.json"), "--json"},
      {"evaluate", data("warehouse_4x4x3_T.json"), "--json"},
      {"optimize", "--dims", "2,2,2", "--seed", "7", "--iterations", "300", "--json"},
  };
  for (const auto& c : commands) {
    const auto first = run(c);
    const auto second = run(c);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
