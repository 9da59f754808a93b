#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hexstore/io.hpp"
#include "hexstore/mesh_sim.hpp"
#include "oracles.hpp"

using namespace hexstore;
using oracle::cid;

namespace {

std::vector<std::uint64_t> cell_numbers(const AddressingPacket& p) {
  std::vector<std::uint64_t> out;
  for (const HopRecord& r : p.records) {
    std::uint64_t v = 0;
    for (std::size_t i = 4; i < 12; ++i) v = v << 8 | r.cell.bytes()[i];
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> closed(std::vector<std::uint64_t> seq) {
  seq.push_back(seq.front());
  return seq;
}

std::multiset<std::vector<std::uint64_t>> route_sequences(const RouteSet& rs) {
  std::multiset<std::vector<std::uint64_t>> out;
  for (const auto& p : rs.routes) out.insert(closed(cell_numbers(p)));
  return out;
}

oracle::Cycle as_cycle(const AddressingPacket& p) {
  oracle::Cycle c;
  for (const HopRecord& r : p.records) c.emplace_back(r.cell, r.egress.index());
  return c;
}

CellContext context(std::uint64_t id, std::initializer_list<int> faces) {
  CellContext ctx{cid(id), {}};
  for (int f : faces) ctx.connected[static_cast<std::size_t>(f - 1)] = true;
  return ctx;
}

AddressingPacket packet(std::initializer_list<std::pair<std::uint64_t, int>> recs) {
  AddressingPacket p;
  for (auto [id, f] : recs) p.records.push_back({cid(id), Face::from_index(f)});
  return p;
}

}  // namespace

TEST_CASE("handle_packet forwards with own record appended") {
  // Cell 5 sits in the middle of the 3x3 grid; cell 2 is behind its -Y face.
  const auto ctx = context(5, {1, 2, 3, 4});
  const auto in = packet({{1, 1}, {2, 3}});
  const auto action = handle_packet(ctx, Face::from_index(4), in, std::nullopt);
  REQUIRE(action.kind == ActionKind::Forward);
  REQUIRE(action.emissions.size() == 3);
  // faces 1 (+X, toward 6), 2 (-X, toward 4), 3 (+Y, toward 8)
  CHECK(action.emissions[0].face == Face::from_index(1));
  CHECK(action.emissions[1].face == Face::from_index(2));
  CHECK(action.emissions[2].face == Face::from_index(3));
  for (const auto& e : action.emissions) {
    CHECK(cell_numbers(e.packet) == std::vector<std::uint64_t>{1, 2, 5});
    CHECK(e.packet.records.back().egress == e.face);
  }
}

TEST_CASE("handle_packet stores own packets and drops crisscross") {
  const auto own = handle_packet(context(1, {1, 3}), Face::from_index(3),
                                 packet({{1, 1}, {2, 3}, {5, 2}, {4, 4}}), std::nullopt);
  CHECK(own.kind == ActionKind::StoreRoute);
  CHECK(own.emissions.empty());

  const auto cross = handle_packet(context(2, {1, 2, 3}), Face::from_index(1),
                                   packet({{1, 1}, {2, 3}, {5, 1}, {6, 4}, {3, 2}}), std::nullopt);
  CHECK(cross.kind == ActionKind::DiscardCrisscross);
  CHECK(cross.emissions.empty());

  const auto limited = handle_packet(context(2, {1, 2, 3}), Face::from_index(2),
                                     packet({{1, 1}}), std::size_t{1});
  CHECK(limited.kind == ActionKind::DiscardHopLimit);

  CHECK_THROWS_AS(handle_packet(context(2, {1}), Face::from_index(1), AddressingPacket{},
                                std::nullopt),
                  ProtocolError);
}

TEST_CASE("flood on the 3x3 grid finds every simple cycle through the origin") {
  const RouteSet rs = run_flood(oracle::example_grid(), cid(1));
  const std::multiset<std::vector<std::uint64_t>> expected = {
      {1, 2, 3, 6, 9, 8, 7, 4, 1}, {1, 4, 7, 8, 9, 6, 3, 2, 1}, {1, 2, 3, 6, 5, 4, 1},
      {1, 4, 5, 6, 3, 2, 1},       {1, 2, 5, 8, 7, 4, 1},       {1, 4, 7, 8, 5, 2, 1},
      {1, 2, 5, 4, 1},             {1, 4, 5, 2, 1},             {1, 2, 3, 6, 9, 8, 5, 4, 1},
      {1, 4, 5, 8, 9, 6, 3, 2, 1}, {1, 2, 3, 6, 5, 8, 7, 4, 1}, {1, 4, 7, 8, 5, 6, 3, 2, 1},
      // the eight-cell cycle that skips cell 3, mirror of the one skipping cell 7
      {1, 2, 5, 6, 9, 8, 7, 4, 1}, {1, 4, 7, 8, 9, 6, 5, 2, 1},
  };
  CHECK(rs.routes.size() == 14);
  CHECK(route_sequences(rs) == expected);
  CHECK(rs.hop_limited == 0);
  CHECK(rs.crisscross == rs.rejections.size());

  std::set<std::vector<std::uint64_t>> rejected;
  for (const auto& r : rs.rejections) {
    auto seq = cell_numbers(r.packet);
    seq.push_back(cell_numbers(AddressingPacket{{{r.at, Face::from_index(1)}}}).front());
    rejected.insert(seq);
  }
  CHECK(rejected.count({1, 2, 5, 6, 3, 2}));
  CHECK(rejected.count({1, 4, 5, 8, 7, 4}));
}

TEST_CASE("flood edge cases") {
  LinkTopology single{{cid(1)}, {}};
  const RouteSet alone = run_flood(single, cid(1));
  CHECK(alone.routes.empty());
  CHECK(alone.crisscross == 0);

  LinkTopology pair{{cid(1), cid(2)}, {{cid(1), Face::from_index(1), cid(2), Face::from_index(2)}}};
  CHECK(oracle::simple_cycles(pair, cid(1)).empty());
  CHECK(run_flood(pair, cid(1)).routes.empty());

  // Two cells joined by two links form a two-hop cycle.
  LinkTopology doubled = pair;
  doubled.links.push_back({cid(1), Face::from_index(3), cid(2), Face::from_index(4)});
  CHECK(run_flood(doubled, cid(1)).routes.size() == 2);

  CHECK(run_flood(oracle::example_grid(), cid(1), 1).routes.empty());
}

TEST_CASE("hop limit bounds route length") {
  const auto topo = oracle::example_grid();
  const RouteSet full = run_flood(topo, cid(1));
  for (std::size_t limit = 1; limit <= 9; ++limit) {
    const RouteSet rs = run_flood(topo, cid(1), limit);
    std::size_t expected = 0;
    for (const auto& r : full.routes) expected += r.records.size() <= limit;
    CHECK(rs.routes.size() == expected);
    for (const auto& r : rs.routes) CHECK(r.records.size() <= limit);
  }
}

TEST_CASE("flood equals brute-force cycle enumeration") {
  std::mt19937_64 rng(2024);
  std::vector<LinkTopology> cases{oracle::example_grid(), grid_topology({2, 2, 2}),
                                  grid_topology({5, 2, 1}), grid_topology({2, 2, 1})};
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 1 + rng() % 8;
    cases.push_back(oracle::random_topology(rng, n, rng() % (2 * n + 3)));
  }
  for (const auto& topo : cases) {
    const CellId origin = topo.cells[rng() % topo.cells.size()];
    const RouteSet rs = run_flood(topo, origin);
    std::multiset<oracle::Cycle> found;
    for (const auto& r : rs.routes) found.insert(as_cycle(r));
    const auto truth = oracle::simple_cycles(topo, origin);
    CHECK(found == std::multiset<oracle::Cycle>(truth.begin(), truth.end()));

    // Every route is a simple cycle and its reversal is present too.
    std::multiset<std::vector<std::uint64_t>> seqs = route_sequences(rs);
    for (const auto& s : seqs) {
      std::vector<std::uint64_t> inner(s.begin(), s.end() - 1);
      CHECK(std::set<std::uint64_t>(inner.begin(), inner.end()).size() == inner.size());
      std::vector<std::uint64_t> rev(s.rbegin(), s.rend());
      CHECK(seqs.count(rev) == seqs.count(s));
    }
  }
}

TEST_CASE("route sets serialize identically across runs") {
  const auto topo = grid_topology({2, 2, 2});
  const std::string a = to_json(run_flood(topo, topo.cells[3])).dump();
  const std::string b = to_json(run_flood(topo, topo.cells[3])).dump();
  CHECK(a == b);
  CHECK(route_dump(run_flood(topo, topo.cells[3])) == route_dump(run_flood(topo, topo.cells[3])));
}

TEST_CASE("reinitiate reproduces a fresh flood") {
  const auto topo = oracle::example_grid();
  MeshSimulation sim(topo);
  sim.power_on();
  sim.run();
  // Concurrent floods from every cell do not disturb each other's route sets.
  for (const CellId& c : topo.cells) CHECK(sim.routes(c) == run_flood(topo, c));

  sim.reinitiate(cid(5));
  sim.run();
  const RouteSet first = sim.routes(cid(5));
  CHECK(first == run_flood(topo, cid(5)));
  sim.reinitiate(cid(5));
  sim.run();
  CHECK(sim.routes(cid(5)) == first);

  CHECK_THROWS_AS(sim.reinitiate(cid(42)), TopologyError);
  MeshSimulation empty(LinkTopology{});
  CHECK_THROWS_AS(empty.reinitiate(cid(1)), TopologyError);
}

TEST_CASE("malformed frames become protocol faults") {
  MeshSimulation sim(oracle::example_grid());
  auto frame = wire::encode(AddressingPacket{{{cid(2), Face::from_index(2)}}});
  frame.back() ^= 0x40;
  sim.inject(cid(1), Face::from_index(1), frame);
  sim.inject(cid(1), Face::from_index(1), {0x7E});
  CHECK(sim.run() == 2);
  REQUIRE(sim.faults().size() == 2);
  CHECK(sim.faults()[0].receiver == cid(1));
  CHECK(sim.routes(cid(1)).routes.empty());
}

TEST_CASE("invalid topologies are rejected") {
  LinkTopology t{{cid(1), cid(2), cid(3)},
                 {{cid(1), Face::from_index(1), cid(2), Face::from_index(2)},
                  {cid(1), Face::from_index(1), cid(3), Face::from_index(2)}}};
  CHECK(validate_topology(t).size() == 1);
  CHECK_THROWS_AS(MeshSimulation{t}, TopologyError);

  LinkTopology unknown{{cid(1)}, {{cid(1), Face::from_index(1), cid(9), Face::from_index(2)}}};
  CHECK_FALSE(validate_topology(unknown).empty());
  LinkTopology dup{{cid(1), cid(1)}, {}};
  CHECK_FALSE(validate_topology(dup).empty());
  CHECK_THROWS_AS(MeshSimulation(oracle::example_grid(), {std::size_t{0}, false}),
                  std::invalid_argument);
}

TEST_CASE("topology JSON") {
  const auto topo = oracle::example_grid();
  const Json j = to_json(topo);
  const LinkTopology back = topology_from_json(j);
  CHECK(back.cells == topo.cells);
  CHECK(back.links == topo.links);
  CHECK_THROWS_AS(topology_from_json(parse_json(R"({"cells":[{"id":"xyz"}]})")), TopologyError);
  CHECK_THROWS_AS(topology_from_json(parse_json(
                      R"({"cells":[{"id":"000000000000000000000001"}],"links":[{"a":"000000000000000000000001","fa":9,"b":"000000000000000000000001","fb":1}]})")),
                  TopologyError);
}
