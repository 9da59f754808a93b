#include "hexstore/mesh_sim.hpp"

#include <algorithm>
#include <sstream>

namespace hexstore {

ProtocolAction handle_packet(const CellContext& cell, Face ingress, const AddressingPacket& pkt,
                             std::optional<std::size_t> hop_limit) {
  if (pkt.records.empty()) throw ProtocolError("empty addressing packet");
  ProtocolAction action;
  if (pkt.origin() == cell.id) {
    action.kind = ActionKind::StoreRoute;
    return action;
  }
  if (pkt.contains(cell.id)) {
    action.kind = ActionKind::DiscardCrisscross;
    return action;
  }
  if (hop_limit && pkt.records.size() >= *hop_limit) {
    action.kind = ActionKind::DiscardHopLimit;
    return action;
  }
  action.kind = ActionKind::Forward;
  for (Face f : Face::all()) {
    if (f == ingress || !cell.connected[static_cast<std::size_t>(f.index() - 1)]) continue;
    AddressingPacket out = pkt;
    out.records.push_back({cell.id, f});
    action.emissions.push_back({f, std::move(out)});
  }
  return action;
}

MeshSimulation::MeshSimulation(LinkTopology topo, SimOptions opts)
    : topo_(std::move(topo)), opts_(opts) {
  if (opts_.hop_limit && *opts_.hop_limit == 0) {
    throw std::invalid_argument("hop limit must be at least 1");
  }
  auto problems = validate_topology(topo_);
  if (!problems.empty()) {
    std::ostringstream os;
    os << "invalid topology:";
    for (const auto& p : problems) os << "\n  " << p;
    throw TopologyError(os.str());
  }
  // Cell indices follow ascending id so that index order is the tie-break order.
  ids_ = topo_.cells;
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
  ports_.resize(ids_.size());
  for (const Link& l : topo_.links) {
    const std::size_t a = index_.at(l.a);
    const std::size_t b = index_.at(l.b);
    ports_[a][static_cast<std::size_t>(l.fa.index() - 1)] = Peer{b, l.fb};
    ports_[b][static_cast<std::size_t>(l.fb.index() - 1)] = Peer{a, l.fa};
  }
  routes_.resize(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) routes_[i].origin = ids_[i];
}

std::size_t MeshSimulation::index_of(const CellId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw TopologyError("unknown cell " + id.hex());
  return it->second;
}

void MeshSimulation::emit(std::size_t sender, Face face, const AddressingPacket& pkt) {
  const auto& peer = ports_[sender][static_cast<std::size_t>(face.index() - 1)];
  if (!peer) return;
  queue_.push_back({peer->cell, peer->face, wire::encode(pkt)});
}

void MeshSimulation::start_flood(std::size_t cell) {
  for (Face f : Face::all()) {
    emit(cell, f, AddressingPacket{{HopRecord{ids_[cell], f}}});
  }
}

void MeshSimulation::power_on() {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    routes_[i] = RouteSet{ids_[i], {}, 0, 0, {}};
    start_flood(i);
  }
}

void MeshSimulation::reinitiate(const CellId& cell) {
  const std::size_t i = index_of(cell);
  routes_[i] = RouteSet{ids_[i], {}, 0, 0, {}};
  start_flood(i);
}

void MeshSimulation::inject(const CellId& receiver, Face ingress,
                            std::vector<std::uint8_t> frame) {
  queue_.push_back({index_of(receiver), ingress, std::move(frame)});
}

std::size_t MeshSimulation::run(std::size_t max_events) {
  std::size_t handled = 0;
  while (!queue_.empty() && handled < max_events) {
    Delivery d = std::move(queue_.front());
    queue_.pop_front();
    deliver(d);
    ++handled;
  }
  return handled;
}

void MeshSimulation::deliver(const Delivery& d) {
  ++delivered_;
  const CellId& me = ids_[d.receiver];
  AddressingPacket pkt;
  try {
    pkt = wire::decode(d.frame);
  } catch (const ProtocolError& e) {
    faults_.push_back({me, d.ingress, e.what()});
    return;
  }
  if (opts_.record_receptions) receptions_.push_back({me, d.ingress, pkt});

  CellContext ctx{me, {}};
  for (std::size_t f = 0; f < 6; ++f) ctx.connected[f] = ports_[d.receiver][f].has_value();

  ProtocolAction action = handle_packet(ctx, d.ingress, pkt, opts_.hop_limit);
  auto origin = index_.find(pkt.origin());
  switch (action.kind) {
    case ActionKind::StoreRoute:
      routes_[d.receiver].routes.push_back(std::move(pkt));
      break;
    case ActionKind::DiscardCrisscross:
      if (origin != index_.end()) {
        RouteSet& rs = routes_[origin->second];
        ++rs.crisscross;
        rs.rejections.push_back({std::move(pkt), me});
      }
      break;
    case ActionKind::DiscardHopLimit:
      if (origin != index_.end()) ++routes_[origin->second].hop_limited;
      break;
    case ActionKind::Forward:
      for (const Emission& e : action.emissions) emit(d.receiver, e.face, e.packet);
      break;
  }
}

const RouteSet& MeshSimulation::routes(const CellId& cell) const { return routes_[index_of(cell)]; }

RouteSet run_flood(const LinkTopology& topo, const CellId& origin,
                   std::optional<std::size_t> hop_limit) {
  MeshSimulation sim(topo, {hop_limit, false});
  sim.reinitiate(origin);
  sim.run();
  return sim.routes(origin);
}

}  // namespace hexstore
