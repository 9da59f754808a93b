#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexstore/packet.hpp"
#include "hexstore/topology.hpp"

namespace hexstore {

/// A packet discarded because the receiving cell already appeared in it.
struct Rejection {
  AddressingPacket packet;  // as received, before the rejecting cell
  CellId at;

  friend bool operator==(const Rejection&, const Rejection&) = default;
};

/// Routes a cell has collected from its own flood.
struct RouteSet {
  CellId origin;
  std::vector<AddressingPacket> routes;  // in arrival order
  std::size_t crisscross = 0;
  std::size_t hop_limited = 0;
  std::vector<Rejection> rejections;

  friend bool operator==(const RouteSet&, const RouteSet&) = default;
};

/// What a single cell knows when a packet arrives.
struct CellContext {
  CellId id;
  std::array<bool, 6> connected{};  // indexed by face index - 1
};

enum class ActionKind { StoreRoute, DiscardCrisscross, DiscardHopLimit, Forward };

struct Emission {
  Face face;
  AddressingPacket packet;
};

struct ProtocolAction {
  ActionKind kind = ActionKind::Forward;
  std::vector<Emission> emissions;  // ascending face order
};

/// Protocol handler of one cell. Own packets are stored as routes; packets that
/// already contain this cell are crisscross discards; packets at or above the
/// hop limit are dropped; anything else gets this cell's record appended and
/// goes out on every connected face except the ingress. Throws ProtocolError
/// for an empty packet.
ProtocolAction handle_packet(const CellContext& cell, Face ingress, const AddressingPacket& pkt,
                             std::optional<std::size_t> hop_limit);

struct SimOptions {
  std::optional<std::size_t> hop_limit;  // nullopt = unlimited; otherwise >= 1
  bool record_receptions = false;
};

struct Reception {
  CellId receiver;
  Face ingress;
  AddressingPacket packet;
};

struct ProtocolFault {
  CellId receiver;
  Face ingress;
  std::string what;
};

/// Event-driven simulation of the power-on addressing protocol.
///
/// Links carry encoded frames. All pending deliveries sit in one FIFO queue;
/// emissions produced together are enqueued by (sender id, egress face).
/// Not safe to share between threads while running.
class MeshSimulation {
 public:
  /// Throws TopologyError when validate_topology() reports problems, and
  /// std::invalid_argument for a hop limit of zero.
  explicit MeshSimulation(LinkTopology topo, SimOptions opts = {});

  /// Every cell floods its addressing packet.
  void power_on();
  /// Restarts the flood of one cell, discarding its previous routes. Throws
  /// TopologyError for an unknown cell.
  void reinitiate(const CellId& cell);
  /// Queues raw bytes as if they arrived on `ingress` of `receiver`.
  void inject(const CellId& receiver, Face ingress, std::vector<std::uint8_t> frame);

  /// Processes queued deliveries until the queue drains or `max_events` have
  /// been handled. Returns the number handled.
  std::size_t run(std::size_t max_events = SIZE_MAX);
  bool idle() const { return queue_.empty(); }

  const LinkTopology& topology() const { return topo_; }
  const RouteSet& routes(const CellId& cell) const;
  const std::vector<Reception>& receptions() const { return receptions_; }
  const std::vector<ProtocolFault>& faults() const { return faults_; }
  std::size_t delivered() const { return delivered_; }

 private:
  struct Peer {
    std::size_t cell;
    Face face;
  };
  struct Delivery {
    std::size_t receiver;
    Face ingress;
    std::vector<std::uint8_t> frame;
  };

  std::size_t index_of(const CellId& id) const;
  void emit(std::size_t sender, Face face, const AddressingPacket& pkt);
  void start_flood(std::size_t cell);
  void deliver(const Delivery& d);

  LinkTopology topo_;
  SimOptions opts_;
  std::map<CellId, std::size_t> index_;
  std::vector<CellId> ids_;
  std::vector<std::array<std::optional<Peer>, 6>> ports_;
  std::vector<RouteSet> routes_;
  std::deque<Delivery> queue_;
  std::vector<Reception> receptions_;
  std::vector<ProtocolFault> faults_;
  std::size_t delivered_ = 0;
};

/// Flood from a single origin on an otherwise quiet network.
RouteSet run_flood(const LinkTopology& topo, const CellId& origin,
                   std::optional<std::size_t> hop_limit = std::nullopt);

}  // namespace hexstore
