#ifndef NDNMOB_TOPO_TOPOLOGY_HPP
#define NDNMOB_TOPO_TOPOLOGY_HPP

#include "ndnmob/mobility/geometry.hpp"
#include "ndnmob/topo/network.hpp"

#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

namespace ndnmob {

enum class Layout {
  /// One AS per host side, edge routers linked directly.
  SingleAs,
  /// Two ASs per side joined by a bowtie between the four edge routers.
  TwoAs,
};

std::string_view
toString(Layout layout) noexcept;

enum class NodeRole {
  Host,
  AccessPoint,
  Aggregation,
  Edge,
};

std::string_view
toString(NodeRole role) noexcept;

struct TopologyParams
{
  Layout layout = Layout::SingleAs;
  int apCount = 7;
  double apSpacing = 215.0;
  int aggFanIn = 3;
  LinkParams wired{5'000'000, std::chrono::milliseconds(10), 50};
  LinkParams wireless{11'000'000, std::chrono::milliseconds(1), 50};
  bool consumerMobile = false;
  bool producerMobile = false;

  StrategyKind strategy = StrategyKind::SmartFlooding;
  std::size_t routerCsCapacity = 1000;
  std::size_t hostCsCapacity = 0;
  PitTimeoutPolicy routerPitPolicy = PitTimeoutPolicy::Adaptive;
  PitTimeoutPolicy hostPitPolicy = PitTimeoutPolicy::Adaptive;
  Duration minPitTimeout = std::chrono::milliseconds(20);
  Duration deadNonceGrace = std::chrono::seconds(1);

  Name producerPrefix{"producer", "app", "stream"};
};

/// The 7-AP field one host roams in.
struct AccessField
{
  std::vector<Vec2> positions;
  std::vector<NodeId> apNodes;
  std::vector<int> asOfAp;
};

/// A host's radios: one card per reachable AP.
struct HostRadios
{
  NodeId host = 0;
  std::vector<int> apIndex;
  std::vector<FaceId> hostFaces;
  std::vector<FaceId> apFaces;

  /// Position in the card arrays of the card towards AP @p ap, or -1.
  int
  cardFor(int ap) const noexcept;
};

struct Topology
{
  std::unique_ptr<Network> net;
  TopologyParams params;
  AccessField consumerField;
  AccessField producerField;
  HostRadios consumer;
  HostRadios producer;
  std::vector<NodeRole> roles;
  std::vector<int> asOf;
  std::vector<NodeId> edges;
};

/**
 * Builds the access trees and core for @p params.
 *
 * Each side is a hex field of APs; the APs of one AS hang off
 * ceil(n / fan-in) aggregation routers which meet at the AS edge router. A
 * mobile host gets a wireless card to every AP on its side, all disabled; a
 * static host gets one card to the centre AP, enabled. The producer prefix is
 * routed downwards on the producer side and towards the producer edges on the
 * consumer side. The producer host's own route to its application is left to
 * the caller. Throws std::invalid_argument on bad parameters.
 */
Topology
buildTopology(Scheduler& sched, const TopologyParams& params);

/// Writes `node_a,face,node_b,bandwidth_bps,delay_us` for every link end.
void
dumpTopology(const Topology& topo, std::ostream& os);

/// True if, for every pair of consumer and producer attachment APs, a path of
/// links joins the two hosts when only those two cards are in use.
bool
auditReachability(const Topology& topo);

/// Number of wired and wireless links on the shortest consumer-producer path
/// when both hosts sit at the given APs.
struct PathShape
{
  int wiredHops = 0;
  int wirelessHops = 0;
};

PathShape
shortestPath(const Topology& topo, int consumerAp, int producerAp);

} // namespace ndnmob

#endif // NDNMOB_TOPO_TOPOLOGY_HPP
