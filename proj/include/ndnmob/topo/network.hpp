#ifndef NDNMOB_TOPO_NETWORK_HPP
#define NDNMOB_TOPO_NETWORK_HPP

#include "ndnmob/fw/forwarder.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ndnmob {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

struct LinkParams
{
  std::int64_t bandwidthBps = 5'000'000;
  Duration delay = std::chrono::milliseconds(10);
  std::size_t queueCapPackets = 50;
};

/// Time to clock @p bytes onto a link, rounded up to whole microseconds.
Duration
serializationDelay(int bytes, std::int64_t bandwidthBps);

/// Per-direction link counters. offered = queueDrops + sent, and
/// sent = delivered + deliveryDrops + inFlight at all times.
struct LinkCounters
{
  std::uint64_t offered = 0;
  std::uint64_t queueDrops = 0;
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::uint64_t deliveryDrops = 0;
  std::uint64_t inFlight = 0;
  std::uint64_t txInterests = 0;
  std::uint64_t txData = 0;
  std::uint64_t txNacks = 0;
  std::uint64_t txBytes = 0;
};

struct LinkEnd
{
  NodeId node;
  FaceId face;
};

struct LinkInfo
{
  LinkId id;
  LinkEnd ends[2];
  LinkParams params;
  LinkCounters counters[2]; // index = sending side
};

/// Trace record for the optional packet log.
struct TraceEvent
{
  SimTime time;
  NodeId node;
  const char* event; // TX, RX or DROP
  const Packet* pkt;
  FaceId face;
};

/**
 * Owns the nodes and point-to-point links of one simulation and moves packets
 * between them. Each link direction is a tail-drop FIFO followed by a fixed
 * propagation delay; a packet that reaches a disabled face is lost.
 */
class Network
{
public:
  using AppSink = std::function<void(const Packet&)>;
  using InterestObserver = std::function<void(NodeId, FaceId, const Interest&)>;
  using TraceSink = std::function<void(const TraceEvent&)>;

  explicit
  Network(Scheduler& sched)
    : m_sched(sched)
  {
  }

  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  Scheduler&
  scheduler() noexcept
  {
    return m_sched;
  }

  NodeId
  addNode(std::string name, ForwarderOptions opts);

  Forwarder&
  node(NodeId id)
  {
    return *m_nodes.at(id);
  }

  const Forwarder&
  node(NodeId id) const
  {
    return *m_nodes.at(id);
  }

  std::size_t
  nodeCount() const noexcept
  {
    return m_nodes.size();
  }

  /// Creates a face on each node and joins them with a bidirectional link.
  LinkId
  connect(NodeId a, NodeId b, FaceKind kind, const LinkParams& params);

  const LinkInfo&
  link(LinkId id) const
  {
    return m_links.at(id);
  }

  const std::vector<LinkInfo>&
  links() const noexcept
  {
    return m_links;
  }

  /// Creates an application face on @p node whose outgoing packets reach
  /// @p sink asynchronously.
  FaceId
  addAppFace(NodeId node, AppSink sink);

  /// Hands a packet from an application to its node, asynchronously.
  void
  sendFromApp(NodeId node, FaceId appFace, Packet pkt);

  /// The link attached to (@p node, @p face), or nullptr for app faces.
  const LinkInfo*
  linkOf(NodeId node, FaceId face) const;

  /// Called for every Interest that enters a link queue.
  void
  setInterestObserver(InterestObserver obs)
  {
    m_interestObserver = std::move(obs);
  }

  void
  setTraceSink(TraceSink sink)
  {
    m_trace = std::move(sink);
  }

  /// Sum of counters over every link and both directions.
  LinkCounters
  totalCounters() const;

private:
  struct Binding
  {
    LinkId link = 0;
    int side = -1; // -1 = application face
    AppSink app;
  };

  struct Direction
  {
    std::deque<SimTime> txEnds; // packets not yet fully serialised
    SimTime busyUntil{};
  };

  void
  onSend(NodeId node, FaceId face, const Packet& pkt);

  void
  transmit(LinkInfo& link, int side, const Packet& pkt);

  void
  trace(NodeId node, const char* event, const Packet& pkt, FaceId face);

private:
  Scheduler& m_sched;
  std::vector<std::unique_ptr<Forwarder>> m_nodes;
  std::vector<std::vector<Binding>> m_bindings; // [node][face]
  std::vector<LinkInfo> m_links;
  std::vector<std::array<Direction, 2>> m_dirs;
  InterestObserver m_interestObserver;
  TraceSink m_trace;
};

} // namespace ndnmob

#endif // NDNMOB_TOPO_NETWORK_HPP
