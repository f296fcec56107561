#include "ndnmob/topo/network.hpp"

#include <array>
#include <stdexcept>

namespace ndnmob {

Duration
serializationDelay(int bytes, std::int64_t bandwidthBps)
{
  if (bandwidthBps <= 0) {
    throw std::invalid_argument("link bandwidth must be positive");
  }
  std::int64_t bits = static_cast<std::int64_t>(bytes) * 8;
  return Duration{(bits * 1'000'000 + bandwidthBps - 1) / bandwidthBps};
}

NodeId
Network::addNode(std::string name, ForwarderOptions opts)
{
  auto id = static_cast<NodeId>(m_nodes.size());
  m_nodes.push_back(std::make_unique<Forwarder>(m_sched, std::move(name), opts));
  m_bindings.emplace_back();
  m_nodes.back()->setSendHook([this, id] (FaceId face, const Packet& pkt) { onSend(id, face, pkt); });
  return id;
}

LinkId
Network::connect(NodeId a, NodeId b, FaceKind kind, const LinkParams& params)
{
  if (a == b) {
    throw std::invalid_argument("cannot link a node to itself");
  }
  if (params.bandwidthBps <= 0 || params.delay < Duration::zero()) {
    throw std::invalid_argument("invalid link parameters");
  }
  auto id = static_cast<LinkId>(m_links.size());
  FaceId fa = node(a).addFace(kind);
  FaceId fb = node(b).addFace(kind);
  m_links.push_back(LinkInfo{id, {{a, fa}, {b, fb}}, params, {}});
  m_dirs.emplace_back();
  m_bindings[a].resize(fa + 1);
  m_bindings[a][fa] = Binding{id, 0, {}};
  m_bindings[b].resize(fb + 1);
  m_bindings[b][fb] = Binding{id, 1, {}};
  return id;
}

FaceId
Network::addAppFace(NodeId n, AppSink sink)
{
  FaceId f = node(n).addFace(FaceKind::Application);
  m_bindings[n].resize(f + 1);
  m_bindings[n][f] = Binding{0, -1, std::move(sink)};
  return f;
}

void
Network::sendFromApp(NodeId n, FaceId appFace, Packet pkt)
{
  m_sched.schedule(Duration::zero(), [this, n, appFace, pkt = std::move(pkt)] {
    node(n).receive(appFace, pkt);
  });
}

const LinkInfo*
Network::linkOf(NodeId n, FaceId face) const
{
  const auto& b = m_bindings.at(n).at(face);
  return b.side < 0 ? nullptr : &m_links.at(b.link);
}

void
Network::onSend(NodeId n, FaceId face, const Packet& pkt)
{
  auto& b = m_bindings.at(n).at(face);
  if (b.side < 0) {
    m_sched.schedule(Duration::zero(), [sink = b.app, pkt] { sink(pkt); });
    return;
  }
  transmit(m_links[b.link], b.side, pkt);
}

void
Network::transmit(LinkInfo& link, int side, const Packet& pkt)
{
  auto& dir = m_dirs[link.id][side];
  auto& ctr = link.counters[side];
  const LinkEnd from = link.ends[side];
  const LinkEnd to = link.ends[1 - side];
  SimTime now = m_sched.now();

  ++ctr.offered;
  while (!dir.txEnds.empty() && dir.txEnds.front() <= now) {
    dir.txEnds.pop_front();
  }
  if (dir.txEnds.size() >= link.params.queueCapPackets) {
    ++ctr.queueDrops;
    trace(from.node, "DROP", pkt, from.face);
    return;
  }

  int bytes = packetSize(pkt);
  SimTime start = std::max(now, dir.busyUntil);
  SimTime txEnd = start + serializationDelay(bytes, link.params.bandwidthBps);
  dir.busyUntil = txEnd;
  dir.txEnds.push_back(txEnd);

  ++ctr.sent;
  ++ctr.inFlight;
  ctr.txBytes += static_cast<std::uint64_t>(bytes);
  switch (packetTag(pkt)) {
    case 'I':
      ++ctr.txInterests;
      if (m_interestObserver) {
        m_interestObserver(from.node, from.face, std::get<Interest>(pkt));
      }
      break;
    case 'D':
      ++ctr.txData;
      break;
    default:
      ++ctr.txNacks;
      break;
  }
  trace(from.node, "TX", pkt, from.face);

  m_sched.scheduleAt(txEnd + link.params.delay, [this, id = link.id, side, to, pkt] {
    auto& ctr = m_links[id].counters[side];
    --ctr.inFlight;
    Forwarder& dst = node(to.node);
    if (!dst.face(to.face).isEnabled()) {
      ++ctr.deliveryDrops;
      trace(to.node, "DROP", pkt, to.face);
      return;
    }
    ++ctr.delivered;
    trace(to.node, "RX", pkt, to.face);
    dst.receive(to.face, pkt);
  });
}

void
Network::trace(NodeId n, const char* event, const Packet& pkt, FaceId face)
{
  if (m_trace) {
    m_trace(TraceEvent{m_sched.now(), n, event, &pkt, face});
  }
}

LinkCounters
Network::totalCounters() const
{
  LinkCounters t;
  for (const auto& l : m_links) {
    for (const auto& c : l.counters) {
      t.offered += c.offered;
      t.queueDrops += c.queueDrops;
      t.sent += c.sent;
      t.delivered += c.delivered;
      t.deliveryDrops += c.deliveryDrops;
      t.inFlight += c.inFlight;
      t.txInterests += c.txInterests;
      t.txData += c.txData;
      t.txNacks += c.txNacks;
      t.txBytes += c.txBytes;
    }
  }
  return t;
}

} // namespace ndnmob
