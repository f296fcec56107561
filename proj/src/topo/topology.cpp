#include "ndnmob/topo/topology.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace ndnmob {

std::string_view
toString(Layout layout) noexcept
{
  return layout == Layout::SingleAs ? "single-as" : "two-as";
}

std::string_view
toString(NodeRole role) noexcept
{
  switch (role) {
    case NodeRole::Host:
      return "host";
    case NodeRole::AccessPoint:
      return "ap";
    case NodeRole::Aggregation:
      return "agg";
    case NodeRole::Edge:
      return "edge";
  }
  return "unknown";
}

int
HostRadios::cardFor(int ap) const noexcept
{
  auto it = std::find(apIndex.begin(), apIndex.end(), ap);
  return it == apIndex.end() ? -1 : static_cast<int>(it - apIndex.begin());
}

namespace {

class Builder
{
public:
  Builder(Scheduler& sched, const TopologyParams& p)
    : m_p(p)
  {
    m_topo.net = std::make_unique<Network>(sched);
    m_topo.params = p;
  }

  Topology
  build()
  {
    validate();
    m_topo.consumer.host = addNode("consumer", NodeRole::Host, 0);
    m_topo.producer.host = addNode("producer", NodeRole::Host, 0);

    bool two = m_p.layout == Layout::TwoAs;
    std::vector<int> consumerAses = two ? std::vector<int>{1, 2} : std::vector<int>{1};
    std::vector<int> producerAses = two ? std::vector<int>{3, 4} : std::vector<int>{2};

    auto consumerEdges = buildSide('c', consumerAses, m_topo.consumerField, false);
    auto producerEdges = buildSide('p', producerAses, m_topo.producerField, true);

    // core: every consumer edge to every producer edge, nothing else
    for (NodeId ce : consumerEdges) {
      for (NodeId pe : producerEdges) {
        LinkId l = net().connect(ce, pe, FaceKind::Wired, m_p.wired);
        net().node(ce).fib().addNextHop(m_p.producerPrefix, net().link(l).ends[0].face);
      }
    }

    attachHost(m_topo.consumer, m_topo.consumerField, m_p.consumerMobile);
    attachHost(m_topo.producer, m_topo.producerField, m_p.producerMobile);
    for (std::size_t k = 0; k < m_topo.producer.apIndex.size(); ++k) {
      NodeId ap = m_topo.producerField.apNodes[m_topo.producer.apIndex[k]];
      net().node(ap).fib().addNextHop(m_p.producerPrefix, m_topo.producer.apFaces[k]);
    }
    return std::move(m_topo);
  }

private:
  Network&
  net()
  {
    return *m_topo.net;
  }

  void
  validate()
  {
    if (m_p.apCount < 1 || m_p.apCount > 7) {
      throw std::invalid_argument("ap_count must be between 1 and 7");
    }
    if (m_p.aggFanIn < 1) {
      throw std::invalid_argument("agg_fan_in must be at least 1");
    }
    if (m_p.layout == Layout::TwoAs && m_p.apCount < 2) {
      throw std::invalid_argument("the two-AS layout needs at least 2 access points");
    }
    if (m_p.producerPrefix.empty()) {
      throw std::invalid_argument("producer prefix must not be empty");
    }
  }

  NodeId
  addNode(const std::string& name, NodeRole role, int as)
  {
    ForwarderOptions o;
    o.strategy = m_p.strategy;
    // everything below the AS edge router is access network
    o.zone = role == NodeRole::Edge ? NodeZone::Core : NodeZone::Access;
    o.isHost = role == NodeRole::Host;
    o.csCapacity = o.isHost ? m_p.hostCsCapacity : m_p.routerCsCapacity;
    o.pitPolicy = o.isHost ? m_p.hostPitPolicy : m_p.routerPitPolicy;
    o.minPitTimeout = m_p.minPitTimeout;
    o.deadNonceGrace = m_p.deadNonceGrace;
    NodeId id = net().addNode(name, o);
    m_topo.roles.push_back(role);
    m_topo.asOf.push_back(as);
    return id;
  }

  /// Builds APs, aggregation and edge routers of one side; returns the edges.
  std::vector<NodeId>
  buildSide(char tag, const std::vector<int>& ases, AccessField& field, bool producerSide)
  {
    field.positions = hexLayout(m_p.apCount, m_p.apSpacing);
    std::vector<int> split(field.positions.size(), 0);
    if (ases.size() == 2) {
      split = medianSplitByX(field.positions);
    }

    for (std::size_t i = 0; i < field.positions.size(); ++i) {
      int as = ases[split[i]];
      field.asOfAp.push_back(as);
      field.apNodes.push_back(addNode(std::string(1, tag) + "-ap" + std::to_string(i),
                                      NodeRole::AccessPoint, as));
    }

    std::vector<NodeId> edges;
    int aggCounter = 0;
    for (std::size_t s = 0; s < ases.size(); ++s) {
      int as = ases[s];
      std::string edgeName = ases.size() == 1 ? std::string(1, tag) + "-er"
                                              : "er" + std::to_string(as);
      NodeId er = addNode(edgeName, NodeRole::Edge, as);
      edges.push_back(er);
      m_topo.edges.push_back(er);

      std::vector<int> members;
      for (std::size_t i = 0; i < split.size(); ++i) {
        if (static_cast<std::size_t>(split[i]) == s) {
          members.push_back(static_cast<int>(i));
        }
      }
      int nAgg = (static_cast<int>(members.size()) + m_p.aggFanIn - 1) / m_p.aggFanIn;
      // balanced contiguous groups: the first (n mod k) groups take one extra
      int base = static_cast<int>(members.size()) / nAgg;
      int extra = static_cast<int>(members.size()) % nAgg;
      std::size_t next = 0;
      for (int g = 0; g < nAgg; ++g) {
        NodeId agg = addNode(std::string(1, tag) + "-agg" + std::to_string(aggCounter++),
                             NodeRole::Aggregation, as);
        LinkId up = net().connect(agg, er, FaceKind::Wired, m_p.wired);
        FaceId aggUp = net().link(up).ends[0].face;
        FaceId erDown = net().link(up).ends[1].face;
        if (producerSide) {
          net().node(er).fib().addNextHop(m_p.producerPrefix, erDown);
        }
        else {
          net().node(agg).fib().addNextHop(m_p.producerPrefix, aggUp);
        }

        int size = base + (g < extra ? 1 : 0);
        for (int k = 0; k < size; ++k) {
          NodeId ap = field.apNodes[members[next++]];
          LinkId l = net().connect(ap, agg, FaceKind::Wired, m_p.wired);
          FaceId apUp = net().link(l).ends[0].face;
          FaceId aggDown = net().link(l).ends[1].face;
          if (producerSide) {
            net().node(agg).fib().addNextHop(m_p.producerPrefix, aggDown);
          }
          else {
            net().node(ap).fib().addNextHop(m_p.producerPrefix, apUp);
          }
        }
      }
    }
    return edges;
  }

  void
  attachHost(HostRadios& radios, const AccessField& field, bool mobile)
  {
    std::vector<int> aps;
    if (mobile) {
      for (int i = 0; i < static_cast<int>(field.apNodes.size()); ++i) {
        aps.push_back(i);
      }
    }
    else {
      aps.push_back(0);
    }
    for (int ap : aps) {
      LinkId l = net().connect(radios.host, field.apNodes[ap], FaceKind::Wireless, m_p.wireless);
      radios.apIndex.push_back(ap);
      radios.hostFaces.push_back(net().link(l).ends[0].face);
      radios.apFaces.push_back(net().link(l).ends[1].face);
      // mobile radios stay off until the handover controller attaches
      net().node(radios.host).setFaceEnabled(radios.hostFaces.back(), !mobile);
    }
  }

private:
  TopologyParams m_p;
  Topology m_topo;
};

/// Adjacency over links, optionally ignoring host cards except two.
std::vector<std::vector<std::pair<NodeId, bool>>>
adjacency(const Topology& topo, int consumerCard, int producerCard)
{
  const Network& net = *topo.net;
  std::vector<std::vector<std::pair<NodeId, bool>>> adj(net.nodeCount());
  auto isAllowedCard = [&] (const LinkInfo& l) {
    for (const auto* radios : {&topo.consumer, &topo.producer}) {
      int chosen = radios == &topo.consumer ? consumerCard : producerCard;
      for (std::size_t k = 0; k < radios->hostFaces.size(); ++k) {
        for (const auto& e : l.ends) {
          if (e.node == radios->host && e.face == radios->hostFaces[k]) {
            return static_cast<int>(k) == chosen;
          }
        }
      }
    }
    return true;
  };
  for (const auto& l : net.links()) {
    if (!isAllowedCard(l)) {
      continue;
    }
    bool wireless = net.node(l.ends[0].node).face(l.ends[0].face).kind == FaceKind::Wireless;
    adj[l.ends[0].node].push_back({l.ends[1].node, wireless});
    adj[l.ends[1].node].push_back({l.ends[0].node, wireless});
  }
  return adj;
}

} // namespace

Topology
buildTopology(Scheduler& sched, const TopologyParams& params)
{
  return Builder(sched, params).build();
}

void
dumpTopology(const Topology& topo, std::ostream& os)
{
  const Network& net = *topo.net;
  os << "node_a,face,node_b,bandwidth_bps,delay_us\n";
  for (NodeId n = 0; n < net.nodeCount(); ++n) {
    for (const Face& f : net.node(n).faces()) {
      const LinkInfo* l = net.linkOf(n, f.id);
      if (l == nullptr) {
        continue;
      }
      int side = l->ends[0].node == n && l->ends[0].face == f.id ? 0 : 1;
      os << net.node(n).nodeName() << ',' << f.id << ','
         << net.node(l->ends[1 - side].node).nodeName() << ',' << l->params.bandwidthBps << ','
         << l->params.delay.count() << '\n';
    }
  }
}

PathShape
shortestPath(const Topology& topo, int consumerAp, int producerAp)
{
  int cc = topo.consumer.cardFor(consumerAp);
  int pc = topo.producer.cardFor(producerAp);
  if (cc < 0 || pc < 0) {
    throw std::invalid_argument("host has no card towards that access point");
  }
  auto adj = adjacency(topo, cc, pc);
  std::vector<int> dist(adj.size(), -1);
  std::vector<PathShape> shape(adj.size());
  std::queue<NodeId> q;
  dist[topo.consumer.host] = 0;
  q.push(topo.consumer.host);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (auto [v, wireless] : adj[u]) {
      if (dist[v] >= 0) {
        continue;
      }
      dist[v] = dist[u] + 1;
      shape[v] = shape[u];
      ++(wireless ? shape[v].wirelessHops : shape[v].wiredHops);
      q.push(v);
    }
  }
  if (dist[topo.producer.host] < 0) {
    return {-1, -1};
  }
  return shape[topo.producer.host];
}

bool
auditReachability(const Topology& topo)
{
  for (int ca : topo.consumer.apIndex) {
    for (int pa : topo.producer.apIndex) {
      if (shortestPath(topo, ca, pa).wiredHops < 0) {
        return false;
      }
    }
  }
  return true;
}

} // namespace ndnmob
