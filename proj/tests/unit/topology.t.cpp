#include "ndnmob/topo/topology.hpp"

#include "doctest.h"

#include <set>
#include <sstream>

using namespace ndnmob;

namespace {

std::size_t
countRole(const Topology& t, NodeRole r)
{
  return std::count(t.roles.begin(), t.roles.end(), r);
}

std::set<std::pair<std::string, std::string>>
edgeAdjacency(const Topology& t)
{
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& l : t.net->links()) {
    NodeId a = l.ends[0].node, b = l.ends[1].node;
    if (t.roles[a] == NodeRole::Edge && t.roles[b] == NodeRole::Edge) {
      auto na = t.net->node(a).nodeName(), nb = t.net->node(b).nodeName();
      out.insert(std::minmax(na, nb));
    }
  }
  return out;
}

} // namespace

TEST_CASE("single-AS build has 7 APs, 3 aggregation and 1 edge router per side")
{
  Scheduler s;
  TopologyParams p;
  auto t = buildTopology(s, p);
  CHECK(countRole(t, NodeRole::AccessPoint) == 14);
  CHECK(countRole(t, NodeRole::Aggregation) == 6);
  CHECK(countRole(t, NodeRole::Edge) == 2);
  CHECK(countRole(t, NodeRole::Host) == 2);
  CHECK(edgeAdjacency(t) == std::set<std::pair<std::string, std::string>>{{"c-er", "p-er"}});

  // every AP is two wired hops below its edge router, with fan-in <= 3
  for (NodeId n = 0; n < t.net->nodeCount(); ++n) {
    if (t.roles[n] != NodeRole::Aggregation) {
      continue;
    }
    int down = 0, up = 0;
    for (const auto& l : t.net->links()) {
      for (int side = 0; side < 2; ++side) {
        if (l.ends[side].node != n) {
          continue;
        }
        NodeRole other = t.roles[l.ends[1 - side].node];
        down += other == NodeRole::AccessPoint;
        up += other == NodeRole::Edge;
      }
    }
    CHECK(down >= 1);
    CHECK(down <= 3);
    CHECK(up == 1);
  }
}

TEST_CASE("static path shape and closed-form one-way latency")
{
  Scheduler s;
  auto t = buildTopology(s, {});
  auto shape = shortestPath(t, 0, 0);
  CHECK(shape.wiredHops == 5);
  CHECK(shape.wirelessHops == 2);

  // Data: per hop serialisation + propagation, summed over the built path
  double wired = 1024 * 8 / 5e6 + 0.010;
  double wireless = 1024 * 8 / 11e6 + 0.001;
  double oneWay = shape.wiredHops * wired + shape.wirelessHops * wireless;
  CHECK(oneWay == doctest::Approx(0.0617).epsilon(0.01));
}

TEST_CASE("two-AS build: bowtie core and a 4/3 AP split")
{
  Scheduler s;
  TopologyParams p;
  p.layout = Layout::TwoAs;
  auto t = buildTopology(s, p);
  std::set<std::pair<std::string, std::string>> bowtie{
    {"er1", "er3"}, {"er1", "er4"}, {"er2", "er3"}, {"er2", "er4"}};
  CHECK(edgeAdjacency(t) == bowtie);
  CHECK(std::count(t.consumerField.asOfAp.begin(), t.consumerField.asOfAp.end(), 1) == 4);
  CHECK(std::count(t.consumerField.asOfAp.begin(), t.consumerField.asOfAp.end(), 2) == 3);
  CHECK(std::count(t.producerField.asOfAp.begin(), t.producerField.asOfAp.end(), 3) == 4);
  // ceil(4/3) + ceil(3/3) aggregation routers per side
  CHECK(countRole(t, NodeRole::Aggregation) == 6);

  // inter-AS path crosses exactly two edge routers
  auto shape = shortestPath(t, 0, 0);
  CHECK(shape.wiredHops == 5);
}

TEST_CASE("mobile hosts get one card per AP, all off; static hosts one card, on")
{
  Scheduler s;
  TopologyParams p;
  p.consumerMobile = true;
  auto t = buildTopology(s, p);
  CHECK(t.consumer.hostFaces.size() == 7);
  for (FaceId f : t.consumer.hostFaces) {
    CHECK_FALSE(t.net->node(t.consumer.host).face(f).isEnabled());
  }
  REQUIRE(t.producer.hostFaces.size() == 1);
  CHECK(t.net->node(t.producer.host).face(t.producer.hostFaces[0]).isEnabled());
  CHECK(t.producer.cardFor(0) == 0);
  CHECK(t.producer.cardFor(3) == -1);
}

TEST_CASE("every attachment pair is reachable in every layout")
{
  for (auto layout : {Layout::SingleAs, Layout::TwoAs}) {
    for (int mob = 0; mob < 4; ++mob) {
      Scheduler s;
      TopologyParams p;
      p.layout = layout;
      p.consumerMobile = mob & 1;
      p.producerMobile = mob & 2;
      auto t = buildTopology(s, p);
      CHECK(auditReachability(t));
    }
  }
}

TEST_CASE("producer prefix routes")
{
  Scheduler s;
  TopologyParams p;
  p.producerMobile = true;
  auto t = buildTopology(s, p);
  Name seg = p.producerPrefix;
  seg.append("seg_1");
  for (NodeId n = 0; n < t.net->nodeCount(); ++n) {
    if (t.roles[n] == NodeRole::Host) {
      continue;
    }
    const FibEntry* e = t.net->node(n).fib().findLongestPrefixMatch(seg);
    REQUIRE(e != nullptr);
    if (t.roles[n] == NodeRole::AccessPoint) {
      CHECK(e->nextHops().size() == 1);
    }
  }
  // producer-side edge holds a next hop per aggregation router
  NodeId per = t.edges[1];
  CHECK(t.net->node(per).fib().findLongestPrefixMatch(seg)->nextHops().size() == 3);
}

TEST_CASE("bad parameters are rejected")
{
  Scheduler s;
  TopologyParams p;
  p.apCount = 8;
  CHECK_THROWS_AS(buildTopology(s, p), std::invalid_argument);
  p.apCount = 7;
  p.aggFanIn = 0;
  CHECK_THROWS_AS(buildTopology(s, p), std::invalid_argument);
}

TEST_CASE("topology dump lists both ends of each link")
{
  Scheduler s;
  auto t = buildTopology(s, {});
  std::ostringstream os;
  dumpTopology(t, os);
  std::string text = os.str();
  CHECK(text.rfind("node_a,face,node_b,bandwidth_bps,delay_us\n", 0) == 0);
  CHECK(text.find("c-er,") != std::string::npos);
  CHECK(text.find(",p-er,5000000,10000\n") != std::string::npos);
  CHECK(text.find("consumer,0,c-ap0,11000000,1000\n") != std::string::npos);
  auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 1 + 2 * static_cast<long>(t.net->links().size()));
}
