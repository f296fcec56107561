#include "ndnmob/topo/network.hpp"

#include "doctest.h"

using namespace ndnmob;
using namespace std::chrono_literals;

namespace {

struct TwoNodes
{
  explicit
  TwoNodes(LinkParams p)
    : net(sched)
  {
    a = net.addNode("a", {});
    b = net.addNode("b", {});
    link = net.connect(a, b, FaceKind::Wired, p);
    fa = net.link(link).ends[0].face;
    fb = net.link(link).ends[1].face;
    // b answers nothing; we only observe arrivals through its counters
  }

  Scheduler sched;
  Network net;
  NodeId a, b;
  FaceId fa, fb;
  LinkId link;
};

} // namespace

TEST_CASE("serialization delay")
{
  // 28 B at 5 Mbps = 44.8 us, 1024 B at 11 Mbps = 744.7 us; rounded up
  CHECK(serializationDelay(28, 5'000'000) == Duration{45});
  CHECK(serializationDelay(1024, 11'000'000) == Duration{745});
  CHECK(serializationDelay(1024, 5'000'000) == Duration{1639});
  CHECK(serializationDelay(625, 5'000'000) == Duration{1000});
  CHECK_THROWS(serializationDelay(1, 0));
}

TEST_CASE("idle link delivers after serialization plus propagation")
{
  TwoNodes t({5'000'000, 10ms, 50});
  std::int64_t arrival = -1;
  t.net.setTraceSink([&] (const TraceEvent& e) {
    if (std::string(e.event) == "RX" && e.node == t.b) {
      arrival = toMicros(e.time);
    }
  });
  t.net.node(t.a).fib().addNextHop(Name("/x"), t.fa);
  t.net.node(t.a).receive(t.net.addAppFace(t.a, [] (const Packet&) {}),
                          Interest{Name("/x/1"), 1, 1s});
  t.sched.runUntil(atMicros(100'000));
  CHECK(arrival == 45 + 10'000);
}

TEST_CASE("fifo queue tail-drops beyond capacity and keeps order")
{
  TwoNodes t({5'000'000, 10ms, 3});
  std::vector<std::string> rx;
  t.net.setTraceSink([&] (const TraceEvent& e) {
    if (std::string(e.event) == "RX" && e.node == t.b) {
      rx.push_back(packetName(*e.pkt).toUri());
    }
  });
  auto& fw = t.net.node(t.a);
  fw.fib().addNextHop(Name("/x"), t.fa);
  FaceId app = t.net.addAppFace(t.a, [] (const Packet&) {});
  for (int i = 0; i < 5; ++i) {
    fw.receive(app, Interest{Name("/x/" + std::to_string(i)), 10u + i, 1s});
  }
  const auto& c = t.net.link(t.link).counters[0];
  CHECK(c.offered == 5);
  CHECK(c.queueDrops == 2);
  CHECK(c.sent == 3);
  CHECK(c.inFlight == 3);
  t.sched.runUntil(atMicros(100'000));
  CHECK(rx == std::vector<std::string>{"/x/0", "/x/1", "/x/2"});
  CHECK(c.delivered == 3);
  CHECK(c.inFlight == 0);
  CHECK(c.sent == c.delivered + c.deliveryDrops + c.inFlight);
}

TEST_CASE("queue frees as packets finish serialising")
{
  TwoNodes t({5'000'000, 10ms, 1});
  auto& fw = t.net.node(t.a);
  fw.fib().addNextHop(Name("/x"), t.fa);
  FaceId app = t.net.addAppFace(t.a, [] (const Packet&) {});
  fw.receive(app, Interest{Name("/x/0"), 1, 1s});
  fw.receive(app, Interest{Name("/x/1"), 2, 1s});
  CHECK(t.net.link(t.link).counters[0].queueDrops == 1);
  t.sched.runUntil(atMicros(45));
  fw.receive(app, Interest{Name("/x/2"), 3, 1s});
  CHECK(t.net.link(t.link).counters[0].queueDrops == 1);
}

TEST_CASE("packets reaching a disabled face are lost")
{
  TwoNodes t({11'000'000, 1ms, 50});
  auto& fw = t.net.node(t.a);
  fw.fib().addNextHop(Name("/x"), t.fa);
  FaceId app = t.net.addAppFace(t.a, [] (const Packet&) {});
  fw.receive(app, Interest{Name("/x/0"), 1, 1s});
  t.net.node(t.b).setFaceEnabled(t.fb, false);
  t.sched.runUntil(atMicros(10'000));
  const auto& c = t.net.link(t.link).counters[0];
  CHECK(c.deliveryDrops == 1);
  CHECK(c.delivered == 0);
  CHECK(t.net.node(t.b).counters().nInInterests == 0);
}

TEST_CASE("interest observer sees every hop transmission")
{
  TwoNodes t({5'000'000, 10ms, 50});
  int seen = 0;
  t.net.setInterestObserver([&] (NodeId n, FaceId, const Interest&) {
    CHECK(n == t.a);
    ++seen;
  });
  auto& fw = t.net.node(t.a);
  fw.fib().addNextHop(Name("/x"), t.fa);
  FaceId app = t.net.addAppFace(t.a, [] (const Packet&) {});
  fw.receive(app, Interest{Name("/x/0"), 1, 1s});
  CHECK(seen == 1);
  CHECK(t.net.totalCounters().txInterests == 1);
}

TEST_CASE("app faces deliver asynchronously")
{
  Scheduler sched;
  Network net(sched);
  NodeId n = net.addNode("h", {});
  int got = 0;
  FaceId f = net.addAppFace(n, [&] (const Packet&) { ++got; });
  net.node(n).cs().insert(Data{Name("/x/1")});
  FaceId g = net.addAppFace(n, [] (const Packet&) {});
  net.sendFromApp(n, g, Interest{Name("/x/1"), 1, 1s});
  CHECK(got == 0);
  sched.runUntil(atMicros(10));
  CHECK(got == 0); // Data went back to g, not f
  net.sendFromApp(n, f, Interest{Name("/x/1"), 2, 1s});
  sched.runUntil(atMicros(20));
  CHECK(got == 1);
}
