#include "ndnmob/harness/scenario.hpp"

#include "ndnmob/mobility/handover.hpp"
#include "ndnmob/mobility/waypoint.hpp"
#include "ndnmob/sim/random.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

namespace ndnmob {

RunKey
runKeyOf(const ScenarioConfig& cfg)
{
  RunKey k;
  k.scenario = std::string(toString(cfg.scenario));
  k.strategy = cfg.strategy;
  k.traffic = cfg.traffic;
  k.deltaMs = isDelaySensitive(cfg.traffic) ? cfg.deltaMs : 0;
  k.speedMps = cfg.scenario == ScenarioId::Static ? 0.0 : cfg.speedMps;
  k.seed = cfg.seed;
  return k;
}

namespace {

/// A roaming host: its walk, its handover logic and the radios they drive.
struct Roamer
{
  Roamer(Scheduler& sched, Network& net, const AccessField& field, const HostRadios& radios,
         const ScenarioConfig& cfg, std::string_view label)
    : rng(deriveStream(cfg.seed, label))
    , walk(rng, field.positions.front(), cfg.regionRadiusM, cfg.speedMps)
    , ctl(sched, walk, field.positions, field.asOfAp,
          HandoverParams{std::chrono::milliseconds(cfg.persistMs), std::chrono::milliseconds(cfg.gapMs),
                         std::chrono::milliseconds(cfg.tickMs)})
  {
    ctl.setHooks(
      [&net, &radios] (int ap) {
        int card = radios.cardFor(ap);
        net.node(radios.host).setFaceEnabled(radios.hostFaces.at(card), false);
      },
      [this, &net, &radios] (int ap) {
        int card = radios.cardFor(ap);
        net.node(radios.host).setFaceEnabled(radios.hostFaces.at(card), true);
        if (onAttach) {
          onAttach();
        }
      });
  }

  RngStream rng;
  RandomWaypoint walk;
  HandoverController ctl;
  std::function<void()> onAttach;
};

/**
 * Replays the walks of the mobile hosts without any network and returns the
 * measured duration that holds cfg.minHandovers handovers. Handover times
 * depend only on the mobility streams, so the replay matches the real run.
 */
double
stretchedDuration(const ScenarioConfig& cfg, const Topology& topo)
{
  if (cfg.minHandovers <= 0 || cfg.scenario == ScenarioId::Static) {
    return cfg.durationS;
  }
  const SimTime windowBegin = kSimStart + fromSeconds(cfg.warmupS);
  const SimTime limit = windowBegin + fromSeconds(cfg.maxDurationS);
  std::vector<SimTime> times;
  auto replay = [&] (const AccessField& field, std::string_view label) {
    Scheduler sched;
    RngStream rng = deriveStream(cfg.seed, label);
    RandomWaypoint walk(rng, field.positions.front(), cfg.regionRadiusM, cfg.speedMps);
    HandoverController ctl(sched, walk, field.positions, field.asOfAp,
                           HandoverParams{std::chrono::milliseconds(cfg.persistMs),
                                          std::chrono::milliseconds(cfg.gapMs),
                                          std::chrono::milliseconds(cfg.tickMs)});
    ctl.start();
    sched.runUntil(limit);
    for (const auto& r : ctl.records()) {
      if (r.at >= windowBegin) {
        times.push_back(r.at);
      }
    }
  };
  if (topo.params.consumerMobile) {
    replay(topo.consumerField, "mobility-consumer");
  }
  if (topo.params.producerMobile) {
    replay(topo.producerField, "mobility-producer");
  }
  std::sort(times.begin(), times.end());
  auto need = static_cast<std::size_t>(cfg.minHandovers);
  if (times.size() < need) {
    return cfg.maxDurationS;
  }
  double upTo = toSeconds(times[need - 1] - windowBegin) + 1e-3;
  return std::min(cfg.maxDurationS, std::max(cfg.durationS, upTo));
}

} // namespace

RunResult
runScenario(const ScenarioConfig& cfg, const RunArtifacts& artifacts)
{
  cfg.validate();

  Scheduler sched;
  TopologyParams tp = cfg.topologyParams();
  Topology topo = buildTopology(sched, tp);
  Network& net = *topo.net;

  const SimTime windowBegin = kSimStart + fromSeconds(cfg.warmupS);
  const SimTime windowEnd = windowBegin + fromSeconds(stretchedDuration(cfg, topo));
  const SimTime runEnd = windowEnd + fromSeconds(cfg.drainS);

  // producer side
  Producer* producerPtr = nullptr;
  FaceId producerApp = net.addAppFace(topo.producer.host, [&producerPtr] (const Packet& p) { producerPtr->receive(p); });
  net.node(topo.producer.host).fib().addNextHop(tp.producerPrefix, producerApp);
  Producer producer(sched, ProducerParams{tp.producerPrefix, cfg.rate},
                    [&net, &topo, producerApp] (Packet p) { net.sendFromApp(topo.producer.host, producerApp, std::move(p)); });
  producerPtr = &producer;

  // consumer side
  ConsumerParams cp;
  cp.kind = cfg.traffic;
  cp.prefix = tp.producerPrefix;
  cp.rate = cfg.rate;
  cp.delta = std::chrono::milliseconds(cfg.deltaMs);
  cp.interestLifetime = cfg.interestLifetime();
  cp.issueStart = kSimStart;
  cp.issueEnd = windowEnd;
  Consumer* consumerPtr = nullptr;
  FaceId consumerApp = net.addAppFace(topo.consumer.host, [&consumerPtr] (const Packet& p) { consumerPtr->receive(p); });
  Consumer consumer(sched, cp, cfg.seed,
                    [&net, &topo, consumerApp] (Packet p) { net.sendFromApp(topo.consumer.host, consumerApp, std::move(p)); });
  consumerPtr = &consumer;

  // mobility
  std::unique_ptr<Roamer> consumerRoamer;
  std::unique_ptr<Roamer> producerRoamer;
  if (tp.consumerMobile) {
    consumerRoamer = std::make_unique<Roamer>(sched, net, topo.consumerField, topo.consumer, cfg, "mobility-consumer");
    consumerRoamer->onAttach = [&consumer] { consumer.onReconnect(); };
    Roamer* r = consumerRoamer.get();
    consumer.setConnectivityProbe([r] { return r->ctl.phase() == AttachPhase::Attached; });
  }
  if (tp.producerMobile) {
    producerRoamer = std::make_unique<Roamer>(sched, net, topo.producerField, topo.producer, cfg, "mobility-producer");
  }

  // Interest transmissions, attributed to the segment they ask for
  std::vector<std::uint64_t> txPerSeq;
  std::uint64_t txOther = 0;
  net.setInterestObserver([&] (NodeId, FaceId, const Interest& interest) {
    auto seq = parseSegment(interest.name);
    if (!seq) {
      ++txOther;
      return;
    }
    if (*seq >= txPerSeq.size()) {
      txPerSeq.resize(std::max<std::size_t>(*seq + 1, txPerSeq.size() * 2), 0);
    }
    ++txPerSeq[*seq];
  });

  if (artifacts.packetTrace != nullptr) {
    std::ostream& os = *artifacts.packetTrace;
    os << "time_us,node,event,pkt,name,face\n";
    net.setTraceSink([&os, &net] (const TraceEvent& e) {
      os << toMicros(e.time) << ',' << net.node(e.node).nodeName() << ',' << e.event << ',' << packetTag(*e.pkt)
         << ',' << packetName(*e.pkt).toUri() << ',' << e.face << '\n';
    });
  }

  if (consumerRoamer) {
    consumerRoamer->ctl.start();
  }
  if (producerRoamer) {
    producerRoamer->ctl.start();
  }
  consumer.start();

  RunResult result;
  result.events = sched.runUntil(runEnd);

  result.window = selectIssued(consumer.records(), windowBegin, windowEnd);
  std::uint64_t interestTx = 0;
  for (const auto& r : result.window) {
    interestTx += r.seq < txPerSeq.size() ? txPerSeq[r.seq] : 0;
  }

  result.metrics.key = runKeyOf(cfg);
  fillDeliveryMetrics(result.metrics, countDeliveries(result.window, cfg.traffic), cfg.traffic, interestTx);

  if (consumerRoamer) {
    result.handovers.push_back({"consumer", consumerRoamer->ctl.records()});
  }
  if (producerRoamer) {
    result.handovers.push_back({"producer", producerRoamer->ctl.records()});
  }
  std::vector<std::vector<HandoverRecord>> perHost;
  for (const auto& h : result.handovers) {
    perHost.push_back(h.records);
  }
  fillHandoverMetrics(result.metrics, perHost);

  result.consumer = consumer.counters();
  result.producer = producer.counters();
  result.links = net.totalCounters();

  if (artifacts.segmentLog != nullptr) {
    writeSegmentLog(*artifacts.segmentLog, consumer.records(), cfg.traffic);
  }
  if (artifacts.handoverTrace != nullptr) {
    writeHandoverTrace(*artifacts.handoverTrace, result.handovers);
  }
  net.setTraceSink({});
  return result;
}

RunMetrics
rescoreDeadline(const RunResult& run, int deltaMs)
{
  RunMetrics m = run.metrics;
  m.key.deltaMs = deltaMs;
  m.goodputPct.reset();
  m.throughputPct.reset();
  m.overhead.reset();
  fillDeliveryMetrics(m, countDeliveries(run.window, m.key.traffic, std::chrono::milliseconds(deltaMs)),
                      m.key.traffic, run.metrics.interestTx);
  return m;
}

} // namespace ndnmob
