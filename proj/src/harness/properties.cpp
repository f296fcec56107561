#include "ndnmob/harness/properties.hpp"

#include "ndnmob/app/gop.hpp"
#include "ndnmob/app/segment.hpp"
#include "ndnmob/check/reference-models.hpp"
#include "ndnmob/sim/random.hpp"
#include "ndnmob/topo/network.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ndnmob {

namespace {

void
fail(PropertyOutcome& out, const std::string& what)
{
  if (out.failures++ == 0) {
    out.firstFailure = what;
  }
}

std::size_t
pick(RngStream& rng, std::size_t n)
{
  return static_cast<std::size_t>(rng.nextU64() % n);
}

Name
randomName(RngStream& rng, std::size_t maxLen, std::size_t alphabet)
{
  Name n;
  std::size_t len = pick(rng, maxLen + 1);
  for (std::size_t k = 0; k < len; ++k) {
    n.append("c" + std::to_string(pick(rng, alphabet)));
  }
  return n;
}

StrategyKind
randomStrategy(RngStream& rng)
{
  static constexpr StrategyKind kinds[] = {StrategyKind::Flooding, StrategyKind::SmartFlooding,
                                           StrategyKind::SemiFlooding};
  return kinds[pick(rng, 3)];
}

} // namespace

PropertyOutcome
checkLpmProperty(std::uint64_t seed, std::size_t cases)
{
  PropertyOutcome out{"fib-lpm", 0, 0, {}};
  auto rng = deriveStream(seed, "property-lpm");
  for (std::size_t c = 0; c < cases; ++c) {
    Fib fib;
    std::vector<Name> prefixes;
    std::size_t n = 1 + pick(rng, 30);
    for (std::size_t i = 0; i < n; ++i) {
      Name p = randomName(rng, 4, 4);
      fib.addNextHop(p, static_cast<FaceId>(i));
      if (std::find(prefixes.begin(), prefixes.end(), p) == prefixes.end()) {
        prefixes.push_back(p);
      }
    }
    Name query = randomName(rng, 6, 4);
    ++out.cases;
    auto expected = check::bruteForceLpm(prefixes, query);
    const FibEntry* got = fib.findLongestPrefixMatch(query);
    bool ok = expected ? (got != nullptr && got->prefix() == *expected) : got == nullptr;
    if (!ok) {
      fail(out, "query " + query.toUri());
    }
  }
  return out;
}

PropertyOutcome
checkPitAggregationProperty(std::uint64_t seed, std::size_t cases)
{
  PropertyOutcome out{"pit-aggregation", 0, 0, {}};
  auto rng = deriveStream(seed, "property-pit");
  const Name prefix("/p");
  for (std::size_t c = 0; c < cases; ++c) {
    Scheduler sched;
    ForwarderOptions opts;
    opts.strategy = randomStrategy(rng);
    opts.csCapacity = 0;
    Forwarder fw(sched, "r", opts);
    std::size_t n = 2 + pick(rng, 9);
    std::vector<FaceId> down;
    for (std::size_t i = 0; i < n; ++i) {
      down.push_back(fw.addFace(FaceKind::Wired));
    }
    FaceId up = fw.addFace(FaceKind::Wired);
    fw.fib().addNextHop(prefix, up);

    std::map<FaceId, int> interestsOut;
    std::map<FaceId, int> dataOut;
    fw.setSendHook([&] (FaceId f, const Packet& p) {
      if (std::holds_alternative<Interest>(p)) {
        ++interestsOut[f];
      }
      else if (std::holds_alternative<Data>(p)) {
        ++dataOut[f];
      }
    });

    Name name = prefix;
    name.append("x" + std::to_string(c));
    for (std::size_t i = 0; i < n; ++i) {
      sched.runUntil(sched.now() + Duration{static_cast<std::int64_t>(pick(rng, 5000))});
      fw.receive(down[i], Interest{name, rng.nextU64(), std::chrono::seconds(4)});
    }
    sched.runUntil(sched.now() + std::chrono::milliseconds(1));
    fw.receive(up, Data{name});

    ++out.cases;
    bool ok = interestsOut[up] == 1 && interestsOut.size() == 1;
    for (FaceId f : down) {
      ok = ok && dataOut[f] == 1;
    }
    ok = ok && dataOut.size() == n;
    if (!ok) {
      fail(out, std::to_string(n) + " Interests for " + name.toUri());
    }
  }
  return out;
}

PropertyOutcome
checkLruProperty(std::uint64_t seed, std::size_t sequences)
{
  PropertyOutcome out{"cs-lru", 0, 0, {}};
  auto rng = deriveStream(seed, "property-lru");
  for (std::size_t s = 0; s < sequences; ++s) {
    std::size_t cap = pick(rng, 9);
    ContentStore cs(cap);
    check::ReferenceLru ref(cap);
    bool ok = true;
    std::size_t ops = 10 + pick(rng, 60);
    for (std::size_t op = 0; op < ops && ok; ++op) {
      Name n{"k" + std::to_string(pick(rng, 12))};
      if (rng.uniform01() < 0.5) {
        cs.insert(Data{n});
        ref.insert(n);
      }
      else {
        ok = (cs.lookup(n) != nullptr) == ref.lookup(n);
      }
      ok = ok && cs.size() <= cap && cs.namesByRecency() == ref.contents();
    }
    ++out.cases;
    if (!ok) {
      fail(out, "sequence " + std::to_string(s) + " capacity " + std::to_string(cap));
    }
  }
  return out;
}

PropertyOutcome
checkConservationProperty(std::uint64_t seed, std::size_t topologies)
{
  PropertyOutcome out{"one-data-per-interest", 0, 0, {}};
  auto rng = deriveStream(seed, "property-dag");
  const Name prefix("/p");

  for (std::size_t t = 0; t < topologies; ++t) {
    Scheduler sched;
    Network net(sched);
    std::size_t n = 3 + pick(rng, 6);
    ForwarderOptions opts;
    opts.strategy = randomStrategy(rng);
    opts.csCapacity = pick(rng, 2) == 0 ? 0 : 4;
    for (std::size_t i = 0; i < n; ++i) {
      net.addNode("n" + std::to_string(i), opts);
    }
    LinkParams lp{5'000'000, std::chrono::milliseconds(1 + static_cast<int>(pick(rng, 10))), 50};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == i + 1 || rng.uniform01() < 0.4) {
          LinkId id = net.connect(static_cast<NodeId>(i), static_cast<NodeId>(j), FaceKind::Wired, lp);
          net.node(static_cast<NodeId>(i)).fib().addNextHop(prefix, net.link(id).ends[0].face);
        }
      }
    }

    NodeId last = static_cast<NodeId>(n - 1);
    FaceId producerFace = kInvalidFace;
    producerFace = net.addAppFace(last, [&] (const Packet& p) {
      if (const auto* i = std::get_if<Interest>(&p)) {
        net.sendFromApp(last, producerFace, Data{i->name});
      }
    });
    net.node(last).fib().addNextHop(prefix, producerFace);

    std::map<Name, int> requested;
    std::map<Name, int> received;
    FaceId consumerFace = net.addAppFace(0, [&] (const Packet& p) {
      if (const auto* d = std::get_if<Data>(&p)) {
        ++received[d->name];
      }
    });

    // (link, sending side, name) -> count
    std::map<std::tuple<LinkId, int, Name>, int> interestTx;
    std::map<std::tuple<LinkId, int, Name>, int> dataTx;
    net.setTraceSink([&] (const TraceEvent& e) {
      if (std::string_view(e.event) != "TX") {
        return;
      }
      const LinkInfo* link = net.linkOf(e.node, e.face);
      if (link == nullptr) {
        return;
      }
      int side = link->ends[0].node == e.node && link->ends[0].face == e.face ? 0 : 1;
      auto key = std::make_tuple(link->id, side, packetName(*e.pkt));
      if (std::holds_alternative<Interest>(*e.pkt)) {
        ++interestTx[key];
      }
      else if (std::holds_alternative<Data>(*e.pkt)) {
        ++dataTx[key];
      }
    });

    std::size_t k = 5 + pick(rng, 20);
    for (std::size_t q = 0; q < k; ++q) {
      Name name = segmentName(prefix, pick(rng, 8));
      ++requested[name];
      SimTime at = kSimStart + Duration{static_cast<std::int64_t>(pick(rng, 200'000))};
      std::uint64_t nonce = rng.nextU64();
      sched.scheduleAt(at, [&net, consumerFace, name, nonce] {
        net.sendFromApp(0, consumerFace, Interest{name, nonce, std::chrono::seconds(4)});
      });
    }
    sched.runUntil(kSimStart + std::chrono::seconds(30));

    ++out.cases;
    std::ostringstream why;
    for (const auto& [key, count] : dataTx) {
      auto [link, side, name] = key;
      int asked = 0;
      auto it = interestTx.find(std::make_tuple(link, 1 - side, name));
      if (it != interestTx.end()) {
        asked = it->second;
      }
      if (count > asked) {
        why << "link " << link << " carried " << count << " Data for " << name.toUri() << " against " << asked
            << " Interests; ";
      }
    }
    for (const auto& [name, count] : requested) {
      int got = received.count(name) ? received[name] : 0;
      if (got < 1 || got > count) {
        why << name.toUri() << " requested " << count << " times, delivered " << got << "; ";
      }
    }
    if (!why.str().empty()) {
      fail(out, "topology " + std::to_string(t) + ": " + why.str());
    }
  }
  return out;
}

PropertyOutcome
checkGopExhaustive()
{
  PropertyOutcome out{"gop-decode", 0, 0, {}};
  check::FrameLayout layout{GopLayout::packetsPerFrame()};
  const int frames = GopLayout::kFramesPerGop;
  for (std::uint32_t mask = 0; mask < (1u << frames); ++mask) {
    std::vector<bool> frameOk(frames);
    std::vector<bool> packetOk(GopLayout::kPacketsPerGop, true);
    for (int f = 0; f < frames; ++f) {
      frameOk[f] = ((mask >> f) & 1u) == 0;
    }
    // lose either the first or the last packet of each missing frame
    bool takeLast = (mask & 1u) != 0;
    for (std::size_t i = 0; i < packetOk.size(); ++i) {
      int f = GopLayout::frameOf(i).frame;
      if (frameOk[f]) {
        continue;
      }
      bool first = i == 0 || GopLayout::frameOf(i - 1).frame != f;
      bool last = i + 1 == packetOk.size() || GopLayout::frameOf(i + 1).frame != f;
      if (takeLast ? last : first) {
        packetOk[i] = false;
      }
    }
    int expected = check::bruteForceDecodableFrames(layout, packetOk);
    ++out.cases;
    if (decodableFramesFromPackets(packetOk) != expected || decodableFrames(frameOk) != expected) {
      fail(out, "frame loss mask " + std::to_string(mask));
    }
  }
  return out;
}

} // namespace ndnmob
