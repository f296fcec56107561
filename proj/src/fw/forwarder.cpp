#include "ndnmob/fw/forwarder.hpp"

#include <algorithm>
#include <stdexcept>

namespace ndnmob {

std::string_view
toString(PitTimeoutPolicy policy) noexcept
{
  return policy == PitTimeoutPolicy::Adaptive ? "adaptive" : "lifetime";
}

PitTimeoutPolicy
parsePitTimeoutPolicy(std::string_view text)
{
  if (text == "adaptive") {
    return PitTimeoutPolicy::Adaptive;
  }
  if (text == "lifetime") {
    return PitTimeoutPolicy::Lifetime;
  }
  throw std::invalid_argument("unknown PIT timeout policy '" + std::string(text) + "'");
}

Forwarder::Forwarder(Scheduler& sched, std::string nodeName, ForwarderOptions opts)
  : m_sched(sched)
  , m_nodeName(std::move(nodeName))
  , m_opts(opts)
  , m_cs(opts.csCapacity)
  , m_pit(opts.pitCapacity)
  , m_dnl(opts.deadNonceGrace)
{
}

FaceId
Forwarder::addFace(FaceKind kind)
{
  Face f;
  f.id = static_cast<FaceId>(m_faces.size());
  f.kind = kind;
  m_faces.push_back(f);
  return f.id;
}

void
Forwarder::setFaceEnabled(FaceId id, bool enabled)
{
  Face& f = face(id);
  if (enabled) {
    onLinkUp(f);
  }
  else {
    onLinkDown(f);
  }
}

void
Forwarder::receive(FaceId inFace, const Packet& pkt)
{
  Face& f = face(inFace);
  if (!f.isEnabled()) {
    ++m_counters.nDisabledDrops;
    return;
  }
  std::visit([&] (const auto& p) {
    using T = std::decay_t<decltype(p)>;
    if constexpr (std::is_same_v<T, Interest>) {
      ++f.counters.nInInterests;
      onInterest(inFace, p);
    }
    else if constexpr (std::is_same_v<T, Data>) {
      ++f.counters.nInData;
      onData(inFace, p);
    }
    else {
      ++f.counters.nInNacks;
      onNack(inFace, p);
    }
  }, pkt);
}

void
Forwarder::onInterest(FaceId inFace, const Interest& interest)
{
  ++m_counters.nInInterests;
  SimTime now = m_sched.now();

  if (m_dnl.has(interest.name, interest.nonce, now)) {
    ++m_counters.nDuplicateDrops;
    return;
  }

  if (const Data* cached = m_cs.lookup(interest.name); cached != nullptr) {
    ++m_counters.nCsHits;
    send(inFace, *cached);
    return;
  }

  PitEntry* entry = m_pit.find(interest.name);
  if (entry != nullptr) {
    if (entry->hasNonce(interest.nonce)) {
      ++m_counters.nDuplicateDrops;
      return;
    }
    entry->addNonce(interest.nonce);
    bool isRetransmission = entry->findInRecord(inFace) != nullptr;
    entry->insertInRecord(inFace, interest.nonce, now, interest.lifetime);

    if (!isRetransmission) {
      // a second downstream asking for the same name rides on the pending
      // request; only the deadline may move
      ++m_counters.nAggregated;
      if (m_opts.pitPolicy == PitTimeoutPolicy::Lifetime) {
        armExpiry(*entry);
      }
      return;
    }

    // same downstream, fresh nonce: the consumer gave up on the previous
    // attempt, so let the strategy decide again
    ++m_counters.nRetransmitted;
    entry->hasRetried = false;
    if (!forward(*entry, interest, false)) {
      ++m_counters.nNoRoute;
      rejectPending(*entry, NackReason::NoRoute);
      finish(*entry);
      return;
    }
    armExpiry(*entry);
    return;
  }

  entry = m_pit.insert(interest.name);
  if (entry == nullptr) {
    ++m_counters.nPitFullDrops;
    return;
  }
  entry->addNonce(interest.nonce);
  entry->insertInRecord(inFace, interest.nonce, now, interest.lifetime);

  if (!forward(*entry, interest, false)) {
    ++m_counters.nNoRoute;
    rejectPending(*entry, NackReason::NoRoute);
    finish(*entry);
    return;
  }
  armExpiry(*entry);
}

void
Forwarder::onData(FaceId inFace, const Data& data)
{
  ++m_counters.nInData;
  PitEntry* entry = m_pit.find(data.name);
  if (entry == nullptr) {
    ++m_counters.nUnsolicitedData;
    return;
  }

  Face& upstream = face(inFace);
  if (const OutRecord* out = entry->findOutRecord(inFace); out != nullptr) {
    upstream.rtt.addMeasurement(m_sched.now() - out->sent);
    onDataSuccess(upstream);
  }

  m_cs.insert(data);
  for (const auto& in : entry->inRecords()) {
    if (in.face != inFace) {
      send(in.face, data);
    }
  }
  ++m_counters.nSatisfied;
  finish(*entry);
}

void
Forwarder::onNack(FaceId inFace, const Nack& nack)
{
  ++m_counters.nInNacks;
  PitEntry* entry = m_pit.find(nack.name);
  if (entry == nullptr) {
    return;
  }
  OutRecord* out = entry->findOutRecord(inFace);
  if (out == nullptr || out->nonce != nack.nonce) {
    return;
  }
  out->nacked = true;
  onTimeoutOrNack(face(inFace));

  if (!entry->allOutRecordsNacked()) {
    return;
  }

  SimTime now = m_sched.now();
  if (!entry->hasRetried && now < entry->lifetimeEnd()) {
    const InRecord& latest = entry->inRecords().back();
    Interest retry{entry->name(), latest.nonce, entry->lifetimeEnd() - now, 0};
    if (forward(*entry, retry, true)) {
      entry->hasRetried = true;
      ++m_counters.nRetries;
      armExpiry(*entry);
      return;
    }
  }
  rejectPending(*entry, nack.reason);
  finish(*entry);
}

void
Forwarder::onExpiry(const Name& name)
{
  PitEntry* entry = m_pit.find(name);
  if (entry == nullptr) {
    return;
  }
  ++m_counters.nExpired;
  for (const auto& out : entry->outRecords()) {
    if (!out.nacked) {
      onTimeoutOrNack(face(out.face));
    }
  }

  SimTime now = m_sched.now();
  if (m_opts.pitPolicy == PitTimeoutPolicy::Adaptive && !entry->hasRetried &&
      now < entry->lifetimeEnd()) {
    const InRecord& latest = entry->inRecords().back();
    Interest retry{entry->name(), latest.nonce, entry->lifetimeEnd() - now, 0};
    if (forward(*entry, retry, true)) {
      entry->hasRetried = true;
      ++m_counters.nRetries;
      armExpiry(*entry);
      return;
    }
  }
  rejectPending(*entry, NackReason::Timeout);
  finish(*entry);
}

std::vector<const Face*>
Forwarder::candidateFaces(PitEntry& entry, bool untriedOnly)
{
  std::vector<const Face*> out;
  auto consider = [&] (FaceId id) {
    const Face& f = m_faces.at(id);
    if (!f.isEnabled() || entry.findInRecord(id) != nullptr) {
      return;
    }
    if (untriedOnly && entry.wasTried(id)) {
      return;
    }
    if (std::find(out.begin(), out.end(), &f) == out.end()) {
      out.push_back(&f);
    }
  };

  if (const FibEntry* fe = m_fib.findLongestPrefixMatch(entry.name()); fe != nullptr) {
    for (const auto& nh : fe->nextHops()) {
      consider(nh.face);
    }
  }
  if (m_opts.isHost) {
    for (const Face& f : m_faces) {
      if (f.kind == FaceKind::Wireless) {
        consider(f.id);
      }
    }
  }
  return out;
}

bool
Forwarder::forward(PitEntry& entry, const Interest& interest, bool untriedOnly)
{
  auto candidates = candidateFaces(entry, untriedOnly);
  auto chosen = selectOutFaces(m_opts.strategy, m_opts.zone, candidates);
  if (chosen.empty()) {
    return false;
  }
  Interest out = interest;
  ++out.hopCount;
  SimTime now = m_sched.now();
  for (FaceId id : chosen) {
    entry.insertOutRecord(id, out.nonce, now);
    send(id, out);
  }
  return true;
}

void
Forwarder::armExpiry(PitEntry& entry)
{
  SimTime now = m_sched.now();
  SimTime end = entry.lifetimeEnd();
  SimTime at = end;

  if (m_opts.pitPolicy == PitTimeoutPolicy::Adaptive) {
    bool waitsOnApp = false;
    Duration rto = Duration::zero();
    for (const auto& out : entry.outRecords()) {
      const Face& f = m_faces.at(out.face);
      if (f.kind == FaceKind::Application) {
        waitsOnApp = true;
      }
      if (!out.nacked) {
        rto = std::max(rto, f.rtt.rto());
      }
    }
    if (!waitsOnApp) {
      at = std::min(end, now + std::max(rto, m_opts.minPitTimeout));
    }
  }

  entry.expiryTimer.cancel();
  Name name = entry.name();
  auto action = [this, name = std::move(name)] { onExpiry(name); };
  entry.expiryTimer = at > now ? m_sched.scheduleAt(at, std::move(action))
                               : m_sched.schedule(Duration::zero(), std::move(action));
}

void
Forwarder::rejectPending(PitEntry& entry, NackReason reason)
{
  for (const auto& in : entry.inRecords()) {
    send(in.face, Nack{entry.name(), reason, in.nonce});
  }
}

void
Forwarder::finish(PitEntry& entry)
{
  SimTime now = m_sched.now();
  for (auto nonce : entry.nonces()) {
    m_dnl.add(entry.name(), nonce, now);
  }
  Name name = entry.name();
  m_pit.erase(name);
}

void
Forwarder::send(FaceId id, const Packet& pkt)
{
  Face& f = face(id);
  if (!f.isEnabled()) {
    ++m_counters.nDisabledDrops;
    return;
  }
  switch (packetTag(pkt)) {
    case 'I':
      ++f.counters.nOutInterests;
      ++m_counters.nOutInterests;
      break;
    case 'D':
      ++f.counters.nOutData;
      ++m_counters.nOutData;
      break;
    default:
      ++f.counters.nOutNacks;
      ++m_counters.nOutNacks;
      break;
  }
  if (m_send) {
    m_send(id, pkt);
  }
}

} // namespace ndnmob
