#include "ndnmob/app/consumer.hpp"

#include <algorithm>
#include <cmath>

namespace ndnmob {

Consumer::Consumer(Scheduler& sched, ConsumerParams params, std::uint64_t seed, SendFn send)
  : m_sched(sched)
  , m_params(std::move(params))
  , m_trafficRng(deriveStream(seed, "traffic"))
  , m_nonceRng(deriveStream(seed, "nonce"))
  , m_send(std::move(send))
{
  if (!(m_params.rate > 0.0)) {
    throw std::invalid_argument("consumer rate must be positive");
  }
}

SimTime
Consumer::evenIssueTime(std::uint64_t seq, double rate, SimTime start)
{
  return start + Duration{std::llround(static_cast<double>(seq) * 1e6 / rate)};
}

void
Consumer::start()
{
  m_nextIssue = m_params.issueStart;
  if (m_params.kind == TrafficKind::DtPoisson) {
    m_nextIssue += std::max(Duration{1}, fromSeconds(m_trafficRng.exponential(1.0 / m_params.rate)));
  }
  if (m_nextIssue < m_params.issueEnd) {
    m_sched.scheduleAt(m_nextIssue, [this] { issueNext(); });
  }
}

void
Consumer::issueNext()
{
  std::uint64_t seq = m_records.size();
  SegmentRecord rec;
  rec.seq = seq;
  rec.issuedAt = m_sched.now();
  if (isDelaySensitive(m_params.kind)) {
    rec.deadline = rec.issuedAt + m_params.delta;
  }
  m_records.push_back(rec);
  m_pending.emplace_back();
  transmit(seq);

  if (m_params.kind == TrafficKind::DtPoisson) {
    m_nextIssue += std::max(Duration{1}, fromSeconds(m_trafficRng.exponential(1.0 / m_params.rate)));
  }
  else {
    m_nextIssue = evenIssueTime(seq + 1, m_params.rate, m_params.issueStart);
  }
  if (m_nextIssue < m_params.issueEnd) {
    m_sched.scheduleAt(m_nextIssue, [this] { issueNext(); });
  }
}

void
Consumer::transmit(std::uint64_t seq)
{
  Pending& p = m_pending[seq];
  if (!isConnected()) {
    if (!p.queued) {
      p.queued = true;
      m_queue.push_back(seq);
      ++m_counters.nQueuedWhileDetached;
    }
    return;
  }

  Interest interest;
  interest.name = segmentName(m_params.prefix, seq);
  interest.nonce = m_nonceRng.nextU64();
  interest.lifetime = m_params.interestLifetime;

  p.nonce = interest.nonce;
  p.lastSent = m_sched.now();
  p.inFlight = true;
  p.guard.cancel();
  std::uint64_t nonce = interest.nonce;
  p.guard = m_sched.schedule(m_params.interestLifetime + m_params.guardSlack, [this, seq, nonce] {
    Pending& q = m_pending[seq];
    if (q.inFlight && q.nonce == nonce && !isSettled(seq)) {
      ++m_counters.nGuardTimeouts;
      q.inFlight = false;
      onLoss(seq);
    }
  });

  ++m_counters.nInterestsSent;
  m_send(std::move(interest));
}

void
Consumer::receive(const Packet& pkt)
{
  if (const auto* data = std::get_if<Data>(&pkt)) {
    onData(*data);
  }
  else if (const auto* nack = std::get_if<Nack>(&pkt)) {
    onNack(*nack);
  }
}

bool
Consumer::isSettled(std::uint64_t seq) const
{
  const SegmentRecord& r = m_records[seq];
  return r.receivedAt.has_value() || r.abandoned;
}

void
Consumer::onData(const Data& data)
{
  auto seq = parseSegment(data.name);
  if (!seq || *seq >= m_records.size()) {
    ++m_counters.nUnexpectedData;
    return;
  }
  SegmentRecord& rec = m_records[*seq];
  if (rec.receivedAt) {
    ++m_counters.nDuplicateData;
    return;
  }
  Pending& p = m_pending[*seq];
  ++m_counters.nDataReceived;
  rec.receivedAt = m_sched.now();
  // Karn: only unambiguous samples feed the estimator.
  if (rec.retxCount == 0 && p.inFlight) {
    m_rtt.addMeasurement(m_sched.now() - p.lastSent);
  }
  p.inFlight = false;
  p.guard.cancel();
  p.backoff.cancel();
}

void
Consumer::onNack(const Nack& nack)
{
  auto seq = parseSegment(nack.name);
  if (!seq || *seq >= m_records.size()) {
    ++m_counters.nStaleNacks;
    return;
  }
  Pending& p = m_pending[*seq];
  if (isSettled(*seq) || !p.inFlight || p.nonce != nack.nonce) {
    ++m_counters.nStaleNacks;
    return;
  }
  ++m_counters.nNacks;
  p.inFlight = false;
  p.guard.cancel();
  onLoss(*seq);
}

void
Consumer::onLoss(std::uint64_t seq)
{
  SegmentRecord& rec = m_records[seq];
  Pending& p = m_pending[seq];
  ++p.lossCount;

  if (isDelaySensitive(m_params.kind)) {
    if (m_sched.now() + m_rtt.srtt() <= *rec.deadline) {
      ++rec.retxCount;
      ++m_counters.nRetransmissions;
      transmit(seq);
    }
    else {
      rec.abandoned = true;
      ++m_counters.nAbandoned;
    }
    return;
  }

  // 100 ms, 200 ms, 400 ms, ... capped.
  int shift = std::min(p.lossCount - 1, 30);
  Duration wait = m_params.dtBackoffBase * (std::int64_t{1} << shift);
  wait = std::min(wait, m_params.dtBackoffCap);
  p.backoff = m_sched.schedule(wait, [this, seq] {
    if (isSettled(seq)) {
      return;
    }
    ++m_records[seq].retxCount;
    ++m_counters.nRetransmissions;
    transmit(seq);
  });
}

void
Consumer::onReconnect()
{
  std::deque<std::uint64_t> queued;
  queued.swap(m_queue);
  for (std::uint64_t seq : queued) {
    Pending& p = m_pending[seq];
    p.queued = false;
    if (isSettled(seq)) {
      continue;
    }
    const SegmentRecord& rec = m_records[seq];
    if (rec.deadline && m_sched.now() > *rec.deadline) {
      m_records[seq].abandoned = true;
      ++m_counters.nAbandoned;
      continue;
    }
    transmit(seq);
  }
}

} // namespace ndnmob
