#include "ndnmob/app/producer.hpp"

#include "ndnmob/app/segment.hpp"

#include <cmath>
#include <stdexcept>

namespace ndnmob {

Producer::Producer(Scheduler& sched, ProducerParams params, SendFn send)
  : m_sched(sched)
  , m_params(std::move(params))
  , m_send(std::move(send))
{
  if (!(m_params.rate > 0.0)) {
    throw std::invalid_argument("producer rate must be positive");
  }
}

SimTime
Producer::publicationTime(std::uint64_t seq) const
{
  return kSimStart + Duration{std::llround(static_cast<double>(seq) * 1e6 / m_params.rate)};
}

void
Producer::receive(const Packet& pkt)
{
  const auto* interest = std::get_if<Interest>(&pkt);
  if (interest == nullptr) {
    return;
  }
  ++m_counters.nInterests;

  std::optional<std::uint64_t> seq;
  if (interest->name.size() == m_params.prefix.size() + 1 && m_params.prefix.isPrefixOf(interest->name)) {
    seq = parseSegment(interest->name);
  }
  if (!seq) {
    ++m_counters.nMalformed;
    m_send(Nack{interest->name, NackReason::NoRoute, interest->nonce});
    return;
  }

  SimTime pub = publicationTime(*seq);
  if (pub <= m_sched.now()) {
    sendData(*seq);
    return;
  }

  SimTime expiry = m_sched.now() + interest->lifetime;
  ++m_counters.nHeld;
  auto [it, fresh] = m_held.try_emplace(*seq, expiry);
  if (!fresh) {
    it->second = std::max(it->second, expiry);
    return;
  }
  std::uint64_t s = *seq;
  m_sched.scheduleAt(pub, [this, s] { publish(s); });
}

void
Producer::publish(std::uint64_t seq)
{
  auto it = m_held.find(seq);
  if (it == m_held.end()) {
    return;
  }
  SimTime expiry = it->second;
  m_held.erase(it);
  if (expiry < m_sched.now()) {
    ++m_counters.nHeldExpired;
    return;
  }
  sendData(seq);
}

void
Producer::sendData(std::uint64_t seq)
{
  Data data;
  data.name = segmentName(m_params.prefix, seq);
  data.createdAt = publicationTime(seq);
  ++m_counters.nDataSent;
  m_send(std::move(data));
}

} // namespace ndnmob
