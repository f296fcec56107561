#ifndef NDNMOB_APP_PRODUCER_HPP
#define NDNMOB_APP_PRODUCER_HPP

#include "ndnmob/ndn/packet.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <functional>
#include <unordered_map>

namespace ndnmob {

struct ProducerParams
{
  Name prefix = Name("/producer/app/stream");
  double rate = 50.0;
};

struct ProducerCounters
{
  std::uint64_t nInterests = 0;
  std::uint64_t nDataSent = 0;
  std::uint64_t nHeld = 0;
  std::uint64_t nHeldExpired = 0;
  std::uint64_t nMalformed = 0;
};

/**
 * Live source. Segment s becomes available at s / rate seconds. An Interest
 * for a segment that does not exist yet is held until publication, unless its
 * lifetime runs out first.
 */
class Producer
{
public:
  using SendFn = std::function<void(Packet)>;

  Producer(Scheduler& sched, ProducerParams params, SendFn send);

  Producer(const Producer&) = delete;
  Producer& operator=(const Producer&) = delete;

  void
  receive(const Packet& pkt);

  SimTime
  publicationTime(std::uint64_t seq) const;

  const ProducerCounters&
  counters() const noexcept
  {
    return m_counters;
  }

private:
  void
  publish(std::uint64_t seq);

  void
  sendData(std::uint64_t seq);

private:
  Scheduler& m_sched;
  ProducerParams m_params;
  SendFn m_send;
  /// Held segments and the latest expiry among their Interests.
  std::unordered_map<std::uint64_t, SimTime> m_held;
  ProducerCounters m_counters;
};

} // namespace ndnmob

#endif // NDNMOB_APP_PRODUCER_HPP
