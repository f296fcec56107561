#ifndef NDNMOB_APP_CONSUMER_HPP
#define NDNMOB_APP_CONSUMER_HPP

#include "ndnmob/app/segment.hpp"
#include "ndnmob/ndn/face.hpp"
#include "ndnmob/ndn/packet.hpp"
#include "ndnmob/sim/random.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <deque>
#include <functional>
#include <vector>

namespace ndnmob {

struct ConsumerParams
{
  TrafficKind kind = TrafficKind::DsUncorrelated;
  Name prefix = Name("/producer/app/stream");
  /// Packets per second.
  double rate = 50.0;
  /// Playout deadline relative to issue time; delay-sensitive kinds only.
  Duration delta = std::chrono::milliseconds(500);
  Duration interestLifetime = std::chrono::seconds(2);
  Duration dtBackoffBase = std::chrono::milliseconds(100);
  Duration dtBackoffCap = std::chrono::seconds(1);
  /// New segments are issued in [issueStart, issueEnd).
  SimTime issueStart = kSimStart;
  SimTime issueEnd = atMicros(122'000'000);
  /// Extra wait past the Interest lifetime before the app gives up on an
  /// attempt that produced neither Data nor Nack.
  Duration guardSlack = std::chrono::milliseconds(100);
};

struct ConsumerCounters
{
  std::uint64_t nInterestsSent = 0;
  std::uint64_t nRetransmissions = 0;
  std::uint64_t nQueuedWhileDetached = 0;
  std::uint64_t nDataReceived = 0;
  std::uint64_t nDuplicateData = 0;
  std::uint64_t nUnexpectedData = 0;
  std::uint64_t nNacks = 0;
  std::uint64_t nStaleNacks = 0;
  std::uint64_t nGuardTimeouts = 0;
  std::uint64_t nAbandoned = 0;
};

/**
 * Streaming consumer.
 *
 * Delay-sensitive traffic issues one segment per 1/rate tick and retransmits
 * right away after a Nack or timeout as long as one smoothed RTT still fits
 * before the deadline. Delay-tolerant traffic issues segments with exponential
 * gaps and retries forever with doubling back-off. Interests are held back
 * while the host has no attached radio and flushed on reattachment.
 */
class Consumer
{
public:
  using SendFn = std::function<void(Packet)>;
  using ConnectedFn = std::function<bool()>;

  Consumer(Scheduler& sched, ConsumerParams params, std::uint64_t seed, SendFn send);

  Consumer(const Consumer&) = delete;
  Consumer& operator=(const Consumer&) = delete;

  /// Lets the app ask whether the host currently has a usable uplink.
  void
  setConnectivityProbe(ConnectedFn probe)
  {
    m_connected = std::move(probe);
  }

  /// Schedules the first issue event.
  void
  start();

  /// Packet delivered by the host's forwarder on the app face.
  void
  receive(const Packet& pkt);

  /// The host just attached to an access point.
  void
  onReconnect();

  const ConsumerParams&
  params() const noexcept
  {
    return m_params;
  }

  const std::vector<SegmentRecord>&
  records() const noexcept
  {
    return m_records;
  }

  const RttEstimator&
  rtt() const noexcept
  {
    return m_rtt;
  }

  const ConsumerCounters&
  counters() const noexcept
  {
    return m_counters;
  }

  /// Issue time of segment @p seq for evenly spaced traffic.
  static SimTime
  evenIssueTime(std::uint64_t seq, double rate, SimTime start);

private:
  struct Pending
  {
    std::uint64_t nonce = 0;
    SimTime lastSent{};
    int lossCount = 0;
    bool inFlight = false;
    bool queued = false;
    EventHandle guard;
    EventHandle backoff;
  };

  void
  issueNext();

  void
  transmit(std::uint64_t seq);

  void
  onData(const Data& data);

  void
  onNack(const Nack& nack);

  void
  onLoss(std::uint64_t seq);

  bool
  isSettled(std::uint64_t seq) const;

  bool
  isConnected() const
  {
    return !m_connected || m_connected();
  }

private:
  Scheduler& m_sched;
  ConsumerParams m_params;
  RngStream m_trafficRng;
  RngStream m_nonceRng;
  SendFn m_send;
  ConnectedFn m_connected;

  std::vector<SegmentRecord> m_records;
  std::vector<Pending> m_pending;
  std::deque<std::uint64_t> m_queue;
  SimTime m_nextIssue{};
  RttEstimator m_rtt;
  ConsumerCounters m_counters;
};

} // namespace ndnmob

#endif // NDNMOB_APP_CONSUMER_HPP
