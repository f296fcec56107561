#ifndef NDNMOB_FW_FORWARDER_HPP
#define NDNMOB_FW_FORWARDER_HPP

#include "ndnmob/fw/strategy.hpp"
#include "ndnmob/ndn/content-store.hpp"
#include "ndnmob/ndn/dead-nonce-list.hpp"
#include "ndnmob/ndn/face.hpp"
#include "ndnmob/ndn/fib.hpp"
#include "ndnmob/ndn/packet.hpp"
#include "ndnmob/ndn/pit.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ndnmob {

/// How a node picks the expiry instant of a new PIT entry.
enum class PitTimeoutPolicy {
  /// min(remaining lifetime, srtt + 4 rttvar of the out-faces), at least the
  /// configured floor. A timed-out entry may retry once on untried faces.
  Adaptive,
  /// The entry lives exactly as long as its longest-lived in-record.
  Lifetime,
};

std::string_view
toString(PitTimeoutPolicy policy) noexcept;

PitTimeoutPolicy
parsePitTimeoutPolicy(std::string_view text);

struct ForwarderOptions
{
  StrategyKind strategy = StrategyKind::SmartFlooding;
  NodeZone zone = NodeZone::Core;
  /// Hosts also consider every enabled wireless face a candidate.
  bool isHost = false;
  std::size_t csCapacity = 1000;
  std::size_t pitCapacity = 0;
  PitTimeoutPolicy pitPolicy = PitTimeoutPolicy::Adaptive;
  Duration minPitTimeout = std::chrono::milliseconds(20);
  Duration deadNonceGrace = std::chrono::seconds(1);
};

struct ForwarderCounters
{
  std::uint64_t nInInterests = 0;
  std::uint64_t nInData = 0;
  std::uint64_t nInNacks = 0;
  std::uint64_t nOutInterests = 0;
  std::uint64_t nOutData = 0;
  std::uint64_t nOutNacks = 0;
  std::uint64_t nCsHits = 0;
  std::uint64_t nAggregated = 0;
  std::uint64_t nRetransmitted = 0;
  std::uint64_t nDuplicateDrops = 0;
  std::uint64_t nUnsolicitedData = 0;
  std::uint64_t nNoRoute = 0;
  std::uint64_t nExpired = 0;
  std::uint64_t nRetries = 0;
  std::uint64_t nPitFullDrops = 0;
  std::uint64_t nDisabledDrops = 0;
  std::uint64_t nSatisfied = 0;
};

/**
 * One node's forwarding plane: face table, CS, PIT, FIB and strategy.
 *
 * Packets enter through receive() and leave through the send hook, which the
 * owner wires to links or to local applications.
 */
class Forwarder
{
public:
  using SendHook = std::function<void(FaceId, const Packet&)>;

  Forwarder(Scheduler& sched, std::string nodeName, ForwarderOptions opts = {});

  Forwarder(const Forwarder&) = delete;
  Forwarder& operator=(const Forwarder&) = delete;

  const std::string&
  nodeName() const noexcept
  {
    return m_nodeName;
  }

  const ForwarderOptions&
  options() const noexcept
  {
    return m_opts;
  }

  void
  setSendHook(SendHook hook)
  {
    m_send = std::move(hook);
  }

  FaceId
  addFace(FaceKind kind);

  Face&
  face(FaceId id)
  {
    return m_faces.at(id);
  }

  const Face&
  face(FaceId id) const
  {
    return m_faces.at(id);
  }

  const std::vector<Face>&
  faces() const noexcept
  {
    return m_faces;
  }

  /// Turns a face on (YELLOW) or off (RED).
  void
  setFaceEnabled(FaceId id, bool enabled);

  Fib&
  fib() noexcept
  {
    return m_fib;
  }

  ContentStore&
  cs() noexcept
  {
    return m_cs;
  }

  Pit&
  pit() noexcept
  {
    return m_pit;
  }

  const ForwarderCounters&
  counters() const noexcept
  {
    return m_counters;
  }

  /// Entry point for every packet arriving on @p inFace.
  void
  receive(FaceId inFace, const Packet& pkt);

private:
  void
  onInterest(FaceId inFace, const Interest& interest);

  void
  onData(FaceId inFace, const Data& data);

  void
  onNack(FaceId inFace, const Nack& nack);

  void
  onExpiry(const Name& name);

  /// Faces the strategy may choose from: FIB next hops (plus the radios of a
  /// host) that are enabled and not downstream of @p entry.
  std::vector<const Face*>
  candidateFaces(PitEntry& entry, bool untriedOnly);

  /// Runs the strategy and sends. Returns false if nothing was selected.
  bool
  forward(PitEntry& entry, const Interest& interest, bool untriedOnly);

  void
  armExpiry(PitEntry& entry);

  void
  rejectPending(PitEntry& entry, NackReason reason);

  void
  finish(PitEntry& entry);

  void
  send(FaceId face, const Packet& pkt);

private:
  Scheduler& m_sched;
  std::string m_nodeName;
  ForwarderOptions m_opts;
  SendHook m_send;
  std::vector<Face> m_faces;
  Fib m_fib;
  ContentStore m_cs;
  Pit m_pit;
  DeadNonceList m_dnl;
  ForwarderCounters m_counters;
};

} // namespace ndnmob

#endif // NDNMOB_FW_FORWARDER_HPP
