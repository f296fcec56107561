#ifndef NDNMOB_APP_SEGMENT_HPP
#define NDNMOB_APP_SEGMENT_HPP

#include "ndnmob/ndn/name.hpp"
#include "ndnmob/sim/time.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace ndnmob {

enum class TrafficKind {
  /// Delay-sensitive, every packet useful on its own.
  DsUncorrelated,
  /// Delay-sensitive video: usefulness depends on the frame and its GOP.
  DsVideo,
  /// Delay-tolerant, Poisson arrivals, no deadline.
  DtPoisson,
};

/// Config spelling: ds, video, dt.
std::string_view
toString(TrafficKind kind) noexcept;

TrafficKind
parseTrafficKind(std::string_view text);

inline bool
isDelaySensitive(TrafficKind k) noexcept
{
  return k != TrafficKind::DtPoisson;
}

/// prefix + "seg_<seq>"
Name
segmentName(const Name& prefix, std::uint64_t seq);

/// Sequence number carried by the last component, if it is "seg_<digits>".
std::optional<std::uint64_t>
parseSegment(const Name& name);

struct SegmentRecord
{
  std::uint64_t seq = 0;
  SimTime issuedAt{};
  /// Zero-duration deadline offset means "no deadline" (delay-tolerant).
  std::optional<SimTime> deadline;
  std::optional<SimTime> receivedAt;
  int retxCount = 0;
  bool abandoned = false;

  bool
  onTime() const noexcept
  {
    return receivedAt && (!deadline || *receivedAt <= *deadline);
  }
};

} // namespace ndnmob

#endif // NDNMOB_APP_SEGMENT_HPP
