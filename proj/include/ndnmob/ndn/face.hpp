#ifndef NDNMOB_NDN_FACE_HPP
#define NDNMOB_NDN_FACE_HPP

#include "ndnmob/sim/time.hpp"

#include <cstdint>
#include <limits>
#include <string_view>

namespace ndnmob {

using FaceId = std::uint32_t;
inline constexpr FaceId kInvalidFace = std::numeric_limits<FaceId>::max();

enum class FaceKind {
  Wired,
  Wireless,
  Application,
};

enum class FaceStatus {
  Enabled,
  Disabled,
};

/// Forwarding-strategy view of a face: GREEN returned Data recently, YELLOW is
/// unknown or timed out, RED is down.
enum class FaceColor {
  Green,
  Yellow,
  Red,
};

std::string_view
toString(FaceColor color) noexcept;

/**
 * TCP-style smoothed RTT estimator (gains 1/8 and 1/4).
 *
 * Starts from srtt = 200 ms and applies the EWMA to every sample, including
 * the first one.
 */
class RttEstimator
{
public:
  static constexpr Duration kInitialSrtt = std::chrono::milliseconds(200);
  static constexpr Duration kInitialRttVar = std::chrono::milliseconds(100);

  void
  addMeasurement(Duration rtt) noexcept;

  Duration
  srtt() const noexcept
  {
    return m_srtt;
  }

  Duration
  rttVar() const noexcept
  {
    return m_rttVar;
  }

  /// srtt + 4 * rttvar
  Duration
  rto() const noexcept
  {
    return m_srtt + 4 * m_rttVar;
  }

  std::uint64_t
  sampleCount() const noexcept
  {
    return m_samples;
  }

private:
  Duration m_srtt = kInitialSrtt;
  Duration m_rttVar = kInitialRttVar;
  std::uint64_t m_samples = 0;
};

struct FaceCounters
{
  std::uint64_t nInInterests = 0;
  std::uint64_t nInData = 0;
  std::uint64_t nInNacks = 0;
  std::uint64_t nOutInterests = 0;
  std::uint64_t nOutData = 0;
  std::uint64_t nOutNacks = 0;
};

struct Face
{
  FaceId id = kInvalidFace;
  FaceKind kind = FaceKind::Wired;
  FaceStatus status = FaceStatus::Enabled;
  FaceColor color = FaceColor::Yellow;
  RttEstimator rtt;
  FaceCounters counters;

  bool
  isEnabled() const noexcept
  {
    return status == FaceStatus::Enabled;
  }
};

} // namespace ndnmob

#endif // NDNMOB_NDN_FACE_HPP
