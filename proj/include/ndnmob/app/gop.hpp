#ifndef NDNMOB_APP_GOP_HPP
#define NDNMOB_APP_GOP_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace ndnmob {

/**
 * Packetisation of the synthetic video: 50 packets per second, 15 frames per
 * second, one GOP per second. Frames take 4, 3, 3, 4, 3, 3, ... packets, so a
 * GOP is 15 frames in 50 packets and the key frame gets the first 4.
 */
struct GopLayout
{
  static constexpr int kPacketsPerGop = 50;
  static constexpr int kFramesPerGop = 15;
  static constexpr std::array<int, 3> kPattern{4, 3, 3};

  struct FrameRef
  {
    std::uint64_t gop;
    int frame;
  };

  static FrameRef
  frameOf(std::uint64_t seq) noexcept;

  /// Packet count of every frame in a GOP, key frame first.
  static std::vector<int>
  packetsPerFrame();
};

/**
 * Decodable frames of one GOP given which of its frames arrived intact:
 * zero if the key frame is missing, otherwise the key frame plus every intact
 * B-frame.
 */
int
decodableFrames(const std::vector<bool>& frameComplete);

/// Per-packet variant: @p packetOk has one flag per packet of the GOP.
int
decodableFramesFromPackets(const std::vector<bool>& packetOk);

/// Flags, per packet of the GOP, whether it belongs to a decodable frame.
std::vector<bool>
usefulPackets(const std::vector<bool>& packetOk);

} // namespace ndnmob

#endif // NDNMOB_APP_GOP_HPP
