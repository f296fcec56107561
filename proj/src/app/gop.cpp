#include "ndnmob/app/gop.hpp"

#include <stdexcept>

namespace ndnmob {

GopLayout::FrameRef
GopLayout::frameOf(std::uint64_t seq) noexcept
{
  auto k = static_cast<int>(seq % kPacketsPerGop);
  int block = k / 10;
  int r = k % 10;
  int inBlock = r < 4 ? 0 : (r < 7 ? 1 : 2);
  return {seq / kPacketsPerGop, 3 * block + inBlock};
}

std::vector<int>
GopLayout::packetsPerFrame()
{
  std::vector<int> out;
  for (int f = 0; f < kFramesPerGop; ++f) {
    out.push_back(kPattern[f % 3]);
  }
  return out;
}

int
decodableFrames(const std::vector<bool>& frameComplete)
{
  if (frameComplete.empty() || !frameComplete[0]) {
    return 0;
  }
  int n = 0;
  for (bool ok : frameComplete) {
    n += ok ? 1 : 0;
  }
  return n;
}

namespace {

std::vector<bool>
completeFrames(const std::vector<bool>& packetOk)
{
  if (packetOk.size() != GopLayout::kPacketsPerGop) {
    throw std::invalid_argument("a GOP has exactly 50 packets");
  }
  std::vector<bool> complete(GopLayout::kFramesPerGop, true);
  for (std::size_t i = 0; i < packetOk.size(); ++i) {
    if (!packetOk[i]) {
      complete[GopLayout::frameOf(i).frame] = false;
    }
  }
  return complete;
}

} // namespace

int
decodableFramesFromPackets(const std::vector<bool>& packetOk)
{
  return decodableFrames(completeFrames(packetOk));
}

std::vector<bool>
usefulPackets(const std::vector<bool>& packetOk)
{
  auto complete = completeFrames(packetOk);
  std::vector<bool> useful(packetOk.size(), false);
  if (!complete[0]) {
    return useful;
  }
  for (std::size_t i = 0; i < packetOk.size(); ++i) {
    useful[i] = complete[GopLayout::frameOf(i).frame];
  }
  return useful;
}

} // namespace ndnmob
