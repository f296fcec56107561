#include "ndnmob/ndn/packet.hpp"

namespace ndnmob {

std::string_view
toString(NackReason reason) noexcept
{
  switch (reason) {
    case NackReason::NoRoute:
      return "NO_ROUTE";
    case NackReason::Timeout:
      return "TIMEOUT";
    case NackReason::Duplicate:
      return "DUPLICATE";
  }
  return "UNKNOWN";
}

const Name&
packetName(const Packet& pkt) noexcept
{
  return std::visit([] (const auto& p) -> const Name& { return p.name; }, pkt);
}

int
packetSize(const Packet& pkt) noexcept
{
  return std::visit([] (const auto& p) { return p.sizeBytes; }, pkt);
}

char
packetTag(const Packet& pkt) noexcept
{
  static constexpr char tags[] = {'I', 'D', 'N'};
  return tags[pkt.index()];
}

} // namespace ndnmob
