#ifndef NDNMOB_NDN_PACKET_HPP
#define NDNMOB_NDN_PACKET_HPP

#include "ndnmob/ndn/name.hpp"
#include "ndnmob/sim/time.hpp"

#include <cstdint>
#include <string_view>
#include <variant>

namespace ndnmob {

inline constexpr int kInterestSizeBytes = 28;
inline constexpr int kDataSizeBytes = 1024;
inline constexpr int kNackSizeBytes = 32;

struct Interest
{
  Name name;
  std::uint64_t nonce = 0;
  Duration lifetime{};
  int hopCount = 0;
  int sizeBytes = kInterestSizeBytes;
};

struct Data
{
  Name name;
  int sizeBytes = kDataSizeBytes;
  SimTime createdAt{};
};

enum class NackReason {
  NoRoute,
  Timeout,
  Duplicate,
};

std::string_view
toString(NackReason reason) noexcept;

/// Negative acknowledgement; carries the nonce of the Interest it answers.
struct Nack
{
  Name name;
  NackReason reason = NackReason::NoRoute;
  std::uint64_t nonce = 0;
  int sizeBytes = kNackSizeBytes;
};

using Packet = std::variant<Interest, Data, Nack>;

const Name&
packetName(const Packet& pkt) noexcept;

int
packetSize(const Packet& pkt) noexcept;

/// One-letter packet tag used in traces: I, D or N.
char
packetTag(const Packet& pkt) noexcept;

} // namespace ndnmob

#endif // NDNMOB_NDN_PACKET_HPP
