#ifndef NDNMOB_NDN_DEAD_NONCE_LIST_HPP
#define NDNMOB_NDN_DEAD_NONCE_LIST_HPP

#include "ndnmob/ndn/name.hpp"
#include "ndnmob/sim/time.hpp"

#include <cstdint>
#include <deque>
#include <unordered_map>

namespace ndnmob {

/// Remembers (name, nonce) pairs of finished PIT entries for a fixed grace
/// period so that late flood copies are recognised as loops.
class DeadNonceList
{
public:
  explicit
  DeadNonceList(Duration grace = std::chrono::seconds(1))
    : m_grace(grace)
  {
  }

  void
  add(const Name& name, std::uint64_t nonce, SimTime now);

  bool
  has(const Name& name, std::uint64_t nonce, SimTime now);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

private:
  void
  evict(SimTime now);

  static std::uint64_t
  key(const Name& name, std::uint64_t nonce) noexcept;

private:
  struct Record
  {
    std::uint64_t key;
    SimTime expiry;
  };

  Duration m_grace;
  std::deque<Record> m_fifo; // expiry is non-decreasing along the queue
  std::unordered_multimap<std::uint64_t, SimTime> m_entries;
};

} // namespace ndnmob

#endif // NDNMOB_NDN_DEAD_NONCE_LIST_HPP
