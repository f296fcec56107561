#ifndef NDNMOB_NDN_PIT_HPP
#define NDNMOB_NDN_PIT_HPP

#include "ndnmob/ndn/face.hpp"
#include "ndnmob/ndn/name.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ndnmob {

struct InRecord
{
  FaceId face = kInvalidFace;
  std::uint64_t nonce = 0;
  SimTime arrival{};
  SimTime expiry{};
};

struct OutRecord
{
  FaceId face = kInvalidFace;
  std::uint64_t nonce = 0;
  SimTime sent{};
  bool nacked = false;
};

/// A pending Interest: who asked (in-records) and where it went (out-records).
class PitEntry
{
public:
  explicit
  PitEntry(Name name)
    : m_name(std::move(name))
  {
  }

  const Name&
  name() const noexcept
  {
    return m_name;
  }

  const std::vector<InRecord>&
  inRecords() const noexcept
  {
    return m_in;
  }

  const std::vector<OutRecord>&
  outRecords() const noexcept
  {
    return m_out;
  }

  InRecord*
  findInRecord(FaceId face);

  OutRecord*
  findOutRecord(FaceId face);

  /// Inserts or refreshes the in-record of @p face.
  InRecord&
  insertInRecord(FaceId face, std::uint64_t nonce, SimTime now, Duration lifetime);

  /// Inserts or refreshes the out-record of @p face and marks it tried.
  OutRecord&
  insertOutRecord(FaceId face, std::uint64_t nonce, SimTime now);

  bool
  hasNonce(std::uint64_t nonce) const noexcept
  {
    return std::find(m_nonces.begin(), m_nonces.end(), nonce) != m_nonces.end();
  }

  void
  addNonce(std::uint64_t nonce)
  {
    if (!hasNonce(nonce)) {
      m_nonces.push_back(nonce);
    }
  }

  const std::vector<std::uint64_t>&
  nonces() const noexcept
  {
    return m_nonces;
  }

  bool
  wasTried(FaceId face) const noexcept
  {
    return std::find(m_tried.begin(), m_tried.end(), face) != m_tried.end();
  }

  /// Latest in-record expiry: the entry is useless past this instant.
  SimTime
  lifetimeEnd() const noexcept;

  bool
  allOutRecordsNacked() const noexcept;

public:
  EventHandle expiryTimer;
  bool hasRetried = false;

private:
  Name m_name;
  std::vector<InRecord> m_in;
  std::vector<OutRecord> m_out;
  std::vector<std::uint64_t> m_nonces;
  std::vector<FaceId> m_tried;
};

/// Pending Interest Table keyed by exact name. A capacity of zero means
/// unbounded.
class Pit
{
public:
  explicit
  Pit(std::size_t capacity = 0)
    : m_capacity(capacity)
  {
  }

  PitEntry*
  find(const Name& name);

  /// Creates the entry for @p name, or returns nullptr when the table is full.
  PitEntry*
  insert(const Name& name);

  void
  erase(const Name& name);

  std::size_t
  size() const noexcept
  {
    return m_table.size();
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

private:
  std::size_t m_capacity;
  std::unordered_map<Name, PitEntry> m_table;
};

} // namespace ndnmob

#endif // NDNMOB_NDN_PIT_HPP
