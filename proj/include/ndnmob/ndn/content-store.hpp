#ifndef NDNMOB_NDN_CONTENT_STORE_HPP
#define NDNMOB_NDN_CONTENT_STORE_HPP

#include "ndnmob/ndn/packet.hpp"

#include <list>
#include <unordered_map>
#include <vector>

namespace ndnmob {

/// Exact-match Data cache with least-recently-used eviction. A capacity of
/// zero disables caching.
class ContentStore
{
public:
  explicit
  ContentStore(std::size_t capacity = 0)
    : m_capacity(capacity)
  {
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

  /// Shrinking evicts from the LRU end.
  void
  setCapacity(std::size_t capacity);

  std::size_t
  size() const noexcept
  {
    return m_index.size();
  }

  /// Returns the cached Data for exactly @p name and marks it most recently
  /// used, or nullptr on a miss.
  const Data*
  lookup(const Name& name);

  /// Stores @p data as most recently used, replacing any same-name copy.
  void
  insert(const Data& data);

  bool
  contains(const Name& name) const
  {
    return m_index.count(name) > 0;
  }

  /// Cached names from most to least recently used.
  std::vector<Name>
  namesByRecency() const;

  std::uint64_t
  nHits() const noexcept
  {
    return m_hits;
  }

  std::uint64_t
  nMisses() const noexcept
  {
    return m_misses;
  }

private:
  void
  evictToCapacity();

private:
  std::size_t m_capacity;
  std::list<Data> m_lru; // front = most recent
  std::unordered_map<Name, std::list<Data>::iterator> m_index;
  std::uint64_t m_hits = 0;
  std::uint64_t m_misses = 0;
};

} // namespace ndnmob

#endif // NDNMOB_NDN_CONTENT_STORE_HPP
