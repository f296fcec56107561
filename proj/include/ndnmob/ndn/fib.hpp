#ifndef NDNMOB_NDN_FIB_HPP
#define NDNMOB_NDN_FIB_HPP

#include "ndnmob/ndn/face.hpp"
#include "ndnmob/ndn/name.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ndnmob {

struct NextHop
{
  FaceId face = kInvalidFace;
  std::uint32_t cost = 0;
};

class FibEntry
{
public:
  explicit
  FibEntry(Name prefix)
    : m_prefix(std::move(prefix))
  {
  }

  const Name&
  prefix() const noexcept
  {
    return m_prefix;
  }

  /// Ranked by (cost, face id).
  const std::vector<NextHop>&
  nextHops() const noexcept
  {
    return m_nextHops;
  }

  /// Adds or updates the next hop for @p face, keeping the ranking.
  void
  addNextHop(FaceId face, std::uint32_t cost);

  bool
  removeNextHop(FaceId face);

private:
  Name m_prefix;
  std::vector<NextHop> m_nextHops;
};

/// Forwarding Information Base backed by a component trie, so longest-prefix
/// match costs one map probe per name component.
class Fib
{
public:
  Fib();
  ~Fib();
  Fib(Fib&&) noexcept;
  Fib& operator=(Fib&&) noexcept;

  /// Returns the entry for @p prefix, creating an empty one if needed.
  FibEntry&
  insert(const Name& prefix);

  void
  addNextHop(const Name& prefix, FaceId face, std::uint32_t cost = 0);

  /// Removes the exact-match entry; returns whether one existed.
  bool
  erase(const Name& prefix);

  const FibEntry*
  findExactMatch(const Name& prefix) const;

  /// The entry with the longest prefix of @p name, or nullptr.
  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  std::size_t
  size() const noexcept
  {
    return m_size;
  }

private:
  struct Node;

  std::unique_ptr<Node> m_root;
  std::size_t m_size = 0;
};

} // namespace ndnmob

#endif // NDNMOB_NDN_FIB_HPP
