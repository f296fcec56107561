#ifndef NDNMOB_CHECK_REFERENCE_MODELS_HPP
#define NDNMOB_CHECK_REFERENCE_MODELS_HPP

// Deliberately naive implementations used as oracles for the optimised data
// structures. Nothing here is on the simulation fast path.

#include "ndnmob/ndn/name.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ndnmob::check {

/// Longest-prefix match by scanning every prefix.
std::optional<Name>
bruteForceLpm(const std::vector<Name>& prefixes, const Name& name);

/// LRU cache kept as a plain vector ordered from most to least recent.
class ReferenceLru
{
public:
  explicit
  ReferenceLru(std::size_t capacity)
    : m_capacity(capacity)
  {
  }

  bool
  lookup(const Name& name);

  void
  insert(const Name& name);

  const std::vector<Name>&
  contents() const noexcept
  {
    return m_order;
  }

private:
  std::size_t m_capacity;
  std::vector<Name> m_order;
};

/// Frames of one GOP as packet-index ranges, first frame is the key frame.
struct FrameLayout
{
  std::vector<int> packetsPerFrame;
};

/**
 * Decodable frame count of one GOP by explicit dependency closure: a frame is
 * decodable if all of its packets arrived and every frame it references is
 * decodable. Key frame references nothing, every other frame references only
 * the key frame.
 */
int
bruteForceDecodableFrames(const FrameLayout& layout, const std::vector<bool>& packetOk);

} // namespace ndnmob::check

#endif // NDNMOB_CHECK_REFERENCE_MODELS_HPP
