#include "ndnmob/check/reference-models.hpp"

#include <algorithm>
#include <functional>

namespace ndnmob::check {

std::optional<Name>
bruteForceLpm(const std::vector<Name>& prefixes, const Name& name)
{
  std::optional<Name> best;
  for (const auto& p : prefixes) {
    if (p.size() > name.size()) {
      continue;
    }
    bool match = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != name[i]) {
        match = false;
        break;
      }
    }
    if (match && (!best || p.size() > best->size())) {
      best = p;
    }
  }
  return best;
}

bool
ReferenceLru::lookup(const Name& name)
{
  auto it = std::find(m_order.begin(), m_order.end(), name);
  if (it == m_order.end()) {
    return false;
  }
  Name n = *it;
  m_order.erase(it);
  m_order.insert(m_order.begin(), n);
  return true;
}

void
ReferenceLru::insert(const Name& name)
{
  if (m_capacity == 0) {
    return;
  }
  auto it = std::find(m_order.begin(), m_order.end(), name);
  if (it != m_order.end()) {
    m_order.erase(it);
  }
  m_order.insert(m_order.begin(), name);
  if (m_order.size() > m_capacity) {
    m_order.pop_back();
  }
}

int
bruteForceDecodableFrames(const FrameLayout& layout, const std::vector<bool>& packetOk)
{
  const auto nFrames = layout.packetsPerFrame.size();
  std::vector<bool> complete(nFrames, false);
  std::size_t pkt = 0;
  for (std::size_t f = 0; f < nFrames; ++f) {
    bool ok = true;
    for (int k = 0; k < layout.packetsPerFrame[f]; ++k) {
      bool got = packetOk.at(pkt++);
      ok = ok && got;
    }
    complete[f] = ok;
  }

  // dependency graph: frame 0 has no references, frame f > 0 references 0
  std::vector<std::vector<std::size_t>> refs(nFrames);
  for (std::size_t f = 1; f < nFrames; ++f) {
    refs[f].push_back(0);
  }
  std::vector<int> memo(nFrames, -1);
  std::function<bool(std::size_t)> decodable = [&] (std::size_t f) -> bool {
    if (memo[f] >= 0) {
      return memo[f] == 1;
    }
    bool ok = complete[f];
    for (auto r : refs[f]) {
      ok = ok && decodable(r);
    }
    memo[f] = ok ? 1 : 0;
    return ok;
  };

  int count = 0;
  for (std::size_t f = 0; f < nFrames; ++f) {
    count += decodable(f) ? 1 : 0;
  }
  return count;
}

} // namespace ndnmob::check
