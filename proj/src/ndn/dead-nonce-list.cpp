#include "ndnmob/ndn/dead-nonce-list.hpp"

#include "ndnmob/sim/random.hpp"

namespace ndnmob {

std::uint64_t
DeadNonceList::key(const Name& name, std::uint64_t nonce) noexcept
{
  // Nonces are 64-bit random draws, so hashing them with the name leaves
  // collisions far below anything a run can produce.
  return mix64(std::hash<Name>{}(name) ^ mix64(nonce));
}

void
DeadNonceList::add(const Name& name, std::uint64_t nonce, SimTime now)
{
  evict(now);
  auto k = key(name, nonce);
  m_fifo.push_back({k, now + m_grace});
  m_entries.emplace(k, now + m_grace);
}

bool
DeadNonceList::has(const Name& name, std::uint64_t nonce, SimTime now)
{
  evict(now);
  return m_entries.count(key(name, nonce)) > 0;
}

void
DeadNonceList::evict(SimTime now)
{
  while (!m_fifo.empty() && m_fifo.front().expiry <= now) {
    auto [first, last] = m_entries.equal_range(m_fifo.front().key);
    for (auto it = first; it != last; ++it) {
      if (it->second == m_fifo.front().expiry) {
        m_entries.erase(it);
        break;
      }
    }
    m_fifo.pop_front();
  }
}

} // namespace ndnmob
