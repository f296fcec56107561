#include "ndnmob/ndn/content-store.hpp"

namespace ndnmob {

void
ContentStore::setCapacity(std::size_t capacity)
{
  m_capacity = capacity;
  evictToCapacity();
}

const Data*
ContentStore::lookup(const Name& name)
{
  auto it = m_index.find(name);
  if (it == m_index.end()) {
    ++m_misses;
    return nullptr;
  }
  m_lru.splice(m_lru.begin(), m_lru, it->second);
  ++m_hits;
  return &*it->second;
}

void
ContentStore::insert(const Data& data)
{
  if (m_capacity == 0) {
    return;
  }
  auto it = m_index.find(data.name);
  if (it != m_index.end()) {
    *it->second = data;
    m_lru.splice(m_lru.begin(), m_lru, it->second);
    return;
  }
  m_lru.push_front(data);
  m_index.emplace(data.name, m_lru.begin());
  evictToCapacity();
}

std::vector<Name>
ContentStore::namesByRecency() const
{
  std::vector<Name> names;
  names.reserve(m_lru.size());
  for (const auto& d : m_lru) {
    names.push_back(d.name);
  }
  return names;
}

void
ContentStore::evictToCapacity()
{
  while (m_index.size() > m_capacity) {
    m_index.erase(m_lru.back().name);
    m_lru.pop_back();
  }
}

} // namespace ndnmob
