#include "ndnmob/ndn/pit.hpp"

namespace ndnmob {

InRecord*
PitEntry::findInRecord(FaceId face)
{
  auto it = std::find_if(m_in.begin(), m_in.end(), [face] (const auto& r) { return r.face == face; });
  return it == m_in.end() ? nullptr : &*it;
}

OutRecord*
PitEntry::findOutRecord(FaceId face)
{
  auto it = std::find_if(m_out.begin(), m_out.end(), [face] (const auto& r) { return r.face == face; });
  return it == m_out.end() ? nullptr : &*it;
}

InRecord&
PitEntry::insertInRecord(FaceId face, std::uint64_t nonce, SimTime now, Duration lifetime)
{
  InRecord* rec = findInRecord(face);
  if (rec == nullptr) {
    rec = &m_in.emplace_back();
    rec->face = face;
  }
  rec->nonce = nonce;
  rec->arrival = now;
  rec->expiry = now + lifetime;
  return *rec;
}

OutRecord&
PitEntry::insertOutRecord(FaceId face, std::uint64_t nonce, SimTime now)
{
  OutRecord* rec = findOutRecord(face);
  if (rec == nullptr) {
    rec = &m_out.emplace_back();
    rec->face = face;
  }
  rec->nonce = nonce;
  rec->sent = now;
  rec->nacked = false;
  if (!wasTried(face)) {
    m_tried.push_back(face);
  }
  return *rec;
}

SimTime
PitEntry::lifetimeEnd() const noexcept
{
  SimTime end = kSimStart;
  for (const auto& r : m_in) {
    end = std::max(end, r.expiry);
  }
  return end;
}

bool
PitEntry::allOutRecordsNacked() const noexcept
{
  return std::all_of(m_out.begin(), m_out.end(), [] (const auto& r) { return r.nacked; });
}

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_table.find(name);
  return it == m_table.end() ? nullptr : &it->second;
}

PitEntry*
Pit::insert(const Name& name)
{
  if (auto* existing = find(name); existing != nullptr) {
    return existing;
  }
  if (m_capacity != 0 && m_table.size() >= m_capacity) {
    return nullptr;
  }
  return &m_table.emplace(name, PitEntry(name)).first->second;
}

void
Pit::erase(const Name& name)
{
  auto it = m_table.find(name);
  if (it != m_table.end()) {
    it->second.expiryTimer.cancel();
    m_table.erase(it);
  }
}

} // namespace ndnmob
