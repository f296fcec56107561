#include "ndnmob/ndn/name.hpp"

#include <ostream>

namespace ndnmob {

Name::Name(std::string_view uri)
{
  std::size_t pos = 0;
  while (pos <= uri.size()) {
    std::size_t next = uri.find('/', pos);
    if (next == std::string_view::npos) {
      next = uri.size();
    }
    if (next > pos) {
      m_components.emplace_back(uri.substr(pos, next - pos));
    }
    pos = next + 1;
  }
}

Name::Name(std::initializer_list<std::string_view> components)
{
  m_components.reserve(components.size());
  for (auto c : components) {
    m_components.emplace_back(c);
  }
}

Name&
Name::append(std::string_view component)
{
  m_components.emplace_back(component);
  return *this;
}

Name
Name::getPrefix(std::size_t n) const
{
  Name prefix;
  n = std::min(n, m_components.size());
  prefix.m_components.assign(m_components.begin(), m_components.begin() + static_cast<std::ptrdiff_t>(n));
  return prefix;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  if (size() > other.size()) {
    return false;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (m_components[i] != other.m_components[i]) {
      return false;
    }
  }
  return true;
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    return "/";
  }
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace ndnmob

std::size_t
std::hash<ndnmob::Name>::operator()(const ndnmob::Name& name) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  std::hash<std::string_view> hs;
  for (const auto& c : name) {
    h = (h ^ hs(c)) * 0x100000001b3ULL + (h >> 29);
  }
  return h;
}
