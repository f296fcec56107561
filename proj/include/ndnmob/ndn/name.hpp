#ifndef NDNMOB_NDN_NAME_HPP
#define NDNMOB_NDN_NAME_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ndnmob {

/**
 * Hierarchical content name: an ordered list of opaque components.
 *
 * Text form is slash-separated, e.g. "/producer/app/stream/seg_421". Generated
 * names never contain '/' inside a component, so no escaping is done. The
 * empty name "/" is allowed as a FIB prefix that matches everything.
 */
class Name
{
public:
  using Component = std::string;

  Name() = default;

  /// Parses the slash-separated text form. Empty components are skipped.
  explicit
  Name(std::string_view uri);

  Name(std::initializer_list<std::string_view> components);

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  bool
  empty() const noexcept
  {
    return m_components.empty();
  }

  const Component&
  operator[](std::size_t i) const
  {
    return m_components[i];
  }

  const Component&
  at(std::size_t i) const
  {
    return m_components.at(i);
  }

  auto
  begin() const noexcept
  {
    return m_components.begin();
  }

  auto
  end() const noexcept
  {
    return m_components.end();
  }

  Name&
  append(std::string_view component);

  /// The first @p n components.
  Name
  getPrefix(std::size_t n) const;

  /// Component-wise prefix test; a name is a prefix of itself.
  bool
  isPrefixOf(const Name& other) const noexcept;

  std::string
  toUri() const;

  friend bool
  operator==(const Name&, const Name&) = default;

  friend auto
  operator<=>(const Name&, const Name&) = default;

private:
  std::vector<Component> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace ndnmob

template<>
struct std::hash<ndnmob::Name>
{
  std::size_t
  operator()(const ndnmob::Name& name) const noexcept;
};

#endif // NDNMOB_NDN_NAME_HPP
