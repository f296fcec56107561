#include "ndnmob/app/segment.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace ndnmob {

std::string_view
toString(TrafficKind kind) noexcept
{
  switch (kind) {
    case TrafficKind::DsUncorrelated:
      return "ds";
    case TrafficKind::DsVideo:
      return "video";
    case TrafficKind::DtPoisson:
      return "dt";
  }
  return "unknown";
}

TrafficKind
parseTrafficKind(std::string_view text)
{
  if (text == "ds") {
    return TrafficKind::DsUncorrelated;
  }
  if (text == "video") {
    return TrafficKind::DsVideo;
  }
  if (text == "dt") {
    return TrafficKind::DtPoisson;
  }
  throw std::invalid_argument("unknown traffic kind '" + std::string(text) + "'");
}

Name
segmentName(const Name& prefix, std::uint64_t seq)
{
  Name n = prefix;
  n.append("seg_" + std::to_string(seq));
  return n;
}

std::optional<std::uint64_t>
parseSegment(const Name& name)
{
  if (name.empty()) {
    return std::nullopt;
  }
  const std::string& last = name[name.size() - 1];
  constexpr std::string_view tag = "seg_";
  if (last.size() <= tag.size() || last.compare(0, tag.size(), tag) != 0) {
    return std::nullopt;
  }
  std::uint64_t seq = 0;
  const char* first = last.data() + tag.size();
  const char* end = last.data() + last.size();
  auto [ptr, ec] = std::from_chars(first, end, seq);
  if (ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  return seq;
}

} // namespace ndnmob
