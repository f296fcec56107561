#include "ndnmob/fw/strategy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ndnmob {

std::string_view
toString(StrategyKind kind) noexcept
{
  switch (kind) {
    case StrategyKind::Flooding:
      return "flooding";
    case StrategyKind::SmartFlooding:
      return "smart";
    case StrategyKind::SemiFlooding:
      return "semi";
  }
  return "unknown";
}

StrategyKind
parseStrategyKind(std::string_view text)
{
  if (text == "flooding") {
    return StrategyKind::Flooding;
  }
  if (text == "smart") {
    return StrategyKind::SmartFlooding;
  }
  if (text == "semi") {
    return StrategyKind::SemiFlooding;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

std::string_view
toString(NodeZone zone) noexcept
{
  return zone == NodeZone::Access ? "access" : "core";
}

namespace {

bool
isUsable(const Face& f, FaceId inFace)
{
  return f.id != inFace && f.isEnabled() && f.color != FaceColor::Red;
}

std::vector<FaceId>
flood(std::span<const Face* const> candidates, FaceId inFace)
{
  std::vector<FaceId> out;
  for (const Face* f : candidates) {
    if (isUsable(*f, inFace)) {
      out.push_back(f->id);
    }
  }
  return out;
}

std::vector<FaceId>
smart(std::span<const Face* const> candidates, FaceId inFace)
{
  const Face* best = nullptr;
  for (const Face* f : candidates) {
    if (!isUsable(*f, inFace) || f->color != FaceColor::Green) {
      continue;
    }
    if (best == nullptr || f->rtt.srtt() < best->rtt.srtt() ||
        (f->rtt.srtt() == best->rtt.srtt() && f->id < best->id)) {
      best = f;
    }
  }
  if (best != nullptr) {
    return {best->id};
  }

  std::vector<FaceId> out;
  for (const Face* f : candidates) {
    if (isUsable(*f, inFace) && f->color == FaceColor::Yellow) {
      out.push_back(f->id);
    }
  }
  return out;
}

} // namespace

std::vector<FaceId>
selectOutFaces(StrategyKind kind, NodeZone zone, std::span<const Face* const> candidates,
               FaceId inFace)
{
  std::vector<FaceId> out;
  switch (kind) {
    case StrategyKind::Flooding:
      out = flood(candidates, inFace);
      break;
    case StrategyKind::SmartFlooding:
      out = smart(candidates, inFace);
      break;
    case StrategyKind::SemiFlooding:
      out = zone == NodeZone::Access ? flood(candidates, inFace) : smart(candidates, inFace);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void
onDataSuccess(Face& face) noexcept
{
  if (face.isEnabled()) {
    face.color = FaceColor::Green;
  }
}

void
onTimeoutOrNack(Face& face) noexcept
{
  if (face.color == FaceColor::Green) {
    face.color = FaceColor::Yellow;
  }
}

void
onLinkDown(Face& face) noexcept
{
  face.status = FaceStatus::Disabled;
  face.color = FaceColor::Red;
}

void
onLinkUp(Face& face) noexcept
{
  face.status = FaceStatus::Enabled;
  face.color = FaceColor::Yellow;
}

} // namespace ndnmob
