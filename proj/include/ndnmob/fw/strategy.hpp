#ifndef NDNMOB_FW_STRATEGY_HPP
#define NDNMOB_FW_STRATEGY_HPP

#include "ndnmob/ndn/face.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace ndnmob {

enum class StrategyKind {
  Flooding,
  SmartFlooding,
  SemiFlooding,
};

/// Access = every node below the AS edge routers; Core = the edge routers.
enum class NodeZone {
  Access,
  Core,
};

/// Config spelling: flooding, smart, semi.
std::string_view
toString(StrategyKind kind) noexcept;

/// Throws std::invalid_argument on an unknown spelling.
StrategyKind
parseStrategyKind(std::string_view text);

std::string_view
toString(NodeZone zone) noexcept;

/**
 * Picks the faces an Interest is forwarded on.
 *
 * Flooding takes every GREEN or YELLOW candidate. Smart-flooding takes the one
 * GREEN candidate with the lowest (srtt, face id), or every YELLOW candidate
 * when nothing is GREEN. Semi-flooding floods in the access zone and behaves
 * like Smart-flooding in the core. @p inFace is never selected. The result is
 * sorted by face id.
 */
std::vector<FaceId>
selectOutFaces(StrategyKind kind, NodeZone zone, std::span<const Face* const> candidates,
               FaceId inFace = kInvalidFace);

/// Data came back through @p face.
void
onDataSuccess(Face& face) noexcept;

/// A PIT expiry or a Nack blamed @p face. RED faces stay RED.
void
onTimeoutOrNack(Face& face) noexcept;

/// Mobility turned the radio off: DISABLED and RED.
void
onLinkDown(Face& face) noexcept;

/// Mobility turned the radio back on: ENABLED and YELLOW.
void
onLinkUp(Face& face) noexcept;

} // namespace ndnmob

#endif // NDNMOB_FW_STRATEGY_HPP
