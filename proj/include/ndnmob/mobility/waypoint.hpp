#ifndef NDNMOB_MOBILITY_WAYPOINT_HPP
#define NDNMOB_MOBILITY_WAYPOINT_HPP

#include "ndnmob/mobility/geometry.hpp"
#include "ndnmob/sim/random.hpp"

#include <cstdint>

namespace ndnmob {

/// Uniform point in the disk of @p radius around @p center.
Vec2
uniformInDisk(RngStream& rng, Vec2 center, double radius);

/**
 * Random waypoint walk inside a disk with zero pause time.
 *
 * The host moves in a straight line at constant speed; on reaching a waypoint
 * it draws the next one and keeps moving in the same step, so no time is
 * spent standing still. A speed of zero keeps the host at its start point.
 */
class RandomWaypoint
{
public:
  RandomWaypoint(RngStream& rng, Vec2 center, double radius, double speedMps);

  /// Starts at @p start instead of a random point (no waypoint drawn yet
  /// for a static host).
  RandomWaypoint(RngStream& rng, Vec2 center, double radius, double speedMps, Vec2 start);

  void
  step(double dtSeconds);

  Vec2
  position() const noexcept
  {
    return m_pos;
  }

  Vec2
  waypoint() const noexcept
  {
    return m_waypoint;
  }

  double
  speed() const noexcept
  {
    return m_speed;
  }

  Vec2
  center() const noexcept
  {
    return m_center;
  }

  double
  radius() const noexcept
  {
    return m_radius;
  }

  std::uint64_t
  waypointsDrawn() const noexcept
  {
    return m_drawn;
  }

private:
  void
  drawWaypoint();

private:
  RngStream* m_rng;
  Vec2 m_center;
  double m_radius;
  double m_speed;
  Vec2 m_pos;
  Vec2 m_waypoint;
  std::uint64_t m_drawn = 0;
};

} // namespace ndnmob

#endif // NDNMOB_MOBILITY_WAYPOINT_HPP
