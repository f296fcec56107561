#include "ndnmob/mobility/waypoint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ndnmob {

Vec2
uniformInDisk(RngStream& rng, Vec2 center, double radius)
{
  double r = radius * std::sqrt(rng.uniform01());
  double theta = 2 * std::numbers::pi * rng.uniform01();
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

RandomWaypoint::RandomWaypoint(RngStream& rng, Vec2 center, double radius, double speedMps)
  : RandomWaypoint(rng, center, radius, speedMps, uniformInDisk(rng, center, radius))
{
}

RandomWaypoint::RandomWaypoint(RngStream& rng, Vec2 center, double radius, double speedMps,
                               Vec2 start)
  : m_rng(&rng)
  , m_center(center)
  , m_radius(radius)
  , m_speed(speedMps)
  , m_pos(start)
  , m_waypoint(start)
{
  if (!(radius > 0) || speedMps < 0) {
    throw std::invalid_argument("waypoint model needs radius > 0 and speed >= 0");
  }
  if (m_speed > 0) {
    drawWaypoint();
  }
}

void
RandomWaypoint::drawWaypoint()
{
  m_waypoint = uniformInDisk(*m_rng, m_center, m_radius);
  ++m_drawn;
}

void
RandomWaypoint::step(double dtSeconds)
{
  if (m_speed <= 0) {
    return;
  }
  double travel = m_speed * dtSeconds;
  double left = distance(m_pos, m_waypoint);
  while (travel >= left) {
    travel -= left;
    m_pos = m_waypoint;
    drawWaypoint();
    left = distance(m_pos, m_waypoint);
  }
  m_pos = m_pos + (travel / left) * (m_waypoint - m_pos);
}

} // namespace ndnmob
