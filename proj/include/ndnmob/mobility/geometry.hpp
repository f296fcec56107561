#ifndef NDNMOB_MOBILITY_GEOMETRY_HPP
#define NDNMOB_MOBILITY_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace ndnmob {

struct Vec2
{
  double x = 0;
  double y = 0;

  friend Vec2
  operator+(Vec2 a, Vec2 b) noexcept
  {
    return {a.x + b.x, a.y + b.y};
  }

  friend Vec2
  operator-(Vec2 a, Vec2 b) noexcept
  {
    return {a.x - b.x, a.y - b.y};
  }

  friend Vec2
  operator*(double k, Vec2 v) noexcept
  {
    return {k * v.x, k * v.y};
  }

  friend bool
  operator==(Vec2, Vec2) = default;
};

inline double
norm(Vec2 v) noexcept
{
  return std::hypot(v.x, v.y);
}

inline double
distance(Vec2 a, Vec2 b) noexcept
{
  return norm(a - b);
}

/// Cell sites of a hexagonal layout: the centre first, then the ring at
/// @p spacing going counter-clockwise from the +x axis. At most 7 sites.
std::vector<Vec2>
hexLayout(int count, double spacing);

/// Splits sites at the median x coordinate: 0 for x <= median, 1 otherwise.
std::vector<int>
medianSplitByX(const std::vector<Vec2>& sites);

/// Received-signal proxy: higher is better, strictly decreasing in distance.
inline double
signalQuality(Vec2 host, Vec2 ap) noexcept
{
  return -distance(host, ap);
}

/// Index of the site with the best signal; ties go to the lower index.
int
bestAccessPoint(Vec2 host, const std::vector<Vec2>& aps);

} // namespace ndnmob

#endif // NDNMOB_MOBILITY_GEOMETRY_HPP
