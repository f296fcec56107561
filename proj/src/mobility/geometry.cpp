#include "ndnmob/mobility/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace ndnmob {

std::vector<Vec2>
hexLayout(int count, double spacing)
{
  if (count < 1 || count > 7) {
    throw std::invalid_argument("hex layout supports 1 to 7 access points");
  }
  if (!(spacing > 0)) {
    throw std::invalid_argument("access point spacing must be positive");
  }
  std::vector<Vec2> sites{{0, 0}};
  for (int k = 0; k + 1 < count; ++k) {
    double a = k * std::numbers::pi / 3;
    sites.push_back({spacing * std::cos(a), spacing * std::sin(a)});
  }
  return sites;
}

std::vector<int>
medianSplitByX(const std::vector<Vec2>& sites)
{
  std::vector<double> xs;
  for (auto s : sites) {
    xs.push_back(s.x);
  }
  std::sort(xs.begin(), xs.end());
  double median = xs.empty() ? 0 : xs[(xs.size() - 1) / 2];
  std::vector<int> side;
  for (auto s : sites) {
    // tolerate rounding in the trigonometric coordinates
    side.push_back(s.x <= median + 1e-9 ? 0 : 1);
  }
  return side;
}

int
bestAccessPoint(Vec2 host, const std::vector<Vec2>& aps)
{
  int best = -1;
  double bestQ = 0;
  for (int i = 0; i < static_cast<int>(aps.size()); ++i) {
    double q = signalQuality(host, aps[i]);
    if (best < 0 || q > bestQ) {
      best = i;
      bestQ = q;
    }
  }
  return best;
}

} // namespace ndnmob
