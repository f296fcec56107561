#include "ndnmob/mobility/handover-stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ndnmob {

HandoverClasses
classifyHandovers(const std::vector<HandoverRecord>& records)
{
  HandoverClasses c;
  std::optional<SimTime> last, lastIntra, lastInter;
  for (const auto& r : records) {
    if (last) {
      c.all.push_back(toSeconds(r.at - *last));
    }
    last = r.at;
    auto& prev = r.interAs ? lastInter : lastIntra;
    auto& series = r.interAs ? c.inter : c.intra;
    if (prev) {
      series.push_back(toSeconds(r.at - *prev));
    }
    prev = r.at;
    ++(r.interAs ? c.interCount : c.intraCount);
  }
  return c;
}

std::optional<double>
mean(const std::vector<double>& xs)
{
  if (xs.empty()) {
    return std::nullopt;
  }
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::optional<double>
quantile(std::vector<double> xs, double q)
{
  if (xs.empty()) {
    return std::nullopt;
  }
  std::sort(xs.begin(), xs.end());
  double h = (static_cast<double>(xs.size()) - 1) * std::clamp(q, 0.0, 1.0);
  auto lo = static_cast<std::size_t>(std::floor(h));
  auto hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (h - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

std::vector<CdfPoint>
empiricalCdf(std::vector<double> xs)
{
  std::sort(xs.begin(), xs.end());
  std::vector<CdfPoint> pts;
  double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts.push_back({xs[i], static_cast<double>(i + 1) / n});
  }
  return pts;
}

double
UniformFit::cdf(double x) const noexcept
{
  if (x <= a) {
    return 0;
  }
  if (x >= b) {
    return 1;
  }
  return (x - a) / (b - a);
}

double
ksDistance(std::vector<double> xs, const UniformFit& fit)
{
  std::sort(xs.begin(), xs.end());
  double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double u = fit.cdf(xs[i]);
    d = std::max({d, u - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - u});
  }
  return d;
}

UniformFit
fitUniformMoments(const std::vector<double>& xs)
{
  auto m = mean(xs);
  if (!m) {
    throw std::invalid_argument("cannot fit an empty sample");
  }
  double var = 0;
  for (double x : xs) {
    var += (x - *m) * (x - *m);
  }
  double half = std::sqrt(3 * var / static_cast<double>(xs.size()));
  return {*m - half, *m + half};
}

UniformFit
fitUniformMinimax(const std::vector<double>& sample)
{
  if (sample.size() < 2) {
    throw std::invalid_argument("minimax uniform fit needs at least 2 samples");
  }
  std::vector<double> xs = sample;
  std::sort(xs.begin(), xs.end());
  double range = xs.back() - xs.front();
  if (range <= 0) {
    return {xs.front() - 0.5, xs.front() + 0.5};
  }

  auto objective = [&] (double a, double b) {
    return b <= a ? 2.0 : ksDistance(xs, {a, b});
  };

  // coarse grid, then a compass search that halves its step on failure
  const int grid = 60;
  double aLo = xs.front() - 0.5 * range, aHi = xs.front() + 0.5 * range;
  double bLo = xs.back() - 0.8 * range, bHi = xs.back() + 0.5 * range;
  UniformFit best = fitUniformMoments(xs);
  double bestVal = objective(best.a, best.b);
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      double a = aLo + (aHi - aLo) * i / grid;
      double b = bLo + (bHi - bLo) * j / grid;
      double v = objective(a, b);
      if (v < bestVal) {
        bestVal = v;
        best = {a, b};
      }
    }
  }

  double step = range / grid;
  const double dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  while (step > 1e-9 * range) {
    bool moved = false;
    for (const auto& d : dirs) {
      double a = best.a + d[0] * step, b = best.b + d[1] * step;
      double v = objective(a, b);
      if (v < bestVal) {
        bestVal = v;
        best = {a, b};
        moved = true;
      }
    }
    if (!moved) {
      step /= 2;
    }
  }
  return best;
}

} // namespace ndnmob
