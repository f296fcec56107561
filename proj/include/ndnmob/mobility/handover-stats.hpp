#ifndef NDNMOB_MOBILITY_HANDOVER_STATS_HPP
#define NDNMOB_MOBILITY_HANDOVER_STATS_HPP

#include "ndnmob/mobility/handover.hpp"

#include <optional>
#include <vector>

namespace ndnmob {

/// Interarrival times in seconds. Each class series holds the gaps between
/// consecutive handovers of that class.
struct HandoverClasses
{
  std::size_t intraCount = 0;
  std::size_t interCount = 0;
  std::vector<double> all;
  std::vector<double> intra;
  std::vector<double> inter;

  double
  interFraction() const noexcept
  {
    auto n = intraCount + interCount;
    return n == 0 ? 0.0 : static_cast<double>(interCount) / static_cast<double>(n);
  }
};

/// Records must be in time order.
HandoverClasses
classifyHandovers(const std::vector<HandoverRecord>& records);

std::optional<double>
mean(const std::vector<double>& xs);

/// Linear-interpolated quantile (the common "type 7" definition), q in [0, 1].
std::optional<double>
quantile(std::vector<double> xs, double q);

struct CdfPoint
{
  double x;
  double cdf;
};

/// Empirical CDF at each sorted sample: F(x_i) = i / n.
std::vector<CdfPoint>
empiricalCdf(std::vector<double> xs);

/// Uniform distribution on [a, b].
struct UniformFit
{
  double a = 0;
  double b = 1;

  double
  cdf(double x) const noexcept;
};

/// Kolmogorov-Smirnov distance between the sample and @p fit.
double
ksDistance(std::vector<double> xs, const UniformFit& fit);

/// Uniform with the sample's mean and variance.
UniformFit
fitUniformMoments(const std::vector<double>& xs);

/**
 * Uniform whose CDF is closest to the empirical CDF in the sup norm, i.e. the
 * minimum Kolmogorov-Smirnov distance estimate. The clipped objective is not
 * convex in (a, b), so a coarse grid picks the basin and a compass search
 * refines it.
 */
UniformFit
fitUniformMinimax(const std::vector<double>& xs);

} // namespace ndnmob

#endif // NDNMOB_MOBILITY_HANDOVER_STATS_HPP
