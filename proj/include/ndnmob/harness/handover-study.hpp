#ifndef NDNMOB_HARNESS_HANDOVER_STUDY_HPP
#define NDNMOB_HARNESS_HANDOVER_STUDY_HPP

#include "ndnmob/mobility/handover-stats.hpp"
#include "ndnmob/topo/topology.hpp"

#include <vector>

namespace ndnmob {

/// Mobility-only runs: one roaming host, no packets.
struct HandoverStudyParams
{
  std::vector<double> speeds{1, 5, 10, 20, 30};
  int seeds = 5;
  double durationS = 600.0;
  std::uint64_t rootSeed = 1;
  int apCount = 7;
  double apSpacingM = 215.0;
  double regionRadiusM = 250.0;
  HandoverParams handover;
};

/// Handover records of one host roaming the access field for @p durationS.
/// The field is split into two ASs at the median x coordinate when
/// @p layout is TwoAs; with SingleAs every handover is intra-AS. Uses the
/// same random stream as the consumer of a full run with the same seed.
std::vector<HandoverRecord>
simulateHandovers(const HandoverStudyParams& p, double speedMps, std::uint64_t seed, Layout layout);

struct SpeedHandovers
{
  double speedMps = 0;
  /// Every handover interarrival; the single-AS distribution.
  std::vector<double> all;
  /// Same-class interarrivals under the two-AS split.
  std::vector<double> intra;
  std::vector<double> inter;
  std::size_t intraCount = 0;
  std::size_t interCount = 0;

  double
  interFraction() const noexcept
  {
    auto n = intraCount + interCount;
    return n == 0 ? 0.0 : static_cast<double>(interCount) / static_cast<double>(n);
  }
};

/// Pools all seeds of one speed; seeds are suiteSeed(rootSeed, k).
SpeedHandovers
studySpeed(const HandoverStudyParams& p, double speedMps);

std::vector<SpeedHandovers>
studyAllSpeeds(const HandoverStudyParams& p);

} // namespace ndnmob

#endif // NDNMOB_HARNESS_HANDOVER_STUDY_HPP
