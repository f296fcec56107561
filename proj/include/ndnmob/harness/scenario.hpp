#ifndef NDNMOB_HARNESS_SCENARIO_HPP
#define NDNMOB_HARNESS_SCENARIO_HPP

#include "ndnmob/app/consumer.hpp"
#include "ndnmob/app/producer.hpp"
#include "ndnmob/harness/config.hpp"
#include "ndnmob/metrics/metrics.hpp"

#include <iosfwd>

namespace ndnmob {

/// Optional per-run logs; null streams are skipped.
struct RunArtifacts
{
  std::ostream* segmentLog = nullptr;
  std::ostream* packetTrace = nullptr;
  std::ostream* handoverTrace = nullptr;
};

struct RunResult
{
  RunMetrics metrics;
  /// Segments issued inside the measurement window.
  std::vector<SegmentRecord> window;
  std::vector<HostHandovers> handovers;
  ConsumerCounters consumer;
  ProducerCounters producer;
  LinkCounters links;
  std::uint64_t events = 0;
};

RunKey
runKeyOf(const ScenarioConfig& cfg);

/**
 * One complete simulation: builds the topology, starts mobility and the two
 * applications, runs warmup + duration + drain, and scores the segments
 * issued after warmup.
 */
RunResult
runScenario(const ScenarioConfig& cfg, const RunArtifacts& artifacts = {});

/// Scores the same trace against a different deadline. Delivery times are
/// unchanged; only the on-time test moves.
RunMetrics
rescoreDeadline(const RunResult& run, int deltaMs);

} // namespace ndnmob

#endif // NDNMOB_HARNESS_SCENARIO_HPP
