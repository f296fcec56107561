#ifndef NDNMOB_HARNESS_SUITE_HPP
#define NDNMOB_HARNESS_SUITE_HPP

#include "ndnmob/harness/scenario.hpp"

#include <functional>

namespace ndnmob {

/// Seed of replicate @p k under @p rootSeed. Every cell uses the same
/// replicate seeds, so cells can be compared pairwise.
std::uint64_t
suiteSeed(std::uint64_t rootSeed, int k);

/// SIM_WORKERS if set to a positive integer, else the hardware concurrency.
unsigned
defaultWorkerCount();

struct SuiteOptions
{
  std::uint64_t rootSeed = 1;
  int seeds = 5;
  std::vector<double> speeds{1, 5, 10, 20, 30};
  std::vector<ScenarioId> scenarios{ScenarioId::S1_MC, ScenarioId::S1_MP, ScenarioId::S2_MA,
                                    ScenarioId::S3_MC, ScenarioId::S3_MP, ScenarioId::S4_MA};
  std::vector<StrategyKind> strategies{StrategyKind::Flooding, StrategyKind::SemiFlooding,
                                       StrategyKind::SmartFlooding};
  std::vector<TrafficKind> traffics{TrafficKind::DsUncorrelated, TrafficKind::DsVideo, TrafficKind::DtPoisson};
  /// Adds the both-static baseline cells.
  bool includeStatic = true;
  /// Video runs are also scored against this longer deadline; 0 disables.
  int videoRescoreDeltaMs = 1000;
  /// Template for every run; scenario, strategy, traffic, speed and seed
  /// are overwritten.
  ScenarioConfig base;
  unsigned workers = 0;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Every run of the suite in a fixed order.
std::vector<ScenarioConfig>
suiteConfigs(const SuiteOptions& opts);

/// Metrics rows produced by one run: the run itself, plus the rescored
/// video row when enabled.
std::vector<RunMetrics>
runRows(const ScenarioConfig& cfg, int videoRescoreDeltaMs);

/// Runs @p configs on a worker pool. Output order follows @p configs
/// regardless of the number of workers.
std::vector<RunMetrics>
runAll(const std::vector<ScenarioConfig>& configs, unsigned workers, int videoRescoreDeltaMs,
       const std::function<void(std::size_t, std::size_t)>& progress = {});

struct SuiteResult
{
  std::vector<RunMetrics> runs;
  std::vector<CellSummary> cells;
  std::size_t simulations = 0;
  double wallSeconds = 0;
};

SuiteResult
runSuite(const SuiteOptions& opts);

} // namespace ndnmob

#endif // NDNMOB_HARNESS_SUITE_HPP
