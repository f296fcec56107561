#ifndef NDNMOB_METRICS_METRICS_HPP
#define NDNMOB_METRICS_METRICS_HPP

#include "ndnmob/app/segment.hpp"
#include "ndnmob/fw/strategy.hpp"
#include "ndnmob/mobility/handover-stats.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ndnmob {

/// Identifies one simulation run. Everything except the seed names its cell.
struct RunKey
{
  std::string scenario;
  StrategyKind strategy = StrategyKind::SmartFlooding;
  TrafficKind traffic = TrafficKind::DsUncorrelated;
  /// Deadline in ms; 0 for delay-tolerant traffic.
  int deltaMs = 500;
  double speedMps = 0.0;
  std::uint64_t seed = 0;

  bool
  sameCell(const RunKey& o) const noexcept
  {
    return scenario == o.scenario && strategy == o.strategy && traffic == o.traffic &&
           deltaMs == o.deltaMs && speedMps == o.speedMps;
  }
};

struct DeliveryCounts
{
  std::uint64_t issued = 0;
  std::uint64_t delivered = 0;
  std::uint64_t onTime = 0;
  /// Packets that count toward goodput: on time, and for video also part of
  /// a decodable frame. Equals delivered for delay-tolerant traffic.
  std::uint64_t useful = 0;
  std::uint64_t abandoned = 0;
};

struct RunMetrics
{
  RunKey key;
  std::optional<double> goodputPct;
  std::optional<double> throughputPct;
  std::optional<double> overhead;
  std::optional<double> handoverMeanS;
  std::optional<double> interAsFrac;

  DeliveryCounts counts;
  std::uint64_t interestTx = 0;
  std::uint64_t handovers = 0;
};

/**
 * Tallies the segments of one run. @p deadlineOverride re-judges every
 * delay-sensitive segment against issue time + override instead of the
 * deadline it was issued with, which lets one trace be scored at several
 * deadlines.
 */
DeliveryCounts
countDeliveries(std::span<const SegmentRecord> records, TrafficKind kind,
                std::optional<Duration> deadlineOverride = std::nullopt);

/// Records issued in [begin, end).
std::vector<SegmentRecord>
selectIssued(std::span<const SegmentRecord> records, SimTime begin, SimTime end);

/// Fills goodput, throughput and overhead from the counts. Goodput is
/// absent for delay-tolerant traffic; overhead is absent without deliveries.
void
fillDeliveryMetrics(RunMetrics& m, const DeliveryCounts& c, TrafficKind kind, std::uint64_t interestTx);

/// Mean handover interarrival across hosts (each host's gaps counted
/// separately) and inter-AS share of all handovers.
void
fillHandoverMetrics(RunMetrics& m, const std::vector<std::vector<HandoverRecord>>& perHost);

struct Summary
{
  std::optional<double> mean;
  std::optional<double> stderr_;
  std::size_t n = 0;
};

/// Mean and sample standard error over the present values.
Summary
summarize(const std::vector<std::optional<double>>& values);

struct CellSummary
{
  RunKey key; // seed is 0
  std::size_t seeds = 0;
  Summary goodputPct;
  Summary throughputPct;
  Summary overhead;
  Summary handoverMeanS;
  Summary interAsFrac;
};

/// All runs must belong to the same cell; throws std::invalid_argument
/// otherwise or when @p runs is empty.
CellSummary
aggregateCell(const std::vector<RunMetrics>& runs);

/// Groups runs by cell, keeping first-appearance order.
std::vector<CellSummary>
aggregate(const std::vector<RunMetrics>& runs);

/// Fixed-point rendering used by every CSV writer; "NA" when absent.
std::string
formatNumber(std::optional<double> v, int decimals = 6);

void
writeRunCsv(std::ostream& os, const std::vector<RunMetrics>& runs);

void
writeAggregateCsv(std::ostream& os, const std::vector<CellSummary>& cells);

void
writeSegmentLog(std::ostream& os, std::span<const SegmentRecord> records, TrafficKind kind);

struct HostHandovers
{
  std::string host;
  std::vector<HandoverRecord> records;
};

/// Merged trace of all hosts in time order.
void
writeHandoverTrace(std::ostream& os, const std::vector<HostHandovers>& hosts);

struct SpeedCdf
{
  double speedMps;
  std::vector<CdfPoint> points;
};

void
writeCdfCsv(std::ostream& os, const std::vector<SpeedCdf>& cdfs);

} // namespace ndnmob

#endif // NDNMOB_METRICS_METRICS_HPP
