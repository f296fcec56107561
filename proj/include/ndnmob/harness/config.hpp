#ifndef NDNMOB_HARNESS_CONFIG_HPP
#define NDNMOB_HARNESS_CONFIG_HPP

#include "ndnmob/app/segment.hpp"
#include "ndnmob/fw/forwarder.hpp"
#include "ndnmob/topo/topology.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ndnmob {

/// Which hosts move and which core layout is used.
enum class ScenarioId {
  /// Both hosts static, single-AS layout. Baseline for loss and overhead.
  Static,
  S1_MC,
  S1_MP,
  S2_MA,
  S3_MC,
  S3_MP,
  S4_MA,
};

std::string_view
toString(ScenarioId id) noexcept;

ScenarioId
parseScenarioId(std::string_view text);

Layout
layoutOf(ScenarioId id) noexcept;

bool
consumerMoves(ScenarioId id) noexcept;

bool
producerMoves(ScenarioId id) noexcept;

/// Raised for any malformed or inconsistent configuration.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig
{
  // [scenario]
  ScenarioId scenario = ScenarioId::S1_MC;
  StrategyKind strategy = StrategyKind::SmartFlooding;
  double speedMps = 30.0;
  double durationS = 120.0;
  double warmupS = 2.0;
  double drainS = 5.0;
  std::uint64_t seed = 1;
  /// When positive, the measured duration is stretched until the mobile
  /// hosts have made at least this many handovers inside it.
  int minHandovers = 0;
  /// Upper bound on the stretched duration.
  double maxDurationS = 3600.0;

  // [traffic]
  TrafficKind traffic = TrafficKind::DsUncorrelated;
  int deltaMs = 500;
  double rate = 50.0;
  /// 0 selects min(delta, 1 s).
  int dsLifetimeMs = 4000;
  int dtLifetimeMs = 1000;

  // [topology]
  int apCount = 7;
  double apSpacingM = 215.0;
  int aggFanIn = 3;
  std::int64_t wiredBps = 5'000'000;
  std::int64_t wiredDelayUs = 10'000;
  std::int64_t wirelessBps = 11'000'000;
  std::int64_t wirelessDelayUs = 1'000;
  int queueCapPackets = 50;
  int routerCs = 1000;
  int hostCs = 0;

  // [forwarding]
  PitTimeoutPolicy routerPitPolicy = PitTimeoutPolicy::Lifetime;
  PitTimeoutPolicy hostPitPolicy = PitTimeoutPolicy::Lifetime;
  int minPitTimeoutMs = 20;
  int deadNonceGraceMs = 1000;

  // [mobility]
  double regionRadiusM = 250.0;
  int persistMs = 100;
  int gapMs = 50;
  int tickMs = 10;

  // [output]
  bool segmentLog = false;
  bool packetTrace = false;
  bool handoverTrace = true;

  bool
  operator==(const ScenarioConfig&) const = default;

  /// Interest lifetime the consumer uses.
  Duration
  interestLifetime() const;

  TopologyParams
  topologyParams() const;

  /// Throws ConfigError naming the offending field.
  void
  validate() const;
};

/// Parses `key = value` lines grouped under `[section]` headers. Unknown
/// sections or keys are errors; missing keys keep their defaults.
ScenarioConfig
parseConfig(std::istream& is);

ScenarioConfig
loadConfig(const std::string& path);

/// Writes every field, so that parseConfig(serialize(c)) == c.
void
serializeConfig(std::ostream& os, const ScenarioConfig& cfg);

} // namespace ndnmob

#endif // NDNMOB_HARNESS_CONFIG_HPP
