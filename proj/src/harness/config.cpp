#include "ndnmob/harness/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace ndnmob {

namespace {

struct ScenarioName
{
  ScenarioId id;
  std::string_view name;
};

constexpr std::array kScenarioNames{
  ScenarioName{ScenarioId::Static, "STATIC"}, ScenarioName{ScenarioId::S1_MC, "S1_MC"},
  ScenarioName{ScenarioId::S1_MP, "S1_MP"},   ScenarioName{ScenarioId::S2_MA, "S2_MA"},
  ScenarioName{ScenarioId::S3_MC, "S3_MC"},   ScenarioName{ScenarioId::S3_MP, "S3_MP"},
  ScenarioName{ScenarioId::S4_MA, "S4_MA"},
};

} // namespace

std::string_view
toString(ScenarioId id) noexcept
{
  for (const auto& s : kScenarioNames) {
    if (s.id == id) {
      return s.name;
    }
  }
  return "unknown";
}

ScenarioId
parseScenarioId(std::string_view text)
{
  for (const auto& s : kScenarioNames) {
    if (s.name == text) {
      return s.id;
    }
  }
  throw std::invalid_argument("unknown scenario '" + std::string(text) + "'");
}

Layout
layoutOf(ScenarioId id) noexcept
{
  switch (id) {
    case ScenarioId::S3_MC:
    case ScenarioId::S3_MP:
    case ScenarioId::S4_MA:
      return Layout::TwoAs;
    default:
      return Layout::SingleAs;
  }
}

bool
consumerMoves(ScenarioId id) noexcept
{
  return id == ScenarioId::S1_MC || id == ScenarioId::S2_MA || id == ScenarioId::S3_MC || id == ScenarioId::S4_MA;
}

bool
producerMoves(ScenarioId id) noexcept
{
  return id == ScenarioId::S1_MP || id == ScenarioId::S2_MA || id == ScenarioId::S3_MP || id == ScenarioId::S4_MA;
}

Duration
ScenarioConfig::interestLifetime() const
{
  if (!isDelaySensitive(traffic)) {
    return std::chrono::milliseconds(dtLifetimeMs);
  }
  if (dsLifetimeMs > 0) {
    return std::chrono::milliseconds(dsLifetimeMs);
  }
  return std::chrono::milliseconds(std::min(deltaMs, 1000));
}

TopologyParams
ScenarioConfig::topologyParams() const
{
  TopologyParams p;
  p.layout = layoutOf(scenario);
  p.apCount = apCount;
  p.apSpacing = apSpacingM;
  p.aggFanIn = aggFanIn;
  p.wired = LinkParams{wiredBps, Duration{wiredDelayUs}, static_cast<std::size_t>(queueCapPackets)};
  p.wireless = LinkParams{wirelessBps, Duration{wirelessDelayUs}, static_cast<std::size_t>(queueCapPackets)};
  p.consumerMobile = consumerMoves(scenario);
  p.producerMobile = producerMoves(scenario);
  p.strategy = strategy;
  p.routerCsCapacity = static_cast<std::size_t>(routerCs);
  p.hostCsCapacity = static_cast<std::size_t>(hostCs);
  p.routerPitPolicy = routerPitPolicy;
  p.hostPitPolicy = hostPitPolicy;
  p.minPitTimeout = std::chrono::milliseconds(minPitTimeoutMs);
  p.deadNonceGrace = std::chrono::milliseconds(deadNonceGraceMs);
  return p;
}

void
ScenarioConfig::validate() const
{
  auto require = [] (bool ok, const char* field, const char* what) {
    if (!ok) {
      throw ConfigError(std::string(field) + ": " + what);
    }
  };
  require(speedMps >= 0.0, "scenario.speed_mps", "must be non-negative");
  require(scenario == ScenarioId::Static || speedMps > 0.0, "scenario.speed_mps",
          "mobile scenarios need a positive speed");
  require(durationS > 0.0, "scenario.duration_s", "must be positive");
  require(minHandovers >= 0, "scenario.min_handovers", "must be non-negative");
  require(maxDurationS >= durationS, "scenario.max_duration_s", "must be at least duration_s");
  require(warmupS >= 0.0, "scenario.warmup_s", "must be non-negative");
  require(drainS >= 0.0, "scenario.drain_s", "must be non-negative");
  require(deltaMs > 0, "traffic.delta_ms", "must be positive");
  require(rate > 0.0, "traffic.rate", "must be positive");
  require(dsLifetimeMs >= 0, "traffic.ds_lifetime_ms", "must be non-negative");
  require(dtLifetimeMs > 0, "traffic.dt_lifetime_ms", "must be positive");
  require(apCount >= 1 && apCount <= 7, "topology.ap_count", "must be in 1..7");
  require(apSpacingM > 0.0, "topology.ap_spacing_m", "must be positive");
  require(aggFanIn >= 1, "topology.agg_fan_in", "must be at least 1");
  require(wiredBps > 0, "topology.wired_bps", "must be positive");
  require(wirelessBps > 0, "topology.wireless_bps", "must be positive");
  require(wiredDelayUs >= 0, "topology.wired_delay_us", "must be non-negative");
  require(wirelessDelayUs >= 0, "topology.wireless_delay_us", "must be non-negative");
  require(queueCapPackets >= 1, "topology.queue_cap", "must be at least 1");
  require(routerCs >= 0, "topology.router_cs", "must be non-negative");
  require(hostCs >= 0, "topology.host_cs", "must be non-negative");
  require(minPitTimeoutMs >= 0, "forwarding.min_pit_timeout_ms", "must be non-negative");
  require(deadNonceGraceMs >= 0, "forwarding.dead_nonce_grace_ms", "must be non-negative");
  require(regionRadiusM > 0.0, "mobility.region_radius_m", "must be positive");
  require(persistMs >= 0, "mobility.persist_ms", "must be non-negative");
  require(gapMs >= 0, "mobility.gap_ms", "must be non-negative");
  require(tickMs > 0, "mobility.tick_ms", "must be positive");
  if (layoutOf(scenario) == Layout::TwoAs) {
    require(apCount >= 2, "topology.ap_count", "two-AS scenarios need at least 2 APs");
  }
}

namespace {

std::string
formatDouble(double v)
{
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

template<typename T>
T
parseNumber(const std::string& text, const std::string& field)
{
  T v{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError(field + ": cannot parse '" + text + "' as a number");
  }
  return v;
}

bool
parseBool(const std::string& text, const std::string& field)
{
  if (text == "true" || text == "1" || text == "yes") {
    return true;
  }
  if (text == "false" || text == "0" || text == "no") {
    return false;
  }
  throw ConfigError(field + ": expected true or false, got '" + text + "'");
}

template<typename F>
auto
parseEnum(F&& parse, const std::string& text, const std::string& field)
{
  try {
    return parse(text);
  }
  catch (const std::invalid_argument& e) {
    throw ConfigError(field + ": " + e.what());
  }
}

struct Field
{
  const char* section;
  const char* key;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, const std::string&, const std::string&)> set;
};

template<typename T>
Field
numberField(const char* section, const char* key, T ScenarioConfig::*member)
{
  return Field{section, key,
               [member] (const ScenarioConfig& c) {
                 if constexpr (std::is_floating_point_v<T>) {
                   return formatDouble(c.*member);
                 }
                 else {
                   return std::to_string(c.*member);
                 }
               },
               [member] (ScenarioConfig& c, const std::string& v, const std::string& f) {
                 c.*member = parseNumber<T>(v, f);
               }};
}

Field
boolField(const char* section, const char* key, bool ScenarioConfig::*member)
{
  return Field{section, key, [member] (const ScenarioConfig& c) { return std::string(c.*member ? "true" : "false"); },
               [member] (ScenarioConfig& c, const std::string& v, const std::string& f) {
                 c.*member = parseBool(v, f);
               }};
}

template<typename E, typename P>
Field
enumField(const char* section, const char* key, E ScenarioConfig::*member, P parse)
{
  return Field{section, key, [member] (const ScenarioConfig& c) { return std::string(toString(c.*member)); },
               [member, parse] (ScenarioConfig& c, const std::string& v, const std::string& f) {
                 c.*member = parseEnum(parse, v, f);
               }};
}

const std::vector<Field>&
fields()
{
  static const std::vector<Field> table{
    enumField("scenario", "name", &ScenarioConfig::scenario, [] (const std::string& s) { return parseScenarioId(s); }),
    enumField("scenario", "strategy", &ScenarioConfig::strategy,
              [] (const std::string& s) { return parseStrategyKind(s); }),
    numberField("scenario", "speed_mps", &ScenarioConfig::speedMps),
    numberField("scenario", "duration_s", &ScenarioConfig::durationS),
    numberField("scenario", "warmup_s", &ScenarioConfig::warmupS),
    numberField("scenario", "drain_s", &ScenarioConfig::drainS),
    numberField("scenario", "seed", &ScenarioConfig::seed),
    numberField("scenario", "min_handovers", &ScenarioConfig::minHandovers),
    numberField("scenario", "max_duration_s", &ScenarioConfig::maxDurationS),

    enumField("traffic", "kind", &ScenarioConfig::traffic, [] (const std::string& s) { return parseTrafficKind(s); }),
    numberField("traffic", "delta_ms", &ScenarioConfig::deltaMs),
    numberField("traffic", "rate", &ScenarioConfig::rate),
    numberField("traffic", "ds_lifetime_ms", &ScenarioConfig::dsLifetimeMs),
    numberField("traffic", "dt_lifetime_ms", &ScenarioConfig::dtLifetimeMs),

    numberField("topology", "ap_count", &ScenarioConfig::apCount),
    numberField("topology", "ap_spacing_m", &ScenarioConfig::apSpacingM),
    numberField("topology", "agg_fan_in", &ScenarioConfig::aggFanIn),
    numberField("topology", "wired_bps", &ScenarioConfig::wiredBps),
    numberField("topology", "wired_delay_us", &ScenarioConfig::wiredDelayUs),
    numberField("topology", "wireless_bps", &ScenarioConfig::wirelessBps),
    numberField("topology", "wireless_delay_us", &ScenarioConfig::wirelessDelayUs),
    numberField("topology", "queue_cap", &ScenarioConfig::queueCapPackets),
    numberField("topology", "router_cs", &ScenarioConfig::routerCs),
    numberField("topology", "host_cs", &ScenarioConfig::hostCs),

    enumField("forwarding", "router_pit_policy", &ScenarioConfig::routerPitPolicy,
              [] (const std::string& s) { return parsePitTimeoutPolicy(s); }),
    enumField("forwarding", "host_pit_policy", &ScenarioConfig::hostPitPolicy,
              [] (const std::string& s) { return parsePitTimeoutPolicy(s); }),
    numberField("forwarding", "min_pit_timeout_ms", &ScenarioConfig::minPitTimeoutMs),
    numberField("forwarding", "dead_nonce_grace_ms", &ScenarioConfig::deadNonceGraceMs),

    numberField("mobility", "region_radius_m", &ScenarioConfig::regionRadiusM),
    numberField("mobility", "persist_ms", &ScenarioConfig::persistMs),
    numberField("mobility", "gap_ms", &ScenarioConfig::gapMs),
    numberField("mobility", "tick_ms", &ScenarioConfig::tickMs),

    boolField("output", "segment_log", &ScenarioConfig::segmentLog),
    boolField("output", "packet_trace", &ScenarioConfig::packetTrace),
    boolField("output", "handover_trace", &ScenarioConfig::handoverTrace),
  };
  return table;
}

} // namespace

ScenarioConfig
parseConfig(std::istream& is)
{
  namespace pt = boost::property_tree;
  // trailing "; note" or "# note" after a value is a comment
  std::stringstream cleaned;
  for (std::string line; std::getline(is, line);) {
    for (std::size_t i = 1; i < line.size(); ++i) {
      if ((line[i] == ';' || line[i] == '#') && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line.erase(i);
        break;
      }
    }
    cleaned << line << '\n';
  }

  pt::ptree tree;
  try {
    pt::read_ini(cleaned, tree);
  }
  catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  ScenarioConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      throw ConfigError(section + ": key outside of any [section]");
    }
    bool knownSection = false;
    for (const Field& f : fields()) {
      knownSection = knownSection || section == f.section;
    }
    if (!knownSection) {
      throw ConfigError("[" + section + "]: unknown section");
    }
    for (const auto& [key, value] : body) {
      std::string field = section + "." + key;
      auto it = std::find_if(fields().begin(), fields().end(),
                             [&] (const Field& f) { return section == f.section && key == f.key; });
      if (it == fields().end()) {
        throw ConfigError(field + ": unknown key");
      }
      it->set(cfg, value.data(), field);
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig
loadConfig(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open");
  }
  return parseConfig(in);
}

void
serializeConfig(std::ostream& os, const ScenarioConfig& cfg)
{
  std::string current;
  for (const Field& f : fields()) {
    if (current != f.section) {
      if (!current.empty()) {
        os << '\n';
      }
      current = f.section;
      os << '[' << current << "]\n";
    }
    os << f.key << " = " << f.get(cfg) << '\n';
  }
}

} // namespace ndnmob
