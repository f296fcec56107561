#include "ndnmob/harness/config.hpp"
#include "ndnmob/harness/handover-study.hpp"
#include "ndnmob/harness/properties.hpp"
#include "ndnmob/harness/scenario.hpp"
#include "ndnmob/harness/suite.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

using namespace ndnmob;

namespace {

ScenarioConfig
shortRun(ScenarioId id, StrategyKind s, TrafficKind t, std::uint64_t seed = 3)
{
  ScenarioConfig c;
  c.scenario = id;
  c.strategy = s;
  c.traffic = t;
  c.speedMps = 30;
  c.durationS = 8;
  c.warmupS = 1;
  c.drainS = 2;
  c.seed = seed;
  return c;
}

std::string
csvOf(const std::vector<RunMetrics>& rows)
{
  std::ostringstream os;
  writeRunCsv(os, rows);
  return os.str();
}

} // namespace

TEST_CASE("config defaults survive a serialize and parse round trip")
{
  ScenarioConfig c;
  std::stringstream ss;
  serializeConfig(ss, c);
  CHECK(parseConfig(ss) == c);
}

TEST_CASE("edited config round-trips field for field")
{
  ScenarioConfig c;
  c.scenario = ScenarioId::S3_MP;
  c.strategy = StrategyKind::SemiFlooding;
  c.traffic = TrafficKind::DsVideo;
  c.deltaMs = 1000;
  c.speedMps = 7.25;
  c.seed = 123456789012345ULL;
  c.hostPitPolicy = PitTimeoutPolicy::Adaptive;
  c.packetTrace = true;
  c.apSpacingM = 0.1;
  std::stringstream ss;
  serializeConfig(ss, c);
  CHECK(parseConfig(ss) == c);
}

TEST_CASE("config errors name the offending key")
{
  auto errorOf = [] (const std::string& text) {
    std::istringstream is(text);
    try {
      parseConfig(is);
    }
    catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(errorOf("[scenario]\nname = S9\n").find("scenario.name") != std::string::npos);
  CHECK(errorOf("[scenario]\nspeed_mps = -1\n").find("scenario.speed_mps") != std::string::npos);
  CHECK(errorOf("[traffic]\nwidth = 3\n").find("traffic.width") != std::string::npos);
  CHECK(errorOf("[bogus]\nx = 1\n").find("bogus") != std::string::npos);
  CHECK(errorOf("[traffic]\nrate = fast\n").find("traffic.rate") != std::string::npos);
  CHECK(errorOf("[scenario\n") != "no error");
}

TEST_CASE("minimal config fills in defaults")
{
  std::istringstream is("[scenario]\nname = S2_MA\nstrategy = flooding\n");
  ScenarioConfig c = parseConfig(is);
  CHECK(c.scenario == ScenarioId::S2_MA);
  CHECK(c.strategy == StrategyKind::Flooding);
  CHECK(c.deltaMs == 500);
  CHECK(c.durationS == 120.0);
}

TEST_CASE("a static run delivers every segment on time")
{
  auto c = shortRun(ScenarioId::Static, StrategyKind::SmartFlooding, TrafficKind::DsUncorrelated);
  RunResult r = runScenario(c);
  REQUIRE(r.metrics.goodputPct.has_value());
  CHECK(*r.metrics.goodputPct == doctest::Approx(100.0));
  CHECK(r.metrics.counts.issued == 400);
  CHECK(r.metrics.counts.abandoned == 0);
  CHECK(r.metrics.handovers == 0);
  CHECK(r.metrics.key.speedMps == 0.0);
}

TEST_CASE("runs are reproducible from the seed alone")
{
  auto c = shortRun(ScenarioId::S2_MA, StrategyKind::SmartFlooding, TrafficKind::DsVideo);
  auto a = runRows(c, 1000);
  auto b = runRows(c, 1000);
  CHECK(csvOf(a) == csvOf(b));
  c.seed = 4;
  CHECK(csvOf(runRows(c, 1000)) != csvOf(a));
}

TEST_CASE("video rows come with a rescored row at the longer deadline")
{
  auto c = shortRun(ScenarioId::S1_MP, StrategyKind::SmartFlooding, TrafficKind::DsVideo);
  auto rows = runRows(c, 1000);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].key.deltaMs == 500);
  CHECK(rows[1].key.deltaMs == 1000);
  CHECK(*rows[1].goodputPct >= *rows[0].goodputPct);
  CHECK(rows[1].interestTx == rows[0].interestTx);
  CHECK(rows[1].counts.delivered == rows[0].counts.delivered);
}

TEST_CASE("artifacts are written when requested")
{
  auto c = shortRun(ScenarioId::S1_MC, StrategyKind::Flooding, TrafficKind::DsUncorrelated);
  std::ostringstream seg, pkt, ho;
  runScenario(c, RunArtifacts{&seg, &pkt, &ho});
  CHECK(seg.str().rfind("seq,issued_us,recv_us,deadline_us,retx,frame_gop,frame_idx,status\n", 0) == 0);
  CHECK(pkt.str().rfind("time_us,node,event,pkt,name,face\n", 0) == 0);
  CHECK(ho.str().rfind("time_us,host,from_ap,to_ap,inter_as\n", 0) == 0);
  std::string log = seg.str();
  CHECK(std::count(log.begin(), log.end(), '\n') > 400);
}

TEST_CASE("suite configs enumerate the full grid in a fixed order")
{
  SuiteOptions o;
  auto cfgs = suiteConfigs(o);
  CHECK(cfgs.size() == 6 * 3 * 3 * 5 * 5 + 3 * 3 * 5);
  CHECK(cfgs.front().scenario == ScenarioId::Static);
  std::set<std::uint64_t> seeds;
  for (const auto& c : cfgs) {
    seeds.insert(c.seed);
  }
  CHECK(seeds.size() == 5);
}

TEST_CASE("worker count does not change suite output")
{
  SuiteOptions o;
  o.seeds = 2;
  o.speeds = {10, 30};
  o.scenarios = {ScenarioId::S1_MP, ScenarioId::S3_MC};
  o.strategies = {StrategyKind::SmartFlooding};
  o.traffics = {TrafficKind::DsVideo, TrafficKind::DtPoisson};
  o.base = shortRun(ScenarioId::S1_MC, StrategyKind::SmartFlooding, TrafficKind::DsUncorrelated);
  auto cfgs = suiteConfigs(o);
  auto one = runAll(cfgs, 1, o.videoRescoreDeltaMs);
  auto three = runAll(cfgs, 3, o.videoRescoreDeltaMs);
  CHECK(csvOf(one) == csvOf(three));
}

TEST_CASE("mobility-only study: two-AS split marks some handovers inter-AS")
{
  HandoverStudyParams p;
  p.seeds = 1;
  p.durationS = 120;
  auto single = simulateHandovers(p, 20, suiteSeed(1, 0), Layout::SingleAs);
  auto two = simulateHandovers(p, 20, suiteSeed(1, 0), Layout::TwoAs);
  REQUIRE(single.size() == two.size());
  REQUIRE(!single.empty());
  bool anyInter = false;
  for (std::size_t i = 0; i < single.size(); ++i) {
    CHECK_FALSE(single[i].interAs);
    CHECK(single[i].at == two[i].at);
    anyInter = anyInter || two[i].interAs;
  }
  CHECK(anyInter);
  auto s = studySpeed(p, 20);
  CHECK(s.intraCount + s.interCount == two.size());
}

TEST_CASE("property checks pass at reduced case counts")
{
  for (auto out : {checkLpmProperty(5, 500), checkPitAggregationProperty(5, 100), checkLruProperty(5, 500),
                   checkConservationProperty(5, 40)}) {
    INFO(out.name << ": " << out.firstFailure);
    CHECK(out.passed());
  }
}

TEST_CASE("exhaustive GOP check covers every frame loss pattern")
{
  auto out = checkGopExhaustive();
  INFO(out.firstFailure);
  CHECK(out.cases == 32768);
  CHECK(out.passed());
}

TEST_CASE("duration stretches until the requested handover count is reached")
{
  auto c = shortRun(ScenarioId::S1_MC, StrategyKind::SmartFlooding, TrafficKind::DtPoisson);
  c.speedMps = 5;
  RunResult plain = runScenario(c);
  c.minHandovers = 30;
  RunResult stretched = runScenario(c);
  CHECK(stretched.metrics.counts.issued > plain.metrics.counts.issued);
  const SimTime begin = kSimStart + fromSeconds(c.warmupS);
  std::size_t inWindow = 0;
  for (const auto& r : stretched.handovers.at(0).records) {
    inWindow += r.at >= begin ? 1 : 0;
  }
  CHECK(inWindow >= 30);

  c.maxDurationS = 20;
  CHECK(runScenario(c).metrics.counts.issued < stretched.metrics.counts.issued);
  c.maxDurationS = 5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("trailing comments after values are ignored")
{
  std::istringstream is("; header\n[scenario]\nname = S1_MP   ; mobile producer\nspeed_mps = 5 # slow\n");
  ScenarioConfig c = parseConfig(is);
  CHECK(c.scenario == ScenarioId::S1_MP);
  CHECK(c.speedMps == 5.0);
}
