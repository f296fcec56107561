#include "ndnmob/harness/config.hpp"
#include "ndnmob/harness/handover-study.hpp"
#include "ndnmob/harness/report.hpp"
#include "ndnmob/harness/scenario.hpp"
#include "ndnmob/harness/suite.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ndnmob;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::ofstream
openOut(const fs::path& path)
{
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw ConfigError("cannot write " + path.string());
  }
  return os;
}

std::string
csvOf(const std::vector<RunMetrics>& rows)
{
  std::ostringstream os;
  writeRunCsv(os, rows);
  return os.str();
}

std::size_t
rowsPerConfig(const ScenarioConfig& c, int rescoreDeltaMs)
{
  return c.traffic == TrafficKind::DsVideo && rescoreDeltaMs > 0 && rescoreDeltaMs != c.deltaMs ? 2 : 1;
}

int
cmdRun(const std::string& configPath, const fs::path& out)
{
  ScenarioConfig cfg = loadConfig(configPath);
  fs::create_directories(out);

  std::optional<std::ofstream> seg, pkt, ho;
  RunArtifacts art;
  if (cfg.segmentLog) {
    art.segmentLog = &seg.emplace(openOut(out / "segments.csv"));
  }
  if (cfg.packetTrace) {
    art.packetTrace = &pkt.emplace(openOut(out / "packets.csv"));
  }
  if (cfg.handoverTrace) {
    art.handoverTrace = &ho.emplace(openOut(out / "handovers.csv"));
  }
  RunResult r = runScenario(cfg, art);

  std::vector<RunMetrics> rows{r.metrics};
  auto metricsOut = openOut(out / "metrics.csv");
  writeRunCsv(metricsOut, rows);
  auto cfgOut = openOut(out / "config.ini");
  serializeConfig(cfgOut, cfg);

  writeRunCsv(std::cout, rows);
  return kExitPass;
}

struct SuiteArgs
{
  std::uint64_t rootSeed = 1;
  int seeds = 5;
  fs::path out;
  std::string baseConfig;
  unsigned workers = 0;
  std::size_t verifyEvery = 25;
  double durationS = 0;
  std::vector<double> speeds;
  bool quiet = false;
};

int
cmdSuite(const SuiteArgs& a)
{
  SuiteOptions opts;
  opts.rootSeed = a.rootSeed;
  opts.seeds = a.seeds;
  if (!a.baseConfig.empty()) {
    opts.base = loadConfig(a.baseConfig);
  }
  if (a.durationS > 0) {
    opts.base.durationS = a.durationS;
  }
  if (!a.speeds.empty()) {
    opts.speeds = a.speeds;
  }
  opts.base.segmentLog = opts.base.packetTrace = opts.base.handoverTrace = false;
  opts.base.validate();
  opts.workers = a.workers > 0 ? a.workers : defaultWorkerCount();
  if (!a.quiet) {
    opts.progress = [] (std::size_t done, std::size_t total) {
      if (done % 50 == 0 || done == total) {
        std::cerr << "\r" << done << "/" << total << " runs" << std::flush;
        if (done == total) {
          std::cerr << '\n';
        }
      }
    };
  }
  fs::create_directories(a.out);

  ReportInputs in;
  in.properties = collectPropertyEvidence(a.rootSeed);

  HandoverStudyParams hp;
  hp.rootSeed = a.rootSeed;
  hp.seeds = a.seeds;
  hp.speeds = opts.speeds;
  hp.apCount = opts.base.apCount;
  hp.apSpacingM = opts.base.apSpacingM;
  hp.regionRadiusM = opts.base.regionRadiusM;
  hp.handover.persist = std::chrono::milliseconds(opts.base.persistMs);
  hp.handover.gap = std::chrono::milliseconds(opts.base.gapMs);
  hp.handover.tick = std::chrono::milliseconds(opts.base.tickMs);
  in.handovers = collectHandoverEvidence(hp);
  {
    auto os = openOut(a.out / "handover_cdf.csv");
    writeCdfCsv(os, handoverCdfs(*in.handovers));
  }

  SuiteResult res = runSuite(opts);
  in.runs = &res.runs;
  {
    auto os = openOut(a.out / "runs.csv");
    writeRunCsv(os, res.runs);
  }
  {
    auto os = openOut(a.out / "summary.csv");
    writeAggregateCsv(os, res.cells);
  }

  // Re-run a sample with another worker count and compare rows byte for byte.
  DeterminismEvidence det;
  det.suiteSeconds = res.wallSeconds;
  auto configs = suiteConfigs(opts);
  std::vector<ScenarioConfig> sample;
  std::vector<RunMetrics> expected;
  std::size_t row = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::size_t n = rowsPerConfig(configs[i], opts.videoRescoreDeltaMs);
    if (a.verifyEvery > 0 && i % a.verifyEvery == 0) {
      sample.push_back(configs[i]);
      expected.insert(expected.end(), res.runs.begin() + static_cast<std::ptrdiff_t>(row),
                      res.runs.begin() + static_cast<std::ptrdiff_t>(row + n));
    }
    row += n;
  }
  unsigned otherWorkers = opts.workers == 1 ? 2 : 1;
  auto again = runAll(sample, otherWorkers, opts.videoRescoreDeltaMs);
  det.identical = !sample.empty() && csvOf(again) == csvOf(expected);
  det.how = "re-ran " + std::to_string(sample.size()) + " of " + std::to_string(configs.size()) + " runs with " +
            std::to_string(otherWorkers) + " instead of " + std::to_string(opts.workers) + " workers";
  in.determinism = det;

  auto results = evaluateCriteria(in);
  {
    auto os = openOut(a.out / "report.txt");
    os << "root seed " << a.rootSeed << ", " << a.seeds << " seeds, " << res.simulations << " simulations\n";
    writeReport(os, results);
  }
  writeReport(std::cout, results);
  return allPassed(results) ? kExitPass : kExitFail;
}

int
cmdHoTrace(double speed, double duration, const fs::path& out, std::uint64_t seed, const std::string& layout)
{
  if (speed <= 0 || duration <= 0) {
    throw ConfigError("speed and duration must be positive");
  }
  if (layout != "single" && layout != "two") {
    throw ConfigError("layout must be single or two");
  }
  HandoverStudyParams p;
  p.durationS = duration;
  auto records = simulateHandovers(p, speed, seed, layout == "two" ? Layout::TwoAs : Layout::SingleAs);
  auto os = openOut(out);
  writeHandoverTrace(os, {HostHandovers{"consumer", records}});
  std::vector<std::vector<HandoverRecord>> perHost{records};
  RunMetrics m;
  fillHandoverMetrics(m, perHost);
  std::cout << records.size() << " handovers, mean interarrival " << formatNumber(m.handoverMeanS, 3)
            << " s, inter-AS fraction " << formatNumber(m.interAsFrac, 3) << '\n';
  return kExitPass;
}

int
cmdTopoDump(const std::string& configPath, const std::string& scenario)
{
  ScenarioConfig cfg;
  if (!configPath.empty()) {
    cfg = loadConfig(configPath);
  }
  if (!scenario.empty()) {
    try {
      cfg.scenario = parseScenarioId(scenario);
    }
    catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  Scheduler sched;
  Topology topo = buildTopology(sched, cfg.topologyParams());
  dumpTopology(topo, std::cout);
  return kExitPass;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"Discrete-event NDN mobility simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run one scenario config");
  std::string runConfig;
  fs::path runOut;
  run->add_option("--config", runConfig, "Scenario config file")->required();
  run->add_option("--out", runOut, "Output directory")->required();

  auto* suite = app.add_subcommand("suite", "Run the full reproduction suite and report");
  SuiteArgs sa;
  suite->add_option("--root-seed", sa.rootSeed, "Root seed")->required();
  suite->add_option("--seeds", sa.seeds, "Replicates per cell")->check(CLI::PositiveNumber);
  suite->add_option("--out", sa.out, "Output directory")->required();
  suite->add_option("--base", sa.baseConfig, "Config file used as template for every run");
  suite->add_option("--workers", sa.workers, "Worker threads (default SIM_WORKERS or cores)");
  suite->add_option("--verify-every", sa.verifyEvery, "Re-run every Nth config for the determinism check");
  suite->add_option("--duration", sa.durationS, "Override measured duration (s)");
  suite->add_option("--speeds", sa.speeds, "Override speed list (m/s)");
  suite->add_flag("--quiet", sa.quiet, "No progress output");

  auto* ho = app.add_subcommand("ho-trace", "Mobility-only handover trace");
  double hoSpeed = 0, hoDuration = 0;
  fs::path hoOut;
  std::uint64_t hoSeed = 1;
  std::string hoLayout = "two";
  ho->add_option("--speed", hoSpeed, "Speed (m/s)")->required();
  ho->add_option("--duration", hoDuration, "Virtual duration (s)")->required();
  ho->add_option("--out", hoOut, "Output CSV")->required();
  ho->add_option("--seed", hoSeed, "Seed");
  ho->add_option("--layout", hoLayout, "single or two");

  auto* topo = app.add_subcommand("topo-dump", "Print the link table of a scenario topology");
  std::string topoConfig, topoScenario;
  topo->add_option("--config", topoConfig, "Scenario config file");
  topo->add_option("--scenario", topoScenario, "Scenario name");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*run) {
      return cmdRun(runConfig, runOut);
    }
    if (*suite) {
      return cmdSuite(sa);
    }
    if (*ho) {
      return cmdHoTrace(hoSpeed, hoDuration, hoOut, hoSeed, hoLayout);
    }
    return cmdTopoDump(topoConfig, topoScenario);
  }
  catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
