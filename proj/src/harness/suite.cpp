#include "ndnmob/harness/suite.hpp"

#include "ndnmob/sim/random.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace ndnmob {

std::uint64_t
suiteSeed(std::uint64_t rootSeed, int k)
{
  return mix64(rootSeed + static_cast<std::uint64_t>(k));
}

unsigned
defaultWorkerCount()
{
  if (const char* env = std::getenv("SIM_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ScenarioConfig>
suiteConfigs(const SuiteOptions& opts)
{
  std::vector<ScenarioConfig> out;
  auto add = [&] (ScenarioId sc, const std::vector<double>& speeds) {
    for (auto strategy : opts.strategies) {
      for (auto traffic : opts.traffics) {
        for (double speed : speeds) {
          for (int k = 0; k < opts.seeds; ++k) {
            ScenarioConfig c = opts.base;
            c.scenario = sc;
            c.strategy = strategy;
            c.traffic = traffic;
            c.speedMps = speed;
            c.seed = suiteSeed(opts.rootSeed, k);
            out.push_back(c);
          }
        }
      }
    }
  };
  if (opts.includeStatic) {
    add(ScenarioId::Static, {0.0});
  }
  for (auto sc : opts.scenarios) {
    add(sc, opts.speeds);
  }
  return out;
}

std::vector<RunMetrics>
runRows(const ScenarioConfig& cfg, int videoRescoreDeltaMs)
{
  RunResult r = runScenario(cfg);
  std::vector<RunMetrics> rows{r.metrics};
  if (cfg.traffic == TrafficKind::DsVideo && videoRescoreDeltaMs > 0 && videoRescoreDeltaMs != cfg.deltaMs) {
    rows.push_back(rescoreDeadline(r, videoRescoreDeltaMs));
  }
  return rows;
}

std::vector<RunMetrics>
runAll(const std::vector<ScenarioConfig>& configs, unsigned workers, int videoRescoreDeltaMs,
       const std::function<void(std::size_t, std::size_t)>& progress)
{
  std::vector<std::vector<RunMetrics>> slots(configs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex mu;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) {
        return;
      }
      try {
        slots[i] = runRows(configs[i], videoRescoreDeltaMs);
      }
      catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) {
          failure = std::current_exception();
        }
        next = configs.size();
        return;
      }
      std::size_t n = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        progress(n, configs.size());
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, configs.size()))));
  if (workers == 1) {
    work();
  }
  else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  std::vector<RunMetrics> rows;
  for (auto& s : slots) {
    rows.insert(rows.end(), s.begin(), s.end());
  }
  return rows;
}

SuiteResult
runSuite(const SuiteOptions& opts)
{
  auto t0 = std::chrono::steady_clock::now();
  auto configs = suiteConfigs(opts);
  SuiteResult res;
  res.simulations = configs.size();
  unsigned workers = opts.workers > 0 ? opts.workers : defaultWorkerCount();
  res.runs = runAll(configs, workers, opts.videoRescoreDeltaMs, opts.progress);
  res.cells = aggregate(res.runs);
  res.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

} // namespace ndnmob
