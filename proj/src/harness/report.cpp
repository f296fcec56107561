#include "ndnmob/harness/report.hpp"

#include "ndnmob/harness/config.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

namespace ndnmob {

namespace {

using Clock = std::chrono::steady_clock;

double
secondsSince(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string
fmt(double v, int decimals = 2)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string
range(double lo, double hi, int decimals = 2)
{
  return "[" + fmt(lo, decimals) + ", " + fmt(hi, decimals) + "]";
}

/// A traffic kind at one deadline, i.e. one figure panel.
struct Panel
{
  TrafficKind traffic;
  int deltaMs;
  const char* label;
};

const Panel kDs500{TrafficKind::DsUncorrelated, 500, "ds/500"};
const Panel kVideo500{TrafficKind::DsVideo, 500, "video/500"};
const Panel kVideo1000{TrafficKind::DsVideo, 1000, "video/1000"};
const Panel kDt{TrafficKind::DtPoisson, 0, "dt"};

const std::vector<Panel> kGoodputPanels{kDs500, kVideo500, kVideo1000};
const std::vector<Panel> kOverheadPanels{kDt, kDs500, kVideo500};
const std::vector<StrategyKind> kStrategies{StrategyKind::Flooding, StrategyKind::SemiFlooding,
                                            StrategyKind::SmartFlooding};
constexpr double kTopSpeed = 30.0;

using CellIndex = std::tuple<std::string, StrategyKind, TrafficKind, int, double>;

class Cells
{
public:
  explicit Cells(const std::vector<RunMetrics>& runs)
  {
    for (auto& c : aggregate(runs)) {
      const auto& k = c.key;
      if (std::find(m_speeds.begin(), m_speeds.end(), k.speedMps) == m_speeds.end() && k.speedMps > 0) {
        m_speeds.push_back(k.speedMps);
      }
      m_cells.emplace(CellIndex{k.scenario, k.strategy, k.traffic, k.deltaMs, k.speedMps}, std::move(c));
    }
    std::sort(m_speeds.begin(), m_speeds.end());
  }

  const CellSummary*
  find(ScenarioId sc, StrategyKind s, const Panel& p, double speed) const
  {
    if (sc == ScenarioId::Static) {
      speed = 0;
    }
    auto it = m_cells.find(CellIndex{std::string(toString(sc)), s, p.traffic, p.deltaMs, speed});
    return it == m_cells.end() ? nullptr : &it->second;
  }

  std::optional<double>
  goodput(ScenarioId sc, StrategyKind s, const Panel& p, double speed) const
  {
    const auto* c = find(sc, s, p, speed);
    return c ? c->goodputPct.mean : std::nullopt;
  }

  std::optional<double>
  throughput(ScenarioId sc, StrategyKind s, const Panel& p, double speed) const
  {
    const auto* c = find(sc, s, p, speed);
    return c ? c->throughputPct.mean : std::nullopt;
  }

  std::optional<double>
  overhead(ScenarioId sc, StrategyKind s, const Panel& p, double speed) const
  {
    const auto* c = find(sc, s, p, speed);
    return c ? c->overhead.mean : std::nullopt;
  }

  const std::vector<double>&
  speeds() const noexcept
  {
    return m_speeds;
  }

private:
  std::map<CellIndex, CellSummary> m_cells;
  std::vector<double> m_speeds;
};

/// Largest value seen, remembering where it came from.
struct Extreme
{
  std::optional<double> value;
  std::string where;
  std::size_t missing = 0;

  void
  offer(std::optional<double> v, const std::string& at)
  {
    if (!v) {
      ++missing;
      return;
    }
    if (!value || *v > *value) {
      value = v;
      where = at;
    }
  }
};

std::string
where(ScenarioId sc, StrategyKind s, const Panel& p, std::optional<double> speed = std::nullopt)
{
  std::string w = std::string(toString(sc)) + " " + std::string(toString(s)) + " " + p.label;
  if (speed) {
    w += " @" + fmt(*speed, 0) + "m/s";
  }
  return w;
}

CheckResult
bandCheck(const std::string& label, const Extreme& e, double lo, double hi, int decimals = 2)
{
  CheckResult r{label, "no data", range(lo, hi, decimals), false};
  if (e.value) {
    r.measured = fmt(*e.value, decimals) + " (" + e.where + ")";
    r.pass = e.missing == 0 && *e.value >= lo && *e.value <= hi;
    if (e.missing > 0) {
      r.measured += ", " + std::to_string(e.missing) + " cells missing";
    }
  }
  return r;
}

CheckResult
fractionCheck(const std::string& label, std::size_t hits, std::size_t total, double minFraction)
{
  CheckResult r{label, "no data", ">= " + fmt(minFraction), false};
  if (total > 0) {
    double f = static_cast<double>(hits) / static_cast<double>(total);
    r.measured = fmt(f, 3) + " (" + std::to_string(hits) + "/" + std::to_string(total) + ")";
    r.pass = f >= minFraction;
  }
  return r;
}

std::optional<double>
lossPct(std::optional<double> mobile, std::optional<double> base)
{
  if (!mobile || !base || *base <= 0) {
    return std::nullopt;
  }
  return 100.0 * (1.0 - *mobile / *base);
}

std::optional<double>
ratio(std::optional<double> num, std::optional<double> den)
{
  if (!num || !den || *den <= 0) {
    return std::nullopt;
  }
  return *num / *den;
}

CriterionResult
criterionProperties(const ReportInputs& in)
{
  CriterionResult c{1, "forwarding-plane property suite", {}};
  if (!in.properties) {
    c.checks.push_back({"properties", "not run", "all pass", false});
    return c;
  }
  for (const auto& o : in.properties->outcomes) {
    if (o.name == "gop-decode") {
      continue;
    }
    std::string m = std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + " pass";
    if (!o.passed() && !o.firstFailure.empty()) {
      m += "; first failure: " + o.firstFailure;
    }
    c.checks.push_back({o.name, m, "all pass", o.passed()});
  }
  c.checks.push_back({"runtime", fmt(in.properties->seconds) + " s", "< 10 s", in.properties->seconds < 10.0});
  return c;
}

CriterionResult
criterionHandovers(const ReportInputs& in)
{
  CriterionResult c{2, "handover geometry", {}};
  if (!in.handovers || in.handovers->speeds.empty()) {
    c.checks.push_back({"mobility study", "not run", "5 speeds", false});
    return c;
  }
  constexpr double kMeanDistance = 146.0;
  for (const auto& s : in.handovers->speeds) {
    std::string at = " @" + fmt(s.speedMps, 0) + "m/s";
    auto m = mean(s.all);
    CheckResult dist{"mean interarrival x speed" + at, "no handovers",
                     range(kMeanDistance * 0.7, kMeanDistance * 1.3, 1) + " m", false};
    if (m) {
      double d = *m * s.speedMps;
      dist.measured = fmt(d, 1) + " m (" + std::to_string(s.all.size()) + " gaps)";
      dist.pass = d >= kMeanDistance * 0.7 && d <= kMeanDistance * 1.3;
    }
    c.checks.push_back(dist);

    if (s.speedMps == 5 || s.speedMps == 10 || s.speedMps == 20) {
      CheckResult ks{"KS distance to fitted uniform" + at, "no handovers", "<= 0.10", false};
      if (s.all.size() >= 2) {
        auto fit = fitUniformMinimax(s.all);
        double d = ksDistance(s.all, fit);
        ks.measured = fmt(d, 3) + " (U[" + fmt(fit.a) + ", " + fmt(fit.b) + "] s)";
        ks.pass = d <= 0.10;
      }
      c.checks.push_back(ks);
    }

    double f = s.interFraction();
    c.checks.push_back({"inter-AS fraction" + at, fmt(f, 3), range(0.30, 0.50), f >= 0.30 && f <= 0.50});

    auto pInter = quantile(s.inter, 0.95);
    auto pAll = quantile(s.all, 0.95);
    auto pIntra = quantile(s.intra, 0.95);
    CheckResult tail{"p95 inter-AS > p95 single-AS" + at, "no data", "strictly larger", false};
    if (pInter && pAll) {
      tail.measured = fmt(*pInter) + " s vs " + fmt(*pAll) + " s";
      if (pIntra) {
        tail.measured += " (same-class intra series " + fmt(*pIntra) + " s)";
      }
      tail.pass = *pInter > *pAll;
    }
    c.checks.push_back(tail);
  }
  c.checks.push_back({"runtime", fmt(in.handovers->seconds) + " s", "< 60 s", in.handovers->seconds < 60.0});
  return c;
}

CriterionResult
criterionStatic(const std::vector<RunMetrics>& runs, const Cells& cells)
{
  CriterionResult c{3, "static baseline", {}};
  std::size_t n = 0, perfect = 0;
  std::uint64_t abandoned = 0;
  double worst = 100;
  for (const auto& r : runs) {
    if (r.key.scenario != toString(ScenarioId::Static) || r.key.traffic != TrafficKind::DsUncorrelated ||
        r.key.deltaMs != 500) {
      continue;
    }
    ++n;
    double g = r.goodputPct.value_or(0);
    worst = std::min(worst, g);
    perfect += g >= 100.0 ? 1 : 0;
    abandoned += r.counts.abandoned;
  }
  c.checks.push_back({"runs at 100% goodput", std::to_string(perfect) + "/" + std::to_string(n) + " (min " +
                                                  fmt(worst) + "%)",
                      "all", n > 0 && perfect == n});
  c.checks.push_back({"abandoned segments", std::to_string(abandoned), "0", n > 0 && abandoned == 0});
  Extreme o;
  o.offer(cells.overhead(ScenarioId::Static, StrategyKind::Flooding, kDs500, 0), "flooding");
  c.checks.push_back(bandCheck("flooding overhead", o, 7, 15));
  return c;
}

CriterionResult
criterionIntraAs(const Cells& cells)
{
  CriterionResult c{4, "intra-AS mobility trends", {}};
  const std::vector<ScenarioId> single{ScenarioId::S1_MC, ScenarioId::S1_MP};
  const std::vector<ScenarioId> mobile{ScenarioId::S1_MC, ScenarioId::S1_MP, ScenarioId::S2_MA};

  auto goodputLoss = [&] (StrategyKind s, const std::vector<ScenarioId>& scs) {
    Extreme e;
    for (auto sc : scs) {
      for (const auto& p : kGoodputPanels) {
        e.offer(lossPct(cells.goodput(sc, s, p, kTopSpeed), cells.goodput(ScenarioId::Static, s, p, 0)),
                where(sc, s, p));
      }
    }
    return e;
  };

  c.checks.push_back(bandCheck("(a) flooding goodput loss % @30m/s", goodputLoss(StrategyKind::Flooding, mobile), 0,
                               25));
  c.checks.push_back(bandCheck("(b) smart goodput loss % @30m/s, single mobile",
                               goodputLoss(StrategyKind::SmartFlooding, single), 30, 60));
  c.checks.push_back(bandCheck("(b) smart goodput loss % @30m/s, all mobile",
                               goodputLoss(StrategyKind::SmartFlooding, {ScenarioId::S2_MA}), 40, 70));

  std::size_t ordered = 0, total = 0;
  for (auto sc : mobile) {
    for (const auto& p : kGoodputPanels) {
      for (double v : cells.speeds()) {
        auto f = cells.goodput(sc, StrategyKind::Flooding, p, v);
        auto semi = cells.goodput(sc, StrategyKind::SemiFlooding, p, v);
        auto smart = cells.goodput(sc, StrategyKind::SmartFlooding, p, v);
        if (!f || !semi || !smart) {
          continue;
        }
        ++total;
        ordered += *f >= *semi && *semi >= *smart ? 1 : 0;
      }
    }
  }
  c.checks.push_back(fractionCheck("(c) cells with flooding >= semi >= smart", ordered, total, 0.9));

  auto dtLoss = [&] (const std::vector<ScenarioId>& scs) {
    Extreme e;
    for (auto sc : scs) {
      for (auto s : kStrategies) {
        e.offer(lossPct(cells.throughput(sc, s, kDt, kTopSpeed), cells.throughput(ScenarioId::Static, s, kDt, 0)),
                where(sc, s, kDt));
      }
    }
    return e;
  };
  c.checks.push_back(bandCheck("(d) dt throughput loss % @30m/s, single mobile", dtLoss(single), 0, 25));
  c.checks.push_back(bandCheck("(d) dt throughput loss % @30m/s, all mobile", dtLoss({ScenarioId::S2_MA}), 0, 40));

  auto inflation = [&] (StrategyKind s) {
    Extreme e;
    for (auto sc : mobile) {
      for (const auto& p : kOverheadPanels) {
        e.offer(ratio(cells.overhead(sc, s, p, kTopSpeed), cells.overhead(ScenarioId::Static, s, p, 0)),
                where(sc, s, p));
      }
    }
    return e;
  };
  c.checks.push_back(bandCheck("(e) smart overhead inflation @30m/s", inflation(StrategyKind::SmartFlooding), 1.5, 3));
  c.checks.push_back(bandCheck("(e) semi overhead inflation @30m/s", inflation(StrategyKind::SemiFlooding), 1.5, 3));
  c.checks.push_back(bandCheck("(e) flooding overhead inflation @30m/s", inflation(StrategyKind::Flooding), 4, 9));

  Extreme spread;
  for (auto sc : mobile) {
    for (const auto& p : kOverheadPanels) {
      std::optional<double> lo, hi;
      for (double v : cells.speeds()) {
        auto o = cells.overhead(sc, StrategyKind::Flooding, p, v);
        if (!o) {
          continue;
        }
        lo = lo ? std::min(*lo, *o) : *o;
        hi = hi ? std::max(*hi, *o) : *o;
      }
      spread.offer(ratio(hi, lo), where(sc, StrategyKind::Flooding, p));
    }
  }
  c.checks.push_back(bandCheck("(f) flooding overhead max/min across speeds", spread, 1.0, 1.3));
  return c;
}

CriterionResult
criterionAsymmetry(const Cells& cells)
{
  CriterionResult c{5, "producer vs consumer mobility overhead", {}};
  const std::pair<ScenarioId, ScenarioId> pairs[] = {{ScenarioId::S1_MP, ScenarioId::S1_MC},
                                                     {ScenarioId::S3_MP, ScenarioId::S3_MC}};
  std::size_t higher = 0, total = 0;
  for (auto s : {StrategyKind::SmartFlooding, StrategyKind::SemiFlooding}) {
    for (auto [mp, mc] : pairs) {
      for (const auto& p : kOverheadPanels) {
        for (double v : cells.speeds()) {
          auto a = cells.overhead(mp, s, p, v);
          auto b = cells.overhead(mc, s, p, v);
          if (!a || !b) {
            continue;
          }
          ++total;
          higher += *a > *b ? 1 : 0;
        }
      }
    }
  }
  c.checks.push_back(fractionCheck("cells with MP overhead > MC overhead", higher, total, 0.8));
  return c;
}

CriterionResult
criterionInterAs(const Cells& cells)
{
  CriterionResult c{6, "inter-AS trends", {}};

  Extreme mcGap;
  for (auto s : kStrategies) {
    for (const auto& p : kGoodputPanels) {
      for (double v : cells.speeds()) {
        auto a = cells.goodput(ScenarioId::S3_MC, s, p, v);
        auto b = cells.goodput(ScenarioId::S1_MC, s, p, v);
        mcGap.offer(a && b ? std::optional<double>(std::abs(*a - *b)) : std::nullopt,
                    where(ScenarioId::S3_MC, s, p, v));
      }
    }
  }
  c.checks.push_back(bandCheck("MC goodput |inter - intra| points", mcGap, 0, 5));

  double sum = 0;
  std::size_t n = 0, missing = 0;
  Extreme mpOverhead;
  Extreme largestDrop;
  for (auto s : kStrategies) {
    for (const auto& p : {kDs500, kVideo500}) {
      auto intra = cells.goodput(ScenarioId::S1_MP, s, p, kTopSpeed);
      auto inter = cells.goodput(ScenarioId::S3_MP, s, p, kTopSpeed);
      if (intra && inter) {
        sum += *intra - *inter;
        ++n;
        largestDrop.offer(*intra - *inter, where(ScenarioId::S3_MP, s, p));
      }
      else {
        ++missing;
      }
      auto r = ratio(cells.overhead(ScenarioId::S3_MP, s, p, kTopSpeed),
                     cells.overhead(ScenarioId::S1_MP, s, p, kTopSpeed));
      mpOverhead.offer(r ? std::optional<double>(*r - 1.0) : std::nullopt, where(ScenarioId::S3_MP, s, p));
    }
  }
  CheckResult drop{"MP goodput decrease points @30m/s (mean)", "no data", range(3, 15), false};
  if (n > 0) {
    double d = sum / static_cast<double>(n);
    drop.measured = fmt(d) + " over " + std::to_string(n) + " cells (largest " + fmt(*largestDrop.value) + ", " +
                    largestDrop.where + ")";
    drop.pass = missing == 0 && d >= 3 && d <= 15;
  }
  c.checks.push_back(drop);
  c.checks.push_back(bandCheck("MP overhead increase @30m/s (max)", mpOverhead, 0.05, 0.40, 3));
  return c;
}

CriterionResult
criterionVideo(const ReportInputs& in)
{
  CriterionResult c{7, "video decodability", {}};
  bool found = false;
  if (in.properties) {
    for (const auto& o : in.properties->outcomes) {
      if (o.name == "gop-decode") {
        found = true;
        c.checks.push_back({"GOP decode vs dependency model",
                            std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + " patterns",
                            "all 32768 agree", o.passed() && o.cases == 32768});
      }
    }
  }
  if (!found) {
    c.checks.push_back({"GOP decode vs dependency model", "not run", "all 32768 agree", false});
  }

  using TraceKey = std::tuple<std::string, StrategyKind, double, std::uint64_t>;
  std::map<TraceKey, std::pair<std::optional<double>, std::optional<double>>> traces;
  for (const auto& r : *in.runs) {
    if (r.key.traffic != TrafficKind::DsVideo) {
      continue;
    }
    auto& slot = traces[TraceKey{r.key.scenario, r.key.strategy, r.key.speedMps, r.key.seed}];
    if (r.key.deltaMs == 500) {
      slot.first = r.goodputPct;
    }
    else if (r.key.deltaMs == 1000) {
      slot.second = r.goodputPct;
    }
  }
  std::size_t ok = 0, total = 0;
  for (const auto& [key, g] : traces) {
    if (!g.first || !g.second) {
      continue;
    }
    ++total;
    ok += *g.second >= *g.first ? 1 : 0;
  }
  c.checks.push_back({"traces with goodput(1 s) >= goodput(500 ms)",
                      std::to_string(ok) + "/" + std::to_string(total), "all", total > 0 && ok == total});
  return c;
}

CriterionResult
criterionDeterminism(const ReportInputs& in)
{
  CriterionResult c{8, "determinism and scale", {}};
  if (!in.determinism) {
    c.checks.push_back({"repeat comparison", "not run", "byte-identical", false});
    return c;
  }
  const auto& d = *in.determinism;
  c.checks.push_back({"repeat comparison", (d.identical ? "identical, " : "DIFFERENT, ") + d.how, "byte-identical",
                      d.identical});
  c.checks.push_back({"suite wall time", fmt(d.suiteSeconds, 1) + " s", "< " + fmt(d.budgetSeconds, 0) + " s",
                      d.suiteSeconds < d.budgetSeconds});
  return c;
}

} // namespace

bool
CriterionResult::passed() const noexcept
{
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [] (const CheckResult& r) { return r.pass; });
}

std::vector<CriterionResult>
evaluateCriteria(const ReportInputs& in)
{
  static const std::vector<RunMetrics> kNoRuns;
  ReportInputs local = in;
  if (local.runs == nullptr) {
    local.runs = &kNoRuns;
  }
  Cells cells(*local.runs);
  return {criterionProperties(local),    criterionHandovers(local), criterionStatic(*local.runs, cells),
          criterionIntraAs(cells),       criterionAsymmetry(cells), criterionInterAs(cells),
          criterionVideo(local),         criterionDeterminism(local)};
}

bool
allPassed(const std::vector<CriterionResult>& results)
{
  return std::all_of(results.begin(), results.end(), [] (const CriterionResult& c) { return c.passed(); });
}

void
writeReport(std::ostream& os, const std::vector<CriterionResult>& results)
{
  for (const auto& c : results) {
    os << "criterion " << c.id << ' ' << (c.passed() ? "PASS" : "FAIL") << ' ' << c.title << '\n';
    for (const auto& k : c.checks) {
      os << "    [" << (k.pass ? "ok" : "!!") << "] " << k.label << ": " << k.measured << "  band " << k.band << '\n';
    }
  }
  std::size_t passed = std::count_if(results.begin(), results.end(), [] (const auto& c) { return c.passed(); });
  os << passed << '/' << results.size() << " criteria passed\n";
}

PropertyEvidence
collectPropertyEvidence(std::uint64_t seed)
{
  PropertyEvidence ev;
  auto t0 = Clock::now();
  ev.outcomes.push_back(checkLpmProperty(seed));
  ev.outcomes.push_back(checkPitAggregationProperty(seed));
  ev.outcomes.push_back(checkLruProperty(seed));
  ev.outcomes.push_back(checkConservationProperty(seed));
  ev.seconds = secondsSince(t0);
  // timed apart: the GOP check belongs to the video criterion
  ev.outcomes.push_back(checkGopExhaustive());
  return ev;
}

HandoverEvidence
collectHandoverEvidence(const HandoverStudyParams& p)
{
  HandoverEvidence ev;
  auto t0 = Clock::now();
  ev.speeds = studyAllSpeeds(p);
  ev.seconds = secondsSince(t0);
  return ev;
}

std::vector<SpeedCdf>
handoverCdfs(const HandoverEvidence& ev)
{
  std::vector<SpeedCdf> out;
  for (const auto& s : ev.speeds) {
    out.push_back({s.speedMps, empiricalCdf(s.all)});
  }
  return out;
}

} // namespace ndnmob
