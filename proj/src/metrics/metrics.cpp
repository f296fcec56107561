#include "ndnmob/metrics/metrics.hpp"

#include "ndnmob/app/gop.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace ndnmob {

DeliveryCounts
countDeliveries(std::span<const SegmentRecord> records, TrafficKind kind,
                std::optional<Duration> deadlineOverride)
{
  DeliveryCounts c;
  // gop -> (present, on time) per packet slot
  std::map<std::uint64_t, std::pair<std::vector<bool>, std::vector<bool>>> gops;

  for (const SegmentRecord& r : records) {
    ++c.issued;
    c.abandoned += r.abandoned ? 1 : 0;
    if (!r.receivedAt) {
      continue;
    }
    ++c.delivered;
    bool onTime = true;
    if (isDelaySensitive(kind)) {
      SimTime deadline = deadlineOverride ? r.issuedAt + *deadlineOverride : r.deadline.value_or(SimTime::max());
      onTime = *r.receivedAt <= deadline;
    }
    c.onTime += onTime ? 1 : 0;
  }

  if (kind != TrafficKind::DsVideo) {
    c.useful = isDelaySensitive(kind) ? c.onTime : c.delivered;
    return c;
  }

  for (const SegmentRecord& r : records) {
    auto ref = GopLayout::frameOf(r.seq);
    auto& [present, ok] = gops[ref.gop];
    if (present.empty()) {
      present.assign(GopLayout::kPacketsPerGop, false);
      ok.assign(GopLayout::kPacketsPerGop, false);
    }
    std::size_t slot = r.seq % GopLayout::kPacketsPerGop;
    present[slot] = true;
    if (r.receivedAt) {
      SimTime deadline = deadlineOverride ? r.issuedAt + *deadlineOverride : r.deadline.value_or(SimTime::max());
      ok[slot] = *r.receivedAt <= deadline;
    }
  }
  for (const auto& [gop, flags] : gops) {
    auto useful = usefulPackets(flags.second);
    for (std::size_t i = 0; i < useful.size(); ++i) {
      c.useful += (useful[i] && flags.first[i]) ? 1 : 0;
    }
  }
  return c;
}

std::vector<SegmentRecord>
selectIssued(std::span<const SegmentRecord> records, SimTime begin, SimTime end)
{
  std::vector<SegmentRecord> out;
  for (const auto& r : records) {
    if (r.issuedAt >= begin && r.issuedAt < end) {
      out.push_back(r);
    }
  }
  return out;
}

void
fillDeliveryMetrics(RunMetrics& m, const DeliveryCounts& c, TrafficKind kind, std::uint64_t interestTx)
{
  m.counts = c;
  m.interestTx = interestTx;
  if (c.issued == 0) {
    return;
  }
  double issued = static_cast<double>(c.issued);
  m.throughputPct = 100.0 * static_cast<double>(c.delivered) / issued;
  if (isDelaySensitive(kind)) {
    m.goodputPct = 100.0 * static_cast<double>(c.useful) / issued;
  }
  if (c.useful > 0) {
    m.overhead = static_cast<double>(interestTx) / static_cast<double>(c.useful);
  }
}

void
fillHandoverMetrics(RunMetrics& m, const std::vector<std::vector<HandoverRecord>>& perHost)
{
  std::vector<double> gaps;
  std::size_t total = 0;
  std::size_t inter = 0;
  for (const auto& recs : perHost) {
    auto cls = classifyHandovers(recs);
    gaps.insert(gaps.end(), cls.all.begin(), cls.all.end());
    total += cls.intraCount + cls.interCount;
    inter += cls.interCount;
  }
  m.handovers = total;
  m.handoverMeanS = mean(gaps);
  if (total > 0) {
    m.interAsFrac = static_cast<double>(inter) / static_cast<double>(total);
  }
}

Summary
summarize(const std::vector<std::optional<double>>& values)
{
  Summary s;
  double sum = 0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++s.n;
    }
  }
  if (s.n == 0) {
    return s;
  }
  double mu = sum / static_cast<double>(s.n);
  s.mean = mu;
  if (s.n >= 2) {
    double ss = 0;
    for (const auto& v : values) {
      if (v) {
        ss += (*v - mu) * (*v - mu);
      }
    }
    double sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    s.stderr_ = sd / std::sqrt(static_cast<double>(s.n));
  }
  return s;
}

CellSummary
aggregateCell(const std::vector<RunMetrics>& runs)
{
  if (runs.empty()) {
    throw std::invalid_argument("cannot aggregate zero runs");
  }
  CellSummary cell;
  cell.key = runs.front().key;
  cell.key.seed = 0;
  std::vector<std::optional<double>> g, t, o, h, x;
  for (const auto& r : runs) {
    if (!r.key.sameCell(cell.key)) {
      throw std::invalid_argument("runs of cell " + cell.key.scenario + " mixed with " + r.key.scenario +
                                  " (or another parameter differs)");
    }
    g.push_back(r.goodputPct);
    t.push_back(r.throughputPct);
    o.push_back(r.overhead);
    h.push_back(r.handoverMeanS);
    x.push_back(r.interAsFrac);
  }
  cell.seeds = runs.size();
  cell.goodputPct = summarize(g);
  cell.throughputPct = summarize(t);
  cell.overhead = summarize(o);
  cell.handoverMeanS = summarize(h);
  cell.interAsFrac = summarize(x);
  return cell;
}

std::vector<CellSummary>
aggregate(const std::vector<RunMetrics>& runs)
{
  std::vector<std::vector<RunMetrics>> groups;
  for (const auto& r : runs) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&] (const auto& grp) { return grp.front().key.sameCell(r.key); });
    if (it == groups.end()) {
      groups.push_back({r});
    }
    else {
      it->push_back(r);
    }
  }
  std::vector<CellSummary> out;
  out.reserve(groups.size());
  for (const auto& grp : groups) {
    out.push_back(aggregateCell(grp));
  }
  return out;
}

std::string
formatNumber(std::optional<double> v, int decimals)
{
  if (!v || !std::isfinite(*v)) {
    return "NA";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, *v);
  // never print "-0.000000"
  if (std::all_of(buf, buf + std::char_traits<char>::length(buf),
                  [] (char ch) { return ch == '-' || ch == '0' || ch == '.'; })) {
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, 0.0);
  }
  return buf;
}

namespace {

void
writeKey(std::ostream& os, const RunKey& k)
{
  os << k.scenario << ',' << toString(k.strategy) << ',' << toString(k.traffic) << ',' << k.deltaMs << ','
     << formatNumber(k.speedMps, 1);
}

void
writeSummary(std::ostream& os, const Summary& s)
{
  os << ',' << formatNumber(s.mean) << ',' << formatNumber(s.stderr_);
}

} // namespace

void
writeRunCsv(std::ostream& os, const std::vector<RunMetrics>& runs)
{
  os << "scenario,strategy,traffic,delta_ms,speed_mps,seed,goodput_pct,throughput_pct,overhead,"
        "handover_mean_s,interas_frac\n";
  for (const auto& r : runs) {
    writeKey(os, r.key);
    os << ',' << r.key.seed << ',' << formatNumber(r.goodputPct) << ',' << formatNumber(r.throughputPct) << ','
       << formatNumber(r.overhead) << ',' << formatNumber(r.handoverMeanS) << ',' << formatNumber(r.interAsFrac)
       << '\n';
  }
}

void
writeAggregateCsv(std::ostream& os, const std::vector<CellSummary>& cells)
{
  os << "scenario,strategy,traffic,delta_ms,speed_mps,seeds,goodput_pct_mean,goodput_pct_stderr,"
        "throughput_pct_mean,throughput_pct_stderr,overhead_mean,overhead_stderr,handover_mean_s_mean,"
        "handover_mean_s_stderr,interas_frac_mean,interas_frac_stderr\n";
  for (const auto& c : cells) {
    writeKey(os, c.key);
    os << ',' << c.seeds;
    writeSummary(os, c.goodputPct);
    writeSummary(os, c.throughputPct);
    writeSummary(os, c.overhead);
    writeSummary(os, c.handoverMeanS);
    writeSummary(os, c.interAsFrac);
    os << '\n';
  }
}

void
writeSegmentLog(std::ostream& os, std::span<const SegmentRecord> records, TrafficKind kind)
{
  os << "seq,issued_us,recv_us,deadline_us,retx,frame_gop,frame_idx,status\n";
  for (const auto& r : records) {
    os << r.seq << ',' << toMicros(r.issuedAt) << ',';
    if (r.receivedAt) {
      os << toMicros(*r.receivedAt);
    }
    os << ',';
    if (r.deadline) {
      os << toMicros(*r.deadline);
    }
    os << ',' << r.retxCount << ',';
    if (kind == TrafficKind::DsVideo) {
      auto f = GopLayout::frameOf(r.seq);
      os << f.gop << ',' << f.frame;
    }
    else {
      os << ',';
    }
    const char* status = !r.receivedAt ? "lost" : (r.onTime() ? "ontime" : "late");
    os << ',' << status << '\n';
  }
}

void
writeHandoverTrace(std::ostream& os, const std::vector<HostHandovers>& hosts)
{
  struct Row
  {
    SimTime at;
    std::size_t host;
    const HandoverRecord* rec;
  };
  std::vector<Row> rows;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    for (const auto& r : hosts[h].records) {
      rows.push_back({r.at, h, &r});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [] (const Row& a, const Row& b) {
    return a.at != b.at ? a.at < b.at : a.host < b.host;
  });
  os << "time_us,host,from_ap,to_ap,inter_as\n";
  for (const auto& row : rows) {
    os << toMicros(row.at) << ',' << hosts[row.host].host << ',' << row.rec->fromAp << ',' << row.rec->toAp << ','
       << (row.rec->interAs ? 1 : 0) << '\n';
  }
}

void
writeCdfCsv(std::ostream& os, const std::vector<SpeedCdf>& cdfs)
{
  os << "speed_mps,interarrival_s,cdf\n";
  for (const auto& c : cdfs) {
    for (const auto& p : c.points) {
      os << formatNumber(c.speedMps, 1) << ',' << formatNumber(p.x) << ',' << formatNumber(p.cdf) << '\n';
    }
  }
}

} // namespace ndnmob
