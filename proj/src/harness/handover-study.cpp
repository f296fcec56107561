#include "ndnmob/harness/handover-study.hpp"

#include "ndnmob/harness/suite.hpp"
#include "ndnmob/mobility/waypoint.hpp"
#include "ndnmob/sim/random.hpp"

namespace ndnmob {

std::vector<HandoverRecord>
simulateHandovers(const HandoverStudyParams& p, double speedMps, std::uint64_t seed, Layout layout)
{
  auto sites = hexLayout(p.apCount, p.apSpacingM);
  std::vector<int> asOfAp(sites.size(), 0);
  if (layout == Layout::TwoAs) {
    asOfAp = medianSplitByX(sites);
  }

  Scheduler sched;
  RngStream rng = deriveStream(seed, "mobility-consumer");
  RandomWaypoint walk(rng, sites.front(), p.regionRadiusM, speedMps);
  HandoverController ctl(sched, walk, sites, asOfAp, p.handover);
  ctl.start();
  sched.runUntil(kSimStart + fromSeconds(p.durationS));
  return ctl.records();
}

SpeedHandovers
studySpeed(const HandoverStudyParams& p, double speedMps)
{
  SpeedHandovers out;
  out.speedMps = speedMps;
  for (int k = 0; k < p.seeds; ++k) {
    auto recs = simulateHandovers(p, speedMps, suiteSeed(p.rootSeed, k), Layout::TwoAs);
    auto cls = classifyHandovers(recs);
    out.all.insert(out.all.end(), cls.all.begin(), cls.all.end());
    out.intra.insert(out.intra.end(), cls.intra.begin(), cls.intra.end());
    out.inter.insert(out.inter.end(), cls.inter.begin(), cls.inter.end());
    out.intraCount += cls.intraCount;
    out.interCount += cls.interCount;
  }
  return out;
}

std::vector<SpeedHandovers>
studyAllSpeeds(const HandoverStudyParams& p)
{
  std::vector<SpeedHandovers> out;
  for (double s : p.speeds) {
    out.push_back(studySpeed(p, s));
  }
  return out;
}

} // namespace ndnmob
