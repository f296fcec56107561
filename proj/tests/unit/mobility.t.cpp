#include "ndnmob/mobility/handover-stats.hpp"
#include "ndnmob/mobility/handover.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace ndnmob;
using namespace std::chrono_literals;

TEST_CASE("hex layout spacing")
{
  auto sites = hexLayout(7, 215);
  REQUIRE(sites.size() == 7);
  for (int i = 1; i < 7; ++i) {
    CHECK(distance(sites[0], sites[i]) == doctest::Approx(215));
    int j = i % 6 + 1;
    CHECK(distance(sites[i], sites[j]) == doctest::Approx(215));
  }
  auto split = medianSplitByX(sites);
  CHECK(split == std::vector<int>{0, 1, 1, 0, 0, 0, 1});
  CHECK_THROWS(hexLayout(8, 215));
}

TEST_CASE("signal quality follows distance; ties go to the lower id")
{
  std::vector<Vec2> aps{{0, 0}, {100, 0}, {-100, 0}};
  CHECK(bestAccessPoint({100, 0}, aps) == 1);
  CHECK(bestAccessPoint({50, 0}, aps) == 0);
  CHECK(bestAccessPoint({0, 30}, aps) == 0);
  std::vector<Vec2> sym{{-10, 0}, {10, 0}};
  CHECK(bestAccessPoint({0, 5}, sym) == 0);
  CHECK(signalQuality({0, 0}, {3, 4}) == doctest::Approx(-5));
}

TEST_CASE("waypoint kinematics")
{
  auto rng = deriveStream(1, "mobility");
  RandomWaypoint w(rng, {0, 0}, 250, 10.0);
  Vec2 before = w.position();
  Vec2 target = w.waypoint();
  REQUIRE(distance(before, target) > 0.1);
  w.step(0.010);
  CHECK(distance(before, w.position()) == doctest::Approx(0.1));
  // still on the segment towards the waypoint
  CHECK(distance(before, w.position()) + distance(w.position(), target) ==
        doctest::Approx(distance(before, target)));
}

TEST_CASE("reaching a waypoint draws the next one without pausing")
{
  auto rng = deriveStream(2, "mobility");
  RandomWaypoint w(rng, {0, 0}, 250, 1.0);
  double left = distance(w.position(), w.waypoint());
  auto drawn = w.waypointsDrawn();
  Vec2 wp = w.waypoint();
  w.step(left); // lands exactly on the waypoint
  CHECK(w.waypointsDrawn() == drawn + 1);
  CHECK(w.position() == wp);
  Vec2 next = w.waypoint();
  w.step(0.5);
  CHECK(distance(wp, w.position()) == doctest::Approx(std::min(0.5, distance(wp, next))));
}

TEST_CASE("static host does not move")
{
  auto rng = deriveStream(3, "mobility");
  RandomWaypoint w(rng, {0, 0}, 250, 0.0, {0, 0});
  w.step(100);
  CHECK(w.position() == Vec2{0, 0});
}

TEST_CASE("waypoints are uniform over the disk")
{
  auto rng = deriveStream(4, "disk");
  const int n = 1'000'000, bins = 10;
  std::vector<int> radial(bins), angular(bins);
  for (int i = 0; i < n; ++i) {
    Vec2 p = uniformInDisk(rng, {0, 0}, 250);
    double r2 = (p.x * p.x + p.y * p.y) / (250.0 * 250.0);
    REQUIRE(r2 <= 1.0);
    double a = std::atan2(p.y, p.x) + std::numbers::pi;
    radial[std::min(bins - 1, static_cast<int>(r2 * bins))]++;
    angular[std::min(bins - 1, static_cast<int>(a / (2 * std::numbers::pi) * bins))]++;
  }
  auto chi2 = [&] (const std::vector<int>& counts) {
    double e = static_cast<double>(n) / bins, s = 0;
    for (int c : counts) {
      s += (c - e) * (c - e) / e;
    }
    return s;
  };
  // 9 degrees of freedom, 99.9th percentile = 27.88
  CHECK(chi2(radial) < 27.88);
  CHECK(chi2(angular) < 27.88);
}

TEST_CASE("position never leaves the region")
{
  auto rng = deriveStream(5, "mobility");
  RandomWaypoint w(rng, {10, -20}, 250, 30.0);
  for (int i = 0; i < 100'000; ++i) {
    w.step(0.010);
    REQUIRE(distance(w.position(), {10, -20}) <= 250 + 1e-9);
  }
}

namespace {

struct Feed
{
  Feed()
    : rng(deriveStream(10, "unused"))
    , walk(rng, {0, 0}, 1e6, 0.0, {10, 0})
    , ctl(sched, walk, {{0, 0}, {100, 0}}, {1, 1})
  {
    ctl.setHooks([&] (int ap) { log.push_back({toMicros(sched.now()), -ap - 1}); },
                 [&] (int ap) { log.push_back({toMicros(sched.now()), ap}); });
    ctl.attachToBest();
  }

  /// Evaluates @p pos at t = ms, after running the clock up to it.
  void
  at(int ms, Vec2 pos)
  {
    sched.runUntil(atMicros(ms * 1000));
    ctl.evaluate(pos);
  }

  RngStream rng;
  RandomWaypoint walk;
  Scheduler sched;
  HandoverController ctl;
  std::vector<std::pair<std::int64_t, int>> log;
};

} // namespace

TEST_CASE("better AP for 90 ms then worse again: no handover")
{
  Feed f;
  for (int ms = 10; ms <= 100; ms += 10) {
    f.at(ms, {90, 0});
  }
  f.at(110, {10, 0});
  f.at(200, {90, 0});
  f.sched.runUntil(atMicros(500'000));
  CHECK(f.log.size() == 1);
  CHECK(f.ctl.records().empty());
  CHECK(f.ctl.phase() == AttachPhase::Attached);
}

TEST_CASE("better AP for 100 ms: handover, new radio after the gap")
{
  Feed f;
  for (int ms = 10; ms <= 110; ms += 10) {
    f.at(ms, {90, 0});
  }
  CHECK(f.ctl.phase() == AttachPhase::HandoverGap);
  f.at(150, {90, 0}); // ignored during the gap
  f.sched.runUntil(atMicros(1'000'000));
  std::vector<std::pair<std::int64_t, int>> expected{{0, 0}, {110'000, -1}, {160'000, 1}};
  CHECK(f.log == expected);
  CHECK(f.ctl.currentAp() == 1);
  REQUIRE(f.ctl.records().size() == 1);
  CHECK_FALSE(f.ctl.records()[0].interAs);
}

TEST_CASE("persistence threshold and gap timing")
{
  // the host crosses the midpoint at x = 50 after 40 s, moving at 1 m/s
  auto rng = deriveStream(11, "line");
  Scheduler sched;
  RandomWaypoint walk(rng, {10, 0}, 1e6, 1.0, {10, 0});
  // force a deterministic direction by replacing the walk with a controlled
  // one: a huge region makes the first waypoint far away, so movement over a
  // few seconds is effectively straight; we instead test with explicit APs
  // placed along the chosen direction
  Vec2 dir = walk.waypoint() - walk.position();
  double len = norm(dir);
  Vec2 unit = (1.0 / len) * dir;
  Vec2 apNear = walk.position();
  Vec2 apFar = walk.position() + 2.0 * unit; // midpoint crossed after 1 s
  HandoverController ctl(sched, walk, {apNear, apFar}, {1, 2});
  std::vector<std::pair<std::int64_t, int>> log;
  ctl.setHooks([&] (int ap) { log.push_back({toMicros(sched.now()), -ap - 1}); },
               [&] (int ap) { log.push_back({toMicros(sched.now()), ap}); });
  ctl.start();
  sched.runUntil(atMicros(3'000'000));
  REQUIRE(log.size() == 3);
  CHECK(log[0] == std::pair<std::int64_t, int>{0, 0});
  // AP 1 becomes best at the first tick after 1 s (t = 1.01 s, when the
  // host is strictly closer to it); after 100 ms more the handover starts
  CHECK(log[1].second == -1);
  std::int64_t firstBetter = log[1].first - 100'000;
  CHECK(firstBetter >= 1'000'000);
  CHECK(firstBetter <= 1'010'000);
  CHECK(log[2] == std::pair<std::int64_t, int>{log[1].first + 50'000, 1});
  REQUIRE(ctl.records().size() == 1);
  CHECK(ctl.records()[0].interAs);
  CHECK(ctl.records()[0].fromAp == 0);
  CHECK(ctl.records()[0].toAp == 1);
}

TEST_CASE("handover classification and interarrivals")
{
  std::vector<HandoverRecord> recs{
    {atMicros(1'000'000), 0, 1, false},
    {atMicros(3'000'000), 1, 2, true},
    {atMicros(4'000'000), 2, 1, true},
    {atMicros(8'000'000), 1, 0, false},
  };
  auto c = classifyHandovers(recs);
  CHECK(c.intraCount == 2);
  CHECK(c.interCount == 2);
  CHECK(c.interFraction() == doctest::Approx(0.5));
  CHECK(c.all == std::vector<double>{2, 1, 4});
  CHECK(c.intra == std::vector<double>{7});
  CHECK(c.inter == std::vector<double>{1});
}

TEST_CASE("quantiles and ECDF")
{
  std::vector<double> xs{4, 1, 3, 2};
  CHECK(*quantile(xs, 0.0) == 1);
  CHECK(*quantile(xs, 1.0) == 4);
  CHECK(*quantile(xs, 0.5) == doctest::Approx(2.5));
  CHECK_FALSE(quantile({}, 0.5).has_value());
  auto cdf = empiricalCdf(xs);
  CHECK(cdf.back().cdf == 1.0);
  CHECK(cdf.front().x == 1);
}

TEST_CASE("uniform fits")
{
  auto rng = deriveStream(12, "fit");
  std::vector<double> u;
  for (int i = 0; i < 2000; ++i) {
    u.push_back(rng.uniform(2, 6));
  }
  auto mm = fitUniformMinimax(u);
  auto mo = fitUniformMoments(u);
  CHECK(mm.a == doctest::Approx(2).epsilon(0.05));
  CHECK(mm.b == doctest::Approx(6).epsilon(0.05));
  CHECK(ksDistance(u, mm) <= ksDistance(u, mo) + 1e-12);
  CHECK(ksDistance(u, mm) < 0.04);

  // oracle: brute-force grid search over (a, b) on a small skewed sample
  std::vector<double> s;
  for (int i = 0; i < 40; ++i) {
    s.push_back(rng.exponential(1.0));
  }
  auto fit = fitUniformMinimax(s);
  double ks = ksDistance(s, fit);
  double bestGrid = 1;
  for (double a = -1.0; a <= 1.0; a += 0.01) {
    for (double b = 1.0; b <= 6.0; b += 0.01) {
      bestGrid = std::min(bestGrid, ksDistance(s, {a, b}));
    }
  }
  CHECK(ks <= bestGrid + 0.01);
}
