#include "ndnmob/fw/strategy.hpp"
#include "ndnmob/sim/random.hpp"

#include "doctest.h"

#include <algorithm>

using namespace ndnmob;
using namespace std::chrono_literals;

namespace {

Face
makeFace(FaceId id, FaceColor color, Duration srtt = RttEstimator::kInitialSrtt)
{
  Face f;
  f.id = id;
  f.color = color;
  if (color == FaceColor::Red) {
    f.status = FaceStatus::Disabled;
  }
  // drive the estimator close to srtt (integer rounding may leave a few us)
  for (int i = 0; i < 300; ++i) {
    f.rtt.addMeasurement(srtt);
  }
  return f;
}

std::vector<const Face*>
ptrs(const std::vector<Face>& faces)
{
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    out.push_back(&f);
  }
  return out;
}

} // namespace

TEST_CASE("flooding takes green and yellow")
{
  std::vector<Face> fs{makeFace(1, FaceColor::Green), makeFace(2, FaceColor::Yellow),
                      makeFace(3, FaceColor::Red)};
  CHECK(selectOutFaces(StrategyKind::Flooding, NodeZone::Core, ptrs(fs)) ==
        std::vector<FaceId>{1, 2});
}

TEST_CASE("smart flooding picks the fastest green face")
{
  std::vector<Face> fs{makeFace(1, FaceColor::Green, 50ms), makeFace(2, FaceColor::Green, 80ms),
                      makeFace(3, FaceColor::Yellow)};
  CHECK(selectOutFaces(StrategyKind::SmartFlooding, NodeZone::Core, ptrs(fs)) ==
        std::vector<FaceId>{1});
}

TEST_CASE("smart flooding floods yellow when nothing is green")
{
  std::vector<Face> fs{makeFace(2, FaceColor::Yellow), makeFace(3, FaceColor::Yellow)};
  CHECK(selectOutFaces(StrategyKind::SmartFlooding, NodeZone::Core, ptrs(fs)) ==
        std::vector<FaceId>{2, 3});
}

TEST_CASE("semi flooding depends on the zone")
{
  std::vector<Face> fs{makeFace(1, FaceColor::Green), makeFace(2, FaceColor::Yellow)};
  CHECK(selectOutFaces(StrategyKind::SemiFlooding, NodeZone::Access, ptrs(fs)) ==
        std::vector<FaceId>{1, 2});
  CHECK(selectOutFaces(StrategyKind::SemiFlooding, NodeZone::Core, ptrs(fs)) ==
        std::vector<FaceId>{1});
}

TEST_CASE("the in-face is never selected")
{
  std::vector<Face> fs{makeFace(1, FaceColor::Yellow), makeFace(2, FaceColor::Yellow)};
  CHECK(selectOutFaces(StrategyKind::Flooding, NodeZone::Core, ptrs(fs), 1) ==
        std::vector<FaceId>{2});
  CHECK(selectOutFaces(StrategyKind::SmartFlooding, NodeZone::Core, ptrs(fs), 2) ==
        std::vector<FaceId>{1});
}

TEST_CASE("best-green choice is independent of candidate order")
{
  auto rng = deriveStream(5, "strategy-order");
  for (int round = 0; round < 200; ++round) {
    std::vector<Face> fs;
    int n = 1 + static_cast<int>(rng.nextU64() % 5);
    for (int i = 0; i < n; ++i) {
      auto color = static_cast<FaceColor>(rng.nextU64() % 3);
      auto srtt = std::chrono::milliseconds(10 * (1 + rng.nextU64() % 3));
      fs.push_back(makeFace(static_cast<FaceId>(i), color, srtt));
    }

    // oracle: lexicographic minimum of (srtt, id) over usable greens
    std::vector<FaceId> expected;
    const Face* best = nullptr;
    for (const auto& f : fs) {
      if (f.color == FaceColor::Green &&
          (!best || std::make_pair(f.rtt.srtt(), f.id) < std::make_pair(best->rtt.srtt(), best->id))) {
        best = &f;
      }
    }
    if (best) {
      expected = {best->id};
    }
    else {
      for (const auto& f : fs) {
        if (f.color == FaceColor::Yellow) {
          expected.push_back(f.id);
        }
      }
    }

    auto order = ptrs(fs);
    std::sort(order.begin(), order.end());
    do {
      auto got = selectOutFaces(StrategyKind::SmartFlooding, NodeZone::Core, order);
      REQUIRE(got == expected);
      auto size = got.size();
      bool ok = size == 0 || size == 1 ||
                size == static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [] (auto& f) {
                  return f.color == FaceColor::Yellow;
                }));
      REQUIRE(ok);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("color transitions")
{
  Face f = makeFace(1, FaceColor::Yellow);
  onDataSuccess(f);
  CHECK(f.color == FaceColor::Green);
  onDataSuccess(f);
  CHECK(f.color == FaceColor::Green);
  onTimeoutOrNack(f);
  CHECK(f.color == FaceColor::Yellow);
  onTimeoutOrNack(f);
  CHECK(f.color == FaceColor::Yellow);
  onLinkDown(f);
  CHECK(f.color == FaceColor::Red);
  CHECK_FALSE(f.isEnabled());
  onTimeoutOrNack(f);
  CHECK(f.color == FaceColor::Red);
  onDataSuccess(f);
  CHECK(f.color == FaceColor::Red);
  onLinkUp(f);
  CHECK(f.color == FaceColor::Yellow);
  CHECK(f.isEnabled());
}

TEST_CASE("strategy names round-trip")
{
  for (auto k : {StrategyKind::Flooding, StrategyKind::SmartFlooding, StrategyKind::SemiFlooding}) {
    CHECK(parseStrategyKind(toString(k)) == k);
  }
  CHECK_THROWS_AS(parseStrategyKind("best-route"), std::invalid_argument);
}

TEST_CASE("rtt estimator ewma")
{
  RttEstimator est;
  CHECK(est.srtt() == 200ms);
  est.addMeasurement(80ms);
  // oracle computed independently in floating point
  double srtt = 0.875 * 200.0 + 0.125 * 80.0;
  double var = 0.75 * 100.0 + 0.25 * 120.0;
  CHECK(est.srtt() == std::chrono::microseconds(static_cast<long>(srtt * 1000)));
  CHECK(est.rttVar() == std::chrono::microseconds(static_cast<long>(var * 1000)));
  CHECK(est.rto() == est.srtt() + 4 * est.rttVar());
}
