#include "ndnmob/sim/random.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace ndnmob;

TEST_SUITE("RngStream")
{

TEST_CASE("same seed and label give the same sequence")
{
  auto a = deriveStream(42, "mobility");
  auto b = deriveStream(42, "mobility");
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.nextU64() == b.nextU64());
  }
}

TEST_CASE("labels separate streams")
{
  auto a = deriveStream(42, "mobility");
  auto b = deriveStream(42, "traffic");
  int same = 0;
  for (int i = 0; i < 1000; ++i) {
    same += a.nextU64() == b.nextU64();
  }
  CHECK(same == 0);
  CHECK(a.seed() != b.seed());
}

TEST_CASE("mt19937_64 engine matches the standard's reference value")
{
  // the 10000th output for the default seed is fixed by the standard
  RngStream r("x", 5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) {
    v = r.nextU64();
  }
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("uniform01 mean over 1e6 draws")
{
  auto r = deriveStream(7, "uniform");
  double sum = 0;
  double lo = 1, hi = 0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) {
    double u = r.uniform01();
    sum += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(std::abs(sum / n - 0.5) < 0.01);
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("exponential draws have the requested mean and unit CV")
{
  auto r = deriveStream(11, "traffic");
  const int n = 100'000;
  double sum = 0, sumSq = 0;
  for (int i = 0; i < n; ++i) {
    double x = r.exponential(0.020);
    sum += x;
    sumSq += x * x;
  }
  double mean = sum / n;
  double sd = std::sqrt(sumSq / n - mean * mean);
  CHECK(std::abs(mean - 0.020) / 0.020 < 0.02);
  CHECK(std::abs(sd / mean - 1.0) < 0.03);
}

TEST_CASE("mix64 is SplitMix64")
{
  // first output of SplitMix64 seeded with 0
  CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
}

}
