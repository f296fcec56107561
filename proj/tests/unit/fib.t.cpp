#include "ndnmob/check/reference-models.hpp"
#include "ndnmob/ndn/fib.hpp"
#include "ndnmob/sim/random.hpp"

#include "doctest.h"

using namespace ndnmob;

TEST_CASE("lpm examples")
{
  Fib fib;
  fib.addNextHop(Name("/as3/prod"), 1);
  REQUIRE(fib.findLongestPrefixMatch(Name("/as3/prod/stream/seg_5")) != nullptr);
  CHECK(fib.findLongestPrefixMatch(Name("/as3/prod/stream/seg_5"))->prefix() == Name("/as3/prod"));

  Fib f2;
  f2.addNextHop(Name("/a"), 1);
  f2.addNextHop(Name("/a/b"), 2);
  CHECK(f2.findLongestPrefixMatch(Name("/a/b/c"))->prefix() == Name("/a/b"));

  Fib f3;
  f3.addNextHop(Name("/a/b"), 1);
  CHECK(f3.findLongestPrefixMatch(Name("/a/c")) == nullptr);
}

TEST_CASE("next hops are ranked by cost then face id")
{
  FibEntry e(Name("/p"));
  e.addNextHop(5, 10);
  e.addNextHop(3, 10);
  e.addNextHop(9, 1);
  e.addNextHop(5, 0); // update moves it to the front
  std::vector<FaceId> order;
  for (const auto& nh : e.nextHops()) {
    order.push_back(nh.face);
  }
  CHECK(order == std::vector<FaceId>{5, 9, 3});
  CHECK(e.removeNextHop(9));
  CHECK_FALSE(e.removeNextHop(9));
}

TEST_CASE("erase prunes but keeps other entries")
{
  Fib fib;
  fib.insert(Name("/a"));
  fib.insert(Name("/a/b/c"));
  CHECK(fib.size() == 2);
  CHECK_FALSE(fib.erase(Name("/a/b")));
  CHECK(fib.erase(Name("/a/b/c")));
  CHECK(fib.size() == 1);
  CHECK(fib.findLongestPrefixMatch(Name("/a/b/c/d"))->prefix() == Name("/a"));
  CHECK(fib.findExactMatch(Name("/a/b/c")) == nullptr);
}

TEST_CASE("root prefix matches everything")
{
  Fib fib;
  fib.insert(Name());
  CHECK(fib.findLongestPrefixMatch(Name("/anything/at/all"))->prefix().empty());
}

TEST_CASE("lpm agrees with a brute-force scan on random tables")
{
  auto rng = deriveStream(2024, "fib-property");
  auto comp = [&] { return "c" + std::to_string(rng.nextU64() % 4); };
  for (int round = 0; round < 200; ++round) {
    Fib fib;
    std::vector<Name> prefixes;
    int n = 1 + static_cast<int>(rng.nextU64() % 60);
    for (int i = 0; i < n; ++i) {
      Name p;
      int len = static_cast<int>(rng.nextU64() % 5);
      for (int k = 0; k < len; ++k) {
        p.append(comp());
      }
      fib.insert(p);
      if (std::find(prefixes.begin(), prefixes.end(), p) == prefixes.end()) {
        prefixes.push_back(p);
      }
    }
    CHECK(fib.size() == prefixes.size());
    for (int q = 0; q < 20; ++q) {
      Name name;
      int len = static_cast<int>(rng.nextU64() % 6);
      for (int k = 0; k < len; ++k) {
        name.append(comp());
      }
      auto expected = check::bruteForceLpm(prefixes, name);
      const FibEntry* got = fib.findLongestPrefixMatch(name);
      REQUIRE(expected.has_value() == (got != nullptr));
      if (got != nullptr) {
        REQUIRE(got->prefix() == *expected);
      }
    }
  }
}
