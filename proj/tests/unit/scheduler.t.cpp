#include "ndnmob/sim/scheduler.hpp"

#include "doctest.h"

#include <vector>

using namespace ndnmob;
using namespace std::chrono_literals;

TEST_SUITE("Scheduler")
{

TEST_CASE("delay is added to the current time")
{
  Scheduler s;
  SimTime fired{};
  s.schedule(10ms, [&] { fired = s.now(); });
  CHECK(s.runUntil(atMicros(1'000'000)) == 1);
  CHECK(toMicros(fired) == 10'000);
}

TEST_CASE("equal fire times dispatch in insertion order")
{
  Scheduler s;
  std::vector<int> order;
  for (int i = 0; i < 5; ++i) {
    s.schedule(5ms, [&order, i] { order.push_back(i); });
  }
  s.runUntil(atMicros(5'000));
  CHECK(order == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("cancelled events never run")
{
  Scheduler s;
  bool ran = false;
  auto h = s.schedule(1ms, [&] { ran = true; });
  CHECK(h.isPending());
  h.cancel();
  CHECK_FALSE(h.isPending());
  CHECK(s.runUntil(atMicros(10'000)) == 0);
  CHECK_FALSE(ran);
}

TEST_CASE("empty queue still advances the clock")
{
  Scheduler s;
  CHECK(s.runUntil(atMicros(1'000'000)) == 0);
  CHECK(toMicros(s.now()) == 1'000'000);
}

TEST_CASE("the end bound is inclusive")
{
  Scheduler s;
  int n = 0;
  for (int ms : {1, 2, 3}) {
    s.schedule(std::chrono::milliseconds(ms), [&] { ++n; });
  }
  CHECK(s.runUntil(atMicros(2'000)) == 2);
  CHECK(n == 2);
  CHECK(s.pendingCount() == 1);
}

TEST_CASE("handlers may schedule follow-ups inside the horizon")
{
  Scheduler s;
  std::vector<std::int64_t> times;
  s.schedule(1ms, [&] {
    times.push_back(toMicros(s.now()));
    s.schedule(1ms, [&] { times.push_back(toMicros(s.now())); });
  });
  CHECK(s.runUntil(atMicros(5'000)) == 2);
  CHECK(times == std::vector<std::int64_t>{1'000, 2'000});
}

TEST_CASE("zero-delay self-scheduling advances at least one microsecond")
{
  Scheduler s;
  int n = 0;
  std::function<void()> tick = [&] {
    ++n;
    s.schedule(Duration::zero(), tick);
  };
  s.schedule(Duration::zero(), tick);
  s.runUntil(atMicros(100));
  // first at t=0, then t=1..100
  CHECK(n == 101);
}

TEST_CASE("scheduling into the past is an error")
{
  Scheduler s;
  s.runUntil(atMicros(1'000));
  CHECK_THROWS_AS(s.scheduleAt(atMicros(999), [] {}), std::logic_error);
  CHECK_THROWS_AS(s.schedule(Duration{-1}, [] {}), std::logic_error);
  CHECK_THROWS_AS(s.runUntil(atMicros(10)), std::logic_error);

  s.schedule(1ms, [&] { s.scheduleAt(atMicros(0), [] {}); });
  CHECK_THROWS_AS(s.runUntil(atMicros(5'000)), std::logic_error);
}

TEST_CASE("dispatch order is the total order on (time, seq)")
{
  Scheduler s;
  std::vector<std::pair<std::int64_t, int>> log;
  int seq = 0;
  // interleave insertions at decreasing times
  for (int t : {30, 10, 20, 10, 30, 20}) {
    int id = seq++;
    s.scheduleAt(atMicros(t), [&, id] { log.emplace_back(toMicros(s.now()), id); });
  }
  s.runUntil(atMicros(100));
  std::vector<std::pair<std::int64_t, int>> expected{{10, 1}, {10, 3}, {20, 2}, {20, 5}, {30, 0}, {30, 4}};
  CHECK(log == expected);
}

}
