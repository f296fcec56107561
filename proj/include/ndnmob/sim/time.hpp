#ifndef NDNMOB_SIM_TIME_HPP
#define NDNMOB_SIM_TIME_HPP

#include <chrono>
#include <cstdint>

namespace ndnmob {

/// Virtual clock of the simulator. Time zero is the start of a run and every
/// instant is an exact number of microseconds.
struct SimClock
{
  using rep = std::int64_t;
  using period = std::micro;
  using duration = std::chrono::duration<rep, period>;
  using time_point = std::chrono::time_point<SimClock>;
  static constexpr bool is_steady = true;
};

using Duration = SimClock::duration;
using SimTime = SimClock::time_point;

constexpr SimTime kSimStart{};

constexpr std::int64_t
toMicros(SimTime t) noexcept
{
  return t.time_since_epoch().count();
}

constexpr double
toSeconds(Duration d) noexcept
{
  return static_cast<double>(d.count()) * 1e-6;
}

constexpr double
toSeconds(SimTime t) noexcept
{
  return toSeconds(t.time_since_epoch());
}

constexpr SimTime
atMicros(std::int64_t us) noexcept
{
  return SimTime{Duration{us}};
}

/// Rounds a floating-point number of seconds to the nearest microsecond.
Duration
fromSeconds(double seconds);

} // namespace ndnmob

#endif // NDNMOB_SIM_TIME_HPP
