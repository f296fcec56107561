#include "ndnmob/sim/time.hpp"

#include <cmath>

namespace ndnmob {

Duration
fromSeconds(double seconds)
{
  return Duration{static_cast<std::int64_t>(std::llround(seconds * 1e6))};
}

} // namespace ndnmob
