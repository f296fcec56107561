#include "ndnmob/ndn/face.hpp"

namespace ndnmob {

std::string_view
toString(FaceColor color) noexcept
{
  switch (color) {
    case FaceColor::Green:
      return "GREEN";
    case FaceColor::Yellow:
      return "YELLOW";
    case FaceColor::Red:
      return "RED";
  }
  return "UNKNOWN";
}

void
RttEstimator::addMeasurement(Duration rtt) noexcept
{
  // integer arithmetic on microseconds: rttvar' = 3/4 rttvar + 1/4 |srtt - r|,
  // srtt' = 7/8 srtt + 1/8 r
  auto err = m_srtt - rtt;
  if (err < Duration::zero()) {
    err = -err;
  }
  m_rttVar = Duration{(3 * m_rttVar.count() + err.count() + 2) / 4};
  m_srtt = Duration{(7 * m_srtt.count() + rtt.count() + 4) / 8};
  ++m_samples;
}

} // namespace ndnmob
