#ifndef NDNMOB_MOBILITY_HANDOVER_HPP
#define NDNMOB_MOBILITY_HANDOVER_HPP

#include "ndnmob/mobility/waypoint.hpp"
#include "ndnmob/sim/scheduler.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ndnmob {

struct HandoverParams
{
  /// How long a better AP must stay better before the host moves.
  Duration persist = std::chrono::milliseconds(100);
  /// Connectivity gap between detaching and attaching.
  Duration gap = std::chrono::milliseconds(50);
  /// Position update period.
  Duration tick = std::chrono::milliseconds(10);
};

struct HandoverRecord
{
  SimTime at;
  int fromAp;
  int toAp;
  bool interAs;
};

enum class AttachPhase {
  Detached,
  Attached,
  HandoverGap,
};

/**
 * Drives one host's movement and AP attachment.
 *
 * Every tick the host moves, then compares signal quality across APs. Once an
 * AP other than the current one has been the best for the persistence time,
 * the current radio is switched off and, after the gap, the radio of the AP
 * that was best when the gap started is switched on. The owner reacts to
 * radio changes through the detach and attach hooks.
 */
class HandoverController
{
public:
  using RadioHook = std::function<void(int ap)>;

  HandoverController(Scheduler& sched, RandomWaypoint& walk, std::vector<Vec2> aps,
                     std::vector<int> asOfAp, HandoverParams params = {});

  void
  setHooks(RadioHook onDetach, RadioHook onAttach)
  {
    m_onDetach = std::move(onDetach);
    m_onAttach = std::move(onAttach);
  }

  /// Attaches to the best AP right away and starts the periodic updates.
  void
  start();

  AttachPhase
  phase() const noexcept
  {
    return m_phase;
  }

  int
  currentAp() const noexcept
  {
    return m_current;
  }

  const std::vector<HandoverRecord>&
  records() const noexcept
  {
    return m_records;
  }

  const RandomWaypoint&
  walk() const noexcept
  {
    return m_walk;
  }

  /// Attaches to the AP that is best at the walk's current position.
  void
  attachToBest();

  /// One position update followed by evaluate(); start() runs it every tick.
  void
  tick();

  /// Handover decision for the host being at @p pos now. Ignored unless
  /// attached.
  void
  evaluate(Vec2 pos);

private:
  void
  schedulePeriodic();

  void
  beginHandover(int target);

  void
  finishHandover(int target);

private:
  Scheduler& m_sched;
  RandomWaypoint& m_walk;
  std::vector<Vec2> m_aps;
  std::vector<int> m_asOfAp;
  HandoverParams m_params;
  RadioHook m_onDetach;
  RadioHook m_onAttach;

  AttachPhase m_phase = AttachPhase::Detached;
  int m_current = -1;
  std::optional<int> m_candidate;
  SimTime m_candidateSince{};
  std::vector<HandoverRecord> m_records;
};

} // namespace ndnmob

#endif // NDNMOB_MOBILITY_HANDOVER_HPP
