#include "ndnmob/mobility/handover.hpp"

#include <stdexcept>

namespace ndnmob {

HandoverController::HandoverController(Scheduler& sched, RandomWaypoint& walk,
                                       std::vector<Vec2> aps, std::vector<int> asOfAp,
                                       HandoverParams params)
  : m_sched(sched)
  , m_walk(walk)
  , m_aps(std::move(aps))
  , m_asOfAp(std::move(asOfAp))
  , m_params(params)
{
  if (m_aps.empty() || m_aps.size() != m_asOfAp.size()) {
    throw std::invalid_argument("handover controller needs one AS id per AP");
  }
  if (m_params.tick <= Duration::zero() || m_params.gap < Duration::zero() ||
      m_params.persist < Duration::zero()) {
    throw std::invalid_argument("invalid handover timing parameters");
  }
}

void
HandoverController::start()
{
  attachToBest();
  schedulePeriodic();
}

void
HandoverController::attachToBest()
{
  m_current = bestAccessPoint(m_walk.position(), m_aps);
  m_phase = AttachPhase::Attached;
  if (m_onAttach) {
    m_onAttach(m_current);
  }
}

void
HandoverController::schedulePeriodic()
{
  m_sched.schedule(m_params.tick, [this] {
    tick();
    schedulePeriodic();
  });
}

void
HandoverController::tick()
{
  m_walk.step(toSeconds(m_params.tick));
  evaluate(m_walk.position());
}

void
HandoverController::evaluate(Vec2 pos)
{
  if (m_phase != AttachPhase::Attached) {
    return;
  }
  int best = bestAccessPoint(pos, m_aps);
  if (best == m_current) {
    m_candidate.reset();
    return;
  }
  if (m_candidate != best) {
    m_candidate = best;
    m_candidateSince = m_sched.now();
  }
  if (m_sched.now() - m_candidateSince >= m_params.persist) {
    beginHandover(best);
  }
}

void
HandoverController::beginHandover(int target)
{
  int from = m_current;
  m_records.push_back({m_sched.now(), from, target, m_asOfAp[from] != m_asOfAp[target]});
  m_phase = AttachPhase::HandoverGap;
  m_candidate.reset();
  if (m_onDetach) {
    m_onDetach(from);
  }
  m_sched.schedule(m_params.gap, [this, target] { finishHandover(target); });
}

void
HandoverController::finishHandover(int target)
{
  m_current = target;
  m_phase = AttachPhase::Attached;
  if (m_onAttach) {
    m_onAttach(target);
  }
}

} // namespace ndnmob
