#include "ndnmob/sim/scheduler.hpp"

#include <stdexcept>
#include <string>

namespace ndnmob {

EventHandle
Scheduler::schedule(Duration delay, Action action)
{
  if (delay < Duration::zero()) {
    throw std::logic_error("cannot schedule an event " + std::to_string(-delay.count()) +
                           " us in the past");
  }
  if (delay == Duration::zero() && m_inDispatch) {
    delay = Duration{1};
  }
  return scheduleAt(m_now + delay, std::move(action));
}

EventHandle
Scheduler::scheduleAt(SimTime at, Action action)
{
  if (at < m_now) {
    throw std::logic_error("cannot schedule an event at t=" + std::to_string(toMicros(at)) +
                           " us before now=" + std::to_string(toMicros(m_now)) + " us");
  }
  auto flag = std::make_shared<bool>(false);
  m_queue.push(Event{at, m_nextSeq++, std::move(action), flag});
  return EventHandle(std::move(flag), at);
}

std::uint64_t
Scheduler::runUntil(SimTime end)
{
  if (end < m_now) {
    throw std::logic_error("runUntil target lies in the past");
  }

  std::uint64_t count = 0;
  while (!m_queue.empty() && m_queue.top().fireAt <= end) {
    // priority_queue::top() is const; the event is moved out before pop()
    Event ev = std::move(const_cast<Event&>(m_queue.top()));
    m_queue.pop();
    if (*ev.done) {
      continue;
    }
    m_now = ev.fireAt;
    *ev.done = true;
    m_inDispatch = true;
    ev.action();
    m_inDispatch = false;
    ++count;
  }
  m_now = end;
  m_dispatched += count;
  return count;
}

} // namespace ndnmob
