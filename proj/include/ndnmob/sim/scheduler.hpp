#ifndef NDNMOB_SIM_SCHEDULER_HPP
#define NDNMOB_SIM_SCHEDULER_HPP

#include "ndnmob/sim/time.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <vector>

namespace ndnmob {

/// Refers to a scheduled event. A default-constructed handle refers to nothing.
class EventHandle
{
public:
  EventHandle() = default;

  /// Prevents the event from being dispatched. No-op if it already fired.
  void
  cancel() const noexcept
  {
    if (m_done) {
      *m_done = true;
    }
  }

  /// True until the event fires or is cancelled.
  bool
  isPending() const noexcept
  {
    return m_done && !*m_done;
  }

  SimTime
  fireAt() const noexcept
  {
    return m_fireAt;
  }

private:
  EventHandle(std::shared_ptr<bool> flag, SimTime at)
    : m_done(std::move(flag))
    , m_fireAt(at)
  {
  }

  friend class Scheduler;

private:
  std::shared_ptr<bool> m_done;
  SimTime m_fireAt{};
};

/**
 * Single-threaded discrete-event engine.
 *
 * Events are totally ordered by (fire time, insertion sequence), so two events
 * scheduled for the same instant run in the order they were scheduled. A
 * handler that schedules with zero delay gets the follow-up one microsecond
 * later, which keeps a self-rescheduling handler from spinning at one instant.
 */
class Scheduler
{
public:
  using Action = std::function<void()>;

  SimTime
  now() const noexcept
  {
    return m_now;
  }

  /// Schedules @p action to run at now() + @p delay. Throws std::logic_error if
  /// @p delay is negative.
  EventHandle
  schedule(Duration delay, Action action);

  /// Schedules @p action at absolute time @p at. Throws std::logic_error if
  /// @p at lies in the past.
  EventHandle
  scheduleAt(SimTime at, Action action);

  /// Dispatches every event with fire time <= @p end, then advances the clock
  /// to @p end. Returns the number of dispatched events.
  std::uint64_t
  runUntil(SimTime end);

  std::size_t
  pendingCount() const noexcept
  {
    return m_queue.size();
  }

  std::uint64_t
  dispatchedCount() const noexcept
  {
    return m_dispatched;
  }

private:
  struct Event
  {
    SimTime fireAt;
    std::uint64_t seq;
    Action action;
    std::shared_ptr<bool> done;
  };

  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const noexcept
    {
      return a.fireAt != b.fireAt ? a.fireAt > b.fireAt : a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  SimTime m_now = kSimStart;
  std::uint64_t m_nextSeq = 0;
  std::uint64_t m_dispatched = 0;
  bool m_inDispatch = false;
};

} // namespace ndnmob

#endif // NDNMOB_SIM_SCHEDULER_HPP
