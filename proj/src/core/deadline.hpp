#pragma once

#include <chrono>

#include "core/errors.hpp"

namespace monomtest {

// Cooperative per-thread deadline. Long-running inner loops poll it so a
// wall-clock limit interrupts work inside a single reduction or
// minimal-polynomial computation, not just between worklist steps.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    static Deadline& current() {
        thread_local Deadline d;
        return d;
    }

    bool active() const { return active_; }
    Clock::time_point at() const { return at_; }

    void set(Clock::time_point at) {
        at_ = at;
        active_ = true;
    }
    void clear() { active_ = false; }

    bool expired() const { return active_ && Clock::now() > at_; }

private:
    Clock::time_point at_{};
    bool active_ = false;
};

inline void check_deadline() {
    if (Deadline::current().expired())
        throw ResourceError("timeout", "wall-clock limit exceeded");
}

// Gates the actual clock read to every 64th call.
inline void poll_deadline() {
    thread_local unsigned tick = 0;
    if ((++tick & 63u) != 0) return;
    check_deadline();
}

// RAII scope: activates a deadline on this thread, restores the previous
// one on exit. Negative seconds leave the current state untouched.
class DeadlineScope {
public:
    explicit DeadlineScope(double seconds_from_now) {
        if (seconds_from_now < 0) return;
        engage(Deadline::Clock::now() +
               std::chrono::duration_cast<Deadline::Clock::duration>(
                   std::chrono::duration<double>(seconds_from_now)));
    }

    explicit DeadlineScope(Deadline::Clock::time_point at) { engage(at); }

    // inert scope
    DeadlineScope() = default;

    ~DeadlineScope() {
        if (!engaged_) return;
        if (prev_active_)
            Deadline::current().set(prev_at_);
        else
            Deadline::current().clear();
    }

    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
    void engage(Deadline::Clock::time_point at) {
        Deadline& d = Deadline::current();
        prev_active_ = d.active();
        prev_at_ = d.at();
        d.set(at);
        engaged_ = true;
    }

    bool engaged_ = false;
    bool prev_active_ = false;
    Deadline::Clock::time_point prev_at_{};
};

}  // namespace monomtest
