#pragma once

#include <atomic>
#include <cstdint>

namespace monomtest {

// Process-wide operation counters. Increments are relaxed atomics: totals
// are exact, no ordering is promised between concurrent workers.
struct Counters {
    std::atomic<std::uint64_t> additions{0};
    std::atomic<std::uint64_t> multiplications{0};
    std::atomic<std::uint64_t> pseudo_divisions{0};
    std::atomic<std::uint64_t> systems_created{0};
    std::atomic<std::uint64_t> minpoly_calls{0};
};

inline Counters& counters() {
    static Counters instance;
    return instance;
}

struct CounterSnapshot {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t pseudo_divisions = 0;
    std::uint64_t systems_created = 0;
    std::uint64_t minpoly_calls = 0;

    CounterSnapshot operator-(const CounterSnapshot& o) const {
        return {additions - o.additions,
                multiplications - o.multiplications,
                pseudo_divisions - o.pseudo_divisions,
                systems_created - o.systems_created,
                minpoly_calls - o.minpoly_calls};
    }
};

inline CounterSnapshot snapshot_counters() {
    const Counters& c = counters();
    return {c.additions.load(std::memory_order_relaxed),
            c.multiplications.load(std::memory_order_relaxed),
            c.pseudo_divisions.load(std::memory_order_relaxed),
            c.systems_created.load(std::memory_order_relaxed),
            c.minpoly_calls.load(std::memory_order_relaxed)};
}

inline void count_addition() {
    counters().additions.fetch_add(1, std::memory_order_relaxed);
}

inline void count_multiplication() {
    counters().multiplications.fetch_add(1, std::memory_order_relaxed);
}

inline void count_pseudo_division() {
    counters().pseudo_divisions.fetch_add(1, std::memory_order_relaxed);
}

inline void count_system_created() {
    counters().systems_created.fetch_add(1, std::memory_order_relaxed);
}

inline void count_minpoly_call() {
    counters().minpoly_calls.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace monomtest
