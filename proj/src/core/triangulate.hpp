#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "core/deadline.hpp"
#include "core/systems.hpp"
#include "core/trace.hpp"

namespace monomtest {

enum class EagerVerdict { Keep, Prune, AnswerFound };

struct ResourceLimits {
    double timeout_seconds = -1.0;  // < 0: unlimited
    std::uint64_t max_systems = 0;  // 0: unlimited
};

template <class Field>
struct TriangulateOptions {
    int jobs = 1;  // 1 = deterministic single worker, LIFO
    ResourceLimits limits;
    bool expand_g_checks = false;
    TraceSink trace;
    NameTable names;
};

template <class Field>
struct TracedSystem {
    SemiTriSystem<Field> sys;
    std::uint64_t id;
};

template <class Field>
struct TriangulateOutcome {
    std::vector<TracedSystem<Field>> outputs;  // in finalization order
    bool answer_found = false;
};

// Callback run on every system that becomes triangular (Keep it, Prune it,
// or abort the whole computation). Must be safe to call concurrently when
// jobs > 1.
template <class Field>
using EagerCallback =
    std::function<EagerVerdict(const SemiTriSystem<Field>&, std::uint64_t id)>;

namespace detail {

template <class Field>
class TriangulateDriver {
public:
    using Sys = SemiTriSystem<Field>;
    using Item = TracedSystem<Field>;

    TriangulateDriver(const TriangulateOptions<Field>& opt, EagerCallback<Field> eager)
        : opt_(opt), eager_(std::move(eager)), start_(std::chrono::steady_clock::now()) {}

    TriangulateOutcome<Field> run(TriangleMush<Field> input) {
        for (auto& s : input.systems) push_new(std::move(s));
        if (opt_.jobs <= 1) {
            run_single();
        } else {
            run_parallel(opt_.jobs);
        }
        if (error_) std::rethrow_exception(error_);
        TriangulateOutcome<Field> out;
        out.outputs = std::move(outputs_);
        out.answer_found = answer_found_.load();
        return out;
    }

private:
    void emit(TraceRecord r) {
        if (!opt_.trace) return;
        std::lock_guard<std::mutex> lk(trace_mutex_);
        opt_.trace(r);
    }

    std::uint64_t push_new(Sys sys) {
        std::uint64_t id = next_id_.fetch_add(1);
        count_system_created();
        ++created_;
        {
            std::lock_guard<std::mutex> lk(mutex_);
            stack_.push_back(Item{std::move(sys), id});
        }
        cv_.notify_one();
        return id;
    }

    void check_limits() {
        if (opt_.limits.timeout_seconds >= 0) {
            auto elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (elapsed > opt_.limits.timeout_seconds)
                throw ResourceError("timeout", "triangulation time limit exceeded");
        }
        if (opt_.limits.max_systems > 0 && created_.load() > opt_.limits.max_systems)
            throw ResourceError("oom", "triangulation system limit exceeded");
    }

    void finalize(Item item) {
        emit({"triangular", static_cast<std::int64_t>(item.id), {}, {}});
        EagerVerdict v = EagerVerdict::Keep;
        if (eager_) v = eager_(item.sys, item.id);
        if (v == EagerVerdict::AnswerFound) {
            answer_found_.store(true);
            cancel_.store(true);
            cv_.notify_all();
            return;
        }
        if (v == EagerVerdict::Keep) {
            std::lock_guard<std::mutex> lk(output_mutex_);
            outputs_.push_back(std::move(item));
        }
    }

    // One rewriting step of the MakeTriangular loop.
    void step(Item item) {
        Sys& s = item.sys;
        const std::int64_t id = static_cast<std::int64_t>(item.id);
        if (s.progress == s.nvars) {
            finalize(std::move(item));
            return;
        }

        auto reduced = reduce_set(s.square);
        if (reduced != s.square) {
            emit({"reduce", id, {item.id}, {{"size", std::to_string(reduced.size())}}});
            s.square = std::move(reduced);
        }

        if (s.is_dead()) {
            // unsatisfiable; fast-forward to k = r, never process again
            s.progress = s.nvars;
            emit({"prune-dead", id, {item.id}, {}});
            finalize(std::move(item));
            return;
        }

        const VarIndex v = s.progress + 1;
        std::vector<std::size_t> positive;
        for (std::size_t i = 0; i < s.square.size(); ++i)
            if (s.square[i].deg_in(v) > 0) positive.push_back(i);

        if (positive.size() >= 2) {
            split_division(std::move(item), positive);
        } else if (positive.size() == 1) {
            const auto& f = s.square[positive.front()];
            // structural check only: a certificate found here must stay
            // recognizable after the factor list grows in descendants
            if (s.ineq.divides_subproduct(f.lc_in(v), /*allow_expand=*/false)) {
                auto mush = op_sort(s, f);
                std::uint64_t nid = push_new(std::move(mush.systems.front()));
                emit({"sort", id, {nid}, {}});
            } else {
                auto mush = op_last_poly(s, f);
                std::vector<std::uint64_t> ids;
                ids.reserve(mush.systems.size());
                for (auto& br : mush.systems) ids.push_back(push_new(std::move(br)));
                emit({"last-poly", id, ids, {}});
            }
        } else {
            auto mush = op_advance(s);
            std::uint64_t nid = push_new(std::move(mush.systems.front()));
            emit({"advance", id, {nid}, {}});
        }
    }

    // Algorithm step for two polynomials involving T_{k+1}: case-split on
    // the divisor's leading coefficient, then pseudo-divide. Pick h with
    // minimal T_{k+1}-degree (ties: fewer terms, then storage order), f
    // likewise among the rest.
    void split_division(Item item, const std::vector<std::size_t>& positive) {
        Sys& s = item.sys;
        const VarIndex v = s.progress + 1;
        auto better = [&](std::size_t a, std::size_t b) {
            int da = s.square[a].deg_in(v), db = s.square[b].deg_in(v);
            if (da != db) return da < db;
            return s.square[a].terms().size() < s.square[b].terms().size();
        };
        std::size_t hi = positive.front();
        for (std::size_t idx : positive)
            if (idx != hi && better(idx, hi)) hi = idx;
        std::size_t fi = hi == positive.front() ? positive[1] : positive.front();
        for (std::size_t idx : positive)
            if (idx != hi && idx != fi && better(idx, fi)) fi = idx;

        const auto f = s.square[fi];
        const auto h = s.square[hi];
        auto pd = poly_pseudo_div(f, h, v);
        Poly<Field> b = h.lc_in(v);
        Poly<Field> u = strip_scalar_content(pd.u);

        // S': remainder branch, g gains the factor b
        Sys sp = s;
        sp.square.erase(std::find(sp.square.begin(), sp.square.end(), f));
        sp.insert_square(u);
        sp.ineq = s.ineq.extended(b);
        // S'': b adjoined as an equation, g unchanged
        Sys spp = s;
        spp.insert_square(b);
#ifndef NDEBUG
        sp.validate(opt_.expand_g_checks);
        spp.validate(opt_.expand_g_checks);
#endif
        std::uint64_t id_sp = push_new(std::move(sp));
        std::uint64_t id_spp = push_new(std::move(spp));
        emit({"division",
              static_cast<std::int64_t>(item.id),
              {id_sp, id_spp},
              {{"rem", u.to_string(opt_.names)}, {"b", b.to_string(opt_.names)}}});
    }

    DeadlineScope make_scope() const {
        if (opt_.limits.timeout_seconds < 0) return DeadlineScope{};
        return DeadlineScope(start_ +
                             std::chrono::duration_cast<Deadline::Clock::duration>(
                                 std::chrono::duration<double>(opt_.limits.timeout_seconds)));
    }

    void run_single() {
        auto scope = make_scope();
        try {
            while (!cancel_.load()) {
                check_limits();
                std::optional<Item> item;
                {
                    std::lock_guard<std::mutex> lk(mutex_);
                    if (stack_.empty()) break;
                    item = std::move(stack_.back());
                    stack_.pop_back();
                }
                step(std::move(*item));
            }
        } catch (...) {
            error_ = std::current_exception();
        }
    }

    void run_parallel(int jobs) {
        auto worker = [&]() {
            auto scope = make_scope();
            std::unique_lock<std::mutex> lk(mutex_);
            while (true) {
                cv_.wait(lk, [&] {
                    return cancel_.load() || !stack_.empty() || active_ == 0;
                });
                if (cancel_.load()) return;
                if (stack_.empty()) {
                    if (active_ == 0) return;
                    continue;
                }
                Item item = std::move(stack_.back());
                stack_.pop_back();
                ++active_;
                lk.unlock();
                try {
                    check_limits();
                    step(std::move(item));
                } catch (...) {
                    std::lock_guard<std::mutex> elk(error_mutex_);
                    if (!error_) error_ = std::current_exception();
                    cancel_.store(true);
                    cv_.notify_all();
                }
                lk.lock();
                --active_;
                if (stack_.empty() && active_ == 0) cv_.notify_all();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const TriangulateOptions<Field>& opt_;
    EagerCallback<Field> eager_;
    std::chrono::steady_clock::time_point start_;

    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<Item> stack_;
    int active_ = 0;

    std::mutex output_mutex_;
    std::vector<Item> outputs_;

    std::mutex trace_mutex_;
    std::mutex error_mutex_;
    std::exception_ptr error_;

    std::atomic<std::uint64_t> next_id_{0};
    std::atomic<std::uint64_t> created_{0};
    std::atomic<bool> cancel_{false};
    std::atomic<bool> answer_found_{false};
};

}  // namespace detail

// Algorithm MakeTriangular: drive a triangle mush to an equivalent mush of
// triangular systems. Per system and iteration: reduce F_square; with two
// or more polynomials in T_{k+1}, pseudo-divide and split; with exactly
// one, sort it when its leading coefficient divides g, otherwise apply the
// last-polynomial split; otherwise advance k. Dead systems are
// fast-forwarded to k = r. The eager callback may prune triangular systems
// or abort the whole run.
template <class Field>
TriangulateOutcome<Field> make_triangular_traced(TriangleMush<Field> input,
                                                 const TriangulateOptions<Field>& opt,
                                                 EagerCallback<Field> eager = nullptr) {
    detail::TriangulateDriver<Field> driver(opt, std::move(eager));
    return driver.run(std::move(input));
}

template <class Field>
TriangleMush<Field> make_triangular(TriangleMush<Field> input,
                                    const TriangulateOptions<Field>& opt = {},
                                    EagerCallback<Field> eager = nullptr) {
    auto out = make_triangular_traced(std::move(input), opt, std::move(eager));
    TriangleMush<Field> mush;
    mush.systems.reserve(out.outputs.size());
    for (auto& item : out.outputs) mush.systems.push_back(std::move(item.sys));
    return mush;
}

}  // namespace monomtest
