#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/quotient.hpp"
#include "core/triangulate.hpp"

namespace monomtest {

template <class Field>
struct SolvableOutcome {
    bool solvable = false;
    std::string minpoly;  // after monic normalization; empty for dead systems
};

// Solvability of a triangular system over the algebraic closure: dead
// constants, then swap the field, make the dense image monic, and test
// whether the minimal polynomial of the inequation class is a monomial.
template <class Field>
SolvableOutcome<Field> is_solvable(const SemiTriSystem<Field>& s, const NameTable& names = {}) {
    if (!s.is_triangular())
        throw Error(ErrorKind::Contract, "solvability test requires a triangular system");
    if (s.is_dead()) return {false, ""};

    EmbeddedSystem<Field> emb = embed(s);
    EmbeddedSystem<Field> monic = make_monic(std::move(emb));
    QuotientRing<Field> ring(monic.emb.coeff_field, monic.gens);
    QElem<Field> gbar = ring.one();
    for (const auto& gf : monic.g_factors) gbar = ring.mul(gbar, ring.normal_form(gf));
    MinPoly<Field> p = minimal_polynomial(gbar, ring);
    return {!p.is_monomial(), p.to_string(names)};
}

template <class Field>
struct CheckOptions {
    bool eager = true;  // test solvability as soon as a system becomes triangular
    int jobs = 1;
    ResourceLimits limits;
    bool expand_g_checks = false;
    TraceSink trace;
    NameTable names;
    // custom inequation factors (the general solvability problem); empty
    // means the containment seed T_1 * ... * T_r
    std::vector<Poly<Field>> seed_ineq;
};

struct CheckResult {
    bool contains = false;               // true iff the ideal contains a monomial
    CounterSnapshot ops;                 // counter deltas for this run
    std::uint64_t triangular_examined = 0;
    double seconds = 0.0;
};

// ContainsMonomial: returns true iff <generators> contains some monomial.
// Seeds the mush with (F, {}, 0, T_1*...*T_r) and triangulates; the ideal
// contains a monomial iff no triangular system is solvable. Note the
// polarity: one solvable system decides the answer (false), so eager
// checking may abort the triangulation early.
template <class Field>
CheckResult contains_monomial(const std::vector<Poly<Field>>& generators, const Field& field,
                              VarIndex nvars, const CheckOptions<Field>& opt = {}) {
    if (nvars < 1) throw Error(ErrorKind::Contract, "need at least one variable");
    auto before = snapshot_counters();
    auto start = std::chrono::steady_clock::now();
    DeadlineScope scope(opt.limits.timeout_seconds);

    SemiTriSystem<Field> seed(field, nvars);
    for (const auto& g : generators) {
        if (g.nvars() != nvars || !(g.field() == field))
            throw Error(ErrorKind::Context, "generator in a different ring context");
        seed.insert_square(g);
    }
    if (opt.seed_ineq.empty()) {
        for (VarIndex v = 1; v <= nvars; ++v)
            seed.ineq.push(Poly<Field>::variable(field, nvars, v));
    } else {
        for (const auto& f : opt.seed_ineq) seed.ineq.push(f);
    }

    TriangulateOptions<Field> topt;
    topt.jobs = opt.jobs;
    topt.limits = opt.limits;
    topt.expand_g_checks = opt.expand_g_checks;
    topt.trace = opt.trace;
    topt.names = opt.names;

    CheckResult result;
    std::atomic<std::uint64_t> examined{0};

    auto run_check = [&](const SemiTriSystem<Field>& sys, std::uint64_t id) {
        examined.fetch_add(1);
        SolvableOutcome<Field> out = is_solvable(sys, opt.names);
        if (topt.trace) {
            TraceRecord rec{"solvable-check",
                            static_cast<std::int64_t>(id),
                            {},
                            {{"answer", out.solvable ? "true" : "false"}}};
            if (!out.minpoly.empty()) rec.payload.emplace_back("minpoly", out.minpoly);
            topt.trace(rec);
        }
        return out.solvable;
    };

    bool solvable_found = false;
    if (opt.eager) {
        EagerCallback<Field> eager = [&](const SemiTriSystem<Field>& sys, std::uint64_t id) {
            return run_check(sys, id) ? EagerVerdict::AnswerFound : EagerVerdict::Prune;
        };
        auto out = make_triangular_traced(TriangleMush<Field>{{std::move(seed)}}, topt, eager);
        solvable_found = out.answer_found;
    } else {
        auto out = make_triangular_traced(TriangleMush<Field>{{std::move(seed)}}, topt,
                                          EagerCallback<Field>{});
        // consume the output mush LIFO, like the worklist that produced it
        auto deadline_check = [&]() {
            if (opt.limits.timeout_seconds >= 0) {
                auto elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
                if (elapsed > opt.limits.timeout_seconds)
                    throw ResourceError("timeout", "solvability phase time limit exceeded");
            }
        };
        while (!out.outputs.empty()) {
            deadline_check();
            auto item = std::move(out.outputs.back());
            out.outputs.pop_back();
            if (run_check(item.sys, item.id)) {
                solvable_found = true;
                break;
            }
        }
    }

    result.contains = !solvable_found;
    result.triangular_examined = examined.load();
    result.ops = snapshot_counters() - before;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace monomtest
