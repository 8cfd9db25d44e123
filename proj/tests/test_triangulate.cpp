#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/oracle.hpp"
#include "core/triangulate.hpp"
#include "test_util.hpp"

using namespace monomtest;
using testutil::P;
using testutil::Q;

namespace {

const RationalField QQ;
const PrimeField F5(5);

template <class Field>
SemiTriSystem<Field> seed_example(const Field& field) {
    SemiTriSystem<Field> s(field, 4);
    s.insert_square(P("(T3-T1)*(T3-T2)*T2", field, 4));
    s.insert_square(P("(T1+T2-T3)*T4", field, 4));
    for (VarIndex v = 1; v <= 3; ++v) s.ineq.push(Poly<Field>::variable(field, 4, v));
    return s;
}

// multiset equality of two polynomial sets up to scalar (content-stripped)
template <class Field>
bool same_equations(std::vector<Poly<Field>> a, std::vector<Poly<Field>> b) {
    if (a.size() != b.size()) return false;
    for (auto& f : a) f = strip_scalar_content(f);
    for (auto& f : b) f = strip_scalar_content(f);
    std::sort(a.begin(), a.end(), poly_store_less<Field>);
    std::sort(b.begin(), b.end(), poly_store_less<Field>);
    return a == b;
}

}  // namespace

TEST_CASE("worked example: terminates and passes through the printed states") {
    auto seed = seed_example(QQ);
    TriangulateOptions<RationalField> opt;
    std::vector<std::string> trace;
    opt.trace = [&](const TraceRecord& r) { trace.push_back(format_trace(r)); };
    auto out = make_triangular(TriangleMush<RationalField>{{seed}}, opt);

    REQUIRE(out.systems.size() == 3);
    for (const auto& s : out.systems) {
        CHECK(s.is_triangular());
        CHECK(s.progress == 4);
        CHECK_NOTHROW(s.validate());
    }
    // the S_3 state: ({}, {f2, u}, 4, T4*g) appears among the outputs
    auto f2 = strip_scalar_content(Q("(T1+T2-T3)*T4", 4));
    auto u = strip_scalar_content(Q("(T2^3-T3*T2^2)*T4", 4));
    bool found = false;
    for (const auto& s : out.systems)
        if (s.square.empty() && same_equations<RationalField>(s.tri, {f2, u}) &&
            s.ineq.size() == 4)
            found = true;
    CHECK(found);
    // S_5's first system: ({}, {f1, T4}, 4, u'*g), with f1 in <u'>-rewritten form
    auto f1 = strip_scalar_content(Q("(T3-T1)*(T3-T2)*T2", 4));
    bool found5 = false;
    for (const auto& s : out.systems)
        if (s.square.empty() && same_equations<RationalField>(s.tri, {f1, Q("T4", 4)}))
            found5 = true;
    CHECK(found5);
    // one pseudo-division happened, with the printed remainder
    bool saw_division = false;
    for (const auto& line : trace)
        saw_division = saw_division ||
                       line.find("op=division") != std::string::npos;
    CHECK(saw_division);
}

TEST_CASE("already triangular input is returned unchanged") {
    SemiTriSystem<RationalField> s(QQ, 3);
    s.tri = {Q("T1^2 - (T2+T3)*T1", 3), Q("T2^2 - T3", 3), Q("T3^2 - T3", 3)};
    s.progress = 3;
    for (VarIndex v = 1; v <= 3; ++v) s.ineq.push(QPoly::variable(QQ, 3, v));
    auto out = make_triangular(TriangleMush<RationalField>{{s}});
    REQUIRE(out.systems.size() == 1);
    CHECK(same_equations<RationalField>(out.systems.front().tri, s.tri));
    CHECK(out.systems.front().progress == 3);
}

TEST_CASE("inconsistent input surfaces a dead constant") {
    SemiTriSystem<RationalField> s(QQ, 1);
    s.insert_square(Q("T1-1", 1));
    s.insert_square(Q("T1+1", 1));
    s.ineq.push(Q("T1", 1));
    auto out = make_triangular(TriangleMush<RationalField>{{s}});
    REQUIRE(out.systems.size() == 1);
    const auto& dead = out.systems.front();
    CHECK(dead.progress == 1);
    bool has_constant = false;
    for (const auto& f : dead.square)
        has_constant = has_constant || (f.is_constant() && !f.is_zero());
    CHECK(has_constant);
}

TEST_CASE("equivalence over F5 on random ideals") {
    SplitMix64 rng(909);
    int reps = 500;
    for (int i = 0; i < reps; ++i) {
        VarIndex nvars = static_cast<VarIndex>(1 + rng.below(3));
        SemiTriSystem<PrimeField> seed(F5, nvars);
        int npolys = 1 + static_cast<int>(rng.below(3));
        for (int j = 0; j < npolys; ++j)
            seed.insert_square(testutil::random_poly(rng, F5, nvars, 3, 3, 4, true));
        for (VarIndex v = 1; v <= nvars; ++v)
            if (rng.chance(2, 3)) seed.ineq.push(FpPoly::variable(F5, nvars, v));
        auto before = enumerate_solutions(seed);
        auto out = make_triangular(TriangleMush<PrimeField>{{seed}});
        for (const auto& s : out.systems) {
            CHECK(s.is_triangular());
            CHECK_NOTHROW(s.validate());
        }
        CHECK(enumerate_solutions(out) == before);
    }
}

TEST_CASE("resource limits raise instead of answering") {
    auto seed = seed_example(QQ);
    TriangulateOptions<RationalField> opt;
    opt.limits.timeout_seconds = 0.0;
    CHECK_THROWS_AS((void)make_triangular(TriangleMush<RationalField>{{seed}}, opt),
                    ResourceError);

    TriangulateOptions<RationalField> opt2;
    opt2.limits.max_systems = 2;
    try {
        (void)make_triangular(TriangleMush<RationalField>{{seed_example(QQ)}}, opt2);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.status() == "oom");
    }
}

TEST_CASE("eager callback can prune and abort") {
    auto seed = seed_example(QQ);
    TriangulateOptions<RationalField> opt;
    int seen = 0;
    EagerCallback<RationalField> prune_all = [&](const SemiTriSystem<RationalField>&,
                                                 std::uint64_t) {
        ++seen;
        return EagerVerdict::Prune;
    };
    auto out = make_triangular_traced(TriangleMush<RationalField>{{seed}}, opt, prune_all);
    CHECK(out.outputs.empty());
    CHECK(seen == 3);

    int aborted_after = 0;
    EagerCallback<RationalField> abort_first = [&](const SemiTriSystem<RationalField>&,
                                                   std::uint64_t) {
        ++aborted_after;
        return EagerVerdict::AnswerFound;
    };
    auto out2 =
        make_triangular_traced(TriangleMush<RationalField>{{seed_example(QQ)}}, opt, abort_first);
    CHECK(out2.answer_found);
    CHECK(aborted_after == 1);
}

TEST_CASE("parallel worklist agrees with the deterministic run") {
    SplitMix64 rng(31337);
    for (int i = 0; i < 10; ++i) {
        SemiTriSystem<PrimeField> seed(F5, 3);
        for (int j = 0; j < 2; ++j)
            seed.insert_square(testutil::random_poly(rng, F5, 3, 3, 3, 4, true));
        for (VarIndex v = 1; v <= 3; ++v) seed.ineq.push(FpPoly::variable(F5, 3, v));
        auto baseline = enumerate_solutions(make_triangular(TriangleMush<PrimeField>{{seed}}));
        TriangulateOptions<PrimeField> opt;
        opt.jobs = 4;
        auto parallel = enumerate_solutions(make_triangular(TriangleMush<PrimeField>{{seed}}, opt));
        CHECK(parallel == baseline);
    }
}

TEST_CASE("trace records are well formed") {
    auto seed = seed_example(QQ);
    TriangulateOptions<RationalField> opt;
    std::vector<TraceRecord> records;
    opt.trace = [&](const TraceRecord& r) { records.push_back(r); };
    (void)make_triangular(TriangleMush<RationalField>{{seed}}, opt);
    REQUIRE_FALSE(records.empty());
    for (const auto& r : records) {
        CHECK_FALSE(r.op.empty());
        auto line = format_trace(r);
        CHECK(line.rfind("TRACE op=", 0) == 0);
        CHECK(line.find(" in=") != std::string::npos);
        CHECK(line.find(" out=") != std::string::npos);
    }
}
