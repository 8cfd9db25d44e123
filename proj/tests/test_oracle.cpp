#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "core/oracle.hpp"
#include "test_util.hpp"

using namespace monomtest;
using testutil::Q;

namespace {
const RationalField QQ;

bool basis_contains(const std::vector<QPoly>& basis, const QPoly& p) {
    return std::find(basis.begin(), basis.end(), p) != basis.end();
}
}  // namespace

TEST_CASE("buchberger on a single generator") {
    auto basis = buchberger(std::vector<QPoly>{Q("T1", 2)});
    REQUIRE(basis.size() == 1);
    CHECK(basis.front() == Q("T1", 2));
}

TEST_CASE("buchberger lex elimination") {
    auto basis = buchberger(std::vector<QPoly>{Q("T1-T2", 2), Q("T2-1", 2)}, MonomialOrder::Lex);
    CHECK(basis_contains(basis, Q("T2-1", 2)));
    CHECK(basis_contains(basis, Q("T1-1", 2)));
}

TEST_CASE("buchberger drops the reducible generator") {
    auto basis = buchberger(std::vector<QPoly>{Q("T1^2-1", 1), Q("T1-1", 1)});
    REQUIRE(basis.size() == 1);
    CHECK(basis.front() == Q("T1-1", 1));
}

TEST_CASE("every input reduces to zero modulo the basis") {
    SplitMix64 rng(5);
    Buchberger<RationalField> engine(MonomialOrder::DegRevLex, {});
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<QPoly> F;
        int n = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < n; ++i) F.push_back(testutil::random_poly(rng, QQ, 3, 3, 3, 3));
        auto basis = buchberger(F);
        for (const auto& f : F) CHECK(engine.normal_form(f, basis).is_zero());
        // S-polynomial criterion: normal form of every S-pair is zero
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                auto la = basis[a].leading_term();
                auto lb = basis[b].leading_term();
                Monomial l = Monomial::lcm(la.mono, lb.mono);
                auto s = basis[a].mono_mul(l.quotient_by(la.mono), la.coeff.inverse()) -
                         basis[b].mono_mul(l.quotient_by(lb.mono), lb.coeff.inverse());
                CHECK(engine.normal_form(s, basis).is_zero());
            }
        }
    }
}

TEST_CASE("ideal_contains_one") {
    CHECK(ideal_contains_one(std::vector<QPoly>{Q("T1", 1), Q("T1-1", 1)}));
    CHECK_FALSE(ideal_contains_one(std::vector<QPoly>{Q("T1", 1)}));
    CHECK(ideal_contains_one(std::vector<QPoly>{Q("T1*T2-1", 2), Q("T1", 2)}));
}

TEST_CASE("oracle monomial containment, trivial") {
    CHECK(oracle_contains_monomial(std::vector<QPoly>{Q("T1^2", 1)}, 1));
    CHECK_FALSE(oracle_contains_monomial(std::vector<QPoly>{Q("T1+T2", 2)}, 2));
    CHECK(oracle_contains_monomial(std::vector<QPoly>{Q("T1", 2)}, 2));
    CHECK_FALSE(oracle_contains_monomial(std::vector<QPoly>{}, 2));
}

TEST_CASE("example ideal: full torus versus the example inequation") {
    auto f1 = Q("(T3-T1)*(T3-T2)*T2", 4);
    auto f2 = Q("(T1+T2-T3)*T4", 4);
    std::vector<QPoly> I{f1, f2};
    // under the standard seed T1*T2*T3*T4 the ideal contains a monomial:
    // f1 = 0 on the torus forces T3 in {T1, T2}, f2 = 0 forces T3 = T1+T2
    CHECK(oracle_contains_monomial(I, 4));
    // the worked example's inequation T1*T2*T3 leaves the solutions
    // (x1, x2, x1, 0) and (x1, x2, x2, 0)
    CHECK(oracle_system_solvable(I, Q("T1*T2*T3", 4), 4));
    CHECK_FALSE(oracle_system_solvable(I, Q("T1*T2*T3*T4", 4), 4));
}

TEST_CASE("oracle invariance under permutation and scaling") {
    SplitMix64 rng(67);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<QPoly> F;
        int n = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < n; ++i) F.push_back(testutil::random_poly(rng, QQ, 3, 3, 3, 3));
        bool base = oracle_contains_monomial(F, 3);
        std::vector<QPoly> shuffled(F.rbegin(), F.rend());
        CHECK(oracle_contains_monomial(shuffled, 3) == base);
        std::vector<QPoly> scaled;
        for (const auto& f : F) scaled.push_back(f.scaled(QQ.from_long(rng.chance(1, 2) ? 7 : -3)));
        CHECK(oracle_contains_monomial(scaled, 3) == base);
    }
}

TEST_CASE("degrevlex order sanity") {
    // with T1 > T2 > T3: T1*T2^2 beats T1^2*T3 by the reverse-lex tiebreak
    Monomial a = Monomial::var(1) * Monomial::var(2, 2);
    Monomial b = Monomial::var(1, 2) * Monomial::var(3);
    CHECK(Monomial::degrevlex_compare(a, b) > 0);
    CHECK(Monomial::degrevlex_compare(b, a) < 0);
    CHECK(Monomial::degrevlex_compare(Monomial::var(1), Monomial::var(2, 2)) < 0);
}

TEST_CASE("oracle resource limits") {
    OracleLimits limits;
    limits.timeout_seconds = 0.0;
    std::vector<QPoly> F{Q("T1^3*T2 - T3", 3), Q("T2^3*T3 - T1", 3), Q("T3^3*T1 - T2", 3)};
    CHECK_THROWS_AS((void)buchberger(F, MonomialOrder::DegRevLex, limits), ResourceError);
}
