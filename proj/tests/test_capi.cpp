#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "monomtest/monomtest.h"

namespace {

const char* kExampleFile =
    "# worked example with its inequation\n"
    "vars T1,T2,T3,T4\n"
    "ineq T1*T2*T3\n"
    "(T3-T1)*(T3-T2)*T2\n"
    "(T1+T2-T3)*T4\n";

struct Ideal {
    mt_ideal* ptr = nullptr;
    ~Ideal() { mt_ideal_free(ptr); }
};

struct Report {
    mt_report* ptr = nullptr;
    ~Report() { mt_report_free(ptr); }
};

}  // namespace

TEST_CASE("parse and inspect an ideal") {
    Ideal ideal;
    char err[256];
    REQUIRE(mt_ideal_parse(kExampleFile, &ideal.ptr, err, sizeof err, nullptr, nullptr) == MT_OK);
    CHECK(mt_ideal_var_count(ideal.ptr) == 4);
    CHECK(std::string(mt_ideal_var_name(ideal.ptr, 1)) == "T1");
    CHECK(std::string(mt_ideal_var_name(ideal.ptr, 4)) == "T4");
    CHECK(mt_ideal_var_name(ideal.ptr, 5) == nullptr);
    CHECK(mt_ideal_characteristic(ideal.ptr) == 0);
    CHECK(mt_ideal_generator_count(ideal.ptr) == 2);
    CHECK(mt_ideal_has_inequation(ideal.ptr) == 1);
}

TEST_CASE("parse errors carry position and message") {
    Ideal ideal;
    char err[256] = {0};
    int line = 0, col = 0;
    mt_status st = mt_ideal_parse("vars x\ny + 1\n", &ideal.ptr, err, sizeof err, &line, &col);
    CHECK(st == MT_PARSE_ERROR);
    CHECK(ideal.ptr == nullptr);
    CHECK(line == 2);
    CHECK(col == 1);
    CHECK(std::strstr(err, "unknown variable") != nullptr);
}

TEST_CASE("check with default options") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse("vars x,y\nx*y - 1\n", &ideal.ptr, nullptr, 0, nullptr, nullptr) ==
            MT_OK);
    Report rep;
    REQUIRE(mt_check_contains_monomial(ideal.ptr, nullptr, &rep.ptr) == MT_OK);
    CHECK(mt_report_answer(rep.ptr) == 0);
    CHECK(std::string(mt_report_status(rep.ptr)) == "ok");
    CHECK(mt_report_seconds(rep.ptr) >= 0.0);
}

TEST_CASE("worked example through the C surface, with trace") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse(kExampleFile, &ideal.ptr, nullptr, 0, nullptr, nullptr) == MT_OK);
    mt_check_options opt;
    mt_check_options_init(&opt);
    opt.deterministic = 1;
    opt.eager = 0;
    std::vector<std::string> lines;
    opt.trace = [](void* user, const char* line) {
        static_cast<std::vector<std::string>*>(user)->push_back(line);
    };
    opt.trace_user = &lines;
    Report rep;
    REQUIRE(mt_check_contains_monomial(ideal.ptr, &opt, &rep.ptr) == MT_OK);
    CHECK(mt_report_answer(rep.ptr) == 0);
    CHECK(mt_report_counter(rep.ptr, "pseudo-divisions") == 1);
    CHECK(mt_report_counter(rep.ptr, "systems-created") >= 3);
    CHECK(mt_report_counter(rep.ptr, "minpoly-calls") >= 2);
    CHECK(mt_report_counter(rep.ptr, "systems-examined") == 2);
    CHECK(mt_report_counter(rep.ptr, "additions") > 0);
    bool saw_division = false, saw_check = false;
    for (const auto& l : lines) {
        saw_division = saw_division || l.find("op=division") != std::string::npos;
        saw_check = saw_check || l.find("op=solvable-check") != std::string::npos;
        CHECK(l.rfind("TRACE ", 0) == 0);
    }
    CHECK(saw_division);
    CHECK(saw_check);
}

TEST_CASE("oracle agreement through the C surface") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse("vars x,y\nx - y\ny\n", &ideal.ptr, nullptr, 0, nullptr, nullptr) ==
            MT_OK);
    Report rep, orep;
    REQUIRE(mt_check_contains_monomial(ideal.ptr, nullptr, &rep.ptr) == MT_OK);
    REQUIRE(mt_oracle_contains_monomial(ideal.ptr, -1.0, &orep.ptr) == MT_OK);
    CHECK(mt_report_answer(rep.ptr) == 1);
    CHECK(mt_report_answer(orep.ptr) == 1);
}

TEST_CASE("timeout produces a resource-limit report") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse(kExampleFile, &ideal.ptr, nullptr, 0, nullptr, nullptr) == MT_OK);
    mt_check_options opt;
    mt_check_options_init(&opt);
    opt.timeout_seconds = 0.0;
    Report rep;
    CHECK(mt_check_contains_monomial(ideal.ptr, &opt, &rep.ptr) == MT_RESOURCE_LIMIT);
    REQUIRE(rep.ptr != nullptr);
    CHECK(std::string(mt_report_status(rep.ptr)) == "timeout");
    CHECK(mt_report_answer(rep.ptr) == -1);

    mt_check_options opt2;
    mt_check_options_init(&opt2);
    opt2.max_systems = 1;
    Report rep2;
    CHECK(mt_check_contains_monomial(ideal.ptr, &opt2, &rep2.ptr) == MT_RESOURCE_LIMIT);
    REQUIRE(rep2.ptr != nullptr);
    CHECK(std::string(mt_report_status(rep2.ptr)) == "oom");
}

TEST_CASE("groebner basis strings") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse("vars x,y\nx - y\ny - 1\n", &ideal.ptr, nullptr, 0, nullptr, nullptr) ==
            MT_OK);
    mt_strings* basis = nullptr;
    REQUIRE(mt_groebner(ideal.ptr, "lex", -1.0, &basis) == MT_OK);
    REQUIRE(basis != nullptr);
    std::vector<std::string> items;
    for (size_t i = 0; i < mt_strings_count(basis); ++i) items.push_back(mt_strings_get(basis, i));
    mt_strings_free(basis);
    REQUIRE(items.size() == 2);
    CHECK(((items[0] == "x - 1" && items[1] == "y - 1") ||
           (items[0] == "y - 1" && items[1] == "x - 1")));
    CHECK(mt_groebner(ideal.ptr, "weird-order", -1.0, &basis) == MT_INVALID_ARGUMENT);
}

TEST_CASE("prime characteristic runs through the C surface") {
    Ideal ideal;
    REQUIRE(mt_ideal_parse("vars x,y\nchar 5\nx*y - 1\nx - 2\n", &ideal.ptr, nullptr, 0, nullptr,
                           nullptr) == MT_OK);
    CHECK(mt_ideal_characteristic(ideal.ptr) == 5);
    Report rep;
    REQUIRE(mt_check_contains_monomial(ideal.ptr, nullptr, &rep.ptr) == MT_OK);
    // x = 2, y = 3 is a torus point of V(xy-1, x-2) over F5
    CHECK(mt_report_answer(rep.ptr) == 0);
}

TEST_CASE("null-argument hygiene and version") {
    CHECK(mt_ideal_parse(nullptr, nullptr, nullptr, 0, nullptr, nullptr) == MT_INVALID_ARGUMENT);
    CHECK(mt_check_contains_monomial(nullptr, nullptr, nullptr) == MT_INVALID_ARGUMENT);
    CHECK(mt_report_answer(nullptr) == -1);
    CHECK(mt_strings_count(nullptr) == 0);
    mt_ideal_free(nullptr);
    mt_report_free(nullptr);
    mt_strings_free(nullptr);
    CHECK(std::string(mt_version()) == "1.0.0");
}
