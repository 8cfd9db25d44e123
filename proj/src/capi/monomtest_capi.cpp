#include "monomtest/monomtest.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/deadline.hpp"
#include "core/oracle.hpp"
#include "core/parse.hpp"
#include "core/solver.hpp"

using namespace monomtest;

struct mt_ideal {
    IdealFile file;
};

struct mt_report {
    int answer = -1;  // 1 contains, 0 not, -1 unanswered
    std::string status = "ok";
    double seconds = 0.0;
    CounterSnapshot ops;
    std::uint64_t systems_examined = 0;
};

struct mt_strings {
    std::vector<std::string> items;
};

namespace {

mt_status to_status(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse: return MT_PARSE_ERROR;
        case ErrorKind::Resource: return MT_RESOURCE_LIMIT;
        case ErrorKind::Contract: return MT_CONTRACT_ERROR;
        case ErrorKind::Context:
        case ErrorKind::DegenerateInput: return MT_INVALID_ARGUMENT;
        default: return MT_ERROR;
    }
}

void copy_msg(const char* msg, char* buf, size_t n) {
    if (!buf || n == 0) return;
    std::strncpy(buf, msg, n - 1);
    buf[n - 1] = '\0';
}

// Runs the check over the field matching the file's characteristic.
template <class Field>
mt_report run_check(const IdealFile& file, const Field& field, const mt_check_options* copt) {
    CheckOptions<Field> opt;
    if (copt) {
        opt.eager = copt->eager != 0;
        opt.jobs = copt->deterministic ? 1 : (copt->jobs > 1 ? copt->jobs : 1);
        opt.limits.timeout_seconds = copt->timeout_seconds;
        opt.limits.max_systems = copt->max_systems;
        opt.expand_g_checks = copt->expand_g_checks != 0;
        if (copt->trace) {
            mt_trace_fn fn = copt->trace;
            void* user = copt->trace_user;
            opt.trace = [fn, user](const TraceRecord& rec) {
                fn(user, format_trace(rec).c_str());
            };
        }
    }
    opt.names = file.names();
    auto gens = build_all(file, field);
    if (file.inequation) {
        for (const PolyExpr* fac : flatten_factors(*file.inequation))
            opt.seed_ineq.push_back(build_poly(*fac, field, file.nvars()));
    }
    CheckResult res = contains_monomial(gens, field, file.nvars(), opt);
    mt_report rep;
    rep.answer = res.contains ? 1 : 0;
    rep.seconds = res.seconds;
    rep.ops = res.ops;
    rep.systems_examined = res.triangular_examined;
    return rep;
}

template <class Field>
mt_report run_oracle(const IdealFile& file, const Field& field, double timeout_seconds) {
    auto before = snapshot_counters();
    auto start = std::chrono::steady_clock::now();
    DeadlineScope scope(timeout_seconds);
    OracleLimits limits;
    limits.timeout_seconds = timeout_seconds;
    auto gens = build_all(file, field);
    bool ans;
    if (file.inequation) {
        Poly<Field> g = build_poly(*file.inequation, field, file.nvars());
        ans = !oracle_system_solvable(gens, g, file.nvars(), limits);
    } else {
        ans = !gens.empty() && oracle_contains_monomial(gens, file.nvars(), limits);
    }
    mt_report rep;
    rep.answer = ans ? 1 : 0;
    rep.ops = snapshot_counters() - before;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

template <class Fn>
mt_status guarded(Fn&& fn, mt_report** out) {
    if (!out) return MT_INVALID_ARGUMENT;
    *out = nullptr;
    auto before = snapshot_counters();
    auto start = std::chrono::steady_clock::now();
    try {
        *out = new mt_report(fn());
        return MT_OK;
    } catch (const ResourceError& e) {
        auto rep = std::make_unique<mt_report>();
        rep->status = e.status();
        rep->ops = snapshot_counters() - before;
        rep->seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        *out = rep.release();
        return MT_RESOURCE_LIMIT;
    } catch (const Error& e) {
        return to_status(e);
    } catch (const std::bad_alloc&) {
        auto rep = std::make_unique<mt_report>();
        rep->status = "oom";
        *out = rep.release();
        return MT_RESOURCE_LIMIT;
    } catch (...) {
        return MT_ERROR;
    }
}

}  // namespace

extern "C" {

void mt_check_options_init(mt_check_options* opt) {
    if (!opt) return;
    opt->eager = 1;
    opt->deterministic = 0;
    opt->jobs = 1;
    opt->timeout_seconds = -1.0;
    opt->max_systems = 0;
    opt->expand_g_checks = 0;
    opt->trace = nullptr;
    opt->trace_user = nullptr;
}

mt_status mt_ideal_parse(const char* text, mt_ideal** out, char* errbuf, size_t errbuf_size,
                         int* err_line, int* err_col) {
    if (!text || !out) return MT_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        auto ideal = std::make_unique<mt_ideal>();
        ideal->file = parse_ideal_file(text);
        *out = ideal.release();
        return MT_OK;
    } catch (const ParseError& e) {
        copy_msg(e.what(), errbuf, errbuf_size);
        if (err_line) *err_line = e.line();
        if (err_col) *err_col = e.col();
        return MT_PARSE_ERROR;
    } catch (const Error& e) {
        copy_msg(e.what(), errbuf, errbuf_size);
        return to_status(e);
    } catch (...) {
        return MT_ERROR;
    }
}

void mt_ideal_free(mt_ideal* ideal) { delete ideal; }

int mt_ideal_var_count(const mt_ideal* ideal) {
    return ideal ? static_cast<int>(ideal->file.var_names.size()) : 0;
}

const char* mt_ideal_var_name(const mt_ideal* ideal, int index) {
    if (!ideal || index < 1 || index > static_cast<int>(ideal->file.var_names.size()))
        return nullptr;
    return ideal->file.var_names[static_cast<std::size_t>(index - 1)].c_str();
}

uint64_t mt_ideal_characteristic(const mt_ideal* ideal) {
    return ideal ? ideal->file.characteristic : 0;
}

int mt_ideal_generator_count(const mt_ideal* ideal) {
    return ideal ? static_cast<int>(ideal->file.polynomials.size()) : 0;
}

int mt_ideal_has_inequation(const mt_ideal* ideal) {
    return ideal && ideal->file.inequation ? 1 : 0;
}

mt_status mt_check_contains_monomial(const mt_ideal* ideal, const mt_check_options* opt,
                                     mt_report** out) {
    if (!ideal) return MT_INVALID_ARGUMENT;
    return guarded(
        [&]() -> mt_report {
            if (ideal->file.characteristic == 0)
                return run_check(ideal->file, RationalField{}, opt);
            return run_check(ideal->file, PrimeField(ideal->file.characteristic), opt);
        },
        out);
}

mt_status mt_oracle_contains_monomial(const mt_ideal* ideal, double timeout_seconds,
                                      mt_report** out) {
    if (!ideal) return MT_INVALID_ARGUMENT;
    return guarded(
        [&]() -> mt_report {
            if (ideal->file.characteristic == 0)
                return run_oracle(ideal->file, RationalField{}, timeout_seconds);
            return run_oracle(ideal->file, PrimeField(ideal->file.characteristic),
                              timeout_seconds);
        },
        out);
}

int mt_report_answer(const mt_report* report) { return report ? report->answer : -1; }

const char* mt_report_status(const mt_report* report) {
    return report ? report->status.c_str() : "ok";
}

double mt_report_seconds(const mt_report* report) { return report ? report->seconds : 0.0; }

uint64_t mt_report_counter(const mt_report* report, const char* name) {
    if (!report || !name) return 0;
    std::string n = name;
    if (n == "additions") return report->ops.additions;
    if (n == "multiplications") return report->ops.multiplications;
    if (n == "pseudo-divisions") return report->ops.pseudo_divisions;
    if (n == "systems-created") return report->ops.systems_created;
    if (n == "minpoly-calls") return report->ops.minpoly_calls;
    if (n == "systems-examined") return report->systems_examined;
    return 0;
}

void mt_report_free(mt_report* report) { delete report; }

mt_status mt_groebner(const mt_ideal* ideal, const char* order, double timeout_seconds,
                      mt_strings** out) {
    if (!ideal || !out) return MT_INVALID_ARGUMENT;
    *out = nullptr;
    MonomialOrder ord = MonomialOrder::DegRevLex;
    if (order) {
        std::string o = order;
        if (o == "lex")
            ord = MonomialOrder::Lex;
        else if (o == "degrevlex")
            ord = MonomialOrder::DegRevLex;
        else
            return MT_INVALID_ARGUMENT;
    }
    try {
        OracleLimits limits;
        limits.timeout_seconds = timeout_seconds;
        auto list = std::make_unique<mt_strings>();
        NameTable names = ideal->file.names();
        if (ideal->file.characteristic == 0) {
            RationalField field;
            auto basis = buchberger(build_all(ideal->file, field), ord, limits);
            for (const auto& g : basis) list->items.push_back(g.to_string(names));
        } else {
            PrimeField field(ideal->file.characteristic);
            auto basis = buchberger(build_all(ideal->file, field), ord, limits);
            for (const auto& g : basis) list->items.push_back(g.to_string(names));
        }
        *out = list.release();
        return MT_OK;
    } catch (const Error& e) {
        return to_status(e);
    } catch (...) {
        return MT_ERROR;
    }
}

size_t mt_strings_count(const mt_strings* list) { return list ? list->items.size() : 0; }

const char* mt_strings_get(const mt_strings* list, size_t i) {
    if (!list || i >= list->items.size()) return nullptr;
    return list->items[i].c_str();
}

void mt_strings_free(mt_strings* list) { delete list; }

const char* mt_version(void) { return "1.0.0"; }

}  // extern "C"
