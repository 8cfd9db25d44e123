// monomtest command-line tool: check / bench / groebner / gen.
// Built strictly on the public C API.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monomtest/monomtest.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitAnswered = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitOracleDisagree = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct IdealHandle {
    mt_ideal* ptr = nullptr;
    ~IdealHandle() { mt_ideal_free(ptr); }
};

struct ReportHandle {
    mt_report* ptr = nullptr;
    ~ReportHandle() { mt_report_free(ptr); }
};

int parse_ideal(const std::string& path, IdealHandle& ideal) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    char errbuf[512];
    int line = 0, col = 0;
    mt_status st = mt_ideal_parse(text.c_str(), &ideal.ptr, errbuf, sizeof errbuf, &line, &col);
    if (st == MT_PARSE_ERROR) {
        std::cerr << path << ": parse error: " << errbuf << "\n";
        return kExitParse;
    }
    if (st != MT_OK) {
        std::cerr << path << ": " << errbuf << "\n";
        return kExitError;
    }
    return kExitAnswered;
}

struct CheckFlags {
    bool stats = false;
    bool oracle = false;
    bool trace = false;
    bool deterministic = false;
    bool no_eager = false;
    bool expand_g = false;
    double timeout = -1.0;
    std::uint64_t max_systems = 0;
    int jobs = 1;
};

void print_stats(const mt_report* rep) {
    static const char* names[] = {"additions",       "multiplications", "pseudo-divisions",
                                  "systems-created", "minpoly-calls",   "systems-examined"};
    for (const char* n : names)
        std::printf("stat.%s=%" PRIu64 "\n", n, mt_report_counter(rep, n));
}

int cmd_check(const std::string& path, const CheckFlags& flags) {
    IdealHandle ideal;
    if (int rc = parse_ideal(path, ideal); rc != kExitAnswered) return rc;

    mt_check_options opt;
    mt_check_options_init(&opt);
    opt.eager = flags.no_eager ? 0 : 1;
    opt.deterministic = flags.deterministic ? 1 : 0;
    opt.jobs = flags.jobs;
    opt.timeout_seconds = flags.timeout;
    opt.max_systems = flags.max_systems;
    opt.expand_g_checks = flags.expand_g ? 1 : 0;
    if (flags.trace) {
        opt.trace = [](void*, const char* line) { std::printf("%s\n", line); };
    }

    ReportHandle rep;
    mt_status st = mt_check_contains_monomial(ideal.ptr, &opt, &rep.ptr);
    if (st == MT_RESOURCE_LIMIT) {
        std::printf("RESOURCE_LIMIT: %s\n", rep.ptr ? mt_report_status(rep.ptr) : "unknown");
        return kExitResource;
    }
    if (st != MT_OK) {
        std::cerr << "error: check failed (status " << st << ")\n";
        return kExitError;
    }
    bool answer = mt_report_answer(rep.ptr) == 1;
    std::printf("CONTAINS_MONOMIAL: %s\n", answer ? "true" : "false");
    if (flags.stats) print_stats(rep.ptr);

    if (flags.oracle) {
        ReportHandle orep;
        mt_status ost = mt_oracle_contains_monomial(ideal.ptr, flags.timeout, &orep.ptr);
        if (ost == MT_RESOURCE_LIMIT) {
            std::printf("RESOURCE_LIMIT: %s\n", orep.ptr ? mt_report_status(orep.ptr) : "unknown");
            return kExitResource;
        }
        if (ost != MT_OK) {
            std::cerr << "error: oracle failed (status " << ost << ")\n";
            return kExitError;
        }
        bool agree = (mt_report_answer(orep.ptr) == 1) == answer;
        std::printf("ORACLE_AGREES: %s\n", agree ? "true" : "false");
        if (!agree) return kExitOracleDisagree;
    }
    return kExitAnswered;
}

int cmd_bench(const std::string& dir, const std::string& out_path, double timeout,
              std::uint64_t max_systems, int jobs) {
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".ideal")
                files.push_back(entry.path());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::sort(files.begin(), files.end());

    std::ofstream csv(out_path);
    if (!csv) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitError;
    }
    csv << "name,answer,seconds,additions,multiplications,systems,status\n";
    for (const fs::path& f : files) {
        IdealHandle ideal;
        std::string name = f.stem().string();
        if (parse_ideal(f.string(), ideal) != kExitAnswered) {
            csv << name << ",,,,,,parse-error\n";
            continue;
        }
        mt_check_options opt;
        mt_check_options_init(&opt);
        opt.timeout_seconds = timeout;
        opt.max_systems = max_systems;
        opt.jobs = jobs;
        ReportHandle rep;
        mt_status st = mt_check_contains_monomial(ideal.ptr, &opt, &rep.ptr);
        const char* status = rep.ptr ? mt_report_status(rep.ptr) : "error";
        std::string answer;
        if (st == MT_OK && mt_report_answer(rep.ptr) >= 0)
            answer = mt_report_answer(rep.ptr) == 1 ? "true" : "false";
        char sec[64] = "";
        if (rep.ptr) std::snprintf(sec, sizeof sec, "%.6f", mt_report_seconds(rep.ptr));
        csv << name << "," << answer << "," << sec << ","
            << (rep.ptr ? mt_report_counter(rep.ptr, "additions") : 0) << ","
            << (rep.ptr ? mt_report_counter(rep.ptr, "multiplications") : 0) << ","
            << (rep.ptr ? mt_report_counter(rep.ptr, "systems-created") : 0) << "," << status
            << "\n"
            << std::flush;
    }
    return kExitAnswered;
}

int cmd_groebner(const std::string& path, const std::string& order, double timeout) {
    IdealHandle ideal;
    if (int rc = parse_ideal(path, ideal); rc != kExitAnswered) return rc;
    mt_strings* basis = nullptr;
    mt_status st = mt_groebner(ideal.ptr, order.c_str(), timeout, &basis);
    if (st == MT_RESOURCE_LIMIT) {
        std::printf("RESOURCE_LIMIT: oracle\n");
        return kExitResource;
    }
    if (st != MT_OK) {
        std::cerr << "error: groebner failed (status " << st << ")\n";
        return kExitError;
    }
    for (size_t i = 0; i < mt_strings_count(basis); ++i)
        std::printf("%s\n", mt_strings_get(basis, i));
    mt_strings_free(basis);
    return kExitAnswered;
}

// SplitMix64, same generator everywhere for reproducibility
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// One random polynomial as an expression string. Terms: uniform total
// degree in [0,max_deg] spread over the variables one step at a time;
// nonzero coefficients uniform in [-coeff_bound, coeff_bound].
std::string random_poly_text(Rng& rng, int nvars, int max_deg, int coeff_bound, int terms) {
    std::ostringstream out;
    for (int t = 0; t < terms; ++t) {
        std::int64_t c = 0;
        while (c == 0) c = rng.int_in(-coeff_bound, coeff_bound);
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        for (int d = 0; d < deg; ++d) exps[rng.below(static_cast<std::uint64_t>(nvars))]++;
        if (t > 0) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        std::int64_t mag = c > 0 ? c : -c;
        bool printed = false;
        if (mag != 1) {
            out << mag;
            printed = true;
        }
        for (int v = 0; v < nvars; ++v) {
            if (exps[static_cast<std::size_t>(v)] == 0) continue;
            if (printed) out << "*";
            out << "T" << (v + 1);
            if (exps[static_cast<std::size_t>(v)] > 1) out << "^" << exps[static_cast<std::size_t>(v)];
            printed = true;
        }
        if (!printed) out << mag;
    }
    return out.str();
}

int cmd_gen(const std::string& out_dir, int count, int nvars, int npolys, int max_deg,
            int coeff_bound, double density, std::uint64_t seed, std::uint64_t characteristic) {
    try {
        fs::create_directories(out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    int terms = std::max(1, static_cast<int>(density * (max_deg + 1) * nvars + 0.5));
    for (int i = 0; i < count; ++i) {
        Rng rng(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(i + 1)));
        std::ostringstream body;
        body << "# generated: seed=" << seed << " index=" << i << "\n";
        body << "vars";
        for (int v = 0; v < nvars; ++v) body << (v ? "," : " ") << "T" << (v + 1);
        body << "\n";
        if (characteristic) body << "char " << characteristic << "\n";
        for (int p = 0; p < npolys; ++p)
            body << random_poly_text(rng, nvars, max_deg, coeff_bound, terms) << "\n";
        char name[64];
        std::snprintf(name, sizeof name, "random_%04d.ideal", i);
        std::ofstream out(fs::path(out_dir) / name);
        if (!out) {
            std::cerr << "error: cannot write " << name << "\n";
            return kExitError;
        }
        out << body.str();
    }
    std::printf("generated %d files in %s\n", count, out_dir.c_str());
    return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial containment tester (exact triangular decomposition)"};
    app.require_subcommand(1);

    std::string path, out_path = "bench.csv", order = "degrevlex", out_dir = "corpus";
    CheckFlags flags;
    double bench_timeout = 60.0;
    std::uint64_t bench_max_systems = 200000;
    int bench_jobs = 1;
    int gen_count = 20, gen_vars = 4, gen_polys = 3, gen_deg = 3, gen_coeff = 3;
    double gen_density = 0.4;
    std::uint64_t gen_seed = 1, gen_char = 0;

    auto* check = app.add_subcommand("check", "decide whether the ideal contains a monomial");
    check->add_option("file", path, "ideal file")->required();
    check->add_flag("--stats", flags.stats, "print stat.<name>=<n> counter lines");
    check->add_flag("--oracle", flags.oracle, "cross-check against the Groebner oracle");
    check->add_flag("--trace", flags.trace, "stream rewrite trace records");
    check->add_flag("--deterministic", flags.deterministic, "single worker, LIFO, reproducible");
    check->add_flag("--no-eager", flags.no_eager, "triangulate fully before solvability checks");
    check->add_flag("--expand-g", flags.expand_g, "debug: verify factored inequations by expansion");
    check->add_option("--timeout", flags.timeout, "wall-clock limit in seconds");
    check->add_option("--max-systems", flags.max_systems, "bound on created systems");
    check->add_option("--jobs", flags.jobs, "worker threads (ignored with --deterministic)");

    auto* bench = app.add_subcommand("bench", "run every .ideal file in a directory, write CSV");
    bench->add_option("dir", path, "directory of .ideal files")->required();
    bench->add_option("--out", out_path, "output CSV path");
    bench->add_option("--timeout", bench_timeout, "per-file wall-clock limit in seconds");
    bench->add_option("--max-systems", bench_max_systems, "per-file bound on created systems");
    bench->add_option("--jobs", bench_jobs, "worker threads per file");

    auto* gb = app.add_subcommand("groebner", "print a Groebner basis of the ideal");
    gb->add_option("file", path, "ideal file")->required();
    gb->add_option("--order", order, "monomial order: lex | degrevlex");
    double gb_timeout = -1.0;
    gb->add_option("--timeout", gb_timeout, "wall-clock limit in seconds");

    auto* gen = app.add_subcommand("gen", "generate a reproducible random ideal corpus");
    gen->add_option("--out", out_dir, "output directory");
    gen->add_option("--count", gen_count, "number of files");
    gen->add_option("--vars", gen_vars, "number of variables");
    gen->add_option("--polys", gen_polys, "generators per ideal");
    gen->add_option("--max-deg", gen_deg, "maximal total degree");
    gen->add_option("--coeff-bound", gen_coeff, "coefficients drawn from [-b, b]");
    gen->add_option("--density", gen_density, "expected term density (0,1]");
    gen->add_option("--seed", gen_seed, "PRNG seed (SplitMix64)");
    gen->add_option("--char", gen_char, "prime characteristic (0 = rationals)");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return cmd_check(path, flags);
    if (bench->parsed())
        return cmd_bench(path, out_path, bench_timeout, bench_max_systems, bench_jobs);
    if (gb->parsed()) return cmd_groebner(path, order, gb_timeout);
    if (gen->parsed())
        return cmd_gen(out_dir, gen_count, gen_vars, gen_polys, gen_deg, gen_coeff, gen_density,
                       gen_seed, gen_char);
    return kExitError;
}
