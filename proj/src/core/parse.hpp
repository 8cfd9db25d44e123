#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"
#include "core/names.hpp"
#include "core/poly.hpp"

namespace monomtest {

// Expression tree for one polynomial line. Kept field-agnostic so a parsed
// file can be instantiated over Q or F_p.
struct PolyExpr {
    enum class Kind { Int, Var, Add, Sub, Mul, Pow, Neg };

    Kind kind;
    mpz_class int_value;                             // Int
    VarIndex var = 0;                                // Var
    std::uint32_t exponent = 0;                      // Pow
    std::vector<std::unique_ptr<PolyExpr>> children; // Add/Sub/Mul: 2, Neg/Pow: 1
};

// Parsed `.ideal` file: variable order (defines T1 > T2 > ...),
// characteristic (0 or prime), optional inequation, and one expression per
// polynomial line.
struct IdealFile {
    std::vector<std::string> var_names;
    std::uint64_t characteristic = 0;
    std::unique_ptr<PolyExpr> inequation;  // null: the full torus product
    std::vector<std::unique_ptr<PolyExpr>> polynomials;

    VarIndex nvars() const { return static_cast<VarIndex>(var_names.size()); }
    NameTable names() const { return NameTable{var_names}; }
};

// Grammar (lines; `#` comments; blank lines ignored):
//   vars <name>(,<name>)*        -- first directive
//   char <prime>                 -- optional, before any polynomial
//   ineq <expr>                  -- optional, before any polynomial
//   expr   := term (('+'|'-') term)*
//   term   := ('-')? factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | var-name | '(' expr ')'
// Implicit multiplication is not allowed; whitespace between tokens is
// ignored; integer literals are unbounded. `ineq` overrides the default
// inequation T1*...*Tr of the containment test (the general solvability
// problem: equations from the polynomial lines, one inequation).
IdealFile parse_ideal_file(std::string_view text);

// multiplicative leaves of an expression: factors of top-level products,
// powers expanded into repeated factors, signs discarded (units)
std::vector<const PolyExpr*> flatten_factors(const PolyExpr& e, std::uint32_t max_power = 64);

template <class Field>
Poly<Field> build_poly(const PolyExpr& e, const Field& field, VarIndex nvars) {
    using P = Poly<Field>;
    switch (e.kind) {
        case PolyExpr::Kind::Int:
            return P::constant(field, nvars, field.from_mpz(e.int_value));
        case PolyExpr::Kind::Var:
            return P::variable(field, nvars, e.var);
        case PolyExpr::Kind::Add:
            return build_poly(*e.children[0], field, nvars) +
                   build_poly(*e.children[1], field, nvars);
        case PolyExpr::Kind::Sub:
            return build_poly(*e.children[0], field, nvars) -
                   build_poly(*e.children[1], field, nvars);
        case PolyExpr::Kind::Mul:
            return build_poly(*e.children[0], field, nvars) *
                   build_poly(*e.children[1], field, nvars);
        case PolyExpr::Kind::Pow:
            return build_poly(*e.children[0], field, nvars).pow(e.exponent);
        case PolyExpr::Kind::Neg:
            return -build_poly(*e.children[0], field, nvars);
    }
    throw Error(ErrorKind::Internal, "unreachable expression kind");
}

template <class Field>
std::vector<Poly<Field>> build_all(const IdealFile& file, const Field& field) {
    std::vector<Poly<Field>> out;
    out.reserve(file.polynomials.size());
    for (const auto& e : file.polynomials) out.push_back(build_poly(*e, field, file.nvars()));
    return out;
}

// Parse a single expression against a fixed variable table (test helper
// and groebner-input convenience).
std::unique_ptr<PolyExpr> parse_poly_expr(std::string_view text,
                                          const std::vector<std::string>& var_names);

}  // namespace monomtest
