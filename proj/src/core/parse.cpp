#include "core/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "core/scalars.hpp"

namespace monomtest {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(std::string_view s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#') return {Token::Kind::End, "", line_, col};
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::Plus, "+", line_, col};
            case '-': ++pos_; return {Token::Kind::Minus, "-", line_, col};
            case '*': ++pos_; return {Token::Kind::Star, "*", line_, col};
            case '^': ++pos_; return {Token::Kind::Caret, "^", line_, col};
            case '(': ++pos_; return {Token::Kind::LParen, "(", line_, col};
            case ')': ++pos_; return {Token::Kind::RParen, ")", line_, col};
            case ',': ++pos_; return {Token::Kind::Comma, ",", line_, col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Kind::Int, std::string(s_.substr(start, pos_ - start)), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::Ident, std::string(s_.substr(start, pos_ - start)), line_, col};
        }
        throw ParseError(line_, col, std::string("malformed token '") + c + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(std::string_view line, int line_no, const std::vector<std::string>& vars)
        : lex_(line, line_no), vars_(vars) {
        advance();
    }

    std::unique_ptr<PolyExpr> parse_line() {
        auto e = parse_expr();
        if (cur_.kind != Token::Kind::End)
            throw ParseError(cur_.line, cur_.col, "unexpected token '" + cur_.text + "'");
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    std::unique_ptr<PolyExpr> make(PolyExpr::Kind k) {
        auto e = std::make_unique<PolyExpr>();
        e->kind = k;
        return e;
    }

    std::unique_ptr<PolyExpr> parse_expr() {
        auto lhs = parse_term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool plus = cur_.kind == Token::Kind::Plus;
            advance();
            auto rhs = parse_term();
            auto e = make(plus ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub);
            e->children.push_back(std::move(lhs));
            e->children.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<PolyExpr> parse_term() {
        bool negate = false;
        if (cur_.kind == Token::Kind::Minus) {
            negate = true;
            advance();
        }
        auto lhs = parse_factor();
        while (cur_.kind == Token::Kind::Star) {
            advance();
            auto rhs = parse_factor();
            auto e = make(PolyExpr::Kind::Mul);
            e->children.push_back(std::move(lhs));
            e->children.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        if (negate) {
            auto e = make(PolyExpr::Kind::Neg);
            e->children.push_back(std::move(lhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<PolyExpr> parse_factor() {
        auto base = parse_base();
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            if (cur_.kind != Token::Kind::Int)
                throw ParseError(cur_.line, cur_.col, "exponent must be an unsigned integer");
            mpz_class e(cur_.text);
            if (e > std::numeric_limits<std::uint32_t>::max())
                throw ParseError(cur_.line, cur_.col, "exponent too large");
            auto p = make(PolyExpr::Kind::Pow);
            p->exponent = static_cast<std::uint32_t>(e.get_ui());
            p->children.push_back(std::move(base));
            advance();
            return p;
        }
        return base;
    }

    std::unique_ptr<PolyExpr> parse_base() {
        if (cur_.kind == Token::Kind::Int) {
            auto e = make(PolyExpr::Kind::Int);
            e->int_value = mpz_class(cur_.text);
            advance();
            return e;
        }
        if (cur_.kind == Token::Kind::Ident) {
            auto it = std::find(vars_.begin(), vars_.end(), cur_.text);
            if (it == vars_.end())
                throw ParseError(cur_.line, cur_.col, "unknown variable " + cur_.text);
            auto e = make(PolyExpr::Kind::Var);
            e->var = static_cast<VarIndex>(it - vars_.begin()) + 1;
            advance();
            return e;
        }
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            auto e = parse_expr();
            if (cur_.kind != Token::Kind::RParen)
                throw ParseError(cur_.line, cur_.col, "expected ')'");
            advance();
            return e;
        }
        throw ParseError(cur_.line, cur_.col,
                         cur_.kind == Token::Kind::End ? "unexpected end of line"
                                                       : "malformed token '" + cur_.text + "'");
    }

    Lexer lex_;
    Token cur_{Token::Kind::End, "", 0, 0};
    const std::vector<std::string>& vars_;
};

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

std::vector<std::pair<int, std::string_view>> split_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int n = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            lines.emplace_back(n, text.substr(start, i - start));
            start = i + 1;
            ++n;
        }
    }
    return lines;
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
    IdealFile file;
    bool saw_vars = false;
    bool saw_char = false;
    bool saw_poly = false;
    for (auto [line_no, line] : split_lines(text)) {
        if (blank_or_comment(line)) continue;
        Lexer lex(line, line_no);
        Token first = lex.next();
        if (!saw_vars) {
            if (first.kind != Token::Kind::Ident || first.text != "vars")
                throw ParseError(line_no, first.col, "missing `vars` directive");
            Token t = lex.next();
            while (true) {
                if (t.kind != Token::Kind::Ident)
                    throw ParseError(line_no, t.col, "expected variable name");
                for (const std::string& seen : file.var_names)
                    if (seen == t.text)
                        throw ParseError(line_no, t.col, "duplicate variable " + t.text);
                file.var_names.push_back(t.text);
                t = lex.next();
                if (t.kind == Token::Kind::End) break;
                if (t.kind != Token::Kind::Comma)
                    throw ParseError(line_no, t.col, "expected ',' between variable names");
                t = lex.next();
            }
            if (file.var_names.empty())
                throw ParseError(line_no, first.col, "at least one variable required");
            saw_vars = true;
            continue;
        }
        if (first.kind == Token::Kind::Ident && first.text == "ineq" && !saw_poly) {
            if (file.inequation)
                throw ParseError(line_no, first.col, "duplicate `ineq` directive");
            std::size_t cut = line.find("ineq");
            ExprParser parser(line.substr(cut + 4), line_no, file.var_names);
            file.inequation = parser.parse_line();
            continue;
        }
        if (first.kind == Token::Kind::Ident && first.text == "char" && !saw_poly) {
            if (saw_char) throw ParseError(line_no, first.col, "duplicate `char` directive");
            Token t = lex.next();
            if (t.kind != Token::Kind::Int)
                throw ParseError(line_no, t.col, "expected prime after `char`");
            mpz_class p(t.text);
            if (p >= mpz_class(1) << 62)
                throw ParseError(line_no, t.col, "characteristic too large");
            std::uint64_t pv = p.get_ui();
            if (!is_prime_u64(pv))
                throw ParseError(line_no, t.col, "characteristic must be prime");
            Token end = lex.next();
            if (end.kind != Token::Kind::End)
                throw ParseError(line_no, end.col, "unexpected token after `char`");
            file.characteristic = pv;
            saw_char = true;
            continue;
        }
        ExprParser parser(line, line_no, file.var_names);
        file.polynomials.push_back(parser.parse_line());
        saw_poly = true;
    }
    if (!saw_vars) throw ParseError(1, 1, "missing `vars` directive");
    return file;
}

std::unique_ptr<PolyExpr> parse_poly_expr(std::string_view text,
                                          const std::vector<std::string>& var_names) {
    ExprParser parser(text, 1, var_names);
    return parser.parse_line();
}

namespace {

void flatten_into(const PolyExpr& e, std::uint32_t max_power,
                  std::vector<const PolyExpr*>& out) {
    switch (e.kind) {
        case PolyExpr::Kind::Mul:
            flatten_into(*e.children[0], max_power, out);
            flatten_into(*e.children[1], max_power, out);
            return;
        case PolyExpr::Kind::Neg:
            flatten_into(*e.children[0], max_power, out);
            return;
        case PolyExpr::Kind::Pow:
            if (e.exponent <= max_power) {
                for (std::uint32_t i = 0; i < e.exponent; ++i)
                    flatten_into(*e.children[0], max_power, out);
                return;
            }
            out.push_back(&e);
            return;
        default:
            out.push_back(&e);
            return;
    }
}

}  // namespace

std::vector<const PolyExpr*> flatten_factors(const PolyExpr& e, std::uint32_t max_power) {
    std::vector<const PolyExpr*> out;
    flatten_into(e, max_power, out);
    return out;
}

}  // namespace monomtest
