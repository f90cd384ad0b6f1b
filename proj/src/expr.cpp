#include "slopelab/expr.hpp"

#include <charconv>
#include <cctype>

namespace slopelab {

namespace {

std::string format_error(ExprError::Kind kind, SourceLoc loc, const std::string& message,
                         const std::vector<std::string>& expected) {
    std::string s = "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.col) + ": ";
    s += kind == ExprError::Kind::syntax ? "syntax error: " : "";
    s += message;
    if (!expected.empty()) {
        s += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
        s += ")";
    }
    return s;
}

}  // namespace

ExprError::ExprError(Kind kind, SourceLoc loc, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_error(kind, loc, message, expected)),
      kind_(kind),
      loc_(loc),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    SourceLoc loc;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++loc.line;
                loc.col = 1;
            } else {
                ++loc.col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t j = i;
        if (std::isalpha(c) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, src.substr(i, j - i), loc});
        } else if (std::isdigit(c)) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::integer, src.substr(i, j - i), loc});
        } else if (std::string_view("()[],+-*/^=").find(static_cast<char>(c)) != std::string_view::npos) {
            j = i + 1;
            out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), loc});
        } else {
            throw ExprError(ExprError::Kind::syntax, loc, "unexpected character '" + std::string(1, src[i]) + "'");
        }
        advance(j - i);
    }
    out.push_back({Tok::end, "", loc});
    return out;
}

std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
}

using Poly = Laurent<CycloRat>;

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse() {
        auto e = expr();
        if (peek().kind != Tok::end) fail({"'+'", "end of input"});
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
    bool at_ident(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ExprError(ExprError::Kind::syntax, peek().loc, "unexpected " + describe(peek()), std::move(expected));
    }
    [[noreturn]] static void semantic(SourceLoc loc, const std::string& msg) {
        throw ExprError(ExprError::Kind::semantic, loc, msg);
    }

    void punct(char c) {
        if (!at_punct(c)) fail({std::string("'") + c + "'"});
        ++pos_;
    }
    void keyword(const char* s) {
        if (!at_ident(s)) fail({std::string("'") + s + "'"});
        ++pos_;
    }
    std::int64_t integer() {
        if (peek().kind != Tok::integer) fail({"integer"});
        const auto& t = peek();
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size()) semantic(t.loc, "integer " + t.text + " is too large");
        ++pos_;
        return v;
    }
    std::int64_t signed_integer() {
        bool neg = at_punct('-');
        if (neg) ++pos_;
        std::int64_t v = integer();
        return neg ? -v : v;
    }
    Rat rational() {
        SourceLoc loc = peek().loc;
        std::int64_t n = integer();
        if (!at_punct('/')) return Rat(n);
        ++pos_;
        std::int64_t d = integer();
        if (d == 0) semantic(loc, "zero denominator");
        return Rat(n, d);
    }
    std::int64_t positive(const char* what) {
        SourceLoc loc = peek().loc;
        std::int64_t v = integer();
        if (v < 1) semantic(loc, std::string(what) + " must be ≥ 1");
        return v;
    }

    ExprPtr make(SourceLoc loc, ModuleExpr::Node n) const {
        return std::make_shared<const ModuleExpr>(ModuleExpr{loc, std::move(n)});
    }

    ExprPtr expr() {
        auto lhs = term();
        while (at_punct('+')) {
            SourceLoc loc = peek().loc;
            ++pos_;
            lhs = make(loc, ast::Sum{lhs, term()});
        }
        return lhs;
    }

    ExprPtr term() {
        const Token& t = peek();
        SourceLoc loc = t.loc;
        if (t.kind == Tok::integer && t.text == "0") {
            ++pos_;
            return make(loc, ast::Zero{});
        }
        if (at_punct('(')) {
            ++pos_;
            auto e = expr();
            punct(')');
            return e;
        }
        if (t.kind == Tok::ident) {
            if (t.text == "El") return el();
            if (t.text == "Reg") return reg();
            if (t.text == "dual") {
                ++pos_;
                punct('(');
                auto a = expr();
                punct(')');
                return make(loc, ast::Dual{a});
            }
            if (t.text == "tensor") {
                ++pos_;
                punct('(');
                auto a = expr();
                punct(',');
                auto b = expr();
                punct(')');
                return make(loc, ast::Tensor{a, b});
            }
            if (t.text == "pull" || t.text == "push") {
                bool pull = t.text == "pull";
                ++pos_;
                punct('(');
                std::int64_t q = positive(pull ? "pullback degree" : "pushforward degree");
                punct(',');
                auto a = expr();
                punct(')');
                return pull ? make(loc, ast::Pull{q, a}) : make(loc, ast::Push{q, a});
            }
        }
        fail({"'El'", "'Reg'", "'dual'", "'tensor'", "'pull'", "'push'", "'0'", "'('"});
    }

    std::optional<std::vector<Rat>> rank_and_exps(std::int64_t& rank) {
        keyword("rank");
        punct('=');
        SourceLoc rank_loc = peek().loc;
        rank = positive("rank");
        std::optional<std::vector<Rat>> exps;
        if (at_punct(',')) {
            ++pos_;
            keyword("exp");
            punct('=');
            punct('[');
            exps.emplace();
            if (!at_punct(']')) {
                for (;;) {
                    bool neg = at_punct('-');
                    if (neg) ++pos_;
                    Rat r = rational();
                    exps->push_back(neg ? -r : r);
                    if (!at_punct(',')) break;
                    ++pos_;
                }
            }
            punct(']');
            if (static_cast<std::int64_t>(exps->size()) != rank)
                semantic(rank_loc, "exp lists " + std::to_string(exps->size()) + " values but rank is " +
                                       std::to_string(rank));
        }
        punct(')');
        return exps;
    }

    ExprPtr el() {
        SourceLoc loc = peek().loc;
        ++pos_;
        punct('(');
        std::int64_t p = positive("ramification");
        punct(',');
        Poly phi = poly();
        punct(',');
        std::int64_t rank = 0;
        auto exps = rank_and_exps(rank);
        std::vector<RamifiedExponent::Term> terms(phi.terms().begin(), phi.terms().end());
        normalize_terms(terms);
        return make(loc, ast::El{p, std::move(terms), rank, std::move(exps)});
    }

    ExprPtr reg() {
        SourceLoc loc = peek().loc;
        ++pos_;
        punct('(');
        std::int64_t rank = 0;
        auto exps = rank_and_exps(rank);
        return make(loc, ast::Reg{rank, std::move(exps)});
    }

    Poly poly() {
        bool neg = at_punct('-');
        if (neg) ++pos_;
        Poly acc = mono();
        if (neg) acc = -acc;
        while (at_punct('+') || at_punct('-')) {
            bool minus = at_punct('-');
            ++pos_;
            Poly m = mono();
            acc += minus ? -m : m;
        }
        return acc;
    }

    Poly mono() {
        Poly acc = factor();
        while (at_punct('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        const Token& t = peek();
        if (t.kind == Tok::integer) return Poly::constant(CycloRat(rational()));
        if (at_punct('(')) {
            ++pos_;
            Poly p = poly();
            punct(')');
            return p;
        }
        if (at_ident("u")) {
            ++pos_;
            std::int64_t k = 1;
            if (at_punct('^')) {
                ++pos_;
                k = signed_integer();
            }
            return Poly::monomial(k, CycloRat(1));
        }
        if (at_ident("zeta")) {
            ++pos_;
            punct('(');
            SourceLoc loc = peek().loc;
            std::int64_t n = integer();
            if (n < 1) semantic(loc, "ζ order must be ≥ 1");
            punct(')');
            std::int64_t j = 1;
            if (at_punct('^')) {
                ++pos_;
                j = signed_integer();
            }
            return Poly::constant(CycloRat::zeta(n, j));
        }
        fail({"rational", "'u'", "'zeta'", "'('"});
    }
};

std::string exps_text(const std::optional<std::vector<Rat>>& exps) {
    if (!exps) return "";
    std::string s = ", exp=[";
    for (std::size_t i = 0; i < exps->size(); ++i) s += (i ? ", " : "") + (*exps)[i].str();
    return s + "]";
}

}  // namespace

ExprPtr parse_module(const std::string& text) { return Parser(lex(text)).parse(); }

std::string print_expr(const ExprPtr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ast::El>) {
                return "El(" + std::to_string(n.ram) + ", " + laurent_str(n.phi) + ", rank=" + std::to_string(n.rank) +
                       exps_text(n.exps) + ")";
            } else if constexpr (std::is_same_v<T, ast::Reg>) {
                return "Reg(rank=" + std::to_string(n.rank) + exps_text(n.exps) + ")";
            } else if constexpr (std::is_same_v<T, ast::Zero>) {
                return "0";
            } else if constexpr (std::is_same_v<T, ast::Sum>) {
                std::string rhs = print_expr(n.rhs);
                if (std::holds_alternative<ast::Sum>(n.rhs->node)) rhs = "(" + rhs + ")";
                return print_expr(n.lhs) + " + " + rhs;
            } else if constexpr (std::is_same_v<T, ast::Dual>) {
                return "dual(" + print_expr(n.arg) + ")";
            } else if constexpr (std::is_same_v<T, ast::Tensor>) {
                return "tensor(" + print_expr(n.lhs) + ", " + print_expr(n.rhs) + ")";
            } else if constexpr (std::is_same_v<T, ast::Pull>) {
                return "pull(" + std::to_string(n.q) + ", " + print_expr(n.arg) + ")";
            } else {
                return "push(" + std::to_string(n.q) + ", " + print_expr(n.arg) + ")";
            }
        },
        e->node);
}

namespace {

RegularPart regular_of(std::int64_t rank, const std::optional<std::vector<Rat>>& exps) {
    return exps ? RegularPart(*exps) : RegularPart::trivial(rank);
}

}  // namespace

FormalModule evaluate(const ExprPtr& e) {
    return std::visit(
        [](const auto& n) -> FormalModule {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ast::El>) {
                return FormalModule(ElementaryModule::make(n.ram, n.phi, regular_of(n.rank, n.exps)));
            } else if constexpr (std::is_same_v<T, ast::Reg>) {
                return FormalModule(ElementaryModule::regular(regular_of(n.rank, n.exps)));
            } else if constexpr (std::is_same_v<T, ast::Zero>) {
                return FormalModule();
            } else if constexpr (std::is_same_v<T, ast::Sum>) {
                return direct_sum(evaluate(n.lhs), evaluate(n.rhs));
            } else if constexpr (std::is_same_v<T, ast::Dual>) {
                return dual(evaluate(n.arg));
            } else if constexpr (std::is_same_v<T, ast::Tensor>) {
                return tensor(evaluate(n.lhs), evaluate(n.rhs));
            } else if constexpr (std::is_same_v<T, ast::Pull>) {
                return pullback(n.q, evaluate(n.arg));
            } else {
                return pushforward(n.q, evaluate(n.arg));
            }
        },
        e->node);
}

FormalModule module_from_text(const std::string& text) { return evaluate(parse_module(text)); }

}  // namespace slopelab
