#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slopelab/formal_module.hpp"

namespace slopelab {

struct SourceLoc {
    int line = 1;
    int col = 1;
};

/// Syntax or semantic error with the position of the offending token.
class ExprError : public std::runtime_error {
public:
    enum class Kind { syntax, semantic };
    ExprError(Kind kind, SourceLoc loc, std::string message, std::vector<std::string> expected = {});

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] SourceLoc loc() const noexcept { return loc_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }
    /// Token descriptions acceptable at loc (syntax errors only).
    [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    Kind kind_;
    SourceLoc loc_;
    std::string message_;
    std::vector<std::string> expected_;
};

struct ModuleExpr;
using ExprPtr = std::shared_ptr<const ModuleExpr>;

namespace ast {
struct El {
    std::int64_t ram;
    std::vector<RamifiedExponent::Term> phi;  // normalized, negative powers only
    std::int64_t rank;
    std::optional<std::vector<Rat>> exps;
};
struct Reg {
    std::int64_t rank;
    std::optional<std::vector<Rat>> exps;
};
struct Zero {};
struct Sum {
    ExprPtr lhs, rhs;
};
struct Dual {
    ExprPtr arg;
};
struct Tensor {
    ExprPtr lhs, rhs;
};
struct Pull {
    std::int64_t q;
    ExprPtr arg;
};
struct Push {
    std::int64_t q;
    ExprPtr arg;
};
}  // namespace ast

struct ModuleExpr {
    using Node = std::variant<ast::El, ast::Reg, ast::Zero, ast::Sum, ast::Dual, ast::Tensor, ast::Pull, ast::Push>;
    SourceLoc loc;
    Node node;
};

/// Grammar (whitespace-insensitive, `+` binds loosest):
///   expr   := term ('+' term)*
///   term   := 'El' '(' INT ',' phi ',' 'rank' '=' INT [',' 'exp' '=' list] ')'
///           | 'Reg' '(' 'rank' '=' INT [',' 'exp' '=' list] ')'
///           | 'dual' '(' expr ')' | 'tensor' '(' expr ',' expr ')'
///           | 'pull' '(' INT ',' expr ')' | 'push' '(' INT ',' expr ')'
///           | '0' | '(' expr ')'
///   phi    := ['-'] mono (('+' | '-') mono)*
///   mono   := factor ('*' factor)*
///   factor := rat | 'u' ['^' int] | 'zeta' '(' INT ')' ['^' int] | '(' phi ')'
///   list   := '[' [['-'] rat (',' ['-'] rat)*] ']'
///   rat    := INT ['/' INT]
///   int    := ['-'] INT
/// Terms of phi with nonnegative powers of u are dropped. Throws ExprError.
ExprPtr parse_module(const std::string& text);

/// Canonical text of the tree; parse_module(print_expr(e)) prints the same.
std::string print_expr(const ExprPtr& e);

FormalModule evaluate(const ExprPtr& e);

/// parse + evaluate.
FormalModule module_from_text(const std::string& text);

}  // namespace slopelab
