#pragma once

#include "weyl/diffop.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weyl {

// Grammar (ASCII, whitespace insignificant between tokens):
//   expr     := term (("+"|"-") term)*
//   term     := ("-")? factor ("*" factor)*
//   factor   := atom ("^" nat)?
//   atom     := rational | var | "(" expr ")"
//   var      := ("x"|"d") nat
//   rational := int ("/" nat)?          no whitespace inside
// Products keep their left-to-right order; the ring is noncommutative.

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

struct AstNode {
    struct Literal { Coefficient value; };
    /// 1-based index as written.
    struct Variable { bool derivation; std::size_t index; };
    struct Sum { std::vector<AstPtr> terms; std::vector<bool> negated; };
    struct Product { std::vector<AstPtr> factors; bool negated; };
    struct Power { AstPtr base; std::uint32_t exponent; };
    struct Group { AstPtr inner; };

    std::variant<Literal, Variable, Sum, Product, Power, Group> node;
    std::size_t line = 1;
    std::size_t column = 1;
};

AstPtr parse_ast(std::string_view text);

/// Evaluates in A_n. Variable indices above n raise ParseError at the variable.
DiffOp evaluate(const AstNode& ast, std::size_t n);

DiffOp parse(std::string_view text, std::size_t n);
/// Parses an expression that must not contain any d_i.
Polynomial parse_polynomial(std::string_view text, std::size_t n);
/// Comma-separated list of expressions; an empty or blank string yields no operators.
std::vector<DiffOp> parse_list(std::string_view text, std::size_t n);

/// Canonical rendering: degrevlex-descending terms, x-factors before
/// d-factors, e.g. "x1^2*d1 + 2*x1". parse(print(p), n) == p.
std::string print(const DiffOp& p);
std::string print(const Polynomial& f);
std::string print(const SymbolPoly& s);

} // namespace weyl
