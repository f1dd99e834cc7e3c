#pragma once

// Scalar-field expressions in coordinates x1, x2, x3.
//
// Grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := unary ("^" integer)?
//   unary  := "-" unary | atom
//   atom   := number | "x1" | "x2" | "x3" | func "(" expr ")" | "(" expr ")"
//   func   := "sin" | "cos" | "exp" | "log" | "sqrt"
//
// Exponents are integers only; evaluation is on the raw tree (no
// simplification pass). Expr is an immutable value; evaluation is pure.

#include <memory>
#include <stdexcept>
#include <string>

#include "circ3/jets.hpp"

namespace circ3 {

enum class Op {
    Num,
    Var,  // var index 0..2
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // integer exponent in ipow
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    Op op;
    double num = 0.0;
    int var = 0;
    int ipow = 0;
    NodePtr a, b;
    std::size_t pos = 0;  // byte offset in the source, for error reporting
};

class Expr {
  public:
    Expr() = default;
    explicit Expr(NodePtr n) : node_(std::move(n)) {}

    const ExprNode* get() const { return node_.get(); }
    NodePtr node() const { return node_; }
    bool empty() const { return node_ == nullptr; }

    // True when the expression contains no variable node.
    bool is_constant() const;

  private:
    NodePtr node_;
};

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at byte " + std::to_string(p)), pos(p) {}
};

struct EvalError : std::runtime_error {
    std::size_t pos;
    EvalError(const std::string& msg, const std::string& subexpr, std::size_t p)
        : std::runtime_error(msg + " in subexpression '" + subexpr + "' at byte " +
                             std::to_string(p)),
          pos(p) {}
};

Expr parse(const std::string& source);
std::string to_string(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

Jet2 eval_jet2(const Expr& e, const Vec3& p);

// Programmatic builders (used to form products like alpha*A and generated
// test fields without going through text).
Expr expr_num(double c);
Expr expr_var(int i);
Expr expr_neg(const Expr& a);
Expr expr_add(const Expr& a, const Expr& b);
Expr expr_sub(const Expr& a, const Expr& b);
Expr expr_mul(const Expr& a, const Expr& b);
Expr expr_div(const Expr& a, const Expr& b);
Expr expr_pow(const Expr& a, int n);
Expr expr_call(Op fn, const Expr& a);

}  // namespace circ3
