#include "circ3/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <utility>

namespace circ3 {

namespace {

NodePtr make(Op op, std::size_t pos) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->pos = pos;
    return n;
}

NodePtr make_unary(Op op, NodePtr a, std::size_t pos) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->pos = pos;
    return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b, std::size_t pos) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    n->pos = pos;
    return n;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : s_(src) {}

    NodePtr run() {
        skip_ws();
        NodePtr e = expr();
        skip_ws();
        if (i_ < s_.size()) throw ParseError("syntax error: unexpected input", i_);
        return e;
    }

  private:
    const std::string& s_;
    std::size_t i_ = 0;

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            std::size_t pos = i_;
            if (eat('+'))
                lhs = make_binary(Op::Add, lhs, term(), pos);
            else if (eat('-'))
                lhs = make_binary(Op::Sub, lhs, term(), pos);
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            std::size_t pos = i_;
            if (eat('*'))
                lhs = make_binary(Op::Mul, lhs, factor(), pos);
            else if (eat('/'))
                lhs = make_binary(Op::Div, lhs, factor(), pos);
            else
                return lhs;
        }
    }

    NodePtr factor() {
        NodePtr base = unary();
        std::size_t pos = i_;
        if (eat('^')) {
            auto n = std::make_shared<ExprNode>();
            n->op = Op::Pow;
            n->a = std::move(base);
            n->ipow = integer();
            n->pos = pos;
            return n;
        }
        return base;
    }

    NodePtr unary() {
        std::size_t pos = i_;
        if (eat('-')) return make_unary(Op::Neg, unary(), pos);
        return atom();
    }

    int integer() {
        skip_ws();
        std::size_t start = i_;
        bool negative = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            negative = true;
            ++i_;
        }
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw ParseError("expected integer exponent", start);
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_] - '0');
            if (v > 1000000) throw ParseError("exponent too large", start);
            ++i_;
        }
        if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
            throw ParseError("exponent must be an integer", start);
        return static_cast<int>(negative ? -v : v);
    }

    NodePtr atom() {
        skip_ws();
        std::size_t pos = i_;
        if (i_ >= s_.size()) throw ParseError("syntax error: unexpected end of input", pos);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            NodePtr e = expr();
            if (!eat(')')) throw ParseError("syntax error: expected ')'", i_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ParseError(std::string("syntax error: unexpected character '") + c + "'", pos);
    }

    NodePtr number() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ < s_.size() && s_[i_] == '.') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        if (i_ == start || (i_ == start + 1 && s_[start] == '.'))
            throw ParseError("malformed number", start);
        if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
            ++i_;
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) ++i_;
            std::size_t digs = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ == digs) throw ParseError("malformed number: empty exponent", start);
        }
        double v = 0.0;
        auto res = std::from_chars(s_.data() + start, s_.data() + i_, v);
        if (res.ec != std::errc()) throw ParseError("malformed number", start);
        auto n = make(Op::Num, start);
        const_cast<ExprNode*>(n.get())->num = v;
        return n;
    }

    NodePtr identifier() {
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])))) ++i_;
        std::string id = s_.substr(start, i_ - start);
        if (id == "x1" || id == "x2" || id == "x3") {
            auto n = make(Op::Var, start);
            const_cast<ExprNode*>(n.get())->var = id[1] - '1';
            return n;
        }
        Op fn;
        if (id == "sin")
            fn = Op::Sin;
        else if (id == "cos")
            fn = Op::Cos;
        else if (id == "exp")
            fn = Op::Exp;
        else if (id == "log")
            fn = Op::Log;
        else if (id == "sqrt")
            fn = Op::Sqrt;
        else
            throw ParseError("unknown identifier '" + id + "'", start);
        if (!eat('(')) throw ParseError("expected '(' after function name", i_);
        NodePtr arg = expr();
        if (!eat(')')) throw ParseError("syntax error: expected ')'", i_);
        return make_unary(fn, arg, start);
    }
};

// Printing precedence; parentheses are emitted exactly where reparsing
// would otherwise change the tree.
int prec(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        default: return 5;
    }
}

void print_node(const ExprNode* n, std::string& out);

void print_child(const ExprNode* c, bool parens, std::string& out) {
    if (parens) {
        out += '(';
        print_node(c, out);
        out += ')';
    } else {
        print_node(c, out);
    }
}

void print_node(const ExprNode* n, std::string& out) {
    switch (n->op) {
        case Op::Num: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n->num);
            out += buf;
            return;
        }
        case Op::Var:
            out += 'x';
            out += static_cast<char>('1' + n->var);
            return;
        case Op::Neg:
            out += '-';
            // a following Pow would rebind ("-x1^2" parses as (-x1)^2)
            print_child(n->a.get(), prec(n->a->op) < 3 || n->a->op == Op::Pow, out);
            return;
        case Op::Add:
            print_child(n->a.get(), false, out);
            out += " + ";
            print_child(n->b.get(), prec(n->b->op) <= 1, out);
            return;
        case Op::Sub:
            print_child(n->a.get(), false, out);
            out += " - ";
            print_child(n->b.get(), prec(n->b->op) <= 1, out);
            return;
        case Op::Mul:
            print_child(n->a.get(), prec(n->a->op) < 2, out);
            out += "*";
            print_child(n->b.get(), prec(n->b->op) <= 2, out);
            return;
        case Op::Div:
            print_child(n->a.get(), prec(n->a->op) < 2, out);
            out += "/";
            print_child(n->b.get(), prec(n->b->op) <= 2, out);
            return;
        case Op::Pow:
            // the grammar allows one exponent per factor, so a Pow base
            // must be parenthesized too
            print_child(n->a.get(), prec(n->a->op) < 3 || n->a->op == Op::Pow, out);
            out += '^';
            out += std::to_string(n->ipow);
            return;
        case Op::Sin: out += "sin("; break;
        case Op::Cos: out += "cos("; break;
        case Op::Exp: out += "exp("; break;
        case Op::Log: out += "log("; break;
        case Op::Sqrt: out += "sqrt("; break;
    }
    print_node(n->a.get(), out);
    out += ')';
}

std::string subexpr_text(const ExprNode* n) {
    std::string s;
    print_node(n, s);
    return s;
}

Jet2 eval_node(const ExprNode* n, const Vec3& p) {
    switch (n->op) {
        case Op::Num: return jet_const(n->num);
        case Op::Var: return jet_var(p, n->var);
        case Op::Neg: return -eval_node(n->a.get(), p);
        case Op::Add: return eval_node(n->a.get(), p) + eval_node(n->b.get(), p);
        case Op::Sub: return eval_node(n->a.get(), p) - eval_node(n->b.get(), p);
        case Op::Mul: return eval_node(n->a.get(), p) * eval_node(n->b.get(), p);
        case Op::Div: {
            Jet2 num = eval_node(n->a.get(), p);
            Jet2 den = eval_node(n->b.get(), p);
            if (den.v == 0.0)
                throw EvalError("division by zero", subexpr_text(n), n->pos);
            return num / den;
        }
        case Op::Pow: {
            Jet2 base = eval_node(n->a.get(), p);
            if (n->ipow < 0 && base.v == 0.0)
                throw EvalError("zero base with negative exponent", subexpr_text(n), n->pos);
            return jet_powi(base, n->ipow);
        }
        case Op::Sin: return jet_sin(eval_node(n->a.get(), p));
        case Op::Cos: return jet_cos(eval_node(n->a.get(), p));
        case Op::Exp: return jet_exp(eval_node(n->a.get(), p));
        case Op::Log: {
            Jet2 a = eval_node(n->a.get(), p);
            if (a.v <= 0.0) throw EvalError("log of non-positive value", subexpr_text(n), n->pos);
            return jet_log(a);
        }
        case Op::Sqrt: {
            Jet2 a = eval_node(n->a.get(), p);
            if (a.v <= 0.0)
                throw EvalError("sqrt of non-positive value", subexpr_text(n), n->pos);
            return jet_sqrt(a);
        }
    }
    throw EvalError("corrupt expression node", "?", n->pos);
}

bool nodes_equal(const ExprNode* a, const ExprNode* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Op::Num: return a->num == b->num;
        case Op::Var: return a->var == b->var;
        case Op::Pow: return a->ipow == b->ipow && nodes_equal(a->a.get(), b->a.get());
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
            return nodes_equal(a->a.get(), b->a.get()) && nodes_equal(a->b.get(), b->b.get());
        default: return nodes_equal(a->a.get(), b->a.get());
    }
}

bool node_constant(const ExprNode* n) {
    if (!n) return true;
    if (n->op == Op::Var) return false;
    return node_constant(n->a.get()) && node_constant(n->b.get());
}

}  // namespace

Expr parse(const std::string& source) { return Expr(Parser(source).run()); }

std::string to_string(const Expr& e) {
    if (e.empty()) return "";
    return subexpr_text(e.get());
}

bool structurally_equal(const Expr& a, const Expr& b) { return nodes_equal(a.get(), b.get()); }

Jet2 eval_jet2(const Expr& e, const Vec3& p) {
    if (e.empty()) throw EvalError("empty expression", "", 0);
    return eval_node(e.get(), p);
}

bool Expr::is_constant() const { return node_constant(node_.get()); }

Expr expr_num(double c) {
    if (c < 0.0) return expr_neg(expr_num(-c));
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Num;
    n->num = c;
    return Expr(n);
}

Expr expr_var(int i) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Var;
    n->var = i;
    return Expr(n);
}

Expr expr_neg(const Expr& a) { return Expr(make_unary(Op::Neg, a.node(), 0)); }
Expr expr_add(const Expr& a, const Expr& b) { return Expr(make_binary(Op::Add, a.node(), b.node(), 0)); }
Expr expr_sub(const Expr& a, const Expr& b) { return Expr(make_binary(Op::Sub, a.node(), b.node(), 0)); }
Expr expr_mul(const Expr& a, const Expr& b) { return Expr(make_binary(Op::Mul, a.node(), b.node(), 0)); }
Expr expr_div(const Expr& a, const Expr& b) { return Expr(make_binary(Op::Div, a.node(), b.node(), 0)); }

Expr expr_pow(const Expr& a, int n) {
    auto node = std::make_shared<ExprNode>();
    node->op = Op::Pow;
    node->a = a.node();
    node->ipow = n;
    return Expr(node);
}

Expr expr_call(Op fn, const Expr& a) { return Expr(make_unary(fn, a.node(), 0)); }

}  // namespace circ3
