#include "leftorder/germ_expr.hpp"

#include "leftorder/errors.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace leftorder {

namespace expr {

namespace {
Expr make(ExprOp op, Expr a = nullptr, Expr b = nullptr) {
    return std::make_shared<const ExprNode>(ExprNode{op, Rational(0), std::move(a), std::move(b)});
}
bool is_const(const Expr& e, const Rational& q) { return e->op == ExprOp::Const && e->value == q; }
}  // namespace

Expr x() { return make(ExprOp::X); }
Expr s() { return make(ExprOp::S); }
Expr constant(const Rational& q) {
    return std::make_shared<const ExprNode>(ExprNode{ExprOp::Const, q, nullptr, nullptr});
}
Expr add(Expr a, Expr b) {
    if (a->op == ExprOp::Const && b->op == ExprOp::Const) return constant(a->value + b->value);
    if (is_const(a, 0)) return b;
    if (is_const(b, 0)) return a;
    return make(ExprOp::Add, std::move(a), std::move(b));
}
Expr sub(Expr a, Expr b) {
    if (a->op == ExprOp::Const && b->op == ExprOp::Const) return constant(a->value - b->value);
    if (is_const(b, 0)) return a;
    return make(ExprOp::Sub, std::move(a), std::move(b));
}
Expr mul(Expr a, Expr b) {
    if (a->op == ExprOp::Const && b->op == ExprOp::Const) return constant(a->value * b->value);
    if (is_const(a, 0) || is_const(b, 0)) return constant(0);
    if (is_const(a, 1)) return b;
    if (is_const(b, 1)) return a;
    return make(ExprOp::Mul, std::move(a), std::move(b));
}
Expr div(Expr a, Expr b) {
    if (a->op == ExprOp::Const && b->op == ExprOp::Const && b->value != 0) return constant(a->value / b->value);
    if (is_const(b, 1)) return a;
    return make(ExprOp::Div, std::move(a), std::move(b));
}
Expr neg(Expr a) {
    if (a->op == ExprOp::Const) return constant(-a->value);
    return make(ExprOp::Neg, std::move(a));
}
Expr min(Expr a, Expr b) { return make(ExprOp::Min, std::move(a), std::move(b)); }
Expr max(Expr a, Expr b) { return make(ExprOp::Max, std::move(a), std::move(b)); }
Expr abs(Expr a) { return make(ExprOp::Abs, std::move(a)); }

}  // namespace expr

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = sum();
        skip();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (accept('+')) {
                e = std::make_shared<const ExprNode>(ExprNode{ExprOp::Add, 0, e, product()});
            } else if (accept('-')) {
                e = std::make_shared<const ExprNode>(ExprNode{ExprOp::Sub, 0, e, product()});
            } else {
                return e;
            }
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) {
                e = std::make_shared<const ExprNode>(ExprNode{ExprOp::Mul, 0, e, unary()});
            } else if (accept('/')) {
                e = std::make_shared<const ExprNode>(ExprNode{ExprOp::Div, 0, e, unary()});
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return std::make_shared<const ExprNode>(ExprNode{ExprOp::Neg, 0, unary(), nullptr});
        if (accept('+')) return unary();
        return primary();
    }

    Expr primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return expr::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x") return expr::x();
            if (name == "s") return expr::s();
            if (name == "abs") {
                expect('(');
                Expr a = sum();
                expect(')');
                return std::make_shared<const ExprNode>(ExprNode{ExprOp::Abs, 0, a, nullptr});
            }
            if (name == "min" || name == "max") {
                expect('(');
                Expr a = sum();
                expect(',');
                Expr b = sum();
                expect(')');
                return std::make_shared<const ExprNode>(
                    ExprNode{name == "min" ? ExprOp::Min : ExprOp::Max, 0, a, b});
            }
            pos_ = start;
            fail("unknown identifier `" + std::string(name) + "`");
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

int precedence(ExprOp op) {
    switch (op) {
        case ExprOp::Add:
        case ExprOp::Sub: return 1;
        case ExprOp::Mul:
        case ExprOp::Div: return 2;
        case ExprOp::Neg: return 3;
        default: return 4;
    }
}

std::string print(const Expr& e, int context) {
    std::string out;
    int mine = precedence(e->op);
    switch (e->op) {
        case ExprOp::X: return "x";
        case ExprOp::S: return "s";
        case ExprOp::Const:
            if (e->value.get_den() == 1 && e->value >= 0) return e->value.get_str();
            return "(" + e->value.get_str() + ")";
        case ExprOp::Add: out = print(e->lhs, 1) + " + " + print(e->rhs, 2); break;
        case ExprOp::Sub: out = print(e->lhs, 1) + " - " + print(e->rhs, 2); break;
        case ExprOp::Mul: out = print(e->lhs, 2) + "*" + print(e->rhs, 3); break;
        case ExprOp::Div: out = print(e->lhs, 2) + "/" + print(e->rhs, 3); break;
        case ExprOp::Neg: out = "-" + print(e->lhs, 3); break;
        case ExprOp::Min: return "min(" + print(e->lhs, 0) + ", " + print(e->rhs, 0) + ")";
        case ExprOp::Max: return "max(" + print(e->lhs, 0) + ", " + print(e->rhs, 0) + ")";
        case ExprOp::Abs: return "abs(" + print(e->lhs, 0) + ")";
    }
    return mine < context ? "(" + out + ")" : out;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) { return print(e, 0); }

Rational evaluate(const Expr& e, const Rational& x, const Rational& s) {
    switch (e->op) {
        case ExprOp::X: return x;
        case ExprOp::S: return s;
        case ExprOp::Const: return e->value;
        case ExprOp::Add: return evaluate(e->lhs, x, s) + evaluate(e->rhs, x, s);
        case ExprOp::Sub: return evaluate(e->lhs, x, s) - evaluate(e->rhs, x, s);
        case ExprOp::Mul: return evaluate(e->lhs, x, s) * evaluate(e->rhs, x, s);
        case ExprOp::Div: {
            const Rational den = evaluate(e->rhs, x, s);
            if (den == 0) throw DomainError("division by zero at x = " + to_string(x) + ", s = " + to_string(s));
            return evaluate(e->lhs, x, s) / den;
        }
        case ExprOp::Neg: return -evaluate(e->lhs, x, s);
        case ExprOp::Min: {
            Rational a = evaluate(e->lhs, x, s), b = evaluate(e->rhs, x, s);
            return a < b ? a : b;
        }
        case ExprOp::Max: {
            Rational a = evaluate(e->lhs, x, s), b = evaluate(e->rhs, x, s);
            return a > b ? a : b;
        }
        case ExprOp::Abs: {
            Rational a = evaluate(e->lhs, x, s);
            return a < 0 ? Rational(-a) : a;
        }
    }
    throw InvariantViolation("unknown expression node");
}

bool depends_on_x(const Expr& e) {
    if (!e) return false;
    if (e->op == ExprOp::X) return true;
    return depends_on_x(e->lhs) || depends_on_x(e->rhs);
}

Expr substitute_x(const Expr& e, const Expr& replacement) {
    switch (e->op) {
        case ExprOp::X: return replacement;
        case ExprOp::S:
        case ExprOp::Const: return e;
        case ExprOp::Neg:
        case ExprOp::Abs:
            return std::make_shared<const ExprNode>(
                ExprNode{e->op, Rational(0), substitute_x(e->lhs, replacement), nullptr});
        default:
            return std::make_shared<const ExprNode>(ExprNode{e->op, Rational(0), substitute_x(e->lhs, replacement),
                                                             substitute_x(e->rhs, replacement)});
    }
}

namespace {

// e = slope * x + offset with slope, offset free of x.
std::optional<std::pair<Expr, Expr>> affine_parts(const Expr& e) {
    using expr::add;
    using expr::constant;
    using expr::mul;
    if (!depends_on_x(e)) return std::make_pair(constant(0), e);
    switch (e->op) {
        case ExprOp::X: return std::make_pair(constant(1), constant(0));
        case ExprOp::Add:
        case ExprOp::Sub: {
            auto l = affine_parts(e->lhs), r = affine_parts(e->rhs);
            if (!l || !r) return std::nullopt;
            if (e->op == ExprOp::Add) return std::make_pair(add(l->first, r->first), add(l->second, r->second));
            return std::make_pair(expr::sub(l->first, r->first), expr::sub(l->second, r->second));
        }
        case ExprOp::Neg: {
            auto l = affine_parts(e->lhs);
            if (!l) return std::nullopt;
            return std::make_pair(expr::neg(l->first), expr::neg(l->second));
        }
        case ExprOp::Mul: {
            if (!depends_on_x(e->lhs)) {
                auto r = affine_parts(e->rhs);
                if (!r) return std::nullopt;
                return std::make_pair(mul(e->lhs, r->first), mul(e->lhs, r->second));
            }
            if (!depends_on_x(e->rhs)) {
                auto l = affine_parts(e->lhs);
                if (!l) return std::nullopt;
                return std::make_pair(mul(l->first, e->rhs), mul(l->second, e->rhs));
            }
            return std::nullopt;
        }
        case ExprOp::Div: {
            if (depends_on_x(e->rhs)) return std::nullopt;
            auto l = affine_parts(e->lhs);
            if (!l) return std::nullopt;
            return std::make_pair(expr::div(l->first, e->rhs), expr::div(l->second, e->rhs));
        }
        default: return std::nullopt;
    }
}

}  // namespace

Expr invert_in_x(const Expr& e) {
    if ((e->op == ExprOp::Min || e->op == ExprOp::Max) && depends_on_x(e->lhs) && depends_on_x(e->rhs)) {
        // For increasing pieces: min(f, g)^-1 = max(f^-1, g^-1) and vice versa.
        Expr a = invert_in_x(e->lhs), b = invert_in_x(e->rhs);
        return e->op == ExprOp::Min ? expr::max(a, b) : expr::min(a, b);
    }
    auto parts = affine_parts(e);
    if (!parts) throw UnsupportedInverse("no closed-form inverse for `" + to_string(e) + "`");
    const auto& [slope, offset] = *parts;
    if (slope->op == ExprOp::Const && slope->value == 0) {
        throw UnsupportedInverse("`" + to_string(e) + "` does not depend on x");
    }
    return expr::div(expr::sub(expr::x(), offset), slope);
}

}  // namespace leftorder
