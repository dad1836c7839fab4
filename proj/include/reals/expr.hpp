#pragma once

/// Arithmetic expression trees and their parser.
///
/// Grammar (loosest to tightest): + and -, then * and /, then unary
/// minus, then right-associative ^, then atoms: decimal literals,
/// named constants (pi, e), function calls f(e) and parentheses.
/// Decimal literals are exact rationals; 3.14 parses as 314/100.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "reals/rational.hpp"

namespace reals {

enum class ConstantKind { pi, e };

enum class UnaryOp {
    neg,
    abs,
    sqrt,
    exp,
    ln,
    sin,
    cos,
    tan,
    atan,
    asin,
    acos,
    sinh,
    cosh,
    tanh,
    asinh,
    acosh,
    atanh,
};

enum class BinaryOp { add, sub, mul, div, pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Literal {
        Rational value;
    };
    struct Constant {
        ConstantKind which;
    };
    struct Unary {
        UnaryOp op;
        ExprPtr operand;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };

    std::variant<Literal, Constant, Unary, Binary> node;
};

inline ExprPtr make_literal(Rational v) {
    return std::make_shared<Expr>(Expr{Expr::Literal{std::move(v)}});
}
inline ExprPtr make_constant(ConstantKind c) {
    return std::make_shared<Expr>(Expr{Expr::Constant{c}});
}
inline ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
    return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(operand)}});
}
inline ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Expr::Literal>(&a.node))
        return la->value == std::get<Expr::Literal>(b.node).value;
    if (const auto* ca = std::get_if<Expr::Constant>(&a.node))
        return ca->which == std::get<Expr::Constant>(b.node).which;
    if (const auto* ua = std::get_if<Expr::Unary>(&a.node)) {
        const auto& ub = std::get<Expr::Unary>(b.node);
        return ua->op == ub.op && structurally_equal(*ua->operand, *ub.operand);
    }
    const auto& ba = std::get<Expr::Binary>(a.node);
    const auto& bb = std::get<Expr::Binary>(b.node);
    return ba.op == bb.op && structurally_equal(*ba.lhs, *bb.lhs) &&
           structurally_equal(*ba.rhs, *bb.rhs);
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::neg: return "-";
        case UnaryOp::abs: return "abs";
        case UnaryOp::sqrt: return "sqrt";
        case UnaryOp::exp: return "exp";
        case UnaryOp::ln: return "ln";
        case UnaryOp::sin: return "sin";
        case UnaryOp::cos: return "cos";
        case UnaryOp::tan: return "tan";
        case UnaryOp::atan: return "atan";
        case UnaryOp::asin: return "asin";
        case UnaryOp::acos: return "acos";
        case UnaryOp::sinh: return "sinh";
        case UnaryOp::cosh: return "cosh";
        case UnaryOp::tanh: return "tanh";
        case UnaryOp::asinh: return "asinh";
        case UnaryOp::acosh: return "acosh";
        case UnaryOp::atanh: return "atanh";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = expression();
        skip_space();
        if (pos_ != src_.size()) throw ParseError("unexpected input", pos_);
        return e;
    }

private:
    ExprPtr expression() {
        ExprPtr lhs = term();
        for (;;) {
            skip_space();
            if (consume('+')) {
                lhs = make_binary(BinaryOp::add, std::move(lhs), term());
            } else if (consume('-')) {
                lhs = make_binary(BinaryOp::sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        for (;;) {
            skip_space();
            if (consume('*')) {
                lhs = make_binary(BinaryOp::mul, std::move(lhs), unary());
            } else if (consume('/')) {
                lhs = make_binary(BinaryOp::div, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        skip_space();
        if (consume('-')) return make_unary(UnaryOp::neg, unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        skip_space();
        if (consume('^')) return make_binary(BinaryOp::pow, std::move(base), unary());
        return base;
    }

    ExprPtr atom() {
        skip_space();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (consume('(')) {
            ExprPtr e = expression();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr number() {
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        std::string frac;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                frac += src_[pos_++];
            if (frac.empty())
                throw ParseError("expected digit after decimal point", pos_);
        }
        (void)start;
        Int numerator((digits + frac).c_str());
        Int denominator;
        mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
        return make_literal(Rational(numerator, denominator));
    }

    ExprPtr identifier() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
            name += src_[pos_++];
        if (name == "pi") return make_constant(ConstantKind::pi);
        if (name == "e") return make_constant(ConstantKind::e);
        UnaryOp op;
        if (name == "abs") op = UnaryOp::abs;
        else if (name == "sqrt") op = UnaryOp::sqrt;
        else if (name == "exp") op = UnaryOp::exp;
        else if (name == "ln") op = UnaryOp::ln;
        else if (name == "sin") op = UnaryOp::sin;
        else if (name == "cos") op = UnaryOp::cos;
        else if (name == "tan") op = UnaryOp::tan;
        else if (name == "atan") op = UnaryOp::atan;
        else if (name == "asin") op = UnaryOp::asin;
        else if (name == "acos") op = UnaryOp::acos;
        else if (name == "sinh") op = UnaryOp::sinh;
        else if (name == "cosh") op = UnaryOp::cosh;
        else if (name == "tanh") op = UnaryOp::tanh;
        else if (name == "asinh") op = UnaryOp::asinh;
        else if (name == "acosh") op = UnaryOp::acosh;
        else if (name == "atanh") op = UnaryOp::atanh;
        else throw ParseError("unknown identifier '" + name + "'", start);
        skip_space();
        expect('(');
        ExprPtr arg = expression();
        expect(')');
        return make_unary(op, std::move(arg));
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_space();
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view source) { return detail::Parser(source).run(); }

/// Fully parenthesized rendering that parses back to the same tree.
/// Literal rationals whose denominator is not a power of ten are printed
/// as (n/d), which reparses as a division node; test generators stick to
/// decimal-representable literals.
inline std::string print_expr(const Expr& e) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node)) {
        const Rational& v = lit->value;
        Int den = v.denominator();
        std::string den_str = den.get_str();
        bool power_of_ten = den_str[0] == '1' && den_str.find_first_not_of('0', 1) == std::string::npos;
        if (v.sign() >= 0 && power_of_ten) {
            std::string digits = v.numerator().get_str();
            std::size_t frac_len = den_str.size() - 1;
            if (frac_len == 0) return digits;
            if (digits.size() <= frac_len)
                digits.insert(0, frac_len - digits.size() + 1, '0');
            digits.insert(digits.size() - frac_len, ".");
            return digits;
        }
        return "(" + v.numerator().get_str() + "/" + v.denominator().get_str() + ")";
    }
    if (const auto* c = std::get_if<Expr::Constant>(&e.node))
        return c->which == ConstantKind::pi ? "pi" : "e";
    if (const auto* u = std::get_if<Expr::Unary>(&e.node)) {
        if (u->op == UnaryOp::neg) return "(-" + print_expr(*u->operand) + ")";
        return std::string(detail::unary_name(u->op)) + "(" + print_expr(*u->operand) + ")";
    }
    const auto& b = std::get<Expr::Binary>(e.node);
    const char* op = "+";
    switch (b.op) {
        case BinaryOp::add: op = "+"; break;
        case BinaryOp::sub: op = "-"; break;
        case BinaryOp::mul: op = "*"; break;
        case BinaryOp::div: op = "/"; break;
        case BinaryOp::pow: op = "^"; break;
    }
    return "(" + print_expr(*b.lhs) + op + print_expr(*b.rhs) + ")";
}

}  // namespace reals
