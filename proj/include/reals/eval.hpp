#pragma once

/// Expression evaluation and decimal rendering.
///
/// evaluate() maps a parsed tree onto the CReal operations; partial
/// functions (division, ln, the inverse trig family) search for their
/// apartness witnesses with a capped prove_nonzero, and out-of-domain
/// literal operands are rejected up front. format_digits() renders a
/// CReal to n fractional digits with |printed - value| <= 10^-n.

#include <optional>
#include <stdexcept>
#include <string>

#include "reals/creal.hpp"
#include "reals/elementary.hpp"
#include "reals/expr.hpp"

namespace reals {

struct EvalOptions {
    int max_halvings = kDefaultSeparationCap;
};

namespace detail {

// The exact value of a literal, looking through unary minus, so that
// expressions like ln(-1) fail with a domain error instead of a witness
// search.
inline std::optional<Rational> literal_value(const Expr& e) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node)) return lit->value;
    if (const auto* u = std::get_if<Expr::Unary>(&e.node)) {
        if (u->op == UnaryOp::neg) {
            if (auto v = literal_value(*u->operand)) return -*v;
        }
    }
    return std::nullopt;
}

inline void check_literal_domain(UnaryOp op, const Expr& operand) {
    auto v = literal_value(operand);
    if (!v) return;
    switch (op) {
        case UnaryOp::ln:
            if (v->sign() <= 0) throw std::domain_error("ln of a non-positive literal");
            break;
        case UnaryOp::sqrt:
            if (v->sign() < 0) throw std::domain_error("sqrt of a negative literal");
            break;
        case UnaryOp::asin:
        case UnaryOp::acos:
            if (abs(*v) >= Rational(1))
                throw std::domain_error("inverse sine/cosine of a literal outside (-1, 1)");
            break;
        case UnaryOp::atanh:
            if (abs(*v) >= Rational(1))
                throw std::domain_error("atanh of a literal outside (-1, 1)");
            break;
        case UnaryOp::acosh:
            if (*v < Rational(1)) throw std::domain_error("acosh of a literal below 1");
            break;
        default:
            break;
    }
}

}  // namespace detail

inline CReal evaluate(const Expr& e, const EvalOptions& options = {});

namespace detail {

inline CReal evaluate_unary(UnaryOp op, const Expr& operand, const EvalOptions& options) {
    check_literal_domain(op, operand);
    CReal v = evaluate(operand, options);
    std::optional<int> cap = options.max_halvings;
    switch (op) {
        case UnaryOp::neg: return negate(v);
        case UnaryOp::abs: return abs_real(v);
        case UnaryOp::sqrt: return sqrt_real(v);
        case UnaryOp::exp: return exp_real(v);
        case UnaryOp::ln: return ln_real(v, cap);
        case UnaryOp::sin: return sin_real(v);
        case UnaryOp::cos: return cos_real(v);
        case UnaryOp::tan: return tan_real(v, cap);
        case UnaryOp::atan: return atan_real(v);
        case UnaryOp::asin: return arcsin_real(v, cap);
        case UnaryOp::acos: return arccos_real(v, cap);
        case UnaryOp::sinh: return sinh_real(v);
        case UnaryOp::cosh: return cosh_real(v);
        case UnaryOp::tanh: return tanh_real(v);
        case UnaryOp::asinh: return arcsinh_real(v, cap);
        case UnaryOp::acosh: return arccosh_real(v);
        case UnaryOp::atanh: return arctanh_real(v, cap);
    }
    throw std::logic_error("evaluate_unary: unreachable");
}

inline CReal evaluate_binary(const Expr::Binary& b, const EvalOptions& options) {
    std::optional<int> cap = options.max_halvings;
    if (b.op == BinaryOp::pow) {
        // Integer literal exponents go through repeated squaring; anything
        // else is exp(y ln x) and needs a positive base.
        if (auto n = literal_value(*b.rhs); n && n->is_integer()) {
            CReal base = evaluate(*b.lhs, options);
            Int k = n->numerator();
            if (k.fits_slong_p()) {
                long exponent = k.get_si();
                if (exponent >= 0) return power_int(base, static_cast<unsigned>(exponent));
                return recip(power_int(base, static_cast<unsigned>(-exponent)), cap);
            }
        }
        return pow_real(evaluate(*b.lhs, options), evaluate(*b.rhs, options), cap);
    }
    CReal lhs = evaluate(*b.lhs, options);
    CReal rhs = evaluate(*b.rhs, options);
    switch (b.op) {
        case BinaryOp::add: return add(lhs, rhs);
        case BinaryOp::sub: return sub(lhs, rhs);
        case BinaryOp::mul: return mult(lhs, rhs);
        case BinaryOp::div: return mult(lhs, recip(rhs, cap));
        case BinaryOp::pow: break;
    }
    throw std::logic_error("evaluate_binary: unreachable");
}

}  // namespace detail

inline CReal evaluate(const Expr& e, const EvalOptions& options) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node))
        return CReal::from_rational(lit->value);
    if (const auto* c = std::get_if<Expr::Constant>(&e.node)) {
        if (c->which == ConstantKind::pi) return pi();
        return exp_rational(Rational(1));
    }
    if (const auto* u = std::get_if<Expr::Unary>(&e.node))
        return detail::evaluate_unary(u->op, *u->operand, options);
    return detail::evaluate_binary(std::get<Expr::Binary>(e.node), options);
}

/// A rendered approximation: mantissa / 10^digits with
/// |mantissa / 10^digits - x| <= 10^-digits.
struct DigitOutput {
    Int mantissa;
    int digits;

    /// Plain decimal: sign, integer part, point, `digits` fractional digits.
    std::string decimal() const {
        Int a = ::abs(mantissa);
        std::string s = a.get_str();
        std::string out;
        if (mantissa < 0) out += '-';
        if (digits == 0) {
            out += s;
            return out;
        }
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        out += s.substr(0, s.size() - digits);
        out += '.';
        out += s.substr(s.size() - digits);
        return out;
    }

    /// Integer-mantissa form: <mantissa>x10^-<digits>.
    std::string raw() const {
        return mantissa.get_str() + "x10^-" + std::to_string(digits);
    }
};

inline DigitOutput format_digits(const CReal& x, int digits) {
    if (digits < 0) throw std::invalid_argument("format_digits: digit count must be >= 0");
    Int ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    CReal scaled = scale(Rational(ten_pow), x);
    Int m = round_nearest(scaled(Gauge(Rational(1, 2))));
    return DigitOutput{std::move(m), digits};
}

}  // namespace reals
