#pragma once

/// Elementary functions on CReal.
///
/// The rational-argument functions (exp, sin, cos, ln, arctan, sqrt)
/// reduce their argument into a small interval, sum an alternating
/// series there (or run a Newton iteration for sqrt), and undo the
/// reduction with lifted arithmetic. The real-argument versions bind the
/// rational ones over a suitable restricted domain with the matching
/// modulus of continuity.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reals/creal.hpp"

namespace reals {

namespace detail {

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace detail

/// Threshold below which power series are summed directly; larger
/// arguments are shrunk by halving / triple-angle steps first.
struct SeriesRadius {
    Rational threshold;

    explicit SeriesRadius(Rational t) : threshold(std::move(t)) {
        if (threshold.sign() <= 0 || threshold > Rational(1, 2))
            throw std::invalid_argument("SeriesRadius must satisfy 0 < threshold <= 1/2");
    }
};

namespace detail {
inline SeriesRadius& series_radius_setting() {
    static SeriesRadius radius{Rational::pow2(-51)};
    return radius;
}
}  // namespace detail

inline const Rational& series_radius() { return detail::series_radius_setting().threshold; }

/// Configuration knob; set before starting computations.
inline void set_series_radius(Rational t) {
    detail::series_radius_setting() = SeriesRadius(std::move(t));
}

/// A strictly alternating series with strictly shrinking terms, produced
/// lazily by a per-function recurrence. terms() hands out a fresh
/// generator, so concurrent queries never share state.
class AlternatingSeries {
public:
    using Generator = std::function<Rational()>;

    explicit AlternatingSeries(std::function<Generator()> make) : make_(std::move(make)) {}

    Generator terms() const { return make_(); }

private:
    std::function<Generator()> make_;
};

/// Sums the prefix of terms larger than the gauge; the first omitted term
/// bounds the remainder, so the result is a regular function.
inline RationalApproximator alternating_sum(const AlternatingSeries& s) {
    return RationalApproximator([s](const Gauge& eps) {
        auto next = s.terms();
        Rational sum(0);
        for (Rational t = next(); abs(t) > eps.value(); t = next()) sum += t;
        return sum;
    });
}

namespace detail {

// sin: t0 = a, t <- -t a^2 / (n^2 + n) with n = 2, 4, 6, ...
inline AlternatingSeries sin_series(const Rational& a) {
    return AlternatingSeries([a]() -> AlternatingSeries::Generator {
        return [t = a, n = Int(2), asq = a * a]() mutable {
            Rational out = t;
            t = -t * asq / Rational(n * n + n);
            n += 2;
            return out;
        };
    });
}

// ln(1 + u): terms (-1)^i u^(i+1) / (i+1) for u in [0, 1/2].
inline AlternatingSeries ln_series(const Rational& u) {
    return AlternatingSeries([u]() -> AlternatingSeries::Generator {
        return [p = u, k = Int(1), u]() mutable {
            Rational out = p / Rational(k);
            p *= -u;
            k += 1;
            return out;
        };
    });
}

// arctan: terms (-1)^i a^(2i+1) / (2i+1) for |a| < 1/2.
inline AlternatingSeries atan_series(const Rational& a) {
    return AlternatingSeries([a]() -> AlternatingSeries::Generator {
        return [p = a, k = Int(1), msq = -(a * a)]() mutable {
            Rational out = p / Rational(k);
            p *= msq;
            k += 2;
            return out;
        };
    });
}

// Taylor series of exp for |a| <= 1/2. Not alternating for a > 0, but the
// term ratio is at most 1/2 there, so twice the first omitted term bounds
// the tail; for a <= 0 the series alternates and the factor is 1.
inline RationalApproximator exp_series_tail(const Rational& a) {
    Rational m = a.sign() <= 0 ? Rational(1) : Rational(2);
    return RationalApproximator([a, m](const Gauge& eps) {
        Rational sum(0);
        Rational term(1);
        Int i(0);
        while (m * abs(term) >= eps.value()) {
            sum += term;
            i += 1;
            term = term * a / Rational(i);
        }
        return sum;
    });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// exp

inline CReal exp_rational(const Rational& a) {
    if (abs(a) <= series_radius()) return CReal::make(detail::exp_series_tail(a));
    return power_int(exp_rational(a / Rational(2)), 2);
}

/// exp on (-inf, upper] with modulus eps * 2^-upper (upper <= 0) or
/// eps * 3^-upper (upper > 0).
inline UniformMap<Rational, RationalApproximator> exp_map(const Int& upper) {
    Rational bound(upper);
    Rational factor;
    if (upper <= 0) {
        factor = Rational(detail::int_pow(2, mpz_get_ui(Int(-upper).get_mpz_t())));
    } else {
        if (!upper.fits_ulong_p()) throw std::overflow_error("exp_map: bound too large");
        factor = Rational(1) / Rational(detail::int_pow(3, upper.get_ui()));
    }
    return {[factor](const Gauge& e) { return Gauge(e.value() * factor); },
            [bound](const Rational& b) { return exp_rational(min(b, bound)).approximator(); },
            "(-inf, upper]"};
}

inline CReal exp_real(const CReal& x) {
    Int upper = x.int_approx() + 1;
    return CReal::make(bind(exp_map(upper), x.compressed()));
}

// ---------------------------------------------------------------------------
// sin / cos

inline CReal sin_rational(const Rational& a) {
    if (abs(a) >= series_radius()) {
        static const std::vector<Rational> triple{Rational(0), Rational(3), Rational(0),
                                                  Rational(-4)};
        return poly_eval(triple, sin_rational(a / Rational(3)));
    }
    return CReal::make(alternating_sum(detail::sin_series(a)));
}

inline CReal cos_rational(const Rational& a) {
    static const std::vector<Rational> flip{Rational(1), Rational(0), Rational(-2)};
    return poly_eval(flip, sin_rational(a / Rational(2)));
}

inline UniformMap<Rational, RationalApproximator> sin_map() {
    return {[](const Gauge& e) { return e; },
            [](const Rational& b) { return sin_rational(b).approximator(); }, "Q"};
}

inline UniformMap<Rational, RationalApproximator> cos_map() {
    return {[](const Gauge& e) { return e; },
            [](const Rational& b) { return cos_rational(b).approximator(); }, "Q"};
}

// ---------------------------------------------------------------------------
// arctan and pi (mutually recursive: the wide-argument reductions shift
// by pi/4 or pi/2, and pi itself is a sum of small arctans).

inline CReal pi_scaled(const Rational& k);

inline CReal arctan_rational(const Rational& a) {
    static const Rational half(1, 2);
    if (a <= -half) return negate(arctan_rational(-a));
    if (abs(a) < half) return CReal::make(alternating_sum(detail::atan_series(a)));
    if (a > Rational(2)) return sub(pi_scaled(Rational(1, 2)), arctan_rational(a.inverse()));
    return add(pi_scaled(Rational(1, 4)),
               arctan_rational((a - Rational(1)) / (a + Rational(1))));
}

inline UniformMap<Rational, RationalApproximator> atan_map() {
    return {[](const Gauge& e) { return e; },
            [](const Rational& b) { return arctan_rational(b).approximator(); }, "Q"};
}

/// k * pi from four small-argument arctan series, summed with a single
/// gauge fan-out.
inline CReal pi_scaled(const Rational& k) {
    if (k.sign() == 0) return CReal::from_rational(Rational(0));
    std::vector<CReal> parts;
    parts.reserve(4);
    parts.push_back(scale(Rational(48) * k, arctan_rational(Rational(1, 38))));
    parts.push_back(scale(Rational(80) * k, arctan_rational(Rational(1, 57))));
    parts.push_back(scale(Rational(28) * k, arctan_rational(Rational(1, 239))));
    parts.push_back(scale(Rational(96) * k, arctan_rational(Rational(1, 268))));
    return sum_list(parts);
}

inline CReal pi() { return pi_scaled(Rational(1)); }
inline CReal two_pi() { return pi_scaled(Rational(2)); }
inline CReal pi_half() { return pi_scaled(Rational(1, 2)); }
inline CReal pi_quarter() { return pi_scaled(Rational(1, 4)); }

// ---------------------------------------------------------------------------
// sin / cos on the reals: subtract the nearest multiple of pi/2 and
// dispatch on the quadrant.

namespace detail {

inline CReal slow_sin(const CReal& x) { return CReal::make(bind(sin_map(), x.compressed())); }
inline CReal slow_cos(const CReal& x) { return CReal::make(bind(cos_map(), x.compressed())); }

inline long quadrant(const Int& n) {
    return static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 4));
}

// n within 1 of x / (pi/2), and x - n pi/2.
inline std::pair<Int, CReal> reduce_by_half_pi(const CReal& x) {
    CReal half_pi = pi_half();
    CReal turns = mult(x, recip_with_witness(half_pi, ApartnessWitness(Rational(1))));
    Int n = turns.int_approx();
    CReal reduced = sub(x, scale(Rational(n), half_pi));
    return {std::move(n), std::move(reduced)};
}

}  // namespace detail

inline CReal sin_real(const CReal& x) {
    auto [n, reduced] = detail::reduce_by_half_pi(x);
    switch (detail::quadrant(n)) {
        case 0: return detail::slow_sin(reduced);
        case 1: return detail::slow_cos(reduced);
        case 2: return negate(detail::slow_sin(reduced));
        default: return negate(detail::slow_cos(reduced));
    }
}

inline CReal cos_real(const CReal& x) {
    auto [n, reduced] = detail::reduce_by_half_pi(x);
    switch (detail::quadrant(n)) {
        case 3: return detail::slow_sin(reduced);
        case 0: return detail::slow_cos(reduced);
        case 1: return negate(detail::slow_sin(reduced));
        default: return negate(detail::slow_cos(reduced));
    }
}

// ---------------------------------------------------------------------------
// ln

namespace detail {

// 1 <= a <= 3/2
inline CReal ln_small(const Rational& a) {
    return CReal::make(alternating_sum(ln_series(a - Rational(1))));
}

// 1 <= a <= 2
inline CReal ln_wide(const Rational& a) {
    if (a < Rational(3, 2)) return ln_small(a);
    return add(ln_small(Rational(3, 4) * a), ln_small(Rational(4, 3)));
}

}  // namespace detail

inline CReal ln_rational(Rational a) {
    if (a.sign() <= 0) throw std::domain_error("ln: argument must be positive");
    if (a < Rational(1)) return negate(ln_rational(a.inverse()));
    long halvings = 0;
    while (a > Rational(2)) {
        a /= Rational(2);
        ++halvings;
    }
    CReal w = detail::ln_wide(a);
    if (halvings == 0) return w;
    return add(w, scale(Rational(halvings), detail::ln_wide(Rational(2))));
}

/// ln on [t, inf) for a positive witness t, with modulus eps * t.
inline UniformMap<Rational, RationalApproximator> ln_map(const Rational& t) {
    if (t.sign() <= 0) throw std::domain_error("ln of a negative real");
    return {[t](const Gauge& e) { return Gauge(e.value() * t); },
            [t](const Rational& b) { return ln_rational(max(b, t)).approximator(); },
            "[t, inf)"};
}

inline CReal ln_real_with_witness(const CReal& x, const Rational& t) {
    return CReal::make(bind(ln_map(t), x.compressed()));
}

inline CReal ln_real(const CReal& x, std::optional<int> max_halvings = kDefaultSeparationCap) {
    ApartnessWitness w = prove_nonzero(x, max_halvings);
    if (!w.is_positive()) throw std::domain_error("ln of a negative real");
    return ln_real_with_witness(x, w.value);
}

// ---------------------------------------------------------------------------
// sqrt

namespace detail {

// Newton iteration for sqrt(a), 1 <= a < 4: b0 = (a+1)/2 has error at
// most 1/2 and each step squares the error; iterates are compressed to
// half the incoming error budget.
inline RationalApproximator newton_sqrt(const Rational& a) {
    return RationalApproximator([a](const Gauge& eps) {
        Rational b = (a + Rational(1)) / Rational(2);
        Rational err(1, 2);
        while (err > eps.value()) {
            Rational squared = err * err;
            b = approx((a + b * b) / (Rational(2) * b), Gauge(squared / Rational(2)));
            err = squared;
        }
        return b;
    });
}

}  // namespace detail

inline CReal sqrt_rational(Rational a) {
    if (a.sign() < 0) throw std::domain_error("sqrt: argument must be non-negative");
    if (a.sign() == 0) return CReal::from_rational(Rational(0));
    long shift = 0;
    while (a < Rational(1)) {
        a *= Rational(4);
        ++shift;
    }
    while (a >= Rational(4)) {
        a /= Rational(4);
        --shift;
    }
    CReal core = CReal::make(detail::newton_sqrt(a));
    if (shift == 0) return core;
    return scale(Rational::pow2(-shift), core);
}

/// sqrt on [0, inf) with modulus eps^2.
inline UniformMap<Rational, RationalApproximator> sqrt_map() {
    return {[](const Gauge& e) { return Gauge(e.value() * e.value()); },
            [](const Rational& b) { return sqrt_rational(max(Rational(0), b)).approximator(); },
            "[0, inf)"};
}

inline CReal sqrt_real(const CReal& x) {
    return CReal::make(bind(sqrt_map(), max_rational(Rational(0), x).compressed()));
}

// ---------------------------------------------------------------------------
// Derived functions. Apartness witnesses are searched with a capped
// prove_nonzero unless the structure provides one for free.

inline CReal atan_real(const CReal& x) {
    return CReal::make(bind(atan_map(), x.compressed()));
}

inline CReal tan_real(const CReal& x, std::optional<int> cap = kDefaultSeparationCap) {
    CReal c = cos_real(x);
    return mult(sin_real(x), recip_with_witness(c, prove_nonzero(c, cap)));
}

inline CReal sinh_real(const CReal& x) {
    return scale(Rational(1, 2), sub(exp_real(x), exp_real(negate(x))));
}

inline CReal cosh_real(const CReal& x) {
    return scale(Rational(1, 2), add(exp_real(x), exp_real(negate(x))));
}

inline CReal tanh_real(const CReal& x) {
    // cosh(x) >= 1, so no witness search is needed.
    return mult(sinh_real(x), recip_with_witness(cosh_real(x), ApartnessWitness(Rational(1))));
}

inline CReal pow_real(const CReal& x, const CReal& y,
                      std::optional<int> cap = kDefaultSeparationCap) {
    ApartnessWitness w = prove_nonzero(x, cap);
    if (!w.is_positive()) throw std::domain_error("pow: base must be positive");
    return exp_real(mult(y, ln_real_with_witness(x, w.value)));
}

inline CReal arcsin_real(const CReal& x, std::optional<int> cap = kDefaultSeparationCap) {
    CReal root = sqrt_real(translate(Rational(1), negate(power_int(x, 2))));
    return atan_real(mult(x, recip_with_witness(root, prove_nonzero(root, cap))));
}

inline CReal arccos_real(const CReal& x, std::optional<int> cap = kDefaultSeparationCap) {
    return sub(pi_half(), arcsin_real(x, cap));
}

inline CReal arcsinh_real(const CReal& x, std::optional<int> cap = kDefaultSeparationCap) {
    CReal v = add(x, sqrt_real(translate(Rational(1), power_int(x, 2))));
    // v = x + sqrt(1 + x^2) > 0 for every x.
    return ln_real_with_witness(v, prove_nonzero(v, cap).value);
}

inline CReal arccosh_real(const CReal& x) {
    CReal v = add(x, sqrt_real(translate(Rational(-1), power_int(x, 2))));
    // x >= 1 gives v >= 1, a static witness.
    return ln_real_with_witness(v, Rational(1));
}

inline CReal arctanh_real(const CReal& x, std::optional<int> cap = kDefaultSeparationCap) {
    CReal den = translate(Rational(1), negate(x));
    CReal q = mult(translate(Rational(1), x), recip_with_witness(den, prove_nonzero(den, cap)));
    ApartnessWitness w = prove_nonzero(q, cap);
    if (!w.is_positive()) throw std::domain_error("ln of a negative real");
    return scale(Rational(1, 2), ln_real_with_witness(q, w.value));
}

}  // namespace reals
