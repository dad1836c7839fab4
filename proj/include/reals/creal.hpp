#pragma once

/// CReal: the real numbers as the completion of the rationals.
///
/// A CReal packages a regular function with a memoized integer
/// approximation (within 1 of the value). Queries at gauges >= 1 answer
/// with that integer, which keeps coarse approximations small; the
/// clamped function is still regular. Arithmetic is built by lifting
/// uniformly continuous rational functions, and every operation passes
/// its inputs through compress first so intermediate rationals stay
/// simple.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reals/completion.hpp"
#include "reals/rational.hpp"

namespace reals {

inline constexpr int kDefaultSeparationCap = 5000;

/// Thrown when a zero-separation search exhausts its halving cap. Usually
/// means the input was (or is indistinguishable from) zero.
class SeparationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Test-only switch: when false, lifted operations consume raw
/// approximators instead of compressed ones. Results stay equivalent;
/// only approximant sizes change.
inline bool compress_lifted_inputs = true;

/// compress(x)(eps) = the simplest rational within eps/2 of x(eps/2);
/// represents the same real with smaller numerators and denominators.
inline RationalApproximator compress(RationalApproximator x) {
    return RationalApproximator([x = std::move(x)](const Gauge& eps) {
        Gauge half = eps.half();
        return approx(x(half), half);
    });
}

class CReal {
public:
    /// Wraps a regular function, memoizing round_nearest(x(1/2)) and
    /// clamping queries at gauges >= 1 to that integer.
    static CReal make(RationalApproximator x) {
        Int n = round_nearest(x(Gauge(Rational(1, 2))));
        RationalApproximator clamped([x = std::move(x), n](const Gauge& eps) {
            if (eps.value() >= Rational(1)) return Rational(n);
            return x(eps);
        });
        return CReal(std::move(clamped), std::move(n));
    }

    static CReal from_rational(Rational q) { return make(unit<Rational>(std::move(q))); }

    Rational operator()(const Gauge& eps) const { return approximate_(eps); }

    const RationalApproximator& approximator() const { return approximate_; }

    /// The approximator as fed to lifted operations (compressed, unless
    /// the test switch disabled compression).
    RationalApproximator compressed() const {
        return compress_lifted_inputs ? compress(approximate_) : approximate_;
    }

    const Int& int_approx() const { return int_approx_; }

private:
    CReal(RationalApproximator a, Int n) : approximate_(std::move(a)), int_approx_(std::move(n)) {}

    RationalApproximator approximate_;
    Int int_approx_;
};

/// A rational t with 0 < |t| <= |x| and the sign of x: constructive
/// evidence that x is apart from zero.
struct ApartnessWitness {
    Rational value;

    explicit ApartnessWitness(Rational v) : value(std::move(v)) {
        if (value.sign() == 0) throw std::invalid_argument("ApartnessWitness: zero witness");
    }

    bool is_positive() const { return value.sign() > 0; }
};

// ---------------------------------------------------------------------------
// Uniform maps shipped with the real-number layer. Factories are public so
// the modulus contracts can be probed directly.

inline UniformMap<Rational, Rational> negate_map() {
    return {[](const Gauge& e) { return e; }, [](const Rational& b) { return -b; }, "Q"};
}

inline UniformMap<Rational, Rational> translate_map(Rational a) {
    return {[](const Gauge& e) { return e; },
            [a = std::move(a)](const Rational& b) { return a + b; }, "Q"};
}

/// Scaling by a nonzero rational; scale-by-zero is short-circuited by the
/// callers (any modulus would do there).
inline UniformMap<Rational, Rational> scale_map(Rational a) {
    if (a.sign() == 0) throw std::invalid_argument("scale_map: zero factor");
    Rational mag = abs(a);
    return {[mag](const Gauge& e) { return Gauge(e.value() / mag); },
            [a = std::move(a)](const Rational& b) { return a * b; }, "Q"};
}

inline UniformMap<Rational, Rational> abs_map() {
    return {[](const Gauge& e) { return e; }, [](const Rational& b) { return abs(b); }, "Q"};
}

inline UniformMap<Rational, Rational> max_map(Rational a) {
    return {[](const Gauge& e) { return e; },
            [a = std::move(a)](const Rational& b) { return max(a, b); }, "Q -> [a, inf)"};
}

inline UniformMap<Rational, Rational> min_map(Rational a) {
    return {[](const Gauge& e) { return e; },
            [a = std::move(a)](const Rational& b) { return min(a, b); }, "Q -> (-inf, a]"};
}

/// Reciprocal restricted away from zero by a witness t: on [t, inf) for
/// t > 0, on (-inf, t] for t < 0; modulus eps * t^2.
inline UniformMap<Rational, Rational> recip_map(Rational t) {
    if (t.sign() == 0) throw std::invalid_argument("recip_map: zero witness");
    Rational tsq = t * t;
    bool positive = t.sign() > 0;
    return {[tsq](const Gauge& e) { return Gauge(e.value() * tsq); },
            [t = std::move(t), positive](const Rational& b) {
                return positive ? max(t, b).inverse() : min(t, b).inverse();
            },
            positive ? "[t, inf)" : "(-inf, t]"};
}

inline UniformMap<Rational, UniformMap<Rational, Rational>> add_curried() {
    return {[](const Gauge& e) { return e; },
            [](const Rational& a) { return translate_map(a); }, "Q"};
}

/// Curried multiplication with the second factor confined to [-c, c]:
/// outer modulus eps / c, inner modulus eps / |a|. Values are clamped
/// into the stated interval so the moduli hold unconditionally.
inline UniformMap<Rational, UniformMap<Rational, Rational>> mult_curried(Rational c) {
    if (c.sign() <= 0) throw std::invalid_argument("mult_curried: bound must be positive");
    return {[c](const Gauge& e) { return Gauge(e.value() / c); },
            [c](const Rational& a) -> UniformMap<Rational, Rational> {
                if (a.sign() == 0)
                    return {[](const Gauge&) { return Gauge(Rational(1)); },
                            [](const Rational&) { return Rational(0); }, "[-c, c]"};
                Rational mag = abs(a);
                return {[mag](const Gauge& e) { return Gauge(e.value() / mag); },
                        [a, c](const Rational& b) { return a * min(c, max(-c, b)); },
                        "[-c, c]"};
            },
            "Q"};
}

/// b^n on [-c, c] with modulus eps / (n c^(n-1)); requires n >= 1, c >= 1.
inline UniformMap<Rational, Rational> power_map(unsigned n, Rational c) {
    if (n == 0) throw std::invalid_argument("power_map: exponent must be positive");
    if (c < Rational(1)) throw std::invalid_argument("power_map: bound must be >= 1");
    Rational slope(static_cast<long>(n));
    for (unsigned i = 1; i < n; ++i) slope *= c;
    return {[slope](const Gauge& e) { return Gauge(e.value() / slope); },
            [n, c](const Rational& b) {
                Rational clamped = min(c, max(-c, b));
                Rational out(1);
                for (unsigned i = 0; i < n; ++i) out *= clamped;
                return out;
            },
            "[-c, c]"};
}

namespace detail {

inline Rational eval_polynomial(const std::vector<Rational>& p, const Rational& x) {
    Rational out(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) out = *it + x * out;
    return out;
}

/// Sum of |p'| evaluated at max(1, c): a slope bound for p on [-c, c].
inline Rational poly_slope_bound(const std::vector<Rational>& p, const Rational& c) {
    Rational at = max(Rational(1), c);
    Rational slope(0);
    Rational power(1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        slope += Rational(static_cast<long>(i)) * abs(p[i]) * power;
        power *= at;
    }
    return slope;
}

}  // namespace detail

/// Polynomial evaluation on [-c, c] with modulus eps / maxSlope. The
/// caller handles the degenerate maxSlope = 0 case (constant result).
inline UniformMap<Rational, Rational> poly_map(std::vector<Rational> p, Rational c) {
    Rational slope = detail::poly_slope_bound(p, c);
    if (slope.sign() <= 0) throw std::invalid_argument("poly_map: slope bound is zero");
    Rational bound = max(Rational(1), c);
    return {[slope](const Gauge& e) { return Gauge(e.value() / slope); },
            [p = std::move(p), bound](const Rational& b) {
                return detail::eval_polynomial(p, min(bound, max(-bound, b)));
            },
            "[-c, c]"};
}

// ---------------------------------------------------------------------------
// Arithmetic.

inline CReal add(const CReal& x, const CReal& y) {
    return CReal::make(map2(add_curried(), x.compressed(), y.compressed()));
}

inline CReal negate(const CReal& x) {
    return CReal::make(map(negate_map(), x.compressed()));
}

inline CReal sub(const CReal& x, const CReal& y) { return add(x, negate(y)); }

inline CReal translate(const Rational& a, const CReal& x) {
    return CReal::make(map(translate_map(a), x.compressed()));
}

inline CReal scale(const Rational& a, const CReal& x) {
    if (a.sign() == 0) return CReal::from_rational(Rational(0));
    return CReal::make(map(scale_map(a), x.compressed()));
}

/// y * x with x confined to [-c, c], c = |int_approx(x)| + 1. The bound
/// genuinely contains x, and bounding the second operand spares y's side
/// any interval search.
inline CReal mult(const CReal& x, const CReal& y) {
    Rational c(abs(Rational(x.int_approx())) + Rational(1));
    return CReal::make(map2(mult_curried(c), y.compressed(), x.compressed()));
}

inline CReal abs_real(const CReal& x) {
    return CReal::make(map(abs_map(), x.compressed()));
}

inline CReal max_rational(const Rational& a, const CReal& x) {
    return CReal::make(map(max_map(a), x.compressed()));
}

inline CReal min_rational(const Rational& a, const CReal& x) {
    return CReal::make(map(min_map(a), x.compressed()));
}

inline CReal operator+(const CReal& x, const CReal& y) { return add(x, y); }
inline CReal operator-(const CReal& x, const CReal& y) { return sub(x, y); }
inline CReal operator*(const CReal& x, const CReal& y) { return mult(x, y); }
inline CReal operator-(const CReal& x) { return negate(x); }

/// Searches gauges 1, 1/2, 1/4, ... for evidence that x is apart from
/// zero. Diverges on zero when uncapped; with a cap of k halvings, fails
/// after probing gauge 2^-k.
inline ApartnessWitness prove_nonzero(const CReal& x,
                                      std::optional<int> max_halvings = std::nullopt) {
    Gauge g(Rational(1));
    for (int step = 0;; ++step) {
        Rational r = x(g);
        Rational lo = r - g.value();
        Rational hi = r + g.value();
        if (hi.sign() < 0) return ApartnessWitness(hi);
        if (lo.sign() > 0) return ApartnessWitness(lo);
        if (max_halvings && step >= *max_halvings)
            throw SeparationError("cannot separate from zero at precision 2^-" +
                                  std::to_string(step));
        g = g.half();
    }
}

/// Reciprocal of a value witnessed apart from zero. The result does not
/// depend on the witness choice (only its cost does: larger witnesses
/// give cheaper moduli).
inline CReal recip_with_witness(const CReal& x, const ApartnessWitness& t) {
    CReal restricted = t.is_positive() ? max_rational(t.value, x) : min_rational(t.value, x);
    return CReal::make(map(recip_map(t.value), restricted.compressed()));
}

inline CReal recip(const CReal& x, std::optional<int> max_halvings = kDefaultSeparationCap) {
    return recip_with_witness(x, prove_nonzero(x, max_halvings));
}

inline CReal power_int(const CReal& x, unsigned n) {
    if (n == 0) return CReal::from_rational(Rational(1));
    Rational c(abs(Rational(x.int_approx())) + Rational(1));
    return CReal::make(map(power_map(n, c), x.compressed()));
}

inline CReal poly_eval(const std::vector<Rational>& p, const CReal& x) {
    if (p.empty()) return CReal::from_rational(Rational(0));
    Rational c(abs(Rational(x.int_approx())) + Rational(1));
    if (detail::poly_slope_bound(p, c).sign() == 0) return CReal::from_rational(p[0]);
    return CReal::make(map(poly_map(p, c), x.compressed()));
}

/// Sum with a single gauge fan-out: each of the n terms is queried at
/// eps/n, avoiding the eps/2^n blow-up of folded addition.
inline CReal sum_list(const std::vector<CReal>& xs) {
    if (xs.empty()) return CReal::from_rational(Rational(0));
    std::vector<RationalApproximator> terms;
    terms.reserve(xs.size());
    for (const CReal& x : xs) terms.push_back(x.compressed());
    Rational n(static_cast<long>(terms.size()));
    return CReal::make(RationalApproximator([terms = std::move(terms), n](const Gauge& eps) {
        Gauge share(eps.value() / n);
        Rational sum(0);
        for (const auto& t : terms) sum += t(share);
        return sum;
    }));
}

enum class CompareResult { less, greater, indistinguishable };

/// Total surrogate for the (undecidable) order: strict answers are sound;
/// indistinguishable means the sign of x - y cannot be resolved at this
/// precision.
inline CompareResult compare_approx(const CReal& x, const CReal& y, const Gauge& eps) {
    Gauge half = eps.half();
    Rational d = sub(x, y)(half);
    if ((d + half.value()).sign() < 0) return CompareResult::less;
    if ((d - half.value()).sign() > 0) return CompareResult::greater;
    return CompareResult::indistinguishable;
}

}  // namespace reals
