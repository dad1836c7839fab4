#pragma once

/// Arbitrary-precision rationals in canonical lowest terms, plus the
/// number-theoretic helpers the rest of the library builds on: simplest
/// rational selection inside a closed interval, half-to-even rounding and
/// incremental power/factorial streams.
///
/// Arithmetic is backed by GMP (mpz_class / mpq_class). Every constructor
/// canonicalizes, so a Rational always has a positive denominator coprime
/// to its numerator.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reals {

using Int = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    Rational(const Int& num, const Int& den) : v_(num, den) { canonicalize(); }

    const Int numerator() const { return v_.get_num(); }
    const Int denominator() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Largest integer <= this.
    Int floor_int() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
        return q;
    }

    /// Smallest integer >= this.
    Int ceil_int() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
        return q;
    }

    Rational inverse() const {
        if (sign() == 0) throw std::domain_error("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    /// 2^k as an exact rational (k may be negative).
    static Rational pow2(long k) {
        Rational r(1);
        if (k >= 0) {
            mpz_mul_2exp(mpq_numref(r.v_.get_mpq_t()), mpq_numref(r.v_.get_mpq_t()),
                         static_cast<mp_bitcnt_t>(k));
        } else {
            mpz_mul_2exp(mpq_denref(r.v_.get_mpq_t()), mpq_denref(r.v_.get_mpq_t()),
                         static_cast<mp_bitcnt_t>(-k));
        }
        return r;
    }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(Canonical{}, mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(Canonical{}, mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
        return Rational(Canonical{}, mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    struct Canonical {};
    Rational(Canonical, mpq_class v) : v_(std::move(v)) {}

    void canonicalize() {
        if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A strictly positive rational: a requested approximation accuracy.
class Gauge {
public:
    explicit Gauge(Rational v) : v_(std::move(v)) {
        if (v_.sign() <= 0) throw std::domain_error("Gauge must be strictly positive");
    }

    const Rational& value() const { return v_; }
    Gauge half() const { return Gauge(v_ / 2); }

    static Gauge power_of_two(long k) { return Gauge(Rational::pow2(k)); }

    friend bool operator==(const Gauge& a, const Gauge& b) { return a.v_ == b.v_; }
    friend bool operator<(const Gauge& a, const Gauge& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Gauge& a, const Gauge& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Gauge& a, const Gauge& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Gauge& a, const Gauge& b) { return a.v_ >= b.v_; }

private:
    Rational v_;
};

namespace detail {

// Simplest rational in [lo, hi] for 0 < lo <= hi: continued-fraction walk.
// Collects partial quotients until an integer lands inside the interval,
// then folds the quotients back into a fraction.
inline Rational simplest_positive(Rational lo, Rational hi) {
    std::vector<Int> quotients;
    for (;;) {
        Int lo_ceil = lo.ceil_int();
        if (Rational(lo_ceil) <= hi) {
            // An integer is admissible; the smallest one has the smallest
            // numerator over the (positive) interval.
            quotients.push_back(lo_ceil);
            break;
        }
        Int n = lo.floor_int();
        quotients.push_back(n);
        Rational nr(n);
        // No integer in [lo, hi], so n < lo <= hi < n + 1; recurse on the
        // reciprocals of the fractional parts (which swap roles).
        Rational new_lo = (hi - nr).inverse();
        Rational new_hi = (lo - nr).inverse();
        lo = std::move(new_lo);
        hi = std::move(new_hi);
    }
    Rational result(quotients.back());
    for (auto it = std::next(quotients.rbegin()); it != quotients.rend(); ++it)
        result = Rational(*it) + result.inverse();
    return result;
}

}  // namespace detail

/// The rational with the smallest denominator in the closed interval
/// [lo, hi]; ties between equal denominators (which can only happen for
/// integers) go to the smallest absolute numerator.
inline Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_in_interval: lo > hi");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -detail::simplest_positive(-hi, -lo);
    return detail::simplest_positive(lo, hi);
}

/// The simplest rational within eps of a.
inline Rational approx(const Rational& a, const Gauge& eps) {
    return simplest_in_interval(a - eps.value(), a + eps.value());
}

/// Nearest integer, ties to even.
inline Int round_nearest(const Rational& a) {
    Int fl = a.floor_int();
    Rational frac = a - Rational(fl);
    static const Rational half(1, 2);
    if (frac < half) return fl;
    if (frac > half) return fl + 1;
    return mpz_even_p(fl.get_mpz_t()) ? fl : Int(fl + 1);
}

/// Yields x^0, x^1, x^2, ... with one multiplication per step.
class PowerStream {
public:
    explicit PowerStream(Rational x) : x_(std::move(x)), current_(1) {}

    Rational next() {
        Rational out = current_;
        current_ *= x_;
        return out;
    }

private:
    Rational x_;
    Rational current_;
};

/// Yields 0!, 1!, 2!, ... = 1, 1, 2, 6, 24, ...
class FactorialStream {
public:
    Int next() {
        Int out = value_;
        ++index_;
        value_ *= index_;
        return out;
    }

private:
    Int value_ = 1;
    Int index_ = 0;
};

}  // namespace reals
