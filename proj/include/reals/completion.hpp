#pragma once

/// The completion monad over an arbitrary base space X.
///
/// An Approximator<X> is a regular function: a deferred query taking a
/// gauge eps to a value within eps of the point it represents, with
/// |x(e1) - x(e2)| <= e1 + e2 for all gauge pairs. A UniformMap<A, B>
/// carries a function together with its modulus of continuity, the data
/// needed to lift it through the completion. unit/join/map/bind/ap/map2
/// are the lifting combinators; this library instantiates X at Rational
/// (the completion being the reals) but the combinators are generic.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "reals/rational.hpp"

namespace reals {

/// A regular function over X: query it at gauge eps for an approximation
/// within eps. Queries are pure; the same Approximator may be queried
/// concurrently and may recompute.
template <class X>
class Approximator {
public:
    using Query = std::function<X(const Gauge&)>;

    explicit Approximator(Query query) : query_(std::move(query)) {}

    X operator()(const Gauge& eps) const { return query_(eps); }

private:
    Query query_;
};

using RationalApproximator = Approximator<Rational>;

/// A uniformly continuous function with explicit continuity data: apply
/// moves points, modulus translates a requested output accuracy into a
/// sufficient input accuracy. domain_note documents the sub-domain of A
/// the modulus is valid on.
template <class A, class B>
struct UniformMap {
    std::function<Gauge(const Gauge&)> modulus;
    std::function<B(const A&)> apply;
    std::string domain_note;
};

/// A finite strictly decreasing list of gauges used to probe universally
/// quantified statements (regularity, equivalence) in tests.
class GaugeSchedule {
public:
    explicit GaugeSchedule(std::vector<Gauge> gauges) : gauges_(std::move(gauges)) {
        for (std::size_t i = 1; i < gauges_.size(); ++i)
            if (!(gauges_[i] < gauges_[i - 1]))
                throw std::invalid_argument("GaugeSchedule must be strictly decreasing");
    }

    /// 1, 1/2, 1/4, ..., 2^-20.
    static GaugeSchedule standard() {
        std::vector<Gauge> g;
        g.reserve(21);
        for (long k = 0; k <= 20; ++k) g.push_back(Gauge::power_of_two(-k));
        return GaugeSchedule(std::move(g));
    }

    const std::vector<Gauge>& gauges() const { return gauges_; }
    auto begin() const { return gauges_.begin(); }
    auto end() const { return gauges_.end(); }
    std::size_t size() const { return gauges_.size(); }

private:
    std::vector<Gauge> gauges_;
};

/// Injects a point as the constant regular function.
template <class X>
Approximator<X> unit(X a) {
    return Approximator<X>([a = std::move(a)](const Gauge&) { return a; });
}

/// Collapses a twice-completed value: join(x)(eps) = x(eps/2)(eps/2).
template <class X>
Approximator<X> join(Approximator<Approximator<X>> x) {
    return Approximator<X>([x = std::move(x)](const Gauge& eps) {
        Gauge half = eps.half();
        return x(half)(half);
    });
}

/// Lifts a uniformly continuous map through the completion:
/// map(f, x)(eps) = f(x(mu_f(eps))).
template <class A, class B>
Approximator<B> map(UniformMap<A, B> f, Approximator<A> x) {
    return Approximator<B>([f = std::move(f), x = std::move(x)](const Gauge& eps) {
        return f.apply(x(f.modulus(eps)));
    });
}

/// Lifts a map into a completion: bind = join after map.
template <class A, class B>
Approximator<B> bind(UniformMap<A, Approximator<B>> f, Approximator<A> x) {
    return join(map(std::move(f), std::move(x)));
}

/// Applies a converging family of maps: ap(f, x)(eps) = map(f(eps/2), x)(eps/2).
template <class A, class B>
Approximator<B> ap(Approximator<UniformMap<A, B>> f, Approximator<A> x) {
    return Approximator<B>([f = std::move(f), x = std::move(x)](const Gauge& eps) {
        Gauge half = eps.half();
        return map(f(half), x)(half);
    });
}

/// Lifts a curried binary map. Implemented directly rather than as
/// ap(map(f, x), y): the expansions agree but this form halves the gauge
/// once less.
template <class A, class B, class C>
Approximator<C> map2(UniformMap<A, UniformMap<B, C>> f, Approximator<A> x, Approximator<B> y) {
    return Approximator<C>(
        [f = std::move(f), x = std::move(x), y = std::move(y)](const Gauge& eps) {
            Gauge half = eps.half();
            UniformMap<B, C> g = map(f, x)(half);
            return map(std::move(g), y)(half);
        });
}

/// g after f, with modulus mu_f after mu_g.
template <class A, class B, class C>
UniformMap<A, C> compose_uniform(UniformMap<B, C> g, UniformMap<A, B> f) {
    return UniformMap<A, C>{
        [fm = f.modulus, gm = g.modulus](const Gauge& eps) { return fm(gm(eps)); },
        [fa = f.apply, ga = g.apply](const A& a) { return ga(fa(a)); },
        f.domain_note};
}

/// Finite probe of the equivalence of two regular functions:
/// |x(eps) - y(eps)| <= 2 eps for every gauge in the schedule. Sound but
/// incomplete; meant for tests.
inline bool approx_equal_check(const RationalApproximator& x, const RationalApproximator& y,
                               const GaugeSchedule& schedule) {
    for (const Gauge& eps : schedule) {
        if (abs(x(eps) - y(eps)) > Rational(2) * eps.value()) return false;
    }
    return true;
}

/// Finite probe of regularity: |x(e1) - x(e2)| <= e1 + e2 over all pairs
/// from the schedule.
inline bool regularity_probe(const RationalApproximator& x, const GaugeSchedule& schedule) {
    std::vector<Rational> values;
    values.reserve(schedule.size());
    for (const Gauge& eps : schedule) values.push_back(x(eps));
    const auto& gauges = schedule.gauges();
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (abs(values[i] - values[j]) > gauges[i].value() + gauges[j].value()) return false;
    return true;
}

}  // namespace reals
