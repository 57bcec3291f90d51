#pragma once

#include <cmath>
#include <optional>
#include <type_traits>

#include "rcb/quadmap.hpp"

namespace rcb {

// A circle or straight line through the origin.  A line is encoded by an
// absent center (a "center at infinity"); the radius is derived as
// |center| and never stored.  On the exact backend the tangent is an
// unnormalized direction; normalize_tangent() applies on floats only.
template <class S>
struct Circle {
    Vector<S> tangent;
    std::optional<Vector<S>> center;  // nullopt <=> straight line

    bool is_line() const { return !center.has_value(); }
};

inline void normalize_tangent(Circle<double>& c) {
    double n = std::sqrt(dot(c.tangent, c.tangent));
    if (n == 0) throw DomainError("circle with zero tangent");
    for (auto& v : c.tangent) v /= n;
}

// Acceleration with respect to the natural parameter of the bundle circle
// with tangent x: w = 2(G(x) - (G(x),x)x/(x,x))/(x,x).  Orthogonal to x and
// invariant under the gauge Gamma -> Gamma + lambda(x)x.
template <class S>
Vector<S> acceleration(const VectorQuadraticMap<S>& gamma, const Vector<S>& x) {
    if (is_zero_vector(x)) throw DomainError("acceleration: x = 0");
    S xx = dot(x, x);
    Vector<S> phi2 = gamma.evaluate(x);
    S proj = S(dot(phi2, x) / xx);
    Vector<S> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        w[i] = S(S(2) * (phi2[i] - proj * x[i]) / xx);
    return w;
}

// Circle with tangent x and acceleration w at the origin: center = w/(w,w),
// or a straight line when w = 0.
template <class S>
Circle<S> circle_from_acceleration(const Vector<S>& x, const Vector<S>& w) {
    if (is_zero_vector(x)) throw DomainError("circle_from_acceleration: x = 0");
    if constexpr (std::is_same_v<S, double>) {
        double bound = 1e-9 * std::sqrt(dot(w, w) * dot(x, x));
        if (std::abs(dot(w, x)) > bound)
            throw DomainError("circle_from_acceleration: acceleration not orthogonal to tangent");
    } else {
        if (!is_zero(dot(w, x)))
            throw DomainError("circle_from_acceleration: acceleration not orthogonal to tangent");
    }
    Circle<S> c{x, std::nullopt};
    if (!is_zero_vector(w)) {
        S ww = dot(w, w);
        Vector<S> center(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) center[i] = S(w[i] / ww);
        c.center = std::move(center);
    }
    return c;
}

}  // namespace rcb
