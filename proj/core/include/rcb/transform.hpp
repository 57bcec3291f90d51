#pragma once

#include <cmath>
#include <optional>

#include "rcb/bundle.hpp"

namespace rcb {

// Inversion with center 0 and radius 1.
template <class S>
Vector<S> invert(const Vector<S>& x) {
    S xx = dot(x, x);
    if (is_zero(xx)) throw DomainError("invert: x = 0");
    Vector<S> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = S(x[i] / xx);
    return r;
}

// T^a: reflection in the hyperplane orthogonal to a followed by the
// inversion with center a and radius |a|; fixes 0, has identical
// differential at 0, and takes all lines through 0 to circles.
// Closed form: ((a,a)x + (x,x)a) / ((a,a) + 2(a,x) + (x,x)).
template <class S>
Vector<S> t_a(const Vector<S>& a, const Vector<S>& x) {
    S aa = dot(a, a);
    if (is_zero(aa)) throw DomainError("t_a: a = 0");
    S den = S(aa + S(2) * dot(a, x) + dot(x, x));
    if (is_zero(den)) throw PoleError("t_a: pole at x = -a");
    S xx = dot(x, x);
    Vector<S> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = S((aa * x[i] + xx * a[i]) / den);
    return r;
}

// Quadratic term of T^a: ((x,x)a - 2(a,x)x) / (a,a).
template <class S>
VectorQuadraticMap<S> t_a_quadratic(const Vector<S>& a) {
    const std::size_t n = a.size();
    S aa = dot(a, a);
    if (is_zero(aa)) throw DomainError("t_a_quadratic: a = 0");
    VectorQuadraticMap<S> g(n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<S>& m = g.component(k);
        for (std::size_t i = 0; i < n; ++i) m(i, i) += S(a[k] / aa);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, k) -= S(a[i] / aa);
            m(k, i) -= S(a[i] / aa);
        }
    }
    return g;
}

template <class S>
struct AffineMap {
    Matrix<S> linear;    // n x n
    Vector<S> constant;  // n

    Vector<S> evaluate(const Vector<S>& x) const { return linear * x + constant; }

    static AffineMap identity(std::size_t n) {
        return {Matrix<S>::identity(n), zero_vector<S>(n)};
    }
};

// Quaternionic fractional transformation: x -> B(x)^{-1} A(x) (left) or
// A(x) B(x)^{-1} (right) with affine quaternion-valued A (numerator) and
// B (denominator); n = 4.
template <class S>
struct FractionalTransform {
    Side side = Side::left;
    AffineMap<S> num;
    AffineMap<S> den;
};

template <class S>
Vector<S> qft_apply(const FractionalTransform<S>& t, const Vector<S>& x) {
    Quaternion<S> n = Quaternion<S>::from_vector(t.num.evaluate(x));
    Quaternion<S> d = Quaternion<S>::from_vector(t.den.evaluate(x));
    S dn = qnorm_sq(d);
    bool pole;
    if constexpr (std::is_same_v<S, double>)
        pole = dn < 1e-30;
    else
        pole = is_zero(dn);
    if (pole) throw PoleError("qft_apply: denominator vanishes");
    Quaternion<S> r = t.side == Side::left ? qinv(d) * n : n * qinv(d);
    return r.to_vector();
}

// The canonical rounding family x -> (1 - A(x))^{-1} x (left) or
// x (1 - A(x))^{-1} (right); derivative at 0 is the identity and the
// quadratic term is A(x)x resp. xA(x).
template <class S>
FractionalTransform<S> qft_from_A(const LinearQuaternionMap<S>& a, Side side) {
    if (a.rows() != 4 || a.cols() != 4) throw DomainError("qft_from_A: need a 4x4 matrix");
    FractionalTransform<S> t;
    t.side = side;
    t.num = AffineMap<S>::identity(4);
    t.den.linear = S(-1) * a;
    t.den.constant = basis_vector<S>(4, 0);  // the quaternion 1
    return t;
}

// --- rectifier synthesis ----------------------------------------------------

// Float evaluator of a synthesized rectifier Phi = T^a (x + Gamma'(x) f(x)),
// f = 2 / (1 + sqrt(1 - 4 mu'(x))).  Valid in the ball where 1 - 4 mu' > 0;
// the certified radius satisfies 4 ||mu'||_1 r^2 <= 1/2.
struct RectifierMap {
    std::optional<Vector<double>> a;      // absent when lambda = 0
    VectorQuadraticMap<double> gamma_prime;
    Matrix<double> mu;                    // symmetric quadratic form
    double radius = 0;

    Vector<double> evaluate(const Vector<double>& x) const {
        double m = dot(x, mu * x);
        double disc = 1.0 - 4.0 * m;
        if (disc <= 0) throw OutOfDomainError("rectifier: outside evaluation ball");
        double f = 2.0 / (1.0 + std::sqrt(disc));
        Vector<double> g = gamma_prime.evaluate(x);
        Vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + g[i] * f;
        return a ? t_a(*a, y) : y;
    }
};

// Exact byproducts of the synthesis, kept for inspection and serialization.
struct Synthesis {
    std::optional<Vector<Rational>> a;
    VectorQuadraticMap<Rational> gamma_prime;  // (Gamma'(x), x) == 0 identically
    Matrix<Rational> mu;                       // mu' = (Gamma',Gamma')/(x,x)
    double radius = 0;

    RectifierMap map() const;
};

// Prop-(suff) construction: kill lambda with a T^a stage (a = -v/(v,v) for
// the Riesz vector v of lambda), then Phi(x) = T^a(x + Gamma'(x) f(x)).
// The composite's quadratic term equals Gamma.
Synthesis synthesize_rectifier(const VectorQuadraticMap<Rational>& gamma);

}  // namespace rcb
