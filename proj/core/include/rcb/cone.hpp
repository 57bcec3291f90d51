#pragma once

#include <array>
#include <optional>
#include <utility>

#include "rcb/gaussian.hpp"
#include "rcb/quadmap.hpp"
#include "rcb/quaternion.hpp"

namespace rcb {

// Result of checking the rectifiability conditions (Gamma,x) = (Gamma,Gamma) = 0
// on the asymptotic cone.  On success carries the exact quotients
// lambda = (Gamma,x)/(x,x) (linear) and mu = (Gamma,Gamma)/(x,x) (quadratic);
// on failure the nonzero remainders.
struct ConditionCheck {
    bool ok = false;
    Poly<Rational> lambda;          // degree <= 1
    Poly<Rational> mu;              // degree <= 2
    Poly<Rational> remainder_gx;    // remainder of (Gamma,x)
    Poly<Rational> remainder_gg;    // remainder of (Gamma,Gamma)
};

inline ConditionCheck check_conditions(const VectorQuadraticMap<Rational>& gamma) {
    const std::size_t n = gamma.dimension();
    PolyVec<Rational> g = gamma.to_polyvec();
    PolyVec<Rational> x = poly_identity<Rational>(n);
    auto div_gx = cone_divide(poly_dot(g, x));
    auto div_gg = cone_divide(poly_dot(g, g));
    ConditionCheck res;
    res.ok = div_gx.remainder.is_zero() && div_gg.remainder.is_zero();
    res.lambda = std::move(div_gx.quotient);
    res.mu = std::move(div_gg.quotient);
    res.remainder_gx = std::move(div_gx.remainder);
    res.remainder_gg = std::move(div_gg.remainder);
    return res;
}

// Gauge representative Gamma' = Gamma - lambda(x)x, so that (Gamma'(x),x) == 0
// as a polynomial identity.  Gamma and Gamma' induce the same circle bundle.
inline VectorQuadraticMap<Rational> canonicalize(const VectorQuadraticMap<Rational>& gamma) {
    auto check = check_conditions(gamma);
    if (!check.ok) throw DomainError("canonicalize: rectifiability conditions violated");
    const std::size_t n = gamma.dimension();
    PolyVec<Rational> g = gamma.to_polyvec();
    for (std::size_t k = 0; k < n; ++k)
        g[k] -= check.lambda * Poly<Rational>::variable(n, k);
    return VectorQuadraticMap<Rational>::from_polyvec(g);
}

struct ParallelDecomposition {
    Vector<Rational> b;        // common-point datum
    Vector<Rational> lambda;   // Riesz vector of the gauge part
};

// Lemma-(w)/(G) decomposition: when Gamma is parallel to x on the cone,
// Gamma(x) = b(x,x) + lambda(x)x.  The wedge Gamma ^ x is divided by (x,x)
// componentwise; b is read off the quotient's coefficients and the whole
// reconstruction is verified by exact re-expansion.
inline std::optional<ParallelDecomposition> parallel_decompose(
    const VectorQuadraticMap<Rational>& gamma) {
    const std::size_t n = gamma.dimension();
    if (n < 2) throw DomainError("parallel_decompose: dimension must be >= 2");
    PolyVec<Rational> g = gamma.to_polyvec();
    PolyVec<Rational> x = poly_identity<Rational>(n);

    // Lambda_{ij} = (Gamma_i x_j - Gamma_j x_i) / (x,x), linear when it exists.
    std::vector<std::vector<Poly<Rational>>> wedge_quot(n);
    for (std::size_t i = 0; i < n; ++i) wedge_quot[i].resize(n, Poly<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto div = cone_divide(g[i] * x[j] - g[j] * x[i]);
            if (!div.remainder.is_zero()) return std::nullopt;
            wedge_quot[i][j] = div.quotient;
            wedge_quot[j][i] = -div.quotient;
        }

    // Lambda_{ij} = b_i x_j - b_j x_i: read b_i as the x_j coefficient.
    Vector<Rational> b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i == 0 ? 1 : 0;
        Monomial m(n, 0);
        m[j] = 1;
        b[i] = wedge_quot[i][j].coeff(m);
    }

    // lambda from Gamma - b(x,x) = lambda(x)x, extracted against component 0.
    Poly<Rational> q = cone_form<Rational>(n);
    PolyVec<Rational> d(n, Poly<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) d[k] = g[k] - b[k] * q;
    Vector<Rational> lambda(n, Rational(0));
    for (std::size_t mvar = 0; mvar < n; ++mvar) {
        Monomial m(n, 0);
        m[0] += 1;
        m[mvar] += 1;
        lambda[mvar] = d[0].coeff(m);
    }

    // Verify Gamma == b(x,x) + lambda(x)x exactly.
    Poly<Rational> lam(n);
    for (std::size_t i = 0; i < n; ++i)
        lam += lambda[i] * Poly<Rational>::variable(n, i);
    for (std::size_t k = 0; k < n; ++k)
        if (!(d[k] - lam * x[k]).is_zero()) return std::nullopt;
    return ParallelDecomposition{std::move(b), std::move(lambda)};
}

// --- Segre machinery (n = 4 only) -----------------------------------------

using ConeVector = Vector<GaussianRational>;

// Exact point of the complex cone (x,x) = 0 in C^4 via the Segre
// parameterization.  Coordinates a = x0 + i x1, b = x0 - i x1, c = x2 + i x3,
// d = x2 - i x3 turn the cone into {ab + cd = 0}; a = u0 v0, b = u1 v1,
// c = u0 v1, d = -u1 v0 sweeps it.
inline ConeVector sample_cone_point(const std::array<GaussianRational, 2>& u,
                                    const std::array<GaussianRational, 2>& v) {
    if ((is_zero(u[0]) && is_zero(u[1])) || (is_zero(v[0]) && is_zero(v[1])))
        throw DomainError("sample_cone_point: zero parameter");
    GaussianRational a = u[0] * v[0];
    GaussianRational b = u[1] * v[1];
    GaussianRational c = u[0] * v[1];
    GaussianRational d = -(u[1] * v[0]);
    GaussianRational half(Rational(1, 2));
    GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
    ConeVector xv{half * (a + b), minus_half_i * (a - b), half * (c + d),
                  minus_half_i * (c - d)};
    GaussianRational norm{};
    for (const auto& xi : xv) norm += xi * xi;
    if (!is_zero(norm)) throw Error("sample_cone_point: internal invariant failure");
    return xv;
}

inline GaussianRational bilinear(const ConeVector& a, const ConeVector& b) {
    GaussianRational acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

struct GeneratingPlane {
    Side family;
    std::array<ConeVector, 2> basis;  // rank-2 span, entirely inside the cone
};

namespace detail {

inline Matrix<GaussianRational> complexify(const Matrix<Rational>& m) {
    Matrix<GaussianRational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = GaussianRational(m(i, j));
    return r;
}

}  // namespace detail

// The generating plane of the cone through a null vector x: the complex span
// of {x, Ix, Jx, Kx} with I, J, K the complexified left (resp. right)
// multiplications by i, j, k.  Always rank 2 for nonzero null x.
inline GeneratingPlane generating_plane(const ConeVector& x, Side family) {
    if (x.size() != 4) throw DomainError("generating_plane: dimension must be 4");
    if (is_zero_vector(x)) throw DomainError("generating_plane: zero vector");
    if (!is_zero(bilinear(x, x)))
        throw DomainError("generating_plane: vector is not on the cone");
    std::vector<ConeVector> span{x};
    for (const auto& unit : {quat_i(), quat_j(), quat_k()}) {
        auto op = detail::complexify(mul_operator(unit, family));
        span.push_back(op * x);
    }
    Matrix<GaussianRational> m = matrix_cast_rows(span, 4);
    auto pivots = detail::echelon(m);
    if (pivots.size() != 2)
        throw Error("generating_plane: span rank is not 2");
    // Echelon rows give a canonical basis of the span.
    GeneratingPlane plane{family, {m.row(0), m.row(1)}};
    for (const auto& u : plane.basis)
        for (const auto& w : plane.basis)
            if (!is_zero(bilinear(u, w)))
                throw Error("generating_plane: plane leaves the cone");
    return plane;
}

// Span equality of two generating planes (each basis vector of one lies in
// the span of the other).
inline bool same_plane(const GeneratingPlane& p, const GeneratingPlane& q) {
    std::vector<ConeVector> all{p.basis[0], p.basis[1], q.basis[0], q.basis[1]};
    return rank(matrix_cast_rows(all, 4)) == 2;
}

}  // namespace rcb
