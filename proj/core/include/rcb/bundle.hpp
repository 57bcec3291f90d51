#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rcb/circle.hpp"
#include "rcb/cone.hpp"
#include "rcb/quaternion.hpp"

namespace rcb {

enum class Family { left, right, both, none };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::left: return "left";
        case Family::right: return "right";
        case Family::both: return "both";
        default: return "none";
    }
}

// Linear map R^4 -> H, stored as the 4x4 matrix taking coordinates of x to
// coordinates of the quaternion A(x).
template <class S>
using LinearQuaternionMap = Matrix<S>;

template <class S>
Quaternion<S> eval_linear_quat(const LinearQuaternionMap<S>& a, const Vector<S>& x) {
    return Quaternion<S>::from_vector(a * x);
}

// Im A as a matrix: the real-part row zeroed.
template <class S>
Matrix<S> im_part(const LinearQuaternionMap<S>& a) {
    Matrix<S> m = a;
    for (std::size_t j = 0; j < m.cols(); ++j) m(0, j) = S{};
    return m;
}

// --- polynomial quaternion helpers -----------------------------------------

using QuatPoly = Quaternion<Poly<Rational>>;

inline QuatPoly quat_poly_from_polyvec(const PolyVec<Rational>& f) {
    if (f.size() != 4) throw DomainError("quaternion polynomial needs dimension 4");
    return {f[0], f[1], f[2], f[3]};
}

inline PolyVec<Rational> polyvec_from_quat_poly(const QuatPoly& q) {
    return {q.w, q.x, q.y, q.z};
}

// The symbolic variable x = x0 + x1 i + x2 j + x3 k.
inline QuatPoly quat_poly_x() {
    return quat_poly_from_polyvec(poly_identity<Rational>(4));
}

// A(x) as a quaternion with linear polynomial components.
inline QuatPoly quat_poly_from_matrix(const LinearQuaternionMap<Rational>& a) {
    PolyVec<Rational> f;
    for (std::size_t r = 0; r < 4; ++r) {
        Poly<Rational> p(4);
        for (std::size_t c = 0; c < 4; ++c)
            p += a(r, c) * Poly<Rational>::variable(4, c);
        f.push_back(std::move(p));
    }
    return quat_poly_from_polyvec(f);
}

// Gamma(x) = A(x)x (left) or xA(x) (right) as a vector quadratic map.
inline VectorQuadraticMap<Rational> gamma_from_A(const LinearQuaternionMap<Rational>& a,
                                                 Side side) {
    QuatPoly ax = quat_poly_from_matrix(a);
    QuatPoly x = quat_poly_x();
    QuatPoly g = side == Side::left ? ax * x : x * ax;
    return VectorQuadraticMap<Rational>::from_polyvec(polyvec_from_quat_poly(g));
}

// --- bundle operations ------------------------------------------------------

struct CommonPoint {
    enum class Kind { point, at_infinity, none } kind;
    Vector<Rational> point;  // meaningful for kind == point only
};

// If the bundle of Gamma is a common-point bundle, the point b/(b,b); a
// bundle of straight lines reports at_infinity; otherwise none.
inline CommonPoint common_point(const VectorQuadraticMap<Rational>& gamma) {
    if (!check_conditions(gamma).ok)
        throw DomainError("common_point: rectifiability conditions violated");
    auto dec = parallel_decompose(gamma);
    if (!dec) return {CommonPoint::Kind::none, {}};
    if (is_zero_vector(dec->b)) return {CommonPoint::Kind::at_infinity, {}};
    Rational bb = dot(dec->b, dec->b);
    Vector<Rational> p(dec->b.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = dec->b[i] / bb;
    return {CommonPoint::Kind::point, std::move(p)};
}

namespace detail {

// Quotients of Gamma(x) * conj(x) (left) or conj(x) * Gamma(x) (right) by
// (x,x), componentwise; nullopt when some component is not divisible.
inline std::optional<PolyVec<Rational>> side_quotients(
    const VectorQuadraticMap<Rational>& gamma, Side side, PolyVec<Rational>* remainders) {
    QuatPoly g = quat_poly_from_polyvec(gamma.to_polyvec());
    QuatPoly xbar = qconj(quat_poly_x());
    QuatPoly cubic = side == Side::left ? g * xbar : xbar * g;
    PolyVec<Rational> quot;
    bool ok = true;
    for (const auto& comp : polyvec_from_quat_poly(cubic)) {
        auto div = cone_divide(comp);
        if (!div.remainder.is_zero()) ok = false;
        quot.push_back(div.quotient);
        if (remainders) remainders->push_back(div.remainder);
    }
    if (!ok) return std::nullopt;
    return quot;
}

}  // namespace detail

// Which generating family the bundle map preserves.  Never none for a Gamma
// satisfying the rectifiability conditions (n = 4).
inline Family determine_family(const VectorQuadraticMap<Rational>& gamma) {
    if (gamma.dimension() != 4) throw DomainError("determine_family: dimension must be 4");
    bool left = detail::side_quotients(gamma, Side::left, nullptr).has_value();
    bool right = detail::side_quotients(gamma, Side::right, nullptr).has_value();
    if (left && right) return Family::both;
    if (left) return Family::left;
    if (right) return Family::right;
    return Family::none;
}

struct Decomposition {
    bool ok = false;
    LinearQuaternionMap<Rational> a;  // Gamma(x) = A(x)x or xA(x)
    PolyVec<Rational> remainders;     // nonzero on failure
};

// Lemma-(Phi_2) decomposition on the requested side, verified by exact
// re-expansion.  A is unique up to a real linear functional, so Im A is
// canonical.
inline Decomposition decompose_quaternionic(const VectorQuadraticMap<Rational>& gamma,
                                            Side side) {
    if (gamma.dimension() != 4)
        throw DomainError("decompose_quaternionic: dimension must be 4");
    Decomposition res;
    auto quot = detail::side_quotients(gamma, side, &res.remainders);
    if (!quot) return res;
    LinearQuaternionMap<Rational> a(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        if ((*quot)[r].degree() > 1)
            throw Error("decompose_quaternionic: quotient is not linear");
        for (std::size_t c = 0; c < 4; ++c) {
            Monomial m(4, 0);
            m[c] = 1;
            a(r, c) = (*quot)[r].coeff(m);
        }
    }
    if (!(gamma_from_A(a, side) == gamma))
        throw Error("decompose_quaternionic: re-expansion check failed");
    res.ok = true;
    res.a = std::move(a);
    return res;
}

// Center of the bundle circle with tangent x: -1/2 (Im A(x))^{-1} x on the
// left, -1/2 x (Im A(x))^{-1} on the right; Im A(x) = 0 gives a line.
template <class S>
Circle<S> center_from_A(const LinearQuaternionMap<S>& a, const Vector<S>& x, Side side) {
    if (is_zero_vector(x)) throw DomainError("center_from_A: x = 0");
    Quaternion<S> m = qim(eval_linear_quat(a, x));
    Circle<S> circle{x, std::nullopt};
    if (qis_zero(m)) return circle;
    Quaternion<S> xq = Quaternion<S>::from_vector(x);
    Quaternion<S> c = side == Side::left ? qinv(m) * xq : xq * qinv(m);
    S minus_half = S(-1) / S(2);
    circle.center = (minus_half * c).to_vector();
    return circle;
}

// Union of the straight lines of the bundle: the exact kernel of
// x -> Im A(x).  Never trivial for n = 4 (a 4 -> 3 dimensional linear map).
inline std::vector<Vector<Rational>> lines_subspace(const LinearQuaternionMap<Rational>& a) {
    Matrix<Rational> im(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) im(r, c) = a(r + 1, c);
    return null_space(im);
}

// --- bundle descriptors and fitting -----------------------------------------

template <class S>
struct BundleDescriptor {
    Family side = Family::left;  // left, right, or both; never none
    Matrix<S> imA;               // 4x4, zero real-part row
};

template <class S>
BundleDescriptor<S> barycentric_combine(const BundleDescriptor<S>& b1,
                                        const BundleDescriptor<S>& b2, const S& t) {
    Family side;
    if (b1.side == b2.side)
        side = b1.side;
    else if (b1.side == Family::both)
        side = b2.side;
    else if (b2.side == Family::both)
        side = b1.side;
    else
        throw DomainError("barycentric_combine: descriptors have different orientations");
    BundleDescriptor<S> r;
    r.side = side;
    r.imA = t * b1.imA + S(S(1) - t) * b2.imA;
    return r;
}

namespace detail {

// Target Im A(x_i) recovered from a sampled circle by inverting the center
// formula; zero for line samples.
template <class S>
std::optional<Vector<S>> fit_target(const Circle<S>& c, Side side) {
    if (c.is_line()) return zero_vector<S>(4);
    Quaternion<S> xq = Quaternion<S>::from_vector(c.tangent);
    Quaternion<S> cq = Quaternion<S>::from_vector(*c.center);
    if (is_zero(qnorm_sq(cq))) return std::nullopt;
    Quaternion<S> m =
        side == Side::left ? xq * qinv(cq) : qinv(cq) * xq;
    S minus_half = S(-1) / S(2);
    return (minus_half * m).to_vector();
}

}  // namespace detail

std::optional<BundleDescriptor<Rational>> fit_bundle(
    const std::vector<Circle<Rational>>& samples);
std::optional<BundleDescriptor<double>> fit_bundle(const std::vector<Circle<double>>& samples,
                                                   double rel_tol = 1e-9);

// --- component geometry ------------------------------------------------------

// Basis of the 12-dimensional linear space of canonical descriptors on one
// side: Gamma(x) = m(x)x (left) or x m(x) (right) with m linear into Im H.
std::vector<VectorQuadraticMap<Rational>> canonical_component_basis(Side side);

// Basis of the 4-dimensional common-point family Gamma(x) = b(x,x) - (b,x)x.
std::vector<VectorQuadraticMap<Rational>> common_point_component_basis();

}  // namespace rcb
