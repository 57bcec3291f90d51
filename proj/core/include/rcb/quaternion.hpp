#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <type_traits>

#include "rcb/linalg.hpp"

namespace rcb {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

// Quaternion over any commutative ring S (scalars, Gaussian scalars, or
// polynomials).  Basis order is fixed as (1, i, j, k) <-> (x0, x1, x2, x3).
template <class S>
struct Quaternion {
    S w{}, x{}, y{}, z{};

    Quaternion() = default;
    Quaternion(S w_, S x_, S y_, S z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion from_vector(const Vector<S>& v) {
        if (v.size() != 4) throw DomainError("quaternion from vector: need dimension 4");
        return {v[0], v[1], v[2], v[3]};
    }
    Vector<S> to_vector() const { return {w, x, y, z}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

    // Hamilton product.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {S(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
                S(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
                S(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
                S(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
    }
    friend Quaternion operator*(const S& c, const Quaternion& a) {
        return {S(c * a.w), S(c * a.x), S(c * a.y), S(c * a.z)};
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

template <class S>
Quaternion<S> qconj(const Quaternion<S>& a) {
    return {a.w, -a.x, -a.y, -a.z};
}

template <class S>
S qnorm_sq(const Quaternion<S>& a) {
    return S(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
}

template <class S>
S qre(const Quaternion<S>& a) {
    return a.w;
}

template <class S>
Quaternion<S> qim(const Quaternion<S>& a) {
    return {S{}, a.x, a.y, a.z};
}

template <class S>
bool qis_zero(const Quaternion<S>& a) {
    return is_zero(a.w) && is_zero(a.x) && is_zero(a.y) && is_zero(a.z);
}

// qinv(a) = conj(a) / (a,a); requires a field S and a != 0.
template <class S>
Quaternion<S> qinv(const Quaternion<S>& a) {
    S n = qnorm_sq(a);
    if (is_zero(n)) throw DomainError("inversion of zero quaternion");
    Quaternion<S> c = qconj(a);
    S inv_n = S(1) / n;
    return inv_n * c;
}

inline Quaternion<Rational> quat_i() {
    return {Rational(0), Rational(1), Rational(0), Rational(0)};
}
inline Quaternion<Rational> quat_j() {
    return {Rational(0), Rational(0), Rational(1), Rational(0)};
}
inline Quaternion<Rational> quat_k() {
    return {Rational(0), Rational(0), Rational(0), Rational(1)};
}

// 4x4 matrix M with Mv = a * v (left) or v * a (right) in coordinates.
template <class S>
Matrix<S> mul_operator(const Quaternion<S>& a, Side side) {
    Matrix<S> m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        Quaternion<S> e{};
        (j == 0 ? e.w : j == 1 ? e.x : j == 2 ? e.y : e.z) = S(1);
        Quaternion<S> img = side == Side::left ? a * e : e * a;
        m.set_col(j, img.to_vector());
    }
    return m;
}

enum class MulKind { left, right, both };

template <class S>
struct QuaternionicMultiplication {
    MulKind kind;
    Quaternion<S> a;
};

namespace detail {

inline Rational max_abs_entry(const Matrix<Rational>& m) {
    Rational best(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational a = abs(m(i, j));
            if (a > best) best = a;
        }
    return best;
}

inline double max_abs_entry(const Matrix<double>& m) {
    double best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

template <class S>
bool matrices_close(const Matrix<S>& a, const Matrix<S>& b, const S& tol) {
    return max_abs_entry(a - b) <= tol;
}

}  // namespace detail

// Recognizes multiplication operators among 4x4 matrices: M is one iff it is
// const * orthogonal and const + skew-symmetric, in which case the quaternion
// is the first column and the side follows from the off-diagonal sign pattern.
// Equivalently (and how we test it): M coincides with the operator built from
// its own first column on one of the two sides.  On the float backend the
// comparison is gated at rel_tol * max|M|; the exact backend uses rel_tol = 0.
template <class S>
std::optional<QuaternionicMultiplication<S>> detect_quaternionic_multiplication(
    const Matrix<S>& m, double rel_tol = 1e-9) {
    if (m.rows() != 4 || m.cols() != 4) throw DomainError("detect: need a 4x4 matrix");
    Quaternion<S> a = Quaternion<S>::from_vector(m.col(0));
    S tol{};
    if constexpr (!std::is_same_v<S, Rational>) tol = S(rel_tol) * detail::max_abs_entry(m);
    bool left_ok = detail::matrices_close(m, mul_operator(a, Side::left), tol);
    bool right_ok = detail::matrices_close(m, mul_operator(a, Side::right), tol);
    if (left_ok && right_ok) return QuaternionicMultiplication<S>{MulKind::both, a};
    if (left_ok) return QuaternionicMultiplication<S>{MulKind::left, a};
    if (right_ok) return QuaternionicMultiplication<S>{MulKind::right, a};
    return std::nullopt;
}

}  // namespace rcb
