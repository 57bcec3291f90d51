#pragma once

#include <vector>

#include "rcb/poly.hpp"

namespace rcb {

// Homogeneous degree-2 map R^n -> R^n stored as n symmetric coefficient
// matrices: component k of the value at x is x^T M_k x.
template <class S>
class VectorQuadraticMap {
  public:
    VectorQuadraticMap() = default;
    explicit VectorQuadraticMap(std::size_t n) : n_(n), mats_(n, Matrix<S>(n, n)) {}

    std::size_t dimension() const { return n_; }
    Matrix<S>& component(std::size_t k) { return mats_[k]; }
    const Matrix<S>& component(std::size_t k) const { return mats_[k]; }

    Vector<S> evaluate(const Vector<S>& x) const {
        if (x.size() != n_) throw DomainError("quadratic map: dimension mismatch");
        Vector<S> y(n_, S{});
        for (std::size_t k = 0; k < n_; ++k) y[k] = dot(x, mats_[k] * x);
        return y;
    }

    PolyVec<S> to_polyvec() const {
        PolyVec<S> f;
        for (std::size_t k = 0; k < n_; ++k) {
            Poly<S> p(n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    Monomial m(n_, 0);
                    m[i] += 1;
                    m[j] += 1;
                    p.add_term(m, mats_[k](i, j));
                }
            f.push_back(std::move(p));
        }
        return f;
    }

    // Inverse of to_polyvec for homogeneous quadratic polynomials; the
    // coefficient of x_i x_j (i != j) is split evenly to keep M_k symmetric.
    static VectorQuadraticMap from_polyvec(const PolyVec<S>& f) {
        const std::size_t n = f.size();
        VectorQuadraticMap g(n);
        const S half = S(1) / S(2);
        for (std::size_t k = 0; k < n; ++k) {
            if (f[k].dimension() != n)
                throw DomainError("from_polyvec: dimension mismatch");
            for (const auto& [m, c] : f[k].terms()) {
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < n; ++i)
                    for (unsigned e = 0; e < m[i]; ++e) idx.push_back(i);
                if (idx.size() != 2)
                    throw DomainError("from_polyvec: polynomial is not homogeneous quadratic");
                if (idx[0] == idx[1]) {
                    g.mats_[k](idx[0], idx[0]) += c;
                } else {
                    g.mats_[k](idx[0], idx[1]) += S(half * c);
                    g.mats_[k](idx[1], idx[0]) += S(half * c);
                }
            }
        }
        return g;
    }

    friend VectorQuadraticMap operator+(const VectorQuadraticMap& a,
                                        const VectorQuadraticMap& b) {
        VectorQuadraticMap r(a.n_);
        for (std::size_t k = 0; k < a.n_; ++k) r.mats_[k] = a.mats_[k] + b.mats_[k];
        return r;
    }
    friend VectorQuadraticMap operator-(const VectorQuadraticMap& a,
                                        const VectorQuadraticMap& b) {
        VectorQuadraticMap r(a.n_);
        for (std::size_t k = 0; k < a.n_; ++k) r.mats_[k] = a.mats_[k] - b.mats_[k];
        return r;
    }
    friend VectorQuadraticMap operator*(const S& c, const VectorQuadraticMap& a) {
        VectorQuadraticMap r(a.n_);
        for (std::size_t k = 0; k < a.n_; ++k) r.mats_[k] = c * a.mats_[k];
        return r;
    }
    friend bool operator==(const VectorQuadraticMap& a, const VectorQuadraticMap& b) {
        return a.n_ == b.n_ && a.mats_ == b.mats_;
    }

    bool is_zero() const {
        for (const auto& m : mats_)
            if (!m.is_zero()) return false;
        return true;
    }

    // Coefficient coordinates in the n * n(n+1)/2 dimensional space of
    // vector quadratic maps (used for exact rank computations).
    Vector<S> flatten() const {
        Vector<S> v;
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i; j < n_; ++j) v.push_back(mats_[k](i, j));
        return v;
    }

  private:
    std::size_t n_ = 0;
    std::vector<Matrix<S>> mats_;
};

inline VectorQuadraticMap<double> to_double(const VectorQuadraticMap<Rational>& g) {
    VectorQuadraticMap<double> r(g.dimension());
    for (std::size_t k = 0; k < g.dimension(); ++k)
        for (std::size_t i = 0; i < g.dimension(); ++i)
            for (std::size_t j = 0; j < g.dimension(); ++j)
                r.component(k)(i, j) = g.component(k)(i, j).get_d();
    return r;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
    Matrix<double> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
    return r;
}

inline Vector<double> to_double(const Vector<Rational>& v) {
    Vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
    return r;
}

// Scalar quadratic form x^T M x with M symmetric; degree-2 Poly counterpart.
template <class S>
Matrix<S> quadratic_form_from_poly(const Poly<S>& p) {
    const std::size_t n = p.dimension();
    Matrix<S> m(n, n);
    const S half = S(1) / S(2);
    for (const auto& [mon, c] : p.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < mon[i]; ++e) idx.push_back(i);
        if (idx.size() != 2) throw DomainError("quadratic_form_from_poly: not quadratic");
        if (idx[0] == idx[1]) {
            m(idx[0], idx[0]) += c;
        } else {
            m(idx[0], idx[1]) += S(half * c);
            m(idx[1], idx[0]) += S(half * c);
        }
    }
    return m;
}

// Riesz coefficient vector of a degree <= 1 homogeneous polynomial.
template <class S>
Vector<S> linear_functional_from_poly(const Poly<S>& p) {
    const std::size_t n = p.dimension();
    Vector<S> v(n, S{});
    for (const auto& [mon, c] : p.terms()) {
        std::size_t idx = n, total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            total += mon[i];
            if (mon[i]) idx = i;
        }
        if (total != 1) throw DomainError("linear_functional_from_poly: not linear");
        v[idx] = c;
    }
    return v;
}

}  // namespace rcb
