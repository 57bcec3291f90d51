#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcb/linalg.hpp"

namespace rcb {

// Exponent vector in graded-lex-compatible storage; length = dimension n.
using Monomial = std::vector<unsigned>;

// Sparse multivariate polynomial over S.  Zero coefficients are never stored.
template <class S>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::size_t n) : n_(n) {}

    static Poly constant(std::size_t n, S c) {
        Poly p(n);
        p.add_term(Monomial(n, 0), std::move(c));
        return p;
    }
    static Poly variable(std::size_t n, std::size_t i) {
        Poly p(n);
        Monomial m(n, 0);
        m[i] = 1;
        p.add_term(m, S(1));
        return p;
    }

    std::size_t dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, S>& terms() const { return terms_; }

    S coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S{} : it->second;
    }

    void add_term(const Monomial& m, const S& c) {
        if (rcb::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (rcb::is_zero(it->second)) terms_.erase(it);
        }
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned t = 0;
            for (unsigned e : m) t += e;
            if (t > d) d = t;
        }
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, S(-c));
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.n_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, S(-c));
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.n_);
                for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, S(ca * cb));
            }
        return r;
    }
    friend Poly operator*(const S& c, const Poly& a) {
        Poly r(a.n_);
        if (rcb::is_zero(c)) return r;
        for (const auto& [m, v] : a.terms_) r.add_term(m, S(c * v));
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    template <class T>
    T evaluate(const Vector<T>& x) const {
        T acc{};
        for (const auto& [m, c] : terms_) {
            T term = T(c);
            for (std::size_t i = 0; i < n_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
            acc += term;
        }
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_str(c) << ")";
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                os << "*" << var << i;
                if (m[i] > 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

  private:
    static std::string scalar_str(const Rational& c) { return to_string(c); }
    static std::string scalar_str(double c) { return std::to_string(c); }
    static std::string scalar_str(const Gaussian<Rational>& c) {
        return to_string(c.re) + "+" + to_string(c.im) + "i";
    }

    std::size_t n_ = 0;
    std::map<Monomial, S> terms_;
};

// Vector-valued polynomial map: one Poly per output coordinate.
template <class S>
using PolyVec = std::vector<Poly<S>>;

template <class S>
Poly<S> poly_dot(const PolyVec<S>& f, const PolyVec<S>& g) {
    Poly<S> acc(f.at(0).dimension());
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
    return acc;
}

// The identity map x as a PolyVec.
template <class S>
PolyVec<S> poly_identity(std::size_t n) {
    PolyVec<S> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(Poly<S>::variable(n, i));
    return r;
}

// The Euclidean form (x,x) = x0^2 + ... + x_{n-1}^2.
template <class S>
Poly<S> cone_form(std::size_t n) {
    Poly<S> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 2;
        q.add_term(m, S(1));
    }
    return q;
}

template <class S>
struct ConeDivision {
    Poly<S> quotient;
    Poly<S> remainder;
};

// Exact division with remainder by the cone form (x,x): P = (x,x)Q + R where
// no monomial of R is divisible by x0^2.  Implemented as the substitution
// x0^2 <- -(x1^2 + ... + x_{n-1}^2), one reduction per leading monomial; the
// x0-degree drops strictly, so this terminates.  R == 0 iff P vanishes on the
// complex cone.
template <class S>
ConeDivision<S> cone_divide(const Poly<S>& p) {
    const std::size_t n = p.dimension();
    if (n < 2) throw DomainError("cone_divide: dimension must be >= 2");
    Poly<S> work = p;
    Poly<S> quotient(n);
    Poly<S> remainder(n);
    while (!work.is_zero()) {
        // Split off everything already in normal form, reduce the rest.
        Poly<S> reducible(n);
        for (const auto& [m, c] : work.terms()) {
            if (m[0] >= 2)
                reducible.add_term(m, c);
            else
                remainder.add_term(m, c);
        }
        work = Poly<S>(n);
        for (const auto& [m, c] : reducible.terms()) {
            Monomial base = m;
            base[0] -= 2;
            quotient.add_term(base, c);
            // c*m = c*base*(x,x) - c*base*(x1^2+...+x_{n-1}^2)
            for (std::size_t i = 1; i < n; ++i) {
                Monomial t = base;
                t[i] += 2;
                work.add_term(t, S(-c));
            }
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

}  // namespace rcb
