#pragma once

#include "rcb/errors.hpp"
#include "rcb/scalar.hpp"

namespace rcb {

// Element of S(i): complexification of the scalar field.  Used for the
// asymptotic cone, whose points are genuinely complex.
template <class S>
struct Gaussian {
    S re{};
    S im{};

    Gaussian() = default;
    Gaussian(S r) : re(std::move(r)) {}
    Gaussian(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        S n = b.re * b.re + b.im * b.im;
        if (is_zero(n)) throw DomainError("division by zero Gaussian scalar");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
    Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
    Gaussian& operator/=(const Gaussian& b) { return *this = *this / b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <class S>
Gaussian<S> conj(const Gaussian<S>& a) {
    return {a.re, -a.im};
}

template <class S>
bool is_zero(const Gaussian<S>& a) {
    return is_zero(a.re) && is_zero(a.im);
}

using GaussianRational = Gaussian<Rational>;

inline GaussianRational gaussian_i() { return {Rational(0), Rational(1)}; }

}  // namespace rcb
