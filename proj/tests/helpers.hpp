#pragma once

#include "rcb/bundle.hpp"
#include "rcb/random.hpp"

namespace rcb_test {

using namespace rcb;

// Gamma(x) = b(x,x) + lambda(x)x from exact data.
inline VectorQuadraticMap<Rational> gamma_parallel(const Vector<Rational>& b,
                                                   const Vector<Rational>& lambda) {
    const std::size_t n = b.size();
    PolyVec<Rational> x = poly_identity<Rational>(n);
    Poly<Rational> q = cone_form<Rational>(n);
    Poly<Rational> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam += lambda[i] * x[i];
    PolyVec<Rational> f(n, Poly<Rational>(n));
    for (std::size_t k = 0; k < n; ++k) f[k] = b[k] * q + lam * x[k];
    return VectorQuadraticMap<Rational>::from_polyvec(f);
}

// Gamma(x) = x0 * (i * x): the worked left-quaternionic example.
inline VectorQuadraticMap<Rational> gamma_x0_ix() {
    LinearQuaternionMap<Rational> a(4, 4);
    a(1, 0) = Rational(1);  // A(x) = x0 i
    return gamma_from_A(a, Side::left);
}

inline VectorQuadraticMap<Rational> random_gamma_from_A(Rng& rng, Side side, int bound = 10) {
    return gamma_from_A(rng.matrix(4, 4, bound, bound), side);
}

}  // namespace rcb_test
