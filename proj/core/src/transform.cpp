#include "rcb/transform.hpp"

#include <cmath>

namespace rcb {

RectifierMap Synthesis::map() const {
    RectifierMap m;
    if (a) m.a = rcb::to_double(*a);
    m.gamma_prime = rcb::to_double(gamma_prime);
    m.mu = rcb::to_double(mu);
    m.radius = radius;
    return m;
}

Synthesis synthesize_rectifier(const VectorQuadraticMap<Rational>& gamma) {
    const std::size_t n = gamma.dimension();
    auto check = check_conditions(gamma);
    if (!check.ok)
        throw DomainError("synthesize_rectifier: rectifiability conditions violated");

    Synthesis syn;
    VectorQuadraticMap<Rational> gamma_prime = gamma;
    Vector<Rational> v = linear_functional_from_poly(check.lambda);
    if (!is_zero_vector(v)) {
        // a with lambda(x) = -(a,x)/(a,a): the shortest is a = -v/(v,v).
        Rational vv = dot(v, v);
        Vector<Rational> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = -v[i] / vv;
        gamma_prime = gamma - t_a_quadratic(a);
        syn.a = std::move(a);
    }

    // (Gamma'(x), x) must now vanish identically, not just on the cone.
    PolyVec<Rational> gp = gamma_prime.to_polyvec();
    PolyVec<Rational> x = poly_identity<Rational>(n);
    if (!poly_dot(gp, x).is_zero())
        throw Error("synthesize_rectifier: lambda was not killed");

    auto div = cone_divide(poly_dot(gp, gp));
    if (!div.remainder.is_zero())
        throw Error("synthesize_rectifier: (Gamma',Gamma') not divisible by (x,x)");
    syn.gamma_prime = std::move(gamma_prime);
    syn.mu = quadratic_form_from_poly(div.quotient.is_zero() ? Poly<Rational>(n)
                                                             : div.quotient);

    // Certified ball: 4 sup |mu| <= 4 ||mu||_1 r^2 <= 1/2, and stay clear of
    // the T^a pole at -a.
    double mu_norm = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mu_norm += std::abs(syn.mu(i, j).get_d());
    double r = mu_norm > 0 ? std::sqrt(1.0 / (8.0 * mu_norm)) : 1e6;
    if (syn.a) {
        double an = 0;
        for (const auto& ai : *syn.a) an += ai.get_d() * ai.get_d();
        r = std::min(r, 0.4 * std::sqrt(an));
    }
    syn.radius = r;
    return syn;
}

}  // namespace rcb
