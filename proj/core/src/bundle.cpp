#include "rcb/bundle.hpp"

#include <cmath>

namespace rcb {

namespace {

// One-sided fit: solve M x_i = m_i exactly over the rationals.  Requires the
// tangents to span R^4; inconsistent data yields nullopt.
std::optional<Matrix<Rational>> solve_side_exact(const std::vector<Circle<Rational>>& samples,
                                                 Side side) {
    const std::size_t k = samples.size();
    Matrix<Rational> tangents(k, 4);
    Matrix<Rational> targets(k, 4);
    for (std::size_t i = 0; i < k; ++i) {
        auto m = detail::fit_target(samples[i], side);
        if (!m) return std::nullopt;
        for (std::size_t j = 0; j < 4; ++j) {
            tangents(i, j) = samples[i].tangent[j];
            targets(i, j) = (*m)[j];
        }
    }
    if (rank(tangents) < 4)
        throw DomainError("fit_bundle: needs more samples (tangents do not span R^4)");
    Matrix<Rational> m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        auto row = solve(tangents, targets.col(r));
        if (!row) return std::nullopt;
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = (*row)[c];
    }
    // The solved map must land in Im H.
    for (std::size_t c = 0; c < 4; ++c)
        if (!is_zero(m(0, c))) return std::nullopt;
    return m;
}

// Dense SPD solve for the float path (normal equations are 4x4).
std::optional<Vector<double>> solve_dense(Matrix<double> a, Vector<double> b) {
    const std::size_t n = a.rows();
    double scale = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a(i, c)) > std::abs(a(p, c))) p = i;
        if (std::abs(a(p, c)) <= 1e-12 * scale) return std::nullopt;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            std::swap(b[p], b[c]);
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            double f = a(i, c) / a(c, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    Vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

std::optional<Matrix<double>> solve_side_float(const std::vector<Circle<double>>& samples,
                                               Side side, double rel_tol) {
    const std::size_t k = samples.size();
    Matrix<double> tangents(k, 4);
    Matrix<double> targets(k, 4);
    double target_scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        auto m = detail::fit_target(samples[i], side);
        if (!m) return std::nullopt;
        for (std::size_t j = 0; j < 4; ++j) {
            tangents(i, j) = samples[i].tangent[j];
            targets(i, j) = (*m)[j];
            target_scale = std::max(target_scale, std::abs((*m)[j]));
        }
    }
    Matrix<double> gram = tangents.transposed() * tangents;
    Matrix<double> m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        auto row = solve_dense(gram, tangents.transposed() * targets.col(r));
        if (!row) throw DomainError("fit_bundle: needs more samples (tangents do not span R^4)");
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = (*row)[c];
    }
    double residual = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Vector<double> pred = m * samples[i].tangent;
        for (std::size_t j = 0; j < 4; ++j)
            residual = std::max(residual, std::abs(pred[j] - targets(i, j)));
    }
    if (residual > rel_tol * target_scale) return std::nullopt;
    for (std::size_t c = 0; c < 4; ++c) m(0, c) = 0.0;
    return m;
}

}  // namespace

std::optional<BundleDescriptor<Rational>> fit_bundle(
    const std::vector<Circle<Rational>>& samples) {
    if (samples.size() < 4) throw DomainError("fit_bundle: needs at least 4 samples");
    auto left = solve_side_exact(samples, Side::left);
    auto right = solve_side_exact(samples, Side::right);
    if (left && right) return BundleDescriptor<Rational>{Family::both, *left};
    if (left) return BundleDescriptor<Rational>{Family::left, *left};
    if (right) return BundleDescriptor<Rational>{Family::right, *right};
    return std::nullopt;
}

std::optional<BundleDescriptor<double>> fit_bundle(const std::vector<Circle<double>>& samples,
                                                   double rel_tol) {
    if (samples.size() < 4) throw DomainError("fit_bundle: needs at least 4 samples");
    auto left = solve_side_float(samples, Side::left, rel_tol);
    auto right = solve_side_float(samples, Side::right, rel_tol);
    if (left && right) return BundleDescriptor<double>{Family::both, *left};
    if (left) return BundleDescriptor<double>{Family::left, *left};
    if (right) return BundleDescriptor<double>{Family::right, *right};
    return std::nullopt;
}

std::vector<VectorQuadraticMap<Rational>> canonical_component_basis(Side side) {
    std::vector<VectorQuadraticMap<Rational>> basis;
    const Quaternion<Rational> units[] = {quat_i(), quat_j(), quat_k()};
    for (std::size_t var = 0; var < 4; ++var)
        for (const auto& u : units) {
            // m(x) = x_var * u, Gamma = m(x)x or x m(x).
            LinearQuaternionMap<Rational> a(4, 4);
            a.set_col(var, u.to_vector());
            basis.push_back(gamma_from_A(a, side));
        }
    return basis;
}

std::vector<VectorQuadraticMap<Rational>> common_point_component_basis() {
    std::vector<VectorQuadraticMap<Rational>> basis;
    PolyVec<Rational> x = poly_identity<Rational>(4);
    Poly<Rational> q = cone_form<Rational>(4);
    for (std::size_t t = 0; t < 4; ++t) {
        PolyVec<Rational> f(4, Poly<Rational>(4));
        for (std::size_t k = 0; k < 4; ++k) {
            if (k == t) f[k] += q;
            f[k] -= x[t] * x[k];
        }
        basis.push_back(VectorQuadraticMap<Rational>::from_polyvec(f));
    }
    return basis;
}

}  // namespace rcb
