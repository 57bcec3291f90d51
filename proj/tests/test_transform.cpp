#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rcb/fit.hpp"
#include "rcb/random.hpp"
#include "rcb/transform.hpp"

using namespace rcb;
using namespace rcb_test;

namespace {

Vector<Rational> e(std::size_t i) { return basis_vector<Rational>(4, i); }
Vector<double> ed(std::size_t i) { return basis_vector<double>(4, i); }

double norm(const Vector<double>& v) { return std::sqrt(dot(v, v)); }

double rel_error(const Vector<double>& got, const Vector<double>& want) {
    double scale = std::max(norm(want), 1e-12);
    return norm(got - want) / scale;
}

LinearQuaternionMap<double> random_scaled_map(Rng& rng, double scale) {
    return scale * to_double(rng.matrix(4, 4, 10, 10));
}

PointMap rectifier_point_map(const RectifierMap& m) {
    return [m](const Vector<double>& x) { return m.evaluate(x); };
}

PointMap qft_point_map(const FractionalTransform<double>& t) {
    return [t](const Vector<double>& x) { return qft_apply(t, x); };
}

// Points on a fitted circle at angle phi, in its carrier plane.
Vector<double> circle_point(const CircleFit& fit, double phi) {
    Vector<double> p = *fit.circle.center;
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] += fit.radius * (std::cos(phi) * fit.plane_u[i] +
                              std::sin(phi) * fit.plane_v[i]);
    return p;
}

// The plane map (z1, z2) -> (z1, z2)/(1 + z1) on C^2 = H (z2 multiplied by j
// on the right), as a left fractional transform.
FractionalTransform<double> complex_projective_transform() {
    FractionalTransform<double> t;
    t.side = Side::left;
    t.num = AffineMap<double>::identity(4);
    t.den.linear = Matrix<double>(4, 4);
    t.den.linear(0, 0) = 1.0;  // denominator 1 + x0 + x1 i
    t.den.linear(1, 1) = 1.0;
    t.den.constant = ed(0);
    return t;
}

}  // namespace

TEST_CASE("inversion") {
    CHECK(invert(e(0)) == e(0));
    CHECK(invert(Rational(2) * e(0)) == Rational(1, 2) * e(0));
    CHECK_THROWS_AS(invert(zero_vector<Rational>(4)), DomainError);

    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Vector<Rational> x = rng.nonzero_vector(4, 20, 20);
        CHECK(invert(invert(x)) == x);
    }
}

TEST_CASE("T^a worked cases") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        // a = e0 sends the line t e1 onto the circle with center e0/2.
        Rational t = rng.nonzero_rational(20, 20);
        Vector<Rational> y = t_a(e(0), t * e(1));
        Rational den = Rational(1) + t * t;
        CHECK(y[0] == t * t / den);
        CHECK(y[1] == t / den);
        Rational u = y[0] - Rational(1, 2);
        CHECK(u * u + y[1] * y[1] == Rational(1, 4));
    }

    CHECK(t_a_quadratic(e(0)).evaluate(e(1)) == e(0));
    CHECK(is_zero_vector(t_a(e(0), zero_vector<Rational>(4))));
    CHECK_THROWS_AS(t_a(zero_vector<Rational>(4), e(1)), DomainError);
    CHECK_THROWS_AS(t_a(e(0), Rational(-1) * e(0)), PoleError);
}

TEST_CASE("T^a agrees with its quadratic term to third order") {
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Vector<double> a = to_double(rng.nonzero_vector(4, 5, 5));
        Vector<double> d = rng.unit_direction(4);
        auto quad = t_a_quadratic(a);
        auto err = [&](double h) {
            Vector<double> x = h * d;
            return norm(t_a(a, x) - (x + quad.evaluate(x)));
        };
        double h = 1e-2 * std::sqrt(dot(a, a));
        double prev = err(h);
        for (int halve = 0; halve < 3; ++halve) {
            h /= 2;
            double cur = err(h);
            if (cur < 1e-14) break;  // below noise floor, order test meaningless
            double order = std::log2(prev / cur);
            CHECK(order >= 2.9);
            prev = cur;
        }
    }
}

TEST_CASE("fractional transform evaluation") {
    // (1 - x0 i)^{-1} x at e0.
    FractionalTransform<Rational> t;
    t.side = Side::left;
    t.num = AffineMap<Rational>::identity(4);
    t.den.linear = Matrix<Rational>(4, 4);
    t.den.linear(1, 0) = Rational(-1);
    t.den.constant = e(0);
    Vector<Rational> y = qft_apply(t, e(0));
    CHECK(y == Vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});

    FractionalTransform<Rational> id;
    id.num = AffineMap<Rational>::identity(4);
    id.den = {Matrix<Rational>(4, 4), e(0)};
    Rng rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        Vector<Rational> x = rng.vector(4, 20, 20);
        CHECK(qft_apply(id, x) == x);
    }

    // Pole of the denominator: 1 - x0 vanishes at e0.
    FractionalTransform<Rational> p;
    p.side = Side::left;
    p.num = AffineMap<Rational>::identity(4);
    p.den.linear = Matrix<Rational>(4, 4);
    p.den.linear(0, 0) = Rational(-1);
    p.den.constant = e(0);
    CHECK_THROWS_AS(qft_apply(p, e(0)), PoleError);
}

TEST_CASE("projective maps reduce to dilatation plus reflected inversion") {
    // x -> (x a + b)^{-1} (x c + d) equals alpha + (x a + b)^{-1} beta with
    // alpha = a^{-1} c, beta = d - b alpha.
    Rng rng(45);
    for (int trial = 0; trial < 25; ++trial) {
        Quaternion<Rational> a = rng.nonzero_quaternion(10, 10);
        Quaternion<Rational> b = rng.quaternion(10, 10);
        Quaternion<Rational> c = rng.quaternion(10, 10);
        Quaternion<Rational> d = rng.quaternion(10, 10);

        FractionalTransform<Rational> t;
        t.side = Side::left;
        t.num = {mul_operator(c, Side::right), d.to_vector()};  // x c + d
        t.den = {mul_operator(a, Side::right), b.to_vector()};  // x a + b

        Quaternion<Rational> alpha = qinv(a) * c;
        Quaternion<Rational> beta = d - b * alpha;

        Quaternion<Rational> x = rng.quaternion(10, 10);
        Quaternion<Rational> den = x * a + b;
        if (is_zero(qnorm_sq(den))) continue;
        Vector<Rational> got = qft_apply(t, x.to_vector());
        Quaternion<Rational> want = alpha + qinv(den) * beta;
        CHECK(got == want.to_vector());
    }
}

TEST_CASE("canonical rounding family") {
    // A = 0: the identity transform.
    auto id = qft_from_A(Matrix<double>(4, 4), Side::left);
    Rng rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        Vector<double> x = to_double(rng.vector(4, 10, 10));
        CHECK(rel_error(qft_apply(id, x), x) == 0);
    }

    // A(x) = x0 i, left: t e0 lands on (t + t^2 i)/(1 + t^2), the circle with
    // center (0, 1/2, 0, 0) and radius 1/2.
    Matrix<Rational> a(4, 4);
    a(1, 0) = Rational(1);
    auto t = qft_from_A(a, Side::left);
    for (int k = 1; k <= 10; ++k) {
        Rational s = make_rational(k, 7);
        Vector<Rational> y = qft_apply(t, s * e(0));
        Rational den = Rational(1) + s * s;
        CHECK(y[0] == s / den);
        CHECK(y[1] == s * s / den);
        Rational v = y[1] - Rational(1, 2);
        CHECK(y[0] * y[0] + v * v == Rational(1, 4));
    }
}

TEST_CASE("quadratic terms by finite differences") {
    Rng rng(47);
    const double h = 1e-3;
    for (int trial = 0; trial < 10; ++trial) {
        Side side = trial % 2 ? Side::left : Side::right;
        LinearQuaternionMap<Rational> a = Rational(1, 10) * rng.matrix(4, 4, 5, 5);
        auto t = qft_from_A(to_double(a), side);
        auto gamma = to_double(gamma_from_A(a, side));
        Vector<double> d = rng.unit_direction(4);
        Vector<double> plus = qft_apply(t, h * d);
        Vector<double> minus = qft_apply(t, (-h) * d);
        Vector<double> second = (1.0 / (2 * h * h)) * (plus + minus);
        CHECK(rel_error(second, gamma.evaluate(d)) < 1e-5);
    }
}

TEST_CASE("rectifier synthesis worked cases") {
    auto zero = synthesize_rectifier(VectorQuadraticMap<Rational>(4));
    CHECK(!zero.a.has_value());
    CHECK(zero.gamma_prime.is_zero());
    CHECK(zero.mu.is_zero());
    Rng rng(48);
    for (int trial = 0; trial < 5; ++trial) {
        Vector<double> x = to_double(rng.vector(4, 10, 10));
        CHECK(rel_error(zero.map().evaluate(x), x) == 0);
    }

    // Nonzero lambda: a reconstructs the gauge functional.
    auto g = gamma_parallel(e(0) + Rational(2) * e(2), e(1) - e(3));
    auto check = check_conditions(g);
    REQUIRE(check.ok);
    Vector<Rational> v = linear_functional_from_poly(check.lambda);
    auto syn = synthesize_rectifier(g);
    REQUIRE(syn.a.has_value());
    CHECK(*syn.a == Rational(Rational(-1) / dot(v, v)) * v);
    // lambda(x) = -(a, x)/(a, a) by construction.
    Rational aa = dot(*syn.a, *syn.a);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(v[i] == -(*syn.a)[i] / aa);

    // The worked left example: lambda = 0, mu = x0^2.
    auto si = synthesize_rectifier(gamma_x0_ix());
    CHECK(!si.a.has_value());
    CHECK(si.gamma_prime == gamma_x0_ix());
    Matrix<Rational> mu(4, 4);
    mu(0, 0) = Rational(1);
    CHECK(si.mu == mu);
    CHECK(si.radius == doctest::Approx(std::sqrt(1.0 / 8.0)));

    VectorQuadraticMap<Rational> bad(4);
    bad.component(0)(0, 1) = Rational(1, 2);
    bad.component(0)(1, 0) = Rational(1, 2);
    CHECK_THROWS_AS(synthesize_rectifier(bad), DomainError);
}

TEST_CASE("circle fitting") {
    // Samples of the circle through 0 with center e0/2.
    std::vector<Vector<double>> points;
    for (int m = 0; m < 12; ++m) {
        double th = 2 * M_PI * m / 12.0;
        points.push_back({0.5 - 0.5 * std::cos(th), 0.5 * std::sin(th), 0.0, 0.0});
    }
    auto fit = fit_circle(points);
    REQUIRE(!fit.is_line());
    CHECK(fit.radius == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rel_error(*fit.circle.center, 0.5 * ed(0)) < 1e-9);
    CHECK(fit.residual < 1e-12);
    CHECK(distance_to_fit(fit, zero_vector<double>(4)) < 1e-12);
    CHECK(distance_to_fit(fit, ed(0)) < 1e-12);
    CHECK(distance_to_fit(fit, 0.5 * ed(0)) == doctest::Approx(0.5));

    // Collinear samples give a line.
    std::vector<Vector<double>> line_pts;
    for (int m = 0; m < 8; ++m) line_pts.push_back((0.1 * m - 0.35) * ed(1));
    auto line = fit_circle(line_pts);
    CHECK(line.is_line());
    CHECK(line.residual < 1e-14);
    CHECK(distance_to_fit(line, 3.0 * ed(1)) < 1e-12);
    CHECK(distance_to_fit(line, ed(2)) == doctest::Approx(1.0));

    // Stability under small noise.
    Rng rng(49);
    std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
    auto noisy = points;
    for (auto& p : noisy)
        for (auto& c : p) c += noise(rng.engine());
    auto nf = fit_circle(noisy);
    REQUIRE(!nf.is_line());
    CHECK(nf.residual <= 5e-6);
    CHECK(rel_error(*nf.circle.center, 0.5 * ed(0)) < 1e-5);

    CHECK_THROWS_AS(fit_circle({ed(0), ed(1), ed(2)}), DomainError);
}

TEST_CASE("line verification harness") {
    std::vector<Vector<double>> dirs;
    Rng rng(50);
    for (int m = 0; m < 10; ++m) dirs.push_back(rng.unit_direction(4));

    // The identity rounds trivially: every image is a line.
    auto id_report = verify_rounds_lines([](const Vector<double>& x) { return x; }, dirs,
                                         0.3, 1e-8);
    CHECK(id_report.pass);
    for (const auto& dr : id_report.directions) {
        CHECK(dr.fit.is_line());
        CHECK(dr.residual < 1e-14);
    }

    // The canonical family rounds; direction e0 gives the known circle.
    Matrix<double> a(4, 4);
    a(1, 0) = 1.0;
    auto t = qft_from_A(a, Side::left);
    std::vector<Vector<double>> with_e0 = dirs;
    with_e0.push_back(ed(0));
    auto report = verify_rounds_lines(qft_point_map(t), with_e0, 0.3, 1e-8);
    CHECK(report.pass);
    const auto& last = report.directions.back();
    REQUIRE(!last.fit.is_line());
    CHECK(rel_error(*last.fit.circle.center, 0.5 * ed(1)) < 1e-8);
    CHECK(last.fit.radius == doctest::Approx(0.5).epsilon(1e-8));

    // A cubic distortion is not a rounding map.
    auto distorted = [](const Vector<double>& x) {
        Vector<double> y = x;
        y[0] += dot(x, x) * x[1] * x[2];
        return y;
    };
    CHECK(!verify_rounds_lines(distorted, dirs, 0.3, 1e-8).pass);

    CHECK_THROWS_AS(verify_rounds_lines(distorted, dirs, 0.3, 1e-8, 10), DomainError);
}

TEST_CASE("fractional transforms round lines") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        FractionalTransform<double> t;
        t.side = trial % 2 ? Side::left : Side::right;
        t.num.linear = Matrix<double>::identity(4) + random_scaled_map(rng, 0.05);
        t.num.constant = to_double(rng.vector(4, 10, 10));
        t.den.linear = random_scaled_map(rng, 0.05);
        t.den.constant = ed(0);
        std::vector<Vector<double>> dirs;
        for (int m = 0; m < 10; ++m) dirs.push_back(rng.unit_direction(4));
        auto report = verify_rounds_lines(qft_point_map(t), dirs, 0.2, 1e-8);
        CHECK(report.pass);
    }
}

TEST_CASE("synthesized rectifiers round lines and reproduce their quadratic term") {
    Rng rng(52);
    const double h = 1e-3;
    for (int trial = 0; trial < 12; ++trial) {
        Side side = trial % 2 ? Side::left : Side::right;
        // Scaled so the certified radius comfortably covers 0.2; even trials
        // keep the real part (lambda != 0), odd trials are canonical.
        LinearQuaternionMap<Rational> a = Rational(1, 100) * rng.matrix(4, 4, 10, 10);
        if (trial % 2)
            for (std::size_t c = 0; c < 4; ++c) a(0, c) = Rational(0);
        auto gamma = gamma_from_A(a, side);
        auto syn = synthesize_rectifier(gamma);
        REQUIRE(syn.radius >= 0.2);
        auto map = syn.map();

        std::vector<Vector<double>> dirs;
        for (int m = 0; m < 10; ++m) dirs.push_back(rng.unit_direction(4));
        CHECK(verify_rounds_lines(rectifier_point_map(map), dirs, 0.2, 1e-6).pass);

        auto gd = to_double(gamma);
        Vector<double> d = rng.unit_direction(4);
        Vector<double> second = (1.0 / (2 * h * h)) *
                                (map.evaluate(h * d) + map.evaluate((-h) * d));
        CHECK(rel_error(second, gd.evaluate(d)) < 1e-5);
    }
}

TEST_CASE("fitted centers match the center formula") {
    Rng rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        Side side = trial % 2 ? Side::left : Side::right;
        LinearQuaternionMap<Rational> a = Rational(1, 10) * rng.matrix(4, 4, 10, 10);
        auto t = qft_from_A(to_double(a), side);
        std::vector<Vector<double>> dirs;
        for (int m = 0; m < 10; ++m) dirs.push_back(rng.unit_direction(4));
        auto report = verify_rounds_lines(qft_point_map(t), dirs, 0.2, 1e-8);
        REQUIRE(report.pass);
        for (const auto& dr : report.directions) {
            auto predicted = center_from_A(to_double(a), dr.direction, side);
            if (predicted.is_line()) {
                CHECK(dr.fit.is_line());
            } else {
                REQUIRE(!dr.fit.is_line());
                CHECK(rel_error(*dr.fit.circle.center, *predicted.center) < 1e-6);
            }
        }
    }
}

TEST_CASE("complex projective counterexample") {
    auto t = complex_projective_transform();

    // Directions inside three distinct complex lines of C^2, each with a
    // nonreal z1 component so the image is a genuine circle.
    std::vector<Vector<double>> dirs{{1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}};
    for (auto& d : dirs) {
        double n = norm(d);
        for (auto& c : d) c /= n;
    }
    auto report = verify_rounds_lines(qft_point_map(t), dirs, 0.2, 1e-8);
    CHECK(report.pass);

    // Its quadratic term is Gamma(x) = -(x0 + x1 i) x; no common point.
    Matrix<Rational> a(4, 4);
    a(0, 0) = Rational(-1);
    a(1, 1) = Rational(-1);
    auto gamma = gamma_from_A(a, Side::left);
    const double h = 1e-3;
    Rng rng(54);
    for (int m = 0; m < 5; ++m) {
        Vector<double> d = rng.unit_direction(4);
        Vector<double> second =
            (1.0 / (2 * h * h)) *
            (qft_apply(t, h * d) + qft_apply(t, (-h) * d));
        CHECK(rel_error(second, to_double(gamma).evaluate(d)) < 1e-5);
    }
    CHECK(common_point(gamma).kind == CommonPoint::Kind::none);

    // Fitted circles in distinct complex lines meet only at the origin.
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            const auto& fi = report.directions[i].fit;
            const auto& fj = report.directions[j].fit;
            REQUIRE(!fi.is_line());
            REQUIRE(!fj.is_line());
            double nearest = 1e300;
            for (int m = 0; m < 720; ++m) {
                Vector<double> p = circle_point(fi, 2 * M_PI * m / 720.0);
                if (norm(p) < 0.05) continue;  // both circles pass through 0
                nearest = std::min(nearest, distance_to_fit(fj, p));
            }
            CHECK(nearest > 0.01);
        }
}
