#include <benchmark/benchmark.h>

#include <vector>

#include "rcb/bundle.hpp"
#include "rcb/cone.hpp"
#include "rcb/fit.hpp"
#include "rcb/quadmap.hpp"
#include "rcb/quaternion.hpp"
#include "rcb/random.hpp"
#include "rcb/transform.hpp"

namespace {

using namespace rcb;

void bm_quaternion_multiply(benchmark::State& state) {
    Rng rng(1);
    Quaternion<Rational> p = rng.quaternion(50, 50), q = rng.quaternion(50, 50);
    for (auto _ : state) {
        auto r = p * q;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_quaternion_multiply);

void bm_cone_divide(benchmark::State& state) {
    Rng rng(2);
    LinearQuaternionMap<Rational> a = rng.matrix(4, 4, 10, 10);
    auto gamma = gamma_from_A(a, Side::left);
    PolyVec<Rational> g = gamma.to_polyvec();
    Poly<Rational> gg = poly_dot(g, g);
    for (auto _ : state) {
        auto qr = cone_divide(gg);
        benchmark::DoNotOptimize(qr);
    }
}
BENCHMARK(bm_cone_divide);

void bm_check_conditions(benchmark::State& state) {
    Rng rng(3);
    LinearQuaternionMap<Rational> a = rng.matrix(4, 4, 10, 10);
    auto gamma = gamma_from_A(a, Side::left);
    for (auto _ : state) {
        auto check = check_conditions(gamma);
        benchmark::DoNotOptimize(check);
    }
}
BENCHMARK(bm_check_conditions);

void bm_decompose(benchmark::State& state) {
    Rng rng(4);
    LinearQuaternionMap<Rational> a = rng.matrix(4, 4, 10, 10);
    auto gamma = gamma_from_A(a, Side::left);
    for (auto _ : state) {
        auto dec = decompose_quaternionic(gamma, Side::left);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(bm_decompose);

void bm_synthesize_rectifier(benchmark::State& state) {
    Rng rng(5);
    LinearQuaternionMap<Rational> a = Rational(1, 10) * rng.matrix(4, 4, 5, 5);
    auto gamma = gamma_from_A(a, Side::left);
    for (auto _ : state) {
        auto syn = synthesize_rectifier(gamma);
        benchmark::DoNotOptimize(syn);
    }
}
BENCHMARK(bm_synthesize_rectifier);

void bm_fit_circle(benchmark::State& state) {
    Rng rng(6);
    LinearQuaternionMap<Rational> a = Rational(1, 10) * rng.matrix(4, 4, 5, 5);
    auto t = qft_from_A(to_double(a), Side::left);
    Vector<double> d = rng.unit_direction(4);
    std::vector<Vector<double>> pts;
    for (int i = 0; i < 24; ++i)
        pts.push_back(qft_apply(t, ((i - 11.5) / 60.0) * d));
    for (auto _ : state) {
        auto fit = fit_circle(pts);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(bm_fit_circle);

void bm_verify_rounds_lines(benchmark::State& state) {
    Rng rng(7);
    LinearQuaternionMap<Rational> a = Rational(1, 10) * rng.matrix(4, 4, 5, 5);
    auto t = qft_from_A(to_double(a), Side::left);
    std::vector<Vector<double>> dirs;
    for (int m = 0; m < 10; ++m) dirs.push_back(rng.unit_direction(4));
    auto map = [&t](const Vector<double>& x) { return qft_apply(t, x); };
    for (auto _ : state) {
        auto report = verify_rounds_lines(map, dirs, 0.2, 1e-6);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_verify_rounds_lines);

}  // namespace

BENCHMARK_MAIN();
