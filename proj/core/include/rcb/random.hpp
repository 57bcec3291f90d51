#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "rcb/bundle.hpp"

namespace rcb {

// Deterministic generator of small exact values: numerators bounded by
// num_bound, denominators by den_bound.  Small bounds keep exact arithmetic
// cheap while avoiding degenerate coincidences.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::mt19937_64& engine() { return gen_; }

    Rational rational(int num_bound = 100, int den_bound = 100) {
        std::uniform_int_distribution<int> num(-num_bound, num_bound);
        std::uniform_int_distribution<int> den(1, den_bound);
        return make_rational(num(gen_), den(gen_));
    }

    Rational nonzero_rational(int num_bound = 100, int den_bound = 100) {
        for (;;) {
            Rational q = rational(num_bound, den_bound);
            if (!is_zero(q)) return q;
        }
    }

    GaussianRational gaussian(int num_bound = 100, int den_bound = 100) {
        return {rational(num_bound, den_bound), rational(num_bound, den_bound)};
    }

    GaussianRational nonzero_gaussian(int num_bound = 100, int den_bound = 100) {
        for (;;) {
            GaussianRational g = gaussian(num_bound, den_bound);
            if (!is_zero(g)) return g;
        }
    }

    Vector<Rational> vector(std::size_t n, int num_bound = 100, int den_bound = 100) {
        Vector<Rational> v(n);
        for (auto& x : v) x = rational(num_bound, den_bound);
        return v;
    }

    Vector<Rational> nonzero_vector(std::size_t n, int num_bound = 100, int den_bound = 100) {
        for (;;) {
            Vector<Rational> v = vector(n, num_bound, den_bound);
            if (!is_zero_vector(v)) return v;
        }
    }

    Quaternion<Rational> quaternion(int num_bound = 100, int den_bound = 100) {
        return Quaternion<Rational>::from_vector(vector(4, num_bound, den_bound));
    }

    Quaternion<Rational> nonzero_quaternion(int num_bound = 100, int den_bound = 100) {
        return Quaternion<Rational>::from_vector(nonzero_vector(4, num_bound, den_bound));
    }

    Matrix<Rational> matrix(std::size_t rows, std::size_t cols, int num_bound = 100,
                            int den_bound = 100) {
        Matrix<Rational> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(num_bound, den_bound);
        return m;
    }

    // Random unit-free direction in R^n as doubles.
    Vector<double> unit_direction(std::size_t n) {
        std::normal_distribution<double> normal(0.0, 1.0);
        for (;;) {
            Vector<double> d(n);
            double s = 0;
            for (auto& x : d) {
                x = normal(gen_);
                s += x * x;
            }
            if (s > 1e-12) {
                for (auto& x : d) x /= std::sqrt(s);
                return d;
            }
        }
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace rcb
