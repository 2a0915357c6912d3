#pragma once

#include <random>

#include "geo/geo.hpp"

namespace geo::testing {

// Seeded generator so every property test is reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x5eed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Complex point(double half_width = 10.0) {
        return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
    }

    // Uniform in the disk of the given radius.
    Complex in_disk(double radius) {
        return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(-kPi, kPi));
    }

    HPoint hpoint(double max_radius = 0.9) { return HPoint(in_disk(max_radius)); }

    Vec3 unit_vector() {
        std::normal_distribution<double> n;
        Vec3 v{n(gen_), n(gen_), n(gen_)};
        return v * (1.0 / v.norm());
    }

    Triangle triangle(double half_width = 10.0) {
        for (;;) {
            Triangle t{point(half_width), point(half_width), point(half_width)};
            double s = t.scale();
            if (std::abs(orient(t.a, t.b, t.c)) > 1e-2 * s * s) return t;
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline double relative_error(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace geo::testing
