#pragma once

#include "ascq/core.hpp"
#include "ascq/poly.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace ascq::test
{

inline constexpr double pi = std::numbers::pi;

/// Seeded generator for property tests.
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    /// Uniform in modulus on [rmin, rmax] and in angle on (-pi, pi].
    Complex annulus(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), uniform(-pi, pi)); }
    Complex box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

    Poly poly(std::size_t degree, double half = 1.0)
    {
        std::vector<Complex> c(degree + 1);
        for (auto& z : c)
            z = box(half);
        if (c.back() == Complex(0.0))
            c.back() = 1.0;
        return Poly(std::move(c));
    }

  private:
    std::mt19937_64 rng_;
};

inline double rel_err(Complex got, Complex want)
{
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got);
}

/// The acceptance grid of Gram parameter sets.
inline const std::vector<std::pair<Complex, Complex>>& gram_sets()
{
    static const std::vector<std::pair<Complex, Complex>> sets = {
        {{1.0, 1.0}, std::polar(0.8, pi / 6)},
        {-2.0, 0.6},
        {{0.0, 0.5}, std::polar(0.7, -pi / 4)},
    };
    return sets;
}

} // namespace ascq::test
