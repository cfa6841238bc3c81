#pragma once

#include "sqrtpot/ansatz.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace sqrtpot::testing {

inline double rel_err(double got, double expected)
{
    return std::abs(got - expected) / std::max(1e-300, std::abs(expected));
}

// Composite Simpson on a uniform grid; independent of the library quadrature.
inline double simpson(std::function<double(double)> const& f, double a, double b, int intervals)
{
    if (intervals % 2 != 0)
        ++intervals;
    double const h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        sum += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Norm integral of an unnormalized bound state computed in t = sqrt(r),
// entirely on its own code path.
inline double norm_integral_reference(BoundState const& state, double t_max, int intervals = 400000)
{
    auto const& c = state.series.coeffs;
    double const a = state.factors.gauss_rate;
    double const b = state.factors.linear_rate;
    double const power = 2.0 * state.factors.indicial_exponent + 2.0 * state.channel.dim - 1.0;
    auto f = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        double poly = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            poly = poly * t + *it;
        return 2.0 * std::exp(-2.0 * (a * t * t + b * t) + power * std::log(t)) * poly * poly;
    };
    return simpson(f, 0.0, t_max, intervals);
}

struct Rng {
    std::mt19937 gen;

    explicit Rng(unsigned seed) : gen(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    int uniform_int(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
};

} // namespace sqrtpot::testing
