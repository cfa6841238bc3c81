#include "sqrtpot/wavefunction.hpp"

#include "sqrtpot/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqrtpot {

namespace {

// Value at t = sqrt(r): exp(-(A t^2 + B t)) * t^k * sum_j c_j t^j.
double evaluate_at_sqrt_r(BoundState const& state, double t)
{
    double const a = state.factors.gauss_rate;
    double const b = state.factors.linear_rate;
    double const k = state.factors.indicial_exponent;

    double poly = 0.0;
    for (auto it = state.series.coeffs.rbegin(); it != state.series.coeffs.rend(); ++it)
        poly = poly * t + *it;

    double const exponent = -(a * t * t + b * t) + k * std::log(t);
    return std::exp(exponent) * poly;
}

// Norm integrand in t = sqrt(r):  2 t^(2k+2D-1) exp(-2(A t^2 + B t)) P(t)^2.
struct NormIntegrand {
    BoundState const* state;
    double power; // 2k + 2D - 1

    double operator()(double t) const
    {
        if (t <= 0.0)
            return 0.0;
        double const a = state->factors.gauss_rate;
        double const b = state->factors.linear_rate;
        double poly = 0.0;
        for (auto it = state->series.coeffs.rbegin(); it != state->series.coeffs.rend(); ++it)
            poly = poly * t + *it;
        double const exponent = -2.0 * (a * t * t + b * t) + power * std::log(t);
        return 2.0 * std::exp(exponent) * poly * poly;
    }
};

} // namespace

double evaluate_unnormalized(BoundState const& state, double r)
{
    if (!(r > 0.0))
        throw domain_error("evaluate_unnormalized requires r > 0, got " + std::to_string(r));
    return evaluate_at_sqrt_r(state, std::sqrt(r));
}

RadialWavefunction normalize(BoundState const& state, NormalizationConfig const& config)
{
    double const a = state.factors.gauss_rate;
    if (!(a > 0.0))
        throw domain_error("normalize requires a bound state with positive decay rate");

    double const k = state.factors.indicial_exponent;
    int const dim = state.channel.dim;
    NormIntegrand f{&state, 2.0 * k + 2.0 * dim - 1.0};
    // r^(k+D-1) must be integrable at 0; unreachable for plus-branch exponents
    if (!(f.power > -1.0))
        throw domain_error("norm integral diverges at the origin for exponent k = "
                           + std::to_string(k));

    // Peak of the integrand envelope: 4At^2 + 2Bt - m = 0.
    double const b = state.factors.linear_rate;
    double const m = f.power + 2.0 * state.series.degree;
    double const t_peak = (-b + std::sqrt(b * b + 4.0 * a * m)) / (4.0 * a);

    double peak = 0.0;
    for (int i = 0; i <= 32; ++i) {
        double const t = t_peak * (0.25 + i * (4.0 - 0.25) / 32.0);
        peak = std::max(peak, std::abs(f(t)));
    }

    double t_max = t_peak + std::sqrt(std::abs(std::log(config.tail_epsilon)) / (2.0 * a));
    for (int it = 0; it < 400 && std::abs(f(t_max)) > config.tail_epsilon * peak; ++it)
        t_max *= 1.25;

    auto const quad = integrate_adaptive(f, 0.0, t_max, config.rel_tol, 0.0,
                                         config.max_subdivisions);

    if (!(quad.value > 0.0))
        throw accuracy_error(quad.error_estimate, "norm integral is not positive");

    RadialWavefunction wf;
    wf.state = state;
    wf.norm_constant = 1.0 / std::sqrt(quad.value);

    int const npts = std::max(config.grid_points, 2);
    double const r_min = config.inner_factor / a;
    double const r_max = t_max * t_max;
    double const ratio = std::log(r_max / r_min) / (npts - 1);
    wf.grid.resize(npts);
    wf.values.resize(npts);
    for (int i = 0; i < npts; ++i) {
        double const r = r_min * std::exp(ratio * i);
        wf.grid[i] = r;
        wf.values[i] = wf.norm_constant * evaluate_at_sqrt_r(state, std::sqrt(r));
    }
    return wf;
}

int count_radial_nodes(RadialWavefunction const& wf)
{
    double scale = 0.0;
    for (double v : wf.values)
        scale = std::max(scale, std::abs(v));
    double const floor = 1e-12 * scale;

    int nodes = 0;
    double prev = 0.0;
    for (double v : wf.values) {
        if (std::abs(v) <= floor)
            continue;
        if (prev != 0.0 && (v > 0.0) != (prev > 0.0))
            ++nodes;
        prev = v;
    }
    return nodes;
}

} // namespace sqrtpot
