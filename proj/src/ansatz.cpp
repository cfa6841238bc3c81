#include "sqrtpot/ansatz.hpp"

#include "sqrtpot/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace sqrtpot {

double RecurrenceCoefficients::alpha(int p) const
{
    return linear_rate * linear_rate - 8.0 * mass * a2
           - 4.0 * gauss_rate * (dim + indicial_exponent + p - 1.0);
}

double RecurrenceCoefficients::beta(int p) const
{
    return 8.0 * mass * a3 + linear_rate * (2.0 * dim + 2.0 * indicial_exponent + 2.0 * p - 3.0);
}

double RecurrenceCoefficients::gamma(int p) const
{
    double const kp = indicial_exponent + p;
    return kp * (kp + 2.0 * dim - 4.0) - centrifugal;
}

RecurrenceCoefficients recurrence_coefficients(PotentialParams const& params, Channel const& ch,
                                               AnsatzFactors const& factors)
{
    params.validate();
    ch.validate();
    RecurrenceCoefficients rc;
    rc.gauss_rate = factors.gauss_rate;
    rc.linear_rate = factors.linear_rate;
    rc.indicial_exponent = factors.indicial_exponent;
    rc.dim = ch.dim;
    rc.mass = params.mass;
    rc.a2 = params.a2;
    rc.a3 = params.a3;
    rc.centrifugal = centrifugal_strength(ch.dim, ch.ell, params.mass, params.a4);
    return rc;
}

std::vector<double> solve_quantization_cubic(PotentialParams const& params, Channel const& ch)
{
    auto const dc = derived_constants(params, ch);
    double const leading = ch.dim + dc.k_plus + ch.n - 1.0;
    if (!(leading > 0.0))
        throw domain_error("quantization cubic has non-positive leading coefficient "
                           + std::to_string(leading));

    double const m = params.mass;
    auto roots = real_cubic_roots(4.0 * leading, 8.0 * m * params.a2, 0.0,
                                  -4.0 * m * m * params.a1 * params.a1);

    std::vector<double> positive;
    for (double a : roots)
        if (a > 0.0)
            positive.push_back(a);
    std::sort(positive.begin(), positive.end(), std::greater<>());
    return positive;
}

AnsatzFactors ansatz_factors(PotentialParams const& params, Channel const& ch, double gauss_rate)
{
    if (!(gauss_rate > 0.0))
        throw domain_error("ansatz_factors requires gauss_rate > 0, got "
                           + std::to_string(gauss_rate));
    auto const dc = derived_constants(params, ch);
    AnsatzFactors f;
    f.gauss_rate = gauss_rate;
    f.linear_rate = 2.0 * params.mass * params.a1 / gauss_rate;
    f.indicial_exponent = dc.k_plus;
    return f;
}

namespace {

void require_nonresonant(RecurrenceCoefficients const& rc, int p_max)
{
    for (int p = 1; p <= p_max; ++p) {
        double const g = rc.gamma(p);
        double const scale =
            (std::abs(rc.indicial_exponent) + p + 2.0 * rc.dim) * (std::abs(rc.indicial_exponent) + p + 2.0 * rc.dim)
            + std::abs(rc.centrifugal);
        if (std::abs(g) <= 1e-12 * scale)
            throw resonant_recurrence_error(p, "recurrence denominator gamma(" + std::to_string(p)
                                                   + ") vanishes");
    }
}

} // namespace

SeriesSolution build_series(PotentialParams const& params, Channel const& ch,
                            AnsatzFactors const& factors)
{
    auto const rc = recurrence_coefficients(params, ch, factors);
    int const n = ch.n;
    require_nonresonant(rc, n + 2);

    SeriesSolution out;
    out.degree = n;
    out.coeffs.assign(n + 1, 0.0);
    out.coeffs[0] = 1.0;
    if (n >= 1)
        out.coeffs[1] = rc.beta(0) / rc.gamma(1);
    for (int p = 0; p + 2 <= n; ++p)
        out.coeffs[p + 2] =
            (rc.beta(p + 1) * out.coeffs[p + 1] - rc.alpha(p) * out.coeffs[p]) / rc.gamma(p + 2);

    if (n == 0) {
        out.termination_residual_1 = rc.beta(0) / rc.gamma(1);
    } else {
        out.termination_residual_1 =
            (rc.beta(n) * out.coeffs[n] - rc.alpha(n - 1) * out.coeffs[n - 1]) / rc.gamma(n + 1);
    }
    out.termination_residual_2 =
        (rc.beta(n + 1) * out.termination_residual_1 - rc.alpha(n) * out.coeffs[n])
        / rc.gamma(n + 2);
    return out;
}

namespace {

double bisect_to_root(std::function<double(double)> const& f, double lo, double hi, double flo)
{
    for (int it = 0; it < 200; ++it) {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        double const fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double termination_constrained_a3(PotentialParams const& params, Channel const& ch,
                                  double gauss_rate)
{
    auto const factors = ansatz_factors(params, ch, gauss_rate);
    double const m = params.mass;
    double const k = factors.indicial_exponent;
    double const b = factors.linear_rate;

    // n = 0: residual is beta(0)/gamma(1), affine in a3.
    if (ch.n == 0)
        return -b * (2.0 * k + 2.0 * ch.dim - 3.0) / (8.0 * m);

    auto residual = [&](double a3) {
        PotentialParams p = params;
        p.a3 = a3;
        return build_series(p, ch, factors).termination_residual_1;
    };

    // The residual is a polynomial of degree n+1 in a3: scan symmetric
    // windows of growing radius for sign changes, bisect each, keep the root
    // of smallest magnitude. Starting from small windows keeps root pairs
    // clustered near zero from being straddled by the sample grid.
    double const seed =
        std::max({1.0, std::abs(b) * (2.0 * k + 2.0 * ch.dim + 2.0 * ch.n) / (8.0 * m),
                  std::abs(params.a1), std::abs(params.a2), std::abs(params.a3)});
    constexpr int samples = 256;
    for (int level = -12; level < 26; ++level) {
        double const radius = seed * std::ldexp(1.0, level);
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        double prev_x = -radius;
        double prev_f = residual(prev_x);
        for (int i = 1; i <= samples; ++i) {
            double const x = -radius + 2.0 * radius * i / samples;
            double const fx = residual(x);
            if (prev_f == 0.0) {
                found = true;
                best = std::abs(prev_x) < std::abs(best) ? prev_x : best;
            } else if (fx != 0.0 && (fx > 0.0) != (prev_f > 0.0)) {
                double const root = bisect_to_root(residual, prev_x, x, prev_f);
                found = true;
                if (std::abs(root) < std::abs(best))
                    best = root;
            }
            prev_x = x;
            prev_f = fx;
        }
        if (prev_f == 0.0) {
            found = true;
            best = std::abs(prev_x) < std::abs(best) ? prev_x : best;
        }
        if (found)
            return best;
    }
    throw no_termination_error("no real a3 makes the series terminate at n = "
                               + std::to_string(ch.n));
}

std::optional<BoundState> solve_bound_state(PotentialParams const& params, Channel const& ch)
{
    auto const roots = solve_quantization_cubic(params, ch);
    if (roots.empty())
        return std::nullopt;

    double const a = roots.front(); // largest root: most deeply bound energy
    BoundState state;
    state.factors = ansatz_factors(params, ch, a);
    state.series = build_series(params, ch, state.factors);
    state.energy = params.a0 - a * a / (2.0 * params.mass);
    state.channel = ch;
    state.params = params;
    return state;
}

} // namespace sqrtpot
