#include "sqrtpot/cubic.hpp"

#include "sqrtpot/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sqrtpot {

namespace {

double eval(double c3, double c2, double c1, double c0, double x)
{
    return ((c3 * x + c2) * x + c1) * x + c0;
}

double eval_deriv(double c3, double c2, double c1, double x)
{
    return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

double polish(double c3, double c2, double c1, double c0, double x)
{
    for (int it = 0; it < 8; ++it) {
        double const f = eval(c3, c2, c1, c0, x);
        double const df = eval_deriv(c3, c2, c1, x);
        if (df == 0.0)
            break;
        double const step = f / df;
        double const next = x - step;
        if (next == x)
            break;
        x = next;
    }
    return x;
}

std::vector<double> real_quadratic_roots(double a, double b, double c)
{
    if (a == 0.0) {
        if (b == 0.0)
            return {};
        return {-c / b};
    }
    double const disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        return {};
    // Citardauq form for the smaller-magnitude root to avoid cancellation.
    double const sq = std::sqrt(disc);
    double const q = -0.5 * (b + std::copysign(sq, b));
    double r1 = q / a;
    double r2 = (q != 0.0) ? c / q : -b / a - r1;
    if (r1 > r2)
        std::swap(r1, r2);
    return {r1, r2};
}

} // namespace

std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0)
{
    if (c3 == 0.0)
        throw domain_error("real_cubic_roots: leading coefficient is zero");

    std::vector<double> roots;

    if (c0 == 0.0) {
        // x * (c3 x^2 + c2 x + c1): keep the origin root exact.
        roots.push_back(0.0);
        if (c1 == 0.0) {
            roots.push_back(0.0);
            roots.push_back(-c2 / c3);
        } else {
            auto quad = real_quadratic_roots(c3, c2, c1);
            roots.insert(roots.end(), quad.begin(), quad.end());
        }
    } else {
        // Depressed form t^3 + p t + q with x = t - c2/(3 c3).
        double const shift = c2 / (3.0 * c3);
        double const b = c2 / c3;
        double const c = c1 / c3;
        double const d = c0 / c3;
        double const p = c - b * b / 3.0;
        double const q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0;

        double const disc = -4.0 * p * p * p - 27.0 * q * q;
        if (p == 0.0 && q == 0.0) {
            roots.assign(3, -shift);
        } else if (disc >= 0.0 && p < 0.0) {
            // Three real roots: trigonometric method.
            double const m = 2.0 * std::sqrt(-p / 3.0);
            double arg = 3.0 * q / (p * m);
            arg = std::clamp(arg, -1.0, 1.0);
            double const theta = std::acos(arg) / 3.0;
            constexpr double two_pi_3 = 2.0943951023931953;
            for (int k = 0; k < 3; ++k)
                roots.push_back(m * std::cos(theta - two_pi_3 * k) - shift);
        } else {
            // One real root: Cardano with stable sign handling.
            double const u = -q / 2.0;
            double const v = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
            double const s = std::cbrt(u + std::copysign(v, u));
            double t = 0.0;
            if (s != 0.0)
                t = s - p / (3.0 * s);
            else
                t = std::cbrt(-q);
            roots.push_back(t - shift);
        }

        for (double& r : roots)
            r = polish(c3, c2, c1, c0, r);
    }

    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace sqrtpot
