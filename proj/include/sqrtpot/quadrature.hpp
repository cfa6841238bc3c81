#pragma once

#include "sqrtpot/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace sqrtpot {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (symmetric half listed).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(F const& f, double a, double b, double& value, double& error)
{
    double const half = 0.5 * (b - a);
    double const mid = 0.5 * (a + b);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - half * kronrod_nodes[i]);
        fv[14 - i] = f(mid + half * kronrod_nodes[i]);
    }
    fv[7] = f(mid);

    double kron = 0.0;
    for (int i = 0; i < 7; ++i)
        kron += kronrod_weights[i] * (fv[i] + fv[14 - i]);
    kron += kronrod_weights[7] * fv[7];

    // Gauss points are the odd-index Kronrod nodes.
    double gauss = gauss_weights[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

    value = kron * half;
    error = std::abs((kron - gauss) * half);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Splits the worst
/// interval until the summed error estimate satisfies
///   err <= max(abs_tol, rel_tol * |integral|),
/// and throws accuracy_error (carrying the achieved estimate) when the
/// subdivision budget runs out first.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                                    double abs_tol = 0.0, int max_subdivisions = 2000)
{
    struct Interval {
        double a, b, value, error;
    };

    QuadratureResult result;
    double v0 = 0.0, e0 = 0.0;
    detail::gauss_kronrod_15(f, a, b, v0, e0);
    std::vector<Interval> intervals{{a, b, v0, e0}};

    for (int pass = 0; pass < max_subdivisions; ++pass) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            total += intervals[i].value;
            err += intervals[i].error;
            if (intervals[i].error > intervals[worst].error)
                worst = i;
        }
        result.value = total;
        result.error_estimate = err;
        result.subdivisions = static_cast<int>(intervals.size());
        if (err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            result.converged = true;
            return result;
        }

        Interval const piece = intervals[worst];
        double const mid = 0.5 * (piece.a + piece.b);
        if (mid <= piece.a || mid >= piece.b)
            break; // interval at floating-point resolution
        Interval left{piece.a, mid, 0.0, 0.0};
        Interval right{mid, piece.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
        intervals[worst] = left;
        intervals.push_back(right);
    }

    throw accuracy_error(result.error_estimate,
                         "adaptive quadrature did not converge: error estimate "
                             + std::to_string(result.error_estimate));
}

} // namespace sqrtpot
