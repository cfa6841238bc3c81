#include "sqrtpot/oracle.hpp"

#include "sqrtpot/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sqrtpot {

double lambda_eff(Channel const& ch)
{
    ch.validate();
    return ch.ell * (ch.ell + ch.dim - 2.0) + (ch.dim - 1.0) * (ch.dim - 3.0) / 4.0;
}

double CanonicalRadialEquation::q(double r, double energy) const
{
    double const x = std::sqrt(r);
    double const v = params.a0 + params.a1 / x + params.a2 / r + params.a3 / (r * x)
                     + params.a4 / (r * r);
    return lambda / (r * r) + 2.0 * params.mass * (v - energy);
}

double CanonicalRadialEquation::origin_exponent() const
{
    double const disc_over_4 = 0.25 + lambda + 2.0 * params.mass * params.a4;
    return 0.5 + std::sqrt(std::max(0.0, disc_over_4));
}

CanonicalRadialEquation reduce_to_canonical(PotentialParams const& params, Channel const& ch)
{
    derived_constants(params, ch); // validates inputs, rejects supercritical a4
    return CanonicalRadialEquation{ch, params, lambda_eff(ch)};
}

namespace {

// Two-sided RK4 shooter for u'' = q(r) u on a fixed geometric grid.
class Shooter {
  public:
    Shooter(CanonicalRadialEquation eq, std::vector<double> grid)
        : eq_(std::move(eq))
        , grid_(std::move(grid))
    {
    }

    std::vector<double> const& grid() const { return grid_; }

    int match_index(double energy) const
    {
        int const n = static_cast<int>(grid_.size());
        for (int i = n - 2; i >= 1; --i)
            if (eq_.q(grid_[i], energy) < 0.0)
                return i;
        int best = 1;
        for (int i = 2; i <= n - 2; ++i)
            if (eq_.q(grid_[i], energy) < eq_.q(grid_[best], energy))
                best = i;
        return best;
    }

    struct OutwardResult {
        int nodes_full = 0;   // sign changes over the whole grid
        double u_match = 0.0; // state at the matching index
        double v_match = 0.0;
    };

    // Outward integration over the full grid. When store is non-null the pass
    // stops at i_match and records u on [0, i_match].
    OutwardResult outward(double energy, int i_match, std::vector<double>* store) const
    {
        int const n = static_cast<int>(grid_.size());
        double u = 0.0, v = 0.0;
        startup(energy, u, v);

        if (store) {
            store->assign(n, 0.0);
            (*store)[0] = u;
        }

        OutwardResult out;
        if (i_match == 0) {
            out.u_match = u;
            out.v_match = v;
        }
        double prev_sign = u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
        int const last = store ? i_match : n - 1;
        for (int i = 0; i < last; ++i) {
            rk4_step(grid_[i], grid_[i + 1], energy, u, v);
            if (u != 0.0) {
                double const sign = u > 0.0 ? 1.0 : -1.0;
                if (prev_sign != 0.0 && sign != prev_sign)
                    ++out.nodes_full;
                prev_sign = sign;
            }
            if (store)
                (*store)[i + 1] = u;
            if (i + 1 == i_match) {
                out.u_match = u;
                out.v_match = v;
            }
            rescale(u, v, store, i + 1);
        }
        return out;
    }

    struct InwardResult {
        double u_match = 0.0;
        double v_match = 0.0;
    };

    // Inward integration from r_max down to i_match; requires a classically
    // forbidden outer edge. Records u on [i_match, n-1] when store is non-null.
    InwardResult inward(double energy, int i_match, std::vector<double>* store) const
    {
        int const n = static_cast<int>(grid_.size());
        double const q_end = eq_.q(grid_[n - 1], energy);
        if (!(q_end > 0.0))
            throw bracket_error("outer grid edge is not classically forbidden; "
                                "increase r_max or lower the energy bracket");

        double u = 1.0;
        double v = -std::sqrt(q_end);
        if (store) {
            store->assign(n, 0.0);
            (*store)[n - 1] = u;
        }
        for (int i = n - 1; i > i_match; --i) {
            rk4_step(grid_[i], grid_[i - 1], energy, u, v);
            if (store)
                (*store)[i - 1] = u;
            rescale_inward(u, v, store, i - 1);
        }
        return InwardResult{u, v};
    }

    // Sign-stable mismatch for bisection: u_out' u_in - u_in' u_out, scaled.
    double mismatch(double energy, int* nodes = nullptr) const
    {
        int const i_match = match_index(energy);
        auto const out = outward(energy, i_match, nullptr);
        auto const in = inward(energy, i_match, nullptr);
        if (nodes)
            *nodes = out.nodes_full;
        double const num = out.v_match * in.u_match - in.v_match * out.u_match;
        double const den = std::abs(out.u_match * in.u_match);
        if (den == 0.0)
            return num > 0.0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
        return num / den;
    }

    int count_nodes(double energy) const
    {
        auto const out = outward(energy, 0, nullptr);
        return out.nodes_full;
    }

    // Raw log-derivative difference at the matching point.
    double log_derivative_defect(double energy) const
    {
        int const i_match = match_index(energy);
        auto const out = outward(energy, i_match, nullptr);
        auto const in = inward(energy, i_match, nullptr);
        return out.v_match / out.u_match - in.v_match / in.u_match;
    }

  private:
    void startup(double energy, double& u, double& v) const
    {
        double const m = eq_.params.mass;
        double const s = eq_.origin_exponent();
        double const w3 = 2.0 * m * eq_.params.a3;
        double const w2 = 2.0 * m * eq_.params.a2;
        double const w1 = 2.0 * m * eq_.params.a1;
        double const w0 = 2.0 * m * (eq_.params.a0 - energy);

        // u = r^s sum_j d_j r^(j/2); the irregular branch is excluded by
        // construction, which keeps the start-up clean at tiny r_min.
        double d[7];
        d[0] = 1.0;
        for (int j = 1; j <= 6; ++j) {
            double num = w3 * d[j - 1];
            if (j >= 2)
                num += w2 * d[j - 2];
            if (j >= 3)
                num += w1 * d[j - 3];
            if (j >= 4)
                num += w0 * d[j - 4];
            d[j] = num / (j * (s + 0.25 * j - 0.5));
        }

        double const r0 = grid_[0];
        double const x = std::sqrt(r0);
        double u_acc = 0.0, v_acc = 0.0, xp = 1.0;
        for (int j = 0; j <= 6; ++j) {
            u_acc += d[j] * xp;
            v_acc += d[j] * (s + 0.5 * j) * xp;
            xp *= x;
        }
        // common factor r0^(s-1) dropped; only the direction matters
        u = r0 * u_acc;
        v = v_acc;
    }

    void rk4_step(double r0, double r1, double energy, double& u, double& v) const
    {
        double const h = r1 - r0;
        double const q0 = eq_.q(r0, energy);
        double const qm = eq_.q(r0 + 0.5 * h, energy);
        double const q1 = eq_.q(r1, energy);

        double const k1u = v;
        double const k1v = q0 * u;
        double const k2u = v + 0.5 * h * k1v;
        double const k2v = qm * (u + 0.5 * h * k1u);
        double const k3u = v + 0.5 * h * k2v;
        double const k3v = qm * (u + 0.5 * h * k2u);
        double const k4u = v + h * k3v;
        double const k4v = q1 * (u + h * k3u);

        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }

    static void rescale(double& u, double& v, std::vector<double>* store, int upto)
    {
        double const mag = std::max(std::abs(u), std::abs(v));
        if (mag > 1e250) {
            double const f = 1.0 / mag;
            u *= f;
            v *= f;
            if (store)
                for (int j = 0; j <= upto; ++j)
                    (*store)[j] *= f;
        }
    }

    static void rescale_inward(double& u, double& v, std::vector<double>* store, int from)
    {
        double const mag = std::max(std::abs(u), std::abs(v));
        if (mag > 1e250) {
            double const f = 1.0 / mag;
            u *= f;
            v *= f;
            if (store) {
                int const n = static_cast<int>(store->size());
                for (int j = from; j < n; ++j)
                    (*store)[j] *= f;
            }
        }
    }

    CanonicalRadialEquation eq_;
    std::vector<double> grid_;
};

std::vector<double> geometric_grid(double r_min, double r_max, int num_points)
{
    std::vector<double> grid(num_points);
    double const step = std::log(r_max / r_min) / (num_points - 1);
    for (int i = 0; i < num_points; ++i)
        grid[i] = r_min * std::exp(step * i);
    grid.front() = r_min;
    grid.back() = r_max;
    return grid;
}

void validate_grid_config(OracleConfig const& config)
{
    if (!(config.r_min > 0.0) || !(config.r_min < config.r_max))
        throw domain_error("oracle grid requires 0 < r_min < r_max");
    if (config.num_points < 1000)
        throw domain_error("oracle grid requires at least 1000 points, got "
                           + std::to_string(config.num_points));
    if (!(config.tolerance > 0.0))
        throw domain_error("oracle tolerance must be positive");
}

int count_nodes_with_floor(std::vector<double> const& values)
{
    double scale = 0.0;
    for (double v : values)
        scale = std::max(scale, std::abs(v));
    double const floor = 1e-12 * scale;
    int nodes = 0;
    double prev = 0.0;
    for (double v : values) {
        if (std::abs(v) <= floor)
            continue;
        if (prev != 0.0 && (v > 0.0) != (prev > 0.0))
            ++nodes;
        prev = v;
    }
    return nodes;
}

double fallback_rate_estimate(PotentialParams const& params)
{
    double const m = params.mass;
    double est = std::cbrt(m * m * params.a1 * params.a1);
    est = std::max(est, m * std::abs(params.a2));
    est = std::max(est, std::pow(m * std::abs(params.a3), 2.0));
    est = std::max(est, std::sqrt(m * std::abs(params.a0)));
    return std::max(est, 0.25);
}

} // namespace

OracleConfig default_oracle_config(PotentialParams const& params, Channel const& ch,
                                   std::optional<double> gauss_rate_estimate)
{
    params.validate();
    ch.validate();

    double rate = 0.0;
    if (gauss_rate_estimate && *gauss_rate_estimate > 0.0) {
        rate = *gauss_rate_estimate;
    } else {
        try {
            auto const roots = solve_quantization_cubic(params, ch);
            if (!roots.empty())
                rate = roots.front();
        } catch (domain_error const&) {
        }
        if (rate <= 0.0)
            rate = fallback_rate_estimate(params);
    }

    OracleConfig config;
    config.r_min = 1e-8 / rate;
    config.r_max = 40.0 / rate;
    config.num_points = 6000;
    config.tolerance = 1e-10;
    return config;
}

std::pair<double, double> find_energy_bracket(PotentialParams const& params, Channel const& ch,
                                              int target_nodes, OracleConfig const& config)
{
    validate_grid_config(config);
    if (target_nodes < 0)
        throw domain_error("target_nodes must be >= 0");

    Shooter const shooter(reduce_to_canonical(params, ch),
                          geometric_grid(config.r_min, config.r_max, config.num_points));

    double const scale = std::max({std::abs(params.a0), 1.0 / (2.0 * params.mass * config.r_max
                                                               * config.r_max),
                                   1e-6});

    // Ceiling just below the asymptotic potential value.
    double hi = params.a0 - 1e-9 * scale;
    int count_hi = shooter.count_nodes(hi);
    if (count_hi <= target_nodes)
        throw bracket_error("no bound state with " + std::to_string(target_nodes)
                            + " nodes below the asymptotic potential value (found "
                            + std::to_string(count_hi) + " states)");

    double width = scale;
    double lo = params.a0 - width;
    for (int it = 0; shooter.count_nodes(lo) > target_nodes; ++it) {
        if (it > 200)
            throw bracket_error("energy scan failed to find a lower edge");
        width *= 4.0;
        lo = params.a0 - width;
    }

    // Narrow to the count transition target -> target+1.
    for (int it = 0; it < 80; ++it) {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (shooter.count_nodes(mid) >= target_nodes + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 0.05 * std::max(std::abs(params.a0 - lo), scale) && it >= 8)
            break;
    }
    return {lo, hi};
}

OracleResult shoot_eigenvalue(PotentialParams const& params, Channel const& ch,
                              OracleConfig const& config)
{
    validate_grid_config(config);
    if (!(config.energy_lo < config.energy_hi))
        throw domain_error("oracle energy bracket requires energy_lo < energy_hi");
    if (!(config.energy_hi < params.a0))
        throw bracket_error("bound states require energies below the asymptotic potential "
                            "value a0");

    Shooter const shooter(reduce_to_canonical(params, ch),
                          geometric_grid(config.r_min, config.r_max, config.num_points));
    int const target = config.target_nodes;

    double lo = config.energy_lo;
    double hi = config.energy_hi;
    int const count_lo = shooter.count_nodes(lo);
    int const count_hi = shooter.count_nodes(hi);
    if (count_lo > target)
        throw bracket_error("lower bracket edge already has " + std::to_string(count_lo)
                            + " nodes, above the target " + std::to_string(target));
    if (count_hi <= target)
        throw bracket_error("bracket contains no eigenvalue with " + std::to_string(target)
                            + " nodes (upper edge count " + std::to_string(count_hi) + ")");

    int iterations = 0;

    // Phase 1: node-count bisection pins the target transition.
    for (int it = 0; it < 24 && hi - lo > 1024.0 * config.tolerance; ++it, ++iterations) {
        double const mid = 0.5 * (lo + hi);
        if (shooter.count_nodes(mid) >= target + 1)
            hi = mid;
        else
            lo = mid;
    }

    // Phase 2: bisection on the sign of the matching mismatch.
    double f_lo = shooter.mismatch(lo);
    double f_hi = shooter.mismatch(hi);
    bool const defect_brackets = (f_lo > 0.0) != (f_hi > 0.0);
    while (hi - lo > config.tolerance) {
        if (++iterations > config.max_iterations)
            throw accuracy_error(hi - lo, "oracle bisection did not reach tolerance "
                                              + std::to_string(config.tolerance)
                                              + "; achieved bracket width "
                                              + std::to_string(hi - lo));
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket at floating-point resolution
        if (defect_brackets) {
            double const f_mid = shooter.mismatch(mid);
            if ((f_mid > 0.0) == (f_lo > 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
                f_hi = f_mid;
            }
        } else {
            // Fallback: keep narrowing on the node count.
            if (shooter.count_nodes(mid) >= target + 1)
                hi = mid;
            else
                lo = mid;
        }
    }

    double const energy = 0.5 * (lo + hi);

    // Assemble the eigenfunction at the converged energy.
    int const i_match = shooter.match_index(energy);
    std::vector<double> u_out, u_in;
    auto const out = shooter.outward(energy, i_match, &u_out);
    auto const in = shooter.inward(energy, i_match, &u_in);

    OracleResult result;
    result.energy = energy;
    result.match_defect = out.v_match / out.u_match - in.v_match / in.u_match;
    result.grid = shooter.grid();

    int const n = static_cast<int>(result.grid.size());
    result.u.assign(n, 0.0);
    double const seam = in.u_match != 0.0 ? out.u_match / in.u_match : 0.0;
    for (int i = 0; i <= i_match; ++i)
        result.u[i] = u_out[i];
    for (int i = i_match + 1; i < n; ++i)
        result.u[i] = seam * u_in[i];

    result.nodes = count_nodes_with_floor(result.u);

    // L2-normalize on the grid and fix the sign near the origin.
    double norm2 = 0.0;
    for (int i = 0; i + 1 < n; ++i)
        norm2 += 0.5 * (result.u[i] * result.u[i] + result.u[i + 1] * result.u[i + 1])
                 * (result.grid[i + 1] - result.grid[i]);
    if (norm2 > 0.0) {
        double inv = 1.0 / std::sqrt(norm2);
        for (double v : result.u)
            if (std::abs(v) > 0.0) {
                if (v < 0.0)
                    inv = -inv;
                break;
            }
        for (double& v : result.u)
            v *= inv;
    }
    return result;
}

OracleResult solve_oracle(PotentialParams const& params, Channel const& ch, int target_nodes)
{
    std::optional<double> rate;
    try {
        auto const roots = solve_quantization_cubic(params, ch);
        if (!roots.empty())
            rate = roots.front();
    } catch (domain_error const&) {
    }

    OracleConfig config = default_oracle_config(params, ch, rate);
    auto const bracket = find_energy_bracket(params, ch, target_nodes, config);
    config.energy_lo = bracket.first;
    config.energy_hi = bracket.second;
    config.target_nodes = target_nodes;
    return shoot_eigenvalue(params, ch, config);
}

} // namespace sqrtpot
