// Command-line front end: spectra, wavefunction export, validation against
// closed forms and the shooting solver, and parameter sweeps. All machine
// output is deterministic: fixed row order and 17-significant-digit floats.

#include "sqrtpot/ansatz.hpp"
#include "sqrtpot/closed_forms.hpp"
#include "sqrtpot/oracle.hpp"
#include "sqrtpot/wavefunction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace sqrtpot;

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_domain = 3;
constexpr int exit_accuracy = 4;

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int fail(std::string const& kind, std::string const& message, int code, json extra = {})
{
    json record;
    record["error"] = kind;
    record["message"] = message;
    for (auto& [key, value] : extra.items())
        record[key] = value;
    std::cerr << record.dump() << "\n";
    return code;
}

// "0,2,5" or "0..3" or a mix of comma-separated tokens; sorted unique.
std::vector<int> parse_int_list(std::string const& spec)
{
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        auto const dots = token.find("..");
        if (dots != std::string::npos) {
            int const lo = std::stoi(token.substr(0, dots));
            int const hi = std::stoi(token.substr(dots + 2));
            if (hi < lo)
                throw domain_error("empty range '" + token + "'");
            for (int v = lo; v <= hi; ++v)
                out.push_back(v);
        } else {
            out.push_back(std::stoi(token));
        }
    }
    if (out.empty())
        throw domain_error("empty integer list '" + spec + "'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> parse_double_list(std::string const& spec)
{
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty())
            out.push_back(std::stod(token));
    if (out.empty())
        throw domain_error("empty value list '" + spec + "'");
    return out;
}

struct Options {
    PotentialParams params;
    std::string dim_spec = "3";
    std::string ell_spec = "0";
    std::string n_spec = "0";
    std::string format = "csv";
    std::string out_path;
    bool oracle = false;
    double tol = -1.0; // negative: use per-comparison defaults
    int points = 2000;
    std::vector<std::string> sweeps;
    long cap = 100000;
    long chunk = -1;
    long chunk_size = -1;
    double perturb_a3 = 0.0;
};

void add_common_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--a0", o.params.a0, "constant offset term");
    cmd->add_option("--a1", o.params.a1, "coefficient of 1/sqrt(r)");
    cmd->add_option("--a2", o.params.a2, "coefficient of 1/r");
    cmd->add_option("--a3", o.params.a3, "coefficient of 1/r^(3/2)");
    cmd->add_option("--a4", o.params.a4, "coefficient of 1/r^2");
    cmd->add_option("--mass", o.params.mass, "particle mass (hbar = 1)");
    cmd->add_option("--dim", o.dim_spec, "spatial dimensions, e.g. 3 or 3,4,5 or 2..6");
    cmd->add_option("--ell", o.ell_spec, "orbital quantum numbers, e.g. 0..2");
    cmd->add_option("--n", o.n_spec, "series termination indices, e.g. 0,2,4");
    cmd->add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "output path (default: stdout)");
    cmd->add_flag("--oracle", o.oracle, "cross-check energies with the shooting solver");
    cmd->add_option("--tol", o.tol, "comparison tolerance override for validate");
    cmd->add_option("--points", o.points, "wavefunction grid size");
    cmd->add_option("--sweep", o.sweeps,
                    "swept parameter values, e.g. a4=0,0.5,1 (repeatable)");
    cmd->add_option("--cap", o.cap, "maximum number of sweep rows");
    cmd->add_option("--chunk", o.chunk, "emit only this chunk index (with --chunk-size)");
    cmd->add_option("--chunk-size", o.chunk_size, "rows per chunk");
    cmd->add_option("--perturb-a3", o.perturb_a3,
                    "offset added to the terminating a3 in the validation suite");
}

// Flat key=value config: '#' comments, keys matching the long option names.
// Values from the file are appended as defaults; explicit flags win.
std::vector<std::string> apply_config_file(std::vector<std::string> args)
{
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        return args;

    std::ifstream in(path);
    if (!in)
        throw domain_error("cannot read config file '" + path + "'");

    std::set<std::string> given;
    for (auto const& a : args)
        if (a.rfind("--", 0) == 0)
            given.insert(a.substr(0, a.find('=')));

    std::string line;
    while (std::getline(in, line)) {
        auto const hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto const eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto const a = s.find_first_not_of(" \t\r");
            auto const b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config")
            continue;
        std::string const flag = "--" + key;
        if (given.count(flag))
            continue; // command line overrides the file
        if (key == "oracle") {
            if (value == "true" || value == "1" || value == "yes")
                args.push_back(flag);
        } else {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

class OutputSink {
  public:
    explicit OutputSink(std::string const& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw domain_error("cannot open output path '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_rows(std::ostream& os, std::vector<json> const& rows, std::string const& format)
{
    if (format == "json") {
        json arr = json::array();
        for (auto const& r : rows)
            arr.push_back(r);
        os << arr.dump(2) << "\n";
        return;
    }
    if (rows.empty())
        return;
    bool first = true;
    for (auto const& [key, value] : rows.front().items()) {
        (void)value;
        os << (first ? "" : ",") << key;
        first = false;
    }
    os << "\n";
    for (auto const& row : rows) {
        first = true;
        for (auto const& [key, value] : row.items()) {
            (void)key;
            os << (first ? "" : ",");
            first = false;
            if (value.is_null())
                ;
            else if (value.is_boolean())
                os << (value.get<bool>() ? "true" : "false");
            else if (value.is_number_integer())
                os << value.get<long long>();
            else if (value.is_number_float())
                os << fmt17(value.get<double>());
            else
                os << value.get<std::string>();
        }
        os << "\n";
    }
}

json spectrum_row(PotentialParams const& params, Channel const& ch)
{
    json row;
    row["D"] = ch.dim;
    row["ell"] = ch.ell;
    row["n"] = ch.n;

    auto const state = solve_bound_state(params, ch);
    if (state) {
        row["energy"] = state->energy;
        row["A"] = state->factors.gauss_rate;
        row["B"] = state->factors.linear_rate;
        row["k_plus"] = state->factors.indicial_exponent;
        row["termination_residual_1"] = state->series.termination_residual_1;
        row["bound"] = true;
    } else {
        row["energy"] = nullptr;
        row["A"] = nullptr;
        row["B"] = nullptr;
        row["k_plus"] = derived_constants(params, ch).k_plus;
        row["termination_residual_1"] = nullptr;
        row["bound"] = false;
    }
    return row;
}

int cmd_spectrum(Options const& o)
{
    auto const dims = parse_int_list(o.dim_spec);
    auto const ells = parse_int_list(o.ell_spec);
    auto const ns = parse_int_list(o.n_spec);

    std::vector<json> rows;
    for (int dim : dims)
        for (int ell : ells)
            for (int n : ns)
                rows.push_back(spectrum_row(o.params, Channel{dim, ell, n}));

    OutputSink sink(o.out_path);
    write_rows(sink.stream(), rows, o.format);
    return exit_ok;
}

int cmd_wavefn(Options const& o)
{
    auto const dims = parse_int_list(o.dim_spec);
    auto const ells = parse_int_list(o.ell_spec);
    auto const ns = parse_int_list(o.n_spec);
    if (dims.size() != 1 || ells.size() != 1 || ns.size() != 1)
        throw domain_error("wavefn needs a single (dim, ell, n) combination");

    Channel const ch{dims[0], ells[0], ns[0]};
    auto const state = solve_bound_state(o.params, ch);
    if (!state)
        return fail("unbound", "no bound state at this channel: the quantization cubic has "
                               "no positive root",
                    exit_domain);

    NormalizationConfig config;
    config.grid_points = o.points;
    auto const wf = normalize(*state, config);
    int const nodes = count_radial_nodes(wf);

    OutputSink sink(o.out_path);
    auto& os = sink.stream();
    auto meta = [&os](std::string const& key, std::string const& value) {
        os << "# " << key << " " << value << "\n";
    };
    meta("dim", std::to_string(ch.dim));
    meta("ell", std::to_string(ch.ell));
    meta("n", std::to_string(ch.n));
    meta("mass", fmt17(o.params.mass));
    meta("a0", fmt17(o.params.a0));
    meta("a1", fmt17(o.params.a1));
    meta("a2", fmt17(o.params.a2));
    meta("a3", fmt17(o.params.a3));
    meta("a4", fmt17(o.params.a4));
    meta("energy", fmt17(state->energy));
    meta("A", fmt17(state->factors.gauss_rate));
    meta("B", fmt17(state->factors.linear_rate));
    meta("k_plus", fmt17(state->factors.indicial_exponent));
    meta("norm_constant", fmt17(wf.norm_constant));
    meta("nodes", std::to_string(nodes));
    meta("termination_residual_1", fmt17(state->series.termination_residual_1));
    meta("termination_residual_2", fmt17(state->series.termination_residual_2));
    // a truncated series with nonzero residual solves the radial equation
    // only approximately; exported anyway, but labeled
    meta("terminating",
         std::abs(state->series.termination_residual_1) < 1e-8 ? "true" : "false");
    for (std::size_t i = 0; i < wf.grid.size(); ++i)
        os << fmt17(wf.grid[i]) << " " << fmt17(wf.values[i]) << "\n";
    return exit_ok;
}

struct ValidationCase {
    std::string name;
    PotentialParams params;
    Channel channel;
    double closed_energy = 0.0;
};

std::vector<ValidationCase> validation_suite(double perturb_a3)
{
    std::vector<ValidationCase> cases;

    for (int ell = 0; ell <= 1; ++ell)
        for (int n_r = 0; n_r <= 1; ++n_r) {
            PotentialParams coulomb;
            coulomb.a2 = -1.0;
            cases.push_back({"coulomb", coulomb, Channel{3, ell, 2 * n_r},
                             energy_coulomb(1.0, -1.0, 3, ell, n_r)});

            PotentialParams mie;
            mie.a2 = -1.0;
            mie.a4 = 1.0;
            cases.push_back({"mie", mie, Channel{3, ell, 2 * n_r},
                             energy_mie(1.0, 0.0, -1.0, 1.0, 3, ell, n_r)});
        }

    for (int n = 0; n <= 1; ++n) {
        PotentialParams frac;
        frac.a1 = -1.0;
        Channel const ch{3, 0, n};
        auto const roots = solve_quantization_cubic(frac, ch);
        frac.a3 = termination_constrained_a3(frac, ch, roots.front()) + perturb_a3;
        cases.push_back({"fractional", frac, ch, energy_fractional_pair(1.0, -1.0, 3, 0, n)});
    }
    return cases;
}

int cmd_validate(Options const& o)
{
    double const tol_closed = o.tol >= 0.0 ? o.tol : 1e-10;
    double const tol_oracle = o.tol >= 0.0 ? o.tol : 1e-5;
    double const tol_terminating = 1e-8;

    bool all_pass = true;
    std::vector<json> rows;
    for (auto const& vc : validation_suite(o.perturb_a3)) {
        auto const state = solve_bound_state(vc.params, vc.channel);
        json row;
        row["case"] = vc.name;
        row["D"] = vc.channel.dim;
        row["ell"] = vc.channel.ell;
        row["n"] = vc.channel.n;
        row["a3"] = vc.params.a3;
        if (!state) {
            row["pass"] = false;
            all_pass = false;
            rows.push_back(row);
            continue;
        }

        double const delta_closed =
            std::abs(state->energy - vc.closed_energy) / std::abs(vc.closed_energy);
        row["energy_ansatz"] = state->energy;
        row["energy_closed"] = vc.closed_energy;
        row["delta_closed_rel"] = delta_closed;

        bool pass = delta_closed < tol_closed;

        if (o.oracle) {
            int const target = count_radial_nodes(normalize(*state));
            auto const oracle = solve_oracle(vc.params, vc.channel, target);
            double const delta_oracle =
                std::abs(oracle.energy - state->energy) / std::abs(state->energy);
            row["energy_oracle"] = oracle.energy;
            row["delta_oracle_rel"] = delta_oracle;
            pass = pass && delta_oracle < tol_oracle;
        } else {
            row["energy_oracle"] = nullptr;
            row["delta_oracle_rel"] = nullptr;
        }

        // the closed forms assume an exactly terminating series; a residual
        // above threshold means the potential was not the advertised one
        double const tr1 = state->series.termination_residual_1;
        double const tr2 = state->series.termination_residual_2;
        bool const terminating = std::abs(tr1) < tol_terminating;
        row["termination_residual_1"] = tr1;
        row["termination_residual_2"] = tr2;
        row["terminating"] = terminating;
        pass = pass && terminating;

        row["pass"] = pass;
        all_pass = all_pass && pass;
        rows.push_back(row);
    }

    OutputSink sink(o.out_path);
    write_rows(sink.stream(), rows, o.format);
    return all_pass ? exit_ok : exit_validation;
}

int cmd_sweep(Options const& o)
{
    auto const dims = parse_int_list(o.dim_spec);
    auto const ells = parse_int_list(o.ell_spec);
    auto const ns = parse_int_list(o.n_spec);

    std::vector<std::pair<std::string, std::vector<double>>> axes;
    for (auto const& spec : o.sweeps) {
        auto const eq = spec.find('=');
        if (eq == std::string::npos)
            throw domain_error("sweep spec must look like name=v1,v2,... got '" + spec + "'");
        std::string const name = spec.substr(0, eq);
        static std::set<std::string> const allowed{"a0", "a1", "a2", "a3", "a4", "mass"};
        if (!allowed.count(name))
            throw domain_error("unknown sweep parameter '" + name + "'");
        axes.emplace_back(name, parse_double_list(spec.substr(eq + 1)));
    }
    if (axes.empty())
        throw domain_error("sweep requires at least one --sweep axis");

    long total = static_cast<long>(dims.size()) * ells.size() * ns.size();
    for (auto const& [name, values] : axes)
        total *= static_cast<long>(values.size());
    if (total > o.cap) {
        return fail("domain",
                    "sweep would produce " + std::to_string(total)
                        + " rows, above the cap of " + std::to_string(o.cap),
                    exit_domain, json{{"required_cap", total}});
    }

    long row_lo = 0, row_hi = total;
    if (o.chunk >= 0) {
        if (o.chunk_size <= 0)
            throw domain_error("--chunk requires a positive --chunk-size");
        row_lo = o.chunk * o.chunk_size;
        row_hi = std::min(total, row_lo + o.chunk_size);
    }

    std::vector<std::size_t> idx(axes.size(), 0);
    std::vector<json> rows;
    long row_index = 0;
    bool done = false;
    while (!done) {
        PotentialParams params = o.params;
        json swept;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            double const v = axes[a].second[idx[a]];
            auto const& name = axes[a].first;
            if (name == "a0")
                params.a0 = v;
            else if (name == "a1")
                params.a1 = v;
            else if (name == "a2")
                params.a2 = v;
            else if (name == "a3")
                params.a3 = v;
            else if (name == "a4")
                params.a4 = v;
            else
                params.mass = v;
            swept[name] = v;
        }

        for (int dim : dims)
            for (int ell : ells)
                for (int n : ns) {
                    if (row_index >= row_lo && row_index < row_hi) {
                        json row = swept;
                        json const spectrum = spectrum_row(params, Channel{dim, ell, n});
                        for (auto const& [key, value] : spectrum.items())
                            row[key] = value;
                        rows.push_back(std::move(row));
                    }
                    ++row_index;
                }

        // advance the cartesian product, last axis fastest
        done = true;
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].second.size()) {
                done = false;
                break;
            }
            idx[a] = 0;
        }
    }

    OutputSink sink(o.out_path);
    write_rows(sink.stream(), rows, o.format);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bound states of V(r) = a0 + a1/sqrt(r) + a2/r + a3/r^(3/2) + a4/r^2 "
                 "in D spatial dimensions"};
    app.require_subcommand(1);

    Options o;
    std::string config_path;

    auto* spectrum = app.add_subcommand("spectrum", "energy table over (D, ell, n)");
    auto* wavefn = app.add_subcommand("wavefn", "normalized radial wavefunction on a grid");
    auto* validate = app.add_subcommand("validate",
                                        "compare series energies with closed forms and "
                                        "optionally the shooting solver");
    auto* sweep = app.add_subcommand("sweep", "spectrum table over a parameter grid");
    for (auto* cmd : {spectrum, wavefn, validate, sweep}) {
        add_common_options(cmd, o);
        cmd->add_option("--config", config_path, "flat key=value config file");
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config_file(std::move(args));
        std::vector<char*> cargs;
        cargs.push_back(argv[0]);
        for (auto& a : args)
            cargs.push_back(a.data());
        try {
            app.parse(static_cast<int>(cargs.size()), cargs.data());
        } catch (CLI::ParseError const& e) {
            if (e.get_exit_code() == 0)
                return app.exit(e);
            return fail("usage", e.what(), exit_domain);
        }

        if (spectrum->parsed())
            return cmd_spectrum(o);
        if (wavefn->parsed())
            return cmd_wavefn(o);
        if (validate->parsed())
            return cmd_validate(o);
        return cmd_sweep(o);
    } catch (supercritical_error const& e) {
        return fail("supercritical", e.what(), exit_domain);
    } catch (domain_error const& e) {
        return fail("domain", e.what(), exit_domain);
    } catch (accuracy_error const& e) {
        return fail("accuracy", e.what(), exit_accuracy);
    } catch (bracket_error const& e) {
        return fail("accuracy", e.what(), exit_accuracy);
    } catch (std::exception const& e) {
        return fail("internal", e.what(), exit_accuracy);
    }
}
