#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include "maxmin/calibration.hpp"
#include "maxmin/distributions.hpp"
#include "maxmin/mechanisms.hpp"
#include "maxmin/simulation.hpp"
#include "maxmin/verification.hpp"

namespace maxmin::cli {

namespace {

void append_double(std::string& out, double x) {
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
    const auto pad = [&](int d) { out.append(static_cast<std::size_t>(d) * indent, ' '); };
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                pad(depth + 1);
                out += ordered_json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            pad(depth);
            out += '}';
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                pad(depth + 1);
                dump_rec(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            pad(depth);
            out += ']';
            return;
        }
        case nlohmann::detail::value_t::number_float:
            append_double(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

bool has(double x) { return !std::isnan(x); }

std::string csv_cell(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Expectations expectations_from(const RunConfig& c) {
    if (!has(c.mb) || !has(c.ms))
        throw std::invalid_argument("this command requires --mb and --ms");
    return Expectations{c.mb, c.ms};
}

// Mechanism from the override name (using given parameters, solving for
// missing ones when expectations are available) or from the regime.
Mechanism mechanism_from_config(const RunConfig& c) {
    auto solved_r = [&]() {
        if (has(c.r)) return c.r;
        return solve_r_symmetric(expectations_from(c));
    };
    if (c.mechanism.empty()) {
        const Expectations e = expectations_from(c);
        switch (classify(e)) {
            case Regime::Trivial: return Mechanism{NeverTrade{}};
            case Regime::Symmetric: return Mechanism{Rda{solve_r_symmetric(e)}};
            case Regime::Asymmetric: {
                const auto th = solve_asymmetric_thresholds(e);
                return Mechanism{Logarithmic{th.r1, th.r2}};
            }
            case Regime::EdgeBuyerOne: return Mechanism{EdgeBuyerOne{solve_iota(e.m_s)}};
        }
    }
    if (c.mechanism == "rda") return Mechanism{Rda{solved_r()}};
    if (c.mechanism == "logarithmic") {
        if (has(c.r1) && has(c.r2)) return Mechanism{Logarithmic{c.r1, c.r2}};
        const auto th = solve_asymmetric_thresholds(expectations_from(c));
        return Mechanism{Logarithmic{th.r1, th.r2}};
    }
    if (c.mechanism == "linear-det") {
        const Expectations e = expectations_from(c);
        return Mechanism{LinearDet{e.m_b, e.m_s}};
    }
    if (c.mechanism == "double-posted") {
        const Expectations e = expectations_from(c);
        return Mechanism{DoublePostedPrice{e.m_b, e.m_s}};
    }
    if (c.mechanism == "efficient-on-support") return Mechanism{EfficientOnSupport{solved_r()}};
    if (c.mechanism == "edge-buyer-one") {
        if (has(c.iota)) return Mechanism{EdgeBuyerOne{c.iota}};
        return Mechanism{EdgeBuyerOne{solve_iota(expectations_from(c).m_s)}};
    }
    if (c.mechanism == "never-trade") return Mechanism{NeverTrade{}};
    throw std::invalid_argument("unknown mechanism: " + c.mechanism);
}

ordered_json mechanism_params(const Mechanism& m) {
    ordered_json p;
    p["mechanism"] = mechanism_name(m);
    if (const auto* x = std::get_if<Rda>(&m)) p["r"] = x->r;
    if (const auto* x = std::get_if<Logarithmic>(&m)) {
        p["r1"] = x->r1;
        p["r2"] = x->r2;
    }
    if (const auto* x = std::get_if<LinearDet>(&m)) {
        p["m_b"] = x->m_b;
        p["m_s"] = x->m_s;
    }
    if (const auto* x = std::get_if<DoublePostedPrice>(&m)) {
        p["m_b"] = x->m_b;
        p["m_s"] = x->m_s;
    }
    if (const auto* x = std::get_if<EfficientOnSupport>(&m)) p["r"] = x->r;
    if (const auto* x = std::get_if<EdgeBuyerOne>(&m)) p["iota"] = x->iota;
    return p;
}

// Worst-case distribution paired with a mechanism family.
struct PairedDistribution {
    std::optional<MixedDistribution> mixed;
    std::optional<DiscreteDistribution> discrete;
};

PairedDistribution paired_distribution(const Mechanism& m, const RunConfig& c) {
    PairedDistribution out;
    if (const auto* x = std::get_if<Rda>(&m))
        out.mixed = build_symmetric_triangular(x->r);
    else if (const auto* x = std::get_if<Logarithmic>(&m))
        out.mixed = build_asymmetric_triangular(x->r1, x->r2);
    else if (const auto* x = std::get_if<LinearDet>(&m))
        out.discrete = build_det_worst_case(x->m_b, x->m_s);
    else if (const auto* x = std::get_if<DoublePostedPrice>(&m))
        out.discrete = build_det_worst_case(x->m_b, x->m_s);
    else if (const auto* x = std::get_if<EfficientOnSupport>(&m))
        out.mixed = build_symmetric_triangular(x->r);
    else if (const auto* x = std::get_if<EdgeBuyerOne>(&m))
        out.mixed = build_edge_worst_case(x->iota);
    else if (std::holds_alternative<NeverTrade>(m) && has(c.mb) && has(c.ms))
        out.discrete = DiscreteDistribution{{{c.mb, c.ms}}, {1.0}};
    return out;
}

// Distribution requested directly by parameters (for the distribution
// subcommands): --r, --r1/--r2, --iota, or --mb/--ms through the regime.
PairedDistribution distribution_from_config(const RunConfig& c) {
    PairedDistribution out;
    if (has(c.r)) {
        out.mixed = build_symmetric_triangular(c.r);
        return out;
    }
    if (has(c.r1) && has(c.r2)) {
        out.mixed = build_asymmetric_triangular(c.r1, c.r2);
        return out;
    }
    if (has(c.iota)) {
        out.mixed = build_edge_worst_case(c.iota);
        return out;
    }
    const Expectations e = expectations_from(c);
    switch (classify(e)) {
        case Regime::Trivial:
            out.discrete = DiscreteDistribution{{{e.m_b, e.m_s}}, {1.0}};
            return out;
        case Regime::Symmetric:
            out.mixed = build_symmetric_triangular(solve_r_symmetric(e));
            return out;
        case Regime::Asymmetric: {
            const auto th = solve_asymmetric_thresholds(e);
            out.mixed = build_asymmetric_triangular(th.r1, th.r2);
            return out;
        }
        case Regime::EdgeBuyerOne:
            out.mixed = build_edge_worst_case(solve_iota(e.m_s));
            return out;
    }
    throw std::invalid_argument("no distribution parameters given");
}

ordered_json check_to_json(const VerificationReport& r) {
    ordered_json j;
    j["name"] = r.check_name;
    j["passed"] = r.passed;
    j["worst_violation"] = r.worst_violation;
    ordered_json w;
    w["v_b"] = r.witness.v_b;
    w["v_s"] = r.witness.v_s;
    if (!std::isnan(r.witness_deviation)) w["deviation"] = r.witness_deviation;
    j["witness"] = w;
    j["tolerance"] = r.tolerance;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

ordered_json config_echo(const RunConfig& c) {
    ordered_json p;
    if (has(c.mb)) p["mb"] = c.mb;
    if (has(c.ms)) p["ms"] = c.ms;
    if (has(c.r)) p["r"] = c.r;
    if (has(c.r1)) p["r1"] = c.r1;
    if (has(c.r2)) p["r2"] = c.r2;
    if (has(c.iota)) p["iota"] = c.iota;
    if (has(c.bid)) p["bid"] = c.bid;
    if (has(c.ask)) p["ask"] = c.ask;
    if (!c.mechanism.empty()) p["mechanism"] = c.mechanism;
    p["grid"] = c.grid_n;
    p["n"] = c.sample_n;
    p["tol"] = c.tol;
    return p;
}

ordered_json make_meta(const RunConfig& c) {
    ordered_json meta;
    meta["version"] = kVersion;
    meta["seed"] = c.seed;
    return meta;
}

std::string finish_json(ordered_json& j, const RunConfig& c) {
    j["meta"] = make_meta(c);
    return dump_report(j) + "\n";
}

// --- subcommand handlers -------------------------------------------------

RunOutput do_calibrate(const RunConfig& c) {
    const Expectations e = expectations_from(c);
    ordered_json j;
    j["command"] = "calibrate";
    j["params"] = config_echo(c);
    ordered_json res;
    const Regime regime = classify(e);
    res["regime"] = regime_name(regime);
    switch (regime) {
        case Regime::Trivial:
            res["mechanism"] = "never-trade";
            res["guarantee"] = 0.0;
            break;
        case Regime::Symmetric: {
            const double r = solve_r_symmetric(e);
            res["r"] = r;
            res["guarantee"] = r * r;
            break;
        }
        case Regime::Asymmetric: {
            const auto th = solve_asymmetric_thresholds(e);
            res["r1"] = th.r1;
            res["r2"] = th.r2;
            res["residual_b"] = th.residual_b;
            res["residual_s"] = th.residual_s;
            res["outer_bracket"] = ordered_json::array({th.outer_bracket_lo, th.outer_bracket_hi});
            res["guarantee"] = th.r1 * (1.0 - th.r2);
            break;
        }
        case Regime::EdgeBuyerOne:
            res["iota"] = solve_iota(e.m_s);
            break;
    }
    j["results"] = res;
    return {0, finish_json(j, c), {}};
}

RunOutput do_mechanism_eval(const RunConfig& c) {
    const Mechanism m = mechanism_from_config(c);
    if (has(c.bid) && has(c.ask)) {
        const MechanismOutcome o = evaluate(m, c.bid, c.ask);
        ordered_json j;
        j["command"] = "mechanism-eval";
        j["params"] = config_echo(c);
        j["params"].update(mechanism_params(m));
        ordered_json res;
        res["q"] = o.q;
        res["t_b"] = o.t_b;
        res["t_s"] = o.t_s;
        res["t"] = o.t;
        j["results"] = res;
        return {0, finish_json(j, c), {}};
    }
    // lattice dump
    std::string body = "bid,ask,q,t_b,t_s,t\n";
    const int n = c.grid_n;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double b = static_cast<double>(i) / (n - 1);
            const double a = static_cast<double>(k) / (n - 1);
            const MechanismOutcome o = evaluate(m, b, a);
            body += csv_cell(b) + "," + csv_cell(a) + "," + csv_cell(o.q) + "," +
                    csv_cell(o.t_b) + "," + csv_cell(o.t_s) + "," + csv_cell(o.t) + "\n";
        }
    }
    return {0, body, {}};
}

RunOutput do_distribution_moments(const RunConfig& c) {
    const PairedDistribution d = distribution_from_config(c);
    ordered_json j;
    j["command"] = "distribution-moments";
    j["params"] = config_echo(c);
    ordered_json res;
    if (d.mixed) {
        auto [eb, es] = moments(*d.mixed);
        res["m_b"] = eb;
        res["m_s"] = es;
        res["total_mass"] = total_mass(*d.mixed);
        res["first_best_gain"] = first_best_gain(*d.mixed);
        ordered_json atoms = ordered_json::array();
        for (const Atom& a : d.mixed->atoms()) {
            ordered_json aj;
            aj["v_b"] = a.point.v_b;
            aj["v_s"] = a.point.v_s;
            aj["mass"] = a.mass;
            atoms.push_back(aj);
        }
        res["atoms"] = atoms;
    } else {
        auto [eb, es] = moments(*d.discrete);
        res["m_b"] = eb;
        res["m_s"] = es;
        res["total_mass"] = total_mass(*d.discrete);
        res["first_best_gain"] = first_best_gain(*d.discrete);
    }
    j["results"] = res;
    return {0, finish_json(j, c), {}};
}

RunOutput do_distribution_sample(const RunConfig& c) {
    const PairedDistribution d = distribution_from_config(c);
    const std::size_t n = static_cast<std::size_t>(c.sample_n);
    const auto draws = d.mixed ? sample(*d.mixed, n, c.seed) : sample(*d.discrete, n, c.seed);
    std::string body = "v_b,v_s\n";
    for (const ValueProfile& v : draws)
        body += csv_cell(v.v_b) + "," + csv_cell(v.v_s) + "\n";
    return {0, body, {}};
}

RunOutput do_verify(const RunConfig& c) {
    const Mechanism m = mechanism_from_config(c);
    const PairedDistribution d = paired_distribution(m, c);
    const std::string& which = c.verify_which;
    auto want = [&](const char* name) { return which == "all" || which == name; };

    std::vector<VerificationReport> checks;
    if (want("dsic")) checks.push_back(check_dsic(m, c.grid_n, c.tol));
    if (want("epir")) checks.push_back(check_epir(m, c.grid_n, c.tol));
    if (want("envelope")) checks.push_back(reconstruct_payments(m, std::min(c.grid_n, 51)));
    if (want("zwvv") && d.mixed && d.mixed->kind() != MixedKind::EdgeBuyerOne)
        checks.push_back(check_zwvv(*d.mixed, 10000, 1e-6));
    if (want("duality")) {
        const bool has_certificate =
            std::holds_alternative<Rda>(m) || std::holds_alternative<Logarithmic>(m) ||
            std::holds_alternative<LinearDet>(m) || std::holds_alternative<DoublePostedPrice>(m);
        if (has_certificate) {
            const DualCertificate cert = dual_certificate(m);
            if (d.mixed)
                checks.push_back(check_duality(m, cert, *d.mixed, c.grid_n, 1e-12));
            else if (d.discrete)
                checks.push_back(check_duality(m, cert, *d.discrete, c.grid_n, 1e-12));
        }
    }
    if (checks.empty())
        throw std::invalid_argument("no applicable checks for '" + which + "'");

    ordered_json j;
    j["command"] = "verify";
    j["params"] = config_echo(c);
    j["params"].update(mechanism_params(m));
    ordered_json arr = ordered_json::array();
    bool all_passed = true;
    for (const auto& r : checks) {
        arr.push_back(check_to_json(r));
        all_passed = all_passed && r.passed;
    }
    ordered_json res;
    res["all_passed"] = all_passed;
    j["results"] = res;
    j["checks"] = arr;
    return {all_passed ? 0 : 2, finish_json(j, c), {}};
}

RunOutput do_adversary(const RunConfig& c) {
    const Expectations e = expectations_from(c);
    const Mechanism m = mechanism_from_config(c);
    const PairedDistribution d = paired_distribution(m, c);
    std::vector<ValueProfile> grid = uniform_lattice(std::min(c.grid_n, 61));
    if (d.mixed) {
        const auto aug = support_boundary_points(*d.mixed, std::min(c.grid_n, 61));
        grid.insert(grid.end(), aug.begin(), aug.end());
    } else if (d.discrete) {
        grid.insert(grid.end(), d.discrete->points.begin(), d.discrete->points.end());
    }
    auto [worst, value] = lp_adversary(m, e, grid);

    ordered_json j;
    j["command"] = "adversary";
    j["params"] = config_echo(c);
    j["params"].update(mechanism_params(m));
    ordered_json res;
    res["value"] = value;
    ordered_json support = ordered_json::array();
    for (std::size_t i = 0; i < worst.points.size(); ++i) {
        ordered_json p;
        p["v_b"] = worst.points[i].v_b;
        p["v_s"] = worst.points[i].v_s;
        p["mass"] = worst.masses[i];
        support.push_back(p);
    }
    res["support"] = support;
    try {
        const double g = analytic_guarantee(m);
        res["analytic_guarantee"] = g;
        res["gap"] = std::fabs(value - g);
    } catch (const std::invalid_argument&) {
    }
    j["results"] = res;
    return {0, finish_json(j, c), {}};
}

RunOutput do_simulate(const RunConfig& c) {
    const Mechanism m = mechanism_from_config(c);
    const PairedDistribution d = paired_distribution(m, c);
    if (!d.mixed && !d.discrete)
        throw std::invalid_argument("simulate needs a distribution (give --mb/--ms)");
    const std::size_t n = static_cast<std::size_t>(c.sample_n);
    const MonteCarloEstimate est = d.mixed ? monte_carlo_profit(m, *d.mixed, n, c.seed)
                                           : monte_carlo_profit(m, *d.discrete, n, c.seed);
    const double quad =
        d.mixed ? expected_profit(m, *d.mixed) : expected_profit(m, *d.discrete);

    ordered_json j;
    j["command"] = "simulate";
    j["params"] = config_echo(c);
    j["params"].update(mechanism_params(m));
    ordered_json res;
    res["mean"] = est.mean;
    res["std_error"] = est.std_error;
    res["n"] = static_cast<long long>(est.n);
    res["quadrature"] = quad;
    res["abs_gap"] = std::fabs(est.mean - quad);
    res["within_3_std_errors"] = std::fabs(est.mean - quad) <= 3.0 * est.std_error;
    j["results"] = res;
    return {0, finish_json(j, c), {}};
}

RunOutput do_infodesign_sweep(const RunConfig& c) {
    const int n = static_cast<int>(c.sample_n < 100 ? c.sample_n : 9);
    std::vector<double> grid;
    for (int i = 1; i <= n; ++i) grid.push_back(static_cast<double>(i) / (n + 1));
    const auto rows = info_design_sweep(grid);
    ordered_json j;
    j["command"] = "infodesign-sweep";
    j["params"] = config_echo(c);
    ordered_json arr = ordered_json::array();
    double best_r = 0.0, best_gain = -1.0;
    for (const auto& [r, gain] : rows) {
        ordered_json row;
        row["r"] = r;
        row["total_gain"] = gain;
        arr.push_back(row);
        if (gain > best_gain) {
            best_gain = gain;
            best_r = r;
        }
    }
    ordered_json res;
    res["sweep"] = arr;
    res["argmax_r"] = best_r;
    res["max_total_gain"] = best_gain;
    j["results"] = res;
    return {0, finish_json(j, c), {}};
}

}  // namespace

std::string dump_report(const ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

RunOutput execute(const RunConfig& config) {
    try {
        if (config.grid_n < 2) throw std::invalid_argument("--grid must be >= 2");
        if (config.sample_n < 1) throw std::invalid_argument("--n must be >= 1");
        if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
        if (config.command == "calibrate") return do_calibrate(config);
        if (config.command == "mechanism-eval") return do_mechanism_eval(config);
        if (config.command == "distribution-moments") return do_distribution_moments(config);
        if (config.command == "distribution-sample") return do_distribution_sample(config);
        if (config.command == "verify") return do_verify(config);
        if (config.command == "adversary") return do_adversary(config);
        if (config.command == "simulate") return do_simulate(config);
        if (config.command == "infodesign-sweep") return do_infodesign_sweep(config);
        throw std::invalid_argument("unknown command: " + config.command);
    } catch (const convergence_error& e) {
        return {3, {}, std::string("{\"error\":\"") + e.what() + "\",\"code\":3}"};
    } catch (const numeric_error& e) {
        return {3, {}, std::string("{\"error\":\"") + e.what() + "\",\"code\":3}"};
    } catch (const std::exception& e) {
        return {1, {}, std::string("{\"error\":\"") + e.what() + "\",\"code\":1}"};
    }
}

int run(const RunConfig& config) {
    const RunOutput out = execute(config);
    if (!out.error_line.empty()) std::cerr << out.error_line << "\n";
    if (!out.body.empty()) {
        if (config.out_path.empty()) {
            std::cout << out.body;
        } else {
            std::ofstream f(config.out_path, std::ios::binary);
            if (!f) {
                std::cerr << "{\"error\":\"cannot open output path\",\"code\":1}\n";
                return 1;
            }
            f << out.body;
        }
    }
    return out.exit_code;
}

int main_entry(int argc, const char* const* argv) {
    CLI::App app{"maxmin bilateral-trade mechanisms: calibrate, verify, simulate"};
    app.set_config("--config", "", "plain-text key=value config file; flags override");
    RunConfig c;

    app.add_option("--mb", c.mb, "expected buyer value in [0,1]");
    app.add_option("--ms", c.ms, "expected seller value in [0,1]");
    app.add_option("--r", c.r, "commission fee (rda / efficient-on-support)");
    app.add_option("--r1", c.r1, "logarithmic threshold r1");
    app.add_option("--r2", c.r2, "logarithmic threshold r2");
    app.add_option("--iota", c.iota, "edge-buyer-one parameter");
    app.add_option("--bid", c.bid, "bid for point evaluation");
    app.add_option("--ask", c.ask, "ask for point evaluation");
    app.add_option("--mechanism", c.mechanism,
                   "override: rda|logarithmic|linear-det|double-posted|"
                   "efficient-on-support|edge-buyer-one|never-trade");
    app.add_option("--grid", c.grid_n, "lattice points per axis");
    app.add_option("--n", c.sample_n, "sample size / sweep length");
    auto* seed_opt = app.add_option("--seed", c.seed, "rng master seed");
    app.add_option("--tol", c.tol, "dsic/epir tolerance");
    app.add_option("--out", c.out_path, "write the report here instead of stdout");
    app.add_option("--format", c.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv", ""}));

    auto* cal = app.add_subcommand("calibrate", "map (mb, ms) to mechanism parameters");
    auto* mech = app.add_subcommand("mechanism", "mechanism operations");
    auto* mech_eval = mech->add_subcommand("eval", "evaluate outcomes (point or lattice CSV)");
    auto* dist = app.add_subcommand("distribution", "worst-case distribution operations");
    auto* dist_moments = dist->add_subcommand("moments", "moments, mass, first-best gain");
    auto* dist_sample = dist->add_subcommand("sample", "draw i.i.d. profiles (CSV)");
    auto* verify = app.add_subcommand("verify", "run numeric certification checks");
    std::string which = "all";
    verify->add_option("which", which, "dsic|epir|envelope|zwvv|duality|all")
        ->check(CLI::IsMember({"dsic", "epir", "envelope", "zwvv", "duality", "all"}));
    auto* adv = app.add_subcommand("adversary", "LP worst-case search on an augmented lattice");
    auto* sim = app.add_subcommand("simulate", "monte carlo profit vs quadrature");
    auto* info = app.add_subcommand("infodesign", "information design");
    auto* info_sweep = info->add_subcommand("sweep", "total gain across r grid");
    app.require_subcommand(0, 1);
    for (CLI::App* s : {cal, mech, mech_eval, dist, dist_moments, dist_sample, verify,
                        adv, sim, info, info_sweep})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("MAXMIN_TRADE_SEED")) c.seed = std::strtoull(env, nullptr, 10);
    }

    if (cal->parsed()) c.command = "calibrate";
    else if (mech->parsed() && mech_eval->parsed()) c.command = "mechanism-eval";
    else if (dist->parsed() && dist_moments->parsed()) c.command = "distribution-moments";
    else if (dist->parsed() && dist_sample->parsed()) c.command = "distribution-sample";
    else if (verify->parsed()) { c.command = "verify"; c.verify_which = which; }
    else if (adv->parsed()) c.command = "adversary";
    else if (sim->parsed()) c.command = "simulate";
    else if (info->parsed() && info_sweep->parsed()) c.command = "infodesign-sweep";
    else {
        std::cerr << "{\"error\":\"no subcommand given; see --help\",\"code\":1}\n";
        return 1;
    }
    return run(c);
}

}  // namespace maxmin::cli
