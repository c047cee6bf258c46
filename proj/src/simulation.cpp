#include "maxmin/simulation.hpp"

#include <cmath>

#include "maxmin/mechanisms.hpp"

namespace maxmin {

namespace {

MonteCarloEstimate summarize(const std::vector<double>& xs) {
    MonteCarloEstimate est;
    est.n = xs.size();
    double sum = 0.0;
    for (double x : xs) sum += x;
    est.mean = sum / xs.size();
    double ss = 0.0;
    for (double x : xs) ss += (x - est.mean) * (x - est.mean);
    const double var = xs.size() > 1 ? ss / (xs.size() - 1) : 0.0;
    est.std_error = std::sqrt(var / xs.size());
    return est;
}

}  // namespace

MonteCarloEstimate monte_carlo_profit(const Mechanism& m, const MixedDistribution& dist,
                                      std::size_t n, std::uint64_t rng_seed) {
    if (n < 1) throw std::invalid_argument("monte_carlo_profit requires n >= 1");
    const auto draws = sample(dist, n, rng_seed);
    std::vector<double> profits;
    profits.reserve(n);
    for (const ValueProfile& v : draws) profits.push_back(evaluate(m, v.v_b, v.v_s).t);
    return summarize(profits);
}

MonteCarloEstimate monte_carlo_profit(const Mechanism& m, const DiscreteDistribution& dist,
                                      std::size_t n, std::uint64_t rng_seed) {
    if (n < 1) throw std::invalid_argument("monte_carlo_profit requires n >= 1");
    const auto draws = sample(dist, n, rng_seed);
    std::vector<double> profits;
    profits.reserve(n);
    for (const ValueProfile& v : draws) profits.push_back(evaluate(m, v.v_b, v.v_s).t);
    return summarize(profits);
}

double expected_profit(const Mechanism& m, const MixedDistribution& dist, double tol) {
    return dist.expect([&](double vb, double vs) { return evaluate(m, vb, vs).t; }, tol);
}

double expected_profit(const Mechanism& m, const DiscreteDistribution& dist) {
    return expect(dist, [&](double vb, double vs) { return evaluate(m, vb, vs).t; });
}

WelfareBreakdown welfare_accounting(const MixedDistribution& dist, const Mechanism& m) {
    WelfareBreakdown w;
    w.intermediary = expected_profit(m, dist);
    w.buyer_surplus = dist.expect([&](double vb, double vs) {
        const MechanismOutcome o = evaluate(m, vb, vs);
        return vb * o.q - o.t_b;
    });
    w.seller_surplus = dist.expect([&](double vb, double vs) {
        const MechanismOutcome o = evaluate(m, vb, vs);
        return o.t_s - vs * o.q;
    });
    w.total_gain = w.buyer_surplus + w.seller_surplus;
    w.first_best = first_best_gain(dist);
    return w;
}

std::vector<std::pair<double, double>> info_design_sweep(const std::vector<double>& r_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) {
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("info_design_sweep requires r in (0,1)");
        const auto dist = build_symmetric_triangular(r);
        const auto w = welfare_accounting(dist, Mechanism{EfficientOnSupport{r}});
        out.emplace_back(r, w.total_gain);
    }
    return out;
}

}  // namespace maxmin
