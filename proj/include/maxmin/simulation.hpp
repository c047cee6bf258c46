#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxmin/distributions.hpp"
#include "maxmin/types.hpp"

namespace maxmin {

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

// Sample mean and standard error of the ex-post profit t(v) over n draws.
MonteCarloEstimate monte_carlo_profit(const Mechanism& m, const MixedDistribution& dist,
                                      std::size_t n, std::uint64_t rng_seed);
MonteCarloEstimate monte_carlo_profit(const Mechanism& m, const DiscreteDistribution& dist,
                                      std::size_t n, std::uint64_t rng_seed);

// Expected profit by quadrature (the saddle-point value when dist is the
// paired worst case).
double expected_profit(const Mechanism& m, const MixedDistribution& dist,
                       double tol = 1e-10);
double expected_profit(const Mechanism& m, const DiscreteDistribution& dist);

struct WelfareBreakdown {
    double intermediary = 0.0;
    double buyer_surplus = 0.0;
    double seller_surplus = 0.0;
    double total_gain = 0.0;  // buyer_surplus + seller_surplus
    double first_best = 0.0;  // E[(v_B - v_S)^+]
};

WelfareBreakdown welfare_accounting(const MixedDistribution& dist, const Mechanism& m);

// total_gain of the efficient-on-support mechanism under the symmetric
// triangular distribution, per grid point; the argmax over any grid
// containing 1/2 is 1/2.
std::vector<std::pair<double, double>> info_design_sweep(const std::vector<double>& r_grid);

}  // namespace maxmin
