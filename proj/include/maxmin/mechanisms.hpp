#pragma once

#include <cstdint>

#include "maxmin/rng.hpp"
#include "maxmin/types.hpp"

namespace maxmin {

// One realized run of a randomized auction protocol.  `price` is what the
// buyer pays the seller conditional on trade; fees go to the intermediary.
struct SpreadExecution {
    bool traded = false;
    double price = 0.0;
    double buyer_fee = 0.0;
    double seller_fee = 0.0;
};

// Random double auction closed forms (trade iff bid - ask > r):
//   q = (b-a-r)/(1-r), t_b = (b^2-(a+r)^2)/(2(1-r)), t_s = ((b-r)^2-a^2)/(2(1-r)).
// Satisfies t = r*q at every profile.
MechanismOutcome rda_outcome(double r, double bid, double ask);

// Logarithmic mechanism closed forms (trade iff r2*b - (1-r1)*a > r1*r2).
// Throws regime_error within kSeamEpsilon of the seam r1 + r2 = 1; use
// rda_outcome with r = r1 there.
MechanismOutcome log_outcome(double r1, double r2, double bid, double ask);

// Deterministic maxmin mechanisms; both require sqrt(m_s) + sqrt(1-m_b) < 1
// (regime_error otherwise: never trading is the deterministic maxmin there).
MechanismOutcome linear_det_outcome(double m_b, double m_s, double bid, double ask);
MechanismOutcome double_posted_outcome(double m_b, double m_s, double bid, double ask);

// Trades with probability one strictly inside bid - ask > r; payments are the
// envelope payments t_b = (ask+r)*q, t_s = (bid-r)*q.
MechanismOutcome efficient_on_support_outcome(double r, double bid, double ask);

// One-dimensional mechanism for m_b = 1 (buyer value common knowledge).
MechanismOutcome edge_buyer_one_outcome(double iota, double ask);

// Draws one spread realization for RDA or Logarithmic and settles the trade.
// Empirical means over draws converge to the closed-form (q, t_b, t_s), with
// buyer outlay = price + buyer_fee and seller receipt = price - seller_fee.
SpreadExecution simulate_spread_execution(const Mechanism& m, double bid, double ask,
                                          Rng& rng);
SpreadExecution simulate_spread_execution(const Mechanism& m, double bid, double ask,
                                          std::uint64_t rng_seed);

}  // namespace maxmin
