#include "maxmin/mechanisms.hpp"

#include <cmath>

#include "maxmin/calibration.hpp"

namespace maxmin {

namespace {

void require_unit(double bid, double ask) {
    if (!(bid >= 0.0 && bid <= 1.0 && ask >= 0.0 && ask <= 1.0))
        throw std::invalid_argument("bid and ask must lie in [0,1]");
}

void require_rda_param(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("rda requires 0 < r < 1");
}

void require_log_params(double r1, double r2) {
    if (!(r1 > 0.0 && r1 < 1.0 && r2 > 0.0 && r2 < 1.0))
        throw std::invalid_argument("logarithmic requires r1, r2 in (0,1)");
    if (std::fabs(1.0 - r1 - r2) <= kSeamEpsilon)
        throw regime_error("logarithmic parameters on the seam r1+r2=1: use rda with r=r1");
}

void require_det_regime(double m_b, double m_s) {
    if (!(m_b > 0.0 && m_b <= 1.0 && m_s >= 0.0 && m_s < 1.0) ||
        std::sqrt(m_s) + std::sqrt(1.0 - m_b) >= 1.0)
        throw regime_error(
            "deterministic guarantee is zero here: sqrt(m_s)+sqrt(1-m_b) >= 1, use never-trade");
}

}  // namespace

MechanismOutcome rda_outcome(double r, double bid, double ask) {
    require_rda_param(r);
    require_unit(bid, ask);
    if (!(bid - ask > r)) return MechanismOutcome{};
    const double q = (bid - ask - r) / (1.0 - r);
    const double t_b = (bid * bid - (ask + r) * (ask + r)) / (2.0 * (1.0 - r));
    const double t_s = ((bid - r) * (bid - r) - ask * ask) / (2.0 * (1.0 - r));
    return make_outcome(q, t_b, t_s);
}

MechanismOutcome log_outcome(double r1, double r2, double bid, double ask) {
    require_log_params(r1, r2);
    require_unit(bid, ask);
    if (!(r2 * bid - (1.0 - r1) * ask > r1 * r2)) return MechanismOutcome{};
    const double d = 1.0 - r1 - r2;
    const double big_l = std::log((1.0 - r2) / r1);
    const double lb = std::log(d / (1.0 - r1) * bid + r1 * r2 / (1.0 - r1));
    const double la = std::log(d / r2 * ask + r1);
    const double q = (lb - la) / big_l;
    const double common = -r1 * r2 / (d * big_l) * (lb - la);
    const double t_b = common + (bid - (1.0 - r1) / r2 * ask - r1) / big_l;
    const double t_s = common + (r2 / (1.0 - r1) * bid - ask - r1 * r2 / (1.0 - r1)) / big_l;
    return make_outcome(q, t_b, t_s);
}

MechanismOutcome linear_det_outcome(double m_b, double m_s, double bid, double ask) {
    require_det_regime(m_b, m_s);
    require_unit(bid, ask);
    const double ss = std::sqrt(m_s);
    const double sb = std::sqrt(1.0 - m_b);
    if (!(ss * bid - sb * ask > ss * (1.0 - sb))) return MechanismOutcome{};
    const double t_b = 1.0 - sb + (sb / ss) * ask;
    const double t_s = (ss / sb) * (bid - (1.0 - sb));
    return make_outcome(1.0, t_b, t_s);
}

MechanismOutcome double_posted_outcome(double m_b, double m_s, double bid, double ask) {
    require_det_regime(m_b, m_s);
    require_unit(bid, ask);
    const double ss = std::sqrt(m_s);
    const double sb = std::sqrt(1.0 - m_b);
    if (!(bid > 1.0 - sb && ask < ss)) return MechanismOutcome{};
    return make_outcome(1.0, 1.0 - sb, ss);
}

MechanismOutcome efficient_on_support_outcome(double r, double bid, double ask) {
    require_rda_param(r);
    require_unit(bid, ask);
    if (!(bid - ask > r)) return MechanismOutcome{};
    return make_outcome(1.0, ask + r, bid - r);
}

MechanismOutcome edge_buyer_one_outcome(double iota, double ask) {
    if (!(iota > 0.0 && iota < 1.0))
        throw std::invalid_argument("edge-buyer-one requires iota in (0,1)");
    if (!(ask >= 0.0 && ask <= 1.0))
        throw std::invalid_argument("ask must lie in [0,1]");
    if (!(ask < 1.0 - iota)) return MechanismOutcome{};
    const double log_iota = std::log(iota);
    const double q = 1.0 - std::log1p(-ask) / log_iota;
    const double t_s = 1.0 + (1.0 - iota - std::log1p(-ask) - ask) / log_iota;
    return make_outcome(q, q, t_s);
}

std::string mechanism_name(const Mechanism& m) {
    struct V {
        std::string operator()(const Rda&) const { return "rda"; }
        std::string operator()(const Logarithmic&) const { return "logarithmic"; }
        std::string operator()(const LinearDet&) const { return "linear-det"; }
        std::string operator()(const DoublePostedPrice&) const { return "double-posted"; }
        std::string operator()(const EfficientOnSupport&) const { return "efficient-on-support"; }
        std::string operator()(const EdgeBuyerOne&) const { return "edge-buyer-one"; }
        std::string operator()(const NeverTrade&) const { return "never-trade"; }
    };
    return std::visit(V{}, m);
}

void validate(const Mechanism& m) {
    // evaluating at an arbitrary in-range point runs every parameter check
    (void)evaluate(m, 0.0, 1.0);
}

MechanismOutcome evaluate(const Mechanism& m, double bid, double ask) {
    struct V {
        double bid, ask;
        MechanismOutcome operator()(const Rda& x) const { return rda_outcome(x.r, bid, ask); }
        MechanismOutcome operator()(const Logarithmic& x) const {
            return log_outcome(x.r1, x.r2, bid, ask);
        }
        MechanismOutcome operator()(const LinearDet& x) const {
            return linear_det_outcome(x.m_b, x.m_s, bid, ask);
        }
        MechanismOutcome operator()(const DoublePostedPrice& x) const {
            return double_posted_outcome(x.m_b, x.m_s, bid, ask);
        }
        MechanismOutcome operator()(const EfficientOnSupport& x) const {
            return efficient_on_support_outcome(x.r, bid, ask);
        }
        MechanismOutcome operator()(const EdgeBuyerOne& x) const {
            return edge_buyer_one_outcome(x.iota, ask);  // bid fixed at 1
        }
        MechanismOutcome operator()(const NeverTrade&) const { return MechanismOutcome{}; }
    };
    require_unit(bid, ask);
    return std::visit(V{bid, ask}, m);
}

SpreadExecution simulate_spread_execution(const Mechanism& m, double bid, double ask,
                                          Rng& rng) {
    require_unit(bid, ask);
    if (const auto* rda = std::get_if<Rda>(&m)) {
        const double r = rda->r;
        require_rda_param(r);
        const double spread = r + (1.0 - r) * rng.u01();
        if (!(bid - ask > spread)) return SpreadExecution{};
        return SpreadExecution{true, 0.5 * (bid + ask), 0.5 * r, 0.5 * r};
    }
    if (const auto* lg = std::get_if<Logarithmic>(&m)) {
        require_log_params(lg->r1, lg->r2);
        const double r1 = lg->r1, r2 = lg->r2;
        const double d = 1.0 - r1 - r2;
        const double big_l = std::log((1.0 - r2) / r1);
        const double b_t = std::log(d / (1.0 - r1) * bid + r1 * r2 / (1.0 - r1)) / big_l;
        const double a_t = std::log(d / r2 * ask + r1) / big_l;
        const double spread = rng.u01();
        if (!(b_t - a_t > spread)) return SpreadExecution{};
        // transaction price and commission from the transformed coordinates;
        // the buyer pays the whole commission
        const double pow_term = std::pow((1.0 - r2) / r1, a_t + spread);
        const double price = r2 / d * (pow_term - r1);
        return SpreadExecution{true, price, pow_term, 0.0};
    }
    throw std::invalid_argument("spread execution is defined for rda and logarithmic only");
}

SpreadExecution simulate_spread_execution(const Mechanism& m, double bid, double ask,
                                          std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return simulate_spread_execution(m, bid, ask, rng);
}

}  // namespace maxmin
