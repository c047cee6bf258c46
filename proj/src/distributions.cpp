#include "maxmin/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxmin {

MixedDistribution MixedDistribution::symmetric_triangular(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("symmetric triangular requires 0 < r < 1");
    MixedDistribution d;
    d.kind_ = MixedKind::SymmetricTriangular;
    d.r1_ = r;
    d.r2_ = 1.0 - r;
    d.kappa_ = (1.0 - d.r1_) - d.r2_;  // exactly 0
    d.alpha_ = d.r1_ * (1.0 - d.r2_);  // = r^2
    d.atoms_ = {Atom{{1.0, 0.0}, d.alpha_}};
    return d;
}

MixedDistribution MixedDistribution::asymmetric_triangular(double r1, double r2) {
    if (!(r1 > 0.0 && r1 < 1.0 && r2 > 0.0 && r2 < 1.0))
        throw std::invalid_argument("asymmetric triangular requires r1, r2 in (0,1)");
    MixedDistribution d;
    d.kind_ = MixedKind::AsymmetricTriangular;
    d.r1_ = r1;
    d.r2_ = r2;
    d.kappa_ = (1.0 - r1) - r2;
    d.alpha_ = r1 * (1.0 - r2);
    d.atoms_ = {Atom{{1.0, 0.0}, d.alpha_}};
    return d;
}

MixedDistribution MixedDistribution::edge_buyer_one(double iota) {
    if (!(iota > 0.0 && iota < 1.0))
        throw std::invalid_argument("edge distribution requires iota in (0,1)");
    MixedDistribution d;
    d.kind_ = MixedKind::EdgeBuyerOne;
    d.iota_ = iota;
    d.atoms_ = {Atom{{1.0, 0.0}, iota}};
    return d;
}

double MixedDistribution::interior_density(double v_b, double v_s) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return 0.0;
    if (!(v_b < 1.0 && v_s > 0.0)) return 0.0;
    if (!in_support(v_b, v_s)) return 0.0;
    const double u = v_b - v_s;
    return 2.0 * alpha_ / (u * u * u);
}

double MixedDistribution::edge_b1_density(double v_s) const {
    if (kind_ == MixedKind::EdgeBuyerOne)
        return (v_s > 0.0 && v_s <= 1.0 - iota_) ? iota_ / ((1.0 - v_s) * (1.0 - v_s)) : 0.0;
    return (v_s > 0.0 && v_s < r2_) ? alpha_ / ((1.0 - v_s) * (1.0 - v_s)) : 0.0;
}

double MixedDistribution::edge_s0_density(double v_b) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return 0.0;
    return (v_b > r1_ && v_b < 1.0) ? alpha_ / (v_b * v_b) : 0.0;
}

bool MixedDistribution::in_support(double v_b, double v_s) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return v_b == 1.0 && v_s >= 0.0 && v_s <= 1.0 - iota_;
    if (kind_ == MixedKind::SymmetricTriangular) return v_b - v_s >= r1_;
    return r2_ * v_b - (1.0 - r1_) * v_s >= r1_ * r2_;
}

double MixedDistribution::seller_atom_mass() const {
    if (kind_ == MixedKind::EdgeBuyerOne) return iota_;
    return 1.0 - r2_;
}

double MixedDistribution::seller_marginal_density(double v_s) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return edge_b1_density(v_s);
    if (!(v_s > 0.0 && v_s < r2_)) return 0.0;
    const double w = w_scale(v_s);
    return alpha_ / (w * w);
}

double MixedDistribution::buyer_atom_mass() const {
    if (kind_ == MixedKind::EdgeBuyerOne) return 1.0;
    return r1_;
}

double MixedDistribution::buyer_marginal_density(double v_b) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return 0.0;
    if (!(v_b > r1_ && v_b < 1.0)) return 0.0;
    const double b = b_scale(v_b);
    return alpha_ / (b * b);
}

double MixedDistribution::seller_cdf_given_buyer(double v_s, double v_b) const {
    if (kind_ == MixedKind::EdgeBuyerOne) {
        if (v_b != 1.0) throw std::domain_error("buyer value is fixed at 1");
        if (v_s < 0.0) return 0.0;
        return std::min(1.0, iota_ / std::max(iota_, 1.0 - v_s));
    }
    if (v_s < 0.0) return 0.0;
    if (v_b == 1.0) return std::min(1.0, (1.0 - r2_) / (1.0 - v_s));
    if (!(v_b > r1_ && v_b < 1.0))
        throw std::domain_error("conditional requires v_b in (r1, 1]");
    if (v_s >= v_b) return 1.0;
    const double b = b_scale(v_b);
    const double tail = b / (v_b - v_s);
    return std::min(1.0, tail * tail);
}

double MixedDistribution::buyer_cdf_given_seller(double v_b, double v_s) const {
    if (kind_ == MixedKind::EdgeBuyerOne) return v_b >= 1.0 ? 1.0 : 0.0;
    if (v_b >= 1.0) return 1.0;
    if (v_s == 0.0) {
        if (v_b <= r1_) return 0.0;
        return 1.0 - r1_ / v_b;
    }
    if (!(v_s > 0.0 && v_s < r2_))
        throw std::domain_error("conditional requires v_s in [0, r2)");
    const double w = w_scale(v_s);
    if (v_b <= v_s + w) return 0.0;
    const double tail = w / (v_b - v_s);
    return 1.0 - tail * tail;
}

std::pair<double, double> MixedDistribution::interior_strip(double u) const {
    double lo = 0.0;
    double hi = 1.0 - u;
    if (kappa_ > 0.0) {
        if (u <= 1.0 - r2_) hi = std::min(hi, r2_ * (u - r1_) / kappa_);
    } else if (kappa_ < 0.0) {
        if (u <= r1_) lo = r2_ * (u - r1_) / kappa_;
    }
    return {std::max(lo, 0.0), hi};
}

double MixedDistribution::interior_u_min() const { return std::min(r1_, 1.0 - r2_); }
double MixedDistribution::interior_u_mid() const { return std::max(r1_, 1.0 - r2_); }

MixedDistribution build_symmetric_triangular(double r) {
    return MixedDistribution::symmetric_triangular(r);
}

MixedDistribution build_asymmetric_triangular(double r1, double r2) {
    if (std::fabs(1.0 - r1 - r2) == 0.0)
        throw std::invalid_argument("asymmetric triangular requires r1 + r2 != 1");
    return MixedDistribution::asymmetric_triangular(r1, r2);
}

DiscreteDistribution build_det_worst_case(double m_b, double m_s) {
    const double ss = std::sqrt(m_s);
    const double sb = std::sqrt(1.0 - m_b);
    if (!(ss + sb < 1.0))
        throw regime_error("deterministic worst case requires sqrt(m_s)+sqrt(1-m_b) < 1");
    DiscreteDistribution d;
    d.points = {{1.0 - sb, 0.0}, {1.0, ss}, {1.0, 0.0}};
    d.masses = {sb, ss, 1.0 - sb - ss};
    return d;
}

MixedDistribution build_edge_worst_case(double iota) {
    return MixedDistribution::edge_buyer_one(iota);
}

double total_mass(const MixedDistribution& dist) {
    return dist.expect([](double, double) { return 1.0; });
}

double total_mass(const DiscreteDistribution& dist) {
    return std::accumulate(dist.masses.begin(), dist.masses.end(), 0.0);
}

std::pair<double, double> moments(const MixedDistribution& dist) {
    double err_b = 0.0, err_s = 0.0;
    const double eb = dist.expect([](double vb, double) { return vb; }, 1e-12, &err_b);
    const double es = dist.expect([](double, double vs) { return vs; }, 1e-12, &err_s);
    if (!(err_b <= 1e-8 && err_s <= 1e-8))
        throw numeric_error("moment quadrature error above 1e-8", eb);
    return {eb, es};
}

std::pair<double, double> moments(const DiscreteDistribution& dist) {
    return {expect(dist, [](double vb, double) { return vb; }),
            expect(dist, [](double, double vs) { return vs; })};
}

double first_best_gain(const MixedDistribution& dist) {
    return dist.expect(
        [](double vb, double vs) { return vb >= vs ? vb - vs : 0.0; });
}

double first_best_gain(const DiscreteDistribution& dist) {
    return expect(dist, [](double vb, double vs) { return vb >= vs ? vb - vs : 0.0; });
}

namespace {

// seller marginal inverse on the continuous part; c in [0, r2)
double seller_continuous_inverse(const MixedDistribution& d, double c) {
    const double r1 = d.r1(), r2 = d.r2();
    const double kappa = (1.0 - r1) - r2;
    return c * r1 * r2 / (r2 * (1.0 - r2) - c * kappa);
}

// buyer conditional inverse given v_s; u2 in [0,1)
double buyer_conditional_inverse(const MixedDistribution& d, double v_s, double u2) {
    if (v_s == 0.0) {
        const double r1 = d.r1();
        if (u2 < 1.0 - r1) return r1 / (1.0 - u2);
        return 1.0;
    }
    const double w = d.w_scale(v_s);
    const double one_minus = 1.0 - v_s;
    if (u2 < 1.0 - (w * w) / (one_minus * one_minus)) return v_s + w / std::sqrt(1.0 - u2);
    return 1.0;
}

}  // namespace

std::vector<ValueProfile> sample(const MixedDistribution& dist, std::size_t n,
                                 std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<ValueProfile> out;
    out.reserve(n);
    if (dist.kind() == MixedKind::EdgeBuyerOne) {
        const double iota = dist.iota();
        for (std::size_t i = 0; i < n; ++i) {
            const double u1 = rng.u01();
            const double vs = u1 < iota ? 0.0 : 1.0 - iota / u1;
            out.push_back({1.0, vs});
        }
        return out;
    }
    const double pr_s0 = dist.seller_atom_mass();
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = rng.u01();
        const double u2 = rng.u01();
        const double vs = u1 < pr_s0 ? 0.0 : seller_continuous_inverse(dist, u1 - pr_s0);
        const double vb = buyer_conditional_inverse(dist, vs, u2);
        out.push_back({vb, vs});
    }
    return out;
}

std::vector<ValueProfile> sample(const DiscreteDistribution& dist, std::size_t n,
                                 std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<double> cumulative(dist.masses.size());
    std::partial_sum(dist.masses.begin(), dist.masses.end(), cumulative.begin());
    std::vector<ValueProfile> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.u01() * cumulative.back();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t idx =
            std::min<std::size_t>(it - cumulative.begin(), dist.points.size() - 1);
        out.push_back(dist.points[idx]);
    }
    return out;
}

std::vector<double> sample_buyer_conditional(const MixedDistribution& dist, double v_s,
                                             std::size_t n, std::uint64_t rng_seed) {
    if (dist.kind() == MixedKind::EdgeBuyerOne)
        return std::vector<double>(n, 1.0);
    Rng rng(rng_seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(buyer_conditional_inverse(dist, v_s, rng.u01()));
    return out;
}

}  // namespace maxmin
