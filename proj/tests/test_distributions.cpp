#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "maxmin/calibration.hpp"
#include "maxmin/distributions.hpp"
#include "oracles.hpp"

using namespace maxmin;

TEST_CASE("symmetric triangular components") {
    const auto d = build_symmetric_triangular(0.5);
    REQUIRE(d.atoms().size() == 1);
    CHECK(d.atoms()[0].mass == 0.5 * 0.5);  // Pr(1,0) = r^2, exact
    CHECK(d.atoms()[0].point == ValueProfile{1.0, 0.0});

    CHECK(d.interior_density(0.9, 0.1) == doctest::Approx(0.9765625).epsilon(1e-15));
    CHECK(d.interior_density(0.55, 0.1) == 0.0);  // below the support
    CHECK(d.interior_density(1.0, 0.1) == 0.0);   // edges carry their own density

    // seller marginal: uniform density 1 on (0, 1-r), atom r at 0
    CHECK(d.seller_marginal_density(0.3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.seller_atom_mass() == 0.5);
    CHECK(d.seller_marginal_density(0.7) == 0.0);

    // buyer marginal: uniform density 1 on (r, 1), atom r at 1
    CHECK(d.buyer_marginal_density(0.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.buyer_atom_mass() == 0.5);

    CHECK(d.edge_b1_density(0.3) == doctest::Approx(0.25 / 0.49).epsilon(1e-15));
    CHECK(d.edge_s0_density(0.8) == doctest::Approx(0.25 / 0.64).epsilon(1e-15));

    CHECK(d.in_support(0.9, 0.1));
    CHECK(d.in_support(0.6, 0.1));  // boundary included (closure)
    CHECK_FALSE(d.in_support(0.59, 0.1));
}

TEST_CASE("asymmetric triangular components") {
    const auto d = build_asymmetric_triangular(0.5, 0.3);
    CHECK(d.atoms()[0].mass == 0.5 * 0.7);  // r1*(1-r2), exact

    // seller marginal density at v_s in (0, r2)
    const double vs = 0.2;
    const double w = (1.0 - 0.5 - 0.3) / 0.3 * vs + 0.5;
    CHECK(d.seller_marginal_density(vs) == doctest::Approx(0.35 / (w * w)).epsilon(1e-15));
    CHECK(d.seller_atom_mass() == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(d.buyer_atom_mass() == doctest::Approx(0.5).epsilon(1e-15));

    CHECK(d.in_support(1.0, 0.3));
    CHECK(d.in_support(0.5, 0.0));
    CHECK_FALSE(d.in_support(0.5, 0.1));

    CHECK_THROWS_AS(build_asymmetric_triangular(0.6, 0.4), std::invalid_argument);
}

TEST_CASE("asymmetric densities converge to symmetric at the seam") {
    const auto sym = build_symmetric_triangular(0.5);
    const auto near = build_asymmetric_triangular(0.5, 0.5 - 1e-6);
    for (auto [vb, vs] : {std::pair{0.9, 0.1}, {0.8, 0.25}, {0.7, 0.05}}) {
        CHECK(near.interior_density(vb, vs) ==
              doctest::Approx(sym.interior_density(vb, vs)).epsilon(1e-4));
    }
    CHECK(near.edge_b1_density(0.2) == doctest::Approx(sym.edge_b1_density(0.2)).epsilon(1e-4));
    CHECK(near.edge_s0_density(0.8) == doctest::Approx(sym.edge_s0_density(0.8)).epsilon(1e-4));
    CHECK(near.atoms()[0].mass == doctest::Approx(sym.atoms()[0].mass).epsilon(1e-5));
}

TEST_CASE("deterministic worst case (Theorem 3 masses)") {
    const auto d = build_det_worst_case(0.875, 0.125);
    const double s = std::sqrt(0.125);
    REQUIRE(d.points.size() == 3);
    CHECK(d.points[0] == ValueProfile{1.0 - s, 0.0});
    CHECK(d.points[1] == ValueProfile{1.0, s});
    CHECK(d.points[2] == ValueProfile{1.0, 0.0});
    CHECK(d.masses[0] == doctest::Approx(0.3535533905932738).epsilon(1e-15));
    CHECK(d.masses[1] == doctest::Approx(0.3535533905932738).epsilon(1e-15));
    CHECK(d.masses[2] == doctest::Approx(0.2928932188134524).epsilon(1e-14));
    CHECK(total_mass(d) == doctest::Approx(1.0).epsilon(1e-15));

    auto [eb, es] = moments(d);
    CHECK(eb == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(es == doctest::Approx(0.125).epsilon(1e-15));

    CHECK_THROWS_AS(build_det_worst_case(0.5, 0.3), regime_error);
}

TEST_CASE("edge worst case") {
    const auto d = build_edge_worst_case(0.5);
    CHECK(d.seller_atom_mass() == 0.5);
    CHECK(d.edge_b1_density(0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(total_mass(d) == doctest::Approx(1.0).epsilon(1e-10));
    auto [eb, es] = moments(d);
    CHECK(eb == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es == doctest::Approx(0.5 * std::log(0.5) + 0.5).epsilon(1e-10));
}

TEST_CASE("normalization across the families") {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9})
        CHECK(total_mass(build_symmetric_triangular(r)) == doctest::Approx(1.0).epsilon(1e-8));
    for (auto [r1, r2] : {std::pair{0.5, 0.3}, {0.2, 0.6}, {0.7, 0.6}, {0.9, 0.2}})
        CHECK(total_mass(build_asymmetric_triangular(r1, r2)) ==
              doctest::Approx(1.0).epsilon(1e-8));
    for (double iota : {0.1, 0.5, 0.9})
        CHECK(total_mass(build_edge_worst_case(iota)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("moments by quadrature equal the calibration maps") {
    auto [eb, es] = moments(build_symmetric_triangular(0.5));
    CHECK(eb == doctest::Approx(0.875).epsilon(1e-8));
    CHECK(es == doctest::Approx(0.125).epsilon(1e-8));

    auto [ab, as] = moments(build_asymmetric_triangular(0.5, 0.3));
    auto [h1, h2] = eval_h1_h2(0.5, 0.3);
    CHECK(ab == doctest::Approx(h1).epsilon(1e-8));
    CHECK(as == doctest::Approx(h2).epsilon(1e-8));
}

TEST_CASE("moment consistency through the solvers") {
    {
        const Expectations e{0.875, 0.125};
        auto [eb, es] = moments(build_symmetric_triangular(solve_r_symmetric(e)));
        CHECK(eb == doctest::Approx(e.m_b).epsilon(1e-6));
        CHECK(es == doctest::Approx(e.m_s).epsilon(1e-6));
    }
    for (auto [mb, ms] : {std::pair{0.7, 0.2}, {0.5, 0.1}, {0.9, 0.4}}) {
        const auto th = solve_asymmetric_thresholds({mb, ms});
        auto [eb, es] = moments(build_asymmetric_triangular(th.r1, th.r2));
        CHECK(eb == doctest::Approx(mb).epsilon(1e-6));
        CHECK(es == doctest::Approx(ms).epsilon(1e-6));
    }
}

TEST_CASE("first-best gain") {
    CHECK(first_best_gain(build_symmetric_triangular(0.5)) == doctest::Approx(0.75).epsilon(1e-8));
    for (double r : {0.25, 0.6}) {
        // support lies above the diagonal, so this equals M_B - M_S = 2r - r^2
        CHECK(first_best_gain(build_symmetric_triangular(r)) ==
              doctest::Approx(2.0 * r - r * r).epsilon(1e-8));
    }
    const DiscreteDistribution point{{{0.5, 0.5}}, {1.0}};
    CHECK(first_best_gain(point) == 0.0);
    CHECK(first_best_gain(build_det_worst_case(0.875, 0.125)) ==
          doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("sampling the symmetric triangular distribution") {
    const auto d = build_symmetric_triangular(0.5);
    const std::size_t n = 1000000;
    const auto draws = sample(d, n, 20240801);

    double sum_b = 0.0, sum_s = 0.0;
    std::size_t atom_hits = 0, support_violations = 0;
    for (const ValueProfile& v : draws) {
        sum_b += v.v_b;
        sum_s += v.v_s;
        if (v.v_b == 1.0 && v.v_s == 0.0) ++atom_hits;
        if (v.v_b - v.v_s < 0.5) ++support_violations;
    }
    CHECK(std::fabs(sum_b / n - 0.875) < 0.001);
    CHECK(std::fabs(sum_s / n - 0.125) < 0.001);
    CHECK(support_violations == 0);
    CHECK(std::fabs(static_cast<double>(atom_hits) / n - 0.25) < 0.002);

    // identical seed reproduces the stream bit-exactly
    const auto again = sample(d, 100, 20240801);
    bool identical = true;
    for (std::size_t i = 0; i < again.size(); ++i)
        identical = identical && again[i] == draws[i];
    CHECK(identical);
}

TEST_CASE("sampler matches the conditional buyer CDF (KS)") {
    const auto d = build_symmetric_triangular(0.5);
    const double vs = 0.2;
    const std::size_t n = 100000;
    const auto draws = sample_buyer_conditional(d, vs, n, 99);

    const double atom = 0.25 / (0.8 * 0.8);  // W^2/(1-v_s)^2
    std::vector<double> continuous;
    for (double x : draws)
        if (x < 1.0) continuous.push_back(x);
    const double frac_atom =
        1.0 - static_cast<double>(continuous.size()) / static_cast<double>(n);
    CHECK(std::fabs(frac_atom - atom) < 0.01);

    auto cdf = [&](double x) { return d.buyer_cdf_given_seller(x, vs) / (1.0 - atom); };
    CHECK(oracle::ks_statistic(continuous, cdf) < 0.01);
}

TEST_CASE("sampling the asymmetric triangular distribution") {
    const auto d = build_asymmetric_triangular(0.5, 0.3);
    const std::size_t n = 400000;
    const auto draws = sample(d, n, 7);
    double sum_b = 0.0, sum_s = 0.0;
    std::size_t outside = 0;
    for (const ValueProfile& v : draws) {
        sum_b += v.v_b;
        sum_s += v.v_s;
        if (!d.in_support(v.v_b, v.v_s)) ++outside;
    }
    auto [h1, h2] = eval_h1_h2(0.5, 0.3);
    CHECK(std::fabs(sum_b / n - h1) < 0.002);
    CHECK(std::fabs(sum_s / n - h2) < 0.001);
    CHECK(outside == 0);
}

TEST_CASE("sampling the edge and discrete distributions") {
    const auto edge = build_edge_worst_case(0.5);
    const auto draws = sample(edge, 200000, 5);
    double sum_s = 0.0;
    bool buyer_pinned = true;
    for (const ValueProfile& v : draws) {
        buyer_pinned = buyer_pinned && v.v_b == 1.0;
        sum_s += v.v_s;
    }
    CHECK(buyer_pinned);
    CHECK(std::fabs(sum_s / draws.size() - (0.5 * std::log(0.5) + 0.5)) < 0.002);

    const auto det = build_det_worst_case(0.875, 0.125);
    const auto dd = sample(det, 200000, 5);
    std::size_t hits[3] = {0, 0, 0};
    for (const ValueProfile& v : dd)
        for (int k = 0; k < 3; ++k)
            if (v == det.points[k]) ++hits[k];
    CHECK(hits[0] + hits[1] + hits[2] == dd.size());
    for (int k = 0; k < 3; ++k)
        CHECK(std::fabs(static_cast<double>(hits[k]) / dd.size() - det.masses[k]) < 0.004);
}

TEST_CASE("positive correlation of the conditional CDFs") {
    const auto d = build_symmetric_triangular(0.5);
    // Pi_S(v_s | v_b) non-increasing in v_b on the interior
    for (double vs : {0.05, 0.2, 0.4}) {
        double prev = 1.0;
        bool monotone = true;
        for (int i = 1; i <= 40; ++i) {
            const double vb = 0.5 + 0.5 * i / 41.0;
            const double cdf = d.seller_cdf_given_buyer(vs, vb);
            monotone = monotone && cdf <= prev + 1e-12;
            prev = cdf;
        }
        CHECK(monotone);
        // the dominance breaks at the edge v_b = 1
        CHECK(d.seller_cdf_given_buyer(vs, 1.0) >= d.seller_cdf_given_buyer(vs, 1.0 - 1e-9));
    }
    // Pi_B(v_b | v_s) non-increasing in v_s on the interior, break at v_s = 0
    for (double vb : {0.7, 0.9}) {
        double prev = 1.0;
        bool monotone = true;
        for (int i = 1; i <= 40; ++i) {
            const double vs = 0.5 * i / 41.0;
            const double cdf = d.buyer_cdf_given_seller(vb, vs);
            monotone = monotone && cdf <= prev + 1e-12;
            prev = cdf;
        }
        CHECK(monotone);
        CHECK(d.buyer_cdf_given_seller(vb, 0.0) <= d.buyer_cdf_given_seller(vb, 1e-9));
    }
}
