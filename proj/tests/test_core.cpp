#include "doctest.h"

#include <cstring>

#include "maxmin/mechanisms.hpp"
#include "maxmin/rng.hpp"
#include "maxmin/types.hpp"

using namespace maxmin;

TEST_CASE("regime classification") {
    CHECK(classify({0.875, 0.125}) == Regime::Symmetric);
    CHECK(classify({0.5, 0.5}) == Regime::Trivial);
    CHECK(classify({0.3, 0.7}) == Regime::Trivial);
    CHECK(classify({0.7, 0.2}) == Regime::Asymmetric);
    CHECK(classify({1.0, 0.3}) == Regime::EdgeBuyerOne);
    CHECK(classify({1.0, 0.0}) == Regime::Symmetric);  // degenerate corner: sum is 1
    CHECK(classify({0.6, 0.4 + 1e-13}) == Regime::Symmetric);
    CHECK(classify({0.6, 0.4 + 1e-9}) == Regime::Asymmetric);
    CHECK_THROWS_AS(classify({1.2, 0.1}), std::invalid_argument);
}

TEST_CASE("regime classification is total and exclusive") {
    // every grid point maps to exactly one regime, and the regime conditions hold
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const Expectations e{i / 20.0, j / 20.0};
            const Regime r = classify(e);
            switch (r) {
                case Regime::Trivial: CHECK(e.m_b <= e.m_s); break;
                case Regime::Symmetric:
                    CHECK(std::fabs(e.m_b + e.m_s - 1.0) <= kSymmetricEps);
                    CHECK(e.m_s < e.m_b);
                    break;
                case Regime::EdgeBuyerOne:
                    CHECK(e.m_b == 1.0);
                    CHECK(e.m_s > 0.0);
                    CHECK(e.m_s < 1.0);
                    break;
                case Regime::Asymmetric:
                    CHECK(e.m_s < e.m_b);
                    CHECK(e.m_b < 1.0);
                    CHECK(std::fabs(e.m_b + e.m_s - 1.0) > kSymmetricEps);
                    break;
            }
        }
    }
}

TEST_CASE("evaluate dispatch") {
    CHECK(evaluate(NeverTrade{}, 0.9, 0.1).q == 0.0);
    CHECK(evaluate(NeverTrade{}, 0.9, 0.1).t_b == 0.0);
    CHECK(evaluate(NeverTrade{}, 0.9, 0.1).t_s == 0.0);

    CHECK(evaluate(Rda{0.5}, 1.0, 0.0).q == doctest::Approx(1.0).epsilon(1e-15));

    const MechanismOutcome o = evaluate(Rda{0.5}, 0.5, 0.2);  // b-a = 0.3 <= r
    CHECK(o.q == 0.0);
    CHECK(o.t == 0.0);
}

TEST_CASE("evaluate rejects bad parameters and inputs") {
    CHECK_THROWS_AS(evaluate(Rda{0.0}, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Rda{1.0}, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Logarithmic{0.5, 0.5}, 0.5, 0.2), regime_error);
    CHECK_THROWS_AS(evaluate(EdgeBuyerOne{0.0}, 1.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Rda{0.5}, 1.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(Rda{0.5}, 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("outcome invariants across mechanisms and grid") {
    const Mechanism mechs[] = {
        Rda{0.5},
        Logarithmic{0.5, 0.3},
        LinearDet{0.875, 0.125},
        DoublePostedPrice{0.875, 0.125},
        EfficientOnSupport{0.5},
        EdgeBuyerOne{0.5},
        NeverTrade{},
    };
    for (const Mechanism& m : mechs) {
        for (int i = 0; i <= 40; ++i) {
            for (int j = 0; j <= 40; ++j) {
                const double b = i / 40.0, a = j / 40.0;
                const MechanismOutcome o = evaluate(m, b, a);
                CHECK(o.q >= 0.0);
                CHECK(o.q <= 1.0);
                CHECK(o.t == o.t_b - o.t_s);  // exact by construction
            }
        }
    }
}

TEST_CASE("evaluate is pure (bit-identical repeats)") {
    const Mechanism m = Logarithmic{0.47, 0.21};
    const MechanismOutcome a = evaluate(m, 0.83, 0.12);
    const MechanismOutcome b = evaluate(m, 0.83, 0.12);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("rng streams are deterministic and tag-separated") {
    Rng a(derive_stream(42, "task-a"));
    Rng b(derive_stream(42, "task-a"));
    Rng c(derive_stream(42, "task-b"));
    CHECK(a.next() == b.next());
    CHECK(a.u01() == b.u01());
    CHECK(derive_stream(42, "task-a") != derive_stream(42, "task-b"));
    for (int i = 0; i < 1000; ++i) {
        const double u = c.u01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
