#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "osint/errors.hpp"
#include "osint/reputation.hpp"
#include "osint/rng.hpp"

using namespace osint;

TEST_CASE("delta_rho") {
    CHECK(delta_rho(1.0, 0.5, 0.0, 0.0) == 0.5);
    CHECK(delta_rho(1.0, 0.0, 1.0, 0.0) == 0.0);
    CHECK(delta_rho(1.0, 3.0, 1.0, 3.0) == 0.0);
    CHECK(delta_rho(0.5, 2.0, 2.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("single-actor update follows the coupled rule") {
    SocialGraph g;
    g.add_edge("a", "b");
    ReputationLedger ledger(&g, 0.1);
    ledger.set("a", 0.5);
    ledger.set("b", 0.8);
    SUBCASE("hand-computed update: 0.5 + 0.1 * 0.8 * 0.5") {
        CHECK(ledger.update("a", 0.5) == doctest::Approx(0.54).epsilon(1e-12));
    }
    SUBCASE("zero drho is an exact fixed point") {
        CHECK(ledger.update("a", 0.0) == 0.5);
        CHECK(ledger.get("a") == 0.5);
    }
}

TEST_CASE("updates clamp into the unit interval") {
    SocialGraph g;
    g.add_edge("a", "b");
    ReputationLedger ledger(&g, 1.0);
    ledger.set("a", 0.99);
    ledger.set("b", 1.0);
    CHECK(ledger.update("a", 1.0) == 1.0);
    ledger.set("a", 0.01);
    CHECK(ledger.update("a", -5.0) == 0.0);
}

TEST_CASE("step_all is synchronous") {
    SocialGraph g;
    g.add_edge("a", "b");
    SUBCASE("two-node path saturating to the clamp") {
        ReputationLedger ledger(&g, 1.0);
        ledger.set("a", 0.4);
        ledger.set("b", 0.6);
        ledger.step_all({{"a", 1.0}, {"b", 1.0}});
        CHECK(ledger.get("a") == 1.0);
        CHECK(ledger.get("b") == 1.0);
    }
    SUBCASE("pre-step neighbor means, not sequential ones") {
        ReputationLedger ledger(&g, 1.0);
        ledger.set("a", 0.2);
        ledger.set("b", 0.6);
        ledger.step_all({{"a", 0.5}, {"b", 0.5}});
        CHECK(ledger.get("a") == doctest::Approx(0.5).epsilon(1e-12));   // 0.2 + 0.6*0.5
        CHECK(ledger.get("b") == doctest::Approx(0.7).epsilon(1e-12));   // 0.6 + 0.2*0.5
    }
    SUBCASE("all-zero drho leaves the ledger untouched") {
        ReputationLedger ledger(&g, 0.7);
        ledger.set("a", 0.33);
        ledger.set("b", 0.66);
        ledger.step_all({{"a", 0.0}, {"b", 0.0}});
        CHECK(ledger.get("a") == 0.33);
        CHECK(ledger.get("b") == 0.66);
    }
    SUBCASE("restricting to one actor matches the single update") {
        ReputationLedger batch(&g, 0.25);
        batch.set("a", 0.5);
        batch.set("b", 0.8);
        ReputationLedger single(&g, 0.25);
        single.set("a", 0.5);
        single.set("b", 0.8);
        batch.step_all({{"a", 0.3}, {"b", 0.0}});
        single.update("a", 0.3);
        CHECK(batch.get("a") == single.get("a"));
        CHECK(batch.get("b") == single.get("b"));
    }
    SUBCASE("missing drho entries are an error") {
        ReputationLedger ledger(&g, 0.1);
        ledger.set("a", 0.5);
        ledger.set("b", 0.5);
        CHECK_THROWS_AS(ledger.step_all({{"a", 0.1}}), ValidationError);
    }
}

TEST_CASE("isolated actors") {
    SocialGraph g;
    g.add_node("loner");
    SUBCASE("self-referential mean keeps the update scale") {
        ReputationLedger ledger(&g, 1.0, IsolatedRule::SelfMean);
        ledger.set("loner", 0.5);
        CHECK(ledger.neighbor_mean("loner") == 0.5);
        CHECK(ledger.update("loner", 0.2) == doctest::Approx(0.6).epsilon(1e-12));
    }
    SUBCASE("zero coupling freezes isolated actors") {
        ReputationLedger ledger(&g, 1.0, IsolatedRule::ZeroCoupling);
        ledger.set("loner", 0.5);
        CHECK(ledger.neighbor_mean("loner") == 0.0);
        CHECK(ledger.update("loner", 0.9) == 0.5);
    }
}

TEST_CASE("boundedness under random hammering") {
    SocialGraph g;
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    Rng rng(1234);
    ReputationLedger ledger(&g, 0.0);
    for (int i = 0; i < 10000; ++i) {
        ReputationLedger step(&g, rng.uniform(0.0, 2.0));
        step.set("a", ledger.has("a") ? ledger.get("a") : 0.5);
        step.set("b", ledger.has("b") ? ledger.get("b") : 0.5);
        step.set("c", ledger.has("c") ? ledger.get("c") : 0.5);
        step.step_all({{"a", rng.uniform(-10, 10)},
                       {"b", rng.uniform(-10, 10)},
                       {"c", rng.uniform(-10, 10)}});
        for (const auto& [id, rho] : step.values()) {
            CHECK(rho >= 0.0);
            CHECK(rho <= 1.0);
        }
        ledger = step;
    }
}

TEST_CASE("monotone coupling in the neighbor mean") {
    Rng rng(55);
    for (int i = 0; i < 300; ++i) {
        SocialGraph g;
        g.add_edge("i", "n");
        const double own = rng.uniform01();
        const double low_mean = rng.uniform(0.0, 0.5);
        const double high_mean = low_mean + rng.uniform(0.0, 0.5);
        const double drho = rng.uniform(0.0, 2.0);
        const double lambda = rng.uniform(0.0, 2.0);

        ReputationLedger low(&g, lambda);
        low.set("i", own);
        low.set("n", low_mean);
        ReputationLedger high(&g, lambda);
        high.set("i", own);
        high.set("n", high_mean);
        CHECK(high.update("i", drho) >= low.update("i", drho));
    }
}

TEST_CASE("negative lambda is rejected") {
    SocialGraph g;
    CHECK_THROWS_AS(ReputationLedger(&g, -0.5), ValidationError);
}
