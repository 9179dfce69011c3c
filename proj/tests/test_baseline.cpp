#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <secord/baseline.hpp>
#include <secord/errors.hpp>
#include <secord/grid.hpp>

using namespace secord;

namespace {

Baseline pc(double a = 0.2, double c = 100.0) { return Baseline::power_cap(a, c); }

/// Simpson integration of b.pdf over [lo, hi].
double integrate_pdf(const Baseline& b, double lo, double hi, int panels = 4000) {
    const double h = (hi - lo) / panels;
    double s = b.pdf(lo) + b.pdf(hi);
    for (int i = 1; i < panels; ++i) s += b.pdf(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace

TEST_CASE("registry names and parameter validation", "[baseline]") {
    CHECK(Baseline::make({"PowerCap", {0.2, 100.0}}).spec().family == "PowerCap");
    CHECK(Baseline::make({"power_cap", {0.2, 100.0}}).spec().family == "PowerCap");
    CHECK(Baseline::make({"Loglog", {}}).spec().family == "Loglog");
    CHECK(Baseline::make({"loglog", {}}).spec().family == "Loglog");
    CHECK(Baseline::make({"ShiftedWeibullExp", {0.5}}).spec().family == "ShiftedWeibullExp");
    CHECK(Baseline::make({"shifted_weibull_exp", {0.5}}).spec().family == "ShiftedWeibullExp");

    CHECK_THROWS_AS(Baseline::make({"nope", {}}), error);
    CHECK_THROWS_AS(Baseline::make({"PowerCap", {0.2}}), error);
    CHECK_THROWS_AS(Baseline::make({"PowerCap", {-1.0, 100.0}}), error);
    CHECK_THROWS_AS(Baseline::make({"Loglog", {1.0}}), error);
    CHECK_THROWS_AS(Baseline::make({"ShiftedWeibullExp", {}}), error);
    CHECK_THROWS_AS(Baseline::make({"ShiftedWeibullExp", {0.0}}), error);
}

TEST_CASE("cdf endpoint and support behavior", "[baseline]") {
    const Baseline b = pc();
    CHECK(b.cdf(0.0) == 0.0);
    CHECK(b.cdf(100.0) == 1.0);
    CHECK(b.cdf(50.0) == Catch::Approx(std::pow(0.5, 0.2)).epsilon(1e-15));
    CHECK_THROWS_AS(b.cdf(-1.0), error);
    CHECK_THROWS_AS(b.cdf(100.0 + 1e-9), error);
    try {
        b.cdf(-1.0);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::out_of_support);
    }

    const Baseline ll = Baseline::loglog();
    CHECK(ll.cdf(1.0) == 0.5);
    CHECK(ll.cdf(0.0) == 0.0);
    CHECK(ll.cdf(1e9) == Catch::Approx(1.0).epsilon(1e-8));

    const Baseline sw = Baseline::shifted_weibull_exp(0.5);
    CHECK(sw.cdf(1.0) == 0.0);
    CHECK(sw.cdf(4.0) == Catch::Approx(-std::expm1(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(sw.cdf(0.999), error);
}

TEST_CASE("pdf is interior-only and integrates to cdf increments", "[baseline]") {
    CHECK_THROWS_AS(pc().pdf(0.0), error);
    CHECK_THROWS_AS(pc().pdf(100.0), error);
    CHECK_THROWS_AS(Baseline::shifted_weibull_exp(0.5).pdf(1.0), error);

    struct Case {
        Baseline b;
        double lo, hi;
    };
    const Case cases[] = {
        {pc(), 10.0, 90.0},
        {Baseline::loglog(), 0.5, 5.0},
        {Baseline::shifted_weibull_exp(0.5), 1.2, 3.0},
    };
    for (const auto& c : cases) {
        const double integral = integrate_pdf(c.b, c.lo, c.hi);
        const double increment = c.b.cdf(c.hi) - c.b.cdf(c.lo);
        CHECK(integral == Catch::Approx(increment).epsilon(1e-6));
    }
}

TEST_CASE("quantiles invert the cdf", "[baseline]") {
    const Baseline bs[] = {pc(), Baseline::loglog(), Baseline::shifted_weibull_exp(0.5)};
    for (const auto& b : bs) {
        for (double p : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999}) {
            const double w = b.quantile(p);
            CHECK(b.cdf(w) == Catch::Approx(p).epsilon(1e-10));
        }
        CHECK_THROWS_AS(b.quantile(0.0), error);
        CHECK_THROWS_AS(b.quantile(1.0), error);
        CHECK_THROWS_AS(b.quantile(-0.1), error);
    }
    CHECK(Baseline::loglog().quantile(0.5) == 1.0);
}

TEST_CASE("hazard and reversed hazard degenerate guards", "[baseline]") {
    // survival vanishes near the PowerCap upper endpoint
    CHECK_THROWS_AS(pc().hazard(100.0 - 1e-13), error);
    try {
        pc().hazard(100.0 - 1e-13);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_denominator);
    }
    // cdf vanishes just above the ShiftedWeibullExp lower endpoint
    CHECK_THROWS_AS(Baseline::shifted_weibull_exp(0.5).rev_hazard(1.0 + 1e-15), error);

    // closed identities: rev_hazard * cdf == pdf
    const Baseline bs[] = {pc(), Baseline::loglog(), Baseline::shifted_weibull_exp(0.5)};
    const double probes[] = {0.0, 0.1, 0.35, 0.6, 0.85, 1.0};
    for (const auto& b : bs) {
        const double lo = b.support_lo();
        const double hi = b.bounded_above() ? b.support_hi() : (lo + 30.0);
        for (double t : probes) {
            const double w = lo + (0.02 + 0.95 * t) * (hi - lo) * 0.9;
            if (!(w > lo) || (b.bounded_above() && !(w < hi))) continue;
            CHECK(b.rev_hazard(w) * b.cdf(w) == Catch::Approx(b.pdf(w)).epsilon(1e-12));
            if (1.0 - b.cdf(w) > 1e-12)
                CHECK(b.hazard(w) * (1.0 - b.cdf(w)) == Catch::Approx(b.pdf(w)).epsilon(1e-9));
        }
    }

    // ShiftedWeibullExp hazard has the exact closed form a*w^{a-1}
    const Baseline sw = Baseline::shifted_weibull_exp(0.5);
    for (double w : {1.5, 2.0, 7.0})
        CHECK(sw.hazard(w) == Catch::Approx(0.5 * std::pow(w, -0.5)).epsilon(1e-14));
}

TEST_CASE("closed derived functions match generic compositions", "[baseline]") {
    // For families with full closed tables, every non-derivative kind must
    // agree with the value assembled from cdf/pdf directly.
    const Baseline bs[] = {pc(), Baseline::loglog()};
    const DerivedKind direct_kinds[] = {
        DerivedKind::rev_hazard, DerivedKind::hazard,     DerivedKind::h_ratio,
        DerivedKind::w_rev_hazard, DerivedKind::w2_rev_hazard, DerivedKind::h_prime,
        DerivedKind::w_h_prime,  DerivedKind::w2_h_prime,
    };
    for (const auto& b : bs) {
        const double hi = b.bounded_above() ? 0.95 * b.support_hi() : 20.0;
        for (int i = 1; i <= 8; ++i) {
            const double w = b.support_lo() + i * (hi - b.support_lo()) / 9.0;
            const double F = b.cdf(w), f = b.pdf(w);
            const double expected[] = {
                f / F,
                f / (1.0 - F),
                (1.0 - F) / F,
                w * f / F,
                w * w * f / F,
                -f / (F * F),
                -w * f / (F * F),
                -w * w * f / (F * F),
            };
            for (std::size_t k = 0; k < std::size(direct_kinds); ++k)
                CHECK(b.derived(direct_kinds[k], w, 0.0) ==
                      Catch::Approx(expected[k]).epsilon(1e-12));
        }
    }

    // Derivative kinds: closed tables vs small-step central differences of
    // the generating function.
    for (const auto& b : bs) {
        const double hi = b.bounded_above() ? 0.9 * b.support_hi() : 15.0;
        for (int i = 1; i <= 5; ++i) {
            const double w = b.support_lo() + i * (hi - b.support_lo()) / 6.0;
            const double h = 1e-6 * w;
            const auto fd = [&](DerivedKind kind) {
                return (b.derived(kind, w + h, 0.0) - b.derived(kind, w - h, 0.0)) / (2.0 * h);
            };
            CHECK(b.derived(DerivedKind::w2_d_w_rev_hazard, w, 0.0) ==
                  Catch::Approx(w * w * fd(DerivedKind::w_rev_hazard)).margin(1e-6).epsilon(1e-6));
            CHECK(b.derived(DerivedKind::w2_d_w_h_prime, w, 0.0) ==
                  Catch::Approx(w * w * fd(DerivedKind::w_h_prime)).margin(1e-6).epsilon(1e-6));
            CHECK(b.derived(DerivedKind::h_double_prime, w, 0.0) ==
                  Catch::Approx(fd(DerivedKind::h_prime)).margin(1e-6).epsilon(1e-6));
        }
    }
}

TEST_CASE("finite-difference probes shrink near the support boundary", "[baseline]") {
    const Baseline sw = Baseline::shifted_weibull_exp(0.5);
    // A naive step of 0.1 would probe below the support start at w=1.001.
    const double v = sw.derived(DerivedKind::w2_d_w_rev_hazard, 1.001, 0.1);
    CHECK(std::isfinite(v));
}

TEST_CASE("monotonicity checker preconditions", "[baseline]") {
    const GridSpec tiny(0.5, 5.0, 32);
    CHECK_THROWS_AS(check_monotone(Baseline::loglog(), DerivedKind::h_ratio,
                                   Direction::decreasing, tiny),
                    error);
    const GridSpec outside(0.0, 5.0, 128);  // touches the support boundary
    CHECK_THROWS_AS(check_monotone(Baseline::loglog(), DerivedKind::h_ratio,
                                   Direction::decreasing, outside),
                    error);
    const GridSpec beyond(50.0, 150.0, 128);
    CHECK_THROWS_AS(check_monotone(pc(), DerivedKind::h_ratio, Direction::decreasing, beyond),
                    error);
}

TEST_CASE("constant derived functions certify both directions with zero violation",
          "[baseline]") {
    const GridSpec g(0.5, 99.0, 256);
    for (Direction dir : {Direction::increasing, Direction::decreasing}) {
        const auto rep = check_monotone(pc(), DerivedKind::w_rev_hazard, dir, g);
        CHECK(rep.holds);
        CHECK(rep.worst_violation == 0.0);
    }
    const GridSpec gl(0.5, 40.0, 256);
    for (Direction dir : {Direction::increasing, Direction::decreasing}) {
        const auto rep = check_monotone(Baseline::loglog(), DerivedKind::w2_h_prime, dir, gl);
        CHECK(rep.holds);
        CHECK(rep.worst_violation == 0.0);
    }
}

namespace {

void check_direction_table(const Baseline& b, const GridSpec& g,
                           const std::vector<std::pair<DerivedKind, const char*>>& table) {
    for (const auto& [kind, verdict] : table) {
        const bool inc = check_monotone(b, kind, Direction::increasing, g).holds;
        const bool dec = check_monotone(b, kind, Direction::decreasing, g).holds;
        INFO(derived_kind_name(kind) << " expected " << verdict);
        const std::string v = verdict;
        if (v == "increasing") {
            CHECK(inc);
            CHECK_FALSE(dec);
        } else if (v == "decreasing") {
            CHECK(dec);
            CHECK_FALSE(inc);
        } else if (v == "both") {
            CHECK(inc);
            CHECK(dec);
        } else {  // neither
            CHECK_FALSE(inc);
            CHECK_FALSE(dec);
        }
    }
}

} // namespace

TEST_CASE("derived-function direction table", "[baseline]") {
    check_direction_table(pc(0.2, 100.0), GridSpec(0.5, 99.0, 256),
                          {
                              {DerivedKind::w_rev_hazard, "both"},
                              {DerivedKind::w2_rev_hazard, "increasing"},
                              {DerivedKind::w2_d_w_rev_hazard, "both"},
                              {DerivedKind::h_ratio, "decreasing"},
                              {DerivedKind::w2_h_prime, "decreasing"},
                              {DerivedKind::w_h_prime, "increasing"},
                              {DerivedKind::w2_d_w_h_prime, "increasing"},
                              {DerivedKind::h_double_prime, "decreasing"},
                          });
    check_direction_table(Baseline::loglog(), GridSpec(0.5, 50.0, 256),
                          {
                              {DerivedKind::w_rev_hazard, "decreasing"},
                              {DerivedKind::w2_rev_hazard, "increasing"},
                              {DerivedKind::w2_d_w_rev_hazard, "decreasing"},
                              {DerivedKind::h_ratio, "decreasing"},
                              {DerivedKind::w2_h_prime, "both"},
                              {DerivedKind::w_h_prime, "increasing"},
                              {DerivedKind::w2_d_w_h_prime, "both"},
                              {DerivedKind::h_double_prime, "decreasing"},
                          });
    check_direction_table(Baseline::shifted_weibull_exp(0.5), GridSpec(1.01, 30.0, 256),
                          {
                              {DerivedKind::w_rev_hazard, "decreasing"},
                              {DerivedKind::w2_rev_hazard, "decreasing"},
                              {DerivedKind::w2_d_w_rev_hazard, "neither"},
                              {DerivedKind::h_ratio, "decreasing"},
                              {DerivedKind::w2_h_prime, "increasing"},
                              {DerivedKind::w_h_prime, "increasing"},
                              {DerivedKind::w2_d_w_h_prime, "decreasing"},
                              {DerivedKind::h_double_prime, "decreasing"},
                          });
}

TEST_CASE("monotone verdicts are stable under grid doubling", "[baseline]") {
    const struct {
        Baseline b;
        GridSpec g;
    } rows[] = {
        {pc(0.2, 100.0), GridSpec(0.5, 99.0, 256)},
        {Baseline::loglog(), GridSpec(0.5, 50.0, 256)},
        {Baseline::shifted_weibull_exp(0.5), GridSpec(1.01, 30.0, 256)},
    };
    const DerivedKind kinds[] = {DerivedKind::h_ratio, DerivedKind::w2_rev_hazard,
                                 DerivedKind::w_h_prime, DerivedKind::w2_d_w_h_prime};
    for (const auto& row : rows)
        for (DerivedKind k : kinds)
            for (Direction dir : {Direction::increasing, Direction::decreasing}) {
                const bool base = check_monotone(row.b, k, dir, row.g).holds;
                const bool fine = check_monotone(row.b, k, dir, row.g.doubled()).holds;
                INFO(row.b.spec().family << " " << derived_kind_name(k));
                CHECK(base == fine);
            }
}

TEST_CASE("convexity checks", "[baseline]") {
    CHECK(check_convex(pc(0.2, 100.0), DerivedKind::rev_hazard, GridSpec(0.5, 99.0, 256)).holds);
    CHECK(check_convex(Baseline::loglog(), DerivedKind::rev_hazard, GridSpec(0.5, 50.0, 256))
              .holds);
    CHECK(check_convex(Baseline::power_cap(1.0, 1.0), DerivedKind::rev_hazard,
                       GridSpec(0.01, 0.99, 256))
              .holds);
    // h(w) = (1-F)/F is convex for PowerCap (h'' = a(a+1) w^{-2} (w/c)^{-a} > 0)
    CHECK(check_convex(pc(0.2, 100.0), DerivedKind::h_ratio, GridSpec(0.5, 99.0, 256)).holds);
}

TEST_CASE("condition blocks per family", "[baseline]") {
    const GridSpec gp(0.5, 99.0, 256);
    const GridSpec gl(0.5, 50.0, 256);
    const GridSpec gs(1.01, 30.0, 256);

    const auto block = [](const Baseline& b, ConditionBlock blk, const GridSpec& g) {
        return check_condition_block(b, blk, g);
    };

    // PowerCap: every block fails, each with a known first offender.
    {
        const auto c1 = block(pc(), ConditionBlock::C1, gp);
        CHECK_FALSE(c1.holds);
        REQUIRE(c1.subconditions.size() == 4);
        CHECK(c1.subconditions[0].holds);   // w2_d_w_rev_hazard decreasing (constant 0)
        CHECK(c1.subconditions[1].holds);   // h_ratio decreasing
        CHECK(c1.subconditions[2].holds);   // w2_h_prime decreasing
        CHECK_FALSE(c1.subconditions[3].holds);  // w2_d_w_h_prime decreasing

        const auto c2 = block(pc(), ConditionBlock::C2, gp);
        CHECK_FALSE(c2.holds);
        CHECK(c2.subconditions[0].holds);        // rev_hazard convex
        CHECK(c2.subconditions[1].holds);        // h_ratio decreasing
        CHECK(c2.subconditions[2].holds);        // h_ratio convex
        CHECK_FALSE(c2.subconditions[3].holds);  // h_double_prime increasing

        CHECK_FALSE(block(pc(), ConditionBlock::C3, gp).holds);
        CHECK_FALSE(block(pc(), ConditionBlock::C4, gp).holds);
    }

    // Loglog: C1 holds in full; C2-C4 fail.
    {
        const auto c1 = block(Baseline::loglog(), ConditionBlock::C1, gl);
        CHECK(c1.holds);
        for (const auto& s : c1.subconditions) {
            INFO(s.name);
            CHECK(s.holds);
        }
        CHECK_FALSE(block(Baseline::loglog(), ConditionBlock::C2, gl).holds);
        CHECK_FALSE(block(Baseline::loglog(), ConditionBlock::C3, gl).holds);
        CHECK_FALSE(block(Baseline::loglog(), ConditionBlock::C4, gl).holds);
    }

    // ShiftedWeibullExp(0.5): all four blocks fail.
    {
        const Baseline sw = Baseline::shifted_weibull_exp(0.5);
        CHECK_FALSE(block(sw, ConditionBlock::C1, gs).holds);
        CHECK_FALSE(block(sw, ConditionBlock::C2, gs).holds);
        CHECK_FALSE(block(sw, ConditionBlock::C3, gs).holds);
        CHECK_FALSE(block(sw, ConditionBlock::C4, gs).holds);
    }
}
