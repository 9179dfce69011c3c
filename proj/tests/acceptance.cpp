// Acceptance harness: twelve numbered end-to-end checks of the library,
// run one per invocation (`acceptance N`) or all in sequence (`acceptance
// all`). Each criterion prints supporting [info] lines followed by exactly
// one [PASS]/[FAIL] line; the process exits 0 iff the criterion passed.
//
// The checks are deliberately independent of the unit tests: they re-derive
// their expectations from the public API (closed forms, Monte Carlo,
// certifiers) rather than from pinned constants wherever possible.

#include <secord/majorization.hpp>
#include <secord/orderstats.hpp>
#include <secord/scenario.hpp>
#include <secord/theorems.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

using secord::CsvKind;
using secord::ElsConfig;
using secord::GridSpec;
using secord::OrderKind;
using secord::Verdict;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const secord::HypothesisResult* find_hyp(const secord::TheoremVerdict& v, const char* name) {
    for (const auto& h : v.hypotheses)
        if (h.name == name) return &h;
    return nullptr;
}

bool hyp_failed(const secord::TheoremVerdict& v, const char* name) {
    const auto* h = find_hyp(v, name);
    return h != nullptr && !h->pass;
}

// ---------------------------------------------------------------------------
// 1. Ex3_1: the first system's CDF dominates on the standard grid, fast.
// ---------------------------------------------------------------------------

bool criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const secord::Fixture& f = secord::find_fixture("Ex3_1");
    const GridSpec grid{4.001, 100.0, 4096};
    double min_diff = std::numeric_limits<double>::infinity();
    double min_x = grid.lo;
    for (double x : grid.values()) {
        const double d =
            secord::cdf_second_largest(f.x, x) - secord::cdf_second_largest(f.y, x);
        if (d < min_diff) {
            min_diff = d;
            min_x = x;
        }
    }
    const double elapsed = seconds_since(t0);
    std::printf("[info] min of F_X - F_Y over 4096 points: %.6e at x=%.6g\n", min_diff, min_x);
    std::printf("[info] elapsed: %.3f s (budget 1 s)\n", elapsed);
    return min_diff >= -1e-9 && elapsed < 1.0;
}

// ---------------------------------------------------------------------------
// 2. Ex3_2: reversed hazard dominance plus closed-form/numeric agreement.
// ---------------------------------------------------------------------------

bool criterion_2() {
    const secord::Fixture& f = secord::find_fixture("Ex3_2");
    const GridSpec grid{4.001, 100.0, 4096};
    double max_diff = -std::numeric_limits<double>::infinity();
    double max_rel = 0.0;
    for (double x : grid.values()) {
        const double rx = secord::rh_second_largest(f.x, x);
        const double ry = secord::rh_second_largest(f.y, x);
        max_diff = std::max(max_diff, rx - ry);
        for (const ElsConfig* cfg : {&f.x, &f.y}) {
            const double closed =
                secord::rh_second_largest_indep(*cfg, x, secord::RhMethod::closed_form);
            const double numeric =
                secord::rh_second_largest_indep(*cfg, x, secord::RhMethod::numeric_logderiv);
            const double rel =
                std::fabs(closed - numeric) / std::max({std::fabs(closed), std::fabs(numeric), 1e-14});
            max_rel = std::max(max_rel, rel);
        }
    }
    std::printf("[info] max of rh_X - rh_Y over the grid: %.6e (must stay below 1e-7)\n", max_diff);
    std::printf("[info] worst closed-form vs numeric relative gap: %.3e (tolerance 1e-6)\n",
                max_rel);
    return max_diff < 1e-7 && max_rel <= 1e-6;
}

// ---------------------------------------------------------------------------
// 3. CEx3_1: the CDF difference is required to change sign near x = 5.9.
//    The clamped distribution functions do not actually cross; the crossing
//    exists only for the component formula continued past F = 1. This check
//    reports what the distributions really do and fails honestly.
// ---------------------------------------------------------------------------

double unclamped_system_cdf(const ElsConfig& cfg, double x) {
    // PowerCap component CDFs evaluated WITHOUT the upper clamp at 1
    // (the lower truncation at the location is kept). Only meaningful as a
    // diagnostic: past the support cap this is no longer a distribution.
    const double a = cfg.baseline.params[0];
    const double c = cfg.baseline.params[1];
    std::vector<double> g(cfg.n());
    for (std::size_t i = 0; i < cfg.n(); ++i) {
        const double w = (x - cfg.lambda[i]) / cfg.theta[i];
        g[i] = w <= 0.0 ? 0.0 : std::pow(w / c, a * cfg.alpha[i]);
    }
    double sum = 0.0, prod = 1.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        double p = 1.0;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (k != l) p *= g[k];
        sum += p;
        prod *= g[l];
    }
    return sum - static_cast<double>(g.size() - 1) * prod;
}

bool criterion_3() {
    const secord::Fixture& f = secord::find_fixture("CEx3_1");
    const GridSpec grid = f.grid;

    // What the distributions really do on the grid.
    double min_diff = std::numeric_limits<double>::infinity();
    double max_diff = -std::numeric_limits<double>::infinity();
    std::optional<double> sign_change;
    double prev_d = 0.0, prev_x = 0.0;
    bool have_prev = false;
    for (double x : grid.values()) {
        const double d =
            secord::cdf_second_largest(f.x, x) - secord::cdf_second_largest(f.y, x);
        min_diff = std::min(min_diff, d);
        max_diff = std::max(max_diff, d);
        // Treat sub-1e-12 values as zero so floating noise is not a "crossing".
        const double s = std::fabs(d) < 1e-12 ? 0.0 : d;
        const double sp = std::fabs(prev_d) < 1e-12 ? 0.0 : prev_d;
        if (have_prev && s * sp < 0.0 && !sign_change) sign_change = 0.5 * (prev_x + x);
        prev_d = d;
        prev_x = x;
        have_prev = true;
    }
    const secord::OrderCheckReport rep = secord::check_order(f.y, f.x, OrderKind::st, grid);
    std::printf("[info] F_X - F_Y on (%.6g, %.6g]: min=%.6e max=%.6e, sign change: %s\n", grid.lo,
                grid.hi, min_diff, max_diff, sign_change ? "yes" : "none");
    std::printf("[info] st check of the stated direction (Y <= X): %s, max violation %.6e\n",
                secord::verdict_name(rep.verdict), rep.max_violation);

    // Where the crossing claim comes from: continue the component formula
    // past F = 1 and the difference does change sign inside the window.
    const auto ext_diff = [&](double x) {
        return unclamped_system_cdf(f.x, x) - unclamped_system_cdf(f.y, x);
    };
    std::optional<double> ext_cross;
    const GridSpec scan{grid.lo, grid.hi, 8192};
    double pd = ext_diff(scan.lo), px = scan.lo;
    for (double x : scan.values()) {
        const double d = ext_diff(x);
        if (pd * d < 0.0) {
            double lo = px, hi = x;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (ext_diff(lo) * ext_diff(mid) <= 0.0 ? hi : lo) = mid;
            }
            ext_cross = 0.5 * (lo + hi);
            break;
        }
        pd = d;
        px = x;
    }
    if (ext_cross)
        std::printf("[info] continuing the component formula past F=1 yields a sign change at "
                    "x=%.6g (%s the 5.9 +/- 0.3 window); the real distributions clamp at 1 and "
                    "do not cross\n",
                    *ext_cross,
                    (*ext_cross >= 5.6 && *ext_cross <= 6.2) ? "inside" : "outside");

    const bool pass = sign_change && *sign_change >= 5.6 && *sign_change <= 6.2;
    if (!pass)
        std::printf("[info] expected failure: the clamped CDF difference never changes sign on "
                    "the grid, so no crossing can be located at 5.9 +/- 0.3\n");
    return pass;
}

// ---------------------------------------------------------------------------
// 4. CEx3_2: the st conclusion fails and the checklist blames log-concavity
//    and the w^2-weighted reversed-hazard monotonicity.
// ---------------------------------------------------------------------------

bool criterion_4() {
    const secord::Fixture& f = secord::find_fixture("CEx3_2");
    const bool params_ok = f.x.generator && f.y.generator &&
                           f.x.generator->family == "GumbelHougaard" &&
                           f.y.generator->family == "GumbelHougaard" &&
                           f.x.generator->params == std::vector<double>{2.5} &&
                           f.y.generator->params == std::vector<double>{1.0001};
    const secord::TheoremVerdict v = secord::run_fixture("CEx3_2");
    std::printf("[info] %s\n", secord::verdict_line(v).c_str());
    const bool conclusion_fails = v.conclusion == Verdict::fails;
    const bool logconcave_fails = hyp_failed(v, "log_concave_psi1_or_psi2");
    const bool w2_fails = hyp_failed(v, "w2_rev_hazard_increasing");
    std::printf("[info] generator parameters 2.5/1.0001: %s; conclusion fails: %s; "
                "log-concavity FAIL: %s; w^2 monotonicity FAIL: %s\n",
                params_ok ? "yes" : "no", conclusion_fails ? "yes" : "no",
                logconcave_fails ? "yes" : "no", w2_fails ? "yes" : "no");
    return params_ok && conclusion_fails && logconcave_fails && w2_fails;
}

// ---------------------------------------------------------------------------
// 5. CEx3_3: the CDF difference changes sign on [1, 50] and the shape-cone
//    hypothesis is reported FAIL.
// ---------------------------------------------------------------------------

bool criterion_5() {
    const secord::Fixture& f = secord::find_fixture("CEx3_3");
    const GridSpec grid{1.0, 50.0, 4096};
    double min_diff = std::numeric_limits<double>::infinity();
    double max_diff = -std::numeric_limits<double>::infinity();
    double min_x = 0.0, max_x = 0.0;
    for (double x : grid.values()) {
        const double d =
            secord::cdf_second_largest(f.x, x) - secord::cdf_second_largest(f.y, x);
        if (d < min_diff) {
            min_diff = d;
            min_x = x;
        }
        if (d > max_diff) {
            max_diff = d;
            max_x = x;
        }
    }
    std::printf("[info] F_X - F_Y on [1,50]: min=%.6e at x=%.6g, max=%.6e at x=%.6g\n", min_diff,
                min_x, max_diff, max_x);
    const bool signs = min_diff < -1e-9 && max_diff > 1e-9;

    const secord::TheoremVerdict v = secord::run_fixture("CEx3_3");
    const bool cone_fails = hyp_failed(v, "cone_shapes");
    std::printf("[info] sign change present: %s; cone_shapes hypothesis FAIL: %s\n",
                signs ? "yes" : "no", cone_fails ? "yes" : "no");
    return signs && cone_fails;
}

// ---------------------------------------------------------------------------
// 6. Ex3_3i / Ex3_3ii: st dominance holds in the stated directions.
// ---------------------------------------------------------------------------

bool criterion_6() {
    const secord::Fixture& fi = secord::find_fixture("Ex3_3i");
    const secord::OrderCheckReport ri =
        secord::check_order(fi.x, fi.y, OrderKind::st, GridSpec{8.001, 100.0, 4096});
    std::printf("[info] Ex3_3i direction X <= Y on (8,100]: %s, max violation %.6e\n",
                secord::verdict_name(ri.verdict), ri.max_violation);

    const secord::Fixture& fii = secord::find_fixture("Ex3_3ii");
    const secord::OrderCheckReport rii =
        secord::check_order(fii.y, fii.x, OrderKind::st, GridSpec{6.001, 100.0, 4096});
    std::printf("[info] Ex3_3ii direction Y <= X on (6,100]: %s, max violation %.6e\n",
                secord::verdict_name(rii.verdict), rii.max_violation);

    return ri.verdict == Verdict::holds && ri.max_violation <= 1e-9 &&
           rii.verdict == Verdict::holds && rii.max_violation <= 1e-9;
}

// ---------------------------------------------------------------------------
// 7. Independent Monte Carlo oracle vs the closed form, three configs.
// ---------------------------------------------------------------------------

bool criterion_7() {
    struct Probe {
        const char* label;
        ElsConfig cfg;
        GridSpec grid;
    };
    ElsConfig stripped = secord::find_fixture("CEx3_2").x;
    stripped.generator.reset();
    const std::vector<Probe> probes = {
        {"Ex3_1 X-side", secord::find_fixture("Ex3_1").x, GridSpec{4.001, 100.0, 32}},
        {"Ex3_2 X-side", secord::find_fixture("Ex3_2").x, GridSpec{4.001, 100.0, 32}},
        {"CEx3_2 X-side without generator", stripped, GridSpec{5.001, 60.0, 32}},
    };
    const long samples = 1000000;
    bool ok = true;
    int seed = 2026;
    for (const Probe& p : probes) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<double> xs = p.grid.values();
        const auto mc = secord::mc_cdf_second_largest_multi(p.cfg, xs, samples, seed++);
        double sup = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j)
            sup = std::max(sup,
                           std::fabs(mc[j].estimate - secord::cdf_second_largest(p.cfg, xs[j])));
        const double elapsed = seconds_since(t0);
        std::printf("[info] %s: sup |MC - closed| = %.4e over 32 probes, 1e6 samples, %.2f s\n",
                    p.label, sup, elapsed);
        ok = ok && sup <= 3.7e-3 && elapsed < 30.0;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Dependent oracle: Independence-generator reduction and the Clayton(1)
//    gamma-frailty sampler.
// ---------------------------------------------------------------------------

bool criterion_8() {
    // (a) Adding an explicit Independence generator must reproduce the
    // independent closed form to within accumulated rounding.
    double sup = 0.0;
    for (const char* name : {"Ex3_1", "Ex3_2"}) {
        const secord::Fixture& f = secord::find_fixture(name);
        for (const ElsConfig* base : {&f.x, &f.y}) {
            ElsConfig dep = *base;
            dep.generator = secord::GeneratorSpec{"Independence", {}};
            for (double x : GridSpec{f.grid.lo, f.grid.hi, 512}.values())
                sup = std::max(sup, std::fabs(secord::cdf_second_largest(dep, x) -
                                              secord::cdf_second_largest(*base, x)));
        }
    }
    std::printf("[info] Independence-generator reduction: sup gap %.3e (tolerance 1e-12)\n", sup);
    const bool reduction_ok = sup <= 1e-12;

    // (b) Homogeneous Clayton(1) system vs the gamma-frailty sampler.
    const ElsConfig clayton{secord::BaselineSpec{"Loglog", {}},
                            {2.0, 2.0, 2.0},
                            {2.0, 2.0, 2.0},
                            {1.0, 1.0, 1.0},
                            secord::GeneratorSpec{"Clayton", {1.0}}};
    const std::vector<double> probes = {2.5, 4.0, 7.0, 12.0, 20.0};
    const auto mc = secord::mc_cdf_second_largest_dep_multi(clayton, probes, 400000, 77);
    bool frailty_ok = true;
    for (std::size_t j = 0; j < probes.size(); ++j) {
        const double closed = secord::cdf_second_largest(clayton, probes[j]);
        const double gap = std::fabs(mc[j].estimate - closed);
        const double budget = 3.5 * mc[j].stderr_;
        std::printf("[info] Clayton(1) probe x=%.3g: closed=%.6f MC=%.6f |gap|=%.2e "
                    "(3.5*stderr=%.2e)\n",
                    probes[j], closed, mc[j].estimate, gap, budget);
        frailty_ok = frailty_ok && gap <= budget;
    }
    return reduction_ok && frailty_ok;
}

// ---------------------------------------------------------------------------
// 9. Randomized property suites report zero inconsistencies.
// ---------------------------------------------------------------------------

bool criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Run {
        const char* id;
        int trials;
    };
    bool ok = true;
    for (const Run r : {Run{"T3_1", 200}, Run{"T3_4", 100}, Run{"T3_9ii", 100}}) {
        const secord::SuiteReport rep = secord::property_suite(r.id, r.trials, 9001);
        std::printf("[info] %s: %d trials, %d inconsistent, %ld rejections\n",
                    rep.theorem_id.c_str(), rep.trials, rep.inconsistent, rep.rejections);
        for (const auto& line : rep.inconsistent_lines) std::printf("[info]   %s\n", line.c_str());
        ok = ok && rep.trials == r.trials && rep.inconsistent == 0;
    }
    const double elapsed = seconds_since(t0);
    std::printf("[info] total elapsed: %.2f s (budget 300 s)\n", elapsed);
    return ok && elapsed < 300.0;
}

// ---------------------------------------------------------------------------
// 10. Majorization algebra on constructed pairs; preorder reflexivity.
// ---------------------------------------------------------------------------

bool criterion_10() {
    secord::Rng master(4242);
    int maj_fail = 0, ws_fail = 0, wsub_fail = 0, refl_fail = 0;
    const int pairs = 10000;
    for (int t = 0; t < pairs; ++t) {
        secord::Rng r = master.substream(static_cast<std::uint64_t>(t));
        const std::size_t n = 2 + static_cast<std::size_t>(r.next_uniform() * 5.0);
        // Integer-valued coordinates keep every partial sum exact, so the
        // transfer construction below guarantees majorization by design.
        std::vector<double> x(n);
        for (auto& e : x) e = 1.0 + std::floor(r.next_uniform() * 21.0);
        std::sort(x.begin(), x.end(), std::greater<>());

        std::vector<double> y = x;
        const int moves = 1 + static_cast<int>(r.next_uniform() * 3.0);
        for (int m = 0; m < moves; ++m) {
            for (int attempt = 0; attempt < 12; ++attempt) {
                const std::size_t i = static_cast<std::size_t>(r.next_uniform() * n);
                const std::size_t j = static_cast<std::size_t>(r.next_uniform() * n);
                if (y[i] > y[j] + 0.5) {  // integer gap >= 1: transfer keeps y below x
                    y[i] -= 1.0;
                    y[j] += 1.0;
                    std::sort(y.begin(), y.end(), std::greater<>());
                    break;
                }
            }
        }

        if (!secord::check_preorder(x, y, secord::Preorder::maj).holds) ++maj_fail;
        if (!secord::check_preorder(x, y, secord::Preorder::weak_super).holds) ++ws_fail;
        if (!secord::check_preorder(x, y, secord::Preorder::weak_sub).holds) ++wsub_fail;
        for (const secord::Preorder p : {secord::Preorder::maj, secord::Preorder::weak_super,
                                         secord::Preorder::weak_sub, secord::Preorder::recip})
            if (!secord::check_preorder(x, x, p).holds) ++refl_fail;
    }
    std::printf("[info] %d constructed pairs (n in 2..6): maj failures=%d, weak-super "
                "failures=%d, weak-sub failures=%d, reflexivity failures=%d\n",
                pairs, maj_fail, ws_fail, wsub_fail, refl_fail);
    return maj_fail == 0 && ws_fail == 0 && wsub_fail == 0 && refl_fail == 0;
}

// ---------------------------------------------------------------------------
// 11. Scale partials: finite differences vs the analytic form; the Schur
//     certifier classifies the Ex3_1 system CDF over scales.
// ---------------------------------------------------------------------------

bool criterion_11() {
    const ElsConfig base = secord::find_fixture("Ex3_1").x;
    secord::Rng rng(31415);
    double max_rel = 0.0;
    for (int t = 0; t < 10; ++t) {
        secord::Rng r = rng.substream(static_cast<std::uint64_t>(t));
        ElsConfig cfg = base;
        for (auto& th : cfg.theta) th = r.next_uniform(2.0, 12.0);
        const double x = r.next_uniform(6.0, 60.0);
        for (std::size_t i = 0; i < cfg.n(); ++i) {
            const double analytic = secord::partial_scale_cdf_indep(cfg, i, x);
            const double h = 1e-4 * cfg.theta[i];
            ElsConfig up = cfg, dn = cfg;
            up.theta[i] += h;
            dn.theta[i] -= h;
            const double fd = (secord::cdf_second_largest(up, x) -
                               secord::cdf_second_largest(dn, x)) /
                              (2.0 * h);
            const double rel = std::fabs(fd - analytic) /
                               std::max({std::fabs(fd), std::fabs(analytic), 1e-14});
            max_rel = std::max(max_rel, rel);
        }
    }
    std::printf("[info] worst finite-difference vs analytic relative gap over 10 base points: "
                "%.3e (tolerance 1e-6)\n",
                max_rel);
    const bool partials_ok = max_rel <= 1e-6;

    const auto system_cdf_at_54 = [&base](const std::vector<double>& theta) {
        ElsConfig cfg = base;
        cfg.theta = theta;
        return secord::cdf_second_largest(cfg, 54.0);
    };
    const std::vector<std::vector<double>> points = {
        {5, 9, 10}, {7, 10, 12}, {2, 3, 4}, {3, 7, 11}, {4, 6, 9}};
    const secord::ConditionReport rep =
        secord::schur_certify(system_cdf_at_54, secord::Cone::E_plus, secord::SchurMode::convex,
                              points);
    bool decreasing = false;
    for (const auto& s : rep.subconditions)
        if (s.name == "coordinatewise_decreasing") decreasing = s.holds;
    std::printf("[info] Schur certifier on ascending scale vectors: convex=%s, coordinatewise "
                "decreasing=%s (worst violation %.3e)\n",
                rep.holds ? "yes" : "no", decreasing ? "yes" : "no", rep.worst_violation);
    return partials_ok && rep.holds && decreasing;
}

// ---------------------------------------------------------------------------
// 12. Reversed-hazard dominance implies st dominance wherever it holds.
// ---------------------------------------------------------------------------

bool criterion_12() {
    int rh_holds_count = 0, violations = 0;
    const auto check_pair = [&](const ElsConfig& a, const ElsConfig& b, const GridSpec& grid,
                                const std::string& label) {
        secord::OrderCheckReport rh;
        try {
            rh = secord::check_order(a, b, OrderKind::rh, grid);
        } catch (const secord::error&) {
            return;  // reversed hazard undefined somewhere on this grid: out of scope
        }
        if (rh.verdict != Verdict::holds) return;
        ++rh_holds_count;
        const secord::OrderCheckReport st = secord::check_order(a, b, OrderKind::st, grid);
        if (st.verdict != Verdict::holds) {
            ++violations;
            std::printf("[info] VIOLATION at %s: rh holds but st %s (max violation %.6e)\n",
                        label.c_str(), secord::verdict_name(st.verdict), st.max_violation);
        }
    };

    for (const secord::Fixture& f : secord::fixture_registry()) {
        check_pair(f.x, f.y, f.grid, f.name + " X<=Y");
        check_pair(f.y, f.x, f.grid, f.name + " Y<=X");
    }

    // Accepted random trials of the reversed-hazard statement suite, rebuilt
    // with the same draw-and-screen loop the suite runner uses.
    const secord::TheoremSpec& spec = secord::find_theorem("T3_4");
    secord::Rng master(20260819);
    int accepted = 0;
    for (std::uint64_t attempt = 0; accepted < 60 && attempt < 5000; ++attempt) {
        secord::Rng r = master.substream(attempt);
        const secord::detail_thm::Candidate cand = secord::detail_thm::draw_candidate(spec, r);
        const auto hyps = secord::evaluate_hypotheses(spec, cand.x, cand.y);
        bool all_pass = true;
        for (const auto& h : hyps) all_pass = all_pass && h.pass;
        if (!all_pass) continue;
        ++accepted;
        check_pair(cand.x, cand.y, cand.grid, "T3_4 trial " + std::to_string(accepted));
    }
    std::printf("[info] rh-dominant cases examined: %d (8 fixtures both directions + %d suite "
                "trials); implication violations: %d\n",
                rh_holds_count, accepted, violations);
    return rh_holds_count > 0 && accepted == 60 && violations == 0;
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* summary;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "Ex3_1 CDF dominance within -1e-9 on the 4096-point grid in under 1 s", criterion_1},
    {2, "Ex3_2 reversed-hazard dominance below 1e-7 and closed/numeric agreement to 1e-6",
     criterion_2},
    {3, "CEx3_1 CDF difference changes sign at x = 5.9 +/- 0.3", criterion_3},
    {4, "CEx3_2 st conclusion fails; log-concavity and w^2 monotonicity blamed", criterion_4},
    {5, "CEx3_3 CDF difference changes sign on [1,50]; shape-cone hypothesis FAIL", criterion_5},
    {6, "Ex3_3i/Ex3_3ii st dominance in the stated directions within 1e-9", criterion_6},
    {7, "independent Monte Carlo within 3.7e-3 of the closed form, 3 configs, <30 s each",
     criterion_7},
    {8, "Independence reduction within 1e-12; Clayton(1) frailty MC within 3.5*stderr",
     criterion_8},
    {9, "property suites T3_1/T3_4/T3_9ii: zero inconsistencies in under 5 min", criterion_9},
    {10, "constructed majorization implies both weak orders; all preorders reflexive",
     criterion_10},
    {11, "scale partials match finite differences to 1e-6; certifier: convex/decreasing",
     criterion_11},
    {12, "rh dominance implies st dominance across fixtures and suite trials", criterion_12},
};

int run_one(const Criterion& c) {
    const bool pass = c.run();
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", c.id, c.summary);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <1..12|all>\n");
        return 2;
    }
    try {
        if (std::strcmp(argv[1], "all") == 0) {
            int failures = 0;
            for (const Criterion& c : kCriteria) failures += run_one(c);
            std::printf("%d/12 criteria passed\n", 12 - failures);
            return failures == 0 ? 0 : 1;
        }
        char* end = nullptr;
        const long id = std::strtol(argv[1], &end, 10);
        if (end == argv[1] || *end != '\0' || id < 1 || id > 12) {
            std::fprintf(stderr, "usage: acceptance <1..12|all>\n");
            return 2;
        }
        return run_one(kCriteria[id - 1]);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
