#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "copula.hpp"
#include "els.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "rng.hpp"

namespace secord {

/// CDF of the second-largest of n independent component lifetimes:
///   sum_l prod_{k != l} F_k(x) - (n-1) prod_k F_k(x),
/// clamped to [0,1]; 0 at or below the largest location by convention.
inline double cdf_second_largest_indep(const ElsConfig& cfg, double x) {
    if (cfg.generator)
        raise(errc::invalid_config, "cdf_second_largest_indep requires independent components");
    if (x <= max_location(cfg)) return 0.0;
    const Baseline b = Baseline::make(cfg.baseline);
    const std::size_t n = cfg.n();
    std::vector<double> F(n);
    for (std::size_t k = 0; k < n; ++k) F[k] = detail::component_cdf_b(cfg, b, k, x);

    double total = 0.0, prod_all = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
        double p = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != l) p *= F[k];
        total += p;
        prod_all *= F[l];
    }
    total -= static_cast<double>(n - 1) * prod_all;
    return total < 0.0 ? 0.0 : (total > 1.0 ? 1.0 : total);
}

/// System CDF with automatic dispatch on the dependence structure.
inline double cdf_second_largest(const ElsConfig& cfg, double x) {
    return cfg.generator ? cdf_second_largest_dep(cfg, x) : cdf_second_largest_indep(cfg, x);
}

enum class RhMethod { closed_form, numeric_logderiv };

namespace detail {

/// Start of component i's support: location plus scaled baseline lower
/// endpoint.
inline double component_support_start(const ElsConfig& cfg, const Baseline& b, std::size_t i) {
    return cfg.lambda[i] + cfg.theta[i] * b.support_lo();
}

/// x below which the system CDF is identically zero: the second-smallest
/// component support start (the second largest lifetime needs n-1 live
/// components).
inline double system_support_start(const ElsConfig& cfg, const Baseline& b) {
    std::vector<double> s(cfg.n());
    for (std::size_t i = 0; i < cfg.n(); ++i) s[i] = component_support_start(cfg, b, i);
    std::sort(s.begin(), s.end());
    return s[1];
}

/// Central log-derivative of a CDF evaluator with boundary-aware step
/// halving. `x0` anchors the step length to the distance from the support
/// start.
inline double numeric_log_derivative(const std::function<double(double)>& cdf, double x,
                                     double x0) {
    const double f0 = cdf(x);
    if (!(f0 > 0.0))
        raise(errc::degenerate_denominator,
              "system cdf vanishes at x=" + std::to_string(x));
    double h = 3e-4 * (x - x0);
    if (!(h > 0.0))
        raise(errc::degenerate_denominator,
              "x=" + std::to_string(x) + " is not above the system support start " +
                  std::to_string(x0));
    double lo = cdf(x - h);
    for (int halvings = 0; !(lo > 0.0) && halvings < 60; ++halvings) {
        h *= 0.5;
        lo = cdf(x - h);
    }
    if (!(lo > 0.0))
        raise(errc::degenerate_denominator,
              "system cdf vanishes arbitrarily close below x=" + std::to_string(x));
    const double hi = cdf(x + h);
    return (std::log(hi) - std::log(lo)) / (2.0 * h);
}

} // namespace detail

/// Reversed hazard rate of the independent second-largest lifetime.
///
/// closed_form (all shapes equal 1): with w_i = (x - lambda_i)/theta_i,
/// h = (1-F_b)/F_b and h' = -f_b/F_b^2,
///   r(x) = sum_i r_b(w_i)/theta_i + [sum_i h'(w_i)/theta_i] / (1 + sum_i h(w_i)),
/// where saturated components (F_i = 1) drop out of every sum and, when
/// exactly one component has F_i = 0, the surviving product term reduces the
/// rate to the sum over live components.
///
/// numeric_logderiv (any shapes): central difference of log F_{n-1:n}.
inline double rh_second_largest_indep(const ElsConfig& cfg, double x, RhMethod method) {
    if (cfg.generator)
        raise(errc::invalid_config, "rh_second_largest_indep requires independent components");
    const Baseline b = Baseline::make(cfg.baseline);

    if (method == RhMethod::numeric_logderiv) {
        const double x0 = detail::system_support_start(cfg, b);
        return detail::numeric_log_derivative(
            [&](double t) { return cdf_second_largest_indep(cfg, t); }, x, x0);
    }

    for (std::size_t i = 0; i < cfg.n(); ++i)
        if (cfg.alpha[i] != 1.0)
            raise(errc::shape_not_unit, "closed_form requires alpha[" + std::to_string(i) +
                                            "] = 1, got " + std::to_string(cfg.alpha[i]));

    const std::size_t n = cfg.n();
    std::size_t dead = 0;
    double rate_sum = 0.0, h_sum = 0.0, hp_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (x - cfg.lambda[i]) / cfg.theta[i];
        if (!(w > b.support_lo())) {
            ++dead;
            continue;
        }
        if (b.bounded_above() && w >= b.support_hi()) continue;  // F_i = 1: inert
        const double inv_theta = 1.0 / cfg.theta[i];
        rate_sum += inv_theta * b.rev_hazard(w);
        h_sum += b.derived(DerivedKind::h_ratio, w, 0.0);
        hp_sum += inv_theta * b.derived(DerivedKind::h_prime, w, 0.0);
    }
    if (dead >= 2)
        raise(errc::degenerate_denominator,
              "system cdf is 0 at x=" + std::to_string(x) + " (" + std::to_string(dead) +
                  " components below support)");
    if (dead == 1) return rate_sum;  // only the (n-1)-subset product survives
    return rate_sum + hp_sum / (1.0 + h_sum);
}

/// Reversed hazard rate with automatic method/dependence dispatch: the closed
/// form for independent unit-shape systems, the numeric log-derivative of the
/// appropriate CDF otherwise.
inline double rh_second_largest(const ElsConfig& cfg, double x) {
    const Baseline b = Baseline::make(cfg.baseline);
    if (!cfg.generator) {
        bool unit = true;
        for (double a : cfg.alpha)
            if (a != 1.0) unit = false;
        if (unit) return rh_second_largest_indep(cfg, x, RhMethod::closed_form);
        return rh_second_largest_indep(cfg, x, RhMethod::numeric_logderiv);
    }
    const double x0 = detail::system_support_start(cfg, b);
    return detail::numeric_log_derivative(
        [&](double t) { return cdf_second_largest_dep(cfg, t); }, x, x0);
}

/// Analytic partial derivative of the independent system CDF with respect to
/// scale theta_i at fixed x:
///   -(alpha_i w^2 r_b(w)/(x - lambda_i)) *
///     [ sum_{l != i} prod_{k != l} F_k - (n-1) prod_k F_k ],  w = (x-lambda_i)/theta_i.
/// Cross-validates the finite-difference Schur certifier.
inline double partial_scale_cdf_indep(const ElsConfig& cfg, std::size_t i, double x) {
    if (cfg.generator)
        raise(errc::invalid_config, "partial_scale_cdf_indep requires independent components");
    detail::require_index(cfg, i);
    const Baseline b = Baseline::make(cfg.baseline);
    const double w = (x - cfg.lambda[i]) / cfg.theta[i];
    if (!(w > b.support_lo())) return 0.0;                      // F_i locally constant 0
    if (b.bounded_above() && w >= b.support_hi()) return 0.0;   // F_i locally constant 1

    const std::size_t n = cfg.n();
    std::vector<double> F(n);
    for (std::size_t k = 0; k < n; ++k) F[k] = detail::component_cdf_b(cfg, b, k, x);
    double bracket = 0.0, prod_all = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
        if (l != i) {
            double p = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != l) p *= F[k];
            bracket += p;
        }
        prod_all *= F[l];
    }
    bracket -= static_cast<double>(n - 1) * prod_all;
    return -(cfg.alpha[i] * w * w * b.rev_hazard(w) / (x - cfg.lambda[i])) * bracket;
}

enum class OrderKind { st, rh };

inline const char* order_kind_name(OrderKind k) { return k == OrderKind::st ? "st" : "rh"; }

enum class Verdict { holds, fails, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds:        return "holds";
        case Verdict::fails:        return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Grid-certified result of an order comparison "X <=_order Y".
struct OrderCheckReport {
    OrderKind order = OrderKind::st;
    Verdict verdict = Verdict::inconclusive;
    double max_violation = 0.0;             ///< signed; <= tol when holds
    std::optional<double> violation_x;      ///< witness abscissa when fails
    std::optional<double> crossing_x;       ///< leftmost sign change if any
    GridSpec grid;                          ///< effective evaluation grid
};

inline constexpr double st_tolerance = 1e-9;
inline constexpr double rh_rel_tolerance = 1e-7;

namespace detail {

struct OrderScan {
    bool fails = false;
    double max_violation = -std::numeric_limits<double>::infinity();
    double violation_x = 0.0;
    std::optional<double> crossing_lo, crossing_hi;  // bracket of first sign change
};

/// Scans violation values (one per grid point, each with its own tolerance)
/// and finds the first sign-change bracket; values within 1e-15 of zero are
/// treated as flat ties.
inline OrderScan scan_order(const std::vector<double>& xs, const std::vector<double>& vio,
                            const std::vector<double>& tol) {
    OrderScan scan;
    int last_sign = 0;
    double last_sign_x = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double v = vio[i];
        if (v > scan.max_violation) {
            scan.max_violation = v;
            scan.violation_x = xs[i];
        }
        if (v > tol[i]) scan.fails = true;
        if (!scan.crossing_lo) {
            const int sign = v > 1e-15 ? 1 : (v < -1e-15 ? -1 : 0);
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign) {
                    scan.crossing_lo = last_sign_x;
                    scan.crossing_hi = xs[i];
                }
                last_sign = sign;
                last_sign_x = xs[i];
            }
        }
    }
    return scan;
}

/// Bisects a bracketed sign change of f to the requested width; returns the
/// midpoint.
inline double bisect_sign_change(const std::function<double(double)>& f, double a, double b,
                                 double width) {
    double fa = f(a);
    for (int it = 0; it < 200 && (b - a) > width; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        const bool same_side = (fa > 0.0 && fm > 0.0) || (fa < 0.0 && fm < 0.0);
        if (same_side) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// Grid-based certification of "X <=_order Y".
///
/// st: F_X must dominate F_Y within an absolute tolerance. rh: the reversed
/// hazard of X must not exceed that of Y within a relative tolerance. A
/// once-doubled refinement grid must reproduce the verdict, otherwise the
/// report is inconclusive. For rh on baselines with bounded upper support the
/// grid is truncated short of the saturation point.
inline OrderCheckReport check_order(const ElsConfig& cfgX, const ElsConfig& cfgY,
                                    OrderKind order, const GridSpec& grid) {
    validate_config(cfgX);
    validate_config(cfgY);
    const double max_loc = std::max(max_location(cfgX), max_location(cfgY));
    if (!(grid.lo > max_loc))
        raise(errc::grid_below_location, "grid.lo=" + std::to_string(grid.lo) +
                                             " must exceed the largest location " +
                                             std::to_string(max_loc));

    GridSpec eff = grid;
    if (order == OrderKind::rh) {
        const Baseline bX = Baseline::make(cfgX.baseline);
        const Baseline bY = Baseline::make(cfgY.baseline);
        double saturation = std::numeric_limits<double>::infinity();
        const auto fold = [&saturation](const ElsConfig& c, const Baseline& b) {
            if (!b.bounded_above()) return;
            for (std::size_t i = 0; i < c.n(); ++i)
                saturation = std::min(saturation,
                                      c.lambda[i] + c.theta[i] * b.support_hi());
        };
        fold(cfgX, bX);
        fold(cfgY, bY);
        if (std::isfinite(saturation)) {
            const double hi_eff = std::min(grid.hi, saturation - 1e-4 * (grid.hi - grid.lo));
            if (!(hi_eff > grid.lo))
                raise(errc::invalid_config,
                      "rh grid collapses: saturation point " + std::to_string(saturation) +
                          " is at or below grid.lo");
            eff = GridSpec(grid.lo, hi_eff, grid.points);
        }
    }

    // Violation function: positive values count against "X <= Y".
    std::function<double(double)> violation;
    if (order == OrderKind::st) {
        violation = [&cfgX, &cfgY](double x) {
            return cdf_second_largest(cfgY, x) - cdf_second_largest(cfgX, x);
        };
    } else {
        violation = [&cfgX, &cfgY](double x) {
            return rh_second_largest(cfgX, x) - rh_second_largest(cfgY, x);
        };
    }

    const auto scan_grid = [&](const GridSpec& g) {
        const auto xs = g.values();
        std::vector<double> vio(xs.size()), tol(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            if (order == OrderKind::st) {
                vio[i] = cdf_second_largest(cfgY, x) - cdf_second_largest(cfgX, x);
                tol[i] = st_tolerance;
            } else {
                const double rx = rh_second_largest(cfgX, x);
                const double ry = rh_second_largest(cfgY, x);
                vio[i] = rx - ry;
                tol[i] = rh_rel_tolerance * std::max({1.0, std::fabs(rx), std::fabs(ry)});
            }
        }
        return detail::scan_order(xs, vio, tol);
    };
    const auto base = scan_grid(eff);
    const auto fine = scan_grid(eff.doubled());

    OrderCheckReport rep;
    rep.order = order;
    rep.grid = eff;
    rep.max_violation = base.max_violation;
    const Verdict vb = base.fails ? Verdict::fails : Verdict::holds;
    const Verdict vf = fine.fails ? Verdict::fails : Verdict::holds;
    rep.verdict = vb == vf ? vb : Verdict::inconclusive;
    if (rep.verdict == Verdict::fails) rep.violation_x = base.violation_x;
    if (base.crossing_lo)
        rep.crossing_x = detail::bisect_sign_change(violation, *base.crossing_lo,
                                                    *base.crossing_hi,
                                                    1e-3 * (eff.hi - eff.lo));
    return rep;
}

/// Monte Carlo CDF of the independent second-largest lifetime at each probe
/// in `xs`, sharing one deterministic sample set across probes.
inline std::vector<McEstimate> mc_cdf_second_largest_multi(const ElsConfig& cfg,
                                                           const std::vector<double>& xs,
                                                           long samples, int seed) {
    if (cfg.generator)
        raise(errc::invalid_config, "mc_cdf_second_largest requires independent components");
    if (samples <= 0) raise(errc::invalid_config, "samples must be positive");
    const Baseline b = Baseline::make(cfg.baseline);
    const std::size_t n = cfg.n();
    const double max_lambda = max_location(cfg);

    std::vector<long> hits(xs.size(), 0);
    std::vector<double> comps(n);
    Rng root(static_cast<std::uint64_t>(seed));
    for (long s = 0; s < samples; ++s) {
        Rng sr = root.substream(static_cast<std::uint64_t>(s));
        for (std::size_t i = 0; i < n; ++i)
            comps[i] = detail::sample_component_b(cfg, b, i, sr.next_uniform());
        double first = -std::numeric_limits<double>::infinity(), second = first;
        for (std::size_t i = 0; i < n; ++i) {
            if (comps[i] > first) {
                second = first;
                first = comps[i];
            } else if (comps[i] > second) {
                second = comps[i];
            }
        }
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (second <= xs[j]) ++hits[j];
    }

    std::vector<McEstimate> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] <= max_lambda) {
            out[j] = {0.0, 0.0};  // below the supported range by convention
            continue;
        }
        const double p = static_cast<double>(hits[j]) / static_cast<double>(samples);
        out[j] = {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
    }
    return out;
}

inline McEstimate mc_cdf_second_largest(const ElsConfig& cfg, double x, long samples,
                                        int seed) {
    return mc_cdf_second_largest_multi(cfg, {x}, samples, seed).front();
}

enum class CsvKind { cdf, rh };

/// Deterministic CSV text comparing the two systems over the grid. Columns:
///   cdf: x,F_X,F_Y,diff   (diff = F_X - F_Y)
///   rh:  x,rh_X,rh_Y,diff (diff = rh_X - rh_Y)
/// Values are printed with 17 significant digits so reruns are byte-identical.
inline std::string order_csv(const ElsConfig& cfgX, const ElsConfig& cfgY, const GridSpec& grid,
                             CsvKind kind) {
    validate_config(cfgX);
    validate_config(cfgY);
    std::string out = kind == CsvKind::cdf ? "x,F_X,F_Y,diff\n" : "x,rh_X,rh_Y,diff\n";
    char buf[160];
    for (double x : grid.values()) {
        double vx, vy;
        if (kind == CsvKind::cdf) {
            vx = cdf_second_largest(cfgX, x);
            vy = cdf_second_largest(cfgY, x);
        } else {
            vx = rh_second_largest(cfgX, x);
            vy = rh_second_largest(cfgY, x);
        }
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x, vx, vy, vx - vy);
        out += buf;
    }
    return out;
}

} // namespace secord
