#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace secord {

/// Serializable description of a baseline distribution.
///
/// Registry families:
///   power_cap(a, c)          F(w) = (w/c)^a          on (0, c]
///   loglog                   F(w) = w/(1+w)          on (0, inf)
///   shifted_weibull_exp(a)   F(w) = 1 - e^{1-w^a}    on [1, inf)
struct BaselineSpec {
    std::string family;
    std::vector<double> params;
};

/// Point-evaluable baseline functions (the basic menu).
enum class BaselineFn { cdf, pdf, hazard, rev_hazard };

/// Derived baseline functions used by monotonicity hypotheses and the C1-C4
/// condition blocks. Notation: r(w) = reversed hazard f/F, z(w) = hazard
/// f/(1-F), h(w) = r(w)/z(w) = (1-F)/F.
enum class DerivedKind {
    rev_hazard,         ///< r(w)
    hazard,             ///< z(w)
    h_ratio,            ///< h(w)
    w_rev_hazard,       ///< w * r(w)
    w2_rev_hazard,      ///< w^2 * r(w)
    w2_d_w_rev_hazard,  ///< w^2 * d/dw [w * r(w)]
    h_prime,            ///< h'(w) = -f/F^2
    w_h_prime,          ///< w * h'(w)
    w2_h_prime,         ///< w^2 * h'(w)
    w2_d_w_h_prime,     ///< w^2 * d/dw [w * h'(w)]
    h_double_prime,     ///< h''(w)
};

inline const char* derived_kind_name(DerivedKind k) {
    switch (k) {
        case DerivedKind::rev_hazard:        return "rev_hazard";
        case DerivedKind::hazard:            return "hazard";
        case DerivedKind::h_ratio:           return "h_ratio";
        case DerivedKind::w_rev_hazard:      return "w_rev_hazard";
        case DerivedKind::w2_rev_hazard:     return "w2_rev_hazard";
        case DerivedKind::w2_d_w_rev_hazard: return "w2_d_w_rev_hazard";
        case DerivedKind::h_prime:           return "h_prime";
        case DerivedKind::w_h_prime:         return "w_h_prime";
        case DerivedKind::w2_h_prime:        return "w2_h_prime";
        case DerivedKind::w2_d_w_h_prime:    return "w2_d_w_h_prime";
        case DerivedKind::h_double_prime:    return "h_double_prime";
    }
    return "unknown";
}

enum class Direction { increasing, decreasing };

inline const char* direction_name(Direction d) {
    return d == Direction::increasing ? "increasing" : "decreasing";
}

/// Result of a single monotonicity/convexity certification.
struct Subcondition {
    std::string name;
    bool holds = false;
    double worst_violation = 0.0;  // 0 when the property holds with margin
    double witness_w = 0.0;        // abscissa of the worst violation
};

/// Aggregate report; `subconditions` is empty for single-property checks.
struct ConditionReport {
    bool holds = false;
    double worst_violation = 0.0;
    double witness_w = 0.0;
    std::vector<Subcondition> subconditions;
    std::string note;  ///< optional free-form diagnostics (e.g. skipped trials)
};

enum class ConditionBlock { C1, C2, C3, C4 };

inline const char* condition_block_name(ConditionBlock b) {
    switch (b) {
        case ConditionBlock::C1: return "C1";
        case ConditionBlock::C2: return "C2";
        case ConditionBlock::C3: return "C3";
        case ConditionBlock::C4: return "C4";
    }
    return "?";
}

/// Tolerance for "monotone in the wide sense": consecutive differences may
/// undershoot the required sign by at most this amount, so constants certify
/// as both increasing and decreasing.
inline constexpr double monotone_tolerance = 1e-10;

/// Denominators smaller than this are treated as vanished.
inline constexpr double degenerate_tolerance = 1e-15;

/// A baseline distribution with closed-form CDF/PDF/quantile and a table of
/// closed derived functions where available (finite differences otherwise).
class Baseline {
  public:
    static Baseline make(const BaselineSpec& spec) {
        if (spec.family == "PowerCap" || spec.family == "power_cap") {
            if (spec.params.size() != 2)
                raise(errc::invalid_config, "PowerCap expects params (a, c)");
            return power_cap(spec.params[0], spec.params[1]);
        }
        if (spec.family == "Loglog" || spec.family == "loglog") {
            if (!spec.params.empty())
                raise(errc::invalid_config, "Loglog expects no params");
            return loglog();
        }
        if (spec.family == "ShiftedWeibullExp" || spec.family == "shifted_weibull_exp") {
            if (spec.params.size() != 1)
                raise(errc::invalid_config, "ShiftedWeibullExp expects params (a)");
            return shifted_weibull_exp(spec.params[0]);
        }
        raise(errc::invalid_config, "unknown baseline family '" + spec.family + "'");
    }

    static Baseline power_cap(double a, double c) {
        if (!(a > 0.0) || !(c > 0.0))
            raise(errc::invalid_config, "PowerCap requires a > 0 and c > 0");
        Baseline b;
        b.spec_ = {"PowerCap", {a, c}};
        b.family_ = Family::power_cap;
        b.lo_ = 0.0;
        b.hi_ = c;
        return b;
    }

    static Baseline loglog() {
        Baseline b;
        b.spec_ = {"Loglog", {}};
        b.family_ = Family::loglog;
        b.lo_ = 0.0;
        b.hi_ = std::numeric_limits<double>::infinity();
        return b;
    }

    static Baseline shifted_weibull_exp(double a) {
        if (!(a > 0.0))
            raise(errc::invalid_config, "ShiftedWeibullExp requires a > 0");
        Baseline b;
        b.spec_ = {"ShiftedWeibullExp", {a}};
        b.family_ = Family::shifted_weibull_exp;
        b.lo_ = 1.0;
        b.hi_ = std::numeric_limits<double>::infinity();
        return b;
    }

    const BaselineSpec& spec() const { return spec_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    bool bounded_above() const { return std::isfinite(hi_); }

    /// CDF; defined on the support closure (value 0 at the lower endpoint,
    /// 1 at a finite upper endpoint).
    double cdf(double w) const {
        if (!(w >= lo_) || !(w <= hi_)) out_of_support("cdf", w);
        double v = 0.0;
        switch (family_) {
            case Family::power_cap:
                v = std::pow(w / spec_.params[1], spec_.params[0]);
                break;
            case Family::loglog:
                v = w / (1.0 + w);
                break;
            case Family::shifted_weibull_exp:
                v = -std::expm1(1.0 - std::pow(w, spec_.params[0]));
                break;
        }
        return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }

    /// Density; support interior only.
    double pdf(double w) const {
        require_interior("pdf", w);
        switch (family_) {
            case Family::power_cap: {
                const double a = spec_.params[0], c = spec_.params[1];
                return (a / c) * std::pow(w / c, a - 1.0);
            }
            case Family::loglog: {
                const double d = 1.0 + w;
                return 1.0 / (d * d);
            }
            case Family::shifted_weibull_exp: {
                const double a = spec_.params[0];
                return a * std::pow(w, a - 1.0) * std::exp(1.0 - std::pow(w, a));
            }
        }
        return 0.0;
    }

    /// Inverse CDF for p in (0,1).
    double quantile(double p) const {
        if (!(p > 0.0) || !(p < 1.0))
            raise(errc::invalid_probability,
                  "quantile requires p in (0,1), got " + std::to_string(p));
        switch (family_) {
            case Family::power_cap:
                return spec_.params[1] * std::pow(p, 1.0 / spec_.params[0]);
            case Family::loglog:
                return p / (1.0 - p);
            case Family::shifted_weibull_exp:
                return std::pow(1.0 - std::log1p(-p), 1.0 / spec_.params[0]);
        }
        return 0.0;
    }

    /// Reversed hazard f/F.
    double rev_hazard(double w) const {
        require_interior("rev_hazard", w);
        switch (family_) {
            case Family::power_cap:
                return spec_.params[0] / w;
            case Family::loglog:
                return 1.0 / (w * (1.0 + w));
            case Family::shifted_weibull_exp: {
                const double F = cdf(w);
                if (F <= degenerate_tolerance)
                    raise(errc::degenerate_denominator,
                          "rev_hazard: cdf vanishes at w=" + std::to_string(w));
                return pdf(w) / F;
            }
        }
        return 0.0;
    }

    /// Hazard f/(1-F).
    double hazard(double w) const {
        require_interior("hazard", w);
        switch (family_) {
            case Family::power_cap: {
                const double q = cdf(w);
                if (1.0 - q <= degenerate_tolerance)
                    raise(errc::degenerate_denominator,
                          "hazard: survival vanishes at w=" + std::to_string(w));
                return (spec_.params[0] / w) * q / (1.0 - q);
            }
            case Family::loglog:
                return 1.0 / (1.0 + w);
            case Family::shifted_weibull_exp: {
                const double a = spec_.params[0];
                return a * std::pow(w, a - 1.0);
            }
        }
        return 0.0;
    }

    double eval(BaselineFn which, double w) const {
        switch (which) {
            case BaselineFn::cdf:        return cdf(w);
            case BaselineFn::pdf:        return pdf(w);
            case BaselineFn::hazard:     return hazard(w);
            case BaselineFn::rev_hazard: return rev_hazard(w);
        }
        return 0.0;
    }

    /// True when `kind` has a closed form for this family (no finite
    /// differences involved).
    bool derived_is_closed(DerivedKind kind) const {
        if (family_ == Family::shifted_weibull_exp)
            return kind != DerivedKind::w2_d_w_rev_hazard &&
                   kind != DerivedKind::w2_d_w_h_prime && kind != DerivedKind::h_double_prime;
        return true;
    }

    /// Evaluates a derived function at interior point w. `fd_step` is the
    /// central-difference step used for derivative kinds with no closed form;
    /// it is shrunk automatically near the support boundary.
    double derived(DerivedKind kind, double w, double fd_step) const {
        require_interior(derived_kind_name(kind), w);
        switch (family_) {
            case Family::power_cap:           return derived_power_cap(kind, w);
            case Family::loglog:              return derived_loglog(kind, w);
            case Family::shifted_weibull_exp: return derived_generic(kind, w, fd_step);
        }
        return 0.0;
    }

  private:
    enum class Family { power_cap, loglog, shifted_weibull_exp };

    [[noreturn]] void out_of_support(const char* what, double w) const {
        raise(errc::out_of_support, spec_.family + "." + what + ": w=" + std::to_string(w) +
                                        " outside support [" + std::to_string(lo_) + ", " +
                                        (bounded_above() ? std::to_string(hi_) : "inf") + "]");
    }

    void require_interior(const char* what, double w) const {
        if (!(w > lo_) || !(w < hi_)) out_of_support(what, w);
    }

    double derived_power_cap(DerivedKind kind, double w) const {
        const double a = spec_.params[0], c = spec_.params[1];
        const double q = std::pow(w / c, a);  // = F(w)
        switch (kind) {
            case DerivedKind::rev_hazard:        return a / w;
            case DerivedKind::hazard:            return hazard(w);
            case DerivedKind::h_ratio:           return (1.0 - q) / q;
            case DerivedKind::w_rev_hazard:      return a;
            case DerivedKind::w2_rev_hazard:     return a * w;
            case DerivedKind::w2_d_w_rev_hazard: return 0.0;
            case DerivedKind::h_prime:           return -(a / w) / q;
            case DerivedKind::w_h_prime:         return -a / q;
            case DerivedKind::w2_h_prime:        return -a * w / q;
            case DerivedKind::w2_d_w_h_prime:    return a * a * w / q;
            case DerivedKind::h_double_prime:    return a * (a + 1.0) / (w * w * q);
        }
        return 0.0;
    }

    double derived_loglog(DerivedKind kind, double w) const {
        const double d = 1.0 + w;
        switch (kind) {
            case DerivedKind::rev_hazard:        return 1.0 / (w * d);
            case DerivedKind::hazard:            return 1.0 / d;
            case DerivedKind::h_ratio:           return 1.0 / w;
            case DerivedKind::w_rev_hazard:      return 1.0 / d;
            case DerivedKind::w2_rev_hazard:     return w / d;
            case DerivedKind::w2_d_w_rev_hazard: return -(w * w) / (d * d);
            case DerivedKind::h_prime:           return -1.0 / (w * w);
            case DerivedKind::w_h_prime:         return -1.0 / w;
            case DerivedKind::w2_h_prime:        return -1.0;
            case DerivedKind::w2_d_w_h_prime:    return 1.0;
            case DerivedKind::h_double_prime:    return 2.0 / (w * w * w);
        }
        return 0.0;
    }

    /// Closed compositions where direct (r, z, h, h'), single-level central
    /// differences for the derivative composites.
    double derived_generic(DerivedKind kind, double w, double fd_step) const {
        switch (kind) {
            case DerivedKind::rev_hazard: return rev_hazard(w);
            case DerivedKind::hazard:     return hazard(w);
            case DerivedKind::h_ratio: {
                const double F = cdf(w);
                if (F <= degenerate_tolerance)
                    raise(errc::degenerate_denominator,
                          "h_ratio: cdf vanishes at w=" + std::to_string(w));
                return (1.0 - F) / F;
            }
            case DerivedKind::w_rev_hazard:  return w * rev_hazard(w);
            case DerivedKind::w2_rev_hazard: return w * w * rev_hazard(w);
            case DerivedKind::h_prime: {
                const double F = cdf(w);
                if (F <= degenerate_tolerance)
                    raise(errc::degenerate_denominator,
                          "h_prime: cdf vanishes at w=" + std::to_string(w));
                return -pdf(w) / (F * F);
            }
            case DerivedKind::w_h_prime:
                return w * derived_generic(DerivedKind::h_prime, w, fd_step);
            case DerivedKind::w2_h_prime:
                return w * w * derived_generic(DerivedKind::h_prime, w, fd_step);
            case DerivedKind::w2_d_w_rev_hazard:
                return w * w * central_diff(DerivedKind::w_rev_hazard, w, fd_step);
            case DerivedKind::w2_d_w_h_prime:
                return w * w * central_diff(DerivedKind::w_h_prime, w, fd_step);
            case DerivedKind::h_double_prime:
                return central_diff(DerivedKind::h_prime, w, fd_step);
        }
        return 0.0;
    }

    double central_diff(DerivedKind base, double w, double fd_step) const {
        double h = fd_step;
        // Keep both probes strictly inside the support.
        const double room_lo = 0.45 * (w - lo_);
        if (h > room_lo) h = room_lo;
        if (bounded_above()) {
            const double room_hi = 0.45 * (hi_ - w);
            if (h > room_hi) h = room_hi;
        }
        if (!(h > 0.0))
            raise(errc::out_of_support,
                  "derivative probe would leave the support at w=" + std::to_string(w));
        const double up = derived_generic(base, w + h, fd_step);
        const double dn = derived_generic(base, w - h, fd_step);
        return (up - dn) / (2.0 * h);
    }

    BaselineSpec spec_;
    Family family_ = Family::loglog;
    double lo_ = 0.0;
    double hi_ = 0.0;
};

namespace detail {

inline void require_monotone_grid(const Baseline& b, const GridSpec& grid) {
    if (grid.points < 64)
        raise(errc::invalid_config, "monotonicity grid needs at least 64 points, got " +
                                        std::to_string(grid.points));
    if (!(grid.lo > b.support_lo()) || !(grid.hi < b.support_hi()))
        raise(errc::out_of_support, "grid [" + std::to_string(grid.lo) + ", " +
                                        std::to_string(grid.hi) +
                                        "] is not inside the support interior of " +
                                        b.spec().family);
}

inline std::vector<double> derived_values(const Baseline& b, DerivedKind kind,
                                          const GridSpec& grid) {
    const auto ws = grid.values();
    const double step = grid.spacing();
    std::vector<double> vals(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) vals[i] = b.derived(kind, ws[i], step);
    return vals;
}

/// Worst violation of the required sign among consecutive differences;
/// positive result means the property is violated by that amount somewhere.
inline Subcondition scan_monotone(const std::vector<double>& vals,
                                  const std::vector<double>& ws, Direction dir,
                                  const std::string& name) {
    Subcondition sub;
    sub.name = name;
    double worst = 0.0;
    double witness = ws.front();
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        const double d = vals[i + 1] - vals[i];
        const double viol = dir == Direction::increasing ? -d : d;
        if (viol > worst) {
            worst = viol;
            witness = ws[i + 1];
        }
    }
    sub.worst_violation = worst;
    sub.witness_w = witness;
    sub.holds = worst <= monotone_tolerance;
    return sub;
}

/// Convexity via nonnegative second differences.
inline Subcondition scan_convex(const std::vector<double>& vals, const std::vector<double>& ws,
                                const std::string& name) {
    Subcondition sub;
    sub.name = name;
    double worst = 0.0;
    double witness = ws.front();
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        const double second = vals[i + 1] - 2.0 * vals[i] + vals[i - 1];
        if (-second > worst) {
            worst = -second;
            witness = ws[i];
        }
    }
    sub.worst_violation = worst;
    sub.witness_w = witness;
    sub.holds = worst <= monotone_tolerance;
    return sub;
}

inline ConditionReport from_subconditions(std::vector<Subcondition> subs) {
    ConditionReport rep;
    rep.holds = true;
    rep.worst_violation = 0.0;
    rep.witness_w = subs.empty() ? 0.0 : subs.front().witness_w;
    for (const auto& s : subs) {
        if (!s.holds) rep.holds = false;
        if (s.worst_violation > rep.worst_violation) {
            rep.worst_violation = s.worst_violation;
            rep.witness_w = s.witness_w;
        }
    }
    rep.subconditions = std::move(subs);
    return rep;
}

} // namespace detail

/// Certifies that a derived baseline function is monotone in the stated
/// direction over the grid (wide sense: constants pass either direction).
inline ConditionReport check_monotone(const Baseline& b, DerivedKind kind, Direction dir,
                                      const GridSpec& grid) {
    detail::require_monotone_grid(b, grid);
    const auto ws = grid.values();
    const auto vals = detail::derived_values(b, kind, grid);
    auto sub = detail::scan_monotone(vals, ws, dir,
                                     std::string(derived_kind_name(kind)) + " " +
                                         direction_name(dir));
    ConditionReport rep;
    rep.holds = sub.holds;
    rep.worst_violation = sub.worst_violation;
    rep.witness_w = sub.witness_w;
    return rep;
}

/// Certifies convexity of a derived baseline function over the grid.
inline ConditionReport check_convex(const Baseline& b, DerivedKind kind, const GridSpec& grid) {
    detail::require_monotone_grid(b, grid);
    const auto ws = grid.values();
    const auto vals = detail::derived_values(b, kind, grid);
    auto sub = detail::scan_convex(vals, ws, std::string(derived_kind_name(kind)) + " convex");
    ConditionReport rep;
    rep.holds = sub.holds;
    rep.worst_violation = sub.worst_violation;
    rep.witness_w = sub.witness_w;
    return rep;
}

/// Certifies one of the four baseline condition blocks gating the
/// reversed-hazard-rate comparison theorems. Derivative estimates use central
/// differences with step equal to the grid spacing.
inline ConditionReport check_condition_block(const Baseline& b, ConditionBlock block,
                                             const GridSpec& grid) {
    detail::require_monotone_grid(b, grid);
    const auto ws = grid.values();
    const auto mono = [&](DerivedKind kind, Direction dir) {
        const auto vals = detail::derived_values(b, kind, grid);
        return detail::scan_monotone(vals, ws, dir,
                                     std::string(derived_kind_name(kind)) + " " +
                                         direction_name(dir));
    };
    const auto convex = [&](DerivedKind kind) {
        const auto vals = detail::derived_values(b, kind, grid);
        return detail::scan_convex(vals, ws, std::string(derived_kind_name(kind)) + " convex");
    };

    std::vector<Subcondition> subs;
    switch (block) {
        case ConditionBlock::C1:
            subs.push_back(mono(DerivedKind::w2_d_w_rev_hazard, Direction::decreasing));
            subs.push_back(mono(DerivedKind::h_ratio, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_h_prime, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_d_w_h_prime, Direction::decreasing));
            break;
        case ConditionBlock::C2:
            subs.push_back(convex(DerivedKind::rev_hazard));
            subs.push_back(mono(DerivedKind::h_ratio, Direction::decreasing));
            subs.push_back(convex(DerivedKind::h_ratio));
            subs.push_back(mono(DerivedKind::h_double_prime, Direction::increasing));
            break;
        case ConditionBlock::C3:
            subs.push_back(mono(DerivedKind::w_rev_hazard, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_d_w_rev_hazard, Direction::decreasing));
            subs.push_back(mono(DerivedKind::h_ratio, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w_h_prime, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_h_prime, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_d_w_h_prime, Direction::decreasing));
            break;
        case ConditionBlock::C4:
            subs.push_back(mono(DerivedKind::w_rev_hazard, Direction::decreasing));
            subs.push_back(mono(DerivedKind::h_ratio, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w_h_prime, Direction::decreasing));
            subs.push_back(mono(DerivedKind::w2_h_prime, Direction::increasing));
            subs.push_back(mono(DerivedKind::w2_d_w_rev_hazard, Direction::increasing));
            subs.push_back(mono(DerivedKind::w2_d_w_h_prime, Direction::increasing));
            break;
    }
    return detail::from_subconditions(std::move(subs));
}

} // namespace secord
