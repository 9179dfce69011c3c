#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "baseline.hpp"
#include "errors.hpp"

namespace secord {

/// Serializable description of an Archimedean-copula generator (interpreted
/// by the dependence module; absent generator means independent components).
struct GeneratorSpec {
    std::string family;
    std::vector<double> params;
};

/// An n-component system where component i has lifetime CDF
///   F_i(x) = [F_b((x - lambda_i)/theta_i)]^{alpha_i}
/// for a common baseline F_b. The joint law is either independent (no
/// generator) or the Archimedean copula described by `generator`.
struct ElsConfig {
    BaselineSpec baseline;
    std::vector<double> lambda;  ///< locations, >= 0
    std::vector<double> theta;   ///< scales, > 0
    std::vector<double> alpha;   ///< shapes, > 0
    std::optional<GeneratorSpec> generator;

    std::size_t n() const { return lambda.size(); }
};

/// Validates vector lengths and parameter ranges; error messages name the
/// offending field and index.
inline void validate_config(const ElsConfig& cfg) {
    const std::size_t n = cfg.lambda.size();
    if (n < 2)
        raise(errc::invalid_config,
              "lambda: need at least 2 components, got " + std::to_string(n));
    if (cfg.theta.size() != n)
        raise(errc::invalid_config, "theta: length " + std::to_string(cfg.theta.size()) +
                                        " does not match lambda length " + std::to_string(n));
    if (cfg.alpha.size() != n)
        raise(errc::invalid_config, "alpha: length " + std::to_string(cfg.alpha.size()) +
                                        " does not match lambda length " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(cfg.lambda[i]) || cfg.lambda[i] < 0.0)
            raise(errc::invalid_config, "lambda[" + std::to_string(i) + "] must be >= 0, got " +
                                            std::to_string(cfg.lambda[i]));
        if (!std::isfinite(cfg.theta[i]) || !(cfg.theta[i] > 0.0))
            raise(errc::invalid_config, "theta[" + std::to_string(i) + "] must be > 0, got " +
                                            std::to_string(cfg.theta[i]));
        if (!std::isfinite(cfg.alpha[i]) || !(cfg.alpha[i] > 0.0))
            raise(errc::invalid_config, "alpha[" + std::to_string(i) + "] must be > 0, got " +
                                            std::to_string(cfg.alpha[i]));
    }
    Baseline::make(cfg.baseline);  // validates family name and params
}

inline double max_location(const ElsConfig& cfg) {
    double m = cfg.lambda.front();
    for (double v : cfg.lambda)
        if (v > m) m = v;
    return m;
}

namespace detail {

inline void require_index(const ElsConfig& cfg, std::size_t i) {
    if (i >= cfg.n())
        raise(errc::invalid_config, "component index " + std::to_string(i) +
                                        " out of range for n=" + std::to_string(cfg.n()));
}

/// Hot-path variants taking a prebuilt baseline (avoids registry lookups in
/// grid and Monte Carlo loops).

inline double component_cdf_b(const ElsConfig& cfg, const Baseline& b, std::size_t i,
                              double x) {
    if (x <= cfg.lambda[i]) return 0.0;
    const double w = (x - cfg.lambda[i]) / cfg.theta[i];
    if (w <= b.support_lo()) return 0.0;
    if (b.bounded_above() && w >= b.support_hi()) return 1.0;
    const double v = std::pow(b.cdf(w), cfg.alpha[i]);
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

inline double component_pdf_b(const ElsConfig& cfg, const Baseline& b, std::size_t i,
                              double x) {
    if (x <= cfg.lambda[i]) return 0.0;
    const double w = (x - cfg.lambda[i]) / cfg.theta[i];
    if (w <= b.support_lo()) return 0.0;
    if (b.bounded_above() && w >= b.support_hi()) return 0.0;
    const double a = cfg.alpha[i];
    return a * std::pow(b.cdf(w), a - 1.0) * b.pdf(w) / cfg.theta[i];
}

inline double sample_component_b(const ElsConfig& cfg, const Baseline& b, std::size_t i,
                                 double u) {
    double p = std::pow(u, 1.0 / cfg.alpha[i]);
    // The power can round to an endpoint for extreme shape/uniform pairs;
    // nudge back inside so the quantile stays defined.
    if (p >= 1.0) p = 1.0 - 0x1p-53;
    if (p <= 0.0) p = 1e-308;
    return cfg.lambda[i] + cfg.theta[i] * b.quantile(p);
}

} // namespace detail

/// Marginal CDF of component i. Returns 0 at or below the location, 1 above
/// the upper support endpoint, and the clamped power of the baseline CDF in
/// between.
inline double component_cdf(const ElsConfig& cfg, std::size_t i, double x) {
    detail::require_index(cfg, i);
    return detail::component_cdf_b(cfg, Baseline::make(cfg.baseline), i, x);
}

/// Marginal density of component i (0 outside the component's support).
inline double component_pdf(const ElsConfig& cfg, std::size_t i, double x) {
    detail::require_index(cfg, i);
    return detail::component_pdf_b(cfg, Baseline::make(cfg.baseline), i, x);
}

/// Marginal reversed hazard rate of component i:
///   alpha_i * r_b((x - lambda_i)/theta_i) / theta_i.
inline double component_rev_hazard(const ElsConfig& cfg, std::size_t i, double x) {
    detail::require_index(cfg, i);
    const Baseline b = Baseline::make(cfg.baseline);
    const double w = (x - cfg.lambda[i]) / cfg.theta[i];
    if (!(w > b.support_lo()))
        raise(errc::degenerate_denominator,
              "component_rev_hazard: component " + std::to_string(i) +
                  " has zero cdf at x=" + std::to_string(x));
    if (b.bounded_above() && w >= b.support_hi()) return 0.0;  // cdf is constant 1
    return cfg.alpha[i] * b.rev_hazard(w) / cfg.theta[i];
}

/// Inverse-transform sampling of component i from a uniform u in (0,1):
///   lambda_i + theta_i * Qb(u^{1/alpha_i}).
inline double sample_component(const ElsConfig& cfg, std::size_t i, double u) {
    detail::require_index(cfg, i);
    if (!(u > 0.0) || !(u < 1.0))
        raise(errc::invalid_probability,
              "sample_component requires u in (0,1), got " + std::to_string(u));
    return detail::sample_component_b(cfg, Baseline::make(cfg.baseline), i, u);
}

} // namespace secord
