#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "els.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "rng.hpp"

namespace secord {

/// Archimedean generator psi with inverse phi. Registry families:
///   Independence           psi(x) = e^{-x}
///   GumbelHougaard(a >= 1) psi(x) = e^{-x^{1/a}}
///   GumbelBarnett(0<a<=1)  psi(x) = e^{(1-e^x)/a}
///   Clayton(t > 0)         psi(x) = (1+x)^{-1/t}
/// Clayton is a registry addition beyond the comparison theorems: it is the
/// family with a closed-form gamma frailty, used by the sampling oracle.
class Generator {
  public:
    static Generator make(const GeneratorSpec& spec) {
        if (spec.family == "Independence" || spec.family == "independence") {
            if (!spec.params.empty())
                raise(errc::invalid_config, "Independence generator expects no params");
            Generator g;
            g.spec_ = {"Independence", {}};
            g.family_ = Family::independence;
            return g;
        }
        if (spec.family == "GumbelHougaard" || spec.family == "gumbel_hougaard") {
            if (spec.params.size() != 1)
                raise(errc::invalid_config, "GumbelHougaard expects params (a)");
            const double a = spec.params[0];
            if (!(a >= 1.0))
                raise(errc::invalid_config, "GumbelHougaard requires a >= 1, got " +
                                                std::to_string(a));
            Generator g;
            g.spec_ = {"GumbelHougaard", {a}};
            g.family_ = Family::gumbel_hougaard;
            return g;
        }
        if (spec.family == "GumbelBarnett" || spec.family == "gumbel_barnett") {
            if (spec.params.size() != 1)
                raise(errc::invalid_config, "GumbelBarnett expects params (a)");
            const double a = spec.params[0];
            if (!(a > 0.0) || !(a <= 1.0))
                raise(errc::invalid_config, "GumbelBarnett requires a in (0,1], got " +
                                                std::to_string(a));
            Generator g;
            g.spec_ = {"GumbelBarnett", {a}};
            g.family_ = Family::gumbel_barnett;
            return g;
        }
        if (spec.family == "Clayton" || spec.family == "clayton") {
            if (spec.params.size() != 1)
                raise(errc::invalid_config, "Clayton expects params (theta)");
            const double t = spec.params[0];
            if (!(t > 0.0))
                raise(errc::invalid_config, "Clayton requires theta > 0, got " +
                                                std::to_string(t));
            Generator g;
            g.spec_ = {"Clayton", {t}};
            g.family_ = Family::clayton;
            return g;
        }
        raise(errc::invalid_config, "unknown generator family '" + spec.family + "'");
    }

    const GeneratorSpec& spec() const { return spec_; }

    /// psi(x) for x in [0, +inf]; psi(+inf) = 0 by the boundary convention.
    double psi(double x) const {
        if (std::isnan(x) || x < 0.0)
            raise(errc::generator_domain, "psi requires x >= 0, got " + std::to_string(x));
        if (std::isinf(x)) return 0.0;
        return std::exp(log_psi(x));
    }

    /// log psi(x); may be -inf for saturating arguments.
    double log_psi(double x) const {
        if (std::isnan(x) || x < 0.0)
            raise(errc::generator_domain, "log_psi requires x >= 0, got " + std::to_string(x));
        if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
        switch (family_) {
            case Family::independence:
                return -x;
            case Family::gumbel_hougaard:
                return -std::pow(x, 1.0 / spec_.params[0]);
            case Family::gumbel_barnett:
                return -std::expm1(x) / spec_.params[0];
            case Family::clayton:
                return -std::log1p(x) / spec_.params[0];
        }
        return 0.0;
    }

    /// d/dx log psi(x), strictly negative on (0, inf).
    double log_psi_prime(double x) const {
        if (std::isnan(x) || x < 0.0)
            raise(errc::generator_domain,
                  "log_psi_prime requires x >= 0, got " + std::to_string(x));
        switch (family_) {
            case Family::independence:
                return -1.0;
            case Family::gumbel_hougaard: {
                const double a = spec_.params[0];
                return -(1.0 / a) * std::pow(x, 1.0 / a - 1.0);
            }
            case Family::gumbel_barnett:
                return -std::exp(x) / spec_.params[0];
            case Family::clayton:
                return -1.0 / (spec_.params[0] * (1.0 + x));
        }
        return 0.0;
    }

    /// Closed-form psi'(x) = psi(x) * (log psi)'(x).
    double psi_prime(double x) const { return psi(x) * log_psi_prime(x); }

    /// psi/psi' = 1/(log psi)'; computed from the log-derivative, which stays
    /// finite long after psi itself underflows.
    double psi_over_psi_prime(double x) const { return 1.0 / log_psi_prime(x); }

    /// phi(v) = psi^{-1}(v) for v in (0, 1].
    double phi(double v) const {
        if (!(v > 0.0) || !(v <= 1.0))
            raise(errc::generator_domain, "phi requires v in (0,1], got " + std::to_string(v));
        return phi_from_log(std::log(v));
    }

    /// phi(e^L) for L = log v <= 0; the stable entry point for compositions.
    double phi_from_log(double L) const {
        if (std::isnan(L) || L > 0.0)
            raise(errc::generator_domain,
                  "phi_from_log requires log v <= 0, got " + std::to_string(L));
        switch (family_) {
            case Family::independence:
                return -L;
            case Family::gumbel_hougaard:
                return std::pow(-L, spec_.params[0]);
            case Family::gumbel_barnett:
                return std::log1p(-spec_.params[0] * L);
            case Family::clayton:
                return std::expm1(-spec_.params[0] * L);
        }
        return 0.0;
    }

    /// Grid on which the family's generator invariants are certified: away
    /// from 0 and short of underflow (GumbelBarnett saturates doubly
    /// exponentially, so its upper end scales with the parameter).
    GridSpec default_check_grid() const {
        if (family_ == Family::gumbel_barnett)
            return GridSpec(1e-4, std::log(500.0 * spec_.params[0] + 1.0), 256);
        return GridSpec(1e-4, 50.0, 256);
    }

  private:
    enum class Family { independence, gumbel_hougaard, gumbel_barnett, clayton };

    GeneratorSpec spec_;
    Family family_ = Family::independence;
};

/// CDF of the second-largest lifetime when the joint law is the Archimedean
/// copula of cfg.generator:
///   sum_l psi[ sum_{k != l} phi(F_k(x)) ] - (n-1) psi[ sum_k phi(F_k(x)) ].
/// Components with F_k = 0 drive phi to +inf; the sums are formed per term so
/// the limit value (0 contribution) falls out without evaluating inf - inf.
inline double cdf_second_largest_dep(const ElsConfig& cfg, double x) {
    if (!cfg.generator)
        raise(errc::invalid_config, "cdf_second_largest_dep requires cfg.generator");
    if (x <= max_location(cfg)) return 0.0;

    const Baseline b = Baseline::make(cfg.baseline);
    const Generator g = Generator::make(*cfg.generator);
    const std::size_t n = cfg.n();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> phis(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double F = detail::component_cdf_b(cfg, b, k, x);
        phis[k] = F <= 0.0 ? inf : g.phi_from_log(std::log(F));
    }

    double total = 0.0;
    double sum_all = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != l) s += phis[k];
        total += g.psi(s);
        sum_all += phis[l];
    }
    total -= static_cast<double>(n - 1) * g.psi(sum_all);
    return total < 0.0 ? 0.0 : (total > 1.0 ? 1.0 : total);
}

/// Certifies log-concavity of psi on the grid: second differences of
/// log psi(x) must not exceed the monotone tolerance.
inline ConditionReport check_generator_logconcave(const GeneratorSpec& spec,
                                                  const GridSpec& grid) {
    if (!(grid.lo > 0.0))
        raise(errc::invalid_config, "log-concavity grid must lie in (0, inf)");
    const Generator g = Generator::make(spec);
    const auto xs = grid.values();
    std::vector<double> L(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) L[i] = g.log_psi(xs[i]);

    ConditionReport rep;
    rep.holds = true;
    rep.witness_w = xs.front();
    for (std::size_t i = 1; i + 1 < L.size(); ++i) {
        const double second = L[i + 1] - 2.0 * L[i] + L[i - 1];
        if (second > rep.worst_violation) {
            rep.worst_violation = second;
            rep.witness_w = xs[i];
        }
    }
    rep.holds = rep.worst_violation <= monotone_tolerance;
    return rep;
}

/// Certifies that psi/psi' is nondecreasing on the grid. psi' is evaluated in
/// closed form; a vanished |psi'| is reported as a degenerate denominator.
inline ConditionReport check_psi_over_psiprime_increasing(const GeneratorSpec& spec,
                                                          const GridSpec& grid) {
    if (!(grid.lo > 0.0))
        raise(errc::invalid_config, "psi/psi' grid must lie in (0, inf)");
    const Generator g = Generator::make(spec);
    const auto xs = grid.values();
    std::vector<double> s(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::fabs(g.psi_prime(xs[i])) < 1e-300)
            raise(errc::degenerate_denominator,
                  "psi' vanished at x=" + std::to_string(xs[i]) + " for family " +
                      spec.family);
        s[i] = g.psi_over_psi_prime(xs[i]);
    }

    ConditionReport rep;
    rep.holds = true;
    rep.witness_w = xs.front();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double viol = s[i] - s[i + 1];  // nondecreasing: next >= current
        if (viol > rep.worst_violation) {
            rep.worst_violation = viol;
            rep.witness_w = xs[i + 1];
        }
    }
    rep.holds = rep.worst_violation <= monotone_tolerance;
    return rep;
}

enum class AdditivityMode { super, sub };

inline const char* additivity_mode_name(AdditivityMode m) {
    return m == AdditivityMode::super ? "super" : "sub";
}

/// Randomized certification that f = phi_2 (compose) psi_1 is super- or
/// sub-additive on (0, inf): draws `trials` log-uniform pairs in
/// [1e-4, 1e4] and compares f(x+y) against f(x)+f(y) within
/// 1e-9 * max(1, |f(x+y)|). Trials whose compositions overflow to non-finite
/// values are skipped and counted in the report note.
inline ConditionReport check_phi2_psi1_additivity(const GeneratorSpec& g1_spec,
                                                  const GeneratorSpec& g2_spec,
                                                  AdditivityMode mode, int trials, int seed) {
    if (trials <= 0) raise(errc::invalid_config, "additivity check requires trials > 0");
    const Generator g1 = Generator::make(g1_spec);
    const Generator g2 = Generator::make(g2_spec);
    const auto f = [&](double x) { return g2.phi_from_log(g1.log_psi(x)); };

    Rng rng(static_cast<std::uint64_t>(seed));
    ConditionReport rep;
    rep.holds = true;
    int skipped = 0;
    double worst_pair_x = 0.0, worst_pair_y = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng tr = rng.substream(static_cast<std::uint64_t>(t));
        const double x = tr.next_log_uniform(1e-4, 1e4);
        const double y = tr.next_log_uniform(1e-4, 1e4);
        const double fx = f(x), fy = f(y), fxy = f(x + y);
        if (!std::isfinite(fx) || !std::isfinite(fy) || !std::isfinite(fxy)) {
            ++skipped;
            continue;
        }
        const double gap = mode == AdditivityMode::super ? (fx + fy) - fxy : fxy - (fx + fy);
        const double tol = 1e-9 * std::max(1.0, std::fabs(fxy));
        if (gap > tol && gap > rep.worst_violation) {
            rep.worst_violation = gap;
            rep.witness_w = x + y;
            worst_pair_x = x;
            worst_pair_y = y;
            rep.holds = false;
        }
    }
    if (!rep.holds)
        rep.note = "worst pair x=" + std::to_string(worst_pair_x) +
                   ", y=" + std::to_string(worst_pair_y);
    if (skipped > 0) {
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += std::to_string(skipped) + " saturated trials skipped";
    }
    return rep;
}

/// Evaluates both copulas at v: C_psi(v) = psi(sum_i phi(v_i)). Returns the
/// pair (C_{psi1}(v), C_{psi2}(v)). Coordinates equal to 0 ground both
/// copulas at 0 by the phi -> +inf limit.
inline std::pair<double, double> compare_copulas(const GeneratorSpec& g1_spec,
                                                 const GeneratorSpec& g2_spec,
                                                 const std::vector<double>& v) {
    if (v.empty()) raise(errc::invalid_config, "compare_copulas requires a nonempty vector");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!(v[i] >= 0.0) || !(v[i] <= 1.0))
            raise(errc::invalid_probability, "v[" + std::to_string(i) +
                                                 "] must lie in [0,1], got " +
                                                 std::to_string(v[i]));
    const Generator g1 = Generator::make(g1_spec);
    const Generator g2 = Generator::make(g2_spec);
    const double inf = std::numeric_limits<double>::infinity();
    const auto copula = [&](const Generator& g) {
        double s = 0.0;
        for (double vi : v) s += vi <= 0.0 ? inf : g.phi_from_log(std::log(vi));
        return g.psi(s);
    };
    return {copula(g1), copula(g2)};
}

/// Monte Carlo CDF of the dependent second-largest lifetime via the frailty
/// construction, evaluated at each probe in `xs` on a shared sample set.
/// Supported families: Independence (degenerate frailty) and Clayton (gamma
/// frailty with shape 1/theta, rate 1).
struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

inline std::vector<McEstimate> mc_cdf_second_largest_dep_multi(const ElsConfig& cfg,
                                                               const std::vector<double>& xs,
                                                               long samples, int seed) {
    if (!cfg.generator)
        raise(errc::invalid_config, "mc_cdf_second_largest_dep requires cfg.generator");
    if (samples <= 0) raise(errc::invalid_config, "samples must be positive");
    const Generator g = Generator::make(*cfg.generator);
    const bool clayton = g.spec().family == "Clayton";
    if (!clayton && g.spec().family != "Independence")
        raise(errc::unsupported_generator,
              "no frailty sampler for generator family " + g.spec().family);

    const Baseline b = Baseline::make(cfg.baseline);
    const std::size_t n = cfg.n();
    const double gamma_shape = clayton ? 1.0 / g.spec().params[0] : 0.0;
    const double max_lambda = max_location(cfg);

    std::vector<long> hits(xs.size(), 0);
    std::vector<double> comps(n);
    Rng root(static_cast<std::uint64_t>(seed));
    for (long s = 0; s < samples; ++s) {
        Rng sr = root.substream(static_cast<std::uint64_t>(s));
        double m = 1.0;
        if (clayton) m = sr.next_gamma(gamma_shape, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double e = sr.next_exponential();
            double v = g.psi(e / m);
            if (v <= 0.0) v = 1e-308;
            if (v >= 1.0) v = 1.0 - 0x1p-53;
            comps[i] = detail::sample_component_b(cfg, b, i, v);
        }
        // Second largest: the value with exactly one strictly above it.
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

inline McEstimate mc_cdf_second_largest_dep(const ElsConfig& cfg, double x, long samples,
                                            int seed) {
    return mc_cdf_second_largest_dep_multi(cfg, {x}, samples, seed).front();
}

} // namespace secord
