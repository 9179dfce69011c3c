#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "baseline.hpp"  // ConditionReport / Subcondition
#include "errors.hpp"

namespace secord {

/// Vector preorders, evaluated on ascending order coordinates.
/// check_preorder(x, y, rel) decides "x >=_rel y":
///   maj        partial ascending sums of x never exceed those of y, and the
///              totals agree (1e-12 relative);
///   weak_super ascending partial sums of x never exceed those of y;
///   weak_sub   descending (top-k) partial sums of x dominate those of y;
///   recip      partial sums of reciprocals over the k smallest coordinates
///              of x dominate those of y.
enum class Preorder { maj, weak_super, weak_sub, recip };

inline const char* preorder_name(Preorder p) {
    switch (p) {
        case Preorder::maj:        return "maj";
        case Preorder::weak_super: return "weak_super";
        case Preorder::weak_sub:   return "weak_sub";
        case Preorder::recip:      return "recip";
    }
    return "?";
}

struct PreorderReport {
    bool holds = false;
    int witness_k = 0;   ///< first violated prefix length (1-based); 0 when holds
    std::string detail;  ///< human-readable reason on failure
};

inline constexpr double maj_total_rel_tolerance = 1e-12;

inline PreorderReport check_preorder(const std::vector<double>& x, const std::vector<double>& y,
                                     Preorder rel) {
    if (x.size() != y.size())
        raise(errc::length_mismatch, "preorder arguments have lengths " +
                                         std::to_string(x.size()) + " and " +
                                         std::to_string(y.size()));
    if (x.empty()) raise(errc::invalid_config, "preorder arguments must be non-empty");

    std::vector<double> xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const std::size_t n = xs.size();

    PreorderReport rep;
    rep.holds = true;

    auto fail = [&](std::size_t k, const std::string& why) {
        if (rep.holds) {
            rep.holds = false;
            rep.witness_k = static_cast<int>(k);
            rep.detail = why;
        }
    };

    switch (rel) {
        case Preorder::maj: {
            double sx = 0.0, sy = 0.0;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                sx += xs[k];
                sy += ys[k];
                if (!(sx <= sy)) {
                    fail(k + 1, "ascending prefix sum exceeds comparand at k=" +
                                    std::to_string(k + 1));
                    return rep;
                }
            }
            sx += xs[n - 1];
            sy += ys[n - 1];
            const double scale = std::max({1.0, std::fabs(sx), std::fabs(sy)});
            if (std::fabs(sx - sy) > maj_total_rel_tolerance * scale)
                fail(n, "total sums differ: " + std::to_string(sx) + " vs " +
                            std::to_string(sy));
            break;
        }
        case Preorder::weak_super: {
            double sx = 0.0, sy = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sx += xs[k];
                sy += ys[k];
                if (!(sx <= sy)) {
                    fail(k + 1, "ascending prefix sum exceeds comparand at k=" +
                                    std::to_string(k + 1));
                    return rep;
                }
            }
            break;
        }
        case Preorder::weak_sub: {
            double sx = 0.0, sy = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sx += xs[n - 1 - k];
                sy += ys[n - 1 - k];
                if (!(sx >= sy)) {
                    fail(k + 1, "descending prefix sum falls below comparand at k=" +
                                    std::to_string(k + 1));
                    return rep;
                }
            }
            break;
        }
        case Preorder::recip: {
            for (std::size_t k = 0; k < n; ++k)
                if (!(xs[k] > 0.0) || !(ys[k] > 0.0))
                    raise(errc::invalid_config,
                          "recip preorder requires strictly positive coordinates");
            double sx = 0.0, sy = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sx += 1.0 / xs[k];
                sy += 1.0 / ys[k];
                if (!(sx >= sy)) {
                    fail(k + 1, "reciprocal prefix sum falls below comparand at k=" +
                                    std::to_string(k + 1));
                    return rep;
                }
            }
            break;
        }
    }
    return rep;
}

/// Cones of monotone positive vectors: D_plus (nonincreasing, all > 0),
/// E_plus (nondecreasing, all > 0). Constant vectors lie in both.
enum class Cone { D_plus, E_plus, both, neither };

inline const char* cone_name(Cone c) {
    switch (c) {
        case Cone::D_plus:  return "D_plus";
        case Cone::E_plus:  return "E_plus";
        case Cone::both:    return "both";
        case Cone::neither: return "neither";
    }
    return "?";
}

inline Cone cone_membership(const std::vector<double>& v) {
    if (v.empty()) raise(errc::invalid_config, "cone_membership of empty vector");
    bool positive = true, noninc = true, nondec = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) positive = false;
        if (i + 1 < v.size()) {
            if (v[i] < v[i + 1]) noninc = false;
            if (v[i] > v[i + 1]) nondec = false;
        }
    }
    if (!positive || (!noninc && !nondec)) return Cone::neither;
    if (noninc && nondec) return Cone::both;
    return noninc ? Cone::D_plus : Cone::E_plus;
}

/// True when all vectors lie together in D_plus or together in E_plus.
inline bool share_cone(const std::vector<std::vector<double>>& vs) {
    bool all_d = true, all_e = true;
    for (const auto& v : vs) {
        const Cone c = cone_membership(v);
        if (c == Cone::neither) return false;
        if (c == Cone::E_plus) all_d = false;
        if (c == Cone::D_plus) all_e = false;
    }
    return all_d || all_e;
}

enum class SchurMode { convex, concave };

inline const char* schur_mode_name(SchurMode m) {
    return m == SchurMode::convex ? "convex" : "concave";
}

/// Relative step factor for the partial-derivative probes.
inline constexpr double schur_default_step = 1e-5;
/// Comparison tolerance on partial-derivative orderings.
inline constexpr double schur_tolerance = 1e-9;

namespace detail {

inline void require_in_cone(const std::vector<double>& z, Cone cone, std::size_t idx) {
    for (double v : z)
        if (!(v > 0.0))
            raise(errc::invalid_config, "schur base point " + std::to_string(idx) +
                                            " has a nonpositive coordinate");
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        const bool ok = cone == Cone::D_plus ? z[i] > z[i + 1] : z[i] < z[i + 1];
        if (!ok)
            raise(errc::invalid_config,
                  "schur base point " + std::to_string(idx) + " is not strictly inside " +
                      std::string(cone_name(cone)));
    }
}

inline std::string point_to_string(const std::vector<double>& z) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z[i];
    os << ")";
    return os.str();
}

/// Central-difference gradient with per-coordinate step `step * z_k`;
/// evaluation failures of the handle surface as EvaluationFailure.
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                       const std::vector<double>& z, double step) {
    std::vector<double> g(z.size());
    std::vector<double> probe = z;
    for (std::size_t k = 0; k < z.size(); ++k) {
        const double h = step * std::fabs(z[k]);
        double up = 0.0, dn = 0.0;
        try {
            probe[k] = z[k] + h;
            up = f(probe);
            probe[k] = z[k] - h;
            dn = f(probe);
        } catch (const std::exception& e) {
            raise(errc::evaluation_failure,
                  std::string("function handle failed near ") + point_to_string(z) + ": " +
                      e.what());
        }
        probe[k] = z[k];
        g[k] = (up - dn) / (2.0 * h);
    }
    return g;
}

} // namespace detail

/// Certifies Schur-convexity (or -concavity) of `f` on the given cone by the
/// partial-derivative ordering criterion, probed at the supplied base points
/// (each strictly inside the cone). The aggregate verdict is the Schur
/// criterion; coordinatewise monotonicity is reported as extra subconditions.
///
/// Criterion: on D_plus, Schur-convex iff partials are decreasing in the
/// coordinate index; on E_plus, increasing. Concave mirrors both.
/// witness_w in the report holds the (1-based) coordinate index of the worst
/// violation.
inline ConditionReport schur_certify(const std::function<double(const std::vector<double>&)>& f,
                                     Cone cone, SchurMode mode,
                                     const std::vector<std::vector<double>>& base_points,
                                     double step = schur_default_step) {
    if (cone != Cone::D_plus && cone != Cone::E_plus)
        raise(errc::invalid_config, "schur_certify requires cone D_plus or E_plus");
    if (base_points.empty())
        raise(errc::invalid_config, "schur_certify requires at least one base point");
    if (!(step > 0.0)) raise(errc::invalid_config, "schur_certify requires step > 0");

    // Schur criterion direction: partials decreasing in k on D_plus for
    // convex; increasing on E_plus; concavity flips the direction.
    const bool want_decreasing = (cone == Cone::D_plus) == (mode == SchurMode::convex);

    Subcondition schur;
    schur.name = std::string("partials_") + (want_decreasing ? "decreasing" : "increasing") +
                 "_in_k";
    schur.holds = true;
    Subcondition incr{"coordinatewise_increasing", true, 0.0, 0.0};
    Subcondition decr{"coordinatewise_decreasing", true, 0.0, 0.0};

    for (std::size_t p = 0; p < base_points.size(); ++p) {
        const auto& z = base_points[p];
        if (z.size() < 2)
            raise(errc::invalid_config, "schur base points need at least 2 coordinates");
        detail::require_in_cone(z, cone, p);
        const auto g = detail::fd_gradient(f, z, step);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (-g[k] > incr.worst_violation) {
                incr.worst_violation = -g[k];
                incr.witness_w = static_cast<double>(k + 1);
            }
            if (g[k] > decr.worst_violation) {
                decr.worst_violation = g[k];
                decr.witness_w = static_cast<double>(k + 1);
            }
            if (k + 1 < g.size()) {
                const double d = g[k + 1] - g[k];
                const double viol = want_decreasing ? d : -d;
                if (viol > schur.worst_violation) {
                    schur.worst_violation = viol;
                    schur.witness_w = static_cast<double>(k + 1);
                }
            }
        }
    }

    auto verdict = [](Subcondition& s) { s.holds = s.worst_violation <= schur_tolerance; };
    verdict(schur);
    verdict(incr);
    verdict(decr);

    ConditionReport rep;
    rep.holds = schur.holds;
    rep.worst_violation = schur.worst_violation;
    rep.witness_w = schur.witness_w;
    rep.subconditions = {schur, incr, decr};
    return rep;
}

/// Certifies the two premises of the reciprocal-majorization comparison
/// criterion for a handle f: with phi(a) := f(1/a_1, ..., 1/a_n),
///   (i)  phi is Schur-convex (partial ordering criterion on ascending points),
///   (ii) phi is increasing in each coordinate.
/// When both certify, "x >=_recip y" implies f(x) >= f(y).
/// Base points are ascending strictly positive vectors in phi's argument
/// space.
inline ConditionReport recip_certify(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<std::vector<double>>& base_points,
                                     double step = schur_default_step) {
    const auto phi = [&f](const std::vector<double>& a) {
        std::vector<double> inv(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) inv[i] = 1.0 / a[i];
        return f(inv);
    };
    const ConditionReport schur = schur_certify(phi, Cone::E_plus, SchurMode::convex,
                                                base_points, step);

    Subcondition cond_i;
    cond_i.name = "recip_schur_convex";
    cond_i.holds = schur.holds;
    cond_i.worst_violation = schur.worst_violation;
    cond_i.witness_w = schur.witness_w;

    Subcondition cond_ii;
    cond_ii.name = "recip_increasing";
    for (const auto& s : schur.subconditions) {
        if (s.name == "coordinatewise_increasing") {
            cond_ii = s;
            cond_ii.name = "recip_increasing";
        }
    }

    ConditionReport rep;
    rep.holds = cond_i.holds && cond_ii.holds;
    rep.worst_violation = std::max(cond_i.worst_violation, cond_ii.worst_violation);
    rep.witness_w = cond_i.worst_violation >= cond_ii.worst_violation ? cond_i.witness_w
                                                                      : cond_ii.witness_w;
    rep.subconditions = {cond_i, cond_ii};
    return rep;
}

} // namespace secord
