#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace secord {

/// A closed linear grid [lo, hi] with `points` equally spaced samples,
/// inclusive of both endpoints. Command-line syntax: "lo:hi:points".
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int points = 4096;

    GridSpec() = default;
    GridSpec(double lo_, double hi_, int points_ = 4096) : lo(lo_), hi(hi_), points(points_) {
        validate();
    }

    void validate() const {
        if (!(lo < hi))
            raise(errc::invalid_config, "grid: lo must be strictly less than hi (got lo=" +
                                            std::to_string(lo) + ", hi=" + std::to_string(hi) + ")");
        if (points < 2)
            raise(errc::invalid_config,
                  "grid: points must be at least 2 (got " + std::to_string(points) + ")");
    }

    double spacing() const { return (hi - lo) / static_cast<double>(points - 1); }

    /// All grid abscissae, first value exactly lo, last exactly hi.
    std::vector<double> values() const {
        validate();
        std::vector<double> xs(static_cast<std::size_t>(points));
        const double h = spacing();
        for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = lo + h * i;
        xs.front() = lo;
        xs.back() = hi;
        return xs;
    }

    /// Same interval with twice the sample count (used by refinement passes).
    GridSpec doubled() const { return GridSpec(lo, hi, points * 2); }
};

/// Parses "lo:hi:points" (points optional, default 4096).
inline GridSpec parse_grid(const std::string& text) {
    const auto bad = [&](const std::string& why) {
        raise(errc::invalid_config, "grid '" + text + "': " + why);
    };
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 2 && parts.size() != 3) bad("expected lo:hi or lo:hi:points");
    GridSpec g;
    try {
        std::size_t used = 0;
        g.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) bad("lo is not a number");
        g.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) bad("hi is not a number");
        if (parts.size() == 3) {
            g.points = std::stoi(parts[2], &used);
            if (used != parts[2].size()) bad("points is not an integer");
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        bad("not numeric");
    }
    g.validate();
    return g;
}

} // namespace secord
