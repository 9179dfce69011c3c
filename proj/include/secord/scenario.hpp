#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "els.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "orderstats.hpp"

namespace secord {

/// A comparison scenario loaded from a config file: two component models and
/// optional evaluation directives.
///
/// Grammar (INI-like, '#' starts a comment, blank lines ignored):
///
///   theorem = T3_1            # optional statement id
///   order   = st              # optional: st | rh
///   grid    = 4.001:100:4096  # optional: lo:hi[:points]
///
///   [X]
///   baseline  = PowerCap 0.2 100
///   lambda    = 4 4 4
///   theta     = 5 9 10
///   alpha     = 4 4 4
///   generator = GumbelBarnett 0.1   # optional; omitted means independent
///
///   [Y]
///   ...same fields...
struct Scenario {
    ElsConfig x;
    ElsConfig y;
    std::optional<std::string> theorem_id;
    std::optional<OrderKind> order;
    std::optional<GridSpec> grid;
};

namespace detail_scn {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] inline void fail_at(int line, const std::string& message) {
    raise(errc::invalid_config, "line " + std::to_string(line) + ": " + message);
}

inline double parse_double(const std::string& token, int line, const std::string& field) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        fail_at(line, field + ": '" + token + "' is not a number");
    return v;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<double> parse_numbers(const std::string& value, int line,
                                         const std::string& field) {
    const auto tokens = split_ws(value);
    if (tokens.empty()) fail_at(line, field + ": expected at least one number");
    std::vector<double> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(parse_double(t, line, field));
    return out;
}

/// Message of a library error without the leading code name, for re-raising
/// with extra context.
inline std::string strip_code(const error& e) {
    const std::string msg = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    return msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg;
}

struct RawSection {
    bool seen = false;
    // field -> (value, line); insertion checked for duplicates at parse time
    std::map<std::string, std::pair<std::string, int>> fields;
};

inline ElsConfig build_config(const RawSection& s, const std::string& tag) {
    static const std::vector<std::string> known = {"baseline", "lambda", "theta", "alpha",
                                                   "generator"};
    for (const auto& [key, entry] : s.fields) {
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok)
            fail_at(entry.second, "unknown field '" + key + "' in section " + tag +
                                      " (expected baseline, lambda, theta, alpha, generator)");
    }
    const auto required = [&](const std::string& key) -> const std::pair<std::string, int>& {
        const auto it = s.fields.find(key);
        if (it == s.fields.end())
            raise(errc::invalid_config, "section " + tag + " is missing field '" + key + "'");
        return it->second;
    };

    ElsConfig cfg;
    {
        const auto& [value, line] = required("baseline");
        const auto tokens = split_ws(value);
        if (tokens.empty()) fail_at(line, "baseline: expected a family name");
        cfg.baseline.family = tokens.front();
        for (std::size_t i = 1; i < tokens.size(); ++i)
            cfg.baseline.params.push_back(parse_double(tokens[i], line, "baseline"));
    }
    {
        const auto& [value, line] = required("lambda");
        cfg.lambda = parse_numbers(value, line, "lambda");
    }
    {
        const auto& [value, line] = required("theta");
        cfg.theta = parse_numbers(value, line, "theta");
    }
    {
        const auto& [value, line] = required("alpha");
        cfg.alpha = parse_numbers(value, line, "alpha");
    }
    if (const auto it = s.fields.find("generator"); it != s.fields.end()) {
        const auto& [value, line] = it->second;
        const auto tokens = split_ws(value);
        if (tokens.empty()) fail_at(line, "generator: expected a family name");
        GeneratorSpec gen;
        gen.family = tokens.front();
        for (std::size_t i = 1; i < tokens.size(); ++i)
            gen.params.push_back(parse_double(tokens[i], line, "generator"));
        cfg.generator = std::move(gen);
    }

    try {
        validate_config(cfg);
    } catch (const error& e) {
        raise(e.code(), "section " + tag + ": " + strip_code(e));
    }
    return cfg;
}

} // namespace detail_scn

/// Parses "lo:hi" or "lo:hi:points" into a grid (points defaults to 4096).
inline GridSpec parse_grid_token(const std::string& token) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = token.find(':', start);
        parts.push_back(token.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 2 && parts.size() != 3)
        raise(errc::invalid_config,
              "grid: expected lo:hi or lo:hi:points, got '" + token + "'");
    const auto number = [&](const std::string& p) {
        const char* begin = p.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            raise(errc::invalid_config, "grid: '" + p + "' is not a number");
        return v;
    };
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    int points = 4096;
    if (parts.size() == 3) {
        const double p = number(parts[2]);
        points = static_cast<int>(p);
        if (static_cast<double>(points) != p)
            raise(errc::invalid_config, "grid: points must be an integer, got '" + parts[2] + "'");
    }
    return GridSpec{lo, hi, points};
}

/// Parses an order name: "st" or "rh".
inline OrderKind parse_order_token(const std::string& token) {
    if (token == "st") return OrderKind::st;
    if (token == "rh") return OrderKind::rh;
    raise(errc::invalid_config, "order: expected 'st' or 'rh', got '" + token + "'");
}

/// Parses a scenario from a stream. Errors carry the line number and the
/// offending field.
inline Scenario parse_scenario(std::istream& in) {
    using detail_scn::fail_at;
    using detail_scn::trim;

    detail_scn::RawSection top, sx, sy;
    detail_scn::RawSection* current = &top;
    std::string section_tag = "(top level)";
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail_at(line, "unterminated section header '" + s + "'");
            const std::string name = trim(s.substr(1, s.size() - 2));
            detail_scn::RawSection* next = nullptr;
            if (name == "X") next = &sx;
            else if (name == "Y") next = &sy;
            else fail_at(line, "unknown section [" + name + "]; expected [X] or [Y]");
            if (next->seen) fail_at(line, "duplicate section [" + name + "]");
            next->seen = true;
            current = next;
            section_tag = "[" + name + "]";
            continue;
        }

        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            fail_at(line, "expected 'field = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail_at(line, "empty field name");
        if (current->fields.count(key))
            fail_at(line, "duplicate field '" + key + "' in section " + section_tag);
        current->fields[key] = {value, line};
    }

    for (const auto& [key, entry] : top.fields) {
        if (key != "theorem" && key != "order" && key != "grid")
            fail_at(entry.second, "unknown field '" + key +
                                      "' before any section (expected theorem, order, grid)");
    }
    if (!sx.seen) raise(errc::invalid_config, "scenario is missing section [X]");
    if (!sy.seen) raise(errc::invalid_config, "scenario is missing section [Y]");

    Scenario scn;
    scn.x = detail_scn::build_config(sx, "[X]");
    scn.y = detail_scn::build_config(sy, "[Y]");
    if (const auto it = top.fields.find("theorem"); it != top.fields.end()) {
        if (it->second.first.empty()) fail_at(it->second.second, "theorem: expected an id");
        scn.theorem_id = it->second.first;
    }
    if (const auto it = top.fields.find("order"); it != top.fields.end()) {
        try {
            scn.order = parse_order_token(it->second.first);
        } catch (const error& e) {
            fail_at(it->second.second, detail_scn::strip_code(e));
        }
    }
    if (const auto it = top.fields.find("grid"); it != top.fields.end()) {
        try {
            scn.grid = parse_grid_token(it->second.first);
        } catch (const error& e) {
            fail_at(it->second.second, detail_scn::strip_code(e));
        }
    }
    return scn;
}

/// Loads a scenario file; parse errors are prefixed with the path.
inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot read scenario file '" + path + "'");
    try {
        return parse_scenario(in);
    } catch (const error& e) {
        raise(e.code(), path + ": " + detail_scn::strip_code(e));
    }
}

} // namespace secord
