// secord — command-line front end for the second-largest order statistic
// comparison library: evaluate system distributions, run order checks and
// registry statements against fixtures or scenario files, drive randomized
// property suites, and emit figure-ready CSV data.
//
// Exit status: 0 ok/consistent, 1 inconsistency or order violation detected,
// 2 usage or configuration error.

#include <secord/orderstats.hpp>
#include <secord/scenario.hpp>
#include <secord/theorems.hpp>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "secord 1.0.0";

constexpr const char* kUsage =
    R"(usage: secord <command> [options]

commands:
  eval      evaluate the two system distributions of a fixture or scenario
  check     run a registry statement (or a bare order check) and report
            whether hypotheses and conclusion are consistent
  suite     run randomized property suites against registry statements
  fixtures  list the compiled-in fixtures
  version   print the version string
  help      show this message

input selection:
  --fixture NAME    use a compiled-in fixture (see 'secord fixtures')
  --scenario PATH   load a scenario config file
  --theorem ID      registry statement id; overrides a scenario's theorem
                    directive, selects the statement for 'check --suite'
                    and 'suite'

options:
  --grid LO:HI[:POINTS]  evaluation grid override (POINTS defaults to 4096)
  --at X                 eval: print values at a single point x = X
  --csv FILE             eval: write the grid comparison CSV to FILE
  --suite N              check: run N randomized trials of --theorem instead
                         of checking a fixed config pair
  --trials N             suite: trials per statement (default 100)
  --all                  suite: run every registry statement
  --seed N               seed for randomized suites (default 0)

eval writes CSV columns x,F_X,F_Y,diff (or x,rh_X,rh_Y,diff for reversed
hazard rate comparisons); without --at or --csv the CSV text goes to stdout.
)";

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

struct Options {
    std::optional<std::string> fixture;
    std::optional<std::string> scenario;
    std::optional<std::string> theorem;
    std::optional<secord::GridSpec> grid;
    std::optional<double> at;
    std::optional<std::string> csv;
    std::optional<int> suite;
    std::optional<int> trials;
    bool all = false;
    unsigned long long seed = 0;
};

[[noreturn]] void usage_fail(const std::string& message) {
    secord::raise(secord::errc::invalid_config, message + " (run 'secord help' for usage)");
}

double parse_flag_double(const std::string& value, const char* flag) {
    const char* s = value.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        usage_fail(std::string(flag) + ": '" + value + "' is not a number");
    return v;
}

int parse_flag_count(const std::string& value, const char* flag) {
    const char* s = value.c_str();
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1 || v > 100000000)
        usage_fail(std::string(flag) + ": '" + value + "' is not a positive count");
    return static_cast<int>(v);
}

unsigned long long parse_flag_seed(const std::string& value) {
    const char* s = value.c_str();
    if (*s == '-') usage_fail("--seed: '" + value + "' is not a non-negative integer");
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0')
        usage_fail("--seed: '" + value + "' is not a non-negative integer");
    return v;
}

Options parse_options(int argc, char** argv, int first) {
    Options o;
    bool seen_seed = false;
    auto value_of = [&](int& i, const char* flag) -> std::string {
        if (i + 1 >= argc) usage_fail(std::string(flag) + " requires a value");
        return argv[++i];
    };
    auto set_string = [&](std::optional<std::string>& slot, int& i, const char* flag) {
        if (slot) usage_fail(std::string("duplicate ") + flag);
        slot = value_of(i, flag);
        if (slot->empty()) usage_fail(std::string(flag) + " requires a non-empty value");
    };
    for (int i = first; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--fixture") {
            set_string(o.fixture, i, "--fixture");
        } else if (a == "--scenario") {
            set_string(o.scenario, i, "--scenario");
        } else if (a == "--theorem") {
            set_string(o.theorem, i, "--theorem");
        } else if (a == "--csv") {
            set_string(o.csv, i, "--csv");
        } else if (a == "--grid") {
            if (o.grid) usage_fail("duplicate --grid");
            o.grid = secord::parse_grid_token(value_of(i, "--grid"));
        } else if (a == "--at") {
            if (o.at) usage_fail("duplicate --at");
            o.at = parse_flag_double(value_of(i, "--at"), "--at");
        } else if (a == "--suite") {
            if (o.suite) usage_fail("duplicate --suite");
            o.suite = parse_flag_count(value_of(i, "--suite"), "--suite");
        } else if (a == "--trials") {
            if (o.trials) usage_fail("duplicate --trials");
            o.trials = parse_flag_count(value_of(i, "--trials"), "--trials");
        } else if (a == "--seed") {
            if (seen_seed) usage_fail("duplicate --seed");
            o.seed = parse_flag_seed(value_of(i, "--seed"));
            seen_seed = true;
        } else if (a == "--all") {
            if (o.all) usage_fail("duplicate --all");
            o.all = true;
        } else {
            usage_fail("unknown option '" + a + "'");
        }
    }
    return o;
}

// ---------------------------------------------------------------------------
// Input selection: a fixture or a scenario resolves to the same bundle.
// ---------------------------------------------------------------------------

struct Inputs {
    secord::ElsConfig x;
    secord::ElsConfig y;
    std::optional<std::string> theorem_id;
    std::optional<secord::OrderKind> order;  ///< bare order directive, if any
    std::optional<secord::GridSpec> grid;
    secord::CsvKind csv = secord::CsvKind::cdf;
    std::string label;
};

Inputs resolve_inputs(const Options& o) {
    if (o.fixture && o.scenario) usage_fail("pass either --fixture or --scenario, not both");
    if (!o.fixture && !o.scenario)
        usage_fail("no input: pass --fixture NAME or --scenario PATH");
    Inputs in;
    if (o.fixture) {
        const secord::Fixture& f = secord::find_fixture(*o.fixture);
        in.x = f.x;
        in.y = f.y;
        in.theorem_id = f.theorem_id;
        in.order = secord::find_theorem(f.theorem_id).order;
        in.grid = f.grid;
        in.csv = f.csv;
        in.label = f.name;
    } else {
        secord::Scenario s = secord::load_scenario(*o.scenario);
        in.x = std::move(s.x);
        in.y = std::move(s.y);
        in.theorem_id = s.theorem_id;
        in.order = s.order;
        in.grid = s.grid;
        in.csv = (s.order && *s.order == secord::OrderKind::rh) ? secord::CsvKind::rh
                                                                : secord::CsvKind::cdf;
        in.label = *o.scenario;
    }
    if (o.theorem) in.theorem_id = o.theorem;
    if (o.grid) in.grid = o.grid;
    return in;
}

const secord::GridSpec& require_grid(const Inputs& in) {
    if (!in.grid)
        usage_fail("'" + in.label +
                   "' has no grid: pass --grid LO:HI[:POINTS] or set a grid directive");
    return *in.grid;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

void print_point_values(const Inputs& in, double x) {
    const double fx = secord::cdf_second_largest(in.x, x);
    const double fy = secord::cdf_second_largest(in.y, x);
    std::printf("x %.17g\n", x);
    std::printf("F_X %.17g\n", fx);
    std::printf("F_Y %.17g\n", fy);
    std::printf("F_diff %.17g\n", fx - fy);
    try {
        const double rx = secord::rh_second_largest(in.x, x);
        const double ry = secord::rh_second_largest(in.y, x);
        std::printf("rh_X %.17g\n", rx);
        std::printf("rh_Y %.17g\n", ry);
        std::printf("rh_diff %.17g\n", rx - ry);
    } catch (const secord::error& e) {
        std::printf("rh undefined at x=%.17g (%s)\n", x, e.what());
    }
}

int cmd_eval(const Options& o) {
    if (o.suite || o.trials || o.all)
        usage_fail("--suite/--trials/--all are not eval options");
    Inputs in = resolve_inputs(o);
    bool did_something = false;
    if (o.at) {
        print_point_values(in, *o.at);
        did_something = true;
    }
    if (o.csv) {
        const secord::GridSpec& grid = require_grid(in);
        const std::string text = secord::order_csv(in.x, in.y, grid, in.csv);
        std::ofstream out(*o.csv, std::ios::binary);
        if (!out) secord::raise(secord::errc::io_error, "cannot open '" + *o.csv + "' for writing");
        out << text;
        out.close();
        if (!out) secord::raise(secord::errc::io_error, "failed writing '" + *o.csv + "'");
        std::printf("wrote %s: %d rows, columns %s\n", o.csv->c_str(), grid.points,
                    in.csv == secord::CsvKind::cdf ? "x,F_X,F_Y,diff" : "x,rh_X,rh_Y,diff");
        did_something = true;
    }
    if (!did_something) {
        const std::string text = secord::order_csv(in.x, in.y, require_grid(in), in.csv);
        std::fputs(text.c_str(), stdout);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

void print_conclusion_summary(const char* what, secord::OrderKind order, secord::Verdict verdict,
                              const char* direction, double max_violation,
                              const std::optional<double>& violation_x,
                              const std::optional<double>& crossing_x) {
    std::string line = std::string(what) + " " + secord::order_kind_name(order) + ": " +
                       upper(secord::verdict_name(verdict));
    if (direction) line += std::string(" (direction ") + direction + ")";
    char buf[96];
    std::snprintf(buf, sizeof buf, "; max violation %.6e", max_violation);
    line += buf;
    if (violation_x) {
        std::snprintf(buf, sizeof buf, " at x=%.6g", *violation_x);
        line += buf;
    }
    if (crossing_x) {
        std::snprintf(buf, sizeof buf, "; crossing ~ %.6g", *crossing_x);
        line += buf;
    }
    std::printf("%s\n", line.c_str());
}

int run_suite_line(const std::string& id, int trials, unsigned long long seed,
                   long max_rejections) {
    const secord::SuiteReport r =
        secord::property_suite(id, trials, static_cast<std::uint64_t>(seed), max_rejections);
    for (const std::string& line : r.inconsistent_lines) std::printf("%s\n", line.c_str());
    std::printf("%s: %d/%d consistent (rejections=%ld, seed=%llu)\n", r.theorem_id.c_str(),
                r.trials - r.inconsistent, r.trials, r.rejections, seed);
    return r.inconsistent == 0 ? 0 : 1;
}

int cmd_check(const Options& o) {
    if (o.at || o.csv || o.trials || o.all)
        usage_fail("--at/--csv/--trials/--all are not check options");
    if (o.suite) {
        if (!o.theorem) usage_fail("check --suite requires --theorem ID");
        if (o.fixture || o.scenario)
            usage_fail("check --suite draws random configs; drop --fixture/--scenario");
        return run_suite_line(*o.theorem, *o.suite, o.seed, 100000);
    }
    Inputs in = resolve_inputs(o);
    if (in.theorem_id) {
        const secord::TheoremSpec& spec = secord::find_theorem(*in.theorem_id);
        const secord::TheoremVerdict v =
            secord::run_theorem(spec, in.x, in.y, require_grid(in));
        std::printf("%s\n", secord::verdict_line(v).c_str());
        print_conclusion_summary("conclusion", v.order, v.conclusion,
                                 v.y_precedes_x ? "Y<=X" : "X<=Y", v.max_violation,
                                 v.violation_x, v.crossing_x);
        return v.consistent ? 0 : 1;
    }
    if (in.order) {
        const secord::OrderCheckReport r =
            secord::check_order(in.x, in.y, *in.order, require_grid(in));
        print_conclusion_summary("order", r.order, r.verdict, nullptr, r.max_violation,
                                 r.violation_x, r.crossing_x);
        return r.verdict == secord::Verdict::holds ? 0 : 1;
    }
    usage_fail("'" + in.label + "' names no statement and no order; pass --theorem ID");
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

int cmd_suite(const Options& o) {
    if (o.fixture || o.scenario || o.at || o.csv || o.suite || o.grid)
        usage_fail("suite takes only --theorem/--all, --trials, and --seed");
    if (o.all == static_cast<bool>(o.theorem))
        usage_fail("suite requires exactly one of --theorem ID or --all");
    const int trials = o.trials.value_or(100);
    if (o.theorem) return run_suite_line(*o.theorem, trials, o.seed, 100000);
    // --all: cap the rejection budget so statements whose hypotheses no
    // registered baseline family can satisfy are reported and skipped
    // instead of stalling the sweep.
    const long budget = std::max(1000L, 200L * trials);
    int status = 0;
    for (const secord::TheoremSpec& t : secord::theorem_registry()) {
        try {
            if (run_suite_line(t.id, trials, o.seed, budget) != 0) status = 1;
        } catch (const secord::error& e) {
            if (e.code() != secord::errc::policy_exhausted) throw;
            std::printf("%s: skipped (%s)\n", t.id.c_str(), e.what());
        }
    }
    return status;
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

int cmd_fixtures(const Options& o) {
    if (o.fixture || o.scenario || o.theorem || o.grid || o.at || o.csv || o.suite || o.trials ||
        o.all)
        usage_fail("fixtures takes no options");
    for (const secord::Fixture& f : secord::fixture_registry()) {
        const secord::TheoremSpec& t = secord::find_theorem(f.theorem_id);
        std::printf("%s: theorem=%s order=%s direction=%s grid=%g:%g:%d csv=%s\n", f.name.c_str(),
                    f.theorem_id.c_str(), secord::order_kind_name(t.order),
                    t.y_precedes_x ? "Y<=X" : "X<=Y", f.grid.lo, f.grid.hi, f.grid.points,
                    f.csv == secord::CsvKind::cdf ? "cdf" : "rh");
        std::printf("    %s\n", f.summary.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fputs(kUsage, stderr);
        return 2;
    }
    const std::string cmd = argv[1];
    try {
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            std::fputs(kUsage, stdout);
            return 0;
        }
        if (cmd == "version" || cmd == "--version") {
            std::printf("%s\n", kVersion);
            return 0;
        }
        const Options o = parse_options(argc, argv, 2);
        if (cmd == "eval") return cmd_eval(o);
        if (cmd == "check") return cmd_check(o);
        if (cmd == "suite") return cmd_suite(o);
        if (cmd == "fixtures") return cmd_fixtures(o);
        usage_fail("unknown command '" + cmd + "'");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
