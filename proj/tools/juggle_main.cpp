// juggle: exact enumeration of multiplex juggling patterns from the
// command line. Subcommands wrap the core library; all integer output is
// exact, JSON renders big integers as decimal strings.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "juggle/counting.hpp"
#include "juggle/errors.hpp"
#include "juggle/oracle.hpp"
#include "juggle/serialize.hpp"
#include "juggle/structure.hpp"
#include "svg_render.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitInternal = 4;

struct global_options {
    std::string format = "table";
    std::string output;
    int threads = 1;
    bool force = false;
    std::string cache_dir;
};

void emit(const global_options& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(g.output, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + g.output);
        out << text;
    }
}

void emit_json(const global_options& g, const json& j) { emit(g, j.dump(2)); }

void require_feasible(bool ok, const global_options& g, const std::string& msg) {
    if (!ok && !g.force)
        throw juggle::feasibility_error(msg + " (pass --force to run anyway)");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::optional<std::filesystem::path> cache_path(const global_options& g) {
    if (g.cache_dir.empty()) return std::nullopt;
    return std::filesystem::path(g.cache_dir);
}

// ---------------------------------------------------------------- cards --

struct cards_options {
    int balls = 0;
    std::optional<int> kappa;
    bool distinct = false;
    std::string render_path;
};

int run_cards(const global_options& g, const cards_options& o) {
    require_feasible(o.balls <= 10, g,
                     "cards: listing every card above b=10 produces hundreds of thousands of records");
    std::vector<juggle::card> cards;
    for (auto& c : juggle::all_cards(o.balls)) {
        if (o.kappa && !juggle::respects_capacity(c, *o.kappa)) continue;
        if (o.distinct && !juggle::has_distinct_heights(c)) continue;
        cards.push_back(std::move(c));
    }

    if (!o.render_path.empty()) {
        std::ofstream svg(o.render_path, std::ios::trunc);
        if (!svg) throw std::runtime_error("cannot open SVG output: " + o.render_path);
        svg << juggle::render_cards_svg(cards);
    }

    if (g.format == "json") {
        json out;
        out["b"] = o.balls;
        out["kappa"] = o.kappa ? json(*o.kappa) : json(nullptr);
        out["distinct_heights"] = o.distinct;
        out["count"] = cards.size();
        json arr = json::array();
        for (const auto& c : cards) arr.push_back(juggle::to_json(c));
        out["cards"] = arr;
        emit_json(g, out);
    } else if (g.format == "csv") {
        std::ostringstream out;
        out << "left,right,indices,crossings\n";
        for (const auto& c : cards)
            out << '"' << join_ints(c.left().parts()) << "\",\"" << join_ints(c.right().parts())
                << "\",\"" << (c.is_trivial() ? std::string() : join_ints(c.indices())) << "\","
                << c.crossings() << '\n';
        emit(g, out.str());
    } else {
        std::ostringstream out;
        for (const auto& c : cards) {
            out << c.left().str() << " -> " << c.right().str();
            if (c.is_trivial())
                out << "  trivial";
            else
                out << "  indices(" << join_ints(c.indices(), ',') << ")";
            out << "  crossings " << c.crossings() << '\n';
        }
        out << "total " << cards.size() << '\n';
        emit(g, out.str());
    }
    return 0;
}

// --------------------------------------------------------------- matrix --

struct matrix_options {
    int balls = 0;
    std::string variant = "plain";
    std::optional<int> kappa;
};

int run_matrix(const global_options& g, const matrix_options& o) {
    const bool q_weighted = o.variant == "q" || o.variant == "q-capped";
    const bool capped = o.variant == "capped" || o.variant == "q-capped";
    const bool distinct = o.variant == "distinct";
    if (capped && !o.kappa) throw CLI::ValidationError("matrix: --capacity required for " + o.variant);

    require_feasible(o.balls <= 13, g, "matrix: dense builds above b=13 need gigabytes");
    require_feasible(!q_weighted || o.balls <= 8, g,
                     "matrix: q-weighted builds enumerate every card; b>8 is very slow");
    require_feasible(!distinct || o.balls <= 9, g,
                     "matrix: distinct-height builds enumerate every card; b>9 is very slow");

    juggle::card_filter filter{capped ? o.kappa : std::nullopt, distinct};
    if (q_weighted) {
        auto m = juggle::build_transfer_q(o.balls, filter);
        if (g.format == "json") {
            emit_json(g, juggle::matrix_json(m, o.variant, o.balls));
        } else if (g.format == "csv") {
            std::ostringstream out;
            for (int i = 0; i < m.dim(); ++i)
                for (int j = 0; j < m.dim(); ++j)
                    out << m.at(i, j).str("q") << (j + 1 < m.dim() ? "," : "\n");
            emit(g, out.str());
        } else {
            std::ostringstream out;
            for (int i = 0; i < m.dim(); ++i) {
                out << m.labels()[static_cast<std::size_t>(i)].str() << ":";
                for (int j = 0; j < m.dim(); ++j) out << "  " << m.at(i, j).str("q");
                out << '\n';
            }
            emit(g, out.str());
        }
        return 0;
    }

    auto m = juggle::build_transfer(o.balls, filter);
    if (g.format == "json") {
        emit_json(g, juggle::matrix_json(m, o.variant, o.balls));
    } else if (g.format == "csv") {
        std::ostringstream out;
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                out << m.at(i, j).get_str() << (j + 1 < m.dim() ? "," : "\n");
        emit(g, out.str());
    } else {
        std::ostringstream out;
        for (int i = 0; i < m.dim(); ++i) {
            out << m.labels()[static_cast<std::size_t>(i)].str() << ":";
            for (int j = 0; j < m.dim(); ++j) out << ' ' << m.at(i, j).get_str();
            out << '\n';
        }
        emit(g, out.str());
    }
    return 0;
}

// ---------------------------------------------------------------- count --

struct count_options {
    int balls = 0;
    int period = 1;
    std::optional<int> kappa;
    bool q_refined = false;
};

int run_count(const global_options& g, const count_options& o) {
    require_feasible(o.balls <= 13 || o.period == 1, g,
                     "count: periods above 1 need dense matrices; b>13 is infeasible");
    require_feasible(o.balls <= 16, g, "count: b>16 exceeds the trace enumeration bound");
    require_feasible(!o.q_refined || o.balls <= 8, g,
                     "count: q-refined counts enumerate every card; b>8 is very slow");

    juggle::pattern_counter counter(cache_path(g));
    if (o.q_refined) {
        auto d = counter.count_q(o.balls, o.period, o.kappa);
        if (g.format == "json")
            emit_json(g, juggle::to_json(d));
        else
            emit(g, d.patterns.str("q"));
    } else {
        auto d = counter.count(o.balls, o.period, o.kappa);
        if (g.format == "json")
            emit_json(g, juggle::to_json(d));
        else
            emit(g, d.patterns.get_str());
    }
    return 0;
}

// ---------------------------------------------------------------- table --

struct table_options {
    std::string balls = "2..5";
    std::string period = "1..15";
    std::optional<int> kappa;
};

int run_table(const global_options& g, const table_options& o) {
    const auto [b_lo, b_hi] = parse_range(o.balls);
    const auto [n_lo, n_hi] = parse_range(o.period);
    require_feasible(b_hi <= 13, g, "table: b>13 needs infeasibly large dense matrices");

    juggle::pattern_counter counter(cache_path(g));
    const auto records = counter.table(b_lo, b_hi, n_lo, n_hi, o.kappa);
    if (g.format == "json") {
        emit_json(g, juggle::table_json(records));
    } else if (g.format == "csv") {
        emit(g, juggle::table_csv(records));
    } else {
        std::ostringstream out;
        for (const auto& r : records)
            out << "b=" << r.balls << " n=" << r.period << " kappa="
                << (r.capacity ? std::to_string(*r.capacity) : "inf") << " jp="
                << r.patterns.get_str() << '\n';
        emit(g, out.str());
    }
    return 0;
}

// --------------------------------------------------------------- verify --

struct verify_options {
    std::string suite = "all";
    int max_balls = 3;
    int max_period = 4;
};

int run_verify(const global_options& g, const verify_options& o) {
    require_feasible(o.max_balls <= 4 && o.max_period <= 6, g,
                     "verify: exhaustive checks above b=4, n=6 take a very long time");
    const juggle::oracle_limits limits{std::max(o.max_balls, 4), std::max(o.max_period, 6)};
    juggle::pattern_counter counter(cache_path(g));
    std::vector<juggle::check_result> checks;

    auto want = [&](const char* name) { return o.suite == "all" || o.suite == name; };

    if (want("walks")) {
        const std::vector<juggle::card_filter> variants{
            {}, {std::optional<int>{2}, false}, {std::nullopt, true}};
        for (const auto& filter : variants)
            for (int b = 0; b <= o.max_balls; ++b)
                for (int n = 1; n <= o.max_period; ++n) {
                    const auto walks = juggle::count_closed_walks(b, n, filter, limits);
                    juggle::big_int trace;
                    if (filter.distinct_heights)
                        trace = n == 1 ? juggle::transfer_trace(b, filter)
                                       : juggle::build_transfer(b, filter)
                                             .pow(static_cast<std::uint64_t>(n))
                                             .trace();
                    else
                        trace = counter.trace_power(b, n, filter.kappa);
                    juggle::check_result r;
                    r.name = "closed walks equal trace [" + filter.describe() + "]";
                    r.parameters = "b=" + std::to_string(b) + ", n=" + std::to_string(n);
                    r.expected = trace.get_str();
                    r.actual = walks.get_str();
                    r.pass = walks == trace;
                    checks.push_back(std::move(r));
                }
    }
    if (want("siteswaps")) {
        for (int b = 0; b <= o.max_balls; ++b)
            for (int n = 1; n <= o.max_period; ++n) {
                const auto codes = juggle::enumerate_siteswaps(b, n, limits);
                const auto expected = counter.siteswap_count(b, n);
                juggle::check_result r;
                r.name = "deduplicated siteswaps equal ss";
                r.parameters = "b=" + std::to_string(b) + ", n=" + std::to_string(n);
                r.expected = expected.get_str();
                r.actual = std::to_string(codes.size());
                r.pass = juggle::big_int(static_cast<unsigned long>(codes.size())) == expected;
                checks.push_back(std::move(r));
            }
    }
    if (want("patterns")) {
        for (int b = 0; b <= o.max_balls; ++b)
            for (int n = 1; n <= o.max_period; ++n) {
                const auto classes = juggle::enumerate_patterns(b, n, limits);
                const auto expected = counter.pattern_count(b, n);
                juggle::check_result r;
                r.name = "rotation classes equal jp";
                r.parameters = "b=" + std::to_string(b) + ", n=" + std::to_string(n);
                r.expected = expected.get_str();
                r.actual = std::to_string(classes.size());
                r.pass = juggle::big_int(static_cast<unsigned long>(classes.size())) == expected;
                checks.push_back(std::move(r));
            }
    }
    if (want("crossings")) {
        for (int b = 0; b <= o.max_balls; ++b)
            for (int n = 1; n <= o.max_period; ++n)
                checks.push_back(juggle::verify_crossing_counts(b, n, limits));
    }
    if (want("identities")) {
        for (int b = 0; b <= 8; ++b) {
            const auto rep = counter.trace_identities(b);
            juggle::check_result r;
            r.name = "trace identities";
            r.parameters = "b=" + std::to_string(b);
            r.expected = rep.trace.get_str();
            r.actual = rep.partition_weighted_sum.get_str() + "/" + rep.ones_power_sum.get_str() +
                       "/jp1=" + rep.period1_patterns.get_str();
            r.pass = rep.pass();
            checks.push_back(std::move(r));
        }
    }

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    if (g.format == "json") {
        json out;
        out["suite"] = o.suite;
        out["pass"] = all_pass;
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(juggle::to_json(c));
        out["checks"] = arr;
        emit_json(g, out);
    } else {
        std::ostringstream out;
        for (const auto& c : checks)
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.parameters
                << "): expected " << c.expected << ", got " << c.actual << '\n';
        out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
        emit(g, out.str());
    }
    return all_pass ? 0 : kExitVerifyFailed;
}

// ------------------------------------------------------------- charpoly --

int run_charpoly(const global_options& g, int balls) {
    require_feasible(balls <= 8, g,
                     "charpoly: the exact recurrence is quartic in the dimension; b>8 is very slow");
    const auto report = juggle::charpoly_factor_report(balls);
    if (g.format == "json") {
        emit_json(g, juggle::to_json(report));
    } else {
        std::ostringstream out;
        out << "characteristic polynomial (b=" << balls << "): " << report.characteristic.str()
            << '\n';
        out << "known-factor exponents used: ";
        for (std::size_t i = 0; i < report.exponents_used.size(); ++i)
            out << (i ? ", " : "") << "f" << i << "^" << report.exponents_used[i];
        out << '\n';
        if (!report.division_ok) {
            out << "DIVISION FAILED at " << report.division_failure << '\n';
        } else {
            out << "residual: " << report.residual.str() << '\n';
            out << "degree " << report.actual_degree << " (expected " << report.expected_degree
                << "), second coefficient " << report.actual_second_coefficient.get_str()
                << " (expected " << report.expected_second_coefficient.get_str()
                << "), constant " << report.actual_constant.get_str() << " (expected "
                << report.expected_constant.get_str() << ")\n";
        }
        for (const auto& note : report.notes) out << "note: " << note << '\n';
        out << (report.pass() ? "PASS" : "FAIL") << '\n';
        emit(g, out.str());
    }
    return report.pass() ? 0 : kExitVerifyFailed;
}

// ----------------------------------------------------------- conjecture --

int run_conjecture(const global_options& g, int b_max) {
    require_feasible(b_max <= 64, g, "conjecture: card totals above b=64 take a while");
    const auto report = juggle::conjecture_check(b_max);
    if (g.format == "json") {
        emit_json(g, juggle::to_json(report));
    } else {
        std::ostringstream out;
        for (std::size_t b = 0; b < report.card_totals.size(); ++b)
            out << "b=" << b << " cards=" << report.card_totals[b].get_str()
                << " series=" << report.series[b].get_str()
                << (report.matches[b] ? " ok" : " MISMATCH") << '\n';
        out << (report.all_pass() ? "PASS" : "FAIL") << '\n';
        emit(g, out.str());
    }
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    global_options g;

    CLI::App app{"exact enumeration of multiplex juggling patterns"};
    app.require_subcommand(1);
    // Let global flags (--format, --force, ...) appear after the
    // subcommand name as well.
    app.fallthrough();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "write output to a file instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for matrix multiplication")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", g.force, "override feasibility guards");
    app.add_option("--cache-dir", g.cache_dir, "directory for persistent trace caching")
        ->envname("JUGGLE_CACHE_DIR");

    cards_options cards_o;
    auto* cards_cmd = app.add_subcommand("cards", "enumerate cards");
    cards_cmd->add_option("--balls,-b", cards_o.balls, "ball count")->required();
    cards_cmd->add_option("--capacity,-k", cards_o.kappa, "track capacity filter");
    cards_cmd->add_flag("--distinct", cards_o.distinct, "only distinct-height cards");
    cards_cmd->add_option("--render", cards_o.render_path, "write an SVG card strip");

    matrix_options matrix_o;
    auto* matrix_cmd = app.add_subcommand("matrix", "build a transfer matrix");
    matrix_cmd->add_option("--balls,-b", matrix_o.balls, "ball count")->required();
    matrix_cmd->add_option("--variant", matrix_o.variant, "matrix variant")
        ->check(CLI::IsMember({"plain", "capped", "distinct", "q", "q-capped"}))
        ->capture_default_str();
    matrix_cmd->add_option("--capacity,-k", matrix_o.kappa, "capacity for capped variants");

    count_options count_o;
    auto* count_cmd = app.add_subcommand("count", "count patterns for one (b, n)");
    count_cmd->add_option("--balls,-b", count_o.balls, "ball count")->required();
    count_cmd->add_option("--period,-n", count_o.period, "period")->required()
        ->check(CLI::PositiveNumber);
    count_cmd->add_option("--capacity,-k", count_o.kappa, "track capacity");
    count_cmd->add_flag("--q", count_o.q_refined, "crossing-refined polynomial counts");

    table_options table_o;
    auto* table_cmd = app.add_subcommand("table", "pattern-count table over ranges");
    table_cmd->add_option("--balls,-b", table_o.balls, "ball range, e.g. 2..5")
        ->capture_default_str();
    table_cmd->add_option("--period,-n", table_o.period, "period range, e.g. 1..15")
        ->capture_default_str();
    table_cmd->add_option("--capacity,-k", table_o.kappa, "track capacity");

    verify_options verify_o;
    auto* verify_cmd = app.add_subcommand("verify", "brute-force verification suite");
    verify_cmd->add_option("--suite", verify_o.suite, "which checks to run")
        ->check(CLI::IsMember({"all", "walks", "siteswaps", "patterns", "crossings", "identities"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-balls", verify_o.max_balls, "ball bound")
        ->capture_default_str();
    verify_cmd->add_option("--max-period", verify_o.max_period, "period bound")
        ->capture_default_str();

    int charpoly_balls = 0;
    auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial factor report");
    charpoly_cmd->add_option("--balls,-b", charpoly_balls, "ball count")->required();

    int conjecture_bmax = 25;
    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "capacity-2 card-total generating function check");
    conjecture_cmd->add_option("--max-balls", conjecture_bmax, "check through this ball count")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    juggle::set_max_threads(g.threads);

    try {
        if (app.got_subcommand(cards_cmd)) return run_cards(g, cards_o);
        if (app.got_subcommand(matrix_cmd)) return run_matrix(g, matrix_o);
        if (app.got_subcommand(count_cmd)) return run_count(g, count_o);
        if (app.got_subcommand(table_cmd)) return run_table(g, table_o);
        if (app.got_subcommand(verify_cmd)) return run_verify(g, verify_o);
        if (app.got_subcommand(charpoly_cmd)) return run_charpoly(g, charpoly_balls);
        if (app.got_subcommand(conjecture_cmd)) return run_conjecture(g, conjecture_bmax);
    } catch (const juggle::feasibility_error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
