#include "cli_core.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <narop/critical_points.hpp>
#include <narop/dimensions.hpp>
#include <narop/errors.hpp>
#include <narop/golden.hpp>
#include <narop/koszul.hpp>
#include <narop/limits.hpp>
#include <narop/presentation.hpp>
#include <narop/rank.hpp>
#include <narop/series.hpp>

namespace narop::cli {
namespace {

/// Bad arguments discovered after CLI11 parsing (missing required value,
/// malformed range, unwritable output path, ...).  Mapped to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Options shared by every subcommand.

struct CommonOptions {
    std::string format = "human"; // human | json | csv
    bool json_flag = false;       // --json shorthand for --format json
    std::string reproduce;        // golden table id to recompute and diff
    std::string rank_mode = "auto";
    int primes = 2;
    long max_trees = 0;          // 0: keep environment/default cap
    long max_matrix_entries = 0; // 0: keep environment/default cap
    double time_budget = 0.0;    // seconds; 0: keep environment/default
    double progress_interval = 5.0;
};

void add_common_options(CLI::App* sub, CommonOptions& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    sub->add_flag("--json", o.json_flag, "Shorthand for --format json");
    sub->add_option("--reproduce", o.reproduce,
                    "Recompute the embedded reference table with this id and diff "
                    "against it (exit 4 on mismatch)");
    sub->add_option("--rank-mode", o.rank_mode, "Matrix rank strategy")
        ->check(CLI::IsMember({"auto", "exact", "modular"}))
        ->capture_default_str();
    sub->add_option("--primes", o.primes,
                    "Independent random primes required to agree for a modular-certified rank")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-trees", o.max_trees,
                    "Cap on trees per arity component (default from NAROP_MAX_TREES)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-matrix-entries", o.max_matrix_entries,
                    "Cap on relation-matrix nonzeros (default from NAROP_MAX_MATRIX_ENTRIES)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", o.time_budget,
                    "Wall-clock budget in seconds (default from NAROP_TIME_BUDGET)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--progress-interval", o.progress_interval,
                    "Seconds between progress lines on the diagnostic stream")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string effective_format(const CommonOptions& o) {
    return o.json_flag ? std::string("json") : o.format;
}

ResourceLimits make_limits(const CommonOptions& o) {
    ResourceLimits lim = ResourceLimits::from_env();
    if (o.max_trees > 0) lim.max_trees = o.max_trees;
    if (o.max_matrix_entries > 0) lim.max_matrix_entries = o.max_matrix_entries;
    if (o.time_budget > 0) lim.time_budget_seconds = o.time_budget;
    return lim;
}

Deadline make_deadline(const ResourceLimits& lim) {
    return Deadline(lim.time_budget_seconds);
}

RankOptions make_rank_options(const CommonOptions& o) {
    RankOptions r;
    if (o.rank_mode == "exact")
        r.mode = RankMode::Exact;
    else if (o.rank_mode == "modular")
        r.mode = RankMode::Modular;
    else
        r.mode = RankMode::Auto;
    r.prime_count = o.primes;
    return r;
}

ProgressFn make_progress(std::ostream& err, long n, long bound) {
    return [&err, n, bound](const SearchProgress& p) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "[n=%ld] degree %ld/%ld  elapsed %.1fs  coefficient bits %ld", n, p.degree,
                      bound, p.elapsed_seconds, p.coefficient_bits);
        err << buf << "\n";
    };
}

// ---------------------------------------------------------------------------
// Small shared helpers.

/// "2..7", "2,5,9" or "4" -> ascending list of distinct arities >= 2.
std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> ns;
    auto parse_long = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const long v = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw usage_error("cannot parse arity value '" + s + "' in --n " + text);
        }
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const long lo = parse_long(text.substr(0, dots));
        const long hi = parse_long(text.substr(dots + 2));
        if (lo > hi) throw usage_error("--n range is empty: " + text);
        for (long n = lo; n <= hi; ++n) ns.push_back(n);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) ns.push_back(parse_long(item));
    }
    if (ns.empty()) throw usage_error("--n selects no arities: " + text);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (long n : ns)
        if (n < 2) throw usage_error("arity must be at least 2, got " + std::to_string(n));
    return ns;
}

void require_option(bool present, const std::string& what) {
    if (!present) throw usage_error("missing required option " + what);
}

OperadPresentation make_presentation(const std::string& family, long n, long d) {
    if (family.empty()) throw usage_error("missing required option --family");
    if (n < 2) throw usage_error("--n must be at least 2");
    return OperadPresentation{family_from_string(family), n, d};
}

void write_text_file(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw usage_error("failed while writing '" + path + "'");
}

void emit_series(const ExactSeries& s, const std::string& fmt, std::ostream& out) {
    if (fmt == "json") {
        out << to_json_string(s) << "\n";
    } else if (fmt == "csv") {
        out << "exponent,coefficient\n";
        for (long e = 0; e <= s.order(); ++e)
            if (sgn(s.coefficient(e)) != 0)
                out << e << "," << rational_to_string(s.coefficient(e)) << "\n";
    } else {
        out << to_string(s) << "\n";
    }
}

/// Human-readable location of the first difference between two series.
std::string series_diff(const ExactSeries& got, const ExactSeries& want) {
    std::ostringstream os;
    if (got.order() != want.order())
        os << "  truncation order differs: computed O(t^" << got.order() + 1 << "), reference O(t^"
           << want.order() + 1 << ")\n";
    const long common = std::min(got.order(), want.order());
    for (long e = 0; e <= common; ++e) {
        if (got.coefficient(e) != want.coefficient(e)) {
            os << "  first differing coefficient at t^" << e << ": computed "
               << rational_to_string(got.coefficient(e)) << ", reference "
               << rational_to_string(want.coefficient(e)) << "\n";
            break;
        }
    }
    return os.str();
}

std::string describe_integer(const Integer& v) {
    const std::string s = v.get_str();
    if (s.size() <= 64) return s;
    return "(negative integer with " + std::to_string(s.size() - (s[0] == '-' ? 1 : 0)) +
           " decimal digits)";
}

// ---------------------------------------------------------------------------
// First-negative table shared by `gk`, `table` and `plot`.

struct FirstNegativeRow {
    long n = 0;
    std::optional<long> p;
    std::optional<long> exponent;
    long searched_to = 0;
};

std::vector<FirstNegativeRow> run_first_negative(const std::vector<long>& ns, long bound,
                                                 const Deadline& deadline,
                                                 const CommonOptions& common, std::ostream& err) {
    std::vector<FirstNegativeRow> rows;
    for (long n : ns) {
        const FirstNegativeResult r = gk_inverse_test(n, bound, deadline, make_progress(err, n, bound),
                                                      common.progress_interval);
        FirstNegativeRow row;
        row.n = n;
        row.p = r.p_index;
        row.exponent = r.first_negative_exponent;
        row.searched_to = bound;
        rows.push_back(row);
    }
    return rows;
}

std::string first_negative_csv(const std::vector<FirstNegativeRow>& rows) {
    std::ostringstream os;
    os << "n,p\n";
    for (const auto& r : rows) {
        os << r.n << ",";
        if (r.p) os << *r.p;
        os << "\n";
    }
    return os.str();
}

std::string first_negative_json(const std::vector<FirstNegativeRow>& rows, long bound) {
    nlohmann::json j;
    j["bound"] = bound;
    auto& out = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["n"] = r.n;
        if (r.p) {
            row["p"] = *r.p;
            row["exponent"] = *r.exponent;
        } else {
            row["searched_to"] = r.searched_to;
        }
        out.push_back(std::move(row));
    }
    return j.dump();
}

void first_negative_human(const std::vector<FirstNegativeRow>& rows, std::ostream& out) {
    out << "  n    p    exponent\n";
    for (const auto& r : rows) {
        char buf[64];
        if (r.p) {
            std::snprintf(buf, sizeof(buf), "%3ld  %4ld  %8ld", r.n, *r.p, *r.exponent);
            out << buf << "\n";
        } else {
            std::snprintf(buf, sizeof(buf), "%3ld  ", r.n);
            out << buf << "∞? (no negative ≤ " << r.searched_to << ")\n";
        }
    }
}

/// Minimal SVG rendering of the table: x = p (linear), y = one step per
/// arity n, found values as filled dots joined by a polyline, unresolved
/// arities as an open marker pinned to the right edge.
std::string first_negative_svg(const std::vector<FirstNegativeRow>& rows) {
    const int width = 640, height = 400;
    const int ml = 80, mr = 40, mt = 40, mb = 55;
    long n_min = rows.front().n, n_max = rows.back().n;
    long p_max = 50;
    for (const auto& r : rows)
        if (r.p) p_max = std::max(p_max, *r.p);
    p_max = ((p_max + 49) / 50) * 50;

    const double plot_w = width - ml - mr, plot_h = height - mt - mb;
    auto x_of = [&](double p) { return ml + p / static_cast<double>(p_max) * plot_w; };
    auto y_of = [&](long n) {
        const long span = std::max<long>(1, n_max - n_min);
        return mt + plot_h - static_cast<double>(n - n_min) / span * plot_h;
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
          "font-family=\"sans-serif\">index p of the first negative inverse coefficient, by arity "
          "n</text>\n";
    // axes
    os << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    for (long p = 0; p <= p_max; p += 50) {
        const double x = x_of(static_cast<double>(p));
        os << "  <line x1=\"" << x << "\" y1=\"" << height - mb << "\" x2=\"" << x << "\" y2=\""
           << height - mb + 6 << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << height - mb + 22
           << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" << p
           << "</text>\n";
    }
    os << "  <text x=\"" << width - mr << "\" y=\"" << height - 12
       << "\" text-anchor=\"end\" font-size=\"13\" font-family=\"sans-serif\">p</text>\n";
    for (long n = n_min; n <= n_max; ++n) {
        const double y = y_of(n);
        os << "  <line x1=\"" << ml - 6 << "\" y1=\"" << y << "\" x2=\"" << ml << "\" y2=\"" << y
           << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << ml - 10 << "\" y=\"" << y + 4
           << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">n=" << n
           << "</text>\n";
    }
    // connecting polyline through the found points
    std::ostringstream pts;
    for (const auto& r : rows)
        if (r.p) pts << x_of(static_cast<double>(*r.p)) << "," << y_of(r.n) << " ";
    os << "  <polyline points=\"" << pts.str()
       << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (const auto& r : rows) {
        if (r.p) {
            os << "  <circle cx=\"" << x_of(static_cast<double>(*r.p)) << "\" cy=\"" << y_of(r.n)
               << "\" r=\"4\" fill=\"black\"/>\n";
            os << "  <text x=\"" << x_of(static_cast<double>(*r.p)) + 8 << "\" y=\""
               << y_of(r.n) - 8 << "\" font-size=\"12\" font-family=\"sans-serif\">p=" << *r.p
               << "</text>\n";
        } else {
            const double x = x_of(static_cast<double>(p_max));
            os << "  <circle cx=\"" << x << "\" cy=\"" << y_of(r.n)
               << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
            os << "  <text x=\"" << x - 10 << "\" y=\"" << y_of(r.n) - 8
               << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
                  "∞? (none ≤ "
               << r.searched_to << ")</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Reproduction: recompute an embedded reference table and diff.

enum class GoldKind { Inverse, FirstNegative, Generating, Generator, Gap, Critical };

std::string ids_for(std::initializer_list<GoldKind> kinds) {
    const GoldenData& g = golden();
    std::vector<std::string> ids;
    for (GoldKind k : kinds) {
        switch (k) {
        case GoldKind::Inverse:
            for (const auto& e : g.inverse_series) ids.push_back(e.id);
            break;
        case GoldKind::FirstNegative:
            ids.push_back("first-negative-table");
            break;
        case GoldKind::Generating:
            for (const auto& e : g.generating_series) ids.push_back(e.id);
            break;
        case GoldKind::Generator:
            for (const auto& e : g.generator_series) ids.push_back(e.id);
            break;
        case GoldKind::Gap:
            for (const auto& e : g.gaps) ids.push_back(e.id);
            break;
        case GoldKind::Critical:
            ids.push_back("critical-points");
            break;
        }
    }
    std::string joined;
    for (const auto& id : ids) {
        if (!joined.empty()) joined += ", ";
        joined += id;
    }
    return joined;
}

int finish_reproduce(bool ok, const std::string& id, const std::string& detail, std::ostream& out,
                     std::ostream& err) {
    if (ok) {
        out << "reproduce " << id << ": OK\n";
        return 0;
    }
    err << "reproduce " << id << ": MISMATCH\n" << detail;
    return 4;
}

int run_reproduce(const std::string& id, std::initializer_list<GoldKind> allowed,
                  const CommonOptions& common, std::ostream& out, std::ostream& err) {
    const GoldenData& g = golden();
    const ResourceLimits limits = make_limits(common);
    const Deadline deadline = make_deadline(limits);
    const RankOptions rank = make_rank_options(common);

    auto allows = [&](GoldKind k) {
        return std::find(allowed.begin(), allowed.end(), k) != allowed.end();
    };

    if (const GoldenInverse* e = g.find_inverse(id); e && allows(GoldKind::Inverse)) {
        const ExactSeries got = invert(SparseTrinomial{e->n}, e->series.order());
        return finish_reproduce(got == e->series, id, series_diff(got, e->series), out, err);
    }

    if (id == "first-negative-table" && allows(GoldKind::FirstNegative)) {
        std::ostringstream detail;
        bool ok = true;
        for (const auto& row : g.first_negative) {
            const long bound = row.p ? *row.exponent : row.searched_to;
            const FirstNegativeResult r =
                gk_inverse_test(row.n, bound, deadline, make_progress(err, row.n, bound),
                                common.progress_interval);
            if (row.p) {
                if (r.p_index != row.p || r.first_negative_exponent != row.exponent) {
                    ok = false;
                    detail << "  n=" << row.n << ": expected first negative at p=" << *row.p
                           << " (t^" << *row.exponent << "), computed "
                           << (r.p_index ? "p=" + std::to_string(*r.p_index) + " (t^" +
                                               std::to_string(*r.first_negative_exponent) + ")"
                                         : std::string("none up to the bound"))
                           << "\n";
                }
            } else if (r.first_negative_exponent) {
                ok = false;
                detail << "  n=" << row.n << ": expected no negative up to t^" << row.searched_to
                       << ", computed one at t^" << *r.first_negative_exponent << "\n";
            }
        }
        return finish_reproduce(ok, id, detail.str(), out, err);
    }

    if (const GoldenSeriesEntry* e = g.find_generating(id); e && allows(GoldKind::Generating)) {
        const ExactSeries got = generating_series(e->presentation, e->max_p, rank, limits, deadline);
        return finish_reproduce(got == e->series, id, series_diff(got, e->series), out, err);
    }

    if (const GoldenSeriesEntry* e = g.find_generator(id); e && allows(GoldKind::Generator)) {
        const ExactSeries got = generator_series(e->presentation, e->max_p, rank, limits, deadline);
        return finish_reproduce(got == e->series, id, series_diff(got, e->series), out, err);
    }

    if (const GoldenGap* e = g.find_gap(id); e && allows(GoldKind::Gap)) {
        const ExactSeries gen = generator_series(e->presentation, e->max_p, rank, limits, deadline);
        const GapReport report = detect_gap(gen, e->presentation.n);
        std::ostringstream detail;
        bool ok = true;
        if (!report.zero_run) {
            ok = false;
            detail << "  expected a zero run at q=" << e->q << ", computed none\n";
        } else if (report.zero_run->q != e->q || report.zero_run->length != e->length ||
                   report.zero_run->open_ended != e->open_ended) {
            ok = false;
            detail << "  expected q=" << e->q << " length=" << e->length
                   << (e->open_ended ? " (open-ended)" : " (confirmed)") << ", computed q="
                   << report.zero_run->q << " length=" << report.zero_run->length
                   << (report.zero_run->open_ended ? " (open-ended)" : " (confirmed)") << "\n";
        }
        return finish_reproduce(ok, id, detail.str(), out, err);
    }

    if (id == "critical-points" && allows(GoldKind::Critical)) {
        std::ostringstream detail;
        bool ok = true;
        for (const auto& row : g.critical_points) {
            const CriticalPointReport r = derivative_roots(row.n);
            if (r.discriminant != row.discriminant || r.theorem_applies != row.theorem_applies) {
                ok = false;
                detail << "  n=" << row.n << ": expected discriminant " << row.discriminant
                       << " applies=" << row.theorem_applies << ", computed "
                       << r.discriminant.get_str() << " applies=" << r.theorem_applies << "\n";
                continue;
            }
            if (!row.real_w_roots.empty()) {
                std::vector<std::string> got;
                for (const auto& root : r.real_w_roots) got.push_back(root.to_string());
                if (got != row.real_w_roots) {
                    ok = false;
                    detail << "  n=" << row.n << ": w-roots differ from the reference\n";
                }
            }
        }
        return finish_reproduce(ok, id, detail.str(), out, err);
    }

    throw usage_error("unknown reproduction id '" + id + "' for this subcommand; valid ids: " +
                      ids_for(allowed));
}

// ---------------------------------------------------------------------------
// Subcommand implementations.

struct InvertArgs {
    std::string series_text;
    long order = -1; // -1: use the parsed order
};

int cmd_invert(const InvertArgs& a, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::Inverse}, common, out, err);
    require_option(!a.series_text.empty(), "--series");
    ExactSeries g = parse_series(a.series_text);
    if (a.order >= 0) g = g.with_order(a.order);
    emit_series(invert(g), effective_format(common), out);
    return 0;
}

struct GkArgs {
    long n = 0;
    long bound = 2000;
};

int cmd_gk(const GkArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::FirstNegative}, common, out, err);
    require_option(a.n != 0, "--n");
    if (a.n < 2) throw usage_error("--n must be at least 2");
    const ResourceLimits limits = make_limits(common);
    const FirstNegativeResult r = gk_inverse_test(a.n, a.bound, make_deadline(limits),
                                                  make_progress(err, a.n, a.bound),
                                                  common.progress_interval);
    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        out << r.to_json_string() << "\n";
    } else if (fmt == "csv") {
        out << "n,p\n" << r.n << ",";
        if (r.p_index) out << *r.p_index;
        out << "\n";
    } else {
        if (r.first_negative_exponent) {
            out << "n = " << r.n << ": first negative coefficient at t^"
                << *r.first_negative_exponent << " (p = " << *r.p_index
                << "), value " << describe_integer(r.coefficient) << "\n";
            out << "the operad is not Koszul (negative coefficient certificate)\n";
        } else {
            out << "n = " << r.n << ": no negative coefficient up to t^" << r.search_bound << "\n";
            out << "evidence only; a negative term may still occur beyond the bound\n";
        }
    }
    return 0;
}

struct TableArgs {
    std::string n_list = "2..7";
    long bound = 2000;
    std::string csv_path;
    std::string svg_path;
};

int cmd_table(const TableArgs& a, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::FirstNegative}, common, out, err);
    const std::vector<long> ns = parse_n_list(a.n_list);
    const ResourceLimits limits = make_limits(common);
    const std::vector<FirstNegativeRow> rows =
        run_first_negative(ns, a.bound, make_deadline(limits), common, err);

    const std::string fmt = effective_format(common);
    if (fmt == "json")
        out << first_negative_json(rows, a.bound) << "\n";
    else if (fmt == "csv")
        out << first_negative_csv(rows);
    else
        first_negative_human(rows, out);

    if (!a.csv_path.empty()) write_text_file(a.csv_path, first_negative_csv(rows), out);
    if (!a.svg_path.empty()) write_text_file(a.svg_path, first_negative_svg(rows), out);
    return 0;
}

struct PlotArgs {
    std::string n_list = "2..8";
    long bound = 2000;
    std::string csv_path = "first_negative.csv";
    std::string svg_path = "first_negative.svg";
    bool from_golden = false;
};

int cmd_plot(const PlotArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::FirstNegative}, common, out, err);
    std::vector<FirstNegativeRow> rows;
    if (a.from_golden) {
        for (const auto& row : golden().first_negative) {
            FirstNegativeRow r;
            r.n = row.n;
            r.p = row.p;
            r.exponent = row.exponent;
            r.searched_to = row.p ? *row.exponent : row.searched_to;
            rows.push_back(r);
        }
    } else {
        const std::vector<long> ns = parse_n_list(a.n_list);
        const ResourceLimits limits = make_limits(common);
        rows = run_first_negative(ns, a.bound, make_deadline(limits), common, err);
    }
    write_text_file(a.csv_path, first_negative_csv(rows), out);
    write_text_file(a.svg_path, first_negative_svg(rows), out);
    if (a.csv_path != "-" && a.svg_path != "-")
        out << "wrote " << a.csv_path << " and " << a.svg_path << " (" << rows.size()
            << " arities)\n";
    return 0;
}

struct PresentationArgs {
    std::string family;
    long n = 0;
    long d = 0;
    long max_p = -1;
};

int cmd_dims(const PresentationArgs& a, const CommonOptions& common, std::ostream& out,
             std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::Generating}, common, out, err);
    require_option(a.max_p >= 0, "--max-p");
    const OperadPresentation pres = make_presentation(a.family, a.n, a.d);
    const ResourceLimits limits = make_limits(common);
    const DimensionTable table =
        dimension_table(pres, a.max_p, make_rank_options(common), limits, make_deadline(limits));

    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        out << table.to_json_string() << "\n";
    } else if (fmt == "csv") {
        out << "p,arity,dim,mode\n";
        for (const auto& e : table.entries)
            out << e.p << "," << e.arity << "," << e.dim << ","
                << (e.modular_certified ? "modular" : "exact") << "\n";
    } else {
        out << pres.to_string() << "\n";
        out << "   p  arity    dim  rank mode\n";
        for (const auto& e : table.entries) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%4ld  %5ld  %5ld  %s", e.p, e.arity, e.dim,
                          e.modular_certified ? "modular" : "exact");
            out << buf << "\n";
        }
        out << "generating series: " << to_string(generating_series(table)) << "\n";
    }
    return 0;
}

int cmd_series(const PresentationArgs& a, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::Generating}, common, out, err);
    require_option(a.max_p >= 0, "--max-p");
    const OperadPresentation pres = make_presentation(a.family, a.n, a.d);
    const ResourceLimits limits = make_limits(common);
    const ExactSeries s =
        generating_series(pres, a.max_p, make_rank_options(common), limits, make_deadline(limits));
    emit_series(s, effective_format(common), out);
    return 0;
}

int cmd_dual(const PresentationArgs& a, const CommonOptions& common, std::ostream& out,
             std::ostream& err) {
    if (!common.reproduce.empty())
        throw usage_error("dual has no reproduction ids");
    (void)err;
    const OperadPresentation pres = make_presentation(a.family, a.n, a.d);
    const OperadPresentation dual = dual_presentation(pres);
    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        nlohmann::json j;
        j["presentation"] = {{"family", family_to_string(pres.family)}, {"n", pres.n}, {"d", pres.d}};
        j["dual"] = {{"family", family_to_string(dual.family)}, {"n", dual.n}, {"d", dual.d}};
        out << j.dump() << "\n";
    } else if (fmt == "csv") {
        out << "family,n,d,dual_family,dual_n,dual_d\n";
        out << family_to_string(pres.family) << "," << pres.n << "," << pres.d << ","
            << family_to_string(dual.family) << "," << dual.n << "," << dual.d << "\n";
    } else {
        out << "presentation: " << pres.to_string() << "\n";
        out << "dual:         " << dual.to_string() << "\n";
    }
    return 0;
}

int cmd_gap(const PresentationArgs& a, const CommonOptions& common, std::ostream& out,
            std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::Generator, GoldKind::Gap}, common, out,
                             err);
    require_option(a.max_p >= 0, "--max-p");
    const OperadPresentation pres = make_presentation(a.family, a.n, a.d);
    const ResourceLimits limits = make_limits(common);
    const ExactSeries gen =
        generator_series(pres, a.max_p, make_rank_options(common), limits, make_deadline(limits));
    const GapReport report = detect_gap(gen, pres.n);

    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        out << report.to_json_string() << "\n";
    } else if (fmt == "csv") {
        out << "p,coefficient\n";
        for (const auto& [p, c] : report.generator_coefficients)
            out << p << "," << rational_to_string(c) << "\n";
    } else {
        out << pres.to_string() << "\n";
        out << "generator series: " << to_string(gen) << "\n";
        if (report.zero_run) {
            out << "zero run: q = " << report.zero_run->q << ", length "
                << (report.zero_run->open_ended ? ">= " : "") << report.zero_run->length
                << (report.zero_run->open_ended ? " (open-ended at the truncation)" : " (confirmed gap)")
                << "\n";
            out << "matches the expected gap length n-1 = " << pres.n - 1 << ": "
                << (report.conjecture_b_match ? "yes" : "no") << "\n";
        } else {
            out << "zero run: none within the truncation\n";
        }
        out << "certainty: " << report.certainty << "\n";
    }
    return 0;
}

struct ScanArgs {
    std::string n_list = "2..5";
    long max_p = 8;
    long bound = 2000;
};

int cmd_scan(const ScanArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err) {
    if (!common.reproduce.empty())
        throw usage_error("scan has no reproduction ids; use the table/series/gap subcommands");
    const std::vector<long> ns = parse_n_list(a.n_list);
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] != ns[i - 1] + 1)
            throw usage_error("scan needs a contiguous arity range, e.g. --n 2..5");
    const ResourceLimits limits = make_limits(common);
    const ScanReport report =
        conjecture_scan(ns.front(), ns.back(), a.max_p, a.bound, make_rank_options(common), limits,
                        make_deadline(limits), make_progress(err, 0, a.bound));

    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        out << report.to_json_string() << "\n";
    } else if (fmt == "csv") {
        out << "n,d,family,analytic,first_negative_p,gap_q,gap_length,gap_open_ended,verdict\n";
        for (const auto& e : report.entries) {
            out << e.presentation.n << "," << e.presentation.d << ","
                << family_to_string(e.presentation.family) << "," << e.analytic_verdict << ",";
            if (e.first_negative.p_index) out << *e.first_negative.p_index;
            out << ",";
            if (e.gap.zero_run)
                out << e.gap.zero_run->q << "," << e.gap.zero_run->length << ","
                    << (e.gap.zero_run->open_ended ? "true" : "false");
            else
                out << ",,";
            out << "," << e.conjecture_b_verdict << "\n";
        }
    } else {
        for (const auto& e : report.entries) {
            out << e.presentation.to_string() << "   dual: " << e.dual.to_string() << "\n";
            out << "  analytic criterion: " << e.analytic_verdict << "\n";
            if (e.first_negative.first_negative_exponent)
                out << "  first negative inverse coefficient: t^"
                    << *e.first_negative.first_negative_exponent
                    << " (p = " << *e.first_negative.p_index << ")\n";
            else
                out << "  first negative inverse coefficient: none up to t^"
                    << e.first_negative.search_bound << "\n";
            out << "  generator series computed through p = " << e.max_p_used << "\n";
            if (e.gap.zero_run)
                out << "  zero run: q = " << e.gap.zero_run->q << ", length "
                    << (e.gap.zero_run->open_ended ? ">= " : "") << e.gap.zero_run->length
                    << (e.gap.zero_run->open_ended ? " (open-ended)" : "") << "\n";
            else
                out << "  zero run: none within the truncation\n";
            out << "  expected-gap verdict: " << e.conjecture_b_verdict << "\n";
        }
        out << "note: zero Euler characteristics are evidence only, never proof\n";
    }
    return 0;
}

struct CriticalArgs {
    std::string n_list = "2..20";
};

int cmd_critical_points(const CriticalArgs& a, const CommonOptions& common, std::ostream& out,
                        std::ostream& err) {
    if (!common.reproduce.empty())
        return run_reproduce(common.reproduce, {GoldKind::Critical}, common, out, err);
    const std::vector<long> ns = parse_n_list(a.n_list);
    std::vector<CriticalPointReport> reports;
    for (long n : ns) reports.push_back(derivative_roots(n));

    const std::string fmt = effective_format(common);
    if (fmt == "json") {
        std::string joined = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) joined += ",";
            joined += reports[i].to_json_string();
        }
        joined += "]";
        out << joined << "\n";
    } else if (fmt == "csv") {
        out << "n,discriminant,theorem_applies,w_roots\n";
        for (const auto& r : reports) {
            out << r.n << "," << r.discriminant.get_str() << ","
                << (r.theorem_applies ? "true" : "false") << ",";
            for (std::size_t i = 0; i < r.real_w_roots.size(); ++i) {
                if (i) out << ";";
                out << r.real_w_roots[i].to_string();
            }
            out << "\n";
        }
    } else {
        for (const auto& r : reports) {
            out << "n=" << r.n << ": discriminant " << r.discriminant.get_str();
            if (r.has_real_critical_point) {
                out << " (>= 0) — real w-roots: ";
                for (std::size_t i = 0; i < r.real_w_roots.size(); ++i) {
                    if (i) out << ", ";
                    out << r.real_w_roots[i].to_string();
                }
                out << "; criterion does not apply\n";
            } else {
                out << " (< 0) — no real critical point; a negative inverse coefficient is "
                       "guaranteed (criterion applies)\n";
            }
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact operad calculator: generating-series inversion, Koszulity tests, "
                 "dimension tables and minimal-model gap evidence for totally/partially "
                 "associative n-ary operads"};
    app.name("narop");
    app.require_subcommand(0, 1);

    CommonOptions common;

    InvertArgs invert_args;
    CLI::App* invert_cmd =
        app.add_subcommand("invert", "Formal compositional inverse of a series");
    invert_cmd->add_option("--series", invert_args.series_text,
                           "Series text, e.g. \"t - t^3 + t^5\"");
    invert_cmd->add_option("--order", invert_args.order,
                           "Truncation order for the inverse (default: the input's order)");
    add_common_options(invert_cmd, common);

    GkArgs gk_args;
    CLI::App* gk_cmd = app.add_subcommand(
        "gk", "Search the inverse of t - t^n + t^(2n-1) for its first negative coefficient");
    gk_cmd->add_option("--n", gk_args.n, "Generator arity (>= 2)");
    gk_cmd->add_option("--bound", gk_args.bound, "Degree bound for the search")
        ->capture_default_str();
    add_common_options(gk_cmd, common);

    TableArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "First-negative-coefficient table over a range of arities");
    table_cmd->add_option("--n", table_args.n_list, "Arities: \"2..7\", \"3,5\" or \"4\"")
        ->capture_default_str();
    table_cmd->add_option("--bound", table_args.bound, "Degree bound per arity")
        ->capture_default_str();
    table_cmd->add_option("--csv", table_args.csv_path, "Also write the table as CSV (\"-\": stdout)");
    table_cmd->add_option("--svg", table_args.svg_path, "Also write an SVG plot (\"-\": stdout)");
    add_common_options(table_cmd, common);

    PresentationArgs dims_args;
    CLI::App* dims_cmd =
        app.add_subcommand("dims", "Dimension table of an operad presentation");
    dims_cmd->add_option("--family", dims_args.family, "total | partial");
    dims_cmd->add_option("--n", dims_args.n, "Generator arity (>= 2)");
    dims_cmd->add_option("--d", dims_args.d, "Generator degree");
    dims_cmd->add_option("--max-p", dims_args.max_p, "Largest composition count p");
    add_common_options(dims_cmd, common);

    PresentationArgs series_args;
    CLI::App* series_cmd =
        app.add_subcommand("series", "Euler-characteristic generating series of a presentation");
    series_cmd->add_option("--family", series_args.family, "total | partial");
    series_cmd->add_option("--n", series_args.n, "Generator arity (>= 2)");
    series_cmd->add_option("--d", series_args.d, "Generator degree");
    series_cmd->add_option("--max-p", series_args.max_p, "Largest composition count p");
    add_common_options(series_cmd, common);

    PresentationArgs dual_args;
    CLI::App* dual_cmd = app.add_subcommand("dual", "Quadratic dual of a presentation");
    dual_cmd->add_option("--family", dual_args.family, "total | partial");
    dual_cmd->add_option("--n", dual_args.n, "Generator arity (>= 2)");
    dual_cmd->add_option("--d", dual_args.d, "Generator degree");
    add_common_options(dual_cmd, common);

    PresentationArgs gap_args;
    CLI::App* gap_cmd = app.add_subcommand(
        "gap", "Generator series of the minimal model and its zero-run (gap) report");
    gap_cmd->add_option("--family", gap_args.family, "total | partial");
    gap_cmd->add_option("--n", gap_args.n, "Generator arity (>= 2)");
    gap_cmd->add_option("--d", gap_args.d, "Generator degree");
    gap_cmd->add_option("--max-p", gap_args.max_p, "Largest composition count p");
    add_common_options(gap_cmd, common);

    ScanArgs scan_args;
    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "Evidence scan over an arity range (degree picked so n and d differ in parity)");
    scan_cmd->add_option("--n", scan_args.n_list, "Contiguous arity range, e.g. \"2..5\"")
        ->capture_default_str();
    scan_cmd->add_option("--max-p", scan_args.max_p, "Requested p (clamped per arity by the tree cap)")
        ->capture_default_str();
    scan_cmd->add_option("--bound", scan_args.bound, "Degree bound for the coefficient-sign search")
        ->capture_default_str();
    add_common_options(scan_cmd, common);

    CriticalArgs critical_args;
    CLI::App* critical_cmd = app.add_subcommand(
        "critical-points", "Real critical points of z - z^n + z^(2n-1) and the analytic verdict");
    critical_cmd->add_option("--n", critical_args.n_list, "Arities: \"2..20\", \"3,5\" or \"8\"")
        ->capture_default_str();
    add_common_options(critical_cmd, common);

    PlotArgs plot_args;
    CLI::App* plot_cmd =
        app.add_subcommand("plot", "Write the first-negative table as CSV and an SVG figure");
    plot_cmd->add_option("--n", plot_args.n_list, "Arities to search")->capture_default_str();
    plot_cmd->add_option("--bound", plot_args.bound, "Degree bound per arity")
        ->capture_default_str();
    plot_cmd->add_option("--csv", plot_args.csv_path, "CSV output path (\"-\": stdout)")
        ->capture_default_str();
    plot_cmd->add_option("--svg", plot_args.svg_path, "SVG output path (\"-\": stdout)")
        ->capture_default_str();
    plot_cmd->add_flag("--from-golden", plot_args.from_golden,
                       "Emit the embedded reference table instead of recomputing");
    add_common_options(plot_cmd, common);

    try {
        std::vector<const char*> argv;
        argv.push_back("narop");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'narop --help' for usage\n";
        return 2;
    }

    try {
        if (invert_cmd->parsed()) return cmd_invert(invert_args, common, out, err);
        if (gk_cmd->parsed()) return cmd_gk(gk_args, common, out, err);
        if (table_cmd->parsed()) return cmd_table(table_args, common, out, err);
        if (dims_cmd->parsed()) return cmd_dims(dims_args, common, out, err);
        if (series_cmd->parsed()) return cmd_series(series_args, common, out, err);
        if (dual_cmd->parsed()) return cmd_dual(dual_args, common, out, err);
        if (gap_cmd->parsed()) return cmd_gap(gap_args, common, out, err);
        if (scan_cmd->parsed()) return cmd_scan(scan_args, common, out, err);
        if (critical_cmd->parsed()) return cmd_critical_points(critical_args, common, out, err);
        if (plot_cmd->parsed()) return cmd_plot(plot_args, common, out, err);
        out << app.help();
        return 0;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: resource bound exceeded: " << e.what() << "\n";
        err << "raise --max-trees / --max-matrix-entries / --time-budget to go further\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace narop::cli
