#include "narop/koszul.hpp"

#include <json.hpp>

#include <chrono>
#include <stdexcept>

#include "narop/errors.hpp"

namespace narop {

FirstNegativeResult gk_inverse_test(long n, long bound, const Deadline& deadline,
                                    const ProgressFn& progress,
                                    double progress_interval_seconds) {
    if (n < 2 || bound < 1) throw std::invalid_argument("gk_inverse_test needs n >= 2, bound >= 1");
    FirstNegativeResult result;
    result.n = n;
    result.search_bound = bound;
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    double next_progress = progress_interval_seconds;
    stream_inverse_coefficients(SparseTrinomial{n}, bound, [&](long k, const Integer& c) {
        if (deadline.expired())
            throw resource_limit_error("time budget exceeded during coefficient search");
        if (sgn(c) < 0) {
            result.first_negative_exponent = k;
            result.p_index = (k - 1) / (n - 1);
            result.coefficient = c;
            return false;
        }
        if (progress && elapsed() >= next_progress) {
            next_progress += progress_interval_seconds;
            progress(SearchProgress{
                k, elapsed(),
                sgn(c) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2))});
        }
        return true;
    });
    return result;
}

std::string FirstNegativeResult::to_json_string() const {
    nlohmann::json j;
    j["n"] = n;
    j["search_bound"] = search_bound;
    if (first_negative_exponent) {
        j["first_negative_exponent"] = *first_negative_exponent;
        j["p"] = *p_index;
        j["coefficient"] = coefficient.get_str();
    } else {
        j["first_negative_exponent"] = nullptr;
        j["p"] = nullptr;
    }
    return j.dump();
}

bool gk_functional_check(const ExactSeries& gP, const ExactSeries& gDual) {
    if (!gP.is_invertible() || !gDual.is_invertible())
        throw std::domain_error("functional check requires invertible series");
    const long order = std::min(gP.order(), gDual.order());
    const ExactSeries composed = compose(gP, desuspend(gDual));
    return composed == ExactSeries::identity(order);
}

ExactSeries generator_series(const OperadPresentation& pres, long max_p,
                             const RankOptions& rank_options, const ResourceLimits& limits,
                             const Deadline& deadline) {
    return invert(generating_series(pres, max_p, rank_options, limits, deadline));
}

GapReport detect_gap(const ExactSeries& series, long n) {
    if (n < 2) throw std::invalid_argument("detect_gap needs n >= 2");
    GapReport report;
    report.n = n;
    const long stride = n - 1;
    for (long e = 0; e <= series.order(); ++e) {
        if (e % stride == 1 % stride && e >= 1) continue;
        if (sgn(series.coefficient(e)) != 0)
            throw std::invalid_argument(
                "series must be supported on exponents congruent to 1 mod (n-1)");
    }
    const long max_p = (series.order() - 1) / stride; // largest p with <p> within order
    if (series.order() < 1) return report;
    for (long p = 0; p <= max_p; ++p)
        report.generator_coefficients.emplace_back(p, series.coefficient(p * stride + 1));

    // First maximal zero run.
    long q = -1;
    for (long p = 0; p <= max_p; ++p) {
        if (sgn(report.generator_coefficients[static_cast<std::size_t>(p)].second) == 0) {
            q = p;
            break;
        }
    }
    if (q < 0) return report; // no zero coefficient at all
    long end = q;
    while (end + 1 <= max_p &&
           sgn(report.generator_coefficients[static_cast<std::size_t>(end + 1)].second) == 0)
        ++end;
    ZeroRun run;
    run.q = q;
    run.length = end - q + 1;
    run.open_ended = (end == max_p); // cannot see the right neighbor
    report.zero_run = run;
    report.conjecture_b_match = !run.open_ended && run.length == n - 1;
    return report;
}

std::string GapReport::to_json_string() const {
    nlohmann::json j;
    j["n"] = n;
    auto& coeffs = j["generator_coefficients"] = nlohmann::json::array();
    for (const auto& [p, c] : generator_coefficients)
        coeffs.push_back({{"p", p}, {"coefficient", rational_to_string(c)}});
    if (zero_run) {
        j["zero_run"] = {{"q", zero_run->q},
                         {"length", zero_run->length},
                         {"open_ended", zero_run->open_ended}};
    } else {
        j["zero_run"] = nullptr;
    }
    j["conjecture_b_match"] = conjecture_b_match;
    j["certainty"] = certainty;
    return j.dump();
}

ScanReport conjecture_scan(long n_lo, long n_hi, long max_p, long first_negative_bound,
                           const RankOptions& rank_options, const ResourceLimits& limits,
                           const Deadline& deadline, const ProgressFn& progress) {
    if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("scan needs 2 <= n_lo <= n_hi");
    if (max_p < 2) throw std::invalid_argument("scan needs max_p >= 2");
    ScanReport report;
    for (long n = n_lo; n <= n_hi; ++n) {
        ScanEntry entry;
        entry.presentation = OperadPresentation{Family::Partial, n, n % 2 == 0 ? 1 : 0};
        entry.dual = dual_presentation(entry.presentation);
        entry.analytic_verdict = koszulity_verdict_analytic(n, DegreeParity::Odd);
        entry.first_negative =
            gk_inverse_test(n, first_negative_bound, deadline, progress);
        entry.max_p_used = affordable_max_p(n, max_p, limits);
        const ExactSeries e = generator_series(entry.presentation, entry.max_p_used,
                                               rank_options, limits, deadline);
        entry.gap = detect_gap(e, n);
        if (!entry.gap.zero_run || entry.gap.zero_run->open_ended)
            entry.conjecture_b_verdict = "undetermined at this bound";
        else
            entry.conjecture_b_verdict =
                entry.gap.zero_run->length == n - 1 ? "consistent" : "inconsistent";
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string ScanReport::to_json_string() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json item;
        item["family"] = family_to_string(e.presentation.family);
        item["n"] = e.presentation.n;
        item["d"] = e.presentation.d;
        item["dual"] = {{"family", family_to_string(e.dual.family)},
                        {"n", e.dual.n},
                        {"d", e.dual.d}};
        item["analytic_verdict"] = e.analytic_verdict;
        item["first_negative"] = nlohmann::json::parse(e.first_negative.to_json_string());
        item["max_p_used"] = e.max_p_used;
        item["gap"] = nlohmann::json::parse(e.gap.to_json_string());
        item["conjecture_b"] = e.conjecture_b_verdict;
        item["certainty"] = "evidence only; zero Euler characteristic does not prove a "
                            "vanishing generator space";
        j.push_back(std::move(item));
    }
    return j.dump();
}

} // namespace narop
