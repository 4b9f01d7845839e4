#ifndef NAROP_KOSZUL_HPP
#define NAROP_KOSZUL_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "narop/critical_points.hpp"
#include "narop/dimensions.hpp"

namespace narop {

/// Outcome of scanning invert(t - t^n + t^(2n-1)) for a negative
/// coefficient.  A Koszul operad would force all of them nonnegative, so
/// a hit is a disproof certificate; "none up to the bound" is evidence
/// only.
struct FirstNegativeResult {
    long n = 0;
    long search_bound = 0;
    std::optional<long> first_negative_exponent; // empty: none up to bound
    std::optional<long> p_index;                 // exponent = p(n-1) + 1
    Integer coefficient;                         // the negative value when found

    std::string to_json_string() const;
};

struct SearchProgress {
    long degree = 0;
    double elapsed_seconds = 0.0;
    long coefficient_bits = 0;
};
using ProgressFn = std::function<void(const SearchProgress&)>;

/// Streams the inverse coefficients of t - t^n + t^(2n-1) up to `bound`,
/// stopping at the first strictly negative one.  `progress`, when set, is
/// called about every `progress_interval_seconds` of wall time.
FirstNegativeResult gk_inverse_test(long n, long bound, const Deadline& deadline = {},
                                    const ProgressFn& progress = nullptr,
                                    double progress_interval_seconds = 5.0);

/// The composite functional equation test: true iff
/// gP(-gDual(-t)) = t to the common truncation order.  Both series must
/// be invertible.
bool gk_functional_check(const ExactSeries& gP, const ExactSeries& gDual);

/// Formal inverse of generating_series(pres, max_p): the displayed
/// "series of the minimal-model generators" convention — coefficient at
/// t^<p> is (up to sign bookkeeping) the Euler characteristic of the
/// p-th generator space.
ExactSeries generator_series(const OperadPresentation& pres, long max_p,
                             const RankOptions& rank_options = {},
                             const ResourceLimits& limits = {},
                             const Deadline& deadline = {});

struct ZeroRun {
    long q = 0;          // first p with zero coefficient
    long length = 0;     // number of consecutive zero positions seen
    bool open_ended = false; // run touches the truncation order: length is only a lower bound
};

struct GapReport {
    long n = 0;
    /// (p, coefficient at t^<p>) for every p within the truncation.
    std::vector<std::pair<long, Rational>> generator_coefficients;
    /// First maximal zero run flanked appropriately; empty when none.
    std::optional<ZeroRun> zero_run;
    /// True when a confirmed (not open-ended) gap has length n-1.
    bool conjecture_b_match = false;
    std::string certainty = "Euler-characteristic evidence only";

    std::string to_json_string() const;
};

/// Finds the first maximal run of zero coefficients at the <p> positions
/// of `series`, with nonzero coefficients on both sides.  A run touching
/// the truncation order is reported open-ended (length >= k), never as a
/// confirmed gap.  The series must be supported on exponents
/// congruent to 1 mod (n-1).
GapReport detect_gap(const ExactSeries& series, long n);

/// One scanned arity: the generator degree picked by the rule
/// d = (n odd ? 0 : 1) (so n and d differ in parity), the critical-point
/// verdict for the odd-degree dual side, the coefficient-sign search, and
/// the generator-series gap evidence.
struct ScanEntry {
    OperadPresentation presentation;
    OperadPresentation dual;
    std::string analytic_verdict;
    FirstNegativeResult first_negative;
    long max_p_used = 0;
    GapReport gap;
    std::string conjecture_b_verdict; // "consistent" | "inconsistent" | "undetermined at this bound"
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::string to_json_string() const;
};

/// Evidence scan over n = n_lo..n_hi.  max_p is clamped per arity to what
/// the tree cap affords; first-negative searches run to
/// first_negative_bound.  Reports evidence, never proof.
ScanReport conjecture_scan(long n_lo, long n_hi, long max_p, long first_negative_bound,
                           const RankOptions& rank_options = {},
                           const ResourceLimits& limits = {}, const Deadline& deadline = {},
                           const ProgressFn& progress = nullptr);

} // namespace narop

#endif
