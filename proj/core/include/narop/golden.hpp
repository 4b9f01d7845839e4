#pragma once

#include <optional>
#include <string>
#include <vector>

#include <narop/presentation.hpp>
#include <narop/series.hpp>

namespace narop {

/// Reference values shipped with the library (embedded copy of data/golden.json).
/// Reproduction commands recompute these from scratch and diff the results.

struct GoldenInverse {
    std::string id;
    long n = 0;
    std::string description;
    ExactSeries series;  ///< expected initial part, order fixed by the data file
};

struct GoldenFirstNegativeRow {
    long n = 0;
    std::optional<long> p;         ///< index of the first negative coefficient
    std::optional<long> exponent;  ///< its exponent p(n-1)+1
    long searched_to = 0;          ///< for rows with no negative term: verified bound
};

struct GoldenSeriesEntry {
    std::string id;
    OperadPresentation presentation{Family::Partial, 2, 1};
    long max_p = 0;
    std::string description;
    ExactSeries series;
};

struct GoldenGap {
    std::string id;
    OperadPresentation presentation{Family::Partial, 2, 1};
    long max_p = 0;
    long q = 0;       ///< first index of the expected zero run
    long length = 0;  ///< its length
    bool open_ended = false;
};

struct GoldenCriticalRow {
    long n = 0;
    long discriminant = 0;
    bool theorem_applies = false;
    std::vector<std::string> real_w_roots;  ///< printed roots, larger first (empty if complex)
};

struct GoldenData {
    std::vector<GoldenInverse> inverse_series;
    std::vector<GoldenFirstNegativeRow> first_negative;
    std::vector<GoldenSeriesEntry> generating_series;
    std::vector<GoldenSeriesEntry> generator_series;
    std::vector<GoldenGap> gaps;
    std::vector<GoldenCriticalRow> critical_points;

    const GoldenInverse* find_inverse(const std::string& id) const;
    const GoldenSeriesEntry* find_generating(const std::string& id) const;
    const GoldenSeriesEntry* find_generator(const std::string& id) const;
    const GoldenGap* find_gap(const std::string& id) const;

    /// Every id usable with --reproduce, in data-file order.
    std::vector<std::string> all_ids() const;
};

/// Parsed-once accessor for the embedded reference data.
const GoldenData& golden();

/// Raw JSON text of the embedded data file.
const std::string& golden_json_text();

}  // namespace narop
