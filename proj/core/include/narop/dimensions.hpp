#ifndef NAROP_DIMENSIONS_HPP
#define NAROP_DIMENSIONS_HPP

#include <string>
#include <vector>

#include "narop/rank.hpp"

namespace narop {

struct DimensionResult {
    long value = 0;
    bool modular_certified = false;
};

/// dim of the arity-<p> component (<p> = p(n-1) + 1) of the presented
/// operad: Fuss-Catalan(n, p) minus the rank of the relation span.
/// p = 0 (identity component) and p = 1 (the generator) are 1 directly.
DimensionResult dimension(const OperadPresentation& pres, long p,
                          const RankOptions& rank_options = {},
                          const ResourceLimits& limits = {},
                          const Deadline& deadline = {});

struct DimensionEntry {
    long p = 0;
    long arity = 0; // p(n-1) + 1
    long dim = 0;
    bool modular_certified = false;
};

struct DimensionTable {
    OperadPresentation presentation;
    std::vector<DimensionEntry> entries; // p = 0..max_p

    /// {"family": "partial", "n": 3, "d": 0,
    ///  "dims": [[p, arity, dim, "exact"|"modular"], ...]}
    std::string to_json_string() const;
};

DimensionTable dimension_table(const OperadPresentation& pres, long max_p,
                               const RankOptions& rank_options = {},
                               const ResourceLimits& limits = {},
                               const Deadline& deadline = {});

/// Inverse of DimensionTable::to_json_string.
DimensionTable dimension_table_from_json(const std::string& json_text);

/// The Euler-characteristic generating series
///   sum_p (-1)^(p d) dim(<p>) t^<p>,
/// truncated at order <max_p> = max_p (n-1) + 1.
ExactSeries generating_series(const OperadPresentation& pres, long max_p,
                              const RankOptions& rank_options = {},
                              const ResourceLimits& limits = {},
                              const Deadline& deadline = {});
ExactSeries generating_series(const DimensionTable& table);

/// Largest p (at least min_p) whose tree basis fits limits.max_trees,
/// capped at `requested`.  Used to clamp open-ended scans.
long affordable_max_p(long n, long requested, const ResourceLimits& limits,
                      long min_p = 2);

} // namespace narop

#endif
