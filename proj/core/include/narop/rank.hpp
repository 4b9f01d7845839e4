#ifndef NAROP_RANK_HPP
#define NAROP_RANK_HPP

#include <cstdint>
#include <vector>

#include "narop/limits.hpp"
#include "narop/relation_matrix.hpp"

namespace narop {

enum class RankMode { Auto, Exact, Modular };

struct RankOptions {
    RankMode mode = RankMode::Auto;
    /// Auto mode switches from exact fraction-free elimination to modular
    /// certification above this column count.
    long exact_column_threshold = 2000;
    /// Number of independent random primes whose ranks must agree for a
    /// modular-certified result.
    int prime_count = 2;
    /// Seed for prime sampling; 0 selects a fixed built-in seed so runs
    /// are reproducible by default.
    std::uint64_t seed = 0;
};

struct RankResult {
    long rank = 0;
    /// false: exact (fraction-free integer elimination).  true: equal
    /// ranks modulo independently chosen random primes near 2^63 — a
    /// certified lower bound that equals the true rank for all but
    /// finitely many primes.
    bool modular_certified = false;
    std::vector<std::uint64_t> primes; // the primes used, when modular
};

/// Rank of a sparse integer matrix.  Exact mode runs Bareiss-style
/// fraction-free row elimination with content removal; modular mode runs
/// the same elimination over prime fields.  Auto picks by column count.
RankResult matrix_rank(const SparseIntMatrix& m, const RankOptions& options = {},
                       const Deadline& deadline = {});

/// The primes matrix_rank would sample for the given options (exposed for
/// tests and reports).
std::vector<std::uint64_t> sample_rank_primes(const RankOptions& options);

} // namespace narop

#endif
