#ifndef NAROP_LIMITS_HPP
#define NAROP_LIMITS_HPP

#include <chrono>
#include <cstdint>
#include <optional>

namespace narop {

/// Resource caps shared by the long-running operations.  Defaults can be
/// overridden per call, via CLI flags, or via the environment variables
/// NAROP_MAX_TREES, NAROP_MAX_MATRIX_ENTRIES and NAROP_TIME_BUDGET (seconds).
struct ResourceLimits {
    std::int64_t max_trees = 20000;            ///< trees per arity component
    std::int64_t max_matrix_entries = 4000000; ///< nonzeros in a relation matrix
    double time_budget_seconds = 86400.0;

    static ResourceLimits from_env();
};

/// Deadline helper; a default-constructed clock never expires.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

    bool expired() const {
        return end_ && std::chrono::steady_clock::now() > *end_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

} // namespace narop

#endif
