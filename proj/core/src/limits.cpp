#include "narop/limits.hpp"

#include <cstdlib>
#include <string>

namespace narop {

namespace {

template <class T, class Parse>
void read_env(const char* name, T& target, Parse parse) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return;
    try {
        std::size_t pos = 0;
        const T value = parse(std::string(raw), &pos);
        if (pos == std::string(raw).size() && value > 0) target = value;
    } catch (const std::exception&) {
        // Malformed environment values keep the built-in default.
    }
}

} // namespace

ResourceLimits ResourceLimits::from_env() {
    ResourceLimits lim;
    read_env("NAROP_MAX_TREES", lim.max_trees,
             [](const std::string& s, std::size_t* pos) { return std::stoll(s, pos); });
    read_env("NAROP_MAX_MATRIX_ENTRIES", lim.max_matrix_entries,
             [](const std::string& s, std::size_t* pos) { return std::stoll(s, pos); });
    read_env("NAROP_TIME_BUDGET", lim.time_budget_seconds,
             [](const std::string& s, std::size_t* pos) { return std::stod(s, pos); });
    return lim;
}

} // namespace narop
