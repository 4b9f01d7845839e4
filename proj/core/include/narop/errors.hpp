#ifndef NAROP_ERRORS_HPP
#define NAROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace narop {

/// Raised when an input string cannot be parsed (series text, CLI values).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation would exceed a configured resource cap
/// (tree count, matrix entries, time budget).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace narop

#endif
