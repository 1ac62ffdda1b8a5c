#pragma once

#include <stdexcept>
#include <string>

namespace csaw {

/// Thrown when a computation would exceed a configured resource budget
/// (signature tables, DFS caps). Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace csaw
