#pragma once

#include <stdexcept>
#include <string>

namespace vtrlab {

/// Invalid or out-of-range configuration / construction arguments.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Rejection sampling exhausted its attempt budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive search exceeded its size budget.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vtrlab
