#pragma once

#include <stdexcept>
#include <string>

namespace coreval {

/// Unrecoverable problem with input data (missing corpus, duplicate ids, unreadable files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: thresholds, weights, lexicons, unknown keys.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace coreval
