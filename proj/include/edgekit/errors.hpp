#pragma once

#include <stdexcept>
#include <string>

namespace edgekit {

/// Invalid argument to a library operation (sigma <= 0, low > high, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed image file content.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pixel payload shorter than the header promises. Counts are bytes for binary
/// files and samples for ASCII files.
class TruncationError : public FormatError {
public:
    TruncationError(const std::string& what, std::size_t expected, std::size_t actual)
        : FormatError(what), expected_(expected), actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace edgekit
