#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neofuzzy {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Content of an input (CSV, snapshot, series) is unusable.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cell failed to parse; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Snapshot file is corrupt or has an unsupported version.
class SnapshotError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace neofuzzy
