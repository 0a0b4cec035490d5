#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyflow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidIndexError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

/// Configuration where all points coincide (or the zero vector was normalized).
class DegenerateConfigurationError : public Error {
public:
    using Error::Error;
};

class InvalidVariantError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A non-finite value appeared during integration or smoothing.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::size_t iteration)
        : Error(what + " (iteration " + std::to_string(iteration) + ")"), iteration_(iteration) {}

    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

class MeshFormatError : public Error {
public:
    MeshFormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line > 0 ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                         : what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class FileNotFoundError : public Error {
public:
    using Error::Error;
};

}  // namespace polyflow
