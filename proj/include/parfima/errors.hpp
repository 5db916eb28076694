#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parfima {

/// Failure categories surfaced by the library. The CLI prints the category
/// name as the first field of its one-line error report.
enum class ErrorKind {
    domain,
    pole,
    dimension_mismatch,
    invalid_argument,
    insufficient_data,
    not_causal,
    not_invertible,
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Thin subclasses so callers (and tests) can catch a single category.

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error(ErrorKind::domain, message) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& message) : Error(ErrorKind::pole, message) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& message)
        : Error(ErrorKind::dimension_mismatch, message) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message)
        : Error(ErrorKind::invalid_argument, message) {}
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& message)
        : Error(ErrorKind::insufficient_data, message) {}
};

class NotCausal : public Error {
public:
    explicit NotCausal(const std::string& message) : Error(ErrorKind::not_causal, message) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& message)
        : Error(ErrorKind::not_invertible, message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(ErrorKind::io, message) {}
};

}  // namespace parfima
