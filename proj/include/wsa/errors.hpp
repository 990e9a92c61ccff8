#pragma once

#include <stdexcept>
#include <string>

namespace wsa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed element encoding for the selected semigroup.
class EncodingError : public Error {
public:
    using Error::Error;
};

/// Operation outside its mathematical domain (e.g. s^0 in a semigroup).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Query needs data the configured system does not carry (order, closed form).
class UnsupportedQuery : public Error {
public:
    using Error::Error;
};

/// Numeric-mode violation: complex coefficients or irrational values in exact mode.
class ModeError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic exceeded 128-bit headroom; the advisory is to rerun in log mode.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Weight-expression syntax error, with the offending position in the source.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos_(position) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Bad CLI flags, unknown ids, unreadable table files.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace wsa
