#pragma once

#include <stdexcept>
#include <string>

namespace argaudit {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (policy or APX files). Positions are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, int line, int column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          raw_(message),
          line_(line),
          column_(column) {}

    const std::string& raw() const noexcept { return raw_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string raw_;
    int line_;
    int column_;
};

// Tabular data problems: wrong column count, bad value types, out-of-range
// fields.
class FormatError : public Error {
public:
    using Error::Error;
};

// A key that must be unique (movie_id, (user_id, movie_id)) appeared twice.
class DuplicateKeyError : public Error {
public:
    using Error::Error;
};

class EmptyCatalogError : public Error {
public:
    using Error::Error;
};

class UnknownMovieError : public Error {
public:
    explicit UnknownMovieError(int movie_id)
        : Error("unknown movie_id " + std::to_string(movie_id)), movie_id_(movie_id) {}

    int movie_id() const noexcept { return movie_id_; }

private:
    int movie_id_;
};

class InsufficientCatalogError : public Error {
public:
    using Error::Error;
};

// An input point that cannot be resolved against the catalog.
class UnknownInputError : public Error {
public:
    using Error::Error;
};

// The wrapped system failed while being evaluated; the offending input is
// part of the message.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class MissingBindingError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class MissingDescriptorGroupError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Brute-force oracle refused an oversized graph.
class TooLargeError : public Error {
public:
    using Error::Error;
};

// Extension enumeration exceeded the configured cap.
class ExtensionOverflowError : public Error {
public:
    using Error::Error;
};

// An attack mentions an argument that was never declared.
class UndeclaredArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace argaudit
