#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clubval {

/// Base of every error raised by the library. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// regression / special functions

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class InsufficientObservations : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// dataset ingestion

/// Parse failure tied to a 1-based line of the input document.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class HeaderMismatch : public ParseError {
public:
    explicit HeaderMismatch(const std::string& found)
        : ParseError("unexpected CSV header: '" + found + "'", 1) {}
};

class RowArity : public ParseError {
public:
    RowArity(std::size_t line, std::size_t expected, std::size_t found)
        : ParseError("expected " + std::to_string(expected) + " fields, found " +
                         std::to_string(found),
                     line) {}
};

class FieldError : public ParseError {
public:
    FieldError(const std::string& what, std::string field, std::size_t line)
        : ParseError(what + " in field '" + field + "'", line), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class NonNumeric : public FieldError {
public:
    NonNumeric(std::string field, std::size_t line)
        : FieldError("non-numeric value", std::move(field), line) {}
};

class NegativeValue : public FieldError {
public:
    NegativeValue(std::string field, std::size_t line)
        : FieldError("negative value", std::move(field), line) {}
};

class OutOfRange : public FieldError {
public:
    OutOfRange(std::string field, std::size_t line)
        : FieldError("value out of range", std::move(field), line) {}
};

// valuation / selection

class MissingPredictor : public Error {
public:
    explicit MissingPredictor(std::string variable)
        : Error("record has no value for predictor '" + variable + "'"),
          variable_(std::move(variable)) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

class DegenerateRatio : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class MissingPrice : public Error {
public:
    using Error::Error;
};

class TooManyCandidates : public Error {
public:
    using Error::Error;
};

// rendering

class IoError : public Error {
public:
    using Error::Error;
};

class NonPositiveLogInput : public Error {
public:
    using Error::Error;
};

class InvalidRenderSpec : public Error {
public:
    using Error::Error;
};

}  // namespace clubval
