#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace archlc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A real-field object was combined with a complex-field one.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numeric evaluation requested at (or too close to) a pole or zero.
class SingularEvaluation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The two genericity routes disagree; carries both witnesses in what().
class CrossCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// No parameter within the bounds reproduces the oracle.
class ReconstructionFailure : public std::runtime_error {
public:
    ReconstructionFailure(const std::string& what, std::string query)
        : std::runtime_error(what), query_(std::move(query))
    {
    }
    /// Text form of the first character whose gamma factor contradicts.
    const std::string& query() const { return query_; }

private:
    std::string query_;
};

/// The candidate twists ran out before two distinct parameters separated.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace archlc
