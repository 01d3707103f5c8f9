#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lhcone {

/// Input outside an operation's domain (bad parameters, nonpositive terms).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An enumeration would exceed its node or degree budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem-backed identity failed to hold; always an implementation bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class HorizonTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A term of a u-generated sequence came out nonpositive. `index` is 1-based.
class NonPositiveTerm : public DomainError {
public:
    explicit NonPositiveTerm(std::size_t index)
        : DomainError("u-generated term s_" + std::to_string(index) + " is not positive"),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace lhcone
