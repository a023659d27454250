#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace viewhedge {

/// Raised when an input violates a documented precondition. `field()` names
/// the offending input (e.g. "spot", "vol_hat") so callers can map it back to
/// a configuration key.
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, const std::string& reason)
        : std::invalid_argument(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A ratio whose denominator vanishes (no identifiable direction to optimise).
class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The holding interval reaches or passes the option's expiry.
class MaturityExhausted : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace viewhedge
