#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagbundle {

/// Malformed textual input (Lie type, datum, product, config line).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Precondition violated: bad rank, Θ = Σ, b = 0, real τ, mismatched bases, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Numeric chart requested for a family other than A.
class UnsupportedType : public std::domain_error {
public:
    explicit UnsupportedType(const std::string& type_name)
        : std::domain_error("combinatorial-only: " + type_name +
                            " has no numeric big-cell chart (type A only)") {}
};

/// Numerical breakdown, e.g. a Hermitian form that should be positive is not.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flagbundle
