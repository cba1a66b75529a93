#pragma once

#include <stdexcept>
#include <string>

namespace qforms {

/// An intermediate value left the 64-bit range.
class OverflowError : public std::overflow_error
{
  public:
    using std::overflow_error::overflow_error;
};

/// A computation refused because an input exceeds what the algorithm supports.
class ResourceLimit : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (group axiom, witness mismatch, ...).
class ConsistencyError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

enum class Violation
{
    not_prime,
    even_prime,
    equal_primes,
    divides_n,
    divides_poly_discriminant,
    nonpositive_n,
};

const char * to_string(Violation v);

/// Inputs violate the hypotheses of a theorem-backed operation.
class HypothesisError : public std::invalid_argument
{
    Violation kind_;

  public:
    HypothesisError(Violation kind, std::string const & what)
        : std::invalid_argument(what), kind_(kind)
    {
    }

    Violation kind() const noexcept { return kind_; }
};

} // namespace qforms
