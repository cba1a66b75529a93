#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qforms {

/// Deterministic for every 64-bit input (fixed Miller-Rabin base set).
bool is_prime(std::int64_t m);

/// A value checked prime at construction.
class Prime
{
    std::int64_t value_;

  public:
    /// Throws HypothesisError(not_prime) when v is not prime.
    explicit Prime(std::int64_t v);

    std::int64_t value() const noexcept { return value_; }
    bool is_odd() const noexcept { return value_ != 2; }

    auto operator<=>(Prime const &) const = default;
};

/// Jacobi symbol (a/m). Throws std::invalid_argument unless m is odd and positive.
int jacobi(std::int64_t a, std::int64_t m);

/// Square root of a modulo an odd prime p, normalised to [0, (p-1)/2].
/// Tonelli-Shanks, with the direct exponentiation for p = 3 (mod 4).
std::optional<std::int64_t> sqrt_mod_p(std::int64_t a, Prime const & p);

/// Integer polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial
{
    std::vector<std::int64_t> coeffs_;

  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> ascending);

    std::vector<std::int64_t> const & coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t coefficient(int k) const;

    std::int64_t eval_mod(std::int64_t x, std::int64_t m) const;
    IntPolynomial reduced_mod(std::int64_t m) const;
    IntPolynomial derivative() const;

    bool operator==(IntPolynomial const &) const = default;
};

/// Below this prime, poly_roots_mod_p evaluates every residue.
inline constexpr std::int64_t exhaustive_root_bound = std::int64_t{1} << 20;

/// All roots of f modulo an odd prime p, sorted ascending in [0, p-1].
///
/// Above exhaustive_root_bound only polynomials of degree <= 2 and
/// biquadratics g(x^2) with deg g <= 2 (such as (x^2+1)^2 - 8) are
/// supported; anything else throws ResourceLimit. Throws
/// std::invalid_argument when f vanishes identically mod p.
std::vector<std::int64_t> poly_roots_mod_p(IntPolynomial const & f, Prime const & p);

/// Discriminant of f, (-1)^{d(d-1)/2} Res(f, f') / lead(f), computed exactly.
/// Degree-1 polynomials have discriminant 1; degree < 1 is rejected.
std::int64_t poly_discriminant(IntPolynomial const & f);

/// Resultant of f and g as the determinant of their Sylvester matrix.
std::int64_t resultant(IntPolynomial const & f, IntPolynomial const & g);

} // namespace qforms
