#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qforms {

/// The integral binary quadratic form a x^2 + b xy + c y^2.
///
/// Any triple is constructible; operations that need a positive definite or
/// primitive form check it themselves.
struct QuadForm
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    /// b^2 - 4ac, overflow-checked.
    std::int64_t disc() const;
    bool is_positive_definite() const;
    bool is_primitive() const;

    /// f(x, y), overflow-checked.
    std::int64_t operator()(std::int64_t x, std::int64_t y) const;

    auto operator<=>(QuadForm const &) const = default;
};

std::ostream & operator<<(std::ostream & os, QuadForm const & f);

/// "a,b,c", the serialisation shared with the command line.
std::string to_string(QuadForm const & f);
QuadForm parse_form(std::string const & text);

/// A negative discriminant, D = 0 or 1 (mod 4).
class Discriminant
{
    std::int64_t value_;

  public:
    /// Throws std::invalid_argument unless D < 0 and D = 0, 1 (mod 4).
    explicit Discriminant(std::int64_t d);

    /// -4n for n >= 1.
    static Discriminant of_principal(std::int64_t n);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t abs() const noexcept { return -value_; }

    auto operator<=>(Discriminant const &) const = default;
};

/// Throws std::invalid_argument when f is not positive definite.
Discriminant discriminant(QuadForm const & f);

/// The substitution (x, y) -> (p x + q y, r x + s y).
struct UnimodularMap
{
    std::int64_t p = 1, q = 0, r = 0, s = 1;

    std::int64_t determinant() const;
    static UnimodularMap identity() { return {}; }

    /// Matrix product; (m * n) substitutes n first, then m.
    UnimodularMap operator*(UnimodularMap const & o) const;
    /// Inverse of a determinant +-1 map.
    UnimodularMap inverse() const;

    bool operator==(UnimodularMap const &) const = default;
};

/// The form f(x, y) = g(p x + q y, r x + s y).
QuadForm substitute(QuadForm const & g, UnimodularMap const & m);

/// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
bool is_reduced(QuadForm const & f);

struct Reduction
{
    QuadForm form;     ///< the reduced form
    UnimodularMap map; ///< determinant +1, substitute(form, map) == input
};

/// Gauss reduction of a positive definite primitive form.
Reduction reduce(QuadForm const & f);

/// All primitive reduced forms of discriminant D, sorted by (a, b, c).
/// The length is the class number h(D).
std::vector<QuadForm> enumerate_reduced(Discriminant const & d);

struct Representation
{
    std::int64_t m = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    QuadForm form;
    bool proper = false;

    bool operator==(Representation const &) const = default;
};

/// A solution of f(x, y) = m for positive definite f and m >= 1.
///
/// The search is exhaustive over |y| <= sqrt(4am/|D|), which bounds every
/// solution since 4a f(x,y) = (2ax + by)^2 + |D| y^2. Among solutions the one
/// with least |y| is returned, then least x >= 0, then y >= 0.
std::optional<Representation> represent(std::int64_t m, QuadForm const & f);

/// The values of f in (Z/modulus)^x, sorted. f(x, y) mod modulus is periodic
/// in both variables, so one full period is scanned.
std::vector<std::int64_t> represented_residues(QuadForm const & f, std::int64_t modulus);

} // namespace qforms
