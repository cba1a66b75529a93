#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qforms/forms.hpp"

namespace qforms {

/// x^2 + n y^2, the identity of C(-4n).
QuadForm principal_form(std::int64_t n);

/// Identity class of an arbitrary negative discriminant: (1, 0, -D/4) or (1, 1, (1-D)/4).
QuadForm principal_form(Discriminant const & d);

/// Dirichlet composition at class level; returns the reduced representative.
///
/// When gcd(a1, a2, (b1+b2)/2) != 1, g is first replaced by a properly
/// equivalent form whose leading coefficient is prime to a1, found among
/// g(x, y) with gcd(x, y) = 1 and |x|, |y| <= 10.
QuadForm compose(QuadForm const & f, QuadForm const & g);

/// C(D) with its full composition table. Construction checks the abelian
/// group axioms and throws ConsistencyError if any fails.
class FormClassGroup
{
    Discriminant d_;
    std::vector<QuadForm> classes_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;

    FormClassGroup(Discriminant d, std::vector<QuadForm> classes,
                   std::vector<std::vector<std::size_t>> table, std::size_t identity);
    friend FormClassGroup class_group(Discriminant const & d);

  public:
    Discriminant discriminant() const noexcept { return d_; }
    std::vector<QuadForm> const & classes() const noexcept { return classes_; }
    std::vector<std::vector<std::size_t>> const & table() const noexcept { return table_; }
    std::size_t order() const noexcept { return classes_.size(); }
    std::size_t identity() const noexcept { return identity_; }

    std::size_t index_of(QuadForm const & reduced) const;
    std::size_t multiply(std::size_t i, std::size_t j) const { return table_[i][j]; }
    std::size_t power(std::size_t i, std::uint64_t k) const;
    std::size_t inverse(std::size_t i) const;
    std::size_t element_order(std::size_t i) const;

    /// Invariant factors d1 | d2 | ... with C(D) = Z/d1 x Z/d2 x ...; empty when trivial.
    std::vector<std::int64_t> invariant_factors() const;
    bool is_cyclic() const { return invariant_factors().size() <= 1; }
};

FormClassGroup class_group(Discriminant const & d);

struct GenusBlock
{
    std::vector<std::int64_t> residues;
    std::vector<QuadForm> forms;

    bool operator==(GenusBlock const &) const = default;
};

struct GenusPartition
{
    Discriminant d;
    std::vector<GenusBlock> blocks; ///< ordered by smallest residue

    /// Index of the block whose residue set contains v mod |D|, if any.
    std::ptrdiff_t block_of_residue(std::int64_t v) const;
    std::ptrdiff_t block_of_form(QuadForm const & reduced) const;
};

/// Reduced forms of D grouped by the residues they represent in (Z/|D|)^x.
GenusPartition genus_partition(Discriminant const & d);

/// Every genus of discriminant -4n holds a single class.
bool is_convenient(std::int64_t n);

} // namespace qforms
