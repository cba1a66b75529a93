#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qforms/classgroup.hpp"
#include "qforms/forms.hpp"
#include "qforms/numtheory.hpp"

namespace qforms {

struct Witness
{
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(Witness const &) const = default;
};

/// (a x1^2 + 2b x1 y1 + c y1^2)(a x2^2 + 2b x2 y2 + c y2^2) = X^2 + n Y^2
/// with n = ac - b^2, X = a x1 x2 + b x1 y2 + b y1 x2 + c y1 y2, Y = x1 y2 - y1 x2.
/// Holds for all integers; the result is checked for overflow only.
Witness lagrange_compose(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2);

struct PrimeClassification
{
    std::int64_t p = 0;
    std::int64_t n = 0;
    int symbol = 0;                    ///< (-n / p)
    std::vector<Representation> forms; ///< reduced forms of -4n representing p
    std::int64_t residue = 0;          ///< p mod 4n
};

/// Which reduced forms of discriminant -4n represent the odd prime p (p not dividing n).
/// forms is nonempty exactly when (-n/p) = 1.
PrimeClassification classify_prime(std::int64_t p, std::int64_t n);

struct PairDecision
{
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t n = 0;
    bool representable = false;
    std::optional<QuadForm> common_form; ///< least reduced form representing p and q
    std::optional<Witness> witness;      ///< least-|y| solution of pq = x^2 + n y^2, x, y >= 0
    std::optional<Witness> composed_witness; ///< built from the common form, |X|, |Y|
};

/// Decides pq = x^2 + n y^2 for distinct odd primes p, q not dividing n by
/// looking for a reduced form of discriminant -4n representing both.
/// Hypothesis violations throw HypothesisError with a distinct Violation.
PairDecision decide_pq(std::int64_t p, std::int64_t q, std::int64_t n);

/// Direct search over 0 <= y <= sqrt(pq/n). Same hypotheses as decide_pq.
std::optional<Witness> brute_force_pq(std::int64_t p, std::int64_t q, std::int64_t n);

/// (x^2 + 1)^2 - 8, the class polynomial used for n = 14.
IntPolynomial fourteen_class_polynomial();
/// Its discriminant, -2^14 * 7.
inline constexpr std::int64_t fourteen_class_discriminant = -114688;

/// (-n/p) = 1 and f has a root mod p.
///
/// Equivalent to p = x^2 + n y^2 only when f is the minimal polynomial of a
/// real generator of the ring class field of Z[sqrt(-n)]; that is the
/// caller's responsibility. p must not divide n or disc_f.
bool principal_criterion(std::int64_t p, std::int64_t n, IntPolynomial const & f, std::int64_t disc_f);
/// As above with disc_f computed by poly_discriminant.
bool principal_criterion(std::int64_t p, std::int64_t n, IntPolynomial const & f);

/// p is in S: (x^2 + 1)^2 = 8 (mod p) is solvable. p odd prime.
bool in_fourteen_set(std::int64_t p);

/// Odd primes p <= bound, p != 7, represented by both x^2 + 14y^2 and 2x^2 + 7y^2.
std::vector<std::int64_t> mutual_exclusion_check(std::int64_t bound);

struct SplitCounts
{
    std::int64_t in_s = 0;
    std::int64_t not_in_s = 0;
};

struct PairTableRow
{
    QuadForm form;
    std::vector<std::int64_t> residues; ///< classes mod 4n of the primes represented
    std::int64_t prime_count = 0;
    std::optional<SplitCounts> s_split; ///< n = 14 only
};

struct PairTable
{
    std::int64_t n = 0;
    std::int64_t bound = 0;
    std::int64_t modulus = 0;
    std::vector<PairTableRow> rows; ///< one per reduced form of -4n
    GenusPartition genera;
};

/// For each reduced form of -4n, the residues mod 4n of the odd primes
/// p <= bound (p not dividing n) that it represents.
PairTable classify_pair_table(std::int64_t n, std::int64_t bound);

/// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

} // namespace qforms
