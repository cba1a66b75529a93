#include "qforms/represent.hpp"

#include <algorithm>
#include <string>

#include "qforms/arith.hpp"

namespace qforms {

namespace {

void require_n(std::int64_t n)
{
    if (n < 1)
        throw HypothesisError(Violation::nonpositive_n, "n must be positive, got " + std::to_string(n));
}

void require_odd_prime_not_dividing(std::int64_t p, std::int64_t n)
{
    if (!is_prime(p))
        throw HypothesisError(Violation::not_prime, std::to_string(p) + " is not prime");
    if (p == 2)
        throw HypothesisError(Violation::even_prime, "p must be an odd prime, got 2");
    if (n % p == 0)
        throw HypothesisError(Violation::divides_n, std::to_string(p) + " divides n = " + std::to_string(n));
}

void require_pair(std::int64_t p, std::int64_t q, std::int64_t n)
{
    require_n(n);
    for (std::int64_t v : { p, q })
        if (!is_prime(v))
            throw HypothesisError(Violation::not_prime, std::to_string(v) + " is not prime");
    if (p == 2 || q == 2)
        throw HypothesisError(Violation::even_prime, "p and q must be odd primes");
    if (p == q)
        throw HypothesisError(Violation::equal_primes, "primes must be distinct");
    for (std::int64_t v : { p, q })
        if (n % v == 0)
            throw HypothesisError(Violation::divides_n, std::to_string(v) + " divides n = " + std::to_string(n));
}

std::int64_t abs64(std::int64_t v)
{
    if (v == INT64_MIN)
        throw OverflowError("absolute value overflows");
    return v < 0 ? -v : v;
}

} // namespace

Witness lagrange_compose(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2)
{
    i128 const X = static_cast<i128>(a) * x1 * x2 + static_cast<i128>(b) * x1 * y2
                   + static_cast<i128>(b) * y1 * x2 + static_cast<i128>(c) * y1 * y2;
    i128 const Y = static_cast<i128>(x1) * y2 - static_cast<i128>(y1) * x2;
    return { narrow(X), narrow(Y) };
}

PrimeClassification classify_prime(std::int64_t p, std::int64_t n)
{
    require_n(n);
    require_odd_prime_not_dividing(p, n);

    Discriminant const d = Discriminant::of_principal(n);
    PrimeClassification out;
    out.p = p;
    out.n = n;
    out.symbol = jacobi(-n, p);
    out.residue = mod(p, d.abs());
    for (QuadForm const & f : enumerate_reduced(d))
        if (auto r = represent(p, f))
            out.forms.push_back(*r);
    return out;
}

PairDecision decide_pq(std::int64_t p, std::int64_t q, std::int64_t n)
{
    require_pair(p, q, n);
    std::int64_t const pq = checked_mul(p, q);

    PairDecision out;
    out.p = p;
    out.q = q;
    out.n = n;
    for (QuadForm const & f : enumerate_reduced(Discriminant::of_principal(n))) {
        auto rp = represent(p, f);
        if (!rp)
            continue;
        auto rq = represent(q, f);
        if (!rq)
            continue;
        out.representable = true;
        out.common_form = f;
        // b is even for discriminant -4n; the identity uses a x^2 + 2b' xy + c y^2.
        Witness w = lagrange_compose(f.a, f.b / 2, f.c, rp->x, rp->y, rq->x, rq->y);
        w = { abs64(w.x), abs64(w.y) };
        if (principal_form(n)(w.x, w.y) != pq)
            throw ConsistencyError("composed witness does not represent pq");
        out.composed_witness = w;
        break;
    }
    if (out.representable) {
        auto r = represent(pq, principal_form(n));
        if (!r)
            throw ConsistencyError("common form found but pq has no representation by x^2 + ny^2");
        out.witness = Witness{ r->x, r->y };
    }
    return out;
}

std::optional<Witness> brute_force_pq(std::int64_t p, std::int64_t q, std::int64_t n)
{
    require_pair(p, q, n);
    std::int64_t const pq = checked_mul(p, q);
    std::int64_t const y_max = isqrt(pq / n);
    for (std::int64_t y = 0; y <= y_max; ++y) {
        std::int64_t x;
        if (is_square(pq - n * y * y, x))
            return Witness{ x, y };
    }
    return std::nullopt;
}

IntPolynomial fourteen_class_polynomial()
{
    return IntPolynomial({ -7, 0, 2, 0, 1 });
}

bool principal_criterion(std::int64_t p, std::int64_t n, IntPolynomial const & f, std::int64_t disc_f)
{
    require_n(n);
    require_odd_prime_not_dividing(p, n);
    if (disc_f % p == 0)
        throw HypothesisError(Violation::divides_poly_discriminant,
                              std::to_string(p) + " divides the polynomial discriminant " + std::to_string(disc_f));
    if (jacobi(-n, p) != 1)
        return false;
    return !poly_roots_mod_p(f, Prime(p)).empty();
}

bool principal_criterion(std::int64_t p, std::int64_t n, IntPolynomial const & f)
{
    return principal_criterion(p, n, f, poly_discriminant(f));
}

bool in_fourteen_set(std::int64_t p)
{
    static IntPolynomial const f = fourteen_class_polynomial();
    return !poly_roots_mod_p(f, Prime(p)).empty();
}

std::vector<std::int64_t> mutual_exclusion_check(std::int64_t bound)
{
    QuadForm const principal{ 1, 0, 14 };
    QuadForm const other{ 2, 0, 7 };
    std::vector<std::int64_t> violations;
    for (std::int64_t p : primes_between(3, bound)) {
        if (p == 7)
            continue;
        if (represent(p, principal) && represent(p, other))
            violations.push_back(p);
    }
    return violations;
}

PairTable classify_pair_table(std::int64_t n, std::int64_t bound)
{
    Discriminant const d = Discriminant::of_principal(n);
    PairTable out{ n, bound, d.abs(), {}, genus_partition(d) };
    for (QuadForm const & f : enumerate_reduced(d)) {
        PairTableRow row{ f, {}, 0, std::nullopt };
        if (n == 14)
            row.s_split = SplitCounts{};
        out.rows.push_back(row);
    }
    for (std::int64_t p : primes_between(3, bound)) {
        if (n % p == 0)
            continue;
        for (PairTableRow & row : out.rows) {
            if (!represent(p, row.form))
                continue;
            row.residues.push_back(mod(p, out.modulus));
            ++row.prime_count;
            if (row.s_split)
                ++(in_fourteen_set(p) ? row.s_split->in_s : row.s_split->not_in_s);
        }
    }
    for (PairTableRow & row : out.rows) {
        std::sort(row.residues.begin(), row.residues.end());
        row.residues.erase(std::unique(row.residues.begin(), row.residues.end()), row.residues.end());
    }
    return out;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    if (hi < 2)
        return out;
    std::vector<char> composite(static_cast<std::size_t>(hi) + 1, 0);
    for (std::int64_t i = 2; i <= hi; ++i) {
        if (composite[i])
            continue;
        if (i >= lo)
            out.push_back(i);
        for (std::int64_t j = i * i; j <= hi; j += i)
            composite[j] = 1;
    }
    return out;
}

} // namespace qforms
