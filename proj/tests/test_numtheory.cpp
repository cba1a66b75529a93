#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"

#include "qforms/errors.hpp"
#include "qforms/numtheory.hpp"

using namespace qforms;

namespace {

bool trial_division_prime(std::int64_t m)
{
    if (m < 2)
        return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

/* Legendre symbol by squaring every residue. */
int legendre_by_squares(std::int64_t a, std::int64_t p)
{
    std::int64_t r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r)
            return 1;
    return -1;
}

std::vector<std::int64_t> roots_by_evaluation(IntPolynomial const & f, std::int64_t p)
{
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < p; ++x) {
        __int128 acc = 0;
        __int128 pw = 1;
        for (std::int64_t c : f.coefficients()) {
            acc += pw * c;
            pw = pw * x;
        }
        if (acc % p == 0)
            out.push_back(x);
    }
    return out;
}

IntPolynomial const fixture({ -7, 0, 2, 0, 1 }); // (x^2+1)^2 - 8

} // namespace

TEST_CASE("is_prime examples")
{
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(21));
    CHECK_FALSE(is_prime(1633)); // 23 * 71
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("is_prime agrees with trial division below 10^5")
{
    for (std::int64_t m = 0; m < 100000; ++m)
        REQUIRE(is_prime(m) == trial_division_prime(m));
}

TEST_CASE("is_prime on 64-bit edge cases")
{
    CHECK(is_prime(9223372036854775783LL));         // largest prime below 2^63
    CHECK_FALSE(is_prime(3825123056546413051LL));   // strong pseudoprime to bases 2..23
    CHECK_FALSE(is_prime(3215031751LL));            // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(4294967297LL));            // 641 * 6700417
    CHECK(is_prime(1000000007));
}

TEST_CASE("Prime rejects composites")
{
    CHECK_THROWS_AS(Prime(21), HypothesisError);
    CHECK(Prime(23).value() == 23);
}

TEST_CASE("jacobi examples")
{
    CHECK(jacobi(-5, 3) == 1);
    CHECK(jacobi(-5, 11) == -1);
    CHECK(jacobi(-14, 23) == 1);
    CHECK(jacobi(6, 9) == 0);
    CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi is the Legendre symbol for odd primes")
{
    for (std::int64_t p = 3; p < 400; p += 2) {
        if (!trial_division_prime(p))
            continue;
        for (std::int64_t a = -2 * p; a <= 2 * p; ++a)
            REQUIRE(jacobi(a, p) == legendre_by_squares(a, p));
    }
}

TEST_CASE("jacobi is multiplicative in the top argument")
{
    for (std::int64_t m = 1; m < 200; m += 2)
        for (std::int64_t a = -30; a <= 30; ++a)
            for (std::int64_t b = -30; b <= 30; b += 7)
                REQUIRE(jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m));
}

TEST_CASE("sqrt_mod_p examples")
{
    CHECK(sqrt_mod_p(8, Prime(23)) == 10);
    CHECK(sqrt_mod_p(0, Prime(5)) == 0);
    CHECK_FALSE(sqrt_mod_p(6, Prime(11)).has_value());
    CHECK_THROWS_AS(sqrt_mod_p(1, Prime(2)), std::invalid_argument);
}

TEST_CASE("sqrt_mod_p matches the Jacobi symbol for every p < 10^4")
{
    for (std::int64_t p = 3; p < 10000; p += 2) {
        if (!is_prime(p))
            continue;
        Prime const pp(p);
        for (std::int64_t a = 0; a < p; ++a) {
            auto r = sqrt_mod_p(a, pp);
            int const j = jacobi(a, p);
            REQUIRE((j == 1) == (r.has_value() && *r != 0));
            REQUIRE((j == 0) == (a == 0));
            if (r) {
                REQUIRE(*r <= (p - 1) / 2);
                REQUIRE(*r * *r % p == a);
            }
        }
    }
}

TEST_CASE("sqrt_mod_p for large primes with high 2-adic valuation")
{
    // 119 * 2^23 + 1, 15 * 2^27 + 1, 2^62 - 57, 2^63 - 25
    for (std::int64_t p : { 998244353LL, 2013265921LL, 4611686018427387847LL, 9223372036854775783LL }) {
        Prime const pp(p);
        for (std::int64_t a : { 2LL, 3LL, 5LL, 7LL, 123456789LL }) {
            auto r = sqrt_mod_p(a, pp);
            if (r) {
                __int128 sq = static_cast<__int128>(*r) * *r % p;
                CHECK(static_cast<std::int64_t>(sq) == a % p);
                CHECK(*r <= (p - 1) / 2);
            }
            CHECK(r.has_value() == (jacobi(a, p) == 1));
        }
    }
}

TEST_CASE("poly_roots_mod_p examples")
{
    auto r23 = poly_roots_mod_p(fixture, Prime(23));
    CHECK(std::set<std::int64_t>(r23.begin(), r23.end()).count(3) == 1);
    CHECK(poly_roots_mod_p(fixture, Prime(71)).empty());
    CHECK(poly_roots_mod_p(IntPolynomial({ -1, 0, 1 }), Prime(7)) == std::vector<std::int64_t>{ 1, 6 });
    CHECK_THROWS_AS(poly_roots_mod_p(IntPolynomial({ 7, 14 }), Prime(7)), std::invalid_argument);
    CHECK_THROWS_AS(poly_roots_mod_p(IntPolynomial{}, Prime(7)), std::invalid_argument);
}

TEST_CASE("poly_roots_mod_p equals evaluation over all residues, p < 10^4")
{
    IntPolynomial const cubic({ 5, -3, 0, 2 });
    for (std::int64_t p = 3; p < 10000; p += 2) {
        if (!is_prime(p))
            continue;
        REQUIRE(poly_roots_mod_p(fixture, Prime(p)) == roots_by_evaluation(fixture, p));
        if (p < 2000)
            REQUIRE(poly_roots_mod_p(cubic, Prime(p)) == roots_by_evaluation(cubic, p));
    }
}

TEST_CASE("biquadratic path above the exhaustive bound agrees with evaluation")
{
    int checked = 0;
    for (std::int64_t p = exhaustive_root_bound + 1; checked < 12; p += 2) {
        if (!is_prime(p))
            continue;
        ++checked;
        REQUIRE(poly_roots_mod_p(fixture, Prime(p)) == roots_by_evaluation(fixture, p));
        IntPolynomial const quad({ 6, -5, 1 }); // (x-2)(x-3)
        REQUIRE(poly_roots_mod_p(quad, Prime(p)) == std::vector<std::int64_t>{ 2, 3 });
        IntPolynomial const lin({ 4, 3 });
        REQUIRE(poly_roots_mod_p(lin, Prime(p)) == roots_by_evaluation(lin, p));
    }
}

TEST_CASE("unsupported polynomial above the exhaustive bound is a resource error")
{
    std::int64_t p = exhaustive_root_bound + 1;
    while (!is_prime(p))
        p += 2;
    CHECK_THROWS_AS(poly_roots_mod_p(IntPolynomial({ 5, -3, 0, 2 }), Prime(p)), ResourceLimit);
}

TEST_CASE("polynomial discriminant against closed formulas")
{
    // quadratic: b^2 - 4ac
    CHECK(poly_discriminant(IntPolynomial({ 3, 5, 2 })) == 25 - 24);
    // cubic a x^3 + b x^2 + c x + d:
    // b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd
    {
        std::int64_t a = 2, b = 0, c = -3, d = 5;
        std::int64_t expected = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
        CHECK(poly_discriminant(IntPolynomial({ d, c, b, a })) == expected);
    }
    // biquadratic x^4 + b x^2 + c: 16 c (b^2 - 4c)^2
    for (std::int64_t b = -4; b <= 4; ++b)
        for (std::int64_t c = -9; c <= 9; ++c) {
            if (c == 0)
                continue;
            CHECK(poly_discriminant(IntPolynomial({ c, 0, b, 0, 1 })) == 16 * c * (b * b - 4 * c) * (b * b - 4 * c));
        }
    CHECK(poly_discriminant(fixture) == -16384 * 7);
    CHECK(poly_discriminant(IntPolynomial({ 3, 1 })) == 1);
    CHECK_THROWS_AS(poly_discriminant(IntPolynomial({ 4 })), std::invalid_argument);
}

TEST_CASE("polynomial discriminant by product of root differences")
{
    // f = prod (x - r_i): disc = prod_{i<j} (r_i - r_j)^2
    std::vector<std::vector<std::int64_t>> root_sets = { { 1, 2, 3 }, { -2, 0, 5, 7 }, { 1, -1, 2, -3, 4 } };
    for (auto const & roots : root_sets) {
        std::vector<std::int64_t> coeffs{ 1 };
        for (std::int64_t r : roots) {
            std::vector<std::int64_t> next(coeffs.size() + 1, 0);
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                next[k + 1] += coeffs[k];
                next[k] -= r * coeffs[k];
            }
            coeffs = next;
        }
        std::int64_t expected = 1;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                expected *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
        CHECK(poly_discriminant(IntPolynomial(coeffs)) == expected);
    }
}
