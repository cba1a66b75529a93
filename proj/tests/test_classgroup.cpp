#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"

#include "qforms/classgroup.hpp"
#include "qforms/errors.hpp"
#include "qforms/numtheory.hpp"
#include "qforms/represent.hpp"

using namespace qforms;

namespace {

bool properly_represents(QuadForm const & f, std::int64_t m)
{
    std::int64_t const absd = -f.disc();
    std::int64_t const bound = static_cast<std::int64_t>(std::sqrt(4.0 * f.a * m / absd)) + 1;
    std::int64_t const xb = static_cast<std::int64_t>(std::sqrt(4.0 * f.c * m / absd)) + 1;
    for (std::int64_t y = -bound; y <= bound; ++y)
        for (std::int64_t x = -xb; x <= xb; ++x)
            if (std::gcd(x, y) == 1 && f(x, y) == m)
                return true;
    return false;
}

/* Euler's idoneal numbers up to 100. */
std::set<std::int64_t> const idoneal = { 1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 13, 15, 16, 18, 21, 22, 24, 25,
                                         28, 30, 33, 37, 40, 42, 45, 48, 57, 58, 60, 70, 72, 78, 85, 88, 93 };

} // namespace

TEST_CASE("principal_form examples")
{
    CHECK(principal_form(5) == QuadForm{ 1, 0, 5 });
    CHECK(principal_form(14) == QuadForm{ 1, 0, 14 });
    CHECK(principal_form(1) == QuadForm{ 1, 0, 1 });
    CHECK_THROWS_AS(principal_form(0), HypothesisError);
    CHECK(principal_form(Discriminant(-23)) == QuadForm{ 1, 1, 6 });
}

TEST_CASE("compose examples")
{
    CHECK(compose({ 2, 2, 3 }, { 2, 2, 3 }) == QuadForm{ 1, 0, 5 });
    CHECK(compose({ 1, 0, 14 }, { 3, 2, 5 }) == QuadForm{ 3, 2, 5 });
    CHECK(compose({ 3, 2, 5 }, { 3, 2, 5 }) == QuadForm{ 2, 0, 7 });
    CHECK(compose({ 3, 2, 5 }, { 3, -2, 5 }) == QuadForm{ 1, 0, 14 });
    CHECK_THROWS_AS(compose({ 1, 0, 5 }, { 1, 0, 14 }), std::invalid_argument);
    CHECK_THROWS_AS(compose({ 2, 2, 6 }, { 1, 0, 5 }), std::invalid_argument);
}

TEST_CASE("compose examples against the product-representation oracle")
{
    // 3 = (2,2,3)(0,1) and 7 = (2,2,3)(1,1); the square must represent 21.
    CHECK(represent(21, compose({ 2, 2, 3 }, { 2, 2, 3 })));
    // 3 = (3,2,5)(1,0), 5 = (3,2,5)(0,1): the square represents 15 ...
    CHECK(represent(15, compose({ 3, 2, 5 }, { 3, 2, 5 })));
    // ... and properly represents 3^2; x^2 + 14y^2 does not, so the square is not principal.
    CHECK(properly_represents(compose({ 3, 2, 5 }, { 3, 2, 5 }), 9));
    CHECK_FALSE(properly_represents({ 1, 0, 14 }, 9));
}

TEST_CASE("compose on odd discriminants")
{
    // C(-23) is cyclic of order 3.
    QuadForm const g{ 2, 1, 3 };
    CHECK(compose(g, g) == QuadForm{ 2, -1, 3 });
    CHECK(compose(compose(g, g), g) == QuadForm{ 1, 1, 6 });
    CHECK(class_group(Discriminant(-23)).invariant_factors() == std::vector<std::int64_t>{ 3 });
}

TEST_CASE("class_group examples")
{
    auto g20 = class_group(Discriminant(-20));
    CHECK(g20.order() == 2);
    CHECK(g20.invariant_factors() == std::vector<std::int64_t>{ 2 });

    auto g56 = class_group(Discriminant(-56));
    CHECK(g56.order() == 4);
    CHECK(g56.is_cyclic());
    CHECK(g56.invariant_factors() == std::vector<std::int64_t>{ 4 });
    CHECK(g56.element_order(g56.index_of({ 3, 2, 5 })) == 4);
    CHECK(g56.element_order(g56.index_of({ 2, 0, 7 })) == 2);
    CHECK(g56.classes()[g56.identity()] == QuadForm{ 1, 0, 14 });

    auto g4 = class_group(Discriminant(-4));
    CHECK(g4.order() == 1);
    CHECK(g4.invariant_factors().empty());

    CHECK(class_group(Discriminant(-84)).invariant_factors() == std::vector<std::int64_t>{ 2, 2 });
    CHECK(class_group(Discriminant(-104)).invariant_factors() == std::vector<std::int64_t>{ 6 });
    CHECK(class_group(Discriminant(-420)).invariant_factors() == std::vector<std::int64_t>{ 2, 2, 2 });
}

TEST_CASE("class group structure is consistent with element orders, n <= 100")
{
    for (std::int64_t n = 1; n <= 100; ++n) {
        auto g = class_group(Discriminant::of_principal(n));
        auto factors = g.invariant_factors();
        std::int64_t product = std::accumulate(factors.begin(), factors.end(), std::int64_t{ 1 }, std::multiplies<>());
        REQUIRE(product == static_cast<std::int64_t>(g.order()));
        for (std::size_t i = 1; i < factors.size(); ++i)
            REQUIRE(factors[i] % factors[i - 1] == 0);
        std::size_t max_order = 1;
        for (std::size_t i = 0; i < g.order(); ++i)
            max_order = std::max(max_order, g.element_order(i));
        REQUIRE(static_cast<std::int64_t>(max_order) == (factors.empty() ? 1 : factors.back()));
    }
}

TEST_CASE("composition respects representation of primes, n <= 30")
{
    auto primes = primes_between(3, 200);
    for (std::int64_t n = 1; n <= 30; ++n) {
        auto forms = enumerate_reduced(Discriminant::of_principal(n));
        for (QuadForm const & f : forms)
            for (QuadForm const & g : forms) {
                QuadForm const h = compose(f, g);
                for (std::int64_t p : primes) {
                    if (n % p == 0 || !represent(p, f))
                        continue;
                    for (std::int64_t q : primes)
                        if (n % q != 0 && represent(q, g))
                            REQUIRE(represent(p * q, h));
                }
            }
    }
}

TEST_CASE("genus_partition examples")
{
    auto g20 = genus_partition(Discriminant(-20));
    REQUIRE(g20.blocks.size() == 2);
    CHECK(g20.blocks[0] == GenusBlock{ { 1, 9 }, { { 1, 0, 5 } } });
    CHECK(g20.blocks[1] == GenusBlock{ { 3, 7 }, { { 2, 2, 3 } } });

    auto g56 = genus_partition(Discriminant(-56));
    REQUIRE(g56.blocks.size() == 2);
    CHECK(g56.blocks[0] == GenusBlock{ { 1, 9, 15, 23, 25, 39 }, { { 1, 0, 14 }, { 2, 0, 7 } } });
    CHECK(g56.blocks[1] == GenusBlock{ { 3, 5, 13, 19, 27, 45 }, { { 3, -2, 5 }, { 3, 2, 5 } } });
    CHECK(g56.block_of_residue(23 + 56) == 0);
    CHECK(g56.block_of_residue(2) == -1);
    CHECK(g56.block_of_form({ 3, 2, 5 }) == 1);

    CHECK(genus_partition(Discriminant(-4)).blocks.size() == 1);
}

TEST_CASE("is_convenient examples and the idoneal list")
{
    CHECK(is_convenient(5));
    CHECK_FALSE(is_convenient(14));
    CHECK(is_convenient(1));
    for (std::int64_t n = 1; n <= 100; ++n)
        REQUIRE(is_convenient(n) == (idoneal.count(n) == 1));
}

TEST_CASE("genus blocks are equal-sized and squares are in the principal genus, n <= 100")
{
    for (std::int64_t n = 1; n <= 100; ++n) {
        Discriminant const d = Discriminant::of_principal(n);
        auto genera = genus_partition(d);
        auto group = class_group(d);
        std::size_t const size = genera.blocks.front().forms.size();
        std::size_t total = 0;
        for (GenusBlock const & b : genera.blocks) {
            REQUIRE(b.forms.size() == size);
            total += b.forms.size();
        }
        REQUIRE(total == group.order());
        REQUIRE(group.order() % genera.blocks.size() == 0);
        auto const principal = genera.block_of_form(principal_form(n));
        for (QuadForm const & f : group.classes())
            REQUIRE(genera.block_of_form(compose(f, f)) == principal);
    }
}
