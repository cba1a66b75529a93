#include "qforms/classgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qforms/arith.hpp"

namespace qforms {

namespace {

constexpr std::int64_t coprime_search_radius = 10;

/* A form properly equivalent to g whose leading coefficient is prime to m. */
QuadForm coprime_equivalent(QuadForm const & g, std::int64_t m)
{
    for (std::int64_t r = 1; r <= coprime_search_radius; ++r) {
        for (std::int64_t x = -r; x <= r; ++x) {
            for (std::int64_t y = -r; y <= r; ++y) {
                if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != r || std::gcd(x, y) != 1)
                    continue;
                if (std::gcd(g(x, y), m) != 1)
                    continue;
                // Complete (x, y) to the first column of an SL2(Z) matrix.
                ExtGcd e = ext_gcd(x, y);
                UnimodularMap map{ x, -e.y, y, e.x };
                return substitute(g, map);
            }
        }
    }
    throw ConsistencyError("compose: no value of " + to_string(g) + " prime to " + std::to_string(m)
                           + " within the search radius");
}

std::vector<std::pair<std::int64_t, int>> factor_small(std::int64_t v)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t l = 2; l * l <= v; ++l) {
        int e = 0;
        while (v % l == 0) {
            v /= l;
            ++e;
        }
        if (e)
            out.emplace_back(l, e);
    }
    if (v > 1)
        out.emplace_back(v, 1);
    return out;
}

int exact_log(std::int64_t v, std::int64_t base)
{
    int k = 0;
    while (v % base == 0) {
        v /= base;
        ++k;
    }
    if (v != 1)
        throw ConsistencyError("element count is not a prime power");
    return k;
}

} // namespace

QuadForm principal_form(std::int64_t n)
{
    if (n < 1)
        throw HypothesisError(Violation::nonpositive_n, "n must be positive, got " + std::to_string(n));
    return { 1, 0, n };
}

QuadForm principal_form(Discriminant const & d)
{
    if (mod(d.value(), 4) == 0)
        return { 1, 0, d.abs() / 4 };
    return { 1, 1, (1 + d.abs()) / 4 };
}

QuadForm compose(QuadForm const & f, QuadForm const & g_in)
{
    for (QuadForm const * h : { &f, &g_in }) {
        if (!h->is_positive_definite() || !h->is_primitive())
            throw std::invalid_argument("compose: " + to_string(*h) + " is not primitive positive definite");
    }
    std::int64_t const D = f.disc();
    if (g_in.disc() != D)
        throw std::invalid_argument("compose: discriminants differ (" + std::to_string(D) + " vs "
                                    + std::to_string(g_in.disc()) + ")");

    QuadForm g = g_in;
    if (std::gcd(std::gcd(f.a, g.a), (f.b + g.b) / 2) != 1)
        g = coprime_equivalent(g, f.a);

    std::int64_t const a1 = f.a, b1 = f.b;
    std::int64_t const a2 = g.a, b2 = g.b;
    std::int64_t const s = (b1 + b2) / 2;

    // u a1 + v a2 + w s = 1
    ExtGcd const e1 = ext_gcd(a1, a2);
    ExtGcd const e2 = ext_gcd(e1.g, s);
    if (e2.g != 1)
        throw ConsistencyError("compose: gcd(a1, a2, (b1+b2)/2) != 1 after adjustment");
    i128 const u = static_cast<i128>(e2.x) * e1.x;
    i128 const v = static_cast<i128>(e2.x) * e1.y;
    i128 const w = e2.y;

    std::int64_t const a3 = checked_mul(a1, a2);
    std::int64_t const modulus = checked_mul(2, a3);
    i128 const half = (static_cast<i128>(b1) * b2 + D) / 2;
    i128 const raw = mod(u * a1, modulus) * static_cast<i128>(mod(b2, modulus))
                     + mod(v * a2, modulus) * static_cast<i128>(mod(b1, modulus))
                     + mod(w, modulus) * static_cast<i128>(mod(half, modulus));
    std::int64_t const B = mod(raw, modulus);

    i128 const num = static_cast<i128>(B) * B - D;
    i128 const four_a3 = static_cast<i128>(4) * a3;
    if ((B - b1) % (2 * a1) != 0 || (B - b2) % (2 * a2) != 0 || num % four_a3 != 0)
        throw ConsistencyError("compose: middle coefficient fails the Dirichlet congruences");

    return reduce({ a3, B, narrow(num / four_a3) }).form;
}

FormClassGroup::FormClassGroup(Discriminant d, std::vector<QuadForm> classes,
                               std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : d_(d), classes_(std::move(classes)), table_(std::move(table)), identity_(identity)
{
}

std::size_t FormClassGroup::index_of(QuadForm const & reduced) const
{
    auto it = std::lower_bound(classes_.begin(), classes_.end(), reduced);
    if (it == classes_.end() || *it != reduced)
        throw ConsistencyError("form " + to_string(reduced) + " is not a class of discriminant "
                               + std::to_string(d_.value()));
    return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t FormClassGroup::power(std::size_t i, std::uint64_t k) const
{
    std::size_t result = identity_;
    for (; k; k >>= 1) {
        if (k & 1)
            result = table_[result][i];
        i = table_[i][i];
    }
    return result;
}

std::size_t FormClassGroup::inverse(std::size_t i) const
{
    QuadForm const & f = classes_[i];
    return index_of(reduce({ f.a, -f.b, f.c }).form);
}

std::size_t FormClassGroup::element_order(std::size_t i) const
{
    std::size_t k = 1;
    for (std::size_t x = i; x != identity_; x = table_[x][i])
        ++k;
    return k;
}

std::vector<std::int64_t> FormClassGroup::invariant_factors() const
{
    auto const h = static_cast<std::int64_t>(order());
    std::vector<std::vector<int>> exponents; // per prime, descending
    std::size_t width = 0;
    for (auto [l, total] : factor_small(h)) {
        std::vector<int> rank_at; // rank_at[k-1] = #{cyclic factors with exponent >= k}
        int prev_log = 0;
        std::uint64_t lk = 1;
        while (prev_log < total) {
            lk *= static_cast<std::uint64_t>(l);
            std::int64_t count = 0;
            for (std::size_t x = 0; x < order(); ++x)
                count += power(x, lk) == identity_;
            int lg = exact_log(count, l);
            rank_at.push_back(lg - prev_log);
            prev_log = lg;
        }
        std::vector<int> exps(static_cast<std::size_t>(rank_at.front()), 0);
        for (int r : rank_at)
            for (int j = 0; j < r; ++j)
                ++exps[static_cast<std::size_t>(j)];
        width = std::max(width, exps.size());
        exponents.push_back(std::move(exps));
    }
    std::vector<std::int64_t> factors(width, 1);
    auto primes = factor_small(h);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t j = 0; j < exponents[pi].size(); ++j)
            for (int k = 0; k < exponents[pi][j]; ++k)
                factors[j] *= primes[pi].first;
    std::reverse(factors.begin(), factors.end());
    return factors;
}

FormClassGroup class_group(Discriminant const & d)
{
    std::vector<QuadForm> classes = enumerate_reduced(d);
    std::size_t const h = classes.size();
    FormClassGroup group(d, classes, {}, 0);
    group.identity_ = group.index_of(principal_form(d));

    group.table_.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            group.table_[i][j] = group.index_of(compose(classes[i], classes[j]));

    auto fail = [&](std::string const & what) {
        throw ConsistencyError("C(" + std::to_string(d.value()) + "): " + what);
    };
    std::size_t const e = group.identity_;
    auto const & t = group.table_;
    for (std::size_t i = 0; i < h; ++i) {
        if (t[e][i] != i || t[i][e] != i)
            fail("principal class is not an identity for " + to_string(classes[i]));
        if (t[i][group.inverse(i)] != e)
            fail("(a,-b,c) is not inverse to " + to_string(classes[i]));
        for (std::size_t j = 0; j < h; ++j) {
            if (t[i][j] != t[j][i])
                fail("composition is not commutative");
            for (std::size_t k = 0; k < h; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]])
                    fail("composition is not associative");
        }
    }
    return group;
}

std::ptrdiff_t GenusPartition::block_of_residue(std::int64_t v) const
{
    std::int64_t r = mod(v, d.abs());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].residues.begin(), blocks[i].residues.end(), r))
            return static_cast<std::ptrdiff_t>(i);
    return -1;
}

std::ptrdiff_t GenusPartition::block_of_form(QuadForm const & reduced) const
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::find(blocks[i].forms.begin(), blocks[i].forms.end(), reduced) != blocks[i].forms.end())
            return static_cast<std::ptrdiff_t>(i);
    return -1;
}

GenusPartition genus_partition(Discriminant const & d)
{
    std::map<std::vector<std::int64_t>, std::vector<QuadForm>> by_residues;
    for (QuadForm const & f : enumerate_reduced(d))
        by_residues[represented_residues(f, d.abs())].push_back(f);

    GenusPartition out{ d, {} };
    for (auto & [residues, forms] : by_residues)
        out.blocks.push_back({ residues, std::move(forms) });
    // Lexicographic order on residue vectors already sorts by smallest residue.
    return out;
}

bool is_convenient(std::int64_t n)
{
    GenusPartition g = genus_partition(Discriminant::of_principal(n));
    return std::all_of(g.blocks.begin(), g.blocks.end(), [](GenusBlock const & b) { return b.forms.size() == 1; });
}

} // namespace qforms
