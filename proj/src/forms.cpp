#include "qforms/forms.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qforms/arith.hpp"

namespace qforms {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

void require_definite_primitive(QuadForm const & f, char const * who)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument(std::string(who) + ": form " + to_string(f) + " is not positive definite");
    if (!f.is_primitive())
        throw std::invalid_argument(std::string(who) + ": form " + to_string(f) + " is not primitive");
}

} // namespace

std::int64_t QuadForm::disc() const
{
    return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c)));
}

bool QuadForm::is_positive_definite() const
{
    return a > 0 && disc() < 0;
}

bool QuadForm::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::int64_t QuadForm::operator()(std::int64_t x, std::int64_t y) const
{
    i128 v = static_cast<i128>(a) * x * x + static_cast<i128>(b) * x * y + static_cast<i128>(c) * y * y;
    return narrow(v);
}

std::ostream & operator<<(std::ostream & os, QuadForm const & f)
{
    return os << '(' << f.a << ", " << f.b << ", " << f.c << ')';
}

std::string to_string(QuadForm const & f)
{
    return std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c);
}

QuadForm parse_form(std::string const & text)
{
    std::string cleaned;
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']')
            continue;
        cleaned += ch == ',' ? ' ' : ch;
    }
    std::istringstream in(cleaned);
    QuadForm f;
    std::string rest;
    if (!(in >> f.a >> f.b >> f.c) || (in >> rest))
        throw std::invalid_argument("expected a form as \"a,b,c\", got \"" + text + "\"");
    return f;
}

Discriminant::Discriminant(std::int64_t d) : value_(d)
{
    if (d >= 0)
        throw std::invalid_argument("discriminant must be negative, got " + std::to_string(d));
    if (mod(d, 4) > 1)
        throw std::invalid_argument("discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
}

Discriminant Discriminant::of_principal(std::int64_t n)
{
    if (n < 1)
        throw HypothesisError(Violation::nonpositive_n, "n must be positive, got " + std::to_string(n));
    return Discriminant(checked_mul(-4, n));
}

Discriminant discriminant(QuadForm const & f)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("form " + to_string(f) + " is not positive definite");
    return Discriminant(f.disc());
}

std::int64_t UnimodularMap::determinant() const
{
    return narrow(static_cast<i128>(p) * s - static_cast<i128>(q) * r);
}

UnimodularMap UnimodularMap::operator*(UnimodularMap const & o) const
{
    auto dot = [](std::int64_t u1, std::int64_t v1, std::int64_t u2, std::int64_t v2) {
        return narrow(static_cast<i128>(u1) * v1 + static_cast<i128>(u2) * v2);
    };
    return { dot(p, o.p, q, o.r), dot(p, o.q, q, o.s), dot(r, o.p, s, o.r), dot(r, o.q, s, o.s) };
}

UnimodularMap UnimodularMap::inverse() const
{
    std::int64_t d = determinant();
    if (d != 1 && d != -1)
        throw std::invalid_argument("map is not unimodular");
    return { checked_mul(d, s), checked_mul(-d, q), checked_mul(-d, r), checked_mul(d, p) };
}

QuadForm substitute(QuadForm const & g, UnimodularMap const & m)
{
    i128 const b = static_cast<i128>(2) * g.a * m.p * m.q
                   + static_cast<i128>(g.b) * (static_cast<i128>(m.p) * m.s + static_cast<i128>(m.q) * m.r)
                   + static_cast<i128>(2) * g.c * m.r * m.s;
    return { g(m.p, m.r), narrow(b), g(m.q, m.s) };
}

bool is_reduced(QuadForm const & f)
{
    std::int64_t const abs_b = f.b < 0 ? -f.b : f.b;
    if (!(abs_b <= f.a && f.a <= f.c))
        return false;
    if ((abs_b == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

Reduction reduce(QuadForm const & f)
{
    require_definite_primitive(f, "reduce");

    // Invariant: h == substitute(f, t).
    QuadForm h = f;
    UnimodularMap t = UnimodularMap::identity();
    auto step = [&](UnimodularMap const & s) {
        h = substitute(h, s);
        t = t * s;
    };
    UnimodularMap const swap{ 0, -1, 1, 0 };

    for (;;) {
        std::int64_t k = floor_div(checked_sub(h.a, h.b), checked_mul(2, h.a));
        if (k != 0)
            step({ 1, k, 0, 1 });
        if (h.a > h.c) {
            step(swap);
            continue;
        }
        if (h.a == h.c && h.b < 0)
            step(swap);
        break;
    }
    return { h, t.inverse() };
}

std::vector<QuadForm> enumerate_reduced(Discriminant const & d)
{
    std::int64_t const D = d.value();
    std::int64_t const absd = d.abs();
    bool const principal_type = mod(D, 4) == 0;
    std::vector<QuadForm> out;
    for (std::int64_t a = 1; checked_mul(3, checked_mul(a, a)) <= absd; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = checked_sub(checked_mul(b, b), D);
            if (num % (4 * a) != 0)
                continue;
            QuadForm f{ a, b, num / (4 * a) };
            if (!is_reduced(f) || !f.is_primitive())
                continue;
            if (principal_type && (b & 1))
                throw ConsistencyError("reduced form " + to_string(f) + " of discriminant "
                                       + std::to_string(D) + " has odd middle coefficient");
            out.push_back(f);
        }
    }
    return out;
}

std::optional<Representation> represent(std::int64_t m, QuadForm const & f)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("represent: form " + to_string(f) + " is not positive definite");
    if (m < 1)
        throw std::invalid_argument("represent: m must be positive");

    std::int64_t const absd = -f.disc();
    std::int64_t const four_am = checked_mul(4, checked_mul(f.a, m));
    std::int64_t const y_max = isqrt(four_am / absd);
    std::int64_t const two_a = checked_mul(2, f.a);

    for (std::int64_t t = 0; t <= y_max; ++t) {
        std::optional<Representation> best;
        for (int sign = 0; sign < (t == 0 ? 1 : 2); ++sign) {
            std::int64_t const y = sign ? -t : t;
            // a x^2 + (b y) x + (c y^2 - m) = 0, discriminant D y^2 + 4am.
            std::int64_t delta = checked_add(checked_mul(-absd, checked_mul(y, y)), four_am);
            std::int64_t s;
            if (!is_square(delta, s))
                continue;
            std::int64_t const minus_by = checked_mul(-f.b, y);
            for (std::int64_t num : { checked_add(minus_by, s), checked_sub(minus_by, s) }) {
                if (num % two_a != 0)
                    continue;
                std::int64_t x = num / two_a;
                if (x < 0)
                    continue;
                if (!best || x < best->x)
                    best = Representation{ m, x, y, f, std::gcd(x, y) == 1 };
            }
        }
        if (best) {
            if (f(best->x, best->y) != m)
                throw ConsistencyError("represent: witness does not evaluate to m");
            return best;
        }
    }
    return std::nullopt;
}

std::vector<std::int64_t> represented_residues(QuadForm const & f, std::int64_t modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("represented_residues: modulus must be positive");
    auto const n = static_cast<std::size_t>(modulus);
    std::vector<std::int64_t> ax2(n), cy2(n);
    std::int64_t const am = mod(f.a, modulus);
    std::int64_t const bm = mod(f.b, modulus);
    std::int64_t const cm = mod(f.c, modulus);
    for (std::int64_t x = 0; x < modulus; ++x) {
        std::int64_t x2 = mulmod(x, x, modulus);
        ax2[x] = mulmod(am, x2, modulus);
        cy2[x] = mulmod(cm, x2, modulus);
    }
    std::vector<char> seen(n, 0);
    for (std::int64_t x = 0; x < modulus; ++x) {
        std::int64_t bx = mulmod(bm, x, modulus);
        for (std::int64_t y = 0; y < modulus; ++y) {
            std::int64_t v = (ax2[x] + mulmod(bx, y, modulus) + cy2[y]) % modulus;
            seen[v] = 1;
        }
    }
    std::vector<std::int64_t> out;
    for (std::int64_t v = 0; v < modulus; ++v) {
        if (seen[v] && std::gcd(v, modulus) == 1)
            out.push_back(v);
    }
    return out;
}

} // namespace qforms
