#include "qforms/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qforms/arith.hpp"

namespace qforms {

namespace {

/* Witness set from Jim Sinclair; deterministic below 2^64. */
constexpr std::uint64_t mr_bases[] = { 2, 325, 9375, 28178, 450775, 9780504, 1795265022 };

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod_u(r, b, m);
        b = mulmod_u(b, b, m);
    }
    return r;
}

std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p)
{
    return powmod(a, static_cast<std::uint64_t>(p - 2), p);
}

std::int64_t tonelli_shanks(std::int64_t a, std::int64_t p)
{
    if ((p & 3) == 3)
        return powmod(a, static_cast<std::uint64_t>((p + 1) / 4), p);

    std::int64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, static_cast<std::uint64_t>((p - 1) / 2), p) != p - 1)
        ++z;

    int m = s;
    std::int64_t c = powmod(z, static_cast<std::uint64_t>(q), p);
    std::int64_t t = powmod(a, static_cast<std::uint64_t>(q), p);
    std::int64_t r = powmod(a, static_cast<std::uint64_t>((q + 1) / 2), p);
    while (t != 1) {
        int i = 0;
        for (std::int64_t t2 = t; t2 != 1; t2 = mulmod(t2, t2, p))
            ++i;
        std::int64_t b = c;
        for (int j = 0; j < m - i - 1; ++j)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

void require_odd(Prime const & p)
{
    if (!p.is_odd())
        throw std::invalid_argument("modulus must be an odd prime");
}

/* Roots of c0 + c1 u + c2 u^2 mod p, with c2 != 0 or c1 != 0. */
std::vector<std::int64_t> low_degree_roots(std::int64_t c0, std::int64_t c1, std::int64_t c2,
                                           Prime const & p)
{
    std::int64_t const pv = p.value();
    std::vector<std::int64_t> roots;
    if (c2 == 0) {
        if (c1 != 0)
            roots.push_back(mulmod(pv - c0, inverse_mod_p(c1, pv), pv));
        return roots;
    }
    std::int64_t disc = mod(mulmod(c1, c1, pv) - mulmod(4 % pv, mulmod(c2, c0, pv), pv), pv);
    auto s = sqrt_mod_p(disc, p);
    if (!s)
        return roots;
    std::int64_t inv = inverse_mod_p(mulmod(2, c2, pv), pv);
    roots.push_back(mulmod(mod(*s - c1, pv), inv, pv));
    roots.push_back(mulmod(mod(-*s - c1, pv), inv, pv));
    return roots;
}

std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> m)
{
    std::size_t const n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t i = k + 1;
            while (i < n && m[i][k] == 0)
                ++i;
            if (i == n)
                return 0;
            std::swap(m[i], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                i128 v = static_cast<i128>(m[i][j]) * m[k][k] - static_cast<i128>(m[i][k]) * m[k][j];
                m[i][j] = narrow(v / prev);
            }
        }
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

} // namespace

bool is_prime(std::int64_t m)
{
    if (m < 2)
        return false;
    for (std::int64_t small : { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 }) {
        if (m % small == 0)
            return m == small;
    }
    auto const n = static_cast<std::uint64_t>(m);
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t base : mr_bases) {
        std::uint64_t a = base % n;
        if (a == 0)
            continue;
        std::uint64_t x = powmod_u(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(std::int64_t v) : value_(v)
{
    if (!is_prime(v))
        throw HypothesisError(Violation::not_prime, std::to_string(v) + " is not prime");
}

int jacobi(std::int64_t a, std::int64_t m)
{
    if (m <= 0 || (m & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a = mod(a, m);
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            std::int64_t r = m & 7;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, m);
        if ((a & 3) == 3 && (m & 3) == 3)
            result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

std::optional<std::int64_t> sqrt_mod_p(std::int64_t a, Prime const & p)
{
    require_odd(p);
    std::int64_t const pv = p.value();
    a = mod(a, pv);
    if (a == 0)
        return 0;
    if (powmod(a, static_cast<std::uint64_t>((pv - 1) / 2), pv) != 1)
        return std::nullopt;
    std::int64_t r = tonelli_shanks(a, pv);
    return std::min(r, pv - r);
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::int64_t IntPolynomial::coefficient(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t IntPolynomial::eval_mod(std::int64_t x, std::int64_t m) const
{
    std::int64_t acc = 0;
    x = mod(x, m);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = mod(static_cast<i128>(acc) * x + mod(*it, m), m);
    return acc;
}

IntPolynomial IntPolynomial::reduced_mod(std::int64_t m) const
{
    std::vector<std::int64_t> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [m](std::int64_t v) { return mod(v, m); });
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const
{
    std::vector<std::int64_t> c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        c.push_back(checked_mul(static_cast<std::int64_t>(k), coeffs_[k]));
    return IntPolynomial(std::move(c));
}

std::vector<std::int64_t> poly_roots_mod_p(IntPolynomial const & f, Prime const & p)
{
    require_odd(p);
    std::int64_t const pv = p.value();
    IntPolynomial const g = f.reduced_mod(pv);
    if (g.is_zero())
        throw std::invalid_argument("polynomial vanishes identically modulo " + std::to_string(pv));

    std::vector<std::int64_t> roots;
    if (g.degree() == 0)
        return roots;

    if (pv < exhaustive_root_bound) {
        for (std::int64_t x = 0; x < pv; ++x) {
            if (g.eval_mod(x, pv) == 0)
                roots.push_back(x);
        }
        return roots;
    }

    if (g.degree() <= 2) {
        roots = low_degree_roots(g.coefficient(0), g.coefficient(1), g.coefficient(2), p);
    } else if (g.degree() == 4 && g.coefficient(1) == 0 && g.coefficient(3) == 0) {
        for (std::int64_t u : low_degree_roots(g.coefficient(0), g.coefficient(2), g.coefficient(4), p)) {
            if (auto r = sqrt_mod_p(u, p)) {
                roots.push_back(*r);
                roots.push_back(mod(-*r, pv));
            }
        }
    } else {
        throw ResourceLimit("poly_roots_mod_p: degree-" + std::to_string(g.degree())
                            + " polynomial needs p < " + std::to_string(exhaustive_root_bound));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::int64_t resultant(IntPolynomial const & f, IntPolynomial const & g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    int const m = f.degree();
    int const n = g.degree();
    std::size_t const size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<std::int64_t>> sylvester(size, std::vector<std::int64_t>(size, 0));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            sylvester[row][row + k] = f.coefficient(m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            sylvester[n + row][row + k] = g.coefficient(n - k);
    return bareiss_determinant(std::move(sylvester));
}

std::int64_t poly_discriminant(IntPolynomial const & f)
{
    int const d = f.degree();
    if (d < 1)
        throw std::invalid_argument("discriminant needs a polynomial of degree >= 1");
    std::int64_t res = resultant(f, f.derivative());
    std::int64_t lead = f.coefficient(d);
    if (res % lead != 0)
        throw ConsistencyError("resultant not divisible by the leading coefficient");
    std::int64_t disc = res / lead;
    return ((d * (d - 1) / 2) % 2) ? checked_mul(-1, disc) : disc;
}

} // namespace qforms
