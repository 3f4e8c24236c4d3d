#include "deza/eigenvalue.hh"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace deza {

namespace {
    using i128 = __int128;

    std::int64_t narrow(i128 v)
    {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("eigenvalue component overflow");
        return static_cast<std::int64_t>(v);
    }

    i128 abs128(i128 v) { return v < 0 ? -v : v; }

    i128 gcd128(i128 a, i128 b)
    {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t isqrt(std::int64_t n)
    {
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
        while (r > 0 && r * r > n)
            --r;
        while ((r + 1) * (r + 1) <= n)
            ++r;
        return r;
    }

    mpz_class big(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

    // Sign of a + b·√d for square-free d > 1 (or b = 0).
    int sign2(const mpz_class& a, const mpz_class& b, std::int64_t d)
    {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0)
            return sa;
        if (sa == 0 || sa == sb)
            return sb;
        mpz_class lhs = a * a, rhs = b * b * big(d);
        return lhs > rhs ? sa : sb;
    }

    // Sign of a + b·√d1 + c·√d2 for square-free d1, d2 > 1.
    int sign3(const mpz_class& a, const mpz_class& b, std::int64_t d1, const mpz_class& c, std::int64_t d2)
    {
        if (sgn(c) == 0)
            return sign2(a, b, d1);
        if (sgn(b) == 0)
            return sign2(a, c, d2);
        if (d1 == d2)
            return sign2(a, b + c, d1);
        int sx = sign2(a, b, d1), sy = sgn(c);
        if (sx == 0)
            return sy;
        if (sx == sy)
            return sx;
        // |x| versus |y| through x² − y² = (a² + b²d1 − c²d2) + 2ab·√d1.
        int s = sign2(a * a + b * b * big(d1) - c * c * big(d2), 2 * a * b, d1);
        if (s == 0)
            return 0;
        return s > 0 ? sx : sy;
    }
}

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n)
{
    if (n <= 0)
        throw std::domain_error("split_square needs a positive integer");
    std::int64_t s = 1;
    for (std::int64_t f = 2; f * f <= n; ++f)
        while (n % (f * f) == 0) {
            n /= f * f;
            s *= f;
        }
    return {s, n};
}

bool is_perfect_square(std::int64_t n)
{
    if (n < 0)
        return false;
    auto r = isqrt(n);
    return r * r == n;
}

Eigenvalue Eigenvalue::integer(std::int64_t z) { return Eigenvalue(z, 0, 1, 1); }

Eigenvalue Eigenvalue::rational(std::int64_t num, std::int64_t den) { return canonical(num, 0, 1, den); }

Eigenvalue Eigenvalue::quadratic(std::int64_t p, std::int64_t u, std::int64_t d, std::int64_t q)
{
    return canonical(p, u, d, q);
}

Eigenvalue Eigenvalue::sqrt_of(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0)
        throw std::domain_error("square root of a negative number");
    if (num == 0)
        return integer(0);
    return canonical(0, 1, static_cast<i128>(num) * den, den);
}

std::pair<Eigenvalue, Eigenvalue> Eigenvalue::roots_of_quadratic(std::int64_t b, std::int64_t c)
{
    i128 disc = static_cast<i128>(b) * b - 4 * static_cast<i128>(c);
    if (disc < 0)
        throw std::domain_error("quadratic has no real roots");
    if (disc == 0) {
        auto r = canonical(b, 0, 1, 2);
        return {r, r};
    }
    return {canonical(b, 1, disc, 2), canonical(b, -1, disc, 2)};
}

Eigenvalue Eigenvalue::canonical(i128 p, i128 u, i128 d, i128 q)
{
    if (q == 0)
        throw std::domain_error("zero denominator");
    if (u != 0) {
        if (d <= 0)
            throw std::domain_error("radicand must be positive");
        auto [s, rest] = split_square(narrow(d));
        u *= s;
        d = rest;
        if (d == 1) {
            p += u;
            u = 0;
        }
    }
    if (u == 0)
        d = 1;
    if (q < 0) {
        p = -p;
        u = -u;
        q = -q;
    }
    i128 g = gcd128(gcd128(p, u), q);
    p /= g;
    u /= g;
    q /= g;
    return Eigenvalue(narrow(p), narrow(u), narrow(d), narrow(q));
}

std::int64_t Eigenvalue::as_integer() const
{
    if (! is_integer())
        throw std::domain_error(to_string() + " is not an integer");
    return p_;
}

bool Eigenvalue::is_algebraic_integer() const
{
    if (is_rational())
        return q_ == 1;
    // Minimal polynomial x² − (2p/q)x + (p² − u²d)/q².
    i128 trace = 2 * static_cast<i128>(p_);
    i128 norm = static_cast<i128>(p_) * p_ - static_cast<i128>(u_) * u_ * d_;
    i128 q = q_;
    return trace % q == 0 && norm % (q * q) == 0;
}

Eigenvalue Eigenvalue::conjugate() const { return Eigenvalue(p_, -u_, d_, q_); }

Eigenvalue Eigenvalue::abs() const { return *this < integer(0) ? -*this : *this; }

long double Eigenvalue::approx() const
{
    return (static_cast<long double>(p_) + static_cast<long double>(u_) * std::sqrt(static_cast<long double>(d_)))
        / static_cast<long double>(q_);
}

std::string Eigenvalue::to_string() const
{
    if (is_integer())
        return std::to_string(p_);
    if (is_rational())
        return std::to_string(p_) + "/" + std::to_string(q_);
    auto mag = u_ < 0 ? -static_cast<i128>(u_) : static_cast<i128>(u_);
    return "(" + std::to_string(p_) + (u_ < 0 ? "-" : "+") + std::to_string(static_cast<std::int64_t>(mag))
        + "√" + std::to_string(d_) + ")/" + std::to_string(q_);
}

Eigenvalue Eigenvalue::operator-() const { return canonical(-static_cast<i128>(p_), -static_cast<i128>(u_), d_, q_); }

Eigenvalue operator+(const Eigenvalue& a, const Eigenvalue& b)
{
    if (! a.is_rational() && ! b.is_rational() && a.d_ != b.d_)
        throw std::domain_error("sum of " + a.to_string() + " and " + b.to_string() + " leaves Q(sqrt d)");
    i128 d = a.is_rational() ? b.d_ : a.d_;
    i128 p = static_cast<i128>(a.p_) * b.q_ + static_cast<i128>(b.p_) * a.q_;
    i128 u = static_cast<i128>(a.u_) * b.q_ + static_cast<i128>(b.u_) * a.q_;
    return Eigenvalue::canonical(p, u, d, static_cast<i128>(a.q_) * b.q_);
}

Eigenvalue operator*(const Eigenvalue& a, const Eigenvalue& b)
{
    if (! a.is_rational() && ! b.is_rational() && a.d_ != b.d_)
        throw std::domain_error("product of " + a.to_string() + " and " + b.to_string() + " leaves Q(sqrt d)");
    i128 d = a.is_rational() ? b.d_ : a.d_;
    i128 p = static_cast<i128>(a.p_) * b.p_ + static_cast<i128>(a.u_) * b.u_ * d;
    i128 u = static_cast<i128>(a.p_) * b.u_ + static_cast<i128>(a.u_) * b.p_;
    return Eigenvalue::canonical(p, u, d, static_cast<i128>(a.q_) * b.q_);
}

Eigenvalue operator/(const Eigenvalue& a, const Eigenvalue& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero");
    // a / b = a·conj(b) / N(b) with N(b) = (p² − u²d)/q² rational.
    Eigenvalue num = a * b.conjugate();
    i128 norm_num = static_cast<i128>(b.p_) * b.p_ - static_cast<i128>(b.u_) * b.u_ * b.d_;
    i128 norm_den = static_cast<i128>(b.q_) * b.q_;
    return Eigenvalue::canonical(static_cast<i128>(num.p_) * norm_den, static_cast<i128>(num.u_) * norm_den, num.d_,
        static_cast<i128>(num.q_) * norm_num);
}

std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b)
{
    if (a == b)
        return std::strong_ordering::equal;
    // Sign of q1·q2·(a − b) = (p1q2 − p2q1) + u1q2·√d1 − u2q1·√d2.
    mpz_class pa = big(a.p_), ua = big(a.u_), qa = big(a.q_);
    mpz_class pb = big(b.p_), ub = big(b.u_), qb = big(b.q_);
    int s = sign3(pa * qb - pb * qa, ua * qb, a.d_, -ub * qa, b.d_);
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace deza
