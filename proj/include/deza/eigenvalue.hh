#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace deza {

/// Exact number of the form (p + u·√d)/q with q > 0, gcd(p, u, q) = 1 and
/// d square-free. Rationals are stored with u = 0, d = 1; integers
/// additionally have q = 1.
///
/// Graph eigenvalues are bounded by the maximum degree, so 64-bit components
/// are ample; every operation checks for overflow and throws
/// std::overflow_error rather than wrapping.
class Eigenvalue {
public:
    Eigenvalue() = default;

    static Eigenvalue integer(std::int64_t z);
    static Eigenvalue rational(std::int64_t num, std::int64_t den);

    /// (p + u·√d)/q, brought into canonical form. d must be positive.
    static Eigenvalue quadratic(std::int64_t p, std::int64_t u, std::int64_t d, std::int64_t q);

    /// Non-negative square root of num/den, which must be a non-negative
    /// rational.
    static Eigenvalue sqrt_of(std::int64_t num, std::int64_t den = 1);

    /// The two roots (B ± √(B² − 4C))/2 of x² − Bx + C, larger first.
    static std::pair<Eigenvalue, Eigenvalue> roots_of_quadratic(std::int64_t b, std::int64_t c);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t u() const noexcept { return u_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t q() const noexcept { return q_; }

    bool is_rational() const noexcept { return u_ == 0; }
    bool is_integer() const noexcept { return u_ == 0 && q_ == 1; }
    bool is_zero() const noexcept { return p_ == 0 && u_ == 0; }

    /// Integer value; throws if the number is not an integer.
    std::int64_t as_integer() const;

    /// True iff the minimal polynomial over Q has integer coefficients.
    bool is_algebraic_integer() const;

    Eigenvalue conjugate() const;
    Eigenvalue abs() const;
    Eigenvalue squared() const { return *this * *this; }

    long double approx() const;

    /// "z" for integers, "a/b" for other rationals, "(p+u√d)/q" or
    /// "(p-u√d)/q" for irrationals.
    std::string to_string() const;

    Eigenvalue operator-() const;
    friend Eigenvalue operator+(const Eigenvalue& a, const Eigenvalue& b);
    friend Eigenvalue operator-(const Eigenvalue& a, const Eigenvalue& b) { return a + (-b); }
    /// Products and sums of irrationals require a common √d (or a rational
    /// operand); anything else throws std::domain_error.
    friend Eigenvalue operator*(const Eigenvalue& a, const Eigenvalue& b);
    friend Eigenvalue operator/(const Eigenvalue& a, const Eigenvalue& b);

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
    friend std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b);

private:
    static Eigenvalue canonical(__int128 p, __int128 u, __int128 d, __int128 q);

    Eigenvalue(std::int64_t p, std::int64_t u, std::int64_t d, std::int64_t q) : p_(p), u_(u), d_(d), q_(q) {}

    std::int64_t p_ = 0;
    std::int64_t u_ = 0;
    std::int64_t d_ = 1;
    std::int64_t q_ = 1;
};

/// (s, d) with n = s²·d and d square-free.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n);

/// Exact integer square root if n is a perfect square.
bool is_perfect_square(std::int64_t n);

} // namespace deza
