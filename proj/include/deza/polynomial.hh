#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace deza {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    /// x − root
    static IntPoly linear(const mpz_class& root);
    /// x² − b·x + c
    static IntPoly quadratic(const mpz_class& b, const mpz_class& c);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    const mpz_class& coeff(int i) const { return coeffs_.at(i); }
    bool is_monic() const { return ! coeffs_.empty() && coeffs_.back() == 1; }

    mpz_class eval(const mpz_class& x) const;

    /// Quotient of division by a monic polynomial if the remainder is zero.
    std::optional<IntPoly> divide_exact(const IntPoly& monic) const;

    IntPoly pow(int e) const;

    /// e.g. "x^3 - 3x - 2"
    std::string to_string() const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

} // namespace deza
