#include "deza/polynomial.hh"

#include <stdexcept>

namespace deza {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim()
{
    while (! coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::linear(const mpz_class& root) { return IntPoly({-root, 1}); }

IntPoly IntPoly::quadratic(const mpz_class& b, const mpz_class& c) { return IntPoly({c, -b, 1}); }

mpz_class IntPoly::eval(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& monic) const
{
    if (! monic.is_monic())
        throw std::invalid_argument("divisor must be monic");
    int dd = monic.degree();
    if (degree() < dd)
        return coeffs_.empty() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;

    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(coeffs_.size() - dd);
    for (int i = degree(); i >= dd; --i) {
        mpz_class lead = rem[i];
        quot[i - dd] = lead;
        if (lead == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] -= lead * monic.coeffs_[j];
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0)
            return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::pow(int e) const
{
    IntPoly r({1});
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

std::string IntPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return IntPoly{};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

} // namespace deza
