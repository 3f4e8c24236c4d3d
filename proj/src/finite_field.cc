#include "deza/finite_field.hh"

#include "deza/errors.hh"

#include <string>

namespace deza {

namespace {
    std::vector<int> digits(int x, int p, int e)
    {
        std::vector<int> out(e);
        for (int i = 0; i < e; ++i, x /= p)
            out[i] = x % p;
        return out;
    }

    int encode(const std::vector<int>& c, int p)
    {
        int x = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            x = x * p + *it;
        return x;
    }

    // Product of two residues modulo the monic polynomial x^e + tail.
    int poly_mul(int x, int y, const std::vector<int>& tail, int p, int e)
    {
        auto a = digits(x, p, e), b = digits(y, p, e);
        std::vector<int> prod(2 * e, 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (int i = 2 * e - 1; i >= e; --i) {
            int c = prod[i];
            if (c == 0)
                continue;
            prod[i] = 0;
            for (int j = 0; j < e; ++j)
                prod[i - e + j] = ((prod[i - e + j] - c * tail[j]) % p + p) % p;
        }
        prod.resize(e);
        return encode(prod, p);
    }
}

FiniteField::FiniteField(int q) : q_(q), p_(0), e_(0)
{
    if (q < 2 || q > kMaxFieldOrder)
        throw PreconditionError("field order " + std::to_string(q) + " out of range");
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    int rest = q;
    while (rest % p_ == 0) {
        rest /= p_;
        ++e_;
    }
    if (rest != 1)
        throw PreconditionError(std::to_string(q) + " is not a prime power");

    const std::size_t qq = static_cast<std::size_t>(q) * q;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q);
    for (int x = 0; x < q; ++x) {
        auto a = digits(x, p_, e_);
        std::vector<int> n(e_);
        for (int i = 0; i < e_; ++i)
            n[i] = (p_ - a[i]) % p_;
        neg_[x] = encode(n, p_);
        for (int y = 0; y < q; ++y) {
            auto b = digits(y, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i)
                s[i] = (a[i] + b[i]) % p_;
            add_[static_cast<std::size_t>(x) * q + y] = encode(s, p_);
        }
    }

    // First modulus (in encoding order of its tail) with no zero divisors.
    for (int t = 0; t < q; ++t) {
        auto tail = digits(t, p_, e_);
        bool field = true;
        for (int x = 1; x < q && field; ++x)
            for (int y = 1; y < q; ++y) {
                int z = poly_mul(x, y, tail, p_, e_);
                mul_[static_cast<std::size_t>(x) * q + y] = z;
                if (z == 0) {
                    field = false;
                    break;
                }
            }
        if (field)
            break;
    }
    square_.assign(q, false);
    for (int x = 1; x < q; ++x)
        square_[mul(x, x)] = true;
}

} // namespace deza
