#pragma once

#include <vector>

namespace deza {

/// GF(q) for a prime power q, with elements encoded as 0..q-1 (base-p
/// digits of the polynomial representative). Addition and multiplication
/// are precomputed tables, so q is capped at kMaxFieldOrder.
class FiniteField {
public:
    static constexpr int kMaxFieldOrder = 256;

    /// Throws PreconditionError unless q is a prime power <= kMaxFieldOrder.
    explicit FiniteField(int q);

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }

    int add(int x, int y) const { return add_[static_cast<std::size_t>(x) * q_ + y]; }
    int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x) * q_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int sub(int x, int y) const { return add(x, neg(y)); }

    bool is_nonzero_square(int x) const { return square_[x]; }

private:
    int q_, p_, e_;
    std::vector<int> add_, mul_, neg_;
    std::vector<bool> square_;
};

} // namespace deza
