#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace detcount {

// Polynomials over F_p are coefficient vectors, lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

// True iff `poly` is monic of degree >= 1 and has no monic factor of degree
// 1..deg/2 over F_p (exhaustive trial division).
bool is_irreducible(std::uint64_t p, const PrimePoly& poly);

// Least monic irreducible polynomial of degree r over F_p, ordering
// candidates by their non-leading coefficients read from x^(r-1) down to x^0.
PrimePoly least_irreducible(std::uint64_t p, unsigned r);

/// The finite field F_q = F_p[x]/(modulus), q = p^r.
///
/// Elements are indices 0..q-1: the index of c_0 + c_1 x + ... + c_{r-1} x^{r-1}
/// is c_0 + c_1 p + ... + c_{r-1} p^{r-1}. Index 0 is zero, index 1 is one,
/// and for r = 1 the index is the residue itself.
///
/// Fields of order up to kMaxTableOrder use precomputed tables shared between
/// copies. Larger orders are supported only for prime fields, which use
/// direct modular arithmetic.
class FiniteField {
public:
    using value_type = std::uint32_t;
    static constexpr std::uint64_t kMaxTableOrder = 1024;
    static constexpr std::uint64_t kMaxPrime = 0xFFFFFFFFull;

    // Field with the least irreducible modulus of degree r.
    static FiniteField make(std::uint64_t p, unsigned r);

    // Field with an explicit modulus; validated for primality of p and
    // irreducibility of the modulus.
    FiniteField(std::uint64_t p, PrimePoly modulus);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
    std::uint64_t order() const noexcept { return q_; }
    const PrimePoly& modulus() const noexcept { return modulus_; }

    value_type add(value_type a, value_type b) const noexcept {
        if (tables_) return tables_->add[a * q_ + b];
        return static_cast<value_type>((std::uint64_t{a} + b) % p_);
    }
    value_type mul(value_type a, value_type b) const noexcept {
        if (tables_) return tables_->mul[a * q_ + b];
        return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type neg(value_type a) const noexcept {
        if (tables_) return tables_->neg[a];
        return a == 0 ? 0 : static_cast<value_type>(p_ - a);
    }
    value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
    // Precondition: a != 0.
    value_type inv(value_type a) const noexcept;

    PrimePoly coefficients(value_type a) const;

    bool operator==(const FiniteField& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    struct Tables {
        std::vector<std::uint16_t> add, mul, neg, inv;
    };

    std::uint64_t p_;
    std::uint64_t q_;
    PrimePoly modulus_;
    std::shared_ptr<const Tables> tables_;
};

}  // namespace detcount
