#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detcount/field.hpp"

namespace detcount {

enum class Family {
    ZPE,  // Z_{p^e}, uniformizer p
    FQU,  // F_q[u]/(u^e), uniformizer u
};

/// Canonical element of a chain ring.
///
/// `code` packs the gamma-adic digits a_0..a_{e-1} (each a residue-field
/// index in 0..q-1) as a_0 + a_1 q + ... + a_{e-1} q^{e-1}. For Z_{p^e} the
/// code is the integer residue itself. Two elements of the same ring are
/// equal iff their codes are equal; the code is also the element's position
/// in ChainRing::elements().
struct Element {
    std::uint64_t code = 0;
    auto operator<=>(const Element&) const = default;
};

/// A commutative finite chain ring of one of the two supported families.
///
/// Immutable; copies share their arithmetic tables and may be used from any
/// thread. Cardinality q^e is limited to 32 bits.
class ChainRing {
public:
    using value_type = Element;
    static constexpr std::uint64_t kMaxSize = 0xFFFFFFFFull;

    static ChainRing make(Family family, std::uint64_t p, unsigned r, unsigned e);
    static ChainRing zpe(std::uint64_t p, unsigned e) { return make(Family::ZPE, p, 1, e); }
    static ChainRing fqu(std::uint64_t p, unsigned r, unsigned e) { return make(Family::FQU, p, r, e); }

    Family family() const noexcept { return impl_->family; }
    std::uint64_t characteristic_prime() const noexcept { return impl_->field.characteristic(); }
    unsigned degree() const noexcept { return impl_->field.degree(); }
    unsigned nilpotency() const noexcept { return impl_->e; }
    // Residue field order.
    std::uint64_t q() const noexcept { return impl_->q; }
    std::uint64_t size() const noexcept { return impl_->size; }
    const FiniteField& residue_field() const noexcept { return impl_->field; }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {1}; }
    Element gamma() const noexcept { return gamma_power(1); }
    // gamma^s, zero once s >= e.
    Element gamma_power(unsigned s) const noexcept {
        return s >= impl_->e ? Element{0} : Element{impl_->pow_q[s]};
    }

    bool contains(Element a) const noexcept { return a.code < impl_->size; }
    void require(Element a) const;

    // Unchecked arithmetic: operands must satisfy contains().
    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;

    bool is_unit(Element a) const noexcept { return a.code % impl_->q != 0; }
    // Throws DomainMismatch for non-units.
    Element inverse(Element a) const;

    // Index of the first nonzero digit; e for zero.
    unsigned valuation(Element a) const noexcept;

    std::vector<std::uint32_t> digits(Element a) const;
    // Missing high digits are zero; throws DomainMismatch for bad digits.
    Element from_digits(std::span<const std::uint32_t> digits) const;

    Element element_at(std::uint64_t index) const noexcept { return {index}; }
    std::uint64_t index_of(Element a) const noexcept { return a.code; }
    // All q^e elements in odometer order over the digit vector: 0, 1, ...
    std::vector<Element> elements() const;

    // R / gamma^k R, same family and residue field, nilpotency k.
    ChainRing quotient(unsigned k) const;
    // Keeps the low k digits; precondition 1 <= k <= e.
    Element project(Element a, unsigned k) const noexcept { return {a.code % impl_->pow_q[k]}; }

    std::string name() const;         // "Z_8", "F_4[u]/(u^2)"
    std::string spec_string() const;  // "zpe:2^3", "fqu:4,2"
    std::string format(Element a) const;

    bool operator==(const ChainRing& other) const noexcept;

private:
    struct Impl {
        Family family;
        FiniteField field;
        unsigned e;
        std::uint64_t q;
        std::uint64_t size;
        std::vector<std::uint64_t> pow_q;  // q^0..q^e
        // Operation tables for small FQU rings, indexed a * size + b.
        std::vector<std::uint32_t> add, mul;
        std::vector<std::uint32_t> neg;
    };

    explicit ChainRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    Element add_direct(Element a, Element b) const noexcept;
    Element mul_direct(Element a, Element b) const noexcept;
    Element neg_direct(Element a) const noexcept;

    std::shared_ptr<const Impl> impl_;
};

ChainRing make_chain_ring(Family family, std::uint64_t p, unsigned r, unsigned e);

enum class ArithOp { Add, Sub, Mul };

// Validated arithmetic; throws DomainMismatch for elements outside the ring.
Element ring_arith(const ChainRing& ring, ArithOp op, Element a, Element b);

struct UnitDecomposition {
    unsigned valuation;
    // Canonical unit with gamma^valuation * unit == a; absent for a == 0.
    std::optional<Element> unit;
};

// a = gamma^s * b; b is a's digits shifted down by s with zero fill.
UnitDecomposition unit_decompose(const ChainRing& ring, Element a);

// (R / gamma^k R, image of a). Throws InvalidParameter unless 1 <= k <= e.
std::pair<ChainRing, Element> quotient_project(const ChainRing& ring, unsigned k, Element a);

}  // namespace detcount
