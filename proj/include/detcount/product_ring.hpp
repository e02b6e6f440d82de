#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detcount/chain_ring.hpp"

namespace detcount {

// One part per component ring.
struct ProductElement {
    std::vector<Element> parts;
    bool operator==(const ProductElement&) const = default;
};

/// R_1 x ... x R_m with componentwise operations.
///
/// Elements are indexed in mixed radix with component 0 varying fastest.
class ProductRing {
public:
    using value_type = ProductElement;

    explicit ProductRing(std::vector<ChainRing> components);

    const std::vector<ChainRing>& components() const noexcept { return components_; }
    std::size_t arity() const noexcept { return components_.size(); }
    const ChainRing& component(std::size_t i) const { return components_.at(i); }
    std::uint64_t size() const noexcept { return size_; }

    ProductElement zero() const;
    ProductElement one() const;
    bool contains(const ProductElement& a) const noexcept;
    void require(const ProductElement& a) const;

    ProductElement add(const ProductElement& a, const ProductElement& b) const;
    ProductElement sub(const ProductElement& a, const ProductElement& b) const;
    ProductElement mul(const ProductElement& a, const ProductElement& b) const;
    bool is_unit(const ProductElement& a) const noexcept;
    ProductElement inverse(const ProductElement& a) const;

    // phi_i
    Element project(const ProductElement& a, std::size_t i) const { return a.parts.at(i); }

    ProductElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const ProductElement& a) const noexcept;

    std::string name() const;         // "Z_4 x Z_3"
    std::string spec_string() const;  // "prod:(zpe:2^2;zpe:3^1)"
    std::string format(const ProductElement& a) const;  // "(3|1)"

    bool operator==(const ProductRing& other) const noexcept { return components_ == other.components_; }

private:
    std::vector<ChainRing> components_;
    std::uint64_t size_;
};

ProductRing make_product_ring(std::vector<ChainRing> components);

// Z_m as the product of Z_{p^k} over the prime factorization, ascending primes.
// Throws InvalidParameter for m < 2.
ProductRing crt_factor_integer(std::uint64_t m);

// Residues of x modulo each prime-power factor of m.
ProductElement int_to_product(std::uint64_t m, std::uint64_t x);

// Inverse of int_to_product for a ring built by crt_factor_integer.
std::uint64_t product_to_int(const ProductRing& ring, const ProductElement& a);

/// Z_m with plain modular arithmetic, independent of any factorization.
class IntegersMod {
public:
    using value_type = std::uint64_t;

    explicit IntegersMod(std::uint64_t m);

    std::uint64_t modulus() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return m_; }
    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1 % m_; }
    value_type add(value_type a, value_type b) const noexcept { return (a + b) % m_; }
    value_type sub(value_type a, value_type b) const noexcept { return (a + m_ - b) % m_; }
    value_type mul(value_type a, value_type b) const noexcept { return a * b % m_; }
    bool is_unit(value_type a) const noexcept;
    value_type inverse(value_type a) const;
    value_type element_at(std::uint64_t index) const noexcept { return index; }
    std::uint64_t index_of(value_type a) const noexcept { return a; }
    std::string name() const { return "Z_" + std::to_string(m_); }
    std::string spec_string() const { return "z:" + std::to_string(m_); }
    std::string format(value_type a) const { return std::to_string(a); }

private:
    std::uint64_t m_;
};

}  // namespace detcount
