#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "detcount/chain_ring.hpp"
#include "detcount/matrix.hpp"
#include "detcount/product_ring.hpp"

namespace detcount {

/// A parsed ring spec.
///
/// Grammar (no whitespace):
///   zpe:P^E            Z_{P^E}
///   fqu:Q,E            F_Q[u]/(u^E), Q a prime power
///   z:M                Z_M, factored into its chain-ring components
///   prod:(S;S;...)     product of the listed specs, flattened
struct RingDescriptor {
    std::variant<ChainRing, ProductRing> ring;
    // Set for z:M, whose elements are written as integers mod M.
    std::optional<std::uint64_t> integer_modulus;

    bool is_chain() const noexcept { return std::holds_alternative<ChainRing>(ring); }
    const ChainRing& chain() const { return std::get<ChainRing>(ring); }
    const ProductRing& product() const { return std::get<ProductRing>(ring); }
    std::string spec_string() const;
    std::string name() const;
};

RingDescriptor parse_ring_spec(std::string_view text);

// Strict unsigned decimal; throws ParseError.
std::uint64_t parse_unsigned(std::string_view text, std::string_view what);

// Z_{p^e}: the integer residue. F_q[u]/(u^e): comma-separated digits
// a_0,a_1,... (at most e; missing high digits are zero), each a residue-field
// index 0..q-1.
Element parse_chain_element(const ChainRing& ring, std::string_view text);

// "(l_1|l_2|...)" with one chain-ring literal per component.
ProductElement parse_product_element(const ProductRing& ring, std::string_view text);

using AnyElement = std::variant<Element, ProductElement>;

// Chain literal for chain rings; for z:M an integer residue or a product
// literal; for prod: a product literal.
AnyElement parse_element(const RingDescriptor& ring, std::string_view text);
std::string format_element(const RingDescriptor& ring, const AnyElement& a);

using AnyMatrix = std::variant<Matrix<ChainRing>, Matrix<ProductRing>>;

// Row-major, rows separated by ';', entries by ','. Entries are element
// literals; digit lists and product literals are parenthesized, e.g.
// "(1,1),0;0,1" over F_2[u]/(u^2).
AnyMatrix parse_matrix(const RingDescriptor& ring, std::string_view text);

// Splits on `sep` outside parentheses; throws ParseError on unbalanced input.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

}  // namespace detcount
