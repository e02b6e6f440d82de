#include "detcount/product_ring.hpp"

#include "detcount/error.hpp"
#include "detcount/number_theory.hpp"

namespace detcount {

ProductRing::ProductRing(std::vector<ChainRing> components) : components_(std::move(components)), size_(1) {
    if (components_.empty()) throw InvalidParameter("product ring needs at least one component");
    for (const auto& c : components_) {
        if (size_ > ChainRing::kMaxSize / c.size()) throw InvalidParameter("product ring cardinality exceeds 2^32 - 1");
        size_ *= c.size();
    }
}

ProductRing make_product_ring(std::vector<ChainRing> components) { return ProductRing(std::move(components)); }

ProductElement ProductRing::zero() const {
    return ProductElement{std::vector<Element>(components_.size(), Element{0})};
}

ProductElement ProductRing::one() const {
    return ProductElement{std::vector<Element>(components_.size(), Element{1})};
}

bool ProductRing::contains(const ProductElement& a) const noexcept {
    if (a.parts.size() != components_.size()) return false;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].contains(a.parts[i])) return false;
    }
    return true;
}

void ProductRing::require(const ProductElement& a) const {
    if (a.parts.size() != components_.size()) {
        throw DomainMismatch("element has " + std::to_string(a.parts.size()) + " parts, " + name() + " has " +
                             std::to_string(components_.size()) + " components");
    }
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i].require(a.parts[i]);
}

ProductElement ProductRing::add(const ProductElement& a, const ProductElement& b) const {
    ProductElement out{a.parts};
    for (std::size_t i = 0; i < components_.size(); ++i) out.parts[i] = components_[i].add(a.parts[i], b.parts[i]);
    return out;
}

ProductElement ProductRing::sub(const ProductElement& a, const ProductElement& b) const {
    ProductElement out{a.parts};
    for (std::size_t i = 0; i < components_.size(); ++i) out.parts[i] = components_[i].sub(a.parts[i], b.parts[i]);
    return out;
}

ProductElement ProductRing::mul(const ProductElement& a, const ProductElement& b) const {
    ProductElement out{a.parts};
    for (std::size_t i = 0; i < components_.size(); ++i) out.parts[i] = components_[i].mul(a.parts[i], b.parts[i]);
    return out;
}

bool ProductRing::is_unit(const ProductElement& a) const noexcept {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].is_unit(a.parts[i])) return false;
    }
    return true;
}

ProductElement ProductRing::inverse(const ProductElement& a) const {
    ProductElement out{a.parts};
    for (std::size_t i = 0; i < components_.size(); ++i) out.parts[i] = components_[i].inverse(a.parts[i]);
    return out;
}

ProductElement ProductRing::element_at(std::uint64_t index) const {
    ProductElement out;
    out.parts.reserve(components_.size());
    for (const auto& c : components_) {
        out.parts.push_back(c.element_at(index % c.size()));
        index /= c.size();
    }
    return out;
}

std::uint64_t ProductRing::index_of(const ProductElement& a) const noexcept {
    std::uint64_t idx = 0;
    for (std::size_t i = components_.size(); i-- > 0;) {
        idx = idx * components_[i].size() + components_[i].index_of(a.parts[i]);
    }
    return idx;
}

std::string ProductRing::name() const {
    std::string out;
    for (const auto& c : components_) {
        if (!out.empty()) out += " x ";
        out += c.name();
    }
    return out;
}

std::string ProductRing::spec_string() const {
    std::string out = "prod:(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ';';
        out += components_[i].spec_string();
    }
    return out + ")";
}

std::string ProductRing::format(const ProductElement& a) const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += '|';
        out += components_[i].format(a.parts.at(i));
    }
    return out + ")";
}

ProductRing crt_factor_integer(std::uint64_t m) {
    if (m < 2) throw InvalidParameter("z:m needs m >= 2");
    if (m > ChainRing::kMaxSize) throw InvalidParameter("m exceeds 2^32 - 1");
    std::vector<ChainRing> parts;
    for (const auto& pp : factorize(m)) parts.push_back(ChainRing::zpe(pp.p, pp.exponent));
    return ProductRing(std::move(parts));
}

ProductElement int_to_product(std::uint64_t m, std::uint64_t x) {
    if (m < 2) throw InvalidParameter("z:m needs m >= 2");
    if (x >= m) throw DomainMismatch(std::to_string(x) + " is not a residue modulo " + std::to_string(m));
    ProductElement out;
    for (const auto& pp : factorize(m)) out.parts.push_back(Element{x % checked_pow(pp.p, pp.exponent)});
    return out;
}

std::uint64_t product_to_int(const ProductRing& ring, const ProductElement& a) {
    ring.require(a);
    // Garner-style accumulation: x == a_i mod n_i for each processed i.
    std::uint64_t x = 0;
    std::uint64_t modulus = 1;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        const auto& c = ring.component(i);
        if (c.family() != Family::ZPE) throw DomainMismatch("integer form exists only for Z_m factorizations");
        const std::uint64_t ni = c.size();
        if (gcd(modulus, ni) != 1) throw DomainMismatch("components are not pairwise coprime");
        const std::uint64_t target = a.parts[i].code;
        const std::uint64_t diff = (target + ni - x % ni) % ni;
        const std::uint64_t k = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(diff) * mod_inverse(modulus % ni, ni) % ni);
        x += k * modulus;
        modulus *= ni;
    }
    return x;
}

IntegersMod::IntegersMod(std::uint64_t m) : m_(m) {
    if (m < 2) throw InvalidParameter("Z_m needs m >= 2");
    if (m > ChainRing::kMaxSize) throw InvalidParameter("m exceeds 2^32 - 1");
}

bool IntegersMod::is_unit(value_type a) const noexcept { return gcd(a, m_) == 1; }

IntegersMod::value_type IntegersMod::inverse(value_type a) const { return mod_inverse(a, m_); }

}  // namespace detcount
