#include "detcount/literals.hpp"

#include <cmath>

#include "detcount/error.hpp"
#include "detcount/number_theory.hpp"

namespace detcount {
namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string_view strip_parens(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
}

unsigned parse_small(std::string_view text, std::string_view what) {
    const auto v = parse_unsigned(text, what);
    if (v > 64) throw ParseError(std::string(what) + " is out of range");
    return static_cast<unsigned>(v);
}

void append_components(std::string_view spec, std::vector<ChainRing>& out);

std::vector<ChainRing> components_of(std::string_view spec) {
    std::vector<ChainRing> out;
    append_components(spec, out);
    return out;
}

ChainRing parse_zpe(std::string_view body) {
    const auto caret = body.find('^');
    if (caret == std::string_view::npos) throw ParseError("expected zpe:P^E");
    return ChainRing::zpe(parse_unsigned(body.substr(0, caret), "prime P"),
                          parse_small(body.substr(caret + 1), "nilpotency E"));
}

ChainRing parse_fqu(std::string_view body) {
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected fqu:Q,E");
    const auto q = parse_unsigned(body.substr(0, comma), "field order Q");
    const auto e = parse_small(body.substr(comma + 1), "nilpotency E");
    const auto pp = as_prime_power(q);
    if (!pp) throw InvalidParameter("field order " + std::to_string(q) + " is not a prime power");
    return ChainRing::fqu(pp->p, pp->exponent, e);
}

void append_components(std::string_view spec, std::vector<ChainRing>& out) {
    if (starts_with(spec, "zpe:")) {
        out.push_back(parse_zpe(spec.substr(4)));
    } else if (starts_with(spec, "fqu:")) {
        out.push_back(parse_fqu(spec.substr(4)));
    } else if (starts_with(spec, "z:")) {
        const auto factored = crt_factor_integer(parse_unsigned(spec.substr(2), "modulus M"));
        out.insert(out.end(), factored.components().begin(), factored.components().end());
    } else if (starts_with(spec, "prod:")) {
        const auto body = spec.substr(5);
        if (body.size() < 3 || body.front() != '(' || body.back() != ')') throw ParseError("expected prod:(S;S;...)");
        for (auto part : split_top_level(strip_parens(body), ';')) {
            if (part.empty()) throw ParseError("empty component in prod:(...)");
            append_components(part, out);
        }
    } else {
        throw ParseError("unknown ring spec '" + std::string(spec) + "'");
    }
}

}  // namespace

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError("missing " + std::string(what));
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
        const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - digit) / 10) throw ParseError(std::string(what) + " overflows 64 bits");
        v = v * 10 + digit;
    }
    return v;
}

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            if (--depth < 0) throw ParseError("unbalanced ')'");
        } else if (text[i] == sep && depth == 0) {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '('");
    out.push_back(text.substr(start));
    return out;
}

RingDescriptor parse_ring_spec(std::string_view text) {
    if (starts_with(text, "z:")) {
        const auto m = parse_unsigned(text.substr(2), "modulus M");
        return {crt_factor_integer(m), m};
    }
    if (starts_with(text, "prod:")) return {ProductRing(components_of(text)), std::nullopt};
    auto parts = components_of(text);
    return {std::move(parts.front()), std::nullopt};
}

std::string RingDescriptor::spec_string() const {
    if (integer_modulus) return "z:" + std::to_string(*integer_modulus);
    return std::visit([](const auto& r) { return r.spec_string(); }, ring);
}

std::string RingDescriptor::name() const {
    if (integer_modulus) return "Z_" + std::to_string(*integer_modulus);
    return std::visit([](const auto& r) { return r.name(); }, ring);
}

Element parse_chain_element(const ChainRing& ring, std::string_view text) {
    if (ring.family() == Family::ZPE) {
        const Element a{parse_unsigned(text, "element")};
        ring.require(a);
        return a;
    }
    std::vector<std::uint32_t> digits;
    for (auto d : split_top_level(text, ',')) {
        const auto v = parse_unsigned(d, "digit");
        if (v >= ring.q()) throw DomainMismatch("digit " + std::to_string(v) + " is outside F_" + std::to_string(ring.q()));
        digits.push_back(static_cast<std::uint32_t>(v));
    }
    return ring.from_digits(digits);
}

ProductElement parse_product_element(const ProductRing& ring, std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw ParseError("expected product literal (l1|l2|...)");
    }
    const auto parts = split_top_level(strip_parens(text), '|');
    if (parts.size() != ring.arity()) {
        throw DomainMismatch("product literal has " + std::to_string(parts.size()) + " parts, ring has " +
                             std::to_string(ring.arity()) + " components");
    }
    ProductElement out;
    for (std::size_t i = 0; i < parts.size(); ++i) out.parts.push_back(parse_chain_element(ring.component(i), parts[i]));
    return out;
}

AnyElement parse_element(const RingDescriptor& ring, std::string_view text) {
    if (ring.is_chain()) return parse_chain_element(ring.chain(), strip_parens(text));
    if (ring.integer_modulus && !text.empty() && text.front() != '(') {
        return int_to_product(*ring.integer_modulus, parse_unsigned(text, "element"));
    }
    return parse_product_element(ring.product(), text);
}

std::string format_element(const RingDescriptor& ring, const AnyElement& a) {
    if (ring.is_chain()) return ring.chain().format(std::get<Element>(a));
    const auto& p = std::get<ProductElement>(a);
    if (ring.integer_modulus) return std::to_string(product_to_int(ring.product(), p));
    return ring.product().format(p);
}

AnyMatrix parse_matrix(const RingDescriptor& ring, std::string_view text) {
    std::vector<std::vector<std::string_view>> rows;
    for (auto row : split_top_level(text, ';')) rows.push_back(split_top_level(row, ','));
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) throw ParseError("matrix literal is not square");
    }
    if (ring.is_chain()) {
        std::vector<Element> entries;
        for (const auto& row : rows) {
            for (auto cell : row) entries.push_back(std::get<Element>(parse_element(ring, cell)));
        }
        return Matrix<ChainRing>(ring.chain(), n, std::move(entries));
    }
    std::vector<ProductElement> entries;
    for (const auto& row : rows) {
        for (auto cell : row) entries.push_back(std::get<ProductElement>(parse_element(ring, cell)));
    }
    return Matrix<ProductRing>(ring.product(), n, std::move(entries));
}

}  // namespace detcount
