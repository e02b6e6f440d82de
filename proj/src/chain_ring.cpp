#include "detcount/chain_ring.hpp"

#include <array>

#include "detcount/error.hpp"
#include "detcount/number_theory.hpp"

namespace detcount {
namespace {

constexpr std::uint64_t kTableSize = 256;
constexpr unsigned kMaxDigits = 32;  // q >= 2 and q^e < 2^32

}  // namespace

ChainRing ChainRing::make(Family family, std::uint64_t p, unsigned r, unsigned e) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r < 1) throw InvalidParameter("extension degree r must be >= 1");
    if (e < 1) throw InvalidParameter("nilpotency index e must be >= 1");
    if (family == Family::ZPE && r != 1) throw InvalidParameter("Z_{p^e} has residue field F_p, r must be 1");

    auto field = FiniteField::make(p, r);
    const std::uint64_t q = field.order();
    std::vector<std::uint64_t> pow_q{1};
    for (unsigned i = 0; i < e; ++i) {
        if (pow_q.back() > kMaxSize / q) {
            throw InvalidParameter("ring cardinality q^e exceeds 2^32 - 1");
        }
        pow_q.push_back(pow_q.back() * q);
    }
    auto impl = std::make_shared<Impl>(Impl{family, std::move(field), e, q, pow_q.back(), std::move(pow_q), {}, {}, {}});

    if (impl->size <= kTableSize) {
        // Fill tables through the direct routes of a table-less instance.
        const ChainRing direct(impl);
        const auto n = impl->size;
        std::vector<std::uint32_t> add(n * n), mul(n * n), neg(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            neg[a] = static_cast<std::uint32_t>(direct.neg_direct({a}).code);
            for (std::uint64_t b = 0; b < n; ++b) {
                add[a * n + b] = static_cast<std::uint32_t>(direct.add_direct({a}, {b}).code);
                mul[a * n + b] = static_cast<std::uint32_t>(direct.mul_direct({a}, {b}).code);
            }
        }
        auto filled = std::make_shared<Impl>(*impl);
        filled->add = std::move(add);
        filled->mul = std::move(mul);
        filled->neg = std::move(neg);
        impl = std::move(filled);
    }
    return ChainRing(std::move(impl));
}

ChainRing make_chain_ring(Family family, std::uint64_t p, unsigned r, unsigned e) {
    return ChainRing::make(family, p, r, e);
}

void ChainRing::require(Element a) const {
    if (!contains(a)) {
        throw DomainMismatch("element code " + std::to_string(a.code) + " is not in " + name());
    }
}

Element ChainRing::add(Element a, Element b) const noexcept {
    if (!impl_->add.empty()) return {impl_->add[a.code * impl_->size + b.code]};
    return add_direct(a, b);
}

Element ChainRing::mul(Element a, Element b) const noexcept {
    if (!impl_->mul.empty()) return {impl_->mul[a.code * impl_->size + b.code]};
    return mul_direct(a, b);
}

Element ChainRing::neg(Element a) const noexcept {
    if (!impl_->neg.empty()) return {impl_->neg[a.code]};
    return neg_direct(a);
}

Element ChainRing::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element ChainRing::add_direct(Element a, Element b) const noexcept {
    const auto& im = *impl_;
    if (im.family == Family::ZPE) return {(a.code + b.code) % im.size};
    std::uint64_t out = 0;
    for (unsigned i = 0; i < im.e; ++i) {
        const auto da = static_cast<std::uint32_t>(a.code / im.pow_q[i] % im.q);
        const auto db = static_cast<std::uint32_t>(b.code / im.pow_q[i] % im.q);
        out += std::uint64_t{im.field.add(da, db)} * im.pow_q[i];
    }
    return {out};
}

Element ChainRing::neg_direct(Element a) const noexcept {
    const auto& im = *impl_;
    if (im.family == Family::ZPE) return {a.code == 0 ? 0 : im.size - a.code};
    std::uint64_t out = 0;
    for (unsigned i = 0; i < im.e; ++i) {
        const auto da = static_cast<std::uint32_t>(a.code / im.pow_q[i] % im.q);
        out += std::uint64_t{im.field.neg(da)} * im.pow_q[i];
    }
    return {out};
}

Element ChainRing::mul_direct(Element a, Element b) const noexcept {
    const auto& im = *impl_;
    if (im.family == Family::ZPE) return {a.code * b.code % im.size};
    std::array<std::uint32_t, kMaxDigits> da{}, db{}, dc{};
    for (unsigned i = 0; i < im.e; ++i) {
        da[i] = static_cast<std::uint32_t>(a.code / im.pow_q[i] % im.q);
        db[i] = static_cast<std::uint32_t>(b.code / im.pow_q[i] % im.q);
    }
    // Truncated polynomial product in u: terms of degree >= e vanish.
    for (unsigned i = 0; i < im.e; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; i + j < im.e; ++j) {
            if (db[j] == 0) continue;
            dc[i + j] = im.field.add(dc[i + j], im.field.mul(da[i], db[j]));
        }
    }
    std::uint64_t out = 0;
    for (unsigned i = 0; i < im.e; ++i) out += std::uint64_t{dc[i]} * im.pow_q[i];
    return {out};
}

Element ChainRing::inverse(Element a) const {
    require(a);
    if (!is_unit(a)) throw DomainMismatch(format(a) + " is not a unit of " + name());
    if (impl_->family == Family::ZPE) return {mod_inverse(a.code, impl_->size)};
    // a = a0 (1 - t) with t nilpotent, so a^-1 = a0^-1 (1 + t + ... + t^(e-1)).
    const auto a0 = static_cast<FiniteField::value_type>(a.code % impl_->q);
    const Element inv0{impl_->field.inv(a0)};
    const Element t = sub(one(), mul(inv0, a));
    Element series = one();
    Element power = one();
    for (unsigned i = 1; i < impl_->e; ++i) {
        power = mul(power, t);
        series = add(series, power);
    }
    return mul(inv0, series);
}

unsigned ChainRing::valuation(Element a) const noexcept {
    if (a.code == 0) return impl_->e;
    unsigned s = 0;
    std::uint64_t rest = a.code;
    while (rest % impl_->q == 0) {
        rest /= impl_->q;
        ++s;
    }
    return s;
}

std::vector<std::uint32_t> ChainRing::digits(Element a) const {
    std::vector<std::uint32_t> out(impl_->e);
    for (unsigned i = 0; i < impl_->e; ++i) {
        out[i] = static_cast<std::uint32_t>(a.code / impl_->pow_q[i] % impl_->q);
    }
    return out;
}

Element ChainRing::from_digits(std::span<const std::uint32_t> ds) const {
    if (ds.size() > impl_->e) {
        throw DomainMismatch("digit list longer than nilpotency index of " + name());
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] >= impl_->q) throw DomainMismatch("digit " + std::to_string(ds[i]) + " outside residue field");
        code += ds[i] * impl_->pow_q[i];
    }
    return {code};
}

std::vector<Element> ChainRing::elements() const {
    std::vector<Element> out;
    out.reserve(impl_->size);
    for (std::uint64_t i = 0; i < impl_->size; ++i) out.push_back({i});
    return out;
}

ChainRing ChainRing::quotient(unsigned k) const {
    if (k < 1 || k > impl_->e) {
        throw InvalidParameter("quotient index k must satisfy 1 <= k <= " + std::to_string(impl_->e));
    }
    if (k == impl_->e) return *this;
    return make(impl_->family, characteristic_prime(), degree(), k);
}

std::string ChainRing::name() const {
    if (impl_->family == Family::ZPE) return "Z_" + std::to_string(impl_->size);
    const auto fq = "F_" + std::to_string(impl_->q);
    if (impl_->e == 1) return fq;
    return fq + "[u]/(u^" + std::to_string(impl_->e) + ")";
}

std::string ChainRing::spec_string() const {
    if (impl_->family == Family::ZPE) {
        return "zpe:" + std::to_string(characteristic_prime()) + "^" + std::to_string(impl_->e);
    }
    return "fqu:" + std::to_string(impl_->q) + "," + std::to_string(impl_->e);
}

std::string ChainRing::format(Element a) const {
    if (impl_->family == Family::ZPE) return std::to_string(a.code);
    std::string out;
    for (auto d : digits(a)) {
        if (!out.empty()) out += ',';
        out += std::to_string(d);
    }
    return out;
}

bool ChainRing::operator==(const ChainRing& other) const noexcept {
    if (impl_ == other.impl_) return true;
    return impl_->family == other.impl_->family && impl_->e == other.impl_->e &&
           impl_->field == other.impl_->field;
}

Element ring_arith(const ChainRing& ring, ArithOp op, Element a, Element b) {
    ring.require(a);
    ring.require(b);
    switch (op) {
        case ArithOp::Add: return ring.add(a, b);
        case ArithOp::Sub: return ring.sub(a, b);
        case ArithOp::Mul: return ring.mul(a, b);
    }
    throw InvalidParameter("unknown arithmetic operation");
}

UnitDecomposition unit_decompose(const ChainRing& ring, Element a) {
    ring.require(a);
    const unsigned s = ring.valuation(a);
    if (s == ring.nilpotency()) return {s, std::nullopt};
    std::uint64_t shift = 1;
    for (unsigned i = 0; i < s; ++i) shift *= ring.q();
    return {s, Element{a.code / shift}};
}

std::pair<ChainRing, Element> quotient_project(const ChainRing& ring, unsigned k, Element a) {
    ring.require(a);
    auto quotient = ring.quotient(k);
    return {std::move(quotient), ring.project(a, k)};
}

}  // namespace detcount
