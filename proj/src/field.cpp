#include "detcount/field.hpp"

#include <string>

#include "detcount/error.hpp"
#include "detcount/number_theory.hpp"

namespace detcount {
namespace {

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients in F_p.
PrimePoly poly_rem(PrimePoly a, const PrimePoly& monic, std::uint64_t p) {
    const std::size_t dn = monic.size() - 1;
    trim(a);
    while (a.size() > dn) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dn;
        for (std::size_t i = 0; i <= dn; ++i) {
            const std::uint64_t sub = lead * monic[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Fills the non-leading coefficients of a degree-d monic polynomial from k.
PrimePoly monic_from_index(std::uint64_t k, unsigned d, std::uint64_t p) {
    PrimePoly poly(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        poly[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
    }
    poly[d] = 1;
    return poly;
}

std::uint64_t index_of(const PrimePoly& coeffs, std::uint64_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * p + coeffs[i];
    return idx;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const PrimePoly& poly) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    for (auto c : poly) {
        if (c >= p) return false;
    }
    const auto deg = static_cast<unsigned>(poly.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t candidates = checked_pow(p, d);
        for (std::uint64_t k = 0; k < candidates; ++k) {
            if (poly_rem(poly, monic_from_index(k, d, p), p).empty()) return false;
        }
    }
    return true;
}

PrimePoly least_irreducible(std::uint64_t p, unsigned r) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r < 1) throw InvalidParameter("extension degree must be >= 1");
    const std::uint64_t candidates = checked_pow(p, r);
    for (std::uint64_t k = 0; k < candidates; ++k) {
        auto poly = monic_from_index(k, r, p);
        if (is_irreducible(p, poly)) return poly;
    }
    // Irreducible polynomials exist in every degree.
    throw InvalidParameter("no irreducible polynomial found");
}

FiniteField FiniteField::make(std::uint64_t p, unsigned r) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r < 1) throw InvalidParameter("extension degree must be >= 1");
    if (r == 1) {
        if (p > kMaxPrime) throw InvalidParameter("prime exceeds 32 bits");
        return FiniteField(p, PrimePoly{0, 1});
    }
    if (checked_pow(p, r) > kMaxTableOrder) {
        throw InvalidParameter("field order " + std::to_string(p) + "^" + std::to_string(r) +
                               " exceeds the supported maximum " + std::to_string(kMaxTableOrder));
    }
    return FiniteField(p, least_irreducible(p, r));
}

FiniteField::FiniteField(std::uint64_t p, PrimePoly modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw NotPrime(p_);
    if (modulus_.size() < 2) throw InvalidParameter("modulus must have degree >= 1");
    q_ = checked_pow(p_, degree());
    if (degree() == 1) {
        if (p_ > kMaxPrime) throw InvalidParameter("prime exceeds 32 bits");
        if (modulus_[1] != 1 || modulus_[0] >= p_) throw InvalidParameter("modulus is not monic irreducible");
        if (q_ > kMaxTableOrder) return;
    } else {
        if (q_ > kMaxTableOrder) {
            throw InvalidParameter("field order " + std::to_string(q_) + " exceeds the supported maximum " +
                                   std::to_string(kMaxTableOrder));
        }
        if (!is_irreducible(p_, modulus_)) throw InvalidParameter("modulus is not monic irreducible");
    }

    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    t->neg.resize(q_);
    t->inv.assign(q_, 0);
    const unsigned r = degree();
    std::vector<PrimePoly> polys(q_);
    for (std::uint64_t a = 0; a < q_; ++a) polys[a] = coefficients(static_cast<value_type>(a));

    for (std::uint64_t a = 0; a < q_; ++a) {
        PrimePoly negated(r);
        for (unsigned i = 0; i < r; ++i) negated[i] = static_cast<std::uint32_t>((p_ - polys[a][i]) % p_);
        t->neg[a] = static_cast<std::uint16_t>(index_of(negated, p_));
        for (std::uint64_t b = 0; b < q_; ++b) {
            PrimePoly sum(r);
            for (unsigned i = 0; i < r; ++i) sum[i] = static_cast<std::uint32_t>((polys[a][i] + polys[b][i]) % p_);
            t->add[a * q_ + b] = static_cast<std::uint16_t>(index_of(sum, p_));

            PrimePoly prod(2 * r - 1, 0);
            for (unsigned i = 0; i < r; ++i) {
                for (unsigned j = 0; j < r; ++j) {
                    prod[i + j] = static_cast<std::uint32_t>(
                        (prod[i + j] + static_cast<std::uint64_t>(polys[a][i]) * polys[b][j]) % p_);
                }
            }
            auto rem = poly_rem(std::move(prod), modulus_, p_);
            t->mul[a * q_ + b] = static_cast<std::uint16_t>(index_of(rem, p_));
        }
    }
    for (std::uint64_t a = 1; a < q_; ++a) {
        for (std::uint64_t b = 1; b < q_; ++b) {
            if (t->mul[a * q_ + b] == 1) {
                t->inv[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    tables_ = std::move(t);
}

FiniteField::value_type FiniteField::inv(value_type a) const noexcept {
    if (tables_) return tables_->inv[a];
    return static_cast<value_type>(mod_inverse(a, p_));
}

PrimePoly FiniteField::coefficients(value_type a) const {
    PrimePoly coeffs(degree());
    std::uint64_t rest = a;
    for (auto& c : coeffs) {
        c = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
    }
    return coeffs;
}

}  // namespace detcount
