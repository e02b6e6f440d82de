#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace detcount {

struct PrimePower {
    std::uint64_t p = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n) noexcept;

// p^k, throwing InvalidParameter when the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned k);

// Returns (p, r) with q = p^r, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

// Trial-division factorization, ascending primes. Inputs up to 10^12 are
// the documented desk-scale range; larger inputs work but may be slow.
std::vector<PrimePower> factorize(std::uint64_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

// Inverse of a modulo m; requires gcd(a, m) == 1 and m >= 2.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace detcount
