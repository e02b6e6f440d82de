#include "detcount/number_theory.hpp"

#include <limits>

#include "detcount/error.hpp"

namespace detcount {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (p != 0 && result > std::numeric_limits<std::uint64_t>::max() / p) {
            throw InvalidParameter("integer power overflows 64 bits");
        }
        result *= p;
    }
    return result;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q / d; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    unsigned r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, r};
}

std::vector<PrimePower> factorize(std::uint64_t m) {
    if (m < 2) throw InvalidParameter("factorization needs m >= 2");
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d != 0) continue;
        PrimePower pp{d, 0};
        while (m % d == 0) {
            m /= d;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw DomainMismatch("element is not invertible");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return static_cast<std::uint64_t>(old_s);
}

}  // namespace detcount
