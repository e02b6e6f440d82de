#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detcount/chain_ring.hpp"
#include "detcount/error.hpp"
#include "detcount/product_ring.hpp"
#include "detcount/random.hpp"

namespace detcount {

// Everything the matrix and enumeration code needs from a finite commutative ring.
template <class R>
concept FiniteRing = requires(const R& ring, const typename R::value_type& a, std::uint64_t i) {
    { ring.zero() } -> std::convertible_to<typename R::value_type>;
    { ring.one() } -> std::convertible_to<typename R::value_type>;
    { ring.add(a, a) } -> std::convertible_to<typename R::value_type>;
    { ring.sub(a, a) } -> std::convertible_to<typename R::value_type>;
    { ring.mul(a, a) } -> std::convertible_to<typename R::value_type>;
    { ring.is_unit(a) } -> std::convertible_to<bool>;
    { ring.inverse(a) } -> std::convertible_to<typename R::value_type>;
    { ring.size() } -> std::convertible_to<std::uint64_t>;
    { ring.element_at(i) } -> std::convertible_to<typename R::value_type>;
    { ring.index_of(a) } -> std::convertible_to<std::uint64_t>;
    { a == a } -> std::convertible_to<bool>;
};

template <FiniteRing Ring>
bool ring_contains(const Ring& ring, const typename Ring::value_type& a) {
    if constexpr (requires { ring.contains(a); }) {
        return ring.contains(a);
    } else {
        return ring.index_of(a) < ring.size();
    }
}

/// Square n x n matrix over a finite ring, row-major.
template <FiniteRing Ring>
class Matrix {
public:
    using value_type = typename Ring::value_type;

    Matrix(Ring ring, std::size_t n, std::vector<value_type> entries)
        : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
        if (n_ == 0) throw InvalidParameter("matrix size n must be >= 1");
        if (entries_.size() != n_ * n_) {
            throw InvalidParameter("expected " + std::to_string(n_ * n_) + " entries, got " +
                                   std::to_string(entries_.size()));
        }
        for (const auto& a : entries_) {
            if (!ring_contains(ring_, a)) throw DomainMismatch("matrix entry is not in the ring");
        }
    }

    static Matrix identity(const Ring& ring, std::size_t n) {
        if (n == 0) throw InvalidParameter("matrix size n must be >= 1");
        std::vector<value_type> e(n * n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = ring.one();
        return Matrix(ring, n, std::move(e));
    }

    // diag(d_0, ..., d_{n-1})
    static Matrix diagonal(const Ring& ring, std::vector<value_type> diag) {
        const std::size_t n = diag.size();
        if (n == 0) throw InvalidParameter("matrix size n must be >= 1");
        std::vector<value_type> e(n * n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = std::move(diag[i]);
        return Matrix(ring, n, std::move(e));
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t n() const noexcept { return n_; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const value_type> entries() const noexcept { return entries_; }

    Matrix operator*(const Matrix& rhs) const {
        if (rhs.n_ != n_) throw InvalidParameter("matrix sizes differ");
        std::vector<value_type> out(n_ * n_, ring_.zero());
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                auto acc = ring_.zero();
                for (std::size_t k = 0; k < n_; ++k) acc = ring_.add(acc, ring_.mul((*this)(i, k), rhs(k, j)));
                out[i * n_ + j] = std::move(acc);
            }
        }
        return Matrix(ring_, n_, std::move(out));
    }

    bool operator==(const Matrix& other) const { return n_ == other.n_ && entries_ == other.entries_; }

private:
    Ring ring_;
    std::size_t n_;
    std::vector<value_type> entries_;
};

namespace detail {

template <FiniteRing Ring>
std::vector<typename Ring::value_type> minor_of(std::span<const typename Ring::value_type> a, std::size_t m,
                                                std::size_t row, std::size_t col) {
    std::vector<typename Ring::value_type> out;
    out.reserve((m - 1) * (m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != col) out.push_back(a[i * m + j]);
        }
    }
    return out;
}

}  // namespace detail

// Laplace expansion along the first row. O(n!) ring operations.
template <FiniteRing Ring>
typename Ring::value_type determinant_cofactor(const Ring& ring, std::span<const typename Ring::value_type> a,
                                               std::size_t m) {
    if (m == 1) return a[0];
    if (m == 2) return ring.sub(ring.mul(a[0], a[3]), ring.mul(a[1], a[2]));
    auto acc = ring.zero();
    for (std::size_t j = 0; j < m; ++j) {
        const auto minor = detail::minor_of<Ring>(a, m, 0, j);
        const auto term = ring.mul(a[j], determinant_cofactor(ring, std::span<const typename Ring::value_type>(minor), m - 1));
        acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

/// Gaussian elimination with unit pivots, destroying `a`.
///
/// The pivot of each column is the first unit at or below the diagonal. When
/// a column has no unit there, the remaining block is expanded along that
/// column and each minor is reduced the same way. Valid over any commutative
/// ring since only units are ever inverted.
template <FiniteRing Ring>
typename Ring::value_type determinant_elimination_inplace(const Ring& ring, std::span<typename Ring::value_type> a,
                                                          std::size_t m) {
    using T = typename Ring::value_type;
    T factor = ring.one();
    bool negate = false;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = m;
        for (std::size_t i = k; i < m; ++i) {
            if (ring.is_unit(a[i * m + k])) {
                pivot = i;
                break;
            }
        }
        if (pivot == m) {
            const std::size_t b = m - k;
            std::vector<T> block;
            block.reserve(b * b);
            for (std::size_t i = k; i < m; ++i) {
                for (std::size_t j = k; j < m; ++j) block.push_back(a[i * m + j]);
            }
            T acc = ring.zero();
            for (std::size_t i = 0; i < b; ++i) {
                const T& entry = block[i * b];
                if (entry == ring.zero()) continue;
                if (b == 1) {
                    acc = entry;
                    break;
                }
                auto minor = detail::minor_of<Ring>(std::span<const T>(block), b, i, 0);
                const T term = ring.mul(entry, determinant_elimination_inplace(ring, std::span<T>(minor), b - 1));
                acc = (i % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
            }
            factor = ring.mul(factor, acc);
            break;
        }
        if (pivot != k) {
            for (std::size_t j = k; j < m; ++j) std::swap(a[pivot * m + j], a[k * m + j]);
            negate = !negate;
        }
        const T pivot_value = a[k * m + k];
        const T inv = ring.inverse(pivot_value);
        factor = ring.mul(factor, pivot_value);
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i * m + k] == ring.zero()) continue;
            const T f = ring.mul(a[i * m + k], inv);
            for (std::size_t j = k + 1; j < m; ++j) a[i * m + j] = ring.sub(a[i * m + j], ring.mul(f, a[k * m + j]));
            a[i * m + k] = ring.zero();
        }
    }
    return negate ? ring.sub(ring.zero(), factor) : factor;
}

template <FiniteRing Ring>
typename Ring::value_type determinant_cofactor(const Matrix<Ring>& m) {
    return determinant_cofactor(m.ring(), m.entries(), m.n());
}

template <FiniteRing Ring>
typename Ring::value_type determinant_elimination(const Matrix<Ring>& m) {
    std::vector<typename Ring::value_type> scratch(m.entries().begin(), m.entries().end());
    return determinant_elimination_inplace(m.ring(), std::span<typename Ring::value_type>(scratch), m.n());
}

template <FiniteRing Ring>
typename Ring::value_type determinant(const Matrix<Ring>& m) {
    return determinant_elimination(m);
}

// Component i of a product-ring matrix, entrywise phi_i.
Matrix<ChainRing> project(const Matrix<ProductRing>& m, std::size_t component);

// Over a product ring the determinant is computed componentwise.
ProductElement determinant(const Matrix<ProductRing>& m);

template <FiniteRing Ring>
Matrix<Ring> random_matrix(const Ring& ring, std::size_t n, Rng& rng) {
    if (n == 0) throw InvalidParameter("matrix size n must be >= 1");
    std::vector<typename Ring::value_type> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) e.push_back(ring.element_at(rng.below(ring.size())));
    return Matrix<Ring>(ring, n, std::move(e));
}

// Same (ring, n, seed) always yields the same matrix.
template <FiniteRing Ring>
Matrix<Ring> random_matrix(const Ring& ring, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_matrix(ring, n, rng);
}

}  // namespace detcount
