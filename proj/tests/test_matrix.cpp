#include "doctest.h"

#include <cmath>

#include "detcount/matrix.hpp"
#include "test_support.hpp"

using namespace detcount;

namespace {

Matrix<ChainRing> mat(const ChainRing& r, std::size_t n, std::vector<std::uint64_t> codes) {
    std::vector<Element> e;
    for (auto c : codes) e.push_back({c});
    return Matrix<ChainRing>(r, n, std::move(e));
}

// Calls f on every n x n matrix over the ring.
template <class Ring, class F>
void for_each_matrix(const Ring& ring, std::size_t n, F&& f) {
    std::vector<std::uint64_t> idx(n * n, 0);
    while (true) {
        std::vector<typename Ring::value_type> e;
        for (auto i : idx) e.push_back(ring.element_at(i));
        f(Matrix<Ring>(ring, n, std::move(e)));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == ring.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
}

}  // namespace

TEST_CASE("determinant examples") {
    const auto z4 = ChainRing::zpe(2, 2);
    CHECK(determinant(mat(z4, 2, {1, 2, 3, 0})) == Element{2});
    CHECK(determinant(mat(z4, 2, {2, 1, 2, 2})) == Element{2});
    for (const auto& r : {z4, ChainRing::fqu(2, 2, 2), ChainRing::zpe(5, 3)}) {
        for (std::size_t n = 1; n <= 5; ++n) CHECK(determinant(Matrix<ChainRing>::identity(r, n)) == r.one());
    }
    const auto scaled = Matrix<ChainRing>::diagonal(z4, {{3}, {1}}) * mat(z4, 2, {1, 2, 3, 0});
    CHECK(determinant(scaled) == z4.mul({3}, {2}));
}

TEST_CASE("matrix validation") {
    const auto z4 = ChainRing::zpe(2, 2);
    CHECK_THROWS_AS(mat(z4, 0, {}), InvalidParameter);
    CHECK_THROWS_AS(mat(z4, 2, {1, 2, 3}), InvalidParameter);
    CHECK_THROWS_AS(mat(z4, 1, {4}), DomainMismatch);
}

TEST_CASE("elimination matches Leibniz over Z_m exhaustively") {
    for (auto [m, n] : {std::pair{4ull, 2u}, {8ull, 2u}, {9ull, 2u}, {2ull, 3u}, {4ull, 3u}, {2ull, 4u}}) {
        const auto ring = ChainRing::zpe(m == 9 ? 3 : 2, m == 9 ? 2 : static_cast<unsigned>(std::log2(m)));
        REQUIRE(ring.size() == m);
        CAPTURE(m);
        CAPTURE(n);
        for_each_matrix(ring, n, [&](const Matrix<ChainRing>& a) {
            std::vector<std::uint64_t> plain;
            for (auto e : a.entries()) plain.push_back(e.code);
            CHECK(determinant(a).code == testing::leibniz_det_mod(plain, n, m));
        });
    }
}

TEST_CASE("cofactor and elimination agree") {
    // Exhaustive where the matrix space has at most 2^16 elements.
    for (const auto& r : {ChainRing::fqu(2, 1, 2), ChainRing::fqu(2, 2, 1), ChainRing::fqu(2, 2, 2),
                          ChainRing::fqu(3, 1, 2), ChainRing::zpe(2, 1)}) {
        const std::size_t max_n = r.size() == 2 ? 4 : 2;
        for (std::size_t n = 1; n <= max_n; ++n) {
            CAPTURE(r.name());
            for_each_matrix(r, n, [&](const Matrix<ChainRing>& a) { CHECK(determinant_cofactor(a) == determinant_elimination(a)); });
        }
    }
    Rng rng(99);
    for (const auto& r : {ChainRing::fqu(2, 2, 5), ChainRing::zpe(3, 6), ChainRing::fqu(2, 1, 6), ChainRing::fqu(7, 1, 3)}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            for (int i = 0; i < 200; ++i) {
                const auto a = random_matrix(r, n, rng);
                CHECK(determinant_cofactor(a) == determinant_elimination(a));
            }
        }
    }
}

TEST_CASE("fallback handles columns without a unit") {
    const auto z8 = ChainRing::zpe(2, 3);
    // First column lies in 2Z_8; det = 2*3 - 1*4 = 2.
    CHECK(determinant(mat(z8, 2, {2, 1, 4, 3})) == Element{2});
    // Every entry even: det = 8 * det over integers, hence 0 mod 8.
    CHECK(determinant(mat(z8, 3, {2, 4, 6, 6, 2, 4, 4, 6, 2})) == Element{0});
    CHECK(determinant(mat(z8, 3, {2, 4, 6, 6, 2, 4, 4, 6, 2})) == determinant_cofactor(mat(z8, 3, {2, 4, 6, 6, 2, 4, 4, 6, 2})));
}

TEST_CASE("determinant is multiplicative") {
    // Exhaustive over pairs when there are at most 2^16 pairs.
    for (const auto& r : {ChainRing::zpe(2, 1), ChainRing::zpe(3, 1), ChainRing::zpe(2, 2), ChainRing::fqu(2, 1, 2),
                          ChainRing::fqu(2, 2, 1)}) {
        std::vector<Matrix<ChainRing>> all;
        for_each_matrix(r, 2, [&](const Matrix<ChainRing>& a) { all.push_back(a); });
        CAPTURE(r.name());
        for (const auto& a : all) {
            const auto da = determinant(a);
            for (const auto& b : all) CHECK(determinant(a * b) == r.mul(da, determinant(b)));
        }
    }
    Rng rng(5);
    for (const auto& r : {ChainRing::zpe(2, 3), ChainRing::fqu(2, 2, 2), ChainRing::fqu(3, 2, 3), ChainRing::zpe(2, 12)}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int i = 0; i < 200; ++i) {
                const auto a = random_matrix(r, n, rng);
                const auto b = random_matrix(r, n, rng);
                CHECK(determinant(a * b) == r.mul(determinant(a), determinant(b)));
            }
        }
    }
}

TEST_CASE("scaling the first row by a unit scales the determinant") {
    const auto r = ChainRing::fqu(2, 2, 2);
    Rng rng(11);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (auto b : r.elements()) {
            if (!r.is_unit(b)) continue;
            std::vector<Element> diag(n, r.one());
            diag[0] = b;
            const auto d = Matrix<ChainRing>::diagonal(r, diag);
            for (int i = 0; i < 20; ++i) {
                const auto a = random_matrix(r, n, rng);
                CHECK(determinant(d * a) == r.mul(b, determinant(a)));
            }
        }
    }
}

TEST_CASE("product determinant is componentwise") {
    const ProductRing ring({ChainRing::zpe(2, 2), ChainRing::fqu(3, 1, 2), ChainRing::fqu(2, 2, 1)});
    Rng rng(17);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_matrix(ring, n, rng);
            const auto det = determinant(a);
            // Generic algorithms over the product arithmetic, not componentwise.
            CHECK(det == determinant_cofactor(a));
            CHECK(det == determinant_elimination(a));
            for (std::size_t c = 0; c < ring.arity(); ++c) CHECK(ring.project(det, c) == determinant(project(a, c)));
        }
    }
}

TEST_CASE("Z_m determinant matches the CRT product") {
    const IntegersMod z12(12);
    const auto factored = crt_factor_integer(12);
    for_each_matrix(z12, 2, [&](const Matrix<IntegersMod>& a) {
        std::vector<ProductElement> entries;
        for (auto x : a.entries()) entries.push_back(int_to_product(12, x));
        const Matrix<ProductRing> b(factored, 2, std::move(entries));
        CHECK(int_to_product(12, determinant(a)) == determinant(b));
    });
}

TEST_CASE("random_matrix") {
    const auto z4 = ChainRing::zpe(2, 2);
    CHECK(random_matrix(z4, 2, 1) == random_matrix(z4, 2, 1));
    CHECK_FALSE(random_matrix(z4, 4, 1) == random_matrix(z4, 4, 2));
    const auto z2 = ChainRing::zpe(2, 1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(random_matrix(z2, 1, seed)(0, 0).code < 2);
    CHECK_THROWS_AS(random_matrix(z4, 0, 1), InvalidParameter);
}

TEST_CASE("random_matrix entries are uniform") {
    const auto z4 = ChainRing::zpe(2, 2);
    constexpr int kDraws = 100000;
    std::array<int, 4> freq{};
    Rng rng(2024);
    for (int i = 0; i < kDraws; ++i) ++freq[random_matrix(z4, 1, rng)(0, 0).code];
    const double mean = kDraws / 4.0;
    const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
    for (int f : freq) CHECK(std::abs(f - mean) <= 4 * sigma);
}
