#include "doctest.h"

#include <set>

#include "detcount/chain_ring.hpp"
#include "detcount/error.hpp"
#include "detcount/product_ring.hpp"
#include "detcount/random.hpp"

using namespace detcount;

namespace {

std::vector<ChainRing> small_rings() {
    return {ChainRing::zpe(2, 1), ChainRing::zpe(2, 2), ChainRing::zpe(2, 3), ChainRing::zpe(3, 2),
            ChainRing::zpe(5, 1), ChainRing::zpe(2, 5), ChainRing::zpe(3, 3), ChainRing::fqu(2, 1, 2),
            ChainRing::fqu(2, 2, 1), ChainRing::fqu(2, 2, 2), ChainRing::fqu(3, 1, 2), ChainRing::fqu(2, 1, 4),
            ChainRing::fqu(3, 2, 2), ChainRing::fqu(2, 3, 3), ChainRing::fqu(5, 1, 3)};
}

// Rings too large for the operation tables, exercising the direct routes.
std::vector<ChainRing> large_rings() {
    return {ChainRing::zpe(2, 10), ChainRing::zpe(7, 4), ChainRing::fqu(2, 2, 5), ChainRing::fqu(3, 2, 3),
            ChainRing::fqu(2, 1, 12)};
}

}  // namespace

TEST_CASE("make_chain_ring") {
    const auto z4 = make_chain_ring(Family::ZPE, 2, 1, 2);
    CHECK(z4.q() == 2);
    CHECK(z4.nilpotency() == 2);
    CHECK(z4.size() == 4);
    CHECK(z4.name() == "Z_4");

    const auto f4u = make_chain_ring(Family::FQU, 2, 2, 2);
    CHECK(f4u.q() == 4);
    CHECK(f4u.size() == 16);
    CHECK(f4u.name() == "F_4[u]/(u^2)");
    CHECK(f4u.spec_string() == "fqu:4,2");

    CHECK_THROWS_AS(make_chain_ring(Family::ZPE, 4, 1, 1), NotPrime);
    CHECK_THROWS_AS(make_chain_ring(Family::ZPE, 2, 2, 1), InvalidParameter);
    CHECK_THROWS_AS(make_chain_ring(Family::FQU, 2, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(make_chain_ring(Family::FQU, 2, 1, 0), InvalidParameter);
    CHECK_THROWS_AS(make_chain_ring(Family::ZPE, 2, 1, 40), InvalidParameter);
}

TEST_CASE("ring_arith examples") {
    const auto z4 = ChainRing::zpe(2, 2);
    CHECK(ring_arith(z4, ArithOp::Add, {2}, {3}) == Element{1});
    CHECK(ring_arith(z4, ArithOp::Sub, {1}, {3}) == Element{2});

    const auto f2u = ChainRing::fqu(2, 1, 2);
    const Element u = f2u.gamma();
    const Element one_plus_u = f2u.add(f2u.one(), u);
    CHECK(ring_arith(f2u, ArithOp::Mul, u, u) == f2u.zero());
    CHECK(ring_arith(f2u, ArithOp::Mul, one_plus_u, one_plus_u) == f2u.one());

    CHECK_THROWS_AS(ring_arith(z4, ArithOp::Add, {4}, {0}), DomainMismatch);
}

TEST_CASE("unit_decompose examples") {
    const auto z8 = ChainRing::zpe(2, 3);
    auto d = unit_decompose(z8, {6});
    CHECK(d.valuation == 1);
    CHECK(d.unit == Element{3});
    d = unit_decompose(z8, {0});
    CHECK(d.valuation == 3);
    CHECK_FALSE(d.unit.has_value());
    d = unit_decompose(z8, {5});
    CHECK(d.valuation == 0);
    CHECK(d.unit == Element{5});
}

TEST_CASE("ring_elements examples") {
    const auto z4 = ChainRing::zpe(2, 2);
    CHECK(z4.elements() == std::vector<Element>{{0}, {1}, {2}, {3}});

    const auto f2u = ChainRing::fqu(2, 1, 2);
    const auto els = f2u.elements();
    REQUIRE(els.size() == 4);
    CHECK(f2u.digits(els[0]) == std::vector<std::uint32_t>{0, 0});
    CHECK(f2u.digits(els[1]) == std::vector<std::uint32_t>{1, 0});
    CHECK(f2u.digits(els[2]) == std::vector<std::uint32_t>{0, 1});  // u
    CHECK(f2u.digits(els[3]) == std::vector<std::uint32_t>{1, 1});  // 1 + u

    CHECK(ChainRing::fqu(3, 1, 2).elements().size() == 9);
}

TEST_CASE("quotient_project examples") {
    const auto z8 = ChainRing::zpe(2, 3);
    auto [q2, img] = quotient_project(z8, 2, {6});
    CHECK(q2 == ChainRing::zpe(2, 2));
    CHECK(img == Element{2});

    auto [q3, same] = quotient_project(z8, 3, {6});
    CHECK(q3 == z8);
    CHECK(same == Element{6});

    const auto f4u = ChainRing::fqu(2, 2, 2);
    auto [f4, zero] = quotient_project(f4u, 1, f4u.gamma());
    CHECK(f4.name() == "F_4");
    CHECK(zero == f4.zero());

    CHECK_THROWS_AS(quotient_project(z8, 0, {1}), InvalidParameter);
    CHECK_THROWS_AS(quotient_project(z8, 4, {1}), InvalidParameter);
}

TEST_CASE("ring axioms") {
    auto check_triple = [](const ChainRing& r, Element a, Element b, Element c) {
        CHECK(r.add(a, b) == r.add(b, a));
        CHECK(r.mul(a, b) == r.mul(b, a));
        CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
        CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
        CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
        CHECK(r.add(a, r.zero()) == a);
        CHECK(r.mul(a, r.one()) == a);
        CHECK(r.add(a, r.neg(a)) == r.zero());
        CHECK(r.sub(r.add(a, b), b) == a);
    };
    for (const auto& r : small_rings()) {
        CAPTURE(r.name());
        if (r.size() <= 16) {
            for (auto a : r.elements()) {
                for (auto b : r.elements()) {
                    for (auto c : r.elements()) check_triple(r, a, b, c);
                }
            }
        }
    }
    Rng rng(20240611);
    auto all = small_rings();
    for (const auto& r : large_rings()) all.push_back(r);
    for (const auto& r : all) {
        if (r.size() <= 16) continue;
        CAPTURE(r.name());
        for (int i = 0; i < 2000; ++i) {
            check_triple(r, r.element_at(rng.below(r.size())), r.element_at(rng.below(r.size())),
                         r.element_at(rng.below(r.size())));
        }
    }
}

TEST_CASE("table and direct arithmetic agree") {
    // The large rings use direct arithmetic, their small quotients use tables.
    for (auto [big, k] : {std::pair{ChainRing::fqu(2, 2, 5), 2u}, {ChainRing::zpe(2, 10), 4u}, {ChainRing::fqu(3, 2, 3), 2u}}) {
        const auto small = big.quotient(k);
        Rng rng(7);
        for (int i = 0; i < 3000; ++i) {
            const Element a{rng.below(big.size())}, b{rng.below(big.size())};
            CHECK(big.project(big.mul(a, b), k) == small.mul(big.project(a, k), big.project(b, k)));
            CHECK(big.project(big.add(a, b), k) == small.add(big.project(a, k), big.project(b, k)));
        }
    }
}

TEST_CASE("valuation filtration and unit count") {
    std::vector<ChainRing> rings = small_rings();
    rings.push_back(ChainRing::zpe(2, 10));
    rings.push_back(ChainRing::fqu(3, 2, 3));
    for (const auto& r : rings) {
        CAPTURE(r.name());
        const auto q = r.q();
        const auto e = r.nilpotency();
        std::vector<std::uint64_t> at_least(e + 1, 0);
        std::uint64_t units = 0;
        for (auto a : r.elements()) {
            const auto s = r.valuation(a);
            for (unsigned j = 0; j <= s; ++j) ++at_least[j];
            if (r.is_unit(a)) ++units;
            CHECK(r.is_unit(a) == (s == 0));
        }
        std::uint64_t expect = r.size();
        for (unsigned j = 0; j <= e; ++j) {
            CHECK(at_least[j] == expect);  // |gamma^j R| = q^(e-j)
            expect /= q;
        }
        std::uint64_t unit_formula = q - 1;
        for (unsigned i = 1; i < e; ++i) unit_formula *= q;
        CHECK(units == unit_formula);
    }
}

TEST_CASE("unit_decompose round trip and inverses") {
    for (const auto& r : small_rings()) {
        CAPTURE(r.name());
        for (auto a : r.elements()) {
            const auto d = unit_decompose(r, a);
            if (a == r.zero()) {
                CHECK(d.valuation == r.nilpotency());
                CHECK_FALSE(d.unit.has_value());
                continue;
            }
            REQUIRE(d.unit.has_value());
            CHECK(r.is_unit(*d.unit));
            CHECK(r.mul(r.gamma_power(d.valuation), *d.unit) == a);
            if (r.is_unit(a)) {
                CHECK(r.mul(a, r.inverse(a)) == r.one());
            } else {
                CHECK_THROWS_AS(r.inverse(a), DomainMismatch);
            }
        }
    }
    const auto big = ChainRing::fqu(2, 2, 5);
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const Element a{rng.below(big.size())};
        if (big.is_unit(a)) CHECK(big.mul(a, big.inverse(a)) == big.one());
    }
}

TEST_CASE("quotient projection is a surjective homomorphism") {
    for (const auto& r : small_rings()) {
        if (r.size() > 64) continue;
        for (unsigned k = 1; k <= r.nilpotency(); ++k) {
            const auto qr = r.quotient(k);
            CAPTURE(r.name());
            CAPTURE(k);
            std::set<std::uint64_t> image;
            for (auto a : r.elements()) {
                image.insert(r.project(a, k).code);
                for (auto b : r.elements()) {
                    CHECK(r.project(r.add(a, b), k) == qr.add(r.project(a, k), r.project(b, k)));
                    CHECK(r.project(r.mul(a, b), k) == qr.mul(r.project(a, k), r.project(b, k)));
                }
            }
            CHECK(image.size() == qr.size());
        }
    }
}

TEST_CASE("crt_factor_integer and int_to_product") {
    const auto z12 = crt_factor_integer(12);
    REQUIRE(z12.arity() == 2);
    CHECK(z12.component(0) == ChainRing::zpe(2, 2));
    CHECK(z12.component(1) == ChainRing::zpe(3, 1));
    CHECK(z12.name() == "Z_4 x Z_3");
    CHECK(int_to_product(12, 7) == ProductElement{{{3}, {1}}});

    const auto z6 = crt_factor_integer(6);
    CHECK(z6.name() == "Z_2 x Z_3");
    CHECK(int_to_product(6, 3) == ProductElement{{{1}, {0}}});

    CHECK(crt_factor_integer(2).name() == "Z_2");
    CHECK(crt_factor_integer(360).name() == "Z_8 x Z_9 x Z_5");
    CHECK_THROWS_AS(crt_factor_integer(1), InvalidParameter);
    CHECK_THROWS_AS(crt_factor_integer(0), InvalidParameter);
    CHECK_THROWS_AS(int_to_product(6, 6), DomainMismatch);
}

TEST_CASE("int_to_product is a ring isomorphism for m <= 100") {
    for (std::uint64_t m = 2; m <= 100; ++m) {
        CAPTURE(m);
        const auto ring = crt_factor_integer(m);
        CHECK(ring.size() == m);
        std::vector<ProductElement> images;
        std::set<std::uint64_t> seen;
        for (std::uint64_t x = 0; x < m; ++x) {
            images.push_back(int_to_product(m, x));
            seen.insert(ring.index_of(images.back()));
            CHECK(product_to_int(ring, images.back()) == x);
        }
        CHECK(seen.size() == m);
        CHECK(images[1] == ring.one());
        for (std::uint64_t x = 0; x < m; ++x) {
            for (std::uint64_t y = 0; y < m; ++y) {
                CHECK(ring.add(images[x], images[y]) == images[(x + y) % m]);
                CHECK(ring.mul(images[x], images[y]) == images[x * y % m]);
            }
        }
    }
}

TEST_CASE("product ring indexing and validation") {
    const ProductRing ring({ChainRing::fqu(2, 1, 2), ChainRing::zpe(3, 1)});
    CHECK(ring.size() == 12);
    for (std::uint64_t i = 0; i < ring.size(); ++i) CHECK(ring.index_of(ring.element_at(i)) == i);
    CHECK(ring.format(ring.element_at(11)) == "(1,1|2)");
    CHECK_THROWS_AS(ring.require(ProductElement{{{0}}}), DomainMismatch);
    CHECK_THROWS_AS(ring.require(ProductElement{{{4}, {0}}}), DomainMismatch);
    CHECK_THROWS_AS(ProductRing(std::vector<ChainRing>{}), InvalidParameter);
    CHECK(ring.is_unit(ProductElement{{{1}, {2}}}));
    CHECK_FALSE(ring.is_unit(ProductElement{{{2}, {2}}}));
}
