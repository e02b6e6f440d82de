#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detcount/chain_ring.hpp"
#include "detcount/product_ring.hpp"

namespace detcount {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Closed-form counts over a chain ring with residue field F_q and nilpotency
// index e. All are evaluated through integer rearrangements; q must be a
// prime power, e >= 1 and n >= 1, otherwise InvalidParameter.

// |GL_n(R)| = q^(en^2 - n(n+1)/2) * prod_{i=1..n} (q^i - 1)
Count count_gl(std::uint64_t q, unsigned e, unsigned n);

// d_n(R, 1) = q^(e(n^2-1) - (n(n+1)/2 - 1)) * prod_{i=2..n} (q^i - 1)
Count count_det_one(std::uint64_t q, unsigned e, unsigned n);

// d_n(R, 0) = q^(en^2) - q^(en^2 - sum(e+i)) * prod_{i=0..n-1} (q^(e+i) - 1)
Count count_det_zero(std::uint64_t q, unsigned e, unsigned n);

// d_n(R, gamma^s) for 1 <= s <= e-1 (so e >= 2).
Count count_det_gamma(std::uint64_t q, unsigned e, unsigned n, unsigned s);

// Per-element count of the valuation class s (0 <= s <= e).
Count count_by_valuation(std::uint64_t q, unsigned e, unsigned n, unsigned s);

// Number of ring elements of valuation s: (q-1) q^(e-1-s) for s < e, 1 for s = e.
Count class_size(std::uint64_t q, unsigned e, unsigned s);

// d_n(R, a); depends on a only through its valuation.
Count count_det(const ChainRing& ring, Element a, unsigned n);

// prod_i d_n(R_i, phi_i(r)).
Count count_det_product(const ProductRing& ring, const ProductElement& r, unsigned n);

// Literal rational forms, with products of (1 - q^-k) factors. These are the
// independent side of the exactness cross-check.
namespace rational_form {
Rational gl(std::uint64_t q, unsigned e, unsigned n);
Rational det_one(std::uint64_t q, unsigned e, unsigned n);
Rational det_zero(std::uint64_t q, unsigned e, unsigned n);
Rational det_gamma(std::uint64_t q, unsigned e, unsigned n, unsigned s);
}  // namespace rational_form

// Evaluates every formula for (q, e, n) (all s in 1..e-1) both ways; throws
// ExactnessError if a rational form has a nonzero remainder or disagrees.
// Returns the number of formula evaluations compared.
unsigned cross_check_exactness(std::uint64_t q, unsigned e, unsigned n);

// When enabled, every count_* call also runs its rational form and asserts
// agreement. Defaults to on in builds without NDEBUG.
void set_exactness_checks(bool enabled) noexcept;
bool exactness_checks_enabled() noexcept;

struct ClassRow {
    // One valuation per component; a single entry for chain rings.
    std::vector<unsigned> valuation;
    Count class_size;
    Count count_per_element;
    Count class_total;
};

struct ClassTable {
    std::string ring;
    unsigned n = 0;
    std::vector<ClassRow> rows;
    Count grand_total;
};

// Rows for s = 0..e; asserts the grand total equals q^(e n^2).
ClassTable full_table(const ChainRing& ring, unsigned n);
// Rows for every tuple of component valuations, last component fastest.
ClassTable full_table(const ProductRing& ring, unsigned n);

struct IdentityCheck {
    bool holds = false;
    Count lhs;
    Count rhs;
};

// d_n(R,0) against (q^(en) - q^((e-1)n)) q^(e(n-1)) d_{n-1}(R,0) + q^((n-1)n) d_n(R/gamma^(e-1)R, 0).
// Requires e >= 2 and n >= 2.
IdentityCheck check_zero_recurrence(std::uint64_t q, unsigned e, unsigned n);

// d_n at nilpotency e+f against q^(f(n^2-1)) d_n at nilpotency e, valuation s.
// Requires e >= 2, f >= 1, 1 <= s < e.
IdentityCheck check_lift_identity(std::uint64_t q, unsigned e, unsigned f, unsigned n, unsigned s);

}  // namespace detcount
