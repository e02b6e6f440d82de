#include "detcount/counting.hpp"

#include <atomic>

#include "detcount/error.hpp"
#include "detcount/number_theory.hpp"

namespace detcount {
namespace {

#ifdef NDEBUG
std::atomic<bool> g_exactness_checks{false};
#else
std::atomic<bool> g_exactness_checks{true};
#endif

void validate(std::uint64_t q, unsigned e, unsigned n) {
    if (!as_prime_power(q)) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
    if (e < 1) throw InvalidParameter("nilpotency index e must be >= 1");
    if (n < 1) throw InvalidParameter("matrix size n must be >= 1");
}

Count power(std::uint64_t q, std::int64_t k) {
    if (k < 0) throw ExactnessError("negative exponent in integer rearrangement");
    return boost::multiprecision::pow(Count(q), static_cast<unsigned>(k));
}

Rational rational_power(std::uint64_t q, std::int64_t k) {
    const Count magnitude = boost::multiprecision::pow(Count(q), static_cast<unsigned>(k < 0 ? -k : k));
    return k < 0 ? Rational(Count(1), magnitude) : Rational(magnitude);
}

// 1 - q^-k
Rational one_minus_inverse_power(std::uint64_t q, std::int64_t k) { return Rational(1) - rational_power(q, -k); }

std::int64_t sq(unsigned n) { return std::int64_t{n} * n; }

void assert_agrees(const Count& integer_route, const Rational& rational_route, const char* what) {
    if (boost::multiprecision::denominator(rational_route) != 1) {
        throw ExactnessError(std::string(what) + ": rational form leaves a nonzero remainder");
    }
    if (boost::multiprecision::numerator(rational_route) != integer_route) {
        throw ExactnessError(std::string(what) + ": integer and rational evaluations disagree");
    }
}

}  // namespace

void set_exactness_checks(bool enabled) noexcept { g_exactness_checks.store(enabled); }
bool exactness_checks_enabled() noexcept { return g_exactness_checks.load(); }

namespace rational_form {

Rational gl(std::uint64_t q, unsigned e, unsigned n) {
    Rational out = rational_power(q, e * sq(n));
    for (unsigned i = 1; i <= n; ++i) out *= one_minus_inverse_power(q, i);
    return out;
}

Rational det_one(std::uint64_t q, unsigned e, unsigned n) {
    Rational out = rational_power(q, e * (sq(n) - 1));
    for (unsigned i = 2; i <= n; ++i) out *= one_minus_inverse_power(q, i);
    return out;
}

Rational det_zero(std::uint64_t q, unsigned e, unsigned n) {
    Rational prod(1);
    for (unsigned i = 0; i < n; ++i) prod *= one_minus_inverse_power(q, std::int64_t{e} + i);
    return rational_power(q, e * sq(n)) * (Rational(1) - prod);
}

Rational det_gamma(std::uint64_t q, unsigned e, unsigned n, unsigned s) {
    Rational out = (rational_power(q, n) - 1) / Rational(q - 1);
    out *= rational_power(q, e * sq(n) - n - e + 1);
    for (unsigned i = 1; i < n; ++i) out *= one_minus_inverse_power(q, std::int64_t{s} + i);
    return out;
}

}  // namespace rational_form

Count count_gl(std::uint64_t q, unsigned e, unsigned n) {
    validate(q, e, n);
    const std::int64_t tri = std::int64_t{n} * (n + 1) / 2;
    Count out = power(q, e * sq(n) - tri);
    for (unsigned i = 1; i <= n; ++i) out *= power(q, i) - 1;
    if (exactness_checks_enabled()) assert_agrees(out, rational_form::gl(q, e, n), "count_gl");
    return out;
}

Count count_det_one(std::uint64_t q, unsigned e, unsigned n) {
    validate(q, e, n);
    const std::int64_t tri = std::int64_t{n} * (n + 1) / 2;
    Count out = power(q, e * (sq(n) - 1) - (tri - 1));
    for (unsigned i = 2; i <= n; ++i) out *= power(q, i) - 1;

    // |GL_n(R)| = |U(R)| d_n(R, 1)
    const Count units = Count(q - 1) * power(q, e - 1);
    Count gl = power(q, e * sq(n) - tri);
    for (unsigned i = 1; i <= n; ++i) gl *= power(q, i) - 1;
    if (gl % units != 0 || gl / units != out) {
        throw ExactnessError("count_det_one: |GL_n| is not |U(R)| times d_n(R,1)");
    }
    if (exactness_checks_enabled()) assert_agrees(out, rational_form::det_one(q, e, n), "count_det_one");
    return out;
}

Count count_det_zero(std::uint64_t q, unsigned e, unsigned n) {
    validate(q, e, n);
    const std::int64_t total = e * sq(n);
    const std::int64_t shifted = std::int64_t{n} * e + std::int64_t{n} * (n - 1) / 2;
    Count prod = power(q, total - shifted);
    for (unsigned i = 0; i < n; ++i) prod *= power(q, std::int64_t{e} + i) - 1;
    Count out = power(q, total) - prod;
    if (exactness_checks_enabled()) assert_agrees(out, rational_form::det_zero(q, e, n), "count_det_zero");
    return out;
}

Count count_det_gamma(std::uint64_t q, unsigned e, unsigned n, unsigned s) {
    validate(q, e, n);
    if (e < 2) throw InvalidParameter("zero divisors exist only for e >= 2");
    if (s < 1 || s >= e) throw InvalidParameter("valuation s must satisfy 1 <= s <= e-1");
    Count geometric = 0;
    for (unsigned i = 0; i < n; ++i) geometric += power(q, i);
    const std::int64_t shifted = std::int64_t{n - 1} * s + std::int64_t{n} * (n - 1) / 2;
    Count out = geometric * power(q, e * sq(n) - n - e + 1 - shifted);
    for (unsigned i = 1; i < n; ++i) out *= power(q, std::int64_t{s} + i) - 1;
    if (exactness_checks_enabled()) assert_agrees(out, rational_form::det_gamma(q, e, n, s), "count_det_gamma");
    return out;
}

Count count_by_valuation(std::uint64_t q, unsigned e, unsigned n, unsigned s) {
    if (s > e) throw InvalidParameter("valuation s must satisfy 0 <= s <= e");
    if (s == 0) return count_det_one(q, e, n);
    if (s == e) return count_det_zero(q, e, n);
    return count_det_gamma(q, e, n, s);
}

Count class_size(std::uint64_t q, unsigned e, unsigned s) {
    if (!as_prime_power(q)) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
    if (e < 1) throw InvalidParameter("nilpotency index e must be >= 1");
    if (s > e) throw InvalidParameter("valuation s must satisfy 0 <= s <= e");
    if (s == e) return 1;
    return Count(q - 1) * power(q, std::int64_t{e} - 1 - s);
}

Count count_det(const ChainRing& ring, Element a, unsigned n) {
    ring.require(a);
    return count_by_valuation(ring.q(), ring.nilpotency(), n, ring.valuation(a));
}

Count count_det_product(const ProductRing& ring, const ProductElement& r, unsigned n) {
    ring.require(r);
    Count out = 1;
    for (std::size_t i = 0; i < ring.arity(); ++i) out *= count_det(ring.component(i), ring.project(r, i), n);
    return out;
}

unsigned cross_check_exactness(std::uint64_t q, unsigned e, unsigned n) {
    validate(q, e, n);
    const bool previous = exactness_checks_enabled();
    set_exactness_checks(false);
    unsigned evaluations = 0;
    try {
        assert_agrees(count_gl(q, e, n), rational_form::gl(q, e, n), "count_gl");
        assert_agrees(count_det_one(q, e, n), rational_form::det_one(q, e, n), "count_det_one");
        assert_agrees(count_det_zero(q, e, n), rational_form::det_zero(q, e, n), "count_det_zero");
        evaluations = 3;
        for (unsigned s = 1; s < e; ++s) {
            assert_agrees(count_det_gamma(q, e, n, s), rational_form::det_gamma(q, e, n, s), "count_det_gamma");
            ++evaluations;
        }
    } catch (...) {
        set_exactness_checks(previous);
        throw;
    }
    set_exactness_checks(previous);
    return evaluations;
}

ClassTable full_table(const ChainRing& ring, unsigned n) {
    const auto q = ring.q();
    const auto e = ring.nilpotency();
    ClassTable table{ring.name(), n, {}, 0};
    Count sizes = 0;
    for (unsigned s = 0; s <= e; ++s) {
        ClassRow row{{s}, class_size(q, e, s), count_by_valuation(q, e, n, s), 0};
        row.class_total = row.class_size * row.count_per_element;
        sizes += row.class_size;
        table.grand_total += row.class_total;
        table.rows.push_back(std::move(row));
    }
    if (sizes != power(q, e)) throw ExactnessError("class sizes do not sum to q^e");
    if (table.grand_total != power(q, std::int64_t{e} * sq(n))) {
        throw ExactnessError("class totals do not sum to q^(e n^2)");
    }
    return table;
}

ClassTable full_table(const ProductRing& ring, unsigned n) {
    std::vector<ClassTable> parts;
    for (const auto& c : ring.components()) parts.push_back(full_table(c, n));

    ClassTable table{ring.name(), n, {}, 0};
    std::vector<std::size_t> idx(parts.size(), 0);
    bool done = false;
    while (!done) {
        ClassRow row{{}, 1, 1, 0};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& src = parts[i].rows[idx[i]];
            row.valuation.push_back(src.valuation.front());
            row.class_size *= src.class_size;
            row.count_per_element *= src.count_per_element;
        }
        row.class_total = row.class_size * row.count_per_element;
        table.grand_total += row.class_total;
        table.rows.push_back(std::move(row));

        std::size_t k = parts.size();
        while (true) {
            if (k == 0) {
                done = true;
                break;
            }
            --k;
            if (++idx[k] < parts[k].rows.size()) break;
            idx[k] = 0;
        }
    }
    if (table.grand_total != boost::multiprecision::pow(Count(ring.size()), n * n)) {
        throw ExactnessError("class totals do not sum to |R|^(n^2)");
    }
    return table;
}

IdentityCheck check_zero_recurrence(std::uint64_t q, unsigned e, unsigned n) {
    validate(q, e, n);
    if (e < 2) throw InvalidParameter("recurrence check needs e >= 2");
    if (n < 2) throw InvalidParameter("recurrence check needs n >= 2");
    IdentityCheck out;
    out.lhs = count_det_zero(q, e, n);
    out.rhs = (power(q, std::int64_t{e} * n) - power(q, std::int64_t{e - 1} * n)) * power(q, std::int64_t{e} * (n - 1)) *
                  count_det_zero(q, e, n - 1) +
              power(q, std::int64_t{n - 1} * n) * count_det_zero(q, e - 1, n);
    out.holds = out.lhs == out.rhs;
    return out;
}

IdentityCheck check_lift_identity(std::uint64_t q, unsigned e, unsigned f, unsigned n, unsigned s) {
    validate(q, e, n);
    if (e < 2) throw InvalidParameter("lifting check needs e >= 2");
    if (f < 1) throw InvalidParameter("lifting check needs f >= 1");
    if (s < 1 || s >= e) throw InvalidParameter("lifting check needs 1 <= s < e");
    IdentityCheck out;
    out.lhs = count_det_gamma(q, e + f, n, s);
    out.rhs = power(q, std::int64_t{f} * (sq(n) - 1)) * count_det_gamma(q, e, n, s);
    out.holds = out.lhs == out.rhs;
    return out;
}

}  // namespace detcount
