#include "detcount/oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

namespace detcount {
namespace {

// Two-sided normal tail beyond kSigmaBound.
constexpr double kTailProbability = 6.334e-5;

using Classifier = std::function<std::size_t(std::uint64_t element_index)>;

double to_double(const Rational& r) { return r.convert_to<double>(); }

Tally make_tally(const auto& ring, unsigned n, const VerifyOptions& options) {
    if (options.mode == TallyMode::Exhaustive) return exhaustive_tally(ring, n, options.enumeration);
    return sampled_tally(ring, n, options.samples, options.seed, options.enumeration.threads);
}

VerifyReport compare(const ClassTable& table, const Tally& tally, std::uint64_t ring_size, const Classifier& classify) {
    VerifyReport report;
    report.ring = tally.ring;
    report.n = tally.n;
    report.mode = tally.mode;
    report.samples = tally.samples;
    report.seed = tally.seed;
    for (const auto& row : table.rows) {
        ClassCheck c;
        c.valuation = row.valuation;
        c.class_size = row.class_size;
        c.expected_per_element = row.count_per_element;
        c.expected_total = row.class_total;
        c.per_element_exact = true;
        report.classes.push_back(std::move(c));
    }
    for (std::uint64_t i = 0; i < ring_size; ++i) {
        auto& c = report.classes.at(classify(i));
        c.observed_total += tally.counts[i];
        if (Count(tally.counts[i]) != c.expected_per_element) c.per_element_exact = false;
    }

    const Count space = matrix_space_size(ring_size, tally.n);
    report.pass = true;
    for (auto& c : report.classes) {
        if (tally.mode == TallyMode::Exhaustive) {
            c.pass = c.per_element_exact && Count(c.observed_total) == c.expected_total;
        } else {
            const auto n_samples = static_cast<double>(tally.samples);
            c.probability = to_double(Rational(c.expected_total, space));
            c.expected_frequency = n_samples * c.probability;
            c.sigma = std::sqrt(n_samples * c.probability * (1.0 - c.probability));
            const double delta = static_cast<double>(c.observed_total) - c.expected_frequency;
            if (c.sigma > 0.0) {
                c.z = delta / c.sigma;
                c.pass = std::abs(delta) <= kSigmaBound * c.sigma;
            } else {
                c.pass = delta == 0.0;
            }
        }
        report.pass = report.pass && c.pass;
    }
    if (tally.mode == TallyMode::Exhaustive) {
        report.note = "exact comparison of every element against its class count";
    } else {
        const double family = kTailProbability * static_cast<double>(report.classes.size());
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "per-class two-sided %.0f-sigma binomial bound; Bonferroni false-failure bound over %zu "
                      "classes: %.2e",
                      kSigmaBound, report.classes.size(), family);
        report.note = buf;
    }
    return report;
}

// Row index of a valuation tuple in full_table(ProductRing) order.
std::size_t product_row(const ProductRing& ring, const ProductElement& a) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
        const auto& c = ring.component(i);
        row = row * (c.nilpotency() + 1) + c.valuation(a.parts[i]);
    }
    return row;
}

template <class F>
VerifyReport timed(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report = body();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

std::string to_string(TallyMode mode) { return mode == TallyMode::Exhaustive ? "exhaustive" : "sampled"; }

std::uint64_t Tally::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

unsigned resolve_threads(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

Count matrix_space_size(std::uint64_t ring_size, unsigned n) {
    return boost::multiprecision::pow(Count(ring_size), n * n);
}

VerifyReport verify_ring(const ChainRing& ring, unsigned n, const VerifyOptions& options) {
    return timed([&] {
        const auto table = full_table(ring, n);
        const auto tally = make_tally(ring, n, options);
        return compare(table, tally, ring.size(), [&](std::uint64_t i) { return ring.valuation(ring.element_at(i)); });
    });
}

VerifyReport verify_ring(const ProductRing& ring, unsigned n, const VerifyOptions& options) {
    return timed([&] {
        const auto table = full_table(ring, n);
        const auto tally = make_tally(ring, n, options);
        return compare(table, tally, ring.size(), [&](std::uint64_t i) { return product_row(ring, ring.element_at(i)); });
    });
}

VerifyReport verify_integers_mod(std::uint64_t m, unsigned n, const VerifyOptions& options) {
    return timed([&] {
        const IntegersMod direct(m);
        const auto factored = crt_factor_integer(m);
        const auto table = full_table(factored, n);
        const auto tally = make_tally(direct, n, options);
        return compare(table, tally, m,
                       [&](std::uint64_t x) { return product_row(factored, int_to_product(m, x)); });
    });
}

}  // namespace detcount
