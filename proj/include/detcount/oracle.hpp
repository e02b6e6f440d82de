#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "detcount/counting.hpp"
#include "detcount/error.hpp"
#include "detcount/matrix.hpp"

namespace detcount {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;
// Sampled tallies always split into this many shards, so results do not
// depend on the thread count.
inline constexpr std::uint64_t kSampleShards = 64;

enum class TallyMode { Exhaustive, Sampled };

std::string to_string(TallyMode mode);

/// Occurrence count of every determinant value, indexed by the ring's
/// element order.
struct Tally {
    std::string ring;
    unsigned n = 0;
    TallyMode mode = TallyMode::Exhaustive;
    std::uint64_t samples = 0;  // sampled mode only
    std::uint64_t seed = 0;     // sampled mode only
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept;
    bool operator==(const Tally&) const = default;
};

struct EnumerationOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 0;  // 0: hardware concurrency
    bool reverse = false;  // visit elements in descending order
};

unsigned resolve_threads(unsigned requested) noexcept;

// |R|^(n^2) as an exact count.
Count matrix_space_size(std::uint64_t ring_size, unsigned n);

namespace detail {

template <FiniteRing Ring>
class DeterminantKernel {
public:
    using T = typename Ring::value_type;
    DeterminantKernel(const Ring& ring, unsigned n) : ring_(ring), n_(n), scratch_(std::size_t{n} * n) {}

    // Determinant of the matrix whose entries are elems[idx[k]].
    std::uint64_t det_index(const std::vector<T>& elems, const std::vector<std::uint64_t>& idx) {
        for (std::size_t k = 0; k < idx.size(); ++k) scratch_[k] = elems[idx[k]];
        return ring_.index_of(determinant_elimination_inplace(ring_, std::span<T>(scratch_), n_));
    }

private:
    const Ring& ring_;
    unsigned n_;
    std::vector<T> scratch_;
};

// Product rings: determinant componentwise, one chain-ring elimination each.
template <>
class DeterminantKernel<ProductRing> {
public:
    DeterminantKernel(const ProductRing& ring, unsigned n)
        : ring_(ring), n_(n), scratch_(std::size_t{n} * n), det_(ring.zero()) {}

    std::uint64_t det_index(const std::vector<ProductElement>& elems, const std::vector<std::uint64_t>& idx) {
        for (std::size_t c = 0; c < ring_.arity(); ++c) {
            for (std::size_t k = 0; k < idx.size(); ++k) scratch_[k] = elems[idx[k]].parts[c];
            det_.parts[c] = determinant_elimination_inplace(ring_.component(c), std::span<Element>(scratch_), n_);
        }
        return ring_.index_of(det_);
    }

private:
    const ProductRing& ring_;
    unsigned n_;
    std::vector<Element> scratch_;
    ProductElement det_;
};

}  // namespace detail

/// Partial tally over the first-row prefixes [begin, end), each prefix
/// numbered in mixed radix over the row's n entries (entry 0 fastest).
template <FiniteRing Ring>
std::vector<std::uint64_t> tally_prefix_range(const Ring& ring, unsigned n, std::uint64_t begin, std::uint64_t end,
                                              bool reverse = false) {
    using T = typename Ring::value_type;
    const std::uint64_t size = ring.size();
    std::vector<T> elems;
    elems.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) elems.push_back(ring.element_at(reverse ? size - 1 - i : i));

    std::vector<std::uint64_t> counts(size, 0);
    detail::DeterminantKernel<Ring> kernel(ring, n);
    const std::size_t cells = std::size_t{n} * n;
    std::vector<std::uint64_t> idx(cells, 0);
    for (std::uint64_t prefix = begin; prefix < end; ++prefix) {
        std::uint64_t rest = reverse ? (end - 1 - (prefix - begin)) : prefix;
        for (unsigned j = 0; j < n; ++j) {
            idx[j] = rest % size;
            rest /= size;
        }
        std::fill(idx.begin() + n, idx.end(), 0);
        while (true) {
            ++counts[kernel.det_index(elems, idx)];
            std::size_t k = n;
            while (k < cells && ++idx[k] == size) idx[k++] = 0;
            if (k == cells) break;
        }
    }
    return counts;
}

/// Every n x n matrix over the ring, tallied by determinant.
///
/// Work is split by first row; partial tallies are summed, so the result
/// does not depend on scheduling. Throws BudgetExceeded when |R|^(n^2)
/// exceeds the budget.
template <FiniteRing Ring>
Tally exhaustive_tally(const Ring& ring, unsigned n, const EnumerationOptions& options = {}) {
    if (n == 0) throw InvalidParameter("matrix size n must be >= 1");
    const Count needed = matrix_space_size(ring.size(), n);
    if (needed > options.budget) throw BudgetExceeded(needed.str(), options.budget);

    std::uint64_t prefixes = 1;
    for (unsigned j = 0; j < n; ++j) prefixes *= ring.size();

    Tally tally{ring.spec_string(), n, TallyMode::Exhaustive, 0, 0, std::vector<std::uint64_t>(ring.size(), 0)};
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), prefixes));
    if (threads <= 1) {
        tally.counts = tally_prefix_range(ring, n, 0, prefixes, options.reverse);
        return tally;
    }

    const std::uint64_t grain = std::max<std::uint64_t>(1, prefixes / (std::uint64_t{threads} * 16));
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partials(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::vector<std::uint64_t> local(ring.size(), 0);
            while (true) {
                const std::uint64_t begin = next.fetch_add(grain);
                if (begin >= prefixes) break;
                const auto part = tally_prefix_range(ring, n, begin, std::min(prefixes, begin + grain), options.reverse);
                for (std::size_t i = 0; i < part.size(); ++i) local[i] += part[i];
            }
            partials[t] = std::move(local);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partials) {
        for (std::size_t i = 0; i < part.size(); ++i) tally.counts[i] += part[i];
    }
    return tally;
}

/// N uniform matrices from random_matrix, tallied by determinant.
///
/// Samples are split across kSampleShards shards seeded by
/// derive_seed(seed, shard), so the tally is a function of (ring, n, N, seed).
template <FiniteRing Ring>
Tally sampled_tally(const Ring& ring, unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0) {
    if (n == 0) throw InvalidParameter("matrix size n must be >= 1");
    if (samples == 0) throw InvalidParameter("sample count must be >= 1");
    Tally tally{ring.spec_string(), n, TallyMode::Sampled, samples, seed, std::vector<std::uint64_t>(ring.size(), 0)};

    auto run_shard = [&](std::uint64_t shard, std::vector<std::uint64_t>& counts) {
        const std::uint64_t quota = samples / kSampleShards + (shard < samples % kSampleShards ? 1 : 0);
        Rng rng(derive_seed(seed, shard));
        for (std::uint64_t i = 0; i < quota; ++i) {
            const auto m = random_matrix(ring, n, rng);
            ++counts[ring.index_of(determinant(m))];
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), kSampleShards));
    if (workers <= 1) {
        for (std::uint64_t shard = 0; shard < kSampleShards; ++shard) run_shard(shard, tally.counts);
        return tally;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partials(workers, std::vector<std::uint64_t>(ring.size(), 0));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::uint64_t shard = next++; shard < kSampleShards; shard = next++) run_shard(shard, partials[t]);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partials) {
        for (std::size_t i = 0; i < part.size(); ++i) tally.counts[i] += part[i];
    }
    return tally;
}

struct ClassCheck {
    std::vector<unsigned> valuation;
    Count class_size;
    Count expected_per_element;
    Count expected_total;
    std::uint64_t observed_total = 0;
    // Exhaustive mode: every element of the class hit its expected count.
    bool per_element_exact = false;
    // Sampled mode: closed-form probability, N p, binomial sigma and z-score.
    double probability = 0.0;
    double expected_frequency = 0.0;
    double sigma = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string ring;
    unsigned n = 0;
    TallyMode mode = TallyMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<ClassCheck> classes;
    bool pass = false;
    double wall_seconds = 0.0;
    std::string note;
};

inline constexpr double kSigmaBound = 4.0;

struct VerifyOptions {
    TallyMode mode = TallyMode::Exhaustive;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    EnumerationOptions enumeration;
};

VerifyReport verify_ring(const ChainRing& ring, unsigned n, const VerifyOptions& options = {});
VerifyReport verify_ring(const ProductRing& ring, unsigned n, const VerifyOptions& options = {});
// Tallies Z_m with plain modular arithmetic and compares each residue class
// against the product of chain-ring counts over the factorization of m.
VerifyReport verify_integers_mod(std::uint64_t m, unsigned n, const VerifyOptions& options = {});

}  // namespace detcount
