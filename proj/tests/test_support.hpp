#pragma once

// Test-only oracles, independent of the library's determinant code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace detcount::testing {

// Leibniz expansion over Z_m with plain integer arithmetic.
inline std::uint64_t leibniz_det_mod(const std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t m) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        std::int64_t term = 1;
        for (std::size_t i = 0; i < n; ++i) term = term * static_cast<std::int64_t>(a[i * n + perm[i]]) % static_cast<std::int64_t>(m);
        total += (inversions % 2 ? -term : term);
        total %= static_cast<std::int64_t>(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (total < 0) total += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(total);
}

// Tally of determinants of all n x n matrices over Z_m, by residue.
inline std::vector<std::uint64_t> brute_tally_mod(std::uint64_t m, std::size_t n) {
    std::vector<std::uint64_t> counts(m, 0);
    std::vector<std::uint64_t> a(n * n, 0);
    while (true) {
        ++counts[leibniz_det_mod(a, n, m)];
        std::size_t k = 0;
        while (k < a.size() && ++a[k] == m) a[k++] = 0;
        if (k == a.size()) break;
    }
    return counts;
}

}  // namespace detcount::testing
