#pragma once

#include "esw/search.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace esw {

// Exact and floating comparison of the two partial sums
//   left  = sum_{n=2}^{n_max} 1/n^s
//   right = (sum over found witnesses of 1/x + 1/y + 1/z) / 4.
// The float fields replay the reference computation in IEEE doubles term by
// term, which is the only way to reproduce its printed digits; the exact
// fields are the actual identity check.
struct SeriesReport {
    std::uint32_t s = 2;
    std::uint64_t n_max = 2;
    Rat left_exact;
    Rat right_exact;
    Rat zeta_m_exact;     // the undivided witness-term sum (4x orientation)
    Rat four_zeta_exact;  // 4 * left_exact (4x orientation)
    bool exact_equal = false;
    double left_float = 0;
    double right_float = 0;
    double abs_error_float = 0;
    double left_exact_double = 0;   // nearest double of left_exact
    double right_exact_double = 0;  // nearest double of right_exact
    Rat tail_bound;
    std::vector<std::uint64_t> failures;  // n with no witness within bounds
};

// Exact sum_{n=2}^{n_max} 1/n^s. Requires s >= 2 (s = 1 diverges) and
// n_max >= 2.
Rat zeta_partial(std::uint32_t s, std::uint64_t n_max);

// Exact sum of 1/x + 1/y + 1/z over the witnesses found for n in [2, n_max],
// plus the list of n that found none; those contribute nothing to the sum.
std::pair<Rat, std::vector<std::uint64_t>> zeta_m_partial(
    std::uint32_t s, std::uint64_t n_max, const SearchConfig& cfg,
    unsigned threads = 1, const ScanHooks& hooks = {});

// Full report; see SeriesReport.
SeriesReport compare_series(std::uint32_t s, std::uint64_t n_max,
                            const SearchConfig& cfg, unsigned threads = 1,
                            const ScanHooks& hooks = {});

// Rigorous upper bound on the truncation tail sum_{n > n_max} 1/n^s via the
// integral test: n_max^(1-s) / (s-1).
Rat tail_bound(std::uint32_t s, std::uint64_t n_max);

}  // namespace esw
