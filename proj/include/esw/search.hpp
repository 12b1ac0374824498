#pragma once

#include "esw/witness.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace esw {

enum class Strategy {
    FirstFound,  // reference-script iteration order: x ascending, t ascending
    SmallestX,   // minimal x over the search box (coincides with FirstFound
                 // because x already ascends)
};

struct SearchConfig {
    std::uint64_t x_multiplier = 300;  // x in [floor(N/a)+1, x_multiplier*N)
    std::uint64_t t_window = 500;      // t in [t_min, t_min + t_window)
    std::uint64_t numerator_a = 4;     // the 4 of 4/N
    Strategy strategy = Strategy::FirstFound;
    std::uint64_t time_budget_ms = 0;  // per-n wall clock, 0 = unlimited

    // Throws std::invalid_argument unless x_multiplier, t_window and
    // numerator_a are all >= 1.
    void validate() const;
};

enum class SearchStatus { Found, Exhausted, TimedOut };

struct ScanOutcome {
    std::uint64_t n = 0;
    std::optional<Witness> witness;
    std::uint64_t x_tried = 0;
    std::uint64_t t_tried = 0;
    SearchStatus status = SearchStatus::Exhausted;
};

struct ScanReport {
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::uint32_t s = 1;
    std::vector<ScanOutcome> outcomes;  // ascending n
    std::uint64_t captured = 0;
    double success_rate = 0.0;  // percent of [n_min, n_max] captured
    std::vector<std::uint64_t> failed_n;
};

// Bounded search for one instance, with effort counters. The time budget,
// when set, is checked between x iterations.
ScanOutcome search_one(const Instance& inst, const SearchConfig& cfg);

// First witness in the fixed iteration order, or nullopt on exhaustion.
// Exhaustion says nothing about the conjecture, only about the bounds.
std::optional<Witness> find_first_witness(const Instance& inst,
                                          const SearchConfig& cfg);

// Resumability hooks. lookup may hand back a previously stored outcome for
// n (skipping the search); store sees every freshly computed one. Either may
// be empty. Both run on worker threads, but each n is hit at most once, so
// a file-per-n backing store needs no locking of its own.
struct ScanHooks {
    std::function<std::optional<ScanOutcome>(std::uint64_t n)> lookup;
    std::function<void(const ScanOutcome&)> store;
};

// Searches every n in [n_min, n_max], possibly across threads (each n is
// independent); outcomes are merged in ascending n so reports do not depend
// on the schedule. threads == 0 means hardware concurrency.
ScanReport scan_range(std::uint64_t n_min, std::uint64_t n_max, std::uint32_t s,
                      const SearchConfig& cfg, unsigned threads = 1,
                      const ScanHooks& hooks = {});

// The half-open [t_min, t_min + t_window) window scanned at a given x.
std::pair<Int, Int> effective_t_range(const Int& N, const Int& x,
                                      const SearchConfig& cfg);

}  // namespace esw
