#pragma once

#include "esw/exactmath.hpp"

#include <cstdint>
#include <optional>

namespace esw::kernels {

// Outcome of scanning one x's whole t window.
struct TWindowHit {
    Int t, q;
};

struct TWindowResult {
    std::optional<TWindowHit> hit;
    std::uint64_t t_tried = 0;  // iterations consumed; stops at the hit
};

// Reference kernel: arbitrary-precision scan of t in [t_min, t_min + window)
// for the first t making t^2(ax-N)^2 - 2tNx a perfect square with y > 0.
// Correct at any magnitude.
TWindowResult scan_t_window_wide(const Int& N, const Int& x,
                                 std::uint64_t window, std::uint64_t a);

// Fast kernel: identical scan in unsigned 128-bit arithmetic. Callers must
// have established fits_narrow for the instance; results are bit-identical
// to the wide kernel (equivalence-tested).
TWindowResult scan_t_window_narrow(u64 N, u64 x, std::uint64_t window,
                                   std::uint64_t a);

// True when every intermediate of every (x, t) pair the bounded search can
// visit for this N fits the narrow kernel. Conservative over
// x < x_multiplier*N and the full t window.
bool fits_narrow(const Int& N, std::uint64_t x_multiplier,
                 std::uint64_t window, std::uint64_t a);

}  // namespace esw::kernels
