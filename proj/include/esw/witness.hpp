#pragma once

#include "esw/exactmath.hpp"

#include <cstdint>
#include <optional>

namespace esw {

// The decomposition target 4/N with N = n^s.
struct Instance {
    std::uint64_t n = 0;
    std::uint32_t s = 1;
    Int N;  // n^s, cached at construction

    // Throws std::invalid_argument unless n >= 2 and s >= 1.
    Instance(std::uint64_t n, std::uint32_t s);
};

// A solution tuple for 4/N = 1/x + 1/y + 1/z built from the quadratic
// parametrization: q^2 = t^2(4x - N)^2 - 2tNx, y = t(4x - N) - q,
// z = t(4x - N) + q. The numerator 4 is configurable (parameter a below).
struct Witness {
    Int x, t, q, y, z;
};

// Smallest admissible x, floor(N/a) + 1. Guarantees ax - N >= 1.
Int x_lower_bound(const Int& N, std::uint64_t a = 4);

// t^2(ax - N)^2 - 2tNx. May be negative.
Int discriminant(const Int& N, const Int& x, const Int& t, std::uint64_t a = 4);

// max(1, floor(2Nx / (ax - N)^2)): below this t the discriminant is negative.
Int t_min(const Int& N, const Int& x, std::uint64_t a = 4);

// The witness at (x, t) when the discriminant is a nonnegative perfect
// square q^2 and y = t(ax - N) - q stays positive; nullopt otherwise.
// Absence is an expected outcome, not an error.
std::optional<Witness> build_witness(const Int& N, const Int& x, const Int& t,
                                     std::uint64_t a = 4);

// Exact re-verification, all three routes simultaneously:
//   (a) q^2 == t^2(ax - N)^2 - 2tNx
//   (b) y*z == 2tNx  and  y + z == 2t(ax - N)
//   (c) 1/x + 1/y + 1/z == a/N as reduced rationals
bool verify_witness(const Int& N, const Witness& w, std::uint64_t a = 4);

// 1/x + 1/y + 1/z as an exact rational.
Rat witness_sum(const Witness& w);

}  // namespace esw
