#pragma once

#include "esw/witness.hpp"

#include <vector>

namespace esw {

// A decomposition 4/N = 1/x + 1/y + 1/z found by direct enumeration, kept
// sorted so set comparisons are order-free.
struct Triple {
    Int x, y, z;  // x <= y <= z

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator<(const Triple& a, const Triple& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

// Every sorted triple x <= y <= z <= z_cap with 1/x + 1/y + 1/z = 4/N,
// by nested enumeration that never consults the parametrization. Bounds:
// x ranges over (N/4, 3N/4] because 1/x < 4/N <= 3/x when x <= y <= z;
// y over [max(x, 1/(4/N - 1/x)), 2/(4/N - 1/x)]; z is then solved exactly
// and kept iff integral and <= z_cap. Output sorted lexicographically.
// Throws std::invalid_argument unless N >= 2 and z_cap >= 1.
std::vector<Triple> enumerate_triples(const Int& N, const Int& z_cap);

// True iff w's denominators, sorted, appear in enumerate_triples(N, z_cap).
// Throws std::invalid_argument if w fails verify_witness or if
// z_cap < max(x, y, z) -- an undersized cap would make every answer
// meaningless, so it is reported as a distinct condition, never as "false".
bool cross_check(const Int& N, const Witness& w, const Int& z_cap);

}  // namespace esw
