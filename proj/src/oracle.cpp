#include "esw/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace esw {

std::vector<Triple> enumerate_triples(const Int& N, const Int& z_cap) {
    if (N < 2) throw std::invalid_argument("enumerate_triples: N must be >= 2");
    if (z_cap < 1)
        throw std::invalid_argument("enumerate_triples: z_cap must be >= 1");

    std::vector<Triple> out;
    // 1/x < 4/N forces x > N/4; x <= y <= z forces 4/N <= 3/x, i.e.
    // x <= 3N/4. Both are exact integer bounds below.
    Int x = N / 4 + 1;
    const Int x_hi = (3 * N) / 4;
    for (; x <= x_hi; ++x) {
        // Remaining mass r = 4/N - 1/x = (4x - N)/(Nx) = p/q reduced.
        Int p = 4 * x - N;
        Int q = N * x;
        const Int g = gcd(p, q);
        p /= g;
        q /= g;
        // y > q/p (so that 1/z = p/q - 1/y stays positive) and
        // 2/y >= p/q (else even z = y cannot close the gap).
        Int y = q / p + 1;
        if (y < x) y = x;
        const Int y_hi = (2 * q) / p;
        for (; y <= y_hi; ++y) {
            const Int num = q * y;
            const Int den = p * y - q;
            if (den <= 0) continue;  // y == q/p exactly: no finite z
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
            Int z = num / den;
            if (z <= z_cap) out.push_back({x, y, std::move(z)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool cross_check(const Int& N, const Witness& w, const Int& z_cap) {
    if (!verify_witness(N, w))
        throw std::invalid_argument("cross_check: witness fails verification");
    Int a = w.x, b = w.y, c = w.z;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (z_cap < c)
        throw std::invalid_argument(
            "cross_check: z_cap smaller than the witness's largest "
            "denominator; enumeration would be vacuous");
    const std::vector<Triple> all = enumerate_triples(N, z_cap);
    const Triple want{std::move(a), std::move(b), std::move(c)};
    return std::binary_search(all.begin(), all.end(), want);
}

}  // namespace esw
