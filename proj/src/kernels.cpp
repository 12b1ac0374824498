#include "esw/kernels.hpp"

#include <cassert>

namespace esw::kernels {

namespace {

Int int_from_u128(u128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    return (hi << 64) + static_cast<unsigned long>(v & ~u64{0});
}

}  // namespace

TWindowResult scan_t_window_wide(const Int& N, const Int& x,
                                 std::uint64_t window, std::uint64_t a) {
    const Int d = a * x - N;
    assert(d >= 1);
    const Int A = d * d;
    const Int B = 2 * N * x;
    Int t = B / A;
    if (t < 1) t = 1;

    TWindowResult res;
    for (std::uint64_t i = 0; i < window; ++i, ++t) {
        ++res.t_tried;
        Int tA = t * A;
        if (tA < B) continue;  // discriminant negative; at most the first t
        Int delta = t * (tA - B);
        if (!square_candidate(delta)) continue;
        Int q = isqrt(delta);
        if (q * q != delta) continue;
        if (t * d <= q) continue;  // y must stay positive
        res.hit = TWindowHit{t, std::move(q)};
        break;
    }
    return res;
}

TWindowResult scan_t_window_narrow(u64 N, u64 x, std::uint64_t window,
                                   std::uint64_t a) {
    const u128 d = (u128)a * x - N;
    assert(d >= 1);
    const u128 A = d * d;
    const u128 B = (u128)2 * N * x;
    u128 t = B / A;
    if (t == 0) t = 1;

    TWindowResult res;
    const u128 t_end = t + window;
    for (; t != t_end; ++t) {
        ++res.t_tried;
        const u128 tA = t * A;
        if (tA < B) continue;
        const u128 delta = t * (tA - B);
        if (!square_candidate_u128(delta)) continue;
        const u64 q = isqrt_u128(delta);
        if ((u128)q * q != delta) continue;
        if (t * d <= q) continue;
        res.hit = TWindowHit{int_from_u128(t), Int(static_cast<unsigned long>(q))};
        break;
    }
    return res;
}

bool fits_narrow(const Int& N, std::uint64_t x_multiplier, std::uint64_t window,
                 std::uint64_t a) {
    // Over the whole search box: d = ax - N < a*x_max, t*d <= 2Nx/d + w*d
    // <= 2Nx + w*d_max. Keeping both below 2^63 keeps every product,
    // including delta = t(tA - B) <= (td)^2, below 2^126.
    const Int x_max = x_multiplier * N;
    const Int d_max = a * x_max;
    const Int td_max = 2 * N * x_max + window * d_max;
    return mpz_sizeinbase(d_max.get_mpz_t(), 2) <= 63 &&
           mpz_sizeinbase(td_max.get_mpz_t(), 2) <= 63;
}

}  // namespace esw::kernels
