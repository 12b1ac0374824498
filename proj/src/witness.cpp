#include "esw/witness.hpp"

#include <cassert>
#include <stdexcept>

namespace esw {

Instance::Instance(std::uint64_t n_, std::uint32_t s_) : n(n_), s(s_) {
    if (n < 2) throw std::invalid_argument("Instance: n must be >= 2");
    if (s < 1) throw std::invalid_argument("Instance: s must be >= 1");
    mpz_ui_pow_ui(N.get_mpz_t(), n, s);
}

Int x_lower_bound(const Int& N, std::uint64_t a) {
    assert(N >= 2 && a >= 1);
    return N / a + 1;
}

Int discriminant(const Int& N, const Int& x, const Int& t, std::uint64_t a) {
    const Int d = a * x - N;
    return t * t * d * d - 2 * t * N * x;
}

Int t_min(const Int& N, const Int& x, std::uint64_t a) {
    const Int d = a * x - N;
    assert(d >= 1);  // holds for every x >= x_lower_bound(N, a)
    Int lo = (2 * N * x) / (d * d);
    return lo < 1 ? Int(1) : lo;
}

std::optional<Witness> build_witness(const Int& N, const Int& x, const Int& t,
                                     std::uint64_t a) {
    const Int delta = discriminant(N, x, t, a);
    if (sgn(delta) < 0) return std::nullopt;
    std::optional<Int> q = perfect_square_root(delta);
    if (!q) return std::nullopt;
    const Int td = t * (a * x - N);
    Int y = td - *q;
    if (sgn(y) <= 0) return std::nullopt;
    Int z = td + *q;
    if (sgn(z) <= 0) return std::nullopt;  // implied by y > 0, kept anyway
    return Witness{x, t, std::move(*q), std::move(y), std::move(z)};
}

bool verify_witness(const Int& N, const Witness& w, std::uint64_t a) {
    if (sgn(w.x) <= 0 || sgn(w.t) <= 0 || sgn(w.q) < 0 || sgn(w.y) <= 0 ||
        sgn(w.z) <= 0)
        return false;
    const Int d = a * w.x - N;
    const Int two_t_n_x = 2 * w.t * N * w.x;
    if (w.q * w.q != w.t * w.t * d * d - two_t_n_x) return false;
    if (w.y * w.z != two_t_n_x) return false;
    if (w.y + w.z != 2 * w.t * d) return false;
    return witness_sum(w) == Rat(a, N);
}

Rat witness_sum(const Witness& w) {
    Rat s = Rat::unit(w.x);
    s += Rat::unit(w.y);
    s += Rat::unit(w.z);
    return s;
}

}  // namespace esw
