#include "esw/series.hpp"

#include <cmath>
#include <stdexcept>

namespace esw {

namespace {

void check_series_args(std::uint32_t s, std::uint64_t n_max) {
    if (s < 2) throw std::invalid_argument("series: s must be >= 2");
    if (n_max < 2) throw std::invalid_argument("series: n_max must be >= 2");
}

Int pow_int(std::uint64_t base, std::uint32_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

Rat zeta_partial(std::uint32_t s, std::uint64_t n_max) {
    check_series_args(s, n_max);
    Rat sum;
    for (std::uint64_t n = 2; n <= n_max; ++n) sum += Rat::unit(pow_int(n, s));
    return sum;
}

std::pair<Rat, std::vector<std::uint64_t>> zeta_m_partial(
    std::uint32_t s, std::uint64_t n_max, const SearchConfig& cfg,
    unsigned threads, const ScanHooks& hooks) {
    check_series_args(s, n_max);
    const ScanReport scan = scan_range(2, n_max, s, cfg, threads, hooks);
    Rat sum;  // ordered fold over ascending n
    for (const ScanOutcome& out : scan.outcomes)
        if (out.witness) sum += witness_sum(*out.witness);
    return {std::move(sum), scan.failed_n};
}

SeriesReport compare_series(std::uint32_t s, std::uint64_t n_max,
                            const SearchConfig& cfg, unsigned threads,
                            const ScanHooks& hooks) {
    check_series_args(s, n_max);
    SeriesReport rep;
    rep.s = s;
    rep.n_max = n_max;

    const ScanReport scan = scan_range(2, n_max, s, cfg, threads, hooks);
    rep.failures = scan.failed_n;

    Rat left, zeta_m;
    double left_f = 0.0, right_f = 0.0;
    for (const ScanOutcome& out : scan.outcomes) {
        const Rat term = Rat::unit(pow_int(out.n, s));
        left += term;
        left_f += to_double(term);
        if (out.witness) {
            const Witness& w = *out.witness;
            zeta_m += witness_sum(w);
            right_f += (to_double(Rat::unit(w.x)) + to_double(Rat::unit(w.y)) +
                        to_double(Rat::unit(w.z))) /
                       4.0;
        }
    }

    rep.left_exact = left;
    rep.zeta_m_exact = zeta_m;
    rep.right_exact = zeta_m / Rat(4);
    rep.four_zeta_exact = Rat(4) * left;
    rep.exact_equal = rep.left_exact == rep.right_exact;
    rep.left_float = left_f;
    rep.right_float = right_f;
    rep.abs_error_float = std::fabs(left_f - right_f);
    rep.left_exact_double = to_double(rep.left_exact);
    rep.right_exact_double = to_double(rep.right_exact);
    rep.tail_bound = tail_bound(s, n_max);
    return rep;
}

Rat tail_bound(std::uint32_t s, std::uint64_t n_max) {
    if (s < 2) throw std::invalid_argument("tail_bound: s must be >= 2");
    if (n_max < 1) throw std::invalid_argument("tail_bound: n_max must be >= 1");
    return Rat(1, (s - 1) * pow_int(n_max, s - 1));
}

}  // namespace esw
