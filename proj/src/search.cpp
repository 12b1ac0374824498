#include "esw/search.hpp"

#include "esw/kernels.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace esw {

namespace {

using Clock = std::chrono::steady_clock;

bool past_deadline(const std::optional<Clock::time_point>& deadline) {
    return deadline && Clock::now() >= *deadline;
}

ScanOutcome search_narrow(const Instance& inst, const SearchConfig& cfg,
                          const std::optional<Clock::time_point>& deadline) {
    ScanOutcome out;
    out.n = inst.n;
    const u64 N = mpz_get_ui(inst.N.get_mpz_t());
    const u64 x_lo = N / cfg.numerator_a + 1;
    const u128 x_hi = (u128)cfg.x_multiplier * N;  // exclusive
    for (u128 x = x_lo; x < x_hi; ++x) {
        ++out.x_tried;
        auto r = kernels::scan_t_window_narrow(N, static_cast<u64>(x),
                                               cfg.t_window, cfg.numerator_a);
        out.t_tried += r.t_tried;
        if (r.hit) {
            out.witness = build_witness(inst.N, Int(static_cast<unsigned long>(x)),
                                        r.hit->t, cfg.numerator_a);
            assert(out.witness);
            out.status = SearchStatus::Found;
            return out;
        }
        if (past_deadline(deadline)) {
            out.status = SearchStatus::TimedOut;
            return out;
        }
    }
    out.status = SearchStatus::Exhausted;
    return out;
}

ScanOutcome search_wide(const Instance& inst, const SearchConfig& cfg,
                        const std::optional<Clock::time_point>& deadline) {
    ScanOutcome out;
    out.n = inst.n;
    const Int x_hi = cfg.x_multiplier * inst.N;
    for (Int x = x_lower_bound(inst.N, cfg.numerator_a); x < x_hi; ++x) {
        ++out.x_tried;
        auto r = kernels::scan_t_window_wide(inst.N, x, cfg.t_window,
                                             cfg.numerator_a);
        out.t_tried += r.t_tried;
        if (r.hit) {
            out.witness = build_witness(inst.N, x, r.hit->t, cfg.numerator_a);
            assert(out.witness);
            out.status = SearchStatus::Found;
            return out;
        }
        if (past_deadline(deadline)) {
            out.status = SearchStatus::TimedOut;
            return out;
        }
    }
    out.status = SearchStatus::Exhausted;
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    if (x_multiplier < 1) throw std::invalid_argument("x_multiplier must be >= 1");
    if (t_window < 1) throw std::invalid_argument("t_window must be >= 1");
    if (numerator_a < 1) throw std::invalid_argument("numerator_a must be >= 1");
}

ScanOutcome search_one(const Instance& inst, const SearchConfig& cfg) {
    cfg.validate();
    std::optional<Clock::time_point> deadline;
    if (cfg.time_budget_ms > 0)
        deadline = Clock::now() + std::chrono::milliseconds(cfg.time_budget_ms);
    // Both strategies share one pass: x ascends, so the first x that yields
    // any witness is also the smallest such x, and the kernel reports its
    // lowest t. The strategy only shows up in run manifests.
    if (kernels::fits_narrow(inst.N, cfg.x_multiplier, cfg.t_window,
                             cfg.numerator_a))
        return search_narrow(inst, cfg, deadline);
    return search_wide(inst, cfg, deadline);
}

std::optional<Witness> find_first_witness(const Instance& inst,
                                          const SearchConfig& cfg) {
    return search_one(inst, cfg).witness;
}

ScanReport scan_range(std::uint64_t n_min, std::uint64_t n_max, std::uint32_t s,
                      const SearchConfig& cfg, unsigned threads,
                      const ScanHooks& hooks) {
    if (n_min < 2) throw std::invalid_argument("scan_range: n_min must be >= 2");
    if (n_max < n_min) throw std::invalid_argument("scan_range: empty range");
    if (s < 1) throw std::invalid_argument("scan_range: s must be >= 1");
    cfg.validate();

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t total = n_max - n_min + 1;

    ScanReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    report.s = s;
    report.outcomes.resize(total);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= total) return;
            const std::uint64_t n = n_min + i;
            if (hooks.lookup) {
                if (std::optional<ScanOutcome> cached = hooks.lookup(n)) {
                    assert(cached->n == n);
                    report.outcomes[i] = std::move(*cached);
                    continue;
                }
            }
            ScanOutcome out = search_one(Instance(n, s), cfg);
            if (hooks.store) hooks.store(out);
            report.outcomes[i] = std::move(out);
        }
    };

    if (threads <= 1 || total == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        const unsigned count = static_cast<unsigned>(
            std::min<std::uint64_t>(threads, total));
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    }

    for (const ScanOutcome& out : report.outcomes) {
        if (out.status == SearchStatus::Found)
            ++report.captured;
        else
            report.failed_n.push_back(out.n);
    }
    report.success_rate = 100.0 * static_cast<double>(report.captured) /
                          static_cast<double>(total);
    return report;
}

std::pair<Int, Int> effective_t_range(const Int& N, const Int& x,
                                      const SearchConfig& cfg) {
    Int lo = t_min(N, x, cfg.numerator_a);
    Int hi = lo + cfg.t_window;
    return {std::move(lo), std::move(hi)};
}

}  // namespace esw
