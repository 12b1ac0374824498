#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esw/series.hpp"
#include "testutil.hpp"

using namespace esw;

namespace {

SearchConfig bounds(std::uint64_t x_multiplier, std::uint64_t t_window) {
    SearchConfig cfg;
    cfg.x_multiplier = x_multiplier;
    cfg.t_window = t_window;
    return cfg;
}

}  // namespace

TEST_CASE("zeta_partial on pinned values") {
    CHECK(zeta_partial(2, 3) == Rat(13, 36));
    CHECK(zeta_partial(3, 2) == Rat(1, 8));
    CHECK(zeta_partial(2, 10) == Rat(698249, 1270080));
    CHECK_THROWS_AS(zeta_partial(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(zeta_partial(2, 1), std::invalid_argument);
}

TEST_CASE("zeta_partial is monotone in n_max and antitone in s") {
    Rat prev;
    for (std::uint64_t m = 2; m <= 40; ++m) {
        const Rat cur = zeta_partial(2, m);
        CHECK(cur > prev);
        prev = cur;
    }
    for (std::uint32_t s = 2; s <= 8; ++s)
        CHECK(zeta_partial(s + 1, 40) < zeta_partial(s, 40));
}

TEST_CASE("the exact partial sum and the float-accumulated one render apart") {
    // The reference loop adds doubles term by term; its printed value
    // 0.20203482859170052 is NOT the nearest double of the exact sum, which
    // renders as ...036. The report keeps both; conflating them would make
    // the reproduction test meaningless.
    CHECK(repr_double(to_double(zeta_partial(3, 150))) ==
          "0.20203482859170036");
    const SeriesReport rep = compare_series(3, 150, SearchConfig{});
    CHECK(repr_double(rep.left_float) == "0.20203482859170052");
    CHECK(repr_double(rep.right_float) == "0.20203482859170052");
    CHECK(rep.left_float == rep.right_float);
    CHECK(rep.abs_error_float == 0.0);
    CHECK(repr_double(rep.left_exact_double) == "0.20203482859170036");
}

TEST_CASE("zeta_m_partial accumulates exact witness sums") {
    const auto [half, fail_zeta] = zeta_m_partial(3, 2, SearchConfig{});
    CHECK(half == Rat(1, 2));  // witness (3,3,0,12,12): 1/3 + 1/12 + 1/12
    CHECK(fail_zeta.empty());

    const auto [one, fail_s2] = zeta_m_partial(2, 2, SearchConfig{});
    CHECK(one == Rat(1));  // N = 4 witness (2,1,0,4,4): 1/2 + 1/4 + 1/4
    CHECK(fail_s2.empty());

    CHECK_THROWS_AS(zeta_m_partial(1, 10, SearchConfig{}),
                    std::invalid_argument);
}

TEST_CASE("the minimal box still captures N = 8 (no failure to provoke)") {
    // x_multiplier = 1, t_window = 1 leaves x in [3, 8), one t each; x = 3,
    // t = 3 already yields (3,3,0,12,12), so the sum is 1/2 and nothing fails
    const auto [sum, failures] = zeta_m_partial(3, 2, bounds(1, 1));
    CHECK(sum == Rat(1, 2));
    CHECK(failures.empty());
}

TEST_CASE("ns without witnesses contribute nothing and are reported") {
    // n = 13 is the first genuine casualty of the (1, 1) box for s = 3
    const auto [with13, failures] = zeta_m_partial(3, 13, bounds(1, 1));
    CHECK(failures == std::vector<std::uint64_t>{13});
    const auto [without13, none] = zeta_m_partial(3, 12, bounds(1, 1));
    CHECK(none.empty());
    CHECK(with13 == without13);  // empty-sum convention: 13 added nothing
}

TEST_CASE("compare_series proves the identity exactly when capture is full") {
    const SeriesReport rep = compare_series(2, 10, SearchConfig{});
    CHECK(rep.s == 2);
    CHECK(rep.n_max == 10);
    CHECK(rep.left_exact == Rat(698249, 1270080));
    CHECK(rep.right_exact == rep.left_exact);
    CHECK(rep.exact_equal);
    CHECK(rep.failures.empty());
    CHECK(rep.zeta_m_exact == Rat(4) * rep.left_exact);
    CHECK(rep.four_zeta_exact == rep.zeta_m_exact);
    CHECK(rep.tail_bound == Rat(1, 10));
    CHECK(rep.abs_error_float == 0.0);

    const SeriesReport single = compare_series(3, 2, SearchConfig{});
    CHECK(single.left_exact == Rat(1, 8));
    CHECK(single.right_exact == Rat(1, 8));
    CHECK(single.exact_equal);
}

TEST_CASE("compare_series reports inequality when a term is missing") {
    const SeriesReport rep = compare_series(3, 13, bounds(1, 1));
    CHECK(rep.failures == std::vector<std::uint64_t>{13});
    CHECK_FALSE(rep.exact_equal);
    // the gap is exactly the missing 1/13^3 term
    CHECK(rep.left_exact - rep.right_exact == Rat(1, 2197));
}

TEST_CASE("identity holds for every s and n_max tried (term-level law)") {
    for (std::uint32_t s = 2; s <= 5; ++s) {
        const SeriesReport rep = compare_series(s, 40, SearchConfig{});
        CHECK(rep.failures.empty());
        CHECK(rep.exact_equal);
        CHECK(rep.abs_error_float == 0.0);
    }
}

TEST_CASE("compare_series is independent of thread count") {
    const SeriesReport a = compare_series(2, 60, SearchConfig{}, 1);
    const SeriesReport b = compare_series(2, 60, SearchConfig{}, 4);
    CHECK(a.left_exact == b.left_exact);
    CHECK(a.right_exact == b.right_exact);
    CHECK(a.left_float == b.left_float);
    CHECK(a.right_float == b.right_float);
    CHECK(a.abs_error_float == b.abs_error_float);
}

TEST_CASE("tail_bound values and dominance over true tails") {
    CHECK(tail_bound(2, 10) == Rat(1, 10));
    CHECK(tail_bound(3, 10) == Rat(1, 200));
    CHECK(tail_bound(2, 1) == Rat(1));
    CHECK_THROWS_AS(tail_bound(1, 10), std::invalid_argument);

    // bound dominates any truncated remainder we can compute exactly
    for (std::uint32_t s = 2; s <= 4; ++s)
        for (std::uint64_t m : {5ULL, 10ULL, 25ULL})
            CHECK(zeta_partial(s, 8 * m) - zeta_partial(s, m) <
                  tail_bound(s, m));
}
