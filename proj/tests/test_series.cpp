#include <random>

#include "doctest.h"
#include "wittflag/series.hpp"

using namespace wf;

namespace {

// Multiply a window by (1 + t^-1)^e, dropping the lowest e exponents that would need bits below the window.
WindowedSeries times_one_plus(const WindowedSeries& w, int e) {
    WindowedSeries cur = w;
    for (int i = 0; i < e; ++i) {
        WindowedSeries next(cur.lo() + 1, cur.hi());
        for (int x = next.lo(); x <= next.hi(); ++x) next.set(x, cur.bit(x) ^ cur.bit(x + 1));
        cur = next;
    }
    return cur;
}

// Long division of a Laurent numerator by (1 + t^-1)^e, coefficient by coefficient from the top.
WindowedSeries long_division(const std::vector<int>& num, int e, int lo, int hi) {
    // d = (1 + t^-1)^e has coefficients C(e, i) mod 2 at t^-i.
    int top = num.empty() ? lo - 1 : num.back();
    WindowedSeries rem(lo - e, std::max(top, hi));
    for (int x : num)
        if (x >= rem.lo()) rem.flip(x);
    WindowedSeries quo(lo, hi);
    for (int x = std::max(top, hi); x >= lo; --x) {
        if (!rem.bit(x)) continue;
        if (x <= hi) quo.set(x, 1);
        for (int i = 0; i <= e; ++i)
            if (binom_mod2(e, i) && x - i >= rem.lo()) rem.flip(x - i);
    }
    return quo;
}

WindowedSeries from_bits(int lo, int hi, const std::vector<int>& support) {
    WindowedSeries w(lo, hi);
    for (int x : support) w.set(x, 1);
    return w;
}

}  // namespace

TEST_CASE("geometric expansion of 1/(1+t^-1)") {
    auto w = expand(RationalSeries::monomial(0, 1), -3, 0);
    CHECK(w.support() == std::vector<int>{-3, -2, -1, 0});
}

TEST_CASE("(1+t^-1)/(1+t^-1) expands to 1") {
    auto w = expand(RationalSeries::laurent({-1, 0}, 1), -5, 2);
    CHECK(w.support() == std::vector<int>{0});
}

TEST_CASE("expansion agrees with long division") {
    std::mt19937 rng(13);
    for (int it = 0; it < 200; ++it) {
        int e = static_cast<int>(rng() % 5);
        std::vector<int> num;
        for (int x = -3; x <= 4; ++x)
            if (rng() % 2) num.push_back(x);
        auto r = RationalSeries::laurent(num, e);
        CHECK(expand(r, -12, 6) == long_division(r.numerator, e, -12, 6));
    }
    auto p5 = RationalSeries::monomial(2, 2);
    CHECK(expand(p5, -10, 4) == long_division(p5.numerator, 2, -10, 4));
}

TEST_CASE("multiplying back reproduces the numerator on the window interior") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        int e = static_cast<int>(rng() % 6);
        std::vector<int> num;
        for (int x = -2; x <= 3; ++x)
            if (rng() % 2) num.push_back(x);
        auto r = RationalSeries::laurent(num, e);
        auto back = times_one_plus(expand(r, -15, 5), e);
        for (int x = back.lo(); x <= back.hi(); ++x) {
            int want = 0;
            for (int y : r.numerator) want ^= y == x;
            CHECK(back.bit(x) == want);
        }
    }
}

TEST_CASE("psi of t^0 is sigma_0") {
    auto ring = series_ring({3, 5});
    auto w = from_bits(ring.lo(), ring.hi(), {0});
    CHECK(psi(2, ring, w) == sigma(ring.mu, 0));
}

TEST_CASE("psi kills t^(k/2) for even k") {
    auto ring = series_ring({3, 5});
    REQUIRE(ring.k == 2);
    CHECK(psi(2, ring, from_bits(ring.lo(), ring.hi(), {1})).is_zero());
}

TEST_CASE("psi kills the leading odd member for k = 3") {
    auto ring = series_ring({1, 1, 1});
    REQUIRE(ring.k == 3);
    auto fam = kernel_family(3, 0);
    REQUIRE(!fam.empty());
    CHECK(fam[0].label == "P3");
    const auto& r = fam[0].series;
    auto w = expand(r, ring.lo() - 4, std::max(ring.hi(), r.max_exp()));
    CHECK(psi(3, ring, w).is_zero());
    CHECK(w.top() == fam[0].expected_top);
}

TEST_CASE("psi is additive") {
    std::mt19937 rng(21);
    for (const auto& b : std::vector<std::vector<int>>{{3, 5}, {1, 1, 1}, {2, 3, 3}, {1, 2, 4}}) {
        auto ring = series_ring(b);
        for (int it = 0; it < 30; ++it) {
            WindowedSeries p(ring.lo() - 2, ring.hi() + 2), q(ring.lo() - 2, ring.hi() + 2);
            for (int x = p.lo(); x <= p.hi(); ++x) {
                p.set(x, rng() % 2);
                q.set(x, rng() % 2);
            }
            CHECK(psi(ring.k, ring, p + q) == psi(ring.k, ring, p) + psi(ring.k, ring, q));
        }
    }
}

TEST_CASE("psi refuses a window that starts too high") {
    auto ring = series_ring({3, 5});
    WindowedSeries w(ring.lo() + 1, ring.hi());
    CHECK_THROWS_AS(psi(2, ring, w), WindowTooNarrow);
    CHECK_THROWS_AS(psi(3, ring, WindowedSeries(ring.lo(), ring.hi())), PolyError);
}

TEST_CASE("kernel family contents") {
    auto f3 = kernel_family(3, 2);
    CHECK(f3[0].label == "P3");
    CHECK(f3[0].triangular);
    int pairs3 = 0;
    for (const auto& m : f3) pairs3 += !m.triangular;
    CHECK(pairs3 == 4);  // s = -1..2

    auto f4 = kernel_family(4, 1);
    CHECK(f4[0].label == "t^2");
    CHECK(f4[1].label == "P3/(1+t^-1)^1");
    CHECK(f4[1].expected_top == 1);

    auto f5 = kernel_family(5, 0);
    CHECK(f5[0].label == "P5");
    CHECK(f5[1].label == "P3/(1+t^-1)^2");
    CHECK(f5[0].expected_top == 2);
    CHECK(f5[1].expected_top == 1);
    for (const auto& m : f5)
        if (!m.triangular) CHECK(m.series.numerator.size() == 2);
}

TEST_CASE("kernel members vanish under psi") {
    for (auto [k, b] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {1, 1, 1}}, {2, {3, 5}}, {4, {1, 1, 1, 1}}, {5, {1, 1, 1, 1, 1}}, {3, {2, 3, 3, 3}}, {0, {2, 4}}}) {
        auto rep = verify_kernel(k, b, 6);
        CHECK_MESSAGE(rep.pass, (rep.failures.empty() ? "" : rep.failures.front()));
        CHECK(rep.checked > 0);
    }
    CHECK_FALSE(verify_kernel(2, {1, 1, 1}, 2).pass);
}

TEST_CASE("psi recursion over the last odd block") {
    std::mt19937 rng(29);
    for (const auto& b : std::vector<std::vector<int>>{{1, 1}, {3, 5}, {1, 1, 1}, {2, 3, 3}, {1, 2, 3}}) {
        for (int it = 0; it < 20; ++it) {
            std::vector<int> q;
            for (int x = -4; x <= 4; ++x)
                if (rng() % 2) q.push_back(x);
            CHECK(psi_recursion_holds(b, q));
        }
    }
}
