#include <functional>

#include "doctest.h"
#include "wittflag/cli.hpp"
#include "wittflag/relations.hpp"

using namespace wf;

namespace {

// mu_j straight from the definition: sum over compositions a_1 + ... + a_l = j of products of aliased generators.
Poly2 mu_by_definition(const RelationFamily& f, int j) {
    Poly2 sum = Poly2::zero(f.ring);
    int l = static_cast<int>(f.aliased.size());
    std::vector<int> a(l, 0);
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == l) {
            if (left != 0) return;
            Poly2 prod = Poly2::one(f.ring);
            for (int q = 0; q < l; ++q) prod = prod * f.aliased[q].gen(f.ring, a[q]);
            sum += prod;
            return;
        }
        for (int v = 0; v <= std::min(left, f.aliased[p].size); ++v) {
            a[p] = v;
            rec(p + 1, left - v);
        }
    };
    rec(0, j);
    return sum;
}

uint64_t factorial_multinomial(const std::vector<int>& parts) {
    uint64_t r = 1;
    int total = 0;
    for (int p : parts)
        for (int i = 1; i <= p; ++i) {
            ++total;
            r = r * total / i;
        }
    return r;
}

int odd_count(const std::vector<int>& b) {
    int k = 0;
    for (int x : b) k += x % 2;
    return k;
}

}  // namespace

TEST_CASE("worked examples reproduce exactly") {
    for (const auto& item : worked_example_checks()) CHECK_MESSAGE(item.pass, (item.name + ": " + item.detail));
}

TEST_CASE("mu sequence agrees with the defining sum and is palindromic") {
    for (const auto& p : mu_tuples(4, 9)) {
        auto f = mu_family(p.blocks);
        for (int j = 0; j <= f.total; ++j) {
            CHECK(f.mu_full[j] == mu_by_definition(f, j));
            CHECK(f.mu_full[j] == f.mu_full[f.total - j]);
        }
        CHECK(f.mu_full[0].is_one());
    }
}

TEST_CASE("three blocks of size one give mu_1 = 1") {
    auto f = mu_family({1, 1, 1});
    CHECK(f.mu_full[1].is_one());
}

TEST_CASE("reduced members have rank zero") {
    for (const auto& p : mu_tuples(3, 8)) {
        auto f = mu_family(p.blocks);
        for (const auto& mb : f.members) CHECK(rank_of(f, f.reduced(mb.index)) == 0);
    }
    for (const auto& p : side_tuples(3, 8))
        for (auto f : {nu_family(p.m, p.blocks), xi_family(p.m, p.blocks)})
            for (const auto& mb : f.members) CHECK(rank_of(f, f.reduced(mb.index)) == 0);
}

TEST_CASE("sigma symmetry and vanishing identities") {
    for (const auto& p : mu_tuples(6, 12)) {
        auto f = mu_family(p.blocks);
        int k = odd_count(p.blocks), half = 0;
        for (int b : p.blocks) half += b / 2;
        for (int m = -half - 1; m <= f.total - half + 1; ++m) CHECK(sigma(f, m) == sigma(f, k - m));
        if (k >= 2 && k % 2 == 0) CHECK(sigma(f, k / 2).is_zero());
        if (k >= 3 && k % 2 == 1) {
            Poly2 s = Poly2::zero(f.ring);
            for (int j = -half; j <= (k - 1) / 2; ++j) s += sigma(f, j);
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("multinomial matches factorial formula") {
    CHECK(multinomial({1, 2}) == 3);
    CHECK(multinomial({1, 1, 2}) == 12);
    for (const auto& b : partitions(10)) CHECK(multinomial(b) == factorial_multinomial(b));
}

TEST_CASE("regularity and quotient dimension on small families") {
    for (const auto& p : mu_tuples(3, 8)) {
        auto f = mu_family(p.blocks);
        CHECK(verify_regularity(f).status == RegStatus::Regular);
        auto d = family_quotient_dimension(f);
        std::vector<int> halves;
        for (int b : p.blocks) halves.push_back(b / 2);
        CHECK(d.groebner.dim == factorial_multinomial(halves));
    }
    for (const auto& p : side_tuples(3, 8))
        for (auto f : {nu_family(p.m, p.blocks), xi_family(p.m, p.blocks)}) {
            CHECK(verify_regularity(f).status == RegStatus::Regular);
            std::vector<int> halves = {p.m / 2};
            for (int b : p.blocks) halves.push_back(b / 2);
            CHECK(family_quotient_dimension(f).groebner.dim == factorial_multinomial(halves));
        }
}

TEST_CASE("nu_3 reduces over nu_1 with coefficient 1 + mu_1") {
    auto f = nu_family(2, {3, 5});
    auto t = reduce_surplus(f);
    REQUIRE(t.ok);
    bool seen = false;
    for (const auto& row : t.rows)
        if (row.index == 3) {
            seen = true;
            CHECK(row.mode == "SUBRING");
            REQUIRE(row.over == std::vector<int>{1});
            CHECK(row.coeffs[0] == parse_poly(f.ring, "1 + b1_1 + b1_2"));
        }
    CHECK(seen);
}

TEST_CASE("surplus reductions substitute back") {
    for (const auto& p : side_tuples(3, 8)) {
        for (auto f : {mu_family(p.blocks.empty() ? std::vector<int>{p.m} : p.blocks), nu_family(p.m, p.blocks),
                       xi_family(p.m, p.blocks)}) {
            auto t = reduce_surplus(f);
            CHECK_MESSAGE(t.ok, t.failure);
            for (const auto& row : t.rows) {
                Poly2 s = Poly2::zero(f.ring);
                for (size_t i = 0; i < row.over.size(); ++i) s += row.coeffs[i] * f.reduced(row.over[i]);
                CHECK(s == f.reduced(row.index));
            }
        }
    }
}

TEST_CASE("odd alpha witnesses in the xi ideal") {
    for (int m = 1; m <= 5; ++m) {
        auto f = xi_family(m, {2, 3});
        auto w = xi_odd_alpha_witnesses(f);
        CHECK(static_cast<int>(w.size()) == (m + 1) / 2);
        for (const auto& row : w) CHECK(row.status == SolveStatus::Found);
    }
}

TEST_CASE("family construction rejects empty input") {
    CHECK_THROWS_AS(mu_family({}), PolyError);
}
