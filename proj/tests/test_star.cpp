#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "wittflag/star_monomial.hpp"

using namespace wf;

namespace {

struct Case {
    RepType t;
    int m;
    std::vector<int> blocks;
};

std::vector<Case> sample_rings() {
    return {{RepType::A, 0, {1, 2}}, {RepType::A, 0, {2, 2}}, {RepType::A, 0, {3, 5}}, {RepType::A, 0, {1, 1, 1}},
            {RepType::B, 0, {2}},    {RepType::B, 0, {1, 2}}, {RepType::B, 2, {}},     {RepType::B, 1, {2, 2}},
            {RepType::B, 2, {3}},    {RepType::C, 1, {1}},    {RepType::C, 2, {2}},    {RepType::C, 0, {4}}};
}

// All monomials of degree <= bound with Laurent exponents in [-1, 1].
std::vector<SMono> small_monomials(const StarRing& r, int bound) {
    std::vector<SMono> out;
    SMono e = r.one();
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r.size()) {
            out.push_back(e);
            return;
        }
        const auto& g = r.gens[i];
        int lo = g.laurent ? -1 : 0, hi = g.laurent ? 1 : (g.cap > 0 ? std::min(left, g.cap - 1) : left);
        for (int k = lo; k <= hi; ++k) {
            e[i] = k;
            rec(i + 1, g.laurent ? left : left - k);
        }
        e[i] = 0;
    };
    rec(0, bound);
    return out;
}

}  // namespace

TEST_CASE("type A duality formula on blocks (3,5)") {
    auto r = build_repring(RepType::A, 0, {3, 5});
    SMono want = r.one();
    want[r.index_of("x2_1")] = 1;
    want[r.index_of("x3_1")] = -1;
    CHECK(r.dual(r.gen(r.index_of("x1_1"))) == want);
    CHECK(r.index_of("x5_2") == -1);  // eliminated by the relation
    CHECK(r.gens[r.index_of("x3_1")].laurent);
    CHECK(r.gens[r.index_of("x2_2")].rank == 10);
}

TEST_CASE("type B with m = 0 squares t to the inverse determinant") {
    auto r = build_repring(RepType::B, 0, {2});
    int t = r.index_of("t");
    SMono want = r.one();
    want[r.index_of("x2_1")] = -1;
    CHECK(r.mul(r.gen(t), r.gen(t)) == want);
}

TEST_CASE("type C generators are self-dual") {
    auto r = build_repring(RepType::C, 2, {1});
    CHECK(r.gens[r.index_of("x1_1")].laurent);
    for (const char* z : {"z1", "z2"}) CHECK(r.dual(r.gen(r.index_of(z))) == r.gen(r.index_of(z)));
    CHECK(r.dual(r.one()) == r.one());
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(build_repring(RepType::A, 0, {}), StarError);
    CHECK_THROWS_AS(build_repring(RepType::B, 0, {}), StarError);
    CHECK_THROWS_AS(build_repring(RepType::C, 1, {0}), StarError);
}

TEST_CASE("duality is an involution preserving degree and rank") {
    for (const auto& c : sample_rings()) {
        auto r = build_repring(c.t, c.m, c.blocks);
        for (const auto& a : small_monomials(r, 3)) {
            SMono d = r.dual(a);
            CHECK(r.dual(d) == a);
            CHECK(r.degree(d) == r.degree(a));
            bool nonneg = true;
            for (int i = 0; i < r.size(); ++i) nonneg &= a[i] >= 0 || r.gens[i].rank == 1;
            if (nonneg) CHECK(r.rank(d) == r.rank(a));
        }
    }
}

TEST_CASE("rank is multiplicative") {
    for (const auto& c : sample_rings()) {
        auto r = build_repring(c.t, c.m, c.blocks);
        if (r.capped >= 0) continue;
        for (int i = 0; i < r.size(); ++i)
            for (int j = 0; j < r.size(); ++j)
                if (!r.gens[i].laurent && !r.gens[j].laurent)
                    CHECK(r.rank(r.mul(r.gen(i), r.gen(j))) == r.rank(r.gen(i)) * r.rank(r.gen(j)));
    }
}

TEST_CASE("self-dual monomials match brute force over a Laurent box") {
    for (const auto& c : sample_rings()) {
        auto r = build_repring(c.t, c.m, c.blocks);
        std::set<SMono> fast;
        for (const auto& a : self_dual_monomials(r, 3)) fast.insert(a);
        // Laurent exponents of a self-dual monomial of degree <= 3 stay within [-3, 3] here.
        std::set<SMono> brute;
        SMono e = r.one();
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == r.size()) {
                if (r.dual(e) == e) brute.insert(e);
                return;
            }
            const auto& g = r.gens[i];
            int lo = g.laurent ? -3 : 0, hi = g.laurent ? 3 : (g.cap > 0 ? std::min(left, g.cap - 1) : left);
            for (int k = lo; k <= hi; ++k) {
                e[i] = k;
                rec(i + 1, g.laurent ? left : left - k);
            }
            e[i] = 0;
        };
        rec(0, 3);
        CHECK(fast == brute);
    }
}

TEST_CASE("self-dual monomials at bound 0 and the epsilon class") {
    auto r = build_repring(RepType::A, 0, {2, 2});
    auto sd0 = self_dual_monomials(r, 0);
    REQUIRE(sd0.size() == 1);
    CHECK(sd0[0] == r.one());
    SMono eps = r.mul(r.gen(r.index_of("x1_1")), r.gen(r.index_of("x1_2")));
    auto sd2 = self_dual_monomials(r, 2);
    CHECK(std::find(sd2.begin(), sd2.end(), eps) != sd2.end());

    auto a12 = build_repring(RepType::A, 0, {1, 2});
    int x = a12.index_of("x1_2");
    SMono alpha = a12.mul(a12.gen(x), a12.dual(a12.gen(x)));
    auto sd = self_dual_monomials(a12, 2);
    CHECK(sd == std::vector<SMono>{a12.one(), alpha});
}

TEST_CASE("classification holds for both parity cases") {
    for (const auto& c : sample_rings()) {
        auto rep = verify_tate_classification(build_repring(c.t, c.m, c.blocks), 6);
        CHECK_MESSAGE(rep.pass, (rep.problems.empty() ? "" : rep.problems.front()));
        CHECK(rep.minus_empty);
        CHECK(rep.self_dual == rep.presentation);
    }
}

TEST_CASE("classification detects a wrong presentation") {
    auto r = build_repring(RepType::A, 0, {2, 2});
    r.claim.pop_back();  // drop epsilon
    auto rep = verify_tate_classification(r, 6);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_mismatch == 2);
}

TEST_CASE("signed module orbit rules") {
    CHECK(tate_of_signed_module({{"a"}, {0}, {1}}).plus_basis == std::vector<std::string>{"a"});
    auto swap = tate_of_signed_module({{"a", "b"}, {1, 0}, {1, 1}});
    CHECK(swap.plus_basis.empty());
    CHECK(swap.minus_basis.empty());
    auto neg = tate_of_signed_module({{"a"}, {0}, {-1}});
    CHECK(neg.plus_basis.empty());
    CHECK(neg.minus_basis == std::vector<std::string>{"a"});
    CHECK_THROWS(tate_of_signed_module({{"a", "b"}, {1, 1}, {1, 1}}));
}

TEST_CASE("signed module Tate dimensions agree with the lattice computation") {
    // Random signed involutions: h+ + h- equals the number of fixed basis elements.
    std::mt19937 rng(9);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + it % 6;
        std::vector<int> perm(n), sign(n);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = 0; i + 1 < n; i += 2)
            if (rng() % 2) std::swap(perm[idx[i]], perm[idx[i + 1]]);
        for (int i = 0; i < n; ++i) sign[i] = perm[i] == i ? (rng() % 2 ? 1 : -1) : 0;
        for (int i = 0; i < n; ++i)
            if (perm[i] != i && sign[i] == 0) sign[i] = sign[perm[i]] = (rng() % 2 ? 1 : -1);
        SignedModule sm;
        for (int i = 0; i < n; ++i) sm.basis.push_back("e" + std::to_string(i));
        sm.image = perm;
        sm.sign = sign;
        auto t = tate_of_signed_module(sm);
        int fixed = 0;
        for (int i = 0; i < n; ++i) fixed += perm[i] == i;
        CHECK(static_cast<int>(t.plus_basis.size() + t.minus_basis.size()) == fixed);
        LatticeModule lm{n, perm, sign, {}, {}};
        auto d = lattice_tate(lm);
        CHECK(d.plus == static_cast<int>(t.plus_basis.size()));
        CHECK(d.minus == static_cast<int>(t.minus_basis.size()));
    }
}

TEST_CASE("lattice Tate cohomology of cyclic groups") {
    LatticeModule z4{1, {0}, {1}, {}, {IVec{4}}};
    CHECK(lattice_tate(z4) == TateDims{1, 1});
    LatticeModule z3{1, {0}, {1}, {}, {IVec{3}}};
    CHECK(lattice_tate(z3) == TateDims{0, 0});
    LatticeModule sign{1, {0}, {-1}, {}, {}};
    CHECK(lattice_tate(sign) == TateDims{0, 1});
}

TEST_CASE("truncated monomial modules have no minus part") {
    for (const auto& c : sample_rings()) {
        auto r = build_repring(c.t, c.m, c.blocks);
        CHECK(tate_of_signed_module(truncated_module(r, 3)).minus_basis.empty());
    }
}

TEST_CASE("lemma witnesses") {
    for (const auto& res : tate_lemma_suite(6)) CHECK_MESSAGE(res.pass, (res.name + ": " + res.detail));
}
