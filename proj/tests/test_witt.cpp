#include <algorithm>

#include "doctest.h"
#include "wittflag/cli.hpp"
#include "wittflag/witt.hpp"

using namespace wf;

namespace {

RankVector rv(uint64_t a, uint64_t b, uint64_t c, uint64_t d) { return RankVector{{a, b, c, d}}; }

int count_degree(const std::vector<Generator>& g, int d) {
    return static_cast<int>(std::count_if(g.begin(), g.end(), [d](const Generator& x) { return x.degree == d; }));
}

bool has_relation(const WittPresentation& p, const std::string& text) {
    Poly2 want = parse_poly(p.ring, text);
    return std::any_of(p.relations.begin(), p.relations.end(), [&](const Poly2& r) { return r == want; });
}

}  // namespace

TEST_CASE("exterior rank examples") {
    CHECK(exterior_ranks(2, 0) == rv(1, 2, 1, 0));
    CHECK(exterior_ranks(0, 0) == rv(1, 0, 0, 0));
    CHECK(exterior_ranks(1, 1) == rv(2, 1, 0, 1));
    CHECK(brute_exterior_ranks(2, 0) == rv(1, 2, 1, 0));
    CHECK(brute_exterior_ranks(0, 1) == rv(1, 0, 0, 1));
    CHECK(brute_exterior_ranks(4, 0) == rv(2, 4, 6, 4));
}

TEST_CASE("exterior ranks agree with the brute-force expansion") {
    for (int f = 0; f <= 12; ++f)
        for (int g = 0; f + g <= 12; ++g) {
            auto e = exterior_ranks(f, g);
            CHECK(e == brute_exterior_ranks(f, g));
            CHECK(e.total() == (uint64_t{1} << (f + g)));
        }
    CHECK_THROWS(brute_exterior_ranks(20, 5));
}

TEST_CASE("type A examples") {
    auto p = compute_type_a({1, 2});
    CHECK(p.exterior.empty());
    CHECK(p.scalar_a == 1);
    CHECK(p.ranks == rv(1, 0, 0, 0));

    auto q = compute_type_a({1, 1, 1});
    REQUIRE(q.exterior.size() == 1);
    CHECK(q.exterior[0].degree == -1);
    CHECK(q.ranks == rv(1, 1, 0, 0));

    auto s = compute_type_a({3, 5});
    CHECK(s.scalar_a == 3);
    CHECK(s.exterior.size() == 1);
    CHECK(s.checks.all());
}

TEST_CASE("type B examples") {
    auto p = compute_type_b(0, {1});
    CHECK(p.relations.empty());
    CHECK(p.exterior.size() == 1);

    auto q = compute_type_b(2, {3, 5});
    CHECK(q.exterior.size() == 5);  // four u generators plus c
    CHECK(q.checks.all());

    auto e = compute_type_b(2, {2});
    CHECK(e.clause.find("even") != std::string::npos);
    CHECK(has_relation(e, "b2*a1_1"));
}

TEST_CASE("type C examples") {
    CHECK(compute_type_c(2, {3, 5}).scalar_a == 12);
    auto p = compute_type_c(1, {1});
    CHECK(count_degree(p.exterior, -1) + count_degree(p.exterior, -3) == static_cast<int>(p.exterior.size()));
    CHECK(p.checks.all());
}

TEST_CASE("type D examples") {
    auto p = compute_type_d(2, {2});
    CHECK(p.structure == Structure::AdditiveOnly);
    // W^i = a (z_i + z_{i+1}); index k holds degree -k.
    for (int k = 0; k < 4; ++k) CHECK(p.ranks[k] == p.scalar_a * (p.z[k] + p.z[(k + 3) % 4]));
    CHECK_THROWS_AS(compute_type_d(1, {2}), WittError);

    auto q = compute_type_d(0, {1, 2});  // n odd
    CHECK(q.structure == Structure::Ring);
    CHECK(q.checks.all());
    auto r = compute_type_d(0, {2, 2});  // n = 4
    CHECK(r.structure == Structure::Ring);
    for (const auto& g : r.exterior)
        if (g.name[0] == 'v') CHECK(g.degree == -1);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS(compute_type_a({}));
    CHECK_THROWS(compute_type_a({0, 2}));
    CHECK_THROWS(compute_type_b(-1, {2}));
}

TEST_CASE("presentation invariants over all small parameter tuples") {
    for (WittType t : {WittType::A, WittType::B, WittType::C, WittType::D}) {
        for (const auto& prm : table_params(t, 7)) {
            auto p = compute(t, prm.m, prm.blocks);
            CAPTURE(to_json(p).dump());
            if (p.structure != Structure::Ring) continue;
            CHECK(p.checks.all());
            CHECK(p.ranks.total() == p.scalar_a << p.exterior.size());
            CHECK(rank_table(p).match);
            if (t == WittType::A) {
                for (size_t i = 0; i + 1 < p.exterior.size(); ++i) CHECK(p.exterior[i].degree == -1);
                if (!p.exterior.empty()) CHECK((p.exterior.back().degree == -3) == (p.n % 4 == 2));
            }
            if (t == WittType::B) {
                int want = 0;
                for (int b : prm.blocks) want += b - b / 2;
                CHECK(static_cast<int>(p.exterior.size()) == want);
            }
            if (t != WittType::D) {
                auto f = t == WittType::A ? mu_family(prm.blocks)
                         : t == WittType::B ? xi_family(prm.m, prm.blocks)
                         : prm.blocks.empty() ? RelationFamily{}
                                              : nu_family(prm.m, prm.blocks);
                if (!f.members.empty()) CHECK(family_quotient_dimension(f).groebner.dim == p.scalar_a);
            }
        }
    }
}

TEST_CASE("homogeneous spaces G/G are points") {
    for (int n = 1; n <= 6; ++n) CHECK(compute_type_a({n}).ranks == rv(1, 0, 0, 0));
    for (int m = 1; m <= 6; ++m) {
        for (auto p : {compute_type_b(m, {}), compute_type_c(m, {})}) {
            CHECK(p.scalar_a == 1);
            CHECK(p.ranks == rv(1, 0, 0, 0));
        }
    }
    for (int m = 2; m <= 6; ++m) CHECK(compute_type_d(m, {}).ranks == rv(1, 0, 0, 0));
}
