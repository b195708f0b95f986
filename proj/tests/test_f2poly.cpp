#include <random>

#include "doctest.h"
#include "wittflag/f2poly.hpp"

using namespace wf;

namespace {

RingPtr ring(int n) {
    std::vector<Variable> v;
    for (int i = 0; i < n; ++i) v.push_back({"x" + std::to_string(i + 1), 1});
    return Ring::make(v);
}

Poly2 random_poly(const RingPtr& r, std::mt19937& rng, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<Mono> ts;
    for (int t = 0; t < terms; ++t) {
        Mono m;
        for (int i = 0; i < r->size(); ++i) m.e[i] = static_cast<uint8_t>(e(rng));
        mono_refresh(m, *r);
        ts.push_back(m);
    }
    return Poly2::from_terms(r, ts);  // repeated terms cancel
}

std::vector<int> bits_of(int mask, int n) {
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
    return b;
}

}  // namespace

TEST_CASE("parse and print round trip") {
    auto r = ring(3);
    for (std::string s : {"0", "1", "x1", "x1*x2^3 + x3 + 1", "x2^2*x3 + x1"}) {
        Poly2 p = parse_poly(r, s);
        CHECK(parse_poly(r, p.str()) == p);
    }
    CHECK_THROWS_AS(parse_poly(r, "x4"), PolyError);
    CHECK_THROWS_AS(parse_poly(r, "x1 + x1"), PolyError);
    CHECK_THROWS_AS(parse_poly(r, "x1^0"), PolyError);
}

TEST_CASE("ring axioms on random polynomials") {
    auto r = ring(3);
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly2 a = random_poly(r, rng, 4, 2), b = random_poly(r, rng, 4, 2), c = random_poly(r, rng, 3, 2);
        CHECK((a + a).is_zero());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("evaluation is a ring homomorphism to F2") {
    auto r = ring(4);
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        Poly2 a = random_poly(r, rng, 5, 2), b = random_poly(r, rng, 5, 2);
        for (int mask = 0; mask < 16; ++mask) {
            auto x = bits_of(mask, 4);
            CHECK((a + b).evaluate(x) == (a.evaluate(x) ^ b.evaluate(x)));
            CHECK((a * b).evaluate(x) == (a.evaluate(x) & b.evaluate(x)));
        }
    }
}

TEST_CASE("binomial parity matches Pascal's triangle") {
    std::vector<std::vector<int>> pascal(64, std::vector<int>(64, 0));
    for (int n = 0; n < 64; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0)) % 2;
    }
    for (int n = 0; n < 64; ++n)
        for (int k = -1; k <= n + 1; ++k) CHECK(binom_mod2(n, k) == (k < 0 || k > n ? 0 : pascal[n][k]));
}

TEST_CASE("quotient dimension counts F2-points once field equations are added") {
    // (f_1..f_k, x_i^2 + x_i) is radical, so dim F2[x]/I = number of common zeros in F2^n.
    std::mt19937 rng(3);
    for (int n = 1; n <= 5; ++n) {
        auto r = ring(n);
        for (int it = 0; it < 20; ++it) {
            std::vector<Poly2> gens;
            for (int i = 0; i < n; ++i) gens.push_back(Poly2::var(r, i).pow(2) + Poly2::var(r, i));
            int k = 1 + it % 3;
            std::vector<Poly2> fs;
            for (int j = 0; j < k; ++j) fs.push_back(random_poly(r, rng, 3, 1));
            gens.insert(gens.end(), fs.begin(), fs.end());
            uint64_t zeros = 0;
            for (int mask = 0; mask < (1 << n); ++mask) {
                bool z = true;
                for (const auto& f : fs) z &= f.evaluate(bits_of(mask, n)) == 0;
                zeros += z;
            }
            auto d = quotient_dimension(gens, r);
            CHECK_FALSE(d.infinite);
            CHECK(d.dim == zeros);
        }
    }
}

TEST_CASE("ideal membership of generators and combinations") {
    auto r = ring(3);
    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
        std::vector<Poly2> gens = {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)};
        auto g = groebner(gens, r);
        for (const auto& p : gens) CHECK(in_ideal(p, g));
        Poly2 comb = random_poly(r, rng, 3, 1) * gens[0] + random_poly(r, rng, 3, 1) * gens[1];
        CHECK(normal_form(comb, g).is_zero());
        Poly2 q = random_poly(r, rng, 4, 2);
        CHECK(normal_form(q + comb, g) == normal_form(q, g));
    }
}

TEST_CASE("quotient dimension of monomial and principal ideals") {
    auto r = ring(2);
    CHECK(quotient_dimension({parse_poly(r, "x1^2"), parse_poly(r, "x2^3")}, r).dim == 6);
    CHECK(quotient_dimension({parse_poly(r, "x1 + 1"), parse_poly(r, "x2")}, r).dim == 1);
    CHECK(quotient_dimension({parse_poly(r, "x1*x2")}, r).infinite);
    CHECK(groebner({parse_poly(r, "x1"), parse_poly(r, "x1 + 1")}, r).is_unit());
}

TEST_CASE("regular sequences") {
    auto r = ring(3);
    auto p = [&](const char* s) { return parse_poly(r, s); };
    for (RegMethod m : {RegMethod::LeadingForm, RegMethod::Direct}) {
        CHECK(is_regular_sequence({p("x1"), p("x2"), p("x3")}, {}, m).status == RegStatus::Regular);
        CHECK(is_regular_sequence({p("x1^2 + 1"), p("x2^2 + x1"), p("x3^3 + x1*x2")}, {}, m).status == RegStatus::Regular);
    }
    CHECK(is_regular_sequence({p("x1*x2"), p("x1*x3")}, {}, RegMethod::Direct).status == RegStatus::NotRegular);
    CHECK(is_regular_sequence({p("x1"), p("x1")}, {}, RegMethod::Direct).status == RegStatus::NotRegular);
    CHECK(is_regular_sequence({p("x1*x2"), p("x1*x3")}, {}, RegMethod::LeadingForm).status != RegStatus::Regular);
}

TEST_CASE("linear combinations substitute back") {
    auto r = ring(3);
    auto p = [&](const char* s) { return parse_poly(r, s); };
    std::vector<Poly2> cands = {p("x1 + x2"), p("x2*x3 + 1")};
    Poly2 target = cands[0] + cands[1];
    auto c = solve_linear_combination(target, cands, {});
    REQUIRE(c.status == SolveStatus::Found);
    CHECK(c.coeffs[0] * cands[0] + c.coeffs[1] * cands[1] == target);

    CoeffSpec sub;
    sub.mode = CoeffMode::Subring;
    sub.vars = {2};
    Poly2 t2 = p("x3") * cands[0] + cands[1];
    auto c2 = solve_linear_combination(t2, cands, sub);
    REQUIRE(c2.status == SolveStatus::Found);
    CHECK(c2.coeffs[0] * cands[0] + c2.coeffs[1] * cands[1] == t2);

    CHECK(solve_linear_combination(p("x1"), cands, {}).status != SolveStatus::Found);
}
