#include <functional>
#include <sstream>

#include "wittflag/star_monomial.hpp"

namespace wf {

namespace {

struct Gen {
    ZPoly p;
    int deg;
};

ZAlgebra swap_algebra(const std::vector<std::string>& names, const std::vector<int>& partner, const std::vector<int>& weights) {
    ZAlgebra a;
    a.names = names;
    a.weights = weights;
    a.perm = partner;
    a.sign.assign(names.size(), 1);
    return a;
}

IVec zero_vec(int n) { return IVec(n, 0); }

// Rows of the ideal generated by gens inside A_d, in the monomial coordinates of A_d.
std::vector<IVec> ideal_rows(const ZAlgebra& a, const std::vector<Gen>& gens, int d) {
    auto target = a.basis(d);
    std::vector<IVec> rows;
    for (const auto& g : gens)
        for (const auto& e : a.basis(d - g.deg)) {
            IVec v = a.coords(a.mul(g.p, ZPoly{{{e, 1}}}), target);
            bool nz = false;
            for (auto x : v) nz |= x != 0;
            if (nz) rows.push_back(v);
        }
    return hnf(rows);
}

// Returns false if the ideal is zero in this degree.
bool ideal_module(const ZAlgebra& a, const std::vector<Gen>& gens, int d, LatticeModule* out) {
    *out = a.piece(d);
    out->carrier = ideal_rows(a, gens, d);
    return !out->carrier.empty();
}

LatticeModule quotient_module(const ZAlgebra& a, const std::vector<Gen>& gens, int d) {
    LatticeModule m = a.piece(d);
    m.relations = ideal_rows(a, gens, d);
    return m;
}

TateDims tate_or_zero(bool nonzero, const LatticeModule& m) { return nonzero ? lattice_tate(m) : TateDims{}; }

// Fixed monomials with the given parity; they span h^parity of a monomial piece.
std::vector<IVec> fixed_reps(const LatticeModule& m, int parity) {
    std::vector<IVec> reps;
    for (int i = 0; i < m.n; ++i)
        if (m.perm[i] == i && m.sign[i] == parity) {
            IVec v = zero_vec(m.n);
            v[i] = 1;
            reps.push_back(v);
        }
    return reps;
}

// Multiplies classes of A_d given as coordinate vectors by p, landing in A_{d+deg}.
std::vector<IVec> times(const ZAlgebra& a, const ZPoly& p, int pdeg, int d, const std::vector<IVec>& reps) {
    auto src = a.basis(d), dst = a.basis(d + pdeg);
    std::vector<IVec> out;
    for (const auto& r : reps) {
        ZPoly q;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i]) q = a.add(q, ZPoly{{{src[i], r[i]}}});
        out.push_back(a.coords(a.mul(q, p), dst));
    }
    return out;
}

int plus_dim(const ZAlgebra& a, int d) { return d < 0 ? 0 : lattice_tate(a.piece(d)).plus; }

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool c, const std::string& msg) {
        if (!c && ok) {
            ok = false;
            why << msg;
        }
    }
};

std::string dims(TateDims t) { return "(" + std::to_string(t.plus) + "," + std::to_string(t.minus) + ")"; }

LemmaResult finish(std::string name, std::string witness, Check& c, int bound) {
    return {std::move(name), std::move(witness), c.ok, c.ok ? "degrees 0.." + std::to_string(bound) : c.why.str()};
}

// h(A_d) -> h(I_{d+deg}) by multiplication with a self-dual generator of I, for I principal or (l, l*).
void ideal_iso(const ZAlgebra& a, const std::vector<Gen>& ideal, const ZPoly& mult, int mdeg, int bound, Check& c) {
    for (int d = 0; d + mdeg <= bound; ++d) {
        LatticeModule src = a.piece(d), dst;
        TateDims ts = lattice_tate(src);
        TateDims td = tate_or_zero(ideal_module(a, ideal, d + mdeg, &dst), dst);
        c.expect(ts == td, "degree " + std::to_string(d) + ": h(A)=" + dims(ts) + " h(I)=" + dims(td));
        if (!c.ok) return;
        for (int parity : {+1, -1}) {
            auto reps = fixed_reps(src, parity);
            int want = parity > 0 ? ts.plus : ts.minus;
            if (reps.empty()) continue;
            int got = class_rank(dst, parity, times(a, mult, mdeg, d, reps));
            c.expect(got == want, "degree " + std::to_string(d) + ": image of multiplication has rank " + std::to_string(got));
        }
    }
}

LemmaResult ideal_self_dual_generator(int bound) {
    ZAlgebra a = swap_algebra({"x", "y"}, {1, 0}, {1, 1});
    ZPoly x = a.var(0), y = a.var(1);
    Check c;
    ideal_iso(a, {{a.add(x, y), 1}}, a.add(x, y), 1, bound, c);
    ideal_iso(a, {{a.mul(x, y), 2}}, a.mul(x, y), 2, bound, c);
    return finish("ideal_self_dual_generator", "A=Z[x,y], x*=y; mu=x+y and mu=xy", c, bound);
}

LemmaResult ideal_lambda_lambda_star(int bound) {
    ZAlgebra a = swap_algebra({"x", "y"}, {1, 0}, {1, 1});
    ZPoly x = a.var(0), y = a.var(1);
    ZPoly l = a.add(x, a.scale(y, 2)), ls = a.star(l);
    Check c;
    ideal_iso(a, {{l, 1}, {ls, 1}}, a.mul(l, ls), 2, bound, c);
    return finish("ideal_lambda_lambda_star", "A=Z[x,y], x*=y; lambda=x+2y", c, bound);
}

LemmaResult ideal_two_self_dual_generators(int bound) {
    ZAlgebra a = swap_algebra({"x", "y"}, {1, 0}, {1, 1});
    ZPoly x = a.var(0), y = a.var(1);
    Gen m1{a.add(x, y), 1}, m2{a.mul(x, y), 2};
    Check c;
    for (int e = 0; e <= bound && c.ok; ++e) {
        LatticeModule mod;
        TateDims t = tate_or_zero(ideal_module(a, {m1, m2}, e, &mod), mod);
        int want = plus_dim(a, e - 1) + plus_dim(a, e - 2) - plus_dim(a, e - 3);
        c.expect(t.minus == 0, "degree " + std::to_string(e) + ": h^-(I) non-zero");
        c.expect(t.plus == want, "degree " + std::to_string(e) + ": dim h^+(I)=" + std::to_string(t.plus) + ", expected " + std::to_string(want));
        if (!c.ok || t.plus == 0) continue;
        std::vector<IVec> gens;
        for (auto [g, d] : {std::pair{m1, e - 1}, std::pair{m2, e - 2}})
            if (d >= 0)
                for (const auto& v : times(a, g.p, g.deg, d, fixed_reps(a.piece(d), +1))) gens.push_back(v);
        c.expect(class_rank(mod, +1, gens) == t.plus, "degree " + std::to_string(e) + ": x[mu1]+y[mu2] is not onto");
    }
    return finish("ideal_two_self_dual_generators", "A=Z[x,y], x*=y; mu1=x+y, mu2=xy", c, bound);
}

LemmaResult quotient_trivial_class(int bound) {
    Check c;
    {
        ZAlgebra a = swap_algebra({"x", "y"}, {1, 0}, {1, 1});
        ZPoly x = a.var(0), y = a.var(1);
        std::vector<Gen> mu{{a.add(x, y), 1}};
        for (int d = 0; d <= bound && c.ok; ++d) {
            TateDims t = lattice_tate(quotient_module(a, mu, d));
            TateDims want{plus_dim(a, d), plus_dim(a, d - 1)};
            c.expect(t == want, "degree " + std::to_string(d) + ": h(A/mu)=" + dims(t) + ", expected " + dims(want));
        }
        LatticeModule q1 = quotient_module(a, mu, 1);
        c.expect(class_rank(q1, -1, {a.coords(x, a.basis(1))}) == 1, "class of x in h^-(A/(x+y)) vanishes");
    }
    {
        ZAlgebra z;
        LatticeModule m = z.piece(0);
        m.relations = {IVec{2}};
        TateDims t = lattice_tate(m);
        c.expect(t == TateDims{1, 1}, "h(Z/2)=" + dims(t) + ", expected (1,1)");
        c.expect(class_rank(m, -1, {IVec{1}}) == 1, "class of u=1 in h^-(Z/2) vanishes");
    }
    return finish("quotient_trivial_class", "A=Z[x,y], x*=y, mu=x+y, u=x; A=Z, mu=2, u=1", c, bound);
}

LemmaResult quotient_trivial_norm_class(int bound) {
    ZAlgebra a = swap_algebra({"a", "b"}, {1, 0}, {1, 1});
    ZPoly x = a.var(0), y = a.var(1);
    ZPoly l = a.add(x, a.scale(y, 3)), ls = a.star(l);
    ZPoly u = a.add(a.scale(a.mul(x, y), 5), a.scale(a.mul(x, x), 3));
    std::vector<Gen> ideal{{l, 1}, {ls, 1}};
    Check c;
    c.expect(a.add(u, a.star(u)).terms == a.mul(l, ls).terms, "u + u* differs from lambda lambda*");
    c.expect(class_rank(a.piece(2), +1, {a.coords(a.mul(l, ls), a.basis(2))}) == 0, "[lambda lambda*] is non-zero");
    for (int d = 0; d <= bound && c.ok; ++d) {
        TateDims t = lattice_tate(quotient_module(a, ideal, d));
        TateDims want{plus_dim(a, d), plus_dim(a, d - 2)};
        c.expect(t == want, "degree " + std::to_string(d) + ": h(A/I)=" + dims(t) + ", expected " + dims(want));
    }
    if (bound >= 2)
        c.expect(class_rank(quotient_module(a, ideal, 2), -1, {a.coords(u, a.basis(2))}) == 1, "class of u in h^-(A/I) vanishes");
    return finish("quotient_trivial_norm_class", "A=Z[a,b], a*=b, lambda=a+3b, u=5ab+3a^2", c, bound);
}

LemmaResult quotient_regular_class(int bound) {
    ZAlgebra a = swap_algebra({"x", "y"}, {1, 0}, {1, 1});
    ZPoly x = a.var(0), y = a.var(1);
    Check c;
    bool converse_minus = false;
    for (int d = 0; d <= bound && c.ok; ++d) {
        TateDims t = lattice_tate(quotient_module(a, {{a.mul(x, y), 2}}, d));
        TateDims want{d == 0 ? 1 : 0, 0};
        c.expect(t == want, "degree " + std::to_string(d) + ": h(A/xy)=" + dims(t) + ", expected " + dims(want));
        TateDims u = lattice_tate(quotient_module(a, {{x, 1}, {y, 1}}, d));
        c.expect(u == want, "degree " + std::to_string(d) + ": h(A/(x,y))=" + dims(u) + ", expected " + dims(want));
        converse_minus |= lattice_tate(quotient_module(a, {{a.add(x, y), 1}}, d)).minus > 0;
    }
    if (bound >= 1) c.expect(converse_minus, "zero-divisor class x+y gives h^-(A/mu)=0");
    return finish("quotient_regular_class", "A=Z[x,y], x*=y; mu=xy regular, lambda=x, mu=x+y zero divisor", c, bound);
}

LemmaResult quotient_regular_sequence(int bound) {
    ZAlgebra a = swap_algebra({"x", "y", "z", "w"}, {1, 0, 3, 2}, {1, 1, 1, 1});
    Gen m1{a.mul(a.var(0), a.var(1)), 2}, m2{a.mul(a.var(2), a.var(3)), 2};
    Check c;
    for (int d = 0; d <= bound && c.ok; ++d) {
        TateDims t1 = lattice_tate(quotient_module(a, {m1}, d));
        TateDims t2 = lattice_tate(quotient_module(a, {m1, m2}, d));
        // h^+(A)/([xy]) = F2[zw]; h^+(A)/([xy],[zw]) = F2
        TateDims w1{d % 2 == 0 ? 1 : 0, 0}, w2{d == 0 ? 1 : 0, 0};
        c.expect(t1 == w1, "degree " + std::to_string(d) + ": h(A/(xy))=" + dims(t1) + ", expected " + dims(w1));
        c.expect(t2 == w2, "degree " + std::to_string(d) + ": h(A/(xy,zw))=" + dims(t2) + ", expected " + dims(w2));
    }
    return finish("quotient_regular_sequence", "A=Z[x,y,z,w], x*=y, z*=w; mu1=xy, mu2=zw", c, bound);
}

LemmaResult quotient_rank_two(int bound) {
    ZAlgebra a = swap_algebra({"x", "y", "s"}, {1, 0, 2}, {2, 2, 1});
    a.capped = 2;
    a.cap = 2;
    a.replacement = a.add(a.var(0), a.var(1));
    ZPoly s = a.var(2), x = a.var(0);
    Check c;
    auto s_image = [&](int d) {
        if (d < 0) return 0;
        auto reps = fixed_reps(a.piece(d), +1);
        return reps.empty() ? 0 : class_rank(a.piece(d + 1), +1, times(a, s, 1, d, reps));
    };
    for (int d = 0; d <= bound && c.ok; ++d) {
        TateDims t = lattice_tate(a.piece(d));
        c.expect(t.minus == 0, "h^-(A) non-zero in degree " + std::to_string(d));
        // Ann([s]) = ([s]): kernel of .[s] on h^+_d equals the image of .[s] from h^+_{d-1}
        c.expect(t.plus - s_image(d) == s_image(d - 1), "Ann([s]) differs from ([s]) in degree " + std::to_string(d));
    }
    c.expect(class_rank(a.piece(2), +1, {a.coords(a.mul(s, s), a.basis(2))}) == 0, "[s]^2 is non-zero");
    for (int d = 0; d <= bound && c.ok; ++d) {
        TateDims t = lattice_tate(quotient_module(a, {{s, 1}}, d));
        auto quot = [&](int e) { return e < 0 ? 0 : plus_dim(a, e) - s_image(e - 1); };
        TateDims want{quot(d), quot(d - 2)};
        c.expect(t == want, "degree " + std::to_string(d) + ": h(A/s)=" + dims(t) + ", expected " + dims(want));
    }
    if (bound >= 2) c.expect(class_rank(quotient_module(a, {{s, 1}}, 2), -1, {a.coords(x, a.basis(2))}) == 1, "class of u=x in h^-(A/s) vanishes");
    return finish("quotient_rank_two", "A=Z[x,y,s]/(s^2-x-y), x*=y, s*=s, weights (2,2,1); mu=s, u=x", c, bound);
}

}  // namespace

std::vector<LemmaResult> tate_lemma_suite(int degree_bound) {
    std::vector<std::pair<std::string, std::function<LemmaResult(int)>>> all = {
        {"ideal_self_dual_generator", ideal_self_dual_generator},
        {"ideal_lambda_lambda_star", ideal_lambda_lambda_star},
        {"ideal_two_self_dual_generators", ideal_two_self_dual_generators},
        {"quotient_trivial_class", quotient_trivial_class},
        {"quotient_trivial_norm_class", quotient_trivial_norm_class},
        {"quotient_regular_class", quotient_regular_class},
        {"quotient_regular_sequence", quotient_regular_sequence},
        {"quotient_rank_two", quotient_rank_two}};
    std::vector<LemmaResult> out;
    for (auto& [name, f] : all) {
        try {
            out.push_back(f(degree_bound));
        } catch (const std::exception& e) {
            out.push_back({name, "", false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}  // namespace wf
