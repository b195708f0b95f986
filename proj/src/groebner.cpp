#include <algorithm>

#include "wittflag/f2poly.hpp"

namespace wf {

namespace {

struct Pair {
    int i, j;
    Mono lcm;
};

std::vector<Mono> merge_add(const std::vector<Mono>& a, size_t from, const std::vector<Mono>& b, int n) {
    std::vector<Mono> out;
    out.reserve(a.size() - from + b.size());
    size_t i = from, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = compare(a[i], b[j], n);
        if (c > 0) out.push_back(a[i++]);
        else if (c < 0) out.push_back(b[j++]);
        else { ++i; ++j; }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

// Full reduction of p by the polynomials whose indices are listed in use.
Poly2 reduce_by(const Poly2& p, const std::vector<Poly2>& polys, const std::vector<int>& use) {
    const Ring& r = *p.ring();
    int n = r.size();
    std::vector<Mono> work = p.terms(), rem;
    size_t start = 0;
    while (start < work.size()) {
        const Mono t = work[start];
        const Poly2* red = nullptr;
        for (int k : use)
            if (divides(polys[k].lt(), t, n)) {
                red = &polys[k];
                break;
            }
        if (!red) {
            rem.push_back(t);
            ++start;
            continue;
        }
        Mono q = mono_div(t, red->lt(), n, r);
        std::vector<Mono> prod;
        prod.reserve(red->size());
        for (const auto& m : red->terms()) prod.push_back(mono_mul(m, q, n, r));
        work = merge_add(work, start, prod, n);
        start = 0;
    }
    return Poly2::from_sorted(p.ring(), std::move(rem));
}

Poly2 spoly(const Poly2& f, const Poly2& g, const Mono& lcm) {
    const Ring& r = *f.ring();
    int n = r.size();
    return f.mul_mono(mono_div(lcm, f.lt(), n, r)) + g.mul_mono(mono_div(lcm, g.lt(), n, r));
}

}  // namespace

GroebnerBasis groebner(const std::vector<Poly2>& input, const RingPtr& ring) {
    GroebnerBasis out;
    out.ring = ring;
    const Ring& r = *ring;
    int n = r.size();

    std::vector<Poly2> polys;
    std::vector<char> active;
    std::vector<Pair> pairs;

    auto active_indices = [&]() {
        std::vector<int> idx;
        for (size_t k = 0; k < polys.size(); ++k)
            if (active[k]) idx.push_back(static_cast<int>(k));
        return idx;
    };

    auto update = [&](const Poly2& h) {
        int hi = static_cast<int>(polys.size());
        polys.push_back(h);
        active.push_back(1);
        const Mono& lh = h.lt();

        std::vector<Pair> c;
        for (int g = 0; g < hi; ++g)
            if (active[g]) c.push_back({g, hi, mono_lcm(polys[g].lt(), lh, n, r)});

        std::vector<Pair> d;
        for (size_t a = 0; a < c.size(); ++a) {
            bool keep = coprime(polys[c[a].i].lt(), lh, n);
            if (!keep) {
                keep = true;
                for (size_t b = 0; b < c.size() && keep; ++b) {
                    if (b == a) continue;
                    bool taken = b < a ? std::any_of(d.begin(), d.end(), [&](const Pair& p) { return p.i == c[b].i; })
                                       : true;
                    if (!taken) continue;
                    if (divides(c[b].lcm, c[a].lcm, n) && !(c[b].lcm == c[a].lcm && b > a)) keep = false;
                }
            }
            if (keep) d.push_back(c[a]);
        }

        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            bool drop = divides(lh, p.lcm, n) && !(mono_lcm(polys[p.i].lt(), lh, n, r) == p.lcm) &&
                        !(mono_lcm(polys[p.j].lt(), lh, n, r) == p.lcm);
            if (!drop) kept.push_back(p);
        }
        for (const auto& p : d)
            if (!coprime(polys[p.i].lt(), lh, n)) kept.push_back(p);
        pairs = std::move(kept);

        for (int g = 0; g < hi; ++g)
            if (active[g] && divides(lh, polys[g].lt(), n)) active[g] = 0;
    };

    for (const auto& f : input) {
        if (f.ring() != ring && !f.ring()->same_variables(r)) throw PolyError("groebner: ring mismatch");
        Poly2 h = reduce_by(f, polys, active_indices());
        if (h.is_zero()) continue;
        if (h.lt().is_one()) {
            out.gens = {Poly2::one(ring)};
            return out;
        }
        update(h);
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            int c = compare(pairs[k].lcm, pairs[best].lcm, n);
            if (c < 0 || (c == 0 && std::make_pair(pairs[k].j, pairs[k].i) < std::make_pair(pairs[best].j, pairs[best].i)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        Poly2 h = reduce_by(spoly(polys[p.i], polys[p.j], p.lcm), polys, active_indices());
        if (h.is_zero()) continue;
        if (h.lt().is_one()) {
            out.gens = {Poly2::one(ring)};
            return out;
        }
        update(h);
    }

    // Minimalise, then tail-reduce.
    std::vector<int> g = active_indices();
    std::vector<int> minimal;
    for (int a : g) {
        bool redundant = false;
        for (int b : g) {
            if (a == b) continue;
            if (divides(polys[b].lt(), polys[a].lt(), n) && !(polys[b].lt() == polys[a].lt() && b > a)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(a);
    }
    std::vector<Poly2> result;
    for (int a : minimal) {
        std::vector<int> others;
        for (int b : minimal)
            if (b != a) others.push_back(b);
        Poly2 tail = Poly2::from_sorted(ring, std::vector<Mono>(polys[a].terms().begin() + 1, polys[a].terms().end()));
        Poly2 red = reduce_by(tail, polys, others) + Poly2::from_mono(ring, polys[a].lt());
        result.push_back(red);
    }
    std::sort(result.begin(), result.end(), [n](const Poly2& x, const Poly2& y) { return compare(x.lt(), y.lt(), n) > 0; });
    out.gens = std::move(result);
    return out;
}

Poly2 normal_form(const Poly2& p, const GroebnerBasis& g) {
    std::vector<int> all(g.gens.size());
    for (size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    return reduce_by(p, g.gens, all);
}

bool in_ideal(const Poly2& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

namespace {

template <class Visit>
void enumerate_standard(const GroebnerBasis& g, const std::vector<int>& caps, int max_wdeg, Visit&& visit) {
    const Ring& r = *g.ring;
    int n = r.size();
    Mono cur;
    auto blocked = [&](const Mono& m) {
        for (const auto& p : g.gens)
            if (divides(p.lt(), m, n)) return true;
        return false;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            visit(cur);
            return;
        }
        for (int e = 0; e < caps[v]; ++e) {
            cur.e[v] = static_cast<uint8_t>(e);
            mono_refresh(cur, r);
            if (max_wdeg >= 0 && cur.wdeg > max_wdeg) break;
            if (blocked(cur)) break;
            self(self, v + 1);
        }
        cur.e[v] = 0;
        mono_refresh(cur, r);
    };
    rec(rec, 0);
}

}  // namespace

QuotientDim quotient_dimension(const GroebnerBasis& g) {
    QuotientDim q;
    if (g.is_unit()) return q;
    const Ring& r = *g.ring;
    int n = r.size();
    std::vector<int> caps(n, 0);
    for (int v = 0; v < n; ++v) {
        for (const auto& p : g.gens) {
            const Mono& m = p.lt();
            if (m.e[v] && m.tdeg == m.e[v]) caps[v] = caps[v] ? std::min(caps[v], int(m.e[v])) : m.e[v];
        }
        if (!caps[v]) {
            q.infinite = true;
            return q;
        }
    }
    enumerate_standard(g, caps, -1, [&](const Mono&) { ++q.dim; });
    return q;
}

QuotientDim quotient_dimension(const std::vector<Poly2>& gens, const RingPtr& ring) {
    return quotient_dimension(groebner(gens, ring));
}

std::vector<Mono> standard_monomials(const GroebnerBasis& g, int max_wdeg) {
    std::vector<Mono> out;
    if (g.is_unit()) return out;
    const Ring& r = *g.ring;
    int n = r.size();
    std::vector<int> caps(n, 256);
    for (int v = 0; v < n; ++v) {
        if (r.var(v).weight > 0) caps[v] = std::min(caps[v], max_wdeg / r.var(v).weight + 1);
        for (const auto& p : g.gens) {
            const Mono& m = p.lt();
            if (m.e[v] && m.tdeg == m.e[v]) caps[v] = std::min(caps[v], int(m.e[v]));
        }
        if (r.var(v).weight == 0 && caps[v] == 256) throw PolyError("standard_monomials: unbounded weight-0 variable");
    }
    enumerate_standard(g, caps, max_wdeg, [&](const Mono& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), [n](const Mono& a, const Mono& b) { return compare(a, b, n) > 0; });
    return out;
}

}  // namespace wf
