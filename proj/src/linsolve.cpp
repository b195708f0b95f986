#include <algorithm>
#include <map>

#include "wittflag/f2poly.hpp"
#include "wittflag/gf2.hpp"

namespace wf {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "FOUND";
        case SolveStatus::None: return "NONE";
        default: return "NONE-AT-BOUND";
    }
}

std::vector<Mono> subring_monomials(const Ring& r, const std::vector<int>& vars, int max_wdeg) {
    for (int v : vars)
        if (r.var(v).weight <= 0) throw PolyError("subring variable " + r.var(v).name + " has weight 0");
    std::vector<Mono> out;
    Mono cur;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == vars.size()) {
            out.push_back(cur);
            return;
        }
        int v = vars[k];
        for (int e = 0;; ++e) {
            cur.e[v] = static_cast<uint8_t>(e);
            mono_refresh(cur, r);
            if (cur.wdeg > max_wdeg) break;
            self(self, k + 1);
        }
        cur.e[v] = 0;
        mono_refresh(cur, r);
    };
    if (max_wdeg >= 0) rec(rec, 0);
    int n = r.size();
    std::sort(out.begin(), out.end(), [n](const Mono& a, const Mono& b) { return compare(a, b, n) < 0; });
    return out;
}

Combination solve_linear_combination(const Poly2& target, const std::vector<Poly2>& cands, const CoeffSpec& spec) {
    const RingPtr& ring = target.ring();
    int n = ring->size();
    Combination res;
    res.coeffs.assign(cands.size(), Poly2::zero(ring));

    std::vector<Mono> mults{Mono{}};
    int bound = 0;
    if (spec.mode == CoeffMode::Subring) {
        bound = spec.degree_bound >= 0 ? spec.degree_bound : std::max(target.degree(), 0) + 2;
        mults = subring_monomials(*ring, spec.vars, bound);
    }
    res.bound_used = bound;
    if (target.is_zero()) {
        res.status = SolveStatus::Found;
        return res;
    }

    struct Unknown {
        size_t cand;
        Mono mult;
    };
    std::vector<Unknown> unknowns;
    std::vector<Poly2> columns;
    for (size_t i = 0; i < cands.size(); ++i)
        for (const auto& m : mults) {
            unknowns.push_back({i, m});
            columns.push_back(cands[i].mul_mono(m));
        }

    std::map<std::vector<uint8_t>, size_t> coord;
    auto key = [n](const Mono& m) { return std::vector<uint8_t>(m.e.begin(), m.e.begin() + n); };
    for (const auto& c : columns)
        for (const auto& t : c.terms()) coord.emplace(key(t), coord.size());
    for (const auto& t : target.terms()) coord.emplace(key(t), coord.size());

    auto to_vec = [&](const Poly2& p) {
        BitVec v(coord.size());
        for (const auto& t : p.terms()) v.flip(coord.at(key(t)));
        return v;
    };

    Gf2Basis basis(coord.size(), unknowns.size());
    for (size_t u = 0; u < unknowns.size(); ++u) {
        BitVec tag(unknowns.size());
        tag.set(u);
        basis.insert(to_vec(columns[u]), tag);
    }
    BitVec t = to_vec(target), tag(unknowns.size());
    if (!basis.reduce(t, &tag)) {
        res.status = spec.mode == CoeffMode::Scalars ? SolveStatus::None : SolveStatus::NoneAtBound;
        return res;
    }
    for (size_t u = 0; u < unknowns.size(); ++u)
        if (tag.test(u)) res.coeffs[unknowns[u].cand] += Poly2::from_mono(ring, unknowns[u].mult);

    Poly2 check = Poly2::zero(ring);
    for (size_t i = 0; i < cands.size(); ++i) check += res.coeffs[i] * cands[i];
    if (check != target) throw PolyError("solve_linear_combination: substitution check failed");
    res.status = SolveStatus::Found;
    return res;
}

}  // namespace wf
