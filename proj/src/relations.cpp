#include "wittflag/relations.hpp"

#include <algorithm>
#include <numeric>

namespace wf {

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Mu: return "MU";
        case FamilyKind::Nu: return "NU";
        default: return "XI";
    }
}

Poly2 AliasedBlock::gen(const RingPtr& r, int i) const {
    if (i < 0 || i > size) return Poly2::zero(r);
    if (i > size / 2) i = size - i;
    if (i == 0) return Poly2::one(r);
    return Poly2::var(r, vars[i - 1]);
}

std::vector<Poly2> mu_sequence(const RingPtr& r, const std::vector<AliasedBlock>& blocks) {
    std::vector<Poly2> acc{Poly2::one(r)};
    for (const auto& b : blocks) {
        std::vector<Poly2> next(acc.size() + b.size, Poly2::zero(r));
        for (int c = 0; c <= b.size; ++c) {
            Poly2 g = b.gen(r, c);
            for (size_t j = 0; j < acc.size(); ++j)
                if (!acc[j].is_zero()) next[j + c] += acc[j] * g;
        }
        acc = std::move(next);
    }
    return acc;
}

uint64_t multinomial(const std::vector<int>& parts) {
    uint64_t result = 1;
    int total = 0;
    for (int p : parts)
        for (int i = 1; i <= p; ++i) {
            ++total;
            result = result * static_cast<uint64_t>(total) / static_cast<uint64_t>(i);
        }
    return result;
}

const Member& RelationFamily::member(int index) const {
    for (const auto& m : members)
        if (m.index == index) return m;
    throw PolyError("family has no member " + std::to_string(index));
}

Poly2 RelationFamily::reduced(int index) const {
    const Member& mb = member(index);
    if (kind != FamilyKind::Mu) return mb.poly;
    return mb.poly + Poly2::constant(ring, mb.rank_constant);
}

int RelationFamily::half_sum() const {
    int h = 0;
    for (const auto& b : side) h += b.size / 2;
    for (const auto& b : aliased) h += b.size / 2;
    if (kind != FamilyKind::Mu) h += m / 2;
    return h;
}

std::vector<int> RelationFamily::beta_vars() const {
    std::vector<int> v;
    for (const auto& b : aliased) v.insert(v.end(), b.vars.begin(), b.vars.end());
    return v;
}

int rank_of(const RelationFamily& f, const Poly2& p) { return p.evaluate(f.rank_image); }

namespace {

std::vector<int> even_first(const std::vector<int>& blocks) {
    std::vector<int> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](int p) { return blocks[p] % 2 == 0; });
    return order;
}

void add_block_vars(std::vector<Variable>& vars, std::vector<AliasedBlock>& out, const std::vector<int>& blocks,
                    const std::string& prefix, int weight_scale) {
    for (size_t p = 0; p < blocks.size(); ++p) {
        if (blocks[p] <= 0) throw PolyError("block sizes must be positive");
        AliasedBlock b;
        b.size = blocks[p];
        for (int i = 1; i <= blocks[p] / 2; ++i) {
            b.vars.push_back(static_cast<int>(vars.size()));
            vars.push_back({prefix + std::to_string(i) + "_" + std::to_string(p + 1), weight_scale * i});
        }
        out.push_back(std::move(b));
    }
}

void fill_ranks(RelationFamily& f, int alpha_rank_n) {
    f.rank_image.assign(f.ring->size(), 0);
    for (const auto& b : f.side)
        for (int i = 1; i <= b.size / 2; ++i) f.rank_image[b.vars[i - 1]] = binom_mod2(b.size, i);
    for (const auto& b : f.aliased)
        for (int i = 1; i <= b.size / 2; ++i) f.rank_image[b.vars[i - 1]] = binom_mod2(b.size, i);
    for (size_t i = 0; i < f.alpha_vars.size(); ++i)
        f.rank_image[f.alpha_vars[i]] = binom_mod2(alpha_rank_n, static_cast<long long>(i + 1));
}

}  // namespace

RelationFamily mu_family(const std::vector<int>& blocks, const Naming& naming, int side_block) {
    if (blocks.empty() && side_block < 0) throw PolyError("mu_family needs at least one block");
    RelationFamily f;
    f.kind = FamilyKind::Mu;
    f.blocks = blocks;
    f.block_order = even_first(blocks);
    std::vector<Variable> vars;
    if (side_block >= 0) {
        f.has_side_block = true;
        f.m = side_block;
        AliasedBlock b;
        b.size = side_block;
        for (int i = 1; i <= side_block / 2; ++i) {
            b.vars.push_back(static_cast<int>(vars.size()));
            vars.push_back({naming.side + std::to_string(i), i});
        }
        f.side.push_back(std::move(b));
    }
    add_block_vars(vars, f.aliased, blocks, naming.block, 1);
    f.ring = Ring::make(std::move(vars));
    fill_ranks(f, 0);

    std::vector<AliasedBlock> all = f.side;
    all.insert(all.end(), f.aliased.begin(), f.aliased.end());
    f.mu_full = mu_sequence(f.ring, all);
    f.total = static_cast<int>(f.mu_full.size()) - 1;
    for (int j = 0; j <= f.total / 2; ++j) f.members.push_back({j, f.mu_full[j], binom_mod2(f.total, j)});
    for (int j = 1; j <= f.half_sum(); ++j) f.basis.push_back(j);
    return f;
}

namespace {

RelationFamily alpha_family(FamilyKind kind, int m, const std::vector<int>& blocks, const Naming& naming) {
    if (m < 0) throw PolyError("m must be non-negative");
    RelationFamily f;
    f.kind = kind;
    f.m = m;
    f.blocks = blocks;
    f.block_order = even_first(blocks);
    std::vector<Variable> vars;
    for (int i = 1; i <= m; ++i) {
        f.alpha_vars.push_back(static_cast<int>(vars.size()));
        vars.push_back({naming.side + std::to_string(i), i});
    }
    add_block_vars(vars, f.aliased, blocks, naming.block, 2);
    f.ring = Ring::make(std::move(vars));

    const int top = kind == FamilyKind::Nu ? 2 * m : 2 * m + 1;
    fill_ranks(f, top);
    auto alpha = [&](int i) {
        if (i < 0 || i > top) return Poly2::zero(f.ring);
        if (i > m) i = top - i;
        if (i == 0) return Poly2::one(f.ring);
        return Poly2::var(f.ring, f.alpha_vars[i - 1]);
    };

    int n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    f.total = n;
    auto mu = mu_sequence(f.ring, f.aliased);
    const long long big = kind == FamilyKind::Nu ? 2LL * n : 2LL * n + 1;
    for (int k = 1; k <= n; ++k) {
        Poly2 p = Poly2::constant(f.ring, binom_mod2(big, k));
        for (int i = 0; i <= k / 2; ++i)
            if (i < static_cast<int>(mu.size())) p += alpha(k - 2 * i) * mu[i];
        f.members.push_back({k, p, 0});
    }
    int h = f.half_sum();
    for (int k = 1; k <= n; ++k)
        if ((k % 2 == 1 && k <= m) || (k % 2 == 0 && k <= 2 * h)) f.basis.push_back(k);
    return f;
}

}  // namespace

RelationFamily nu_family(int m, const std::vector<int>& blocks, const Naming& naming) {
    return alpha_family(FamilyKind::Nu, m, blocks, naming);
}

RelationFamily xi_family(int m, const std::vector<int>& blocks, const Naming& naming) {
    return alpha_family(FamilyKind::Xi, m, blocks, naming);
}

Poly2 sigma(const RelationFamily& f, int j) {
    if (f.kind != FamilyKind::Mu) throw PolyError("sigma is defined on mu families");
    int idx = j + f.half_sum();
    if (idx < 0 || idx > f.total) return Poly2::zero(f.ring);
    return f.mu_full[idx];
}

namespace {

std::vector<Poly2> basis_members(const RelationFamily& f) {
    std::vector<Poly2> out;
    for (int s : f.basis) out.push_back(f.reduced(s));
    return out;
}

FamilyVerdict staged_regularity(const RelationFamily& f) {
    FamilyVerdict fv;
    const Ring& r = *f.ring;
    std::vector<int> odd, even;
    for (int s : f.basis) (s % 2 ? odd : even).push_back(s);

    std::vector<int> w1(r.size());
    for (int i = 0; i < r.size(); ++i) w1[i] = r.var(i).weight;
    for (size_t i = 0; i < f.alpha_vars.size(); ++i) {
        int idx = static_cast<int>(i) + 1;
        w1[f.alpha_vars[i]] = idx % 2 ? 1000 * idx : idx / 2;
    }
    for (const auto& b : f.aliased)
        for (size_t i = 0; i < b.vars.size(); ++i) w1[b.vars[i]] = static_cast<int>(i) + 1;
    RingPtr r1 = r.reweighted(w1);

    RegularityVerdict st1;
    st1.method = RegMethod::LeadingForm;
    st1.status = RegStatus::Regular;
    st1.complete = true;
    std::vector<Poly2> odd_polys;
    for (int s : odd) {
        Poly2 p = f.reduced(s).to_ring(r1);
        Mono want = mono_var(*r1, f.alpha_vars[s - 1]);
        if (p.is_zero() || !(p.lt() == want) || p.leading_form().size() != 1) {
            st1.status = RegStatus::Inconclusive;
            st1.detail = "member " + std::to_string(s) + " does not lead with its alpha variable";
            break;
        }
        odd_polys.push_back(p);
    }
    if (st1.status == RegStatus::Regular)
        st1.detail = "odd members lead with distinct variables (" + std::to_string(odd.size()) + ")";
    fv.stages.push_back(st1);

    if (st1.status == RegStatus::Regular) {
        GroebnerBasis g1 = groebner(odd_polys, r1);
        std::vector<Variable> rest;
        std::vector<bool> is_odd_alpha(r.size(), false);
        for (int s : odd) is_odd_alpha[f.alpha_vars[s - 1]] = true;
        for (int i = 0; i < r.size(); ++i) {
            if (is_odd_alpha[i]) continue;
            rest.push_back({r.var(i).name, w1[i]});
        }
        for (size_t i = 0; i < f.alpha_vars.size(); ++i) {
            int idx = static_cast<int>(i) + 1;
            if (idx % 2 == 0)
                for (auto& v : rest)
                    if (v.name == r.var(f.alpha_vars[i]).name) v.weight = idx / 2;
        }
        RingPtr r2 = Ring::make(rest);
        std::vector<Poly2> evens;
        for (int s : even) evens.push_back(normal_form(f.reduced(s).to_ring(r1), g1).to_ring(r2));
        RegularityVerdict st2 = is_regular_sequence(evens, {}, RegMethod::LeadingForm);
        if (evens.empty()) {
            st2.status = RegStatus::Regular;
            st2.detail = "no even members";
        }
        fv.stages.push_back(st2);
        if (st2.status == RegStatus::Regular) {
            fv.status = RegStatus::Regular;
            fv.detail = "staged leading-form certificate";
            return fv;
        }
    }
    RegularityVerdict d = is_regular_sequence(basis_members(f), {}, RegMethod::Direct);
    fv.stages.push_back(d);
    fv.status = d.status;
    fv.detail = "direct check: " + d.detail;
    return fv;
}

}  // namespace

FamilyVerdict verify_regularity(const RelationFamily& f) {
    if (f.kind != FamilyKind::Mu) return staged_regularity(f);
    FamilyVerdict fv;
    auto seq = basis_members(f);
    RegularityVerdict v = is_regular_sequence(seq, {}, RegMethod::LeadingForm);
    if (seq.empty()) {
        v.status = RegStatus::Regular;
        v.detail = "empty basis";
    }
    fv.stages.push_back(v);
    if (v.status == RegStatus::Inconclusive) {
        RegularityVerdict d = is_regular_sequence(seq, {}, RegMethod::Direct);
        fv.stages.push_back(d);
        v = d;
    }
    fv.status = v.status;
    fv.detail = v.detail;
    return fv;
}

namespace {

Reduction solve_row(const RelationFamily& f, int index, const std::vector<int>& over, CoeffMode mode) {
    Reduction row;
    row.index = index;
    row.over = over;
    row.mode = mode == CoeffMode::Scalars ? "SCALARS" : "SUBRING";
    std::vector<Poly2> cands;
    for (int s : over) cands.push_back(f.reduced(s));
    CoeffSpec spec;
    spec.mode = mode;
    spec.vars = f.beta_vars();
    Poly2 target = f.reduced(index);
    Combination c = solve_linear_combination(target, cands, spec);
    if (c.status == SolveStatus::NoneAtBound) {
        spec.degree_bound = 2 * c.bound_used;
        c = solve_linear_combination(target, cands, spec);
    }
    row.status = c.status;
    row.bound = c.bound_used;
    row.coeffs = c.coeffs;
    return row;
}

}  // namespace

ReductionTable reduce_surplus(const RelationFamily& f) {
    ReductionTable t;
    std::vector<int> odd_basis, even_basis;
    for (int s : f.basis) (s % 2 ? odd_basis : even_basis).push_back(s);
    GroebnerBasis g = groebner(basis_members(f), f.ring);

    for (const auto& mb : f.members) {
        int i = mb.index;
        if (i == 0 || std::find(f.basis.begin(), f.basis.end(), i) != f.basis.end()) continue;
        Reduction row;
        if (f.kind == FamilyKind::Mu) {
            row = solve_row(f, i, f.basis, CoeffMode::Scalars);
        } else if (f.kind == FamilyKind::Nu) {
            row = i % 2 ? solve_row(f, i, odd_basis, CoeffMode::Subring) : solve_row(f, i, even_basis, CoeffMode::Scalars);
        } else {
            std::vector<int> below;
            for (int s : f.basis)
                if (s < i) below.push_back(s);
            if (i % 2 == 0) {
                row = solve_row(f, i, even_basis, CoeffMode::Scalars);
                if (row.status != SolveStatus::Found) row = solve_row(f, i, below, CoeffMode::Subring);
            } else {
                row = solve_row(f, i, below, CoeffMode::Subring);
            }
        }
        row.normal_form_zero = in_ideal(f.reduced(i), g);
        if (rank_of(f, f.reduced(i)) != 0) {
            t.ok = false;
            t.failure = "member " + std::to_string(i) + " has non-zero rank";
        }
        if (row.status != SolveStatus::Found || !row.normal_form_zero) {
            t.ok = false;
            if (t.failure.empty())
                t.failure = "member " + std::to_string(i) + ": " + to_string(row.status) +
                            (row.normal_form_zero ? "" : ", normal form non-zero");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

FamilyDimension family_quotient_dimension(const RelationFamily& f) {
    FamilyDimension d;
    d.groebner = quotient_dimension(basis_members(f), f.ring);
    std::vector<int> parts;
    if (f.kind != FamilyKind::Mu) parts.push_back(f.m / 2);
    for (const auto& b : f.side) parts.push_back(b.size / 2);
    for (const auto& b : f.aliased) parts.push_back(b.size / 2);
    d.closed_form = multinomial(parts);
    d.match = !d.groebner.infinite && d.groebner.dim == d.closed_form;
    return d;
}

std::vector<Reduction> xi_odd_alpha_witnesses(const RelationFamily& xi) {
    if (xi.kind != FamilyKind::Xi) throw PolyError("xi family expected");
    std::vector<Reduction> out;
    std::vector<Poly2> gens;
    std::vector<int> over;
    for (int k = 1; k <= xi.m; ++k) {
        gens.push_back(xi.member(k).poly);
        over.push_back(k);
    }
    for (int j = 0; 2 * j + 1 <= xi.m; ++j) {
        Poly2 target = Poly2::var(xi.ring, xi.alpha_vars[2 * j]) +
                       (j == 0 ? Poly2::one(xi.ring) : Poly2::var(xi.ring, xi.alpha_vars[2 * j - 1]));
        CoeffSpec spec;
        spec.mode = CoeffMode::Subring;
        spec.vars = xi.beta_vars();
        Combination c = solve_linear_combination(target, gens, spec);
        if (c.status == SolveStatus::NoneAtBound) {
            spec.degree_bound = 2 * c.bound_used;
            c = solve_linear_combination(target, gens, spec);
        }
        Reduction row;
        row.index = 2 * j + 1;
        row.mode = "SUBRING";
        row.over = over;
        row.coeffs = c.coeffs;
        row.status = c.status;
        row.bound = c.bound_used;
        row.normal_form_zero = c.status == SolveStatus::Found;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace wf
