#include "wittflag/witt.hpp"

#include <algorithm>
#include <numeric>

namespace wf {

const char* to_string(WittType t) {
    switch (t) {
        case WittType::A: return "A";
        case WittType::B: return "B";
        case WittType::C: return "C";
        case WittType::D: return "D";
    }
    return "?";
}

const char* to_string(Structure s) { return s == Structure::Ring ? "RING" : "ADDITIVE_ONLY"; }

WittType parse_witt_type(const std::string& s) {
    if (s == "A" || s == "a") return WittType::A;
    if (s == "B" || s == "b") return WittType::B;
    if (s == "C" || s == "c") return WittType::C;
    if (s == "D" || s == "d") return WittType::D;
    throw WittError("unknown type '" + s + "' (expected A, B, C or D)");
}

namespace {

void validate(int m, const std::vector<int>& blocks) {
    if (m < 0) throw WittError("m must be non-negative");
    for (int b : blocks)
        if (b < 1) throw WittError("blocks must be positive integers");
    if (m + std::accumulate(blocks.begin(), blocks.end(), 0) < 1) throw WittError("n = m + sum of blocks must be positive");
}

bool all_even(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 0; });
}

std::vector<int> halves(int m, const std::vector<int>& blocks) {
    std::vector<int> h{m / 2};
    for (int b : blocks) h.push_back(b / 2);
    return h;
}

void add_ring_generators(WittPresentation& p) {
    for (const auto& v : p.ring->vars()) p.generators.push_back({v.name, 0});
}

std::pair<int, int> degree_counts(const std::vector<Generator>& ext) {
    int f = 0, g = 0;
    for (const auto& e : ext) (e.degree == -1 ? f : g)++;
    return {f, g};
}

void family_checks(WittPresentation& p, const RelationFamily& fam) {
    auto reg = verify_regularity(fam);
    p.checks.regularity = reg.status == RegStatus::Regular;
    if (!p.checks.regularity) p.checks.notes.push_back("regularity: " + std::string(to_string(reg.status)) + " " + reg.detail);
    auto red = reduce_surplus(fam);
    p.checks.reduction = red.ok;
    if (!red.ok) p.checks.notes.push_back("reduction: " + red.failure);
    auto dim = family_quotient_dimension(fam);
    auto emitted = quotient_dimension(p.relations, p.ring);
    p.checks.dim_match = dim.match && !emitted.infinite && emitted.dim == p.scalar_a;
    if (!p.checks.dim_match)
        p.checks.notes.push_back("dimension: family " + std::to_string(dim.groebner.dim) + ", emitted " +
                                 (emitted.infinite ? std::string("infinite") : std::to_string(emitted.dim)) + ", closed form " +
                                 std::to_string(p.scalar_a));
}

void finish(WittPresentation& p) {
    auto [f, g] = degree_counts(p.exterior);
    p.z = exterior_ranks(f, g);
    p.ranks = p.z.scaled(p.scalar_a);
    RankTable t = rank_table(p);
    bool total_ok = p.ranks.total() == (p.scalar_a << p.exterior.size());
    p.checks.table_match = p.checks.table_match && t.match && total_ok;
    if (!t.match) p.checks.notes.push_back("rank table: closed form " + t.closed_form.str() + " vs expansion " + t.expansion.str());
    if (!total_ok) p.checks.notes.push_back("total rank differs from a * 2^#exterior");
}

struct DClause {
    int clause = 0;  // 1..5 ring clauses, 6 additive, 7 point
    bool has_d = false;
    std::vector<int> u;
    int v = 0;
};

DClause type_d_clause(int m, const std::vector<int>& blocks) {
    if (m == 1) throw WittError("type D with m=1 matches no clause; use m=0 with an extra block of size 1");
    int n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    int N = m / 2;
    for (int b : blocks) N += b / 2;
    bool np_even = all_even(blocks);
    DClause d;
    if (n % 2 == 1 && ((m > 2 && m % 2 == 1) || m == 0)) d.clause = 1;
    else if (n % 2 == 1 && m >= 2 && m % 2 == 0) d.clause = 2;
    else if (n % 2 == 0 && ((m > 2 && m % 2 == 1) || (m == 0 && !np_even))) d.clause = 3;
    else if (n % 2 == 0 && m >= 2 && m % 2 == 0 && !np_even) d.clause = 4;
    else if (m == 0 && np_even) d.clause = 5;
    else if (m % 2 == 0 && np_even && 0 < m && m < n) d.clause = 6;
    else if (m == n && m % 2 == 0) d.clause = 7;
    else throw WittError("type D parameters match no clause");
    d.has_d = d.clause == 2 || d.clause == 4;
    if (d.clause <= 5) {
        for (int j = m; j <= n - 1; ++j)
            if (j > 2 * N && !(d.clause >= 3 && j == n - 1)) d.u.push_back(j);
        d.v = d.clause == 3 || d.clause == 4 ? 2 : d.clause == 5 ? 1 : 0;
    }
    return d;
}

struct Additive {
    uint64_t a = 0, b = 0, c = 0;
    int k = 0;
};

Additive type_d_additive(int m, const std::vector<int>& blocks) {
    int n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    uint64_t M = multinomial(halves(m, blocks));
    int s = (n - m) / 2;
    Additive r;
    r.b = M * s / (n / 2);
    r.c = M * (m / 2) / (n / 2);
    if (r.b * (n / 2) != M * s || r.c * (n / 2) != M * (m / 2)) throw std::logic_error("type D additive scalars not integral");
    r.a = M + r.b;
    r.k = s - 1;
    return r;
}

RankVector additive_dims(const Additive& s, const RankVector& z, int n) {
    RankVector d;
    for (int k = 0; k < 4; ++k) {
        uint64_t z0 = z[k], z1 = z[(k + 3) % 4], z3 = z[(k + 1) % 4];
        d.u[k] = n % 4 == 0 ? s.a * (z0 + z1) : s.a * z0 + s.c * z1 + 2 * s.b * z3;
    }
    return d;
}

}  // namespace

std::vector<int> type_b_index_set(int m, const std::vector<int>& blocks) {
    int top = m / 2;
    for (int b : blocks) top += b / 2;
    top *= 2;
    std::vector<int> s;
    for (int i = 1; i <= std::max(m, top); ++i)
        if (i <= m || i % 2 == 0) s.push_back(i);
    return s;
}

std::pair<int, int> type_c_exterior_counts(int m, const std::vector<int>& blocks) {
    int n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    auto s = type_b_index_set(m, blocks);
    int f = 0, g = 0;
    for (int t = 1; t <= n; ++t)
        if (!std::binary_search(s.begin(), s.end(), t)) (t % 2 == 0 ? f : g)++;
    return {f, g};
}

WittPresentation compute_type_a(const std::vector<int>& blocks) {
    if (blocks.empty()) throw WittError("type A needs at least one block");
    validate(0, blocks);
    WittPresentation p;
    p.type = WittType::A;
    p.blocks = blocks;
    p.n = std::accumulate(blocks.begin(), blocks.end(), 0);
    RelationFamily fam = mu_family(blocks);
    int m = fam.half_sum();
    int r = p.n / 2 - m;
    p.ring = fam.ring;
    add_ring_generators(p);
    for (int j = 1; j <= m; ++j) p.relations.push_back(fam.reduced(j));
    for (int i = 1; i <= r; ++i) p.exterior.push_back({"v" + std::to_string(i), i == r && p.n % 4 == 2 ? -3 : -1});
    std::vector<int> h;
    for (int b : blocks) h.push_back(b / 2);
    p.scalar_a = multinomial(h);
    p.clause = r == 0 ? "r=0" : p.n % 4 == 2 ? "r>0, n=2 mod 4" : "r>0, n!=2 mod 4";
    p.checks.table_match = true;
    family_checks(p, fam);
    finish(p);
    return p;
}

WittPresentation compute_type_b(int m, const std::vector<int>& blocks) {
    validate(m, blocks);
    WittPresentation p;
    p.type = WittType::B;
    p.m = m;
    p.blocks = blocks;
    p.n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    RelationFamily fam = xi_family(m, blocks, Naming{"b", "a"});
    p.ring = fam.ring;
    add_ring_generators(p);
    bool every_even = m % 2 == 0 && all_even(blocks);
    auto S = type_b_index_set(m, blocks);
    for (int j : S)
        if (!(every_even && j == p.n)) p.relations.push_back(fam.member(j).poly);
    if (every_even) {
        Poly2 mono = m > 0 ? Poly2::var(p.ring, fam.alpha_vars[m - 1]) : Poly2::one(p.ring);
        for (const auto& blk : fam.aliased) mono = mono * blk.gen(p.ring, blk.size / 2);
        p.relations.push_back(mono);
    }
    for (int t = 1; t <= p.n - 1; ++t)
        if (!std::binary_search(S.begin(), S.end(), t)) p.exterior.push_back({"u" + std::to_string(t), -1});
    bool np_even = all_even(blocks);
    if (!every_even && !blocks.empty())
        p.exterior.push_back({"c", !np_even && (p.n % 4 == 1 || p.n % 4 == 2) ? -3 : -1});
    p.scalar_a = multinomial(halves(m, blocks));
    p.clause = every_even ? "m and all blocks even" : "not all of m, blocks even";

    int expected = 0;
    for (int b : blocks) expected += b - b / 2;
    p.checks.table_match = static_cast<int>(p.exterior.size()) == expected;
    if (!p.checks.table_match)
        p.checks.notes.push_back("exterior count " + std::to_string(p.exterior.size()) + " differs from " + std::to_string(expected));
    family_checks(p, fam);
    finish(p);
    return p;
}

WittPresentation compute_type_c(int m, const std::vector<int>& blocks) {
    validate(m, blocks);
    WittPresentation p;
    p.type = WittType::C;
    p.m = m;
    p.blocks = blocks;
    p.n = m + std::accumulate(blocks.begin(), blocks.end(), 0);
    RelationFamily fam = mu_family(blocks, Naming{"a", "b"}, m);
    p.ring = fam.ring;
    add_ring_generators(p);
    for (int j = 1; j <= fam.half_sum(); ++j) p.relations.push_back(fam.reduced(j));
    auto [f, g] = type_c_exterior_counts(m, blocks);
    for (int i = 1; i <= f; ++i) p.exterior.push_back({"u" + std::to_string(i), -1});
    for (int i = 1; i <= g; ++i) p.exterior.push_back({"v" + std::to_string(i), -3});
    p.scalar_a = multinomial(halves(m, blocks));
    p.clause = "ring";
    p.checks.table_match = true;
    family_checks(p, fam);

    RelationFamily nu = nu_family(m, blocks);
    auto nd = family_quotient_dimension(nu);
    if (!nd.match || nd.groebner.infinite || nd.groebner.dim != p.scalar_a) {
        p.checks.dim_match = false;
        p.checks.notes.push_back("dimension: nu family gives " + std::to_string(nd.groebner.dim));
    }
    finish(p);
    return p;
}

WittPresentation compute_type_d(int m, const std::vector<int>& blocks) {
    validate(m, blocks);
    DClause d = type_d_clause(m, blocks);
    WittPresentation p;
    p.type = WittType::D;
    p.m = m;
    p.blocks = blocks;
    p.n = m + std::accumulate(blocks.begin(), blocks.end(), 0);

    if (d.clause == 6) {
        Additive s = type_d_additive(m, blocks);
        p.structure = Structure::AdditiveOnly;
        p.clause = "additive, m and all blocks even";
        p.scalar_a = s.a;
        p.z = exterior_ranks(s.k, 0);
        p.ranks = additive_dims(s, p.z, p.n);
        p.checks.regularity = p.checks.reduction = p.checks.dim_match = true;
        p.checks.notes.push_back("ring structure not determined; regularity, reduction and dimension checks not applicable");
        RankTable t = rank_table(p);
        p.checks.table_match = t.match;
        if (!t.match) p.checks.notes.push_back("rank table: closed form " + t.closed_form.str() + " vs expansion " + t.expansion.str());
        return p;
    }

    RelationFamily fam = mu_family(blocks, Naming{"b", "a"}, m);
    p.clause = d.clause == 7 ? "point" : "ring clause " + std::to_string(d.clause);
    for (int j = 1; j <= fam.half_sum(); ++j) p.relations.push_back(fam.reduced(j));
    p.ring = fam.ring;
    if (d.has_d) {
        auto vars = fam.ring->vars();
        vars.push_back({"d1", m / 2});
        vars.push_back({"d2", m / 2});
        p.ring = Ring::make(vars);
        for (auto& r : p.relations) r = r.to_ring(p.ring);
        Poly2 d1 = Poly2::var(p.ring, "d1"), d2 = Poly2::var(p.ring, "d2");
        p.relations.push_back(d1 + d2 + Poly2::var(p.ring, "b" + std::to_string(m / 2)));
        p.relations.push_back(d1 * d2);
    }
    add_ring_generators(p);
    for (int t : d.u) p.exterior.push_back({"u" + std::to_string(t), -1});
    int vdeg = p.n % 4 == 0 ? -1 : -3;
    if (d.v == 1) p.exterior.push_back({"v", vdeg});
    if (d.v == 2) {
        p.exterior.push_back({"v+", vdeg});
        p.exterior.push_back({"v-", vdeg});
    }
    p.scalar_a = multinomial(halves(m, blocks)) * (d.has_d ? 2 : 1);
    p.checks.table_match = true;
    if (d.has_d) {
        // family checks on the mu part; the d relations only enter the dimension count
        WittPresentation mu_only = p;
        mu_only.ring = fam.ring;
        mu_only.relations.assign(p.relations.begin(), p.relations.begin() + fam.half_sum());
        for (auto& r : mu_only.relations) r = r.to_ring(fam.ring);
        mu_only.scalar_a = p.scalar_a / 2;
        family_checks(mu_only, fam);
        p.checks = mu_only.checks;
        auto emitted = quotient_dimension(p.relations, p.ring);
        if (emitted.infinite || emitted.dim != p.scalar_a) {
            p.checks.dim_match = false;
            p.checks.notes.push_back("dimension with d1, d2: " + (emitted.infinite ? std::string("infinite") : std::to_string(emitted.dim)));
        }
    } else {
        family_checks(p, fam);
    }
    finish(p);
    return p;
}

WittPresentation compute(WittType t, int m, const std::vector<int>& blocks) {
    switch (t) {
        case WittType::A:
            if (m != 0) throw WittError("type A takes no m");
            return compute_type_a(blocks);
        case WittType::B: return compute_type_b(m, blocks);
        case WittType::C: return compute_type_c(m, blocks);
        case WittType::D: return compute_type_d(m, blocks);
    }
    throw WittError("unknown type");
}

RankTable rank_table(const WittPresentation& p) {
    RankTable t;
    auto [f, g] = degree_counts(p.exterior);
    switch (p.type) {
        case WittType::A: {
            int m = 0;
            for (int b : p.blocks) m += b / 2;
            t.closed_form = section_table_ranks(p.n / 2 - m, p.n % 4 == 2);
            t.expansion = exterior_ranks(f, g);
            break;
        }
        case WittType::B: {
            int r = 0;
            for (int b : p.blocks) r += b - b / 2;
            bool shifted = !all_even(p.blocks) && (p.n % 4 == 1 || p.n % 4 == 2);
            t.closed_form = section_table_ranks(r, shifted);
            t.expansion = exterior_ranks(f, g);
            break;
        }
        case WittType::C: {
            auto [cf, cg] = type_c_exterior_counts(p.m, p.blocks);
            t.closed_form = exterior_ranks(cf, cg);
            t.expansion = brute_exterior_ranks(f, g);
            break;
        }
        case WittType::D: {
            if (p.structure == Structure::AdditiveOnly) {
                Additive s = type_d_additive(p.m, p.blocks);
                t.closed_form = additive_dims(s, exterior_ranks(s.k, 0), p.n);
                t.expansion = additive_dims(s, brute_exterior_ranks(s.k, 0), p.n);
                t.dims = t.expansion;
                t.match = t.closed_form == t.expansion && t.dims == p.ranks;
                return t;
            }
            DClause d = type_d_clause(p.m, p.blocks);
            int df = static_cast<int>(d.u.size()), dg = 0;
            (p.n % 4 == 0 ? df : dg) += d.v;
            t.closed_form = exterior_ranks(df, dg);
            t.expansion = brute_exterior_ranks(f, g);
            break;
        }
    }
    t.dims = t.expansion.scaled(p.scalar_a);
    t.match = t.closed_form == t.expansion && t.dims == p.ranks;
    return t;
}

}  // namespace wf
