#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "wittflag/cli.hpp"
#include "wittflag/series.hpp"

namespace wf {

namespace {

std::string tuple_text(const Params& p, bool with_m) {
    std::string s = with_m ? "m=" + std::to_string(p.m) + " " : "";
    s += "(";
    for (size_t i = 0; i < p.blocks.size(); ++i) s += (i ? "," : "") + std::to_string(p.blocks[i]);
    return s + ")";
}

// Collects the first failure (in index order) of a parallel sweep.
struct Sweep {
    std::mutex mu;
    int first = -1;
    std::string why;
    void fail(int i, const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        if (first < 0 || i < first) {
            first = i;
            why = msg;
        }
    }
    SuiteItem item(const std::string& name, int count, const std::string& extra = "") const {
        std::string d = std::to_string(count) + " cases" + (extra.empty() ? "" : "; " + extra);
        return {name, first < 0, first < 0 ? d : d + "; first failure: " + why};
    }
};

template <class F>
SuiteItem sweep(const std::string& name, int count, F&& check, const std::string& extra = "") {
    Sweep s;
    for_each_index(count, true, [&](int i) {
        try {
            std::string msg = check(i);
            if (!msg.empty()) s.fail(i, msg);
        } catch (const std::exception& e) {
            s.fail(i, std::string("exception: ") + e.what());
        }
    });
    return s.item(name, count, extra);
}

Poly2 in_ring(const RelationFamily& f, const std::string& text) { return parse_poly(f.ring, text); }

std::string compare_members(const RelationFamily& f, const std::vector<Poly2>& expected, int first_index) {
    for (size_t j = 0; j < expected.size(); ++j) {
        int idx = first_index + static_cast<int>(j);
        Poly2 got = f.kind == FamilyKind::Mu ? f.mu_full.at(idx) : f.member(idx).poly;
        if (got != expected[j])
            return std::string(to_string(f.kind)) + "_" + std::to_string(idx) + " = " + got.str() + ", expected " +
                   expected[j].str();
    }
    return "";
}

std::string check_combination(const RelationFamily& f, const Reduction& row) {
    if (row.status != SolveStatus::Found) return "member " + std::to_string(row.index) + ": " + to_string(row.status);
    Poly2 sum = Poly2::zero(f.ring);
    for (size_t i = 0; i < row.over.size(); ++i) sum += row.coeffs.at(i) * f.reduced(row.over[i]);
    if (sum != f.reduced(row.index)) return "member " + std::to_string(row.index) + ": combination does not substitute back";
    if (!row.normal_form_zero) return "member " + std::to_string(row.index) + ": normal form non-zero";
    return "";
}

std::string family_name(FamilyKind k) {
    std::string s = to_string(k);
    for (auto& c : s) c = static_cast<char>(std::tolower(c));
    return s;
}

RelationFamily family(FamilyKind k, const Params& p) {
    switch (k) {
        case FamilyKind::Mu: return mu_family(p.blocks);
        case FamilyKind::Nu: return nu_family(p.m, p.blocks);
        case FamilyKind::Xi: return xi_family(p.m, p.blocks);
    }
    throw std::logic_error("unknown family");
}

// Block tuples with exactly k odd parts and sum floor(n/2) <= max_half.
void odd_count_tuples(int k, int max_half, int largest, std::vector<int>& cur, int odd, int half,
                      std::vector<std::vector<int>>& out) {
    if (odd == k && !cur.empty()) out.push_back(cur);
    for (int v = largest; v >= 1; --v) {
        int nodd = odd + (v % 2);
        int nhalf = half + v / 2;
        if (nodd > k || nhalf > max_half) continue;
        cur.push_back(v);
        odd_count_tuples(k, max_half, v, cur, nodd, nhalf, out);
        cur.pop_back();
    }
}

std::string expect_ranks(const WittPresentation& p, const RankVector& want) {
    if (p.ranks == want) return "";
    return "ranks " + p.ranks.str() + ", expected " + want.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"examples", "lemmas", "series", "appendix", "tables"};
    return names;
}

std::vector<SuiteItem> worked_example_checks() {
    std::vector<SuiteItem> out;
    auto mu = mu_family({3, 5});
    std::vector<std::string> mu_text = {"b1_1 + b1_2", "b1_1 + b1_1*b1_2 + b2_2", "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2", "0"};
    std::vector<Poly2> mus;
    for (const auto& t : mu_text) mus.push_back(in_ring(mu, t));
    std::vector<Poly2> mu_expected = mus;
    for (int j = 3; j >= 1; --j) mu_expected.push_back(mus[j - 1]);  // mu_5..mu_7 mirror mu_3..mu_1
    std::string msg = compare_members(mu, mu_expected, 1);
    out.push_back({"worked_example_mu_3_5", msg.empty(), msg.empty() ? "mu_1..mu_7 match" : msg});

    auto side = [&](const RelationFamily& f, const std::vector<std::vector<std::pair<std::string, int>>>& rows) {
        // each row: sum of coefficient * mu_i, coefficient "1", "a1" or "a2"; mu index 0 means the constant 1
        std::vector<Poly2> exp;
        for (const auto& row : rows) {
            Poly2 s = Poly2::zero(f.ring);
            for (const auto& [coef, i] : row) {
                Poly2 c = in_ring(f, coef);
                Poly2 m = i == 0 ? Poly2::one(f.ring) : mus[i - 1].to_ring(f.ring);
                s += c * m;
            }
            exp.push_back(s);
        }
        return compare_members(f, exp, 1);
    };
    auto nu = nu_family(2, {3, 5});
    msg = side(nu, {{{"a1", 0}},
                    {{"a2", 0}, {"1", 1}},
                    {{"a1", 0}, {"a1", 1}},
                    {{"1", 0}, {"a2", 1}, {"1", 2}, {"1", 0}},
                    {{"a1", 1}, {"a1", 2}},
                    {{"1", 1}, {"a2", 2}, {"1", 3}},
                    {{"a1", 2}, {"a1", 3}},
                    {{"1", 2}, {"a2", 3}, {"1", 4}},
                    {{"a1", 3}, {"a1", 4}},
                    {{"a2", 4}}});
    out.push_back({"worked_example_nu_2_3_5", msg.empty(), msg.empty() ? "nu_1..nu_10 match" : msg});
    auto xi = xi_family(2, {3, 5});
    msg = side(xi, {{{"a1", 0}, {"1", 0}},
                    {{"a2", 0}, {"1", 1}},
                    {{"a2", 0}, {"a1", 1}},
                    {{"a1", 0}, {"a2", 1}, {"1", 2}, {"1", 0}},
                    {{"a2", 1}, {"a1", 2}},
                    {{"a1", 1}, {"a2", 2}, {"1", 3}},
                    {{"1", 1}, {"a2", 2}, {"a1", 3}},
                    {{"a1", 2}, {"a2", 3}, {"1", 4}},
                    {{"1", 2}, {"a2", 3}, {"a1", 4}},
                    {{"a1", 3}, {"a2", 4}, {"1", 3}}});
    out.push_back({"worked_example_xi_2_3_5", msg.empty(), msg.empty() ? "xi_1..xi_10 match" : msg});
    return out;
}

std::vector<SuiteItem> family_regularity_checks(int mu_half, int nu_half, int mu_total, int nu_total) {
    std::vector<SuiteItem> out;
    for (FamilyKind k : {FamilyKind::Mu, FamilyKind::Nu, FamilyKind::Xi}) {
        auto tuples = k == FamilyKind::Mu ? mu_tuples(mu_half, mu_total) : side_tuples(nu_half, nu_total);
        out.push_back(sweep(family_name(k) + "_regular_and_dimension", static_cast<int>(tuples.size()), [&](int i) {
            auto f = family(k, tuples[i]);
            std::string where = tuple_text(tuples[i], k != FamilyKind::Mu) + ": ";
            auto v = verify_regularity(f);
            if (v.status != RegStatus::Regular) return where + to_string(v.status) + " " + v.detail;
            auto d = family_quotient_dimension(f);
            if (!d.match)
                return where + "dimension " + (d.groebner.infinite ? "infinite" : std::to_string(d.groebner.dim)) +
                       " vs multinomial " + std::to_string(d.closed_form);
            return std::string();
        }));
    }
    return out;
}

std::vector<SuiteItem> family_reduction_checks(int mu_half, int nu_half, int mu_total, int nu_total) {
    std::vector<SuiteItem> out;
    for (FamilyKind k : {FamilyKind::Mu, FamilyKind::Nu, FamilyKind::Xi}) {
        auto tuples = k == FamilyKind::Mu ? mu_tuples(mu_half, mu_total) : side_tuples(nu_half, nu_total);
        out.push_back(sweep(family_name(k) + "_surplus_reduction", static_cast<int>(tuples.size()), [&](int i) {
            auto f = family(k, tuples[i]);
            std::string where = tuple_text(tuples[i], k != FamilyKind::Mu) + ": ";
            auto t = reduce_surplus(f);
            if (!t.ok) return where + t.failure;
            for (const auto& row : t.rows) {
                std::string m = check_combination(f, row);
                if (!m.empty()) return where + m;
            }
            if (k == FamilyKind::Xi) {
                std::vector<Poly2> xis;
                for (int j = 1; j <= f.m; ++j) xis.push_back(f.member(j).poly);
                for (const auto& w : xi_odd_alpha_witnesses(f)) {
                    if (w.status != SolveStatus::Found) return where + "no witness for odd alpha " + std::to_string(w.index);
                    int j = (w.index - 1) / 2;
                    Poly2 target = Poly2::var(f.ring, f.alpha_vars[2 * j]) +
                                   (j == 0 ? Poly2::one(f.ring) : Poly2::var(f.ring, f.alpha_vars[2 * j - 1]));
                    Poly2 sum = Poly2::zero(f.ring);
                    for (size_t c = 0; c < xis.size(); ++c) sum += w.coeffs.at(c) * xis[c];
                    if (sum != target) return where + "odd alpha witness " + std::to_string(w.index) + " does not substitute back";
                }
            }
            return std::string();
        }));
    }
    return out;
}

std::vector<SuiteItem> series_checks(int max_k, int max_half, int s_bound) {
    std::vector<std::pair<int, std::vector<int>>> cases;
    for (int k = 0; k <= max_k; ++k) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        odd_count_tuples(k, max_half, 2 * max_half + 1, cur, 0, 0, tuples);
        for (auto& t : tuples) cases.push_back({k, t});
    }
    std::vector<SuiteItem> out;
    int members = 0;
    std::mutex mu;
    out.push_back(sweep("series_kernel_families", static_cast<int>(cases.size()), [&](int i) {
        auto rep = verify_kernel(cases[i].first, cases[i].second, s_bound);
        {
            std::lock_guard<std::mutex> lock(mu);
            members += rep.checked;
        }
        if (!rep.pass) return "k=" + std::to_string(cases[i].first) + " " + tuple_text({0, cases[i].second}, false) + ": " + rep.failures.front();
        return std::string();
    }));
    out.back().detail += "; " + std::to_string(members) + " kernel members evaluated";
    out.push_back(sweep("series_psi_recursion", static_cast<int>(cases.size()), [&](int i) {
        if (cases[i].first == 0) return std::string();
        std::mt19937 rng(1000 + i);
        SeriesRing ring = series_ring(cases[i].second);
        std::uniform_int_distribution<int> pick(ring.lo(), ring.hi());
        for (int trial = 0; trial < 3; ++trial) {
            std::set<int> q;
            for (int j = 0; j < 3; ++j) q.insert(pick(rng));
            if (!psi_recursion_holds(cases[i].second, {q.begin(), q.end()}))
                return tuple_text({0, cases[i].second}, false) + ": recursion fails";
        }
        return std::string();
    }));
    return out;
}

std::vector<SuiteItem> appendix_checks(int max_size) {
    std::vector<SuiteItem> out;
    std::set<int> residues;
    std::string bad;
    int count = 0;
    for (int f = 0; f <= max_size; ++f)
        for (int g = 0; f + g <= max_size; ++g) {
            ++count;
            residues.insert(4 * (f % 4) + g % 4);
            if (bad.empty() && exterior_ranks(f, g) != brute_exterior_ranks(f, g))
                bad = "(" + std::to_string(f) + "," + std::to_string(g) + "): " + exterior_ranks(f, g).str() + " vs " +
                      brute_exterior_ranks(f, g).str();
        }
    out.push_back({"appendix_closed_form_vs_expansion", bad.empty(),
                   std::to_string(count) + " pairs, " + std::to_string(residues.size()) + "/16 residue classes" +
                       (bad.empty() ? "" : "; first failure: " + bad)});
    out.push_back({"appendix_residue_coverage", residues.size() == 16, std::to_string(residues.size()) + "/16 residue classes"});

    struct Row {
        int f, g;
        RankVector want;
    };
    std::vector<Row> rows = {{2, 0, {{1, 2, 1, 0}}}, {0, 0, {{1, 0, 0, 0}}}, {1, 1, {{2, 1, 0, 1}}}, {0, 1, {{1, 0, 0, 1}}}, {4, 0, {{2, 4, 6, 4}}}};
    bad.clear();
    for (const auto& r : rows)
        if (bad.empty() && (exterior_ranks(r.f, r.g) != r.want || brute_exterior_ranks(r.f, r.g) != r.want))
            bad = "(" + std::to_string(r.f) + "," + std::to_string(r.g) + ") gives " + exterior_ranks(r.f, r.g).str();
    out.push_back({"appendix_printed_rows", bad.empty(), bad.empty() ? "5 rows" : bad});

    bad.clear();
    for (int r = 0; r <= max_size; ++r) {
        if (bad.empty() && section_table_ranks(r, false) != exterior_ranks(r, 0)) bad = "unshifted r=" + std::to_string(r);
        if (bad.empty() && r > 0 && section_table_ranks(r, true) != exterior_ranks(r - 1, 1)) bad = "shifted r=" + std::to_string(r);
    }
    out.push_back({"rank_tables_vs_appendix", bad.empty(), bad.empty() ? "r <= " + std::to_string(max_size) : bad});
    return out;
}

std::vector<SuiteItem> rank_table_checks(int max_n) {
    std::vector<SuiteItem> out;
    for (WittType t : {WittType::A, WittType::B, WittType::C, WittType::D}) {
        auto params = table_params(t, max_n);
        std::mutex mu;
        int printed_g_differs = 0;
        auto item = sweep(std::string("rank_table_type_") + to_string(t), static_cast<int>(params.size()), [&](int i) {
            const auto& p = params[i];
            std::string where = tuple_text(p, t != WittType::A) + ": ";
            WittPresentation w = compute(t, p.m, p.blocks);
            RankTable rt = rank_table(w);
            if (!rt.match) return where + "closed form " + rt.closed_form.str() + " vs expansion " + rt.expansion.str();
            if (!w.checks.all()) return where + "presentation checks failed";
            if (w.structure == Structure::Ring && w.ranks.total() != w.scalar_a << w.exterior.size())
                return where + "total rank " + std::to_string(w.ranks.total()) + " != a * 2^#exterior";
            if (t == WittType::A) {
                for (size_t j = 0; j < w.exterior.size(); ++j) {
                    bool last = j + 1 == w.exterior.size();
                    int want = last && w.n % 4 == 2 ? -3 : -1;
                    if (w.exterior[j].degree != want) return where + "exterior degree rule violated";
                }
            }
            if (t == WittType::C) {
                // printed formula g = ceil((n-m)/2)
                int printed = (w.n - w.m + 1) / 2;
                int g = 0;
                for (const auto& e : w.exterior) g += e.degree == -3;
                if (g != printed) {
                    std::lock_guard<std::mutex> lock(mu);
                    ++printed_g_differs;
                }
            }
            return std::string();
        });
        if (t == WittType::C)
            item.detail += "; ceil((n-m)/2) differs from the emitted g on " + std::to_string(printed_g_differs) +
                           " tuples (m odd, n even), where the emitted g counts odd indices outside S";
        out.push_back(item);
    }
    return out;
}

std::vector<SuiteItem> classification_checks(int degree_bound, int max_total) {
    std::vector<SuiteItem> out;
    for (RepType t : {RepType::A, RepType::B, RepType::C}) {
        std::vector<Params> params;
        for (int n = 1; n <= max_total; ++n) {
            if (t == RepType::A) {
                for (auto& b : partitions(n)) params.push_back({0, b});
                continue;
            }
            for (int m = 0; m <= n; ++m)
                for (auto& b : partitions(n - m)) params.push_back({m, b});
        }
        int even_cases = 0;
        for (const auto& p : params)
            if (std::all_of(p.blocks.begin(), p.blocks.end(), [](int x) { return x % 2 == 0; })) ++even_cases;
        out.push_back(sweep(
            std::string("tate_classification_type_") + to_string(t), static_cast<int>(params.size()),
            [&](int i) {
                auto r = build_repring(t, params[i].m, params[i].blocks);
                auto rep = verify_tate_classification(r, degree_bound);
                if (!rep.pass) return tuple_text(params[i], t != RepType::A) + ": " + rep.problems.front();
                return std::string();
            },
            std::to_string(even_cases) + " with all blocks even, bound " + std::to_string(degree_bound)));
    }
    return out;
}

std::vector<SuiteItem> lemma_checks(int degree_bound) {
    std::vector<SuiteItem> out;
    for (const auto& r : tate_lemma_suite(degree_bound)) out.push_back({"tate_" + r.name, r.pass, r.witness + "; " + r.detail});
    return out;
}

std::vector<SuiteItem> anchor_checks() {
    std::vector<SuiteItem> out;
    auto run = [&](const std::string& name, auto&& f) {
        try {
            std::string msg = f();
            out.push_back({name, msg.empty(), msg.empty() ? "ok" : msg});
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    };
    run("type_a_blocks_1_2_concentrated_in_degree_0", [] {
        auto p = compute_type_a({1, 2});
        if (!p.exterior.empty()) return std::string("unexpected exterior generators");
        return expect_ranks(p, {{1, 0, 0, 0}});
    });
    run("type_a_blocks_1_1_1_single_generator_in_degree_minus_1", [] {
        auto p = compute_type_a({1, 1, 1});
        if (p.exterior.size() != 1 || p.exterior[0].degree != -1) return std::string("expected one exterior generator in W^-1");
        return expect_ranks(p, {{1, 1, 0, 0}});
    });
    run("type_c_m1_blocks_1_ranks_2_1_0_1", [] {
        auto p = compute_type_c(1, {1});
        std::string msg = expect_ranks(p, {{2, 1, 0, 1}});
        if (!msg.empty()) {
            auto a = compute_type_a({1, 3});
            msg += "; the same space is type A blocks (1,3) with ranks " + a.ranks.str() +
                   ", so total rank 4 is unattainable";
        }
        return msg;
    });
    run("type_c_m1_blocks_1_agrees_with_type_a_blocks_1_3", [] {
        auto c = compute_type_c(1, {1});
        auto a = compute_type_a({1, 3});
        return c.ranks == a.ranks ? std::string() : "type C " + c.ranks.str() + " vs type A " + a.ranks.str();
    });
    run("homogeneous_space_of_itself_is_a_point", [] {
        std::vector<std::pair<WittType, int>> cases;
        for (int n = 1; n <= 6; ++n) cases.push_back({WittType::A, n});
        for (int m = 1; m <= 6; ++m) cases.push_back({WittType::B, m});
        for (int m = 1; m <= 6; ++m) cases.push_back({WittType::C, m});
        for (int m = 2; m <= 6; ++m) cases.push_back({WittType::D, m});
        for (auto [t, n] : cases) {
            auto p = t == WittType::A ? compute_type_a({n}) : compute(t, n, {});
            if (p.ranks != RankVector{{1, 0, 0, 0}} || p.scalar_a != 1)
                return std::string(to_string(t)) + " size " + std::to_string(n) + ": a=" + std::to_string(p.scalar_a) + " ranks " + p.ranks.str();
        }
        return std::string();
    });
    return out;
}

std::vector<SuiteItem> run_suite(const std::string& suite, int max_size) {
    auto pick = [&](int def) { return max_size < 0 ? def : max_size; };
    std::vector<SuiteItem> out;
    auto add = [&](std::vector<SuiteItem> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (suite == "examples" || suite == "all") add(worked_example_checks());
    if (suite == "lemmas" || suite == "all") {
        add(classification_checks(pick(6), 6));
        add(lemma_checks(pick(8)));
    }
    if (suite == "series" || suite == "all") add(series_checks(pick(6), 4, 8));
    if (suite == "appendix" || suite == "all") add(appendix_checks(pick(12)));
    if (suite == "tables" || suite == "all") {
        add(family_regularity_checks(5, 4, kFamilyTotal, kFamilyTotal));
        add(family_reduction_checks(5, 4, kFamilyTotal, kFamilyTotal));
        add(rank_table_checks(pick(7)));
    }
    if (out.empty() && suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace wf
