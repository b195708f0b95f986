#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wittflag/star_monomial.hpp"

namespace wf {

namespace {

std::vector<int> non_laurent(const StarRing& r) {
    std::vector<int> v;
    for (int i = 0; i < r.size(); ++i)
        if (!r.gens[i].laurent) v.push_back(i);
    return v;
}

// Calls f on every exponent vector over the non-Laurent generators with total <= bound.
void for_each_exponent(const StarRing& r, int bound, const std::function<void(const SMono&)>& f) {
    auto idx = non_laurent(r);
    SMono e = r.one();
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == idx.size()) {
            f(e);
            return;
        }
        int g = idx[i];
        int top = r.gens[g].cap > 0 ? std::min(left, r.gens[g].cap - 1) : left;
        for (int k = 0; k <= top; ++k) {
            e[g] = k;
            rec(i + 1, left - k);
        }
        e[g] = 0;
    };
    rec(0, bound);
}

bool is_self_dual(const StarRing& r, const SMono& a) { return r.dual(a) == a; }

}  // namespace

std::vector<SMono> self_dual_monomials(const StarRing& r, int degree_bound) {
    std::vector<SMono> out;
    for_each_exponent(r, degree_bound, [&](const SMono& e) {
        SMono d = r.dual(e);
        for (int i = 0; i < r.size(); ++i) {
            if (r.gens[i].laurent) {
                if (d[i] % 2) return;
            } else if (d[i] != e[i]) {
                return;
            }
        }
        SMono mono = e;
        for (int i = 0; i < r.size(); ++i)
            if (r.gens[i].laurent) mono[i] = d[i] / 2;
        if (!is_self_dual(r, mono)) throw std::logic_error("self-dual completion failed for " + r.str(mono));
        out.push_back(mono);
    });
    std::sort(out.begin(), out.end(), [&](const SMono& a, const SMono& b) {
        int da = r.degree(a), db = r.degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

TateClasses tate_of_signed_module(const SignedModule& m) {
    TateClasses t;
    size_t n = m.basis.size();
    if (m.image.size() != n || m.sign.size() != n) throw std::invalid_argument("signed module size mismatch");
    for (size_t i = 0; i < n; ++i) {
        size_t j = static_cast<size_t>(m.image[i]);
        if (j >= n || static_cast<size_t>(m.image[j]) != i || m.sign[i] * m.sign[j] != 1)
            throw std::invalid_argument("involution does not square to the identity");
        if (j != i) continue;
        (m.sign[i] > 0 ? t.plus_basis : t.minus_basis).push_back(m.basis[i]);
    }
    return t;
}

SignedModule truncated_module(const StarRing& r, int degree_bound, int box) {
    std::vector<int> laurent;
    for (int i = 0; i < r.size(); ++i)
        if (r.gens[i].laurent) laurent.push_back(i);
    std::vector<SMono> monos;
    for_each_exponent(r, degree_bound, [&](const SMono& e) {
        SMono x = e;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == laurent.size()) {
                monos.push_back(x);
                return;
            }
            for (int k = -box; k <= box; ++k) {
                x[laurent[i]] = k;
                rec(i + 1);
            }
        };
        rec(0);
    });
    std::sort(monos.begin(), monos.end());
    auto find = [&](const SMono& a) {
        auto it = std::lower_bound(monos.begin(), monos.end(), a);
        return it != monos.end() && *it == a ? static_cast<int>(it - monos.begin()) : -1;
    };
    std::vector<SMono> kept;
    for (const auto& a : monos)
        if (find(r.dual(a)) >= 0) kept.push_back(a);
    monos = kept;
    SignedModule mod;
    for (const auto& a : monos) {
        mod.basis.push_back(r.str(a));
        mod.image.push_back(find(r.dual(a)));
        mod.sign.push_back(1);
    }
    return mod;
}

ClassificationReport verify_tate_classification(const StarRing& r, int degree_bound) {
    ClassificationReport rep;
    int nd = degree_bound + 1;
    rep.self_dual.assign(nd, 0);
    rep.presentation.assign(nd, 0);

    std::set<SMono> self_dual;
    for (const auto& a : self_dual_monomials(r, degree_bound)) {
        int d = r.degree(a);
        if (d >= 0 && d < nd) ++rep.self_dual[d];
        self_dual.insert(a);
    }

    for (const auto& c : r.claim) {
        if (!is_self_dual(r, c.image)) rep.problems.push_back("claim " + c.name + " -> " + r.str(c.image) + " is not self-dual");
        if (r.degree(c.image) <= 0) rep.problems.push_back("claim " + c.name + " has non-positive degree");
    }

    // Presentation basis: monomials in the claim generators, square-root generators to exponent <= 1.
    if (rep.problems.empty()) {
        std::set<SMono> images;
        SMono cur = r.one();
        std::function<void(size_t, int)> rec = [&](size_t i, int deg) {
            if (i == r.claim.size()) {
                ++rep.presentation[deg];
                if (!images.insert(cur).second) rep.problems.push_back("presentation monomials collide at " + r.str(cur));
                if (!self_dual.count(cur)) rep.problems.push_back("presentation image " + r.str(cur) + " is not an enumerated self-dual monomial");
                return;
            }
            const auto& c = r.claim[i];
            int dc = r.degree(c.image);
            SMono saved = cur;
            int top = c.square_root ? 1 : degree_bound;
            for (int k = 0; k <= top && deg + k * dc <= degree_bound; ++k) {
                rec(i + 1, deg + k * dc);
                cur = r.mul(cur, c.image);
            }
            cur = saved;
        };
        rec(0, 0);
    }

    for (int d = 0; d < nd; ++d)
        if (rep.self_dual[d] != rep.presentation[d]) {
            rep.first_mismatch = d;
            rep.problems.push_back("degree " + std::to_string(d) + ": " + std::to_string(rep.self_dual[d]) +
                                   " self-dual monomials vs " + std::to_string(rep.presentation[d]) + " presentation monomials");
            break;
        }

    rep.minus_empty = tate_of_signed_module(truncated_module(r, std::min(degree_bound, 4))).minus_basis.empty();
    if (!rep.minus_empty) rep.problems.push_back("h^- of the truncated monomial module is non-zero");
    rep.pass = rep.problems.empty();
    return rep;
}

}  // namespace wf
