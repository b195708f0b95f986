#include <algorithm>

#include "wittflag/star_monomial.hpp"

namespace wf {

const char* to_string(RepType t) {
    switch (t) {
        case RepType::A: return "A";
        case RepType::B: return "B";
        case RepType::C: return "C";
    }
    return "?";
}

namespace {

int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string xname(int k, int p) { return "x" + std::to_string(k) + "_" + std::to_string(p + 1); }

struct Builder {
    StarRing r;
    std::vector<std::vector<int>> xidx;  // xidx[p][k] generator index, -1 if not a generator

    int add(StarGen g) {
        r.gens.push_back(std::move(g));
        return r.size() - 1;
    }

    void add_blocks(bool eliminate_last) {
        int l = static_cast<int>(r.blocks.size());
        xidx.assign(l, {});
        for (int p = 0; p < l; ++p) {
            int n = r.blocks[p];
            xidx[p].assign(n + 1, -1);
            for (int k = 1; k < n; ++k) xidx[p][k] = add({xname(k, p), false, 0, binom(n, k)});
            if (!(eliminate_last && p == l - 1)) xidx[p][n] = add({xname(n, p), true, 0, 1});
        }
    }

    // Monomials are built only after all generators exist.
    SMono x(int k, int p) const {
        SMono e = r.one();
        int n = r.blocks[p];
        if (k == 0) return e;
        if (xidx[p][k] >= 0) {
            e[xidx[p][k]] = 1;
            return e;
        }
        // eliminated top generator of the last block: inverse of the other top generators
        for (int q = 0; q < p; ++q) e[xidx[q][r.blocks[q]]] -= 1;
        (void)n;
        return e;
    }

    SMono block_dual(int k, int p) const { return r.mul(r.pow(x(r.blocks[p], p), -1), x(r.blocks[p] - k, p)); }

    void block_involution() {
        for (size_t p = 0; p < r.blocks.size(); ++p)
            for (int k = 1; k <= r.blocks[p]; ++k)
                if (xidx[p][k] >= 0) r.involution[xidx[p][k]] = block_dual(k, static_cast<int>(p));
    }

    void alpha_claims() {
        for (size_t p = 0; p < r.blocks.size(); ++p)
            for (int i = 1; i <= r.blocks[p] / 2; ++i) {
                SMono xi = x(i, static_cast<int>(p));
                r.claim.push_back({"alpha" + std::to_string(i) + "_" + std::to_string(p + 1), r.mul(xi, r.dual(xi)), false});
            }
    }

    SMono half_product() const {
        SMono e = r.one();
        for (size_t p = 0; p < r.blocks.size(); ++p) e = r.mul(e, x(r.blocks[p] / 2, static_cast<int>(p)));
        return e;
    }
};

bool all_even(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 0; });
}

}  // namespace

SMono StarRing::gen(int i) const {
    SMono e = one();
    e[i] = 1;
    return e;
}

SMono StarRing::mul(const SMono& a, const SMono& b) const {
    SMono c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    if (capped >= 0)
        while (c[capped] >= gens[capped].cap) {
            c[capped] -= gens[capped].cap;
            for (size_t i = 0; i < c.size(); ++i) c[i] += cap_image[i];
        }
    return c;
}

SMono StarRing::pow(const SMono& a, int k) const {
    if (k < 0) {
        for (int i = 0; i < size(); ++i)
            if (a[i] && !gens[i].laurent) throw StarError("inverse of a non-Laurent monomial");
        SMono c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i] * -k;
        return c;
    }
    SMono c = one();
    for (int i = 0; i < k; ++i) c = mul(c, a);
    return c;
}

SMono StarRing::dual(const SMono& a) const {
    SMono c = one();
    for (int i = 0; i < size(); ++i) {
        if (!a[i]) continue;
        if (a[i] > 0) {
            c = mul(c, pow(involution[i], a[i]));
        } else {
            c = mul(c, pow(involution[i], a[i]));
        }
    }
    return c;
}

int StarRing::degree(const SMono& a) const {
    int d = 0;
    for (int i = 0; i < size(); ++i)
        if (!gens[i].laurent) d += a[i];
    return d;
}

__int128 StarRing::rank(const SMono& a) const {
    __int128 r = 1;
    for (int i = 0; i < size(); ++i) {
        if (a[i] < 0 && gens[i].rank != 1) throw StarError("negative power of a generator of rank > 1");
        for (int k = 0; k < a[i]; ++k) {
            r *= gens[i].rank;
            if (r > (static_cast<__int128>(1) << 100)) throw std::overflow_error("rank overflow");
        }
    }
    return r;
}

std::string StarRing::str(const SMono& a) const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "*";
        s += gens[i].name;
        if (a[i] != 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

int StarRing::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (gens[i].name == name) return i;
    return -1;
}

StarRing build_repring(RepType type, int m, const std::vector<int>& blocks) {
    if (m < 0) throw StarError("m must be non-negative");
    for (int b : blocks)
        if (b < 1) throw StarError("blocks must be positive integers");
    if (type == RepType::A && blocks.empty()) throw StarError("type A needs at least one block");
    if (type == RepType::A && m != 0) throw StarError("type A takes no m");
    if (blocks.empty() && m == 0) throw StarError("empty parameter list");

    Builder b;
    b.r.type = type;
    b.r.m = m;
    b.r.blocks = blocks;
    int l = static_cast<int>(blocks.size());

    switch (type) {
        case RepType::A: {
            b.add_blocks(true);
            b.r.involution.assign(b.r.size(), {});
            b.block_involution();
            std::string rel;
            for (int p = 0; p < l; ++p) rel += (p ? "*" : "") + xname(blocks[p], p);
            b.r.relation = rel + " = 1";
            b.alpha_claims();
            if (all_even(blocks)) {
                b.r.claim.push_back({"epsilon", b.half_product(), true});
                b.r.claim_text = "Z2[alpha] (x) Z2[epsilon] / (epsilon^2 + prod alpha_{n_p/2})";
            } else {
                b.r.claim_text = "Z2[alpha]";
            }
            break;
        }
        case RepType::B: {
            b.add_blocks(false);
            std::vector<int> ys;
            for (int j = 1; j < m; ++j) ys.push_back(b.add({"y" + std::to_string(j), false, 0, binom(2 * m + 1, j)}));
            int t = b.add({"t", false, m == 0 ? 2 : 0, m == 0 ? 1 : (int64_t{1} << m)});
            b.r.involution.assign(b.r.size(), {});
            b.block_involution();
            SMono top = b.r.one();
            for (int p = 0; p < l; ++p) top = b.r.mul(top, b.x(blocks[p], p));
            for (int y : ys) b.r.involution[y] = b.r.gen(y);
            b.r.involution[t] = b.r.mul(b.r.gen(t), top);
            if (m == 0) {
                b.r.capped = t;
                b.r.cap_image = b.r.pow(top, -1);
                b.r.relation = "t^2 = (prod x_{n_p})^-1";
            }
            b.alpha_claims();
            for (int j = 1; j < m; ++j) b.r.claim.push_back({"beta" + std::to_string(j), b.r.gen(ys[j - 1]), false});
            if (m > 0) b.r.claim.push_back({"beta" + std::to_string(m), b.r.mul(b.r.gen(t), b.r.dual(b.r.gen(t))), false});
            if (all_even(blocks)) {
                b.r.claim.push_back({"delta", b.r.mul(b.r.gen(t), b.half_product()), true});
                b.r.claim_text = "Z2[alpha, beta] (x) Z2[delta] / (delta^2 + (1 + sum beta) prod alpha_{n_p/2})";
            } else {
                b.r.claim_text = "Z2[alpha, beta]";
            }
            break;
        }
        case RepType::C: {
            b.add_blocks(false);
            std::vector<int> zs;
            for (int j = 1; j <= m; ++j) zs.push_back(b.add({"z" + std::to_string(j), false, 0, binom(2 * m, j)}));
            b.r.involution.assign(b.r.size(), {});
            b.block_involution();
            for (int z : zs) b.r.involution[z] = b.r.gen(z);
            b.alpha_claims();
            for (int j = 1; j <= m; ++j) b.r.claim.push_back({"gamma" + std::to_string(j), b.r.gen(zs[j - 1]), false});
            b.r.claim_text = "Z2[alpha, gamma]";
            break;
        }
    }

    for (int i = 0; i < b.r.size(); ++i) {
        if (b.r.dual(b.r.involution[i]) != b.r.gen(i)) throw std::logic_error("involution is not an involution on " + b.r.gens[i].name);
        if (b.r.gens[i].laurent && b.r.involution[i] != b.r.pow(b.r.gen(i), -1))
            throw std::logic_error("Laurent generator is not dual to its inverse");
        if (b.r.rank(b.r.involution[i]) != b.r.gens[i].rank) throw std::logic_error("duality does not preserve rank");
    }
    return b.r;
}

}  // namespace wf
