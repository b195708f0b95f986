#include "wittflag/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wf {

namespace {

int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("lattice arithmetic overflow");
    return static_cast<int64_t>(v);
}

// row_a -= q * row_b
void axpy(IVec& a, const IVec& b, int64_t q) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = checked(static_cast<__int128>(a[i]) - static_cast<__int128>(q) * b[i]);
}

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Echelon form on the first `cols` columns using unimodular row operations; returns the rank.
int echelon(std::vector<IVec>& rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        for (;;) {
            int best = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][c] != 0 && (best < 0 || std::llabs(rows[i][c]) < std::llabs(rows[best][c]))) best = i;
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][c] == 0) continue;
                axpy(rows[i], rows[r], rows[i][c] / rows[r][c]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < static_cast<int>(rows.size()) && rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& x : rows[r]) x = -x;
            for (int i = 0; i < r; ++i) axpy(rows[i], rows[r], floor_div(rows[i][c], rows[r][c]));
            ++r;
        }
    }
    return r;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

int pivot(const IVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return static_cast<int>(i);
    return -1;
}

IVec apply_t(const LatticeModule& m, const IVec& x, int s) {
    // returns x + s*T(x)
    IVec y = x;
    for (int i = 0; i < m.n; ++i)
        if (x[i]) y[m.perm[i]] = checked(static_cast<__int128>(y[m.perm[i]]) + static_cast<__int128>(s) * m.sign[i] * x[i]);
    return y;
}

std::vector<IVec> carrier_of(const LatticeModule& m) {
    if (!m.carrier.empty()) return hnf(m.carrier);
    std::vector<IVec> id;
    for (int i = 0; i < m.n; ++i) {
        IVec e(m.n, 0);
        e[i] = 1;
        id.push_back(e);
    }
    return id;
}

// Cycles {x in C : (1 - parity T) x in L} and boundaries L + (1 + parity T) C.
std::pair<std::vector<IVec>, std::vector<IVec>> cycles_boundaries(const LatticeModule& m, int parity) {
    auto c = carrier_of(m);
    auto l = hnf(m.relations);
    std::vector<IVec> bnd = l;
    for (const auto& v : c) bnd.push_back(apply_t(m, v, parity));
    bnd = hnf(bnd);

    // kernel of [ (1 - parity T) c_1 .. c_k | -l_1 .. -l_j ]
    int k = static_cast<int>(c.size()), j = static_cast<int>(l.size());
    std::vector<IVec> a(m.n, IVec(k + j, 0));
    for (int col = 0; col < k; ++col) {
        IVec img = apply_t(m, c[col], -parity);
        for (int i = 0; i < m.n; ++i) a[i][col] = img[i];
    }
    for (int col = 0; col < j; ++col)
        for (int i = 0; i < m.n; ++i) a[i][k + col] = -l[col][i];
    std::vector<IVec> cyc;
    for (const auto& kv : integer_kernel(a, k + j)) {
        IVec x(m.n, 0);
        for (int col = 0; col < k; ++col)
            for (int i = 0; i < m.n; ++i) x[i] = checked(static_cast<__int128>(x[i]) + static_cast<__int128>(kv[col]) * c[col][i]);
        cyc.push_back(x);
    }
    return {hnf(cyc), bnd};
}

}  // namespace

std::vector<IVec> hnf(std::vector<IVec> rows) {
    if (rows.empty()) return rows;
    int cols = static_cast<int>(rows[0].size());
    int r = echelon(rows, cols);
    rows.resize(r);
    return rows;
}

std::vector<IVec> integer_kernel(const std::vector<IVec>& a, int n) {
    int m = static_cast<int>(a.size());
    std::vector<IVec> rows(n, IVec(m + n, 0));
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < m; ++r) rows[i][r] = a[r][i];
        rows[i][m + i] = 1;
    }
    int rank = echelon(rows, m);
    std::vector<IVec> ker;
    for (int i = rank; i < n; ++i) ker.emplace_back(rows[i].begin() + m, rows[i].end());
    return hnf(ker);
}

bool lattice_coords(const std::vector<IVec>& basis, IVec v, IVec* coords) {
    IVec c(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        int p = pivot(basis[i]);
        if (v[p] % basis[i][p] != 0) return false;
        c[i] = v[p] / basis[i][p];
        axpy(v, basis[i], c[i]);
    }
    if (!is_zero(v)) return false;
    if (coords) *coords = c;
    return true;
}

int log2_index(const std::vector<IVec>& big, const std::vector<IVec>& small) {
    auto b = hnf(big);
    std::vector<IVec> coords;
    for (const auto& s : small) {
        IVec c;
        if (!lattice_coords(b, s, &c)) throw std::logic_error("sublattice not contained in lattice");
        coords.push_back(c);
    }
    auto h = hnf(coords);
    if (h.size() != b.size()) throw std::logic_error("index of lattices with different rank");
    int bits = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        int64_t d = h[i][i];
        if (d <= 0 || (d & (d - 1)) != 0) throw std::logic_error("index is not a power of two");
        while (d > 1) {
            d >>= 1;
            ++bits;
        }
    }
    return bits;
}

TateDims lattice_tate(const LatticeModule& m) {
    TateDims t;
    auto [cp, bp] = cycles_boundaries(m, +1);
    t.plus = log2_index(cp, bp);
    auto [cm, bm] = cycles_boundaries(m, -1);
    t.minus = log2_index(cm, bm);
    return t;
}

int class_rank(const LatticeModule& m, int parity, const std::vector<IVec>& reps) {
    auto [cyc, bnd] = cycles_boundaries(m, parity);
    for (const auto& r : reps)
        if (!lattice_coords(cyc, r, nullptr)) throw std::logic_error("representative is not a cycle");
    std::vector<IVec> wider = bnd;
    wider.insert(wider.end(), reps.begin(), reps.end());
    return log2_index(cyc, bnd) - log2_index(cyc, wider);
}

ZPoly ZAlgebra::var(int i) const {
    Exp e(nvars(), 0);
    e[i] = 1;
    return normal(ZPoly{{{e, 1}}});
}

ZPoly ZAlgebra::constant(int64_t c) const {
    ZPoly p;
    if (c) p.terms[Exp(nvars(), 0)] = c;
    return p;
}

ZPoly ZAlgebra::add(const ZPoly& a, const ZPoly& b) const {
    ZPoly r = a;
    for (const auto& [e, c] : b.terms)
        if ((r.terms[e] += c) == 0) r.terms.erase(e);
    return r;
}

ZPoly ZAlgebra::scale(const ZPoly& a, int64_t c) const {
    ZPoly r;
    if (c == 0) return r;
    for (const auto& [e, x] : a.terms) r.terms[e] = checked(static_cast<__int128>(x) * c);
    return r;
}

ZPoly ZAlgebra::mul(const ZPoly& a, const ZPoly& b) const {
    ZPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exp e(nvars());
            for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
            int64_t c = checked(static_cast<__int128>(ca) * cb);
            if ((r.terms[e] += c) == 0) r.terms.erase(e);
        }
    return normal(r);
}

ZPoly ZAlgebra::star(const ZPoly& a) const {
    ZPoly r;
    for (const auto& [e, c] : a.terms) {
        Exp f(nvars(), 0);
        int64_t s = c;
        for (int i = 0; i < nvars(); ++i) {
            f[perm[i]] += e[i];
            if (sign[i] < 0 && e[i] % 2) s = -s;
        }
        if ((r.terms[f] += s) == 0) r.terms.erase(f);
    }
    return normal(r);
}

ZPoly ZAlgebra::normal(const ZPoly& a) const {
    if (capped < 0) return a;
    ZPoly r;
    std::vector<std::pair<Exp, int64_t>> work(a.terms.begin(), a.terms.end());
    while (!work.empty()) {
        auto [e, c] = work.back();
        work.pop_back();
        if (e[capped] < cap) {
            if ((r.terms[e] += c) == 0) r.terms.erase(e);
            continue;
        }
        e[capped] -= cap;
        for (const auto& [re, rc] : replacement.terms) {
            Exp f(nvars());
            for (int i = 0; i < nvars(); ++i) f[i] = e[i] + re[i];
            work.emplace_back(f, checked(static_cast<__int128>(c) * rc));
        }
    }
    return r;
}

int ZAlgebra::degree(const Exp& e) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights[i] * e[i];
    return d;
}

std::vector<Exp> ZAlgebra::basis(int d) const {
    std::vector<Exp> out;
    Exp e(nvars(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int k = 0; k * weights[i] <= left; ++k) {
            if (i == capped && k >= cap) break;
            e[i] = k;
            rec(i + 1, left - k * weights[i]);
        }
        e[i] = 0;
    };
    if (d >= 0) rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

IVec ZAlgebra::coords(const ZPoly& p, const std::vector<Exp>& basis) const {
    IVec v(basis.size(), 0);
    for (const auto& [e, c] : p.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), e);
        if (it == basis.end() || *it != e) throw std::logic_error("monomial outside the graded piece");
        v[it - basis.begin()] = c;
    }
    return v;
}

LatticeModule ZAlgebra::piece(int d) const {
    auto b = basis(d);
    LatticeModule m;
    m.n = static_cast<int>(b.size());
    m.perm.resize(m.n);
    m.sign.resize(m.n);
    for (int i = 0; i < m.n; ++i) {
        ZPoly img = star(ZPoly{{{b[i], 1}}});
        if (img.terms.size() != 1) throw std::logic_error("involution does not permute the monomial basis");
        auto [e, c] = *img.terms.begin();
        if (c != 1 && c != -1) throw std::logic_error("involution does not permute the monomial basis");
        m.perm[i] = static_cast<int>(std::lower_bound(b.begin(), b.end(), e) - b.begin());
        m.sign[i] = static_cast<int>(c);
    }
    return m;
}

std::string ZAlgebra::str(const ZPoly& p) const {
    if (p.terms.empty()) return "0";
    std::string s;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < nvars(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        int64_t a = c < 0 ? -c : c;
        if (mono.empty()) s += std::to_string(a);
        else s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    }
    return s;
}

}  // namespace wf
