#include "wittflag/series.hpp"

#include <algorithm>
#include <map>

namespace wf {

WindowedSeries::WindowedSeries(int lo, int hi) : lo_(lo), hi_(hi), bits_(hi >= lo ? hi - lo + 1 : 0, 0) {}

void WindowedSeries::flip(int e) {
    if (e < lo_ || e > hi_) throw std::out_of_range("exponent outside window");
    bits_[e - lo_] ^= 1;
}

void WindowedSeries::set(int e, int b) {
    if (e < lo_ || e > hi_) throw std::out_of_range("exponent outside window");
    bits_[e - lo_] = static_cast<uint8_t>(b & 1);
}

int WindowedSeries::top() const {
    for (int e = hi_; e >= lo_; --e)
        if (bit(e)) return e;
    return lo_ - 1;
}

std::vector<int> WindowedSeries::support() const {
    std::vector<int> s;
    for (int e = lo_; e <= hi_; ++e)
        if (bit(e)) s.push_back(e);
    return s;
}

WindowedSeries WindowedSeries::operator+(const WindowedSeries& o) const {
    WindowedSeries r(std::max(lo_, o.lo_), std::min(hi_, o.hi_));
    for (int e = r.lo_; e <= r.hi_; ++e) r.set(e, bit(e) ^ o.bit(e));
    return r;
}

bool WindowedSeries::operator==(const WindowedSeries& o) const { return lo_ == o.lo_ && hi_ == o.hi_ && bits_ == o.bits_; }

std::string WindowedSeries::str() const {
    std::string s = "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]{";
    bool first = true;
    for (int e = hi_; e >= lo_; --e) {
        if (!bit(e)) continue;
        if (!first) s += ", ";
        s += std::to_string(e) + ":1";
        first = false;
    }
    return s + "}";
}

RationalSeries RationalSeries::monomial(int exp, int e) { return {{exp}, e}; }

RationalSeries RationalSeries::laurent(std::vector<int> exps, int e) {
    std::map<int, int> c;
    for (int x : exps) c[x] ^= 1;
    RationalSeries r;
    r.e = e;
    for (auto [x, b] : c)
        if (b) r.numerator.push_back(x);
    return r;
}

int RationalSeries::max_exp() const { return numerator.empty() ? 0 : numerator.back(); }
int RationalSeries::min_exp() const { return numerator.empty() ? 0 : numerator.front(); }

std::string RationalSeries::str() const {
    std::string s;
    for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (*it == 0) s += "1";
        else if (*it == 1) s += "t";
        else s += "t^" + std::to_string(*it);
    }
    if (s.empty()) s = "0";
    return s + " / (1+t^-1)^" + std::to_string(e);
}

WindowedSeries expand(const RationalSeries& r, int lo, int hi) {
    WindowedSeries w(lo, hi);
    for (int E = lo; E <= hi; ++E) {
        int b = 0;
        for (int a : r.numerator) {
            if (a < E) continue;
            int j = a - E;
            b ^= r.e == 0 ? (j == 0) : binom_mod2(static_cast<long long>(j) + r.e - 1, j);
        }
        w.set(E, b);
    }
    return w;
}

SeriesRing series_ring(const std::vector<int>& blocks) {
    SeriesRing s;
    s.mu = mu_family(blocks);
    s.k = static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](int n) { return n % 2; }));
    s.half = s.mu.half_sum();
    return s;
}

Poly2 psi(int k, const SeriesRing& ring, const WindowedSeries& q) {
    if (k != ring.k) throw PolyError("psi: k does not match the number of odd blocks");
    if (q.lo() > ring.lo())
        throw WindowTooNarrow("WINDOW-TOO-NARROW: window starts at " + std::to_string(q.lo()) + ", sigma is non-zero from " +
                              std::to_string(ring.lo()));
    Poly2 out = Poly2::zero(ring.mu.ring);
    for (int j = std::max(q.lo(), ring.lo()); j <= std::min(q.hi(), ring.hi()); ++j)
        if (q.bit(j)) out += sigma(ring.mu, j);
    return out;
}

std::vector<KernelMember> kernel_family(int k, int s_bound) {
    std::vector<KernelMember> out;
    auto p_label = [](int a, int e) {
        std::string s = "P" + std::to_string(a);
        if (e) s += "/(1+t^-1)^" + std::to_string(e);
        return s;
    };
    if (k >= 3 && k % 2 == 1) {
        int m = (k - 1) / 2;
        for (int j = 0; j < m; ++j)
            out.push_back({p_label(k - 2 * j, 2 * j), RationalSeries::monomial(m - j, 2 * j + 1), m - j, true});
    }
    if (k >= 2 && k % 2 == 0) {
        int m = k / 2;
        out.push_back({"t^" + std::to_string(m), RationalSeries::monomial(m), m, false});
        for (int j = 0; j + 1 < m; ++j)
            out.push_back({p_label(k - 2 * j - 1, 2 * j + 1), RationalSeries::monomial(m - 1 - j, 2 * j + 2), m - 1 - j, true});
    }
    for (int s = -((k - 1) / 2); s <= s_bound; ++s) {
        if (-s == s + k) continue;
        out.push_back({"t^" + std::to_string(-s) + " + t^" + std::to_string(s + k), RationalSeries::laurent({-s, s + k}),
                       std::max(-s, s + k), false});
    }
    return out;
}

KernelReport verify_kernel(int k, const std::vector<int>& blocks, int s_bound) {
    KernelReport rep;
    SeriesRing ring = series_ring(blocks);
    if (ring.k != k) {
        rep.pass = false;
        rep.failures.push_back("blocks have " + std::to_string(ring.k) + " odd entries, expected " + std::to_string(k));
        return rep;
    }
    for (const auto& km : kernel_family(k, s_bound)) {
        const auto& r = km.series;
        int guard = r.e + (r.max_exp() - r.min_exp());
        int lo = std::min(ring.lo(), r.min_exp()) - guard;
        int hi = std::max(ring.hi(), r.max_exp());
        WindowedSeries w = expand(r, lo, hi);
        Poly2 v = psi(k, ring, w);
        ++rep.checked;
        if (!v.is_zero()) {
            rep.pass = false;
            rep.failures.push_back("NONZERO " + km.label + ": " + v.str());
        }
        if (km.triangular && w.top() != km.expected_top) {
            rep.pass = false;
            rep.failures.push_back("top degree of " + km.label + " is " + std::to_string(w.top()) + ", expected " +
                                   std::to_string(km.expected_top));
        }
    }
    return rep;
}

bool psi_recursion_holds(const std::vector<int>& blocks, const std::vector<int>& q_exponents) {
    SeriesRing ring = series_ring(blocks);
    if (ring.k == 0) throw PolyError("psi recursion needs an odd block");
    int last = -1;
    for (int p : ring.mu.block_order)
        if (blocks[p] % 2) last = p;
    const RelationFamily& f = ring.mu;
    std::vector<AliasedBlock> rest;
    for (size_t p = 0; p < blocks.size(); ++p)
        if (static_cast<int>(p) != last) rest.push_back(f.aliased[p]);
    std::vector<Poly2> mu_rest = mu_sequence(f.ring, rest);
    const AliasedBlock& L = f.aliased[last];
    int half_rest = ring.half - L.size / 2;
    auto sigma_rest = [&](int j) {
        int idx = j + half_rest;
        if (idx < 0 || idx >= static_cast<int>(mu_rest.size())) return Poly2::zero(f.ring);
        return mu_rest[idx];
    };

    auto q = RationalSeries::laurent(q_exponents);
    int lo = std::min(ring.lo(), q.min_exp()), hi = std::max(ring.hi(), q.max_exp());
    Poly2 lhs = psi(ring.k, ring, expand(q, lo, hi));

    Poly2 rhs = Poly2::zero(f.ring);
    for (int i = 1; i + L.size / 2 <= L.size; ++i) {
        Poly2 inner = Poly2::zero(f.ring);
        for (int a : q.numerator) inner += sigma_rest(a - i) + sigma_rest(a + i - 1);
        rhs += L.gen(f.ring, i + L.size / 2) * inner;
    }
    return lhs == rhs;
}

}  // namespace wf
