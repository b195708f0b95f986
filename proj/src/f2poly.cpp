#include "wittflag/f2poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wf {

RingPtr Ring::make(std::vector<Variable> vars) {
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw PolyError("too many variables: " + std::to_string(vars.size()));
    auto r = std::make_shared<Ring>();
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].weight < 0) throw PolyError("negative weight for " + vars[i].name);
        if (!r->index_.emplace(vars[i].name, static_cast<int>(i)).second)
            throw PolyError("duplicate variable " + vars[i].name);
    }
    r->vars_ = std::move(vars);
    return r;
}

RingPtr Ring::reweighted(const std::vector<int>& weights) const {
    if (static_cast<int>(weights.size()) != size()) throw PolyError("weight vector size mismatch");
    auto v = vars_;
    for (size_t i = 0; i < v.size(); ++i) v[i].weight = weights[i];
    return make(std::move(v));
}

int Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool Ring::same_variables(const Ring& other) const {
    if (this == &other) return true;
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].weight != other.vars_[i].weight) return false;
    return true;
}

int compare(const Mono& a, const Mono& b, int n) {
    if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg ? 1 : -1;
    if (a.tdeg != b.tdeg) return a.tdeg > b.tdeg ? 1 : -1;
    for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

bool divides(const Mono& a, const Mono& b, int n) {
    if (a.tdeg > b.tdeg) return false;
    for (int i = 0; i < n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

bool coprime(const Mono& a, const Mono& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

void mono_refresh(Mono& m, const Ring& r) {
    m.wdeg = 0;
    m.tdeg = 0;
    for (int i = 0; i < r.size(); ++i) {
        m.wdeg += m.e[i] * r.var(i).weight;
        m.tdeg += m.e[i];
    }
}

Mono mono_mul(const Mono& a, const Mono& b, int n, const Ring&) {
    Mono m;
    for (int i = 0; i < n; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255) throw PolyError("exponent overflow");
        m.e[i] = static_cast<uint8_t>(s);
    }
    m.wdeg = a.wdeg + b.wdeg;
    m.tdeg = a.tdeg + b.tdeg;
    return m;
}

Mono mono_div(const Mono& a, const Mono& b, int n, const Ring&) {
    Mono m;
    for (int i = 0; i < n; ++i) m.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
    m.wdeg = a.wdeg - b.wdeg;
    m.tdeg = a.tdeg - b.tdeg;
    return m;
}

Mono mono_lcm(const Mono& a, const Mono& b, int n, const Ring& r) {
    Mono m;
    for (int i = 0; i < n; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    mono_refresh(m, r);
    return m;
}

Mono mono_var(const Ring& r, int i, int exp) {
    if (exp < 0 || exp > 255) throw PolyError("exponent out of range");
    Mono m;
    m.e[i] = static_cast<uint8_t>(exp);
    mono_refresh(m, r);
    return m;
}

Poly2 Poly2::one(RingPtr r) {
    Poly2 p(std::move(r));
    p.terms_.push_back(Mono{});
    return p;
}

Poly2 Poly2::constant(RingPtr r, int bit) { return (bit & 1) ? one(std::move(r)) : zero(std::move(r)); }

Poly2 Poly2::var(RingPtr r, int i) {
    if (i < 0 || i >= r->size()) throw PolyError("variable index out of range");
    Poly2 p(r);
    p.terms_.push_back(mono_var(*r, i));
    return p;
}

Poly2 Poly2::var(RingPtr r, const std::string& name) {
    int i = r->index_of(name);
    if (i < 0) throw PolyError("unknown variable " + name);
    return var(std::move(r), i);
}

Poly2 Poly2::from_mono(RingPtr r, const Mono& m) {
    Poly2 p(std::move(r));
    p.terms_.push_back(m);
    return p;
}

Poly2 Poly2::from_sorted(RingPtr r, std::vector<Mono> terms) {
    Poly2 p(std::move(r));
    p.terms_ = std::move(terms);
    return p;
}

Poly2 Poly2::from_terms(RingPtr r, std::vector<Mono> terms) {
    int n = r->size();
    std::sort(terms.begin(), terms.end(), [n](const Mono& a, const Mono& b) { return compare(a, b, n) > 0; });
    Poly2 p(std::move(r));
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) p.terms_.push_back(terms[i]);
        i = j;
    }
    return p;
}

int Poly2::degree() const { return terms_.empty() ? -1 : terms_.front().wdeg; }

int Poly2::constant_term() const { return (!terms_.empty() && terms_.back().is_one()) ? 1 : 0; }

void Poly2::check_ring(const Poly2& o) const {
    if (!ring_ || !o.ring_) throw PolyError("polynomial without ring");
    if (ring_ != o.ring_ && !ring_->same_variables(*o.ring_)) throw PolyError("variable-set mismatch");
}

Poly2 Poly2::operator+(const Poly2& o) const {
    check_ring(o);
    int n = ring_->size();
    Poly2 out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare(terms_[i], o.terms_[j], n);
        if (c > 0) out.terms_.push_back(terms_[i++]);
        else if (c < 0) out.terms_.push_back(o.terms_[j++]);
        else { ++i; ++j; }
    }
    out.terms_.insert(out.terms_.end(), terms_.begin() + i, terms_.end());
    out.terms_.insert(out.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return out;
}

Poly2& Poly2::operator+=(const Poly2& o) { return *this = *this + o; }

Poly2 Poly2::mul_mono(const Mono& m) const {
    Poly2 out(ring_);
    out.terms_.reserve(terms_.size());
    int n = ring_->size();
    for (const auto& t : terms_) out.terms_.push_back(mono_mul(t, m, n, *ring_));
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Poly2(ring_);
    int n = ring_->size();
    std::vector<Mono> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prods.push_back(mono_mul(a, b, n, *ring_));
    return from_terms(ring_, std::move(prods));
}

Poly2 Poly2::pow(int k) const {
    if (k < 0) throw PolyError("negative power");
    Poly2 result = one(ring_), base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool Poly2::operator==(const Poly2& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

Poly2 Poly2::substitute(int v, const Poly2& value) const {
    check_ring(value);
    int n = ring_->size();
    Poly2 out(ring_);
    std::vector<Poly2> powers{one(ring_)};
    for (const auto& t : terms_) {
        int k = t.e[v];
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
        Mono rest = t;
        rest.e[v] = 0;
        mono_refresh(rest, *ring_);
        out += powers[k].mul_mono(rest);
    }
    (void)n;
    return out;
}

Poly2 Poly2::homogeneous_component(int d) const {
    Poly2 out(ring_);
    for (const auto& t : terms_)
        if (t.wdeg == d) out.terms_.push_back(t);
    return out;
}

Poly2 Poly2::leading_form() const {
    if (is_zero()) return *this;
    return homogeneous_component(degree());
}

int Poly2::evaluate(const std::vector<int>& bits) const {
    int acc = 0;
    for (const auto& t : terms_) {
        int v = 1;
        for (int i = 0; i < ring_->size() && v; ++i)
            if (t.e[i] && !(bits[i] & 1)) v = 0;
        acc ^= v;
    }
    return acc;
}

Poly2 Poly2::to_ring(const RingPtr& target) const {
    std::vector<int> map(ring_->size());
    for (int i = 0; i < ring_->size(); ++i) {
        map[i] = target->index_of(ring_->var(i).name);
    }
    std::vector<Mono> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Mono m;
        for (int i = 0; i < ring_->size(); ++i) {
            if (!t.e[i]) continue;
            if (map[i] < 0) throw PolyError("variable " + ring_->var(i).name + " missing in target ring");
            m.e[map[i]] = t.e[i];
        }
        mono_refresh(m, *target);
        out.push_back(m);
    }
    return from_terms(target, std::move(out));
}

std::string mono_str(const Mono& m, const Ring& r) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < r.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += r.var(i).name;
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += mono_str(terms_[i], *ring_);
    }
    return s;
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t k = s.find(sep, pos);
        out.push_back(s.substr(pos, k == std::string::npos ? std::string::npos : k - pos));
        if (k == std::string::npos) break;
        pos = k + sep.size();
    }
    return out;
}

}  // namespace

Poly2 parse_poly(const RingPtr& r, const std::string& text) {
    if (text == "0") return Poly2::zero(r);
    std::vector<Mono> terms;
    for (const auto& term : split(text, " + ")) {
        if (term.empty()) throw PolyError("empty term in '" + text + "'");
        if (term == "1") {
            terms.push_back(Mono{});
            continue;
        }
        Mono m;
        for (const auto& f : split(term, "*")) {
            auto caret = f.find('^');
            std::string name = f.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos) {
                std::string es = f.substr(caret + 1);
                if (es.empty() || es.size() > 3 || !std::all_of(es.begin(), es.end(), ::isdigit) || es[0] == '0')
                    throw PolyError("bad exponent in '" + f + "'");
                exp = std::stoi(es);
                if (exp < 2 || exp > 255) throw PolyError("bad exponent in '" + f + "'");
            }
            if (!valid_name(name)) throw PolyError("bad variable name '" + name + "'");
            int idx = r->index_of(name);
            if (idx < 0) throw PolyError("unknown variable '" + name + "'");
            if (m.e[idx]) throw PolyError("repeated variable in term '" + term + "'");
            m.e[idx] = static_cast<uint8_t>(exp);
        }
        mono_refresh(m, *r);
        terms.push_back(m);
    }
    size_t before = terms.size();
    auto p = Poly2::from_terms(r, std::move(terms));
    if (p.size() != before) throw PolyError("repeated term in '" + text + "'");
    return p;
}

int binom_mod2(long long n, long long k) {
    if (n < 0) throw PolyError("binom_mod2 with negative n");
    if (k < 0 || k > n) return 0;
    return (k & (n - k)) == 0 ? 1 : 0;
}

}  // namespace wf
