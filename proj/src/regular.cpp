#include <algorithm>
#include <map>
#include <sstream>

#include "wittflag/f2poly.hpp"
#include "wittflag/gf2.hpp"

namespace wf {

const char* to_string(RegStatus s) {
    switch (s) {
        case RegStatus::Regular: return "REGULAR";
        case RegStatus::NotRegular: return "NOT-REGULAR";
        default: return "INCONCLUSIVE";
    }
}

const char* to_string(RegMethod m) { return m == RegMethod::LeadingForm ? "LEADING-FORM" : "DIRECT"; }

namespace {

std::vector<Poly2> move_to(const std::vector<Poly2>& seq, const RingPtr& r) {
    std::vector<Poly2> out;
    out.reserve(seq.size());
    for (const auto& p : seq) out.push_back(p.to_ring(r));
    return out;
}

RegularityVerdict leading_form(const std::vector<Poly2>& seq, const RingPtr& r) {
    RegularityVerdict v;
    v.method = RegMethod::LeadingForm;
    if (static_cast<int>(seq.size()) != r->size()) {
        v.detail = "sequence length " + std::to_string(seq.size()) + " differs from variable count " +
                   std::to_string(r->size());
        return v;
    }
    for (int i = 0; i < r->size(); ++i)
        if (r->var(i).weight <= 0) {
            v.detail = "weight of " + r->var(i).name + " is not positive";
            return v;
        }
    std::vector<Poly2> forms;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].is_zero() || seq[i].degree() == 0) {
            v.status = RegStatus::NotRegular;
            v.detail = "element " + std::to_string(i) + " is constant";
            return v;
        }
        forms.push_back(seq[i].leading_form());
    }
    auto q = quotient_dimension(forms, r);
    if (q.infinite) {
        if (groebner(seq, r).is_unit()) {
            v.status = RegStatus::NotRegular;
            v.detail = "ideal is the unit ideal";
        } else {
            v.detail = "leading-form quotient is infinite";
        }
        return v;
    }
    v.status = RegStatus::Regular;
    v.complete = true;
    v.detail = "leading-form quotient dimension " + std::to_string(q.dim);
    return v;
}

RegularityVerdict direct(const std::vector<Poly2>& seq, const RingPtr& r) {
    RegularityVerdict v;
    v.method = RegMethod::Direct;
    int total = 0;
    for (const auto& f : seq) total += std::max(0, f.degree());
    int D = 2 * total;
    v.truncation = D;
    v.complete = true;
    int n = r->size();
    std::vector<Poly2> prefix;
    for (size_t k = 0; k < seq.size(); ++k) {
        const Poly2& f = seq[k];
        GroebnerBasis g = groebner(prefix, r);
        if (g.is_unit()) {
            v.status = RegStatus::NotRegular;
            v.detail = "prefix of length " + std::to_string(k) + " generates the unit ideal";
            return v;
        }
        if (f.is_zero()) {
            v.status = RegStatus::NotRegular;
            v.detail = "element " + std::to_string(k) + " is zero";
            return v;
        }
        int room = D - f.degree();
        auto basis = standard_monomials(g, std::max(room, 0));
        auto qd = quotient_dimension(g);
        if (qd.infinite || basis.size() != qd.dim) v.complete = false;

        std::map<std::vector<uint8_t>, int> coord;
        std::vector<std::vector<int>> images;
        for (const auto& s : basis) {
            Poly2 img = normal_form(f.mul_mono(s), g);
            std::vector<int> idx;
            for (const auto& t : img.terms()) {
                std::vector<uint8_t> key(t.e.begin(), t.e.begin() + n);
                auto it = coord.emplace(key, static_cast<int>(coord.size())).first;
                idx.push_back(it->second);
            }
            images.push_back(std::move(idx));
        }
        Gf2Basis eb(coord.size());
        for (size_t i = 0; i < images.size(); ++i) {
            BitVec row(coord.size());
            for (int c : images[i]) row.flip(c);
            if (!eb.insert(row)) {
                v.status = RegStatus::NotRegular;
                v.detail = "multiplication by element " + std::to_string(k) + " not injective below degree " +
                           std::to_string(D);
                return v;
            }
        }
        prefix.push_back(f);
    }
    if (groebner(seq, r).is_unit()) {
        v.status = RegStatus::NotRegular;
        v.detail = "sequence generates the unit ideal";
        return v;
    }
    v.status = RegStatus::Regular;
    v.detail = std::string("injective on truncated quotients up to degree ") + std::to_string(D) +
               (v.complete ? " (all standard monomials covered)" : " (truncated)");
    return v;
}

}  // namespace

RegularityVerdict is_regular_sequence(const std::vector<Poly2>& seq, const std::vector<int>& weights,
                                      RegMethod method) {
    if (seq.empty()) {
        RegularityVerdict v;
        v.status = RegStatus::Regular;
        v.method = method;
        v.complete = true;
        v.detail = "empty sequence";
        return v;
    }
    RingPtr r = seq.front().ring();
    if (!weights.empty()) r = r->reweighted(weights);
    auto s = move_to(seq, r);
    return method == RegMethod::LeadingForm ? leading_form(s, r) : direct(s, r);
}

}  // namespace wf
