#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wf {

constexpr int kMaxVars = 32;

struct Variable {
    std::string name;
    int weight = 1;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable order in the vector is the precedence order: index 0 is the largest.
class Ring {
public:
    static RingPtr make(std::vector<Variable> vars);
    RingPtr reweighted(const std::vector<int>& weights) const;

    int size() const { return static_cast<int>(vars_.size()); }
    const Variable& var(int i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }
    int index_of(const std::string& name) const;  // -1 if absent
    bool same_variables(const Ring& other) const;

private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, int> index_;
};

struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    int32_t wdeg = 0;
    int32_t tdeg = 0;

    bool operator==(const Mono& o) const { return e == o.e; }
    bool is_one() const { return tdeg == 0; }
};

// Weighted degree, then total degree, then reverse lexicographic.
int compare(const Mono& a, const Mono& b, int nvars);
bool divides(const Mono& a, const Mono& b, int nvars);
Mono mono_mul(const Mono& a, const Mono& b, int nvars, const Ring& r);
Mono mono_div(const Mono& a, const Mono& b, int nvars, const Ring& r);
Mono mono_lcm(const Mono& a, const Mono& b, int nvars, const Ring& r);
bool coprime(const Mono& a, const Mono& b, int nvars);
Mono mono_var(const Ring& r, int i, int exp = 1);
void mono_refresh(Mono& m, const Ring& r);

class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(RingPtr r) : ring_(std::move(r)) {}
    static Poly2 zero(RingPtr r) { return Poly2(std::move(r)); }
    static Poly2 one(RingPtr r);
    static Poly2 var(RingPtr r, int i);
    static Poly2 var(RingPtr r, const std::string& name);
    static Poly2 constant(RingPtr r, int bit);
    static Poly2 from_mono(RingPtr r, const Mono& m);
    static Poly2 from_sorted(RingPtr r, std::vector<Mono> terms);
    static Poly2 from_terms(RingPtr r, std::vector<Mono> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Mono>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    size_t size() const { return terms_.size(); }
    const Mono& lt() const { return terms_.front(); }
    int degree() const;  // weighted; -1 for zero
    int constant_term() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o);
    Poly2 operator*(const Poly2& o) const;
    Poly2 mul_mono(const Mono& m) const;
    Poly2 pow(int k) const;
    bool operator==(const Poly2& o) const;
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Poly2 substitute(int var, const Poly2& value) const;
    Poly2 homogeneous_component(int d) const;
    Poly2 leading_form() const;
    int evaluate(const std::vector<int>& bits) const;
    Poly2 to_ring(const RingPtr& target) const;  // by variable name

    std::string str() const;

private:
    void check_ring(const Poly2& o) const;
    RingPtr ring_;
    std::vector<Mono> terms_;
};

std::string mono_str(const Mono& m, const Ring& r);
Poly2 parse_poly(const RingPtr& r, const std::string& text);

int binom_mod2(long long n, long long k);

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly2> gens;
    bool reduced = true;

    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
};

GroebnerBasis groebner(const std::vector<Poly2>& gens, const RingPtr& ring);
Poly2 normal_form(const Poly2& p, const GroebnerBasis& g);
bool in_ideal(const Poly2& p, const GroebnerBasis& g);

struct QuotientDim {
    bool infinite = false;
    uint64_t dim = 0;
};

QuotientDim quotient_dimension(const GroebnerBasis& g);
QuotientDim quotient_dimension(const std::vector<Poly2>& gens, const RingPtr& ring);
std::vector<Mono> standard_monomials(const GroebnerBasis& g, int max_wdeg);

enum class RegStatus { Regular, NotRegular, Inconclusive };
enum class RegMethod { LeadingForm, Direct };

struct RegularityVerdict {
    RegStatus status = RegStatus::Inconclusive;
    RegMethod method = RegMethod::LeadingForm;
    std::string detail;
    int truncation = -1;
    bool complete = false;
};

const char* to_string(RegStatus s);
const char* to_string(RegMethod m);

// weights empty: use the ring's own weights.
RegularityVerdict is_regular_sequence(const std::vector<Poly2>& seq, const std::vector<int>& weights,
                                      RegMethod method);

enum class CoeffMode { Scalars, Subring };

struct CoeffSpec {
    CoeffMode mode = CoeffMode::Scalars;
    std::vector<int> vars;
    int degree_bound = -1;  // -1: degree of target + 2
};

enum class SolveStatus { Found, None, NoneAtBound };
const char* to_string(SolveStatus s);

struct Combination {
    SolveStatus status = SolveStatus::None;
    std::vector<Poly2> coeffs;
    int bound_used = 0;
};

Combination solve_linear_combination(const Poly2& target, const std::vector<Poly2>& candidates,
                                     const CoeffSpec& spec);

std::vector<Mono> subring_monomials(const Ring& r, const std::vector<int>& vars, int max_wdeg);

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wf
