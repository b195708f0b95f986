#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wf {

using IVec = std::vector<int64_t>;

// Row echelon (Hermite) basis of the lattice spanned by rows; zero rows are dropped.
std::vector<IVec> hnf(std::vector<IVec> rows);

// Basis of {x in Z^n : A x = 0} for A given as rows of length n.
std::vector<IVec> integer_kernel(const std::vector<IVec>& a, int n);

// Coordinates of v in an echelon basis; false if v is not in the lattice.
bool lattice_coords(const std::vector<IVec>& basis, IVec v, IVec* coords);

// log2 of [big : small] for small inside big of equal rank; throws if the index is not a power of two.
int log2_index(const std::vector<IVec>& big, const std::vector<IVec>& small);

// Graded piece M = C / L inside Z^N with involution T e_i = sign_i e_{perm_i}.
struct LatticeModule {
    int n = 0;
    std::vector<int> perm;
    std::vector<int> sign;
    std::vector<IVec> carrier;    // generators of C; empty means all of Z^N
    std::vector<IVec> relations;  // generators of L, contained in C
};

struct TateDims {
    int plus = 0;
    int minus = 0;
    bool operator==(const TateDims& o) const { return plus == o.plus && minus == o.minus; }
};

TateDims lattice_tate(const LatticeModule& m);

// Dimension of the span of the classes of reps in h^+ (parity +1) or h^- (parity -1).
// Throws if a representative is not a cycle.
int class_rank(const LatticeModule& m, int parity, const std::vector<IVec>& reps);

// Integer polynomials with an optional rewrite var^cap -> replacement, graded by variable weights,
// with a signed variable permutation as involution.
using Exp = std::vector<int>;

struct ZPoly {
    std::map<Exp, int64_t> terms;
};

struct ZAlgebra {
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> perm;
    std::vector<int> sign;
    int capped = -1;
    int cap = 0;
    ZPoly replacement;

    int nvars() const { return static_cast<int>(names.size()); }
    ZPoly var(int i) const;
    ZPoly constant(int64_t c) const;
    ZPoly add(const ZPoly& a, const ZPoly& b) const;
    ZPoly scale(const ZPoly& a, int64_t c) const;
    ZPoly mul(const ZPoly& a, const ZPoly& b) const;
    ZPoly star(const ZPoly& a) const;
    ZPoly normal(const ZPoly& a) const;
    int degree(const Exp& e) const;
    std::vector<Exp> basis(int d) const;  // normal monomials of degree d
    IVec coords(const ZPoly& p, const std::vector<Exp>& basis) const;
    LatticeModule piece(int d) const;  // A_d with its involution, C = all, L = 0
    std::string str(const ZPoly& p) const;
};

}  // namespace wf
