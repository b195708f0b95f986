#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittflag/lattice.hpp"

namespace wf {

enum class RepType { A, B, C };

const char* to_string(RepType t);

// Exponent vector over the generators of a StarRing; Laurent generators may be negative.
using SMono = std::vector<int>;

struct StarGen {
    std::string name;
    bool laurent = false;
    int cap = 0;  // > 0: exponent kept below cap, gen^cap rewritten by the ring
    int64_t rank = 1;
};

// Element of the claimed h^+ presentation together with the monomial it maps to.
struct ClaimGen {
    std::string name;
    SMono image;
    bool square_root = false;  // occurs with exponent at most 1 (epsilon, delta)
};

class StarError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StarRing {
    RepType type = RepType::A;
    int m = 0;
    std::vector<int> blocks;
    std::vector<StarGen> gens;
    std::vector<SMono> involution;  // image of each generator
    int capped = -1;
    SMono cap_image;       // gen^cap for the capped generator
    std::string relation;  // imposed identity, empty if none
    std::vector<ClaimGen> claim;
    std::string claim_text;

    int size() const { return static_cast<int>(gens.size()); }
    SMono one() const { return SMono(gens.size(), 0); }
    SMono gen(int i) const;
    SMono mul(const SMono& a, const SMono& b) const;
    SMono pow(const SMono& a, int k) const;  // k may be negative for Laurent monomials
    SMono dual(const SMono& a) const;
    int degree(const SMono& a) const;  // total exponent over non-Laurent generators
    __int128 rank(const SMono& a) const;
    std::string str(const SMono& a) const;
    int index_of(const std::string& name) const;
};

StarRing build_repring(RepType type, int m, const std::vector<int>& blocks);

std::vector<SMono> self_dual_monomials(const StarRing& r, int degree_bound);

struct SignedModule {
    std::vector<std::string> basis;
    std::vector<int> image;  // involution as signed permutation
    std::vector<int> sign;
};

struct TateClasses {
    std::vector<std::string> plus_basis;
    std::vector<std::string> minus_basis;
    int bound = 0;
};

TateClasses tate_of_signed_module(const SignedModule& m);

// Monomials of degree <= bound with Laurent exponents in [-box, box], closed under the involution.
SignedModule truncated_module(const StarRing& r, int degree_bound, int box = 2);

struct ClassificationReport {
    bool pass = false;
    std::vector<uint64_t> self_dual;     // per degree
    std::vector<uint64_t> presentation;  // per degree
    int first_mismatch = -1;
    bool minus_empty = false;
    std::vector<std::string> problems;
};

ClassificationReport verify_tate_classification(const StarRing& r, int degree_bound);

struct LemmaResult {
    std::string name;
    std::string witness;
    bool pass = false;
    std::string detail;
};

// Tate-cohomology lemmas on quotients and ideals, checked on graded truncations of small *-rings.
std::vector<LemmaResult> tate_lemma_suite(int degree_bound = 8);

}  // namespace wf
