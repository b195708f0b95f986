#pragma once

#include <string>
#include <vector>

#include "wittflag/f2poly.hpp"

namespace wf {

enum class FamilyKind { Mu, Nu, Xi };
const char* to_string(FamilyKind k);

// One aliased block: variables for indices 1..size/2, index 0 and index size alias to 1,
// index i > size/2 aliases to size - i, indices outside [0, size] vanish.
struct AliasedBlock {
    int size = 0;
    std::vector<int> vars;  // ring indices of canonical generators 1..size/2

    Poly2 gen(const RingPtr& r, int i) const;
};

// mu_0..mu_N of the given blocks, without rank constants.
std::vector<Poly2> mu_sequence(const RingPtr& r, const std::vector<AliasedBlock>& blocks);

struct Naming {
    std::string side = "a";   // m-side generators (alpha for nu/xi, extra block for mu)
    std::string block = "b";  // block generators, written <block><i>_<p>
};

struct Member {
    int index = 0;
    Poly2 poly;
    int rank_constant = 0;  // mu only: C(N, index) mod 2; nu/xi already contain it
};

struct Reduction {
    int index = 0;
    std::string mode;  // SCALARS or SUBRING
    std::vector<int> over;
    std::vector<Poly2> coeffs;
    SolveStatus status = SolveStatus::None;
    int bound = 0;
    bool normal_form_zero = false;
};

struct RelationFamily {
    FamilyKind kind = FamilyKind::Mu;
    int m = 0;
    bool has_side_block = false;  // mu with an m-side block
    std::vector<int> blocks;
    std::vector<int> block_order;  // evenness normalisation, even blocks first
    RingPtr ring;
    std::vector<AliasedBlock> side;
    std::vector<AliasedBlock> aliased;  // block p at position p
    std::vector<int> alpha_vars;        // nu/xi: ring indices of alpha_1..alpha_m
    std::vector<Member> members;
    std::vector<Poly2> mu_full;  // mu: all mu_0..mu_N
    std::vector<int> basis;
    std::vector<int> rank_image;  // per ring variable, rank mod 2
    int total = 0;                // N for mu, n for nu/xi

    const Member& member(int index) const;
    Poly2 reduced(int index) const;  // mu: mu + C(N, index); nu/xi: member itself
    int half_sum() const;            // sum of floor(size/2) over all blocks incl. side block
    std::vector<int> beta_vars() const;
};

RelationFamily mu_family(const std::vector<int>& blocks, const Naming& naming = {}, int side_block = -1);
RelationFamily nu_family(int m, const std::vector<int>& blocks, const Naming& naming = {});
RelationFamily xi_family(int m, const std::vector<int>& blocks, const Naming& naming = {});

// sigma_j = mu_{j + sum floor(n_p/2)}.
Poly2 sigma(const RelationFamily& f, int j);

struct FamilyVerdict {
    RegStatus status = RegStatus::Inconclusive;
    std::vector<RegularityVerdict> stages;
    std::string detail;
};

FamilyVerdict verify_regularity(const RelationFamily& f);

struct ReductionTable {
    bool ok = true;
    std::vector<Reduction> rows;
    std::string failure;
};

ReductionTable reduce_surplus(const RelationFamily& f);

struct FamilyDimension {
    QuotientDim groebner;
    uint64_t closed_form = 0;
    bool match = false;
};

FamilyDimension family_quotient_dimension(const RelationFamily& f);

uint64_t multinomial(const std::vector<int>& parts);

// alpha_{2j+1} + alpha_{2j} lies in (xi_1..xi_m) with a beta-subring witness.
std::vector<Reduction> xi_odd_alpha_witnesses(const RelationFamily& xi);

int rank_of(const RelationFamily& f, const Poly2& p);

}  // namespace wf
