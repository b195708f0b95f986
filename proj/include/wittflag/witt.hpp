#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wittflag/relations.hpp"

namespace wf {

// Ranks in degrees 0, -1, -2, -3; degree -k is stored at index k (W^-k = W^(4-k)).
struct RankVector {
    std::array<uint64_t, 4> u{};

    uint64_t operator[](int k) const { return u[k]; }
    uint64_t total() const { return u[0] + u[1] + u[2] + u[3]; }
    bool operator==(const RankVector& o) const { return u == o.u; }
    RankVector scaled(uint64_t a) const;
    std::string str() const;
};

// Exterior algebra on f generators of degree -1 and g of degree -3, evaluated from the residue table.
RankVector exterior_ranks(int f, int g);
// Same, by expanding (1+t^-1)^f (1+t^-3)^g and folding exponents mod 4.
RankVector brute_exterior_ranks(int f, int g);

// Rank tables indexed by r mod 4 for types A and B; shifted is the variant with the
// last generator in degree -3.
RankVector section_table_ranks(int r, bool shifted);

enum class WittType { A, B, C, D };
enum class Structure { Ring, AdditiveOnly };

const char* to_string(WittType t);
const char* to_string(Structure s);
WittType parse_witt_type(const std::string& s);

struct Generator {
    std::string name;
    int degree = 0;  // 0, -1, -2 or -3
};

struct WittChecks {
    bool regularity = false;
    bool reduction = false;
    bool dim_match = false;
    bool table_match = false;
    std::vector<std::string> notes;
    bool all() const { return regularity && reduction && dim_match && table_match; }
};

struct WittPresentation {
    WittType type = WittType::A;
    int m = 0;
    std::vector<int> blocks;
    int n = 0;
    Structure structure = Structure::Ring;
    RingPtr ring;
    std::vector<Generator> generators;
    std::vector<Poly2> relations;
    std::vector<Generator> exterior;
    uint64_t scalar_a = 0;
    RankVector z;      // exterior part
    RankVector ranks;  // final dimensions
    WittChecks checks;
    std::string clause;  // which case of the classification applied
};

class WittError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

WittPresentation compute_type_a(const std::vector<int>& blocks);
WittPresentation compute_type_b(int m, const std::vector<int>& blocks);
WittPresentation compute_type_c(int m, const std::vector<int>& blocks);
WittPresentation compute_type_d(int m, const std::vector<int>& blocks);
WittPresentation compute(WittType t, int m, const std::vector<int>& blocks);

struct RankTable {
    RankVector closed_form;
    RankVector expansion;
    RankVector dims;
    bool match = false;
};

// Closed form from the parameters versus the expansion of the emitted exterior generators.
RankTable rank_table(const WittPresentation& p);

// Type B index sets: S and its complement in {1..n-1}.
std::vector<int> type_b_index_set(int m, const std::vector<int>& blocks);
// Type C: even and odd elements of {1..n} outside S.
std::pair<int, int> type_c_exterior_counts(int m, const std::vector<int>& blocks);

}  // namespace wf
