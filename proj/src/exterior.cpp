#include <stdexcept>

#include "wittflag/witt.hpp"

namespace wf {

namespace {

// Entry 2^(x-2) + c * (-4)^((x-e)/4); c = 0 means the plain power of two.
struct Entry {
    int c = 0;
    int e = 0;
};

using Row = std::array<Entry, 4>;

// Rows indexed by 4*(g mod 4) + (f mod 4).
const std::array<Row, 16> kResidueTable = {{
    {{{-2, 4}, {0, 0}, {+2, 4}, {0, 0}}},    // f0 g0
    {{{-2, 5}, {-2, 5}, {+2, 5}, {+2, 5}}},  // f1 g0
    {{{0, 0}, {+1, 2}, {0, 0}, {-1, 2}}},    // f2 g0
    {{{-1, 3}, {+1, 3}, {+1, 3}, {-1, 3}}},  // f3 g0
    {{{-2, 5}, {+2, 5}, {+2, 5}, {-2, 5}}},  // f0 g1
    {{{+1, 2}, {0, 0}, {-1, 2}, {0, 0}}},    // f1 g1
    {{{+1, 3}, {+1, 3}, {-1, 3}, {-1, 3}}},  // f2 g1
    {{{0, 0}, {+2, 4}, {0, 0}, {-2, 4}}},    // f3 g1
    {{{0, 0}, {-1, 2}, {0, 0}, {+1, 2}}},    // f0 g2
    {{{+1, 3}, {-1, 3}, {-1, 3}, {+1, 3}}},  // f1 g2
    {{{+2, 4}, {0, 0}, {-2, 4}, {0, 0}}},    // f2 g2
    {{{+2, 5}, {+2, 5}, {-2, 5}, {-2, 5}}},  // f3 g2
    {{{-1, 3}, {-1, 3}, {+1, 3}, {+1, 3}}},  // f0 g3
    {{{0, 0}, {-2, 4}, {0, 0}, {+2, 4}}},    // f1 g3
    {{{+2, 5}, {-2, 5}, {-2, 5}, {+2, 5}}},  // f2 g3
    {{{-1, 2}, {0, 0}, {+1, 2}, {0, 0}}},    // f3 g3
}};

const std::array<Row, 4> kUnshifted = {{
    {{{-2, 4}, {0, 0}, {+2, 4}, {0, 0}}},
    {{{-2, 5}, {-2, 5}, {+2, 5}, {+2, 5}}},
    {{{0, 0}, {+1, 2}, {0, 0}, {-1, 2}}},
    {{{-1, 3}, {+1, 3}, {+1, 3}, {-1, 3}}},
}};

const std::array<Row, 4> kShifted = {{
    {{{0, 0}, {+2, 4}, {0, 0}, {-2, 4}}},
    {{{-2, 5}, {+2, 5}, {+2, 5}, {-2, 5}}},
    {{{+1, 2}, {0, 0}, {-1, 2}, {0, 0}}},
    {{{+1, 3}, {+1, 3}, {-1, 3}, {-1, 3}}},
}};

// 4 * entry = 2^x + 4c(-4)^q, exact for q >= -1.
uint64_t evaluate(const Entry& en, int x) {
    if (x < 1 || x > 60) throw std::out_of_range("exterior rank size out of range");
    __int128 four_u = static_cast<__int128>(1) << x;
    if (en.c != 0) {
        if ((x - en.e) % 4 != 0) throw std::logic_error("residue table mismatch");
        int q = (x - en.e) / 4;
        if (q == -1) {
            four_u -= en.c;
        } else {
            __int128 p = 4 * en.c;
            for (int i = 0; i < q; ++i) p *= -4;
            four_u += p;
        }
    }
    if (four_u < 0 || four_u % 4 != 0) throw std::logic_error("non-integral exterior rank");
    return static_cast<uint64_t>(four_u / 4);
}

RankVector evaluate_row(const Row& row, int x) {
    RankVector r;
    for (int k = 0; k < 4; ++k) r.u[k] = evaluate(row[k], x);
    return r;
}

}  // namespace

RankVector RankVector::scaled(uint64_t a) const {
    RankVector r;
    for (int k = 0; k < 4; ++k) r.u[k] = u[k] * a;
    return r;
}

std::string RankVector::str() const {
    return "(" + std::to_string(u[0]) + "," + std::to_string(u[1]) + "," + std::to_string(u[2]) + "," + std::to_string(u[3]) + ")";
}

RankVector exterior_ranks(int f, int g) {
    if (f < 0 || g < 0) throw std::invalid_argument("exterior_ranks: negative generator count");
    if (f == 0 && g == 0) return RankVector{{1, 0, 0, 0}};
    return evaluate_row(kResidueTable[4 * (g % 4) + f % 4], f + g);
}

RankVector brute_exterior_ranks(int f, int g) {
    if (f < 0 || g < 0) throw std::invalid_argument("brute_exterior_ranks: negative generator count");
    if (f + g > 24) throw std::out_of_range("brute_exterior_ranks: f+g exceeds 24");
    RankVector r{{1, 0, 0, 0}};
    auto times = [&](int shift) {
        RankVector s;
        for (int k = 0; k < 4; ++k) s.u[k] = r.u[k] + r.u[(k + 4 - shift) % 4];
        r = s;
    };
    for (int i = 0; i < f; ++i) times(1);
    for (int i = 0; i < g; ++i) times(3);
    return r;
}

RankVector section_table_ranks(int r, bool shifted) {
    if (r < 0) throw std::invalid_argument("section_table_ranks: negative r");
    if (r == 0) return RankVector{{1, 0, 0, 0}};
    return evaluate_row((shifted ? kShifted : kUnshifted)[r % 4], r);
}

}  // namespace wf
