#pragma once

#include <string>
#include <vector>

#include "wittflag/relations.hpp"

namespace wf {

class WindowedSeries {
public:
    WindowedSeries() = default;
    WindowedSeries(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int bit(int e) const { return (e < lo_ || e > hi_) ? 0 : bits_[e - lo_]; }
    void flip(int e);
    void set(int e, int b);
    int top() const;  // highest exponent with a non-zero bit, or lo-1
    std::vector<int> support() const;
    WindowedSeries operator+(const WindowedSeries& o) const;
    bool operator==(const WindowedSeries& o) const;
    std::string str() const;

private:
    int lo_ = 0, hi_ = -1;
    std::vector<uint8_t> bits_;
};

// numerator * (1 + t^-1)^(-e); numerator exponents are kept sorted and reduced mod 2.
struct RationalSeries {
    std::vector<int> numerator;
    int e = 0;

    static RationalSeries monomial(int exp, int e = 0);
    static RationalSeries laurent(std::vector<int> exps, int e = 0);
    int max_exp() const;
    int min_exp() const;
    std::string str() const;
};

WindowedSeries expand(const RationalSeries& r, int lo, int hi);

// The ring R_k for given blocks; k is the number of odd blocks.
struct SeriesRing {
    RelationFamily mu;
    int k = 0;
    int half = 0;  // sum floor(n_p/2)
    int lo() const { return -half; }
    int hi() const { return mu.total - half; }
};

SeriesRing series_ring(const std::vector<int>& blocks);

class WindowTooNarrow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Poly2 psi(int k, const SeriesRing& ring, const WindowedSeries& q);

struct KernelMember {
    std::string label;
    RationalSeries series;
    int expected_top = 0;
    bool triangular = false;  // member of the (1+t^-1)^(-e) family with a pinned top degree
};

std::vector<KernelMember> kernel_family(int k, int s_bound);

struct KernelReport {
    bool pass = true;
    int checked = 0;
    std::vector<std::string> failures;
};

KernelReport verify_kernel(int k, const std::vector<int>& blocks, int s_bound);

// psi_k(Q) = sum_i alpha_i psi_{k-1}((t^-i + t^(i-1)) Q) with alpha from the last odd block.
bool psi_recursion_holds(const std::vector<int>& blocks, const std::vector<int>& q_exponents);

}  // namespace wf
