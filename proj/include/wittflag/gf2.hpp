#pragma once

#include <cstdint>
#include <vector>

namespace wf {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    long first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<long>(k * 64 + __builtin_ctzll(w_[k]));
        return -1;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Incremental row echelon basis over GF(2); optionally tracks which inserted vectors
// make up each stored row.
class Gf2Basis {
public:
    explicit Gf2Basis(size_t n, size_t tags = 0) : n_(n), tags_(tags) {}

    size_t rank() const { return rows_.size(); }

    // Reduces v (and its tag vector) against the basis; returns true if v ends up zero.
    bool reduce(BitVec& v, BitVec* tag = nullptr) const {
        for (size_t k = 0; k < rows_.size(); ++k)
            if (v.test(pivots_[k])) {
                v ^= rows_[k];
                if (tag) *tag ^= combos_[k];
            }
        return v.none();
    }

    // Returns true if v was independent of the current rows.
    bool insert(BitVec v, BitVec tag = BitVec()) {
        if (tags_ && tag.size() == 0) tag = BitVec(tags_);
        if (reduce(v, tags_ ? &tag : nullptr)) return false;
        pivots_.push_back(static_cast<size_t>(v.first()));
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(tag));
        return true;
    }

private:
    size_t n_;
    size_t tags_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
    std::vector<BitVec> combos_;
};

}  // namespace wf
