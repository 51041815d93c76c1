#pragma once

#include <cstdint>
#include <vector>

namespace chaincond {

/// Fixed-universe bitset over words of 64.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int universe) : bits_((static_cast<size_t>(universe) + 63) / 64, 0) {}

    void set(int i) { bits_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { bits_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (bits_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    bool intersects(const BitRow& other) const {
        for (size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & other.bits_[w]) return true;
        return false;
    }
    bool is_subset_of(const BitRow& other) const {
        for (size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~other.bits_[w]) return false;
        return true;
    }
    BitRow& operator&=(const BitRow& other) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
        return *this;
    }
    BitRow& operator|=(const BitRow& other) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
        return *this;
    }
    bool any() const {
        for (uint64_t w : bits_)
            if (w) return true;
        return false;
    }
    int count() const {
        int total = 0;
        for (uint64_t w : bits_) total += __builtin_popcountll(w);
        return total;
    }
    template <typename Fn> void for_each(Fn&& fn) const {
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                const int bit = __builtin_ctzll(word);
                fn(static_cast<int>(w * 64) + bit);
                word &= word - 1;
            }
        }
    }
    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::vector<uint64_t> bits_;
};

/// Symmetric adjacency matrix.
class BitGraph {
public:
    explicit BitGraph(int n) : n_(n), rows_(static_cast<size_t>(n), BitRow(n)) {}

    int size() const { return n_; }
    void add_edge(int a, int b) {
        rows_[static_cast<size_t>(a)].set(b);
        rows_[static_cast<size_t>(b)].set(a);
    }
    bool adjacent(int a, int b) const { return rows_[static_cast<size_t>(a)].test(b); }
    const BitRow& neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

private:
    int n_;
    std::vector<BitRow> rows_;
};

/// Exact maximum clique (branch and bound with a greedy coloring bound).
std::vector<int> max_clique(const BitGraph& g);

/// Exact chromatic number with an optimal coloring (branch and bound).
std::pair<int, std::vector<int>> chromatic_number(const BitGraph& g);

} // namespace chaincond
