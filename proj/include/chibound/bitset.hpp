#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace chibound {

// Fixed-universe bitset over {0, ..., n-1}, the storage unit for vertex sets
// and adjacency rows. 64-bit words, no dynamic growth.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }

    void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // set difference: this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    int intersect_count(const Bitset& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // First member, or -1 if empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than i, or -1.
    int next(int i) const {
        int k = (i + 1) >> 6;
        if (k >= (int)w_.size()) return -1;
        uint64_t w = w_[k] & (~uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (w) return (k << 6) + std::countr_zero(w);
            if (++k >= (int)w_.size()) return -1;
            w = w_[k];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bitset of(int universe, const std::vector<int>& members) {
        Bitset b(universe);
        for (int v : members) b.set(v);
        return b;
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// A vertex subset of some graph; identical representation, separate name for
// readability at call sites.
using VertexSet = Bitset;

} // namespace chibound
