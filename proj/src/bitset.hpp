#pragma once

#include <cstdint>
#include <vector>

namespace rpg {

// Fixed-capacity bitset sized at construction. Vertex/element sets
// throughout the library are stored this way so subset and
// intersection tests are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    // this & ~o
    Bitset minus(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    void operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Smallest set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    int next(int after) const {
        for (int i = after + 1; i < n_; ++i)
            if (test(i)) return i;
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace rpg
