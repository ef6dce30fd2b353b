#pragma once

#include <cstdint>
#include <vector>

namespace hellylab {

// Fixed-universe dynamic bitset used for vertex sets, ball members and
// constraint activity patterns. Word-level ops keep the Helly-property
// searches cheap.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void fill() {
        for (auto& x : w_) x = ~uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& x : w_) x = 0;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // this ⊆ o
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                f(int(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bits of(int universe, const std::vector<int>& members) {
        Bits b(universe);
        for (int m : members) b.set(m);
        return b;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace hellylab
