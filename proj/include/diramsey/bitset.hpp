#pragma once

#include <cstdint>
#include <vector>

namespace diramsey {

// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
// Hot operations (intersection counts, masked iteration) avoid allocation.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n, bool full = false) : n_(n), w_(words(n), 0) {
        if (full) fill();
    }

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { for (auto& x : w_) x = 0; }

    void fill() {
        for (auto& x : w_) x = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const = default;

    // first set bit at position >= from, or -1
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + __builtin_ctzll(cur);
            if (++wi >= static_cast<int>(w_.size())) return -1;
            cur = w_[wi];
        }
    }
    int first() const { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t cur = w_[wi];
            while (cur) {
                f(static_cast<int>((wi << 6) + __builtin_ctzll(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset from_vector(int n, const std::vector<int>& v) {
        Bitset b(n);
        for (int i : v) b.set(i);
        return b;
    }

private:
    static std::size_t words(int n) { return static_cast<std::size_t>((n + 63) / 64); }

    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace diramsey
