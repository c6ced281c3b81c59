#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace workbench {

/// A subset of a ground set [n] with n <= 128, stored as two machine words.
/// The numeric value of (hi,lo) as a 128-bit integer induces the total order
/// used everywhere for canonical storage; on sets this is colex order.
struct SetWord {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int max_ground = 128;

    constexpr SetWord() = default;
    constexpr SetWord(std::uint64_t lo_, std::uint64_t hi_) : lo(lo_), hi(hi_) {}

    static SetWord empty() { return {}; }

    static SetWord singleton(int e) {
        SetWord w;
        w.set(e);
        return w;
    }

    /// {0,...,n-1}
    static SetWord range(int n) {
        if (n < 0 || n > max_ground) throw std::invalid_argument("SetWord::range: n out of range");
        SetWord w;
        if (n >= 64) {
            w.lo = ~0ULL;
            w.hi = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else {
            w.lo = (n == 0) ? 0 : ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
        }
        return w;
    }

    static SetWord of(std::initializer_list<int> elems) {
        SetWord w;
        for (int e : elems) w.set(e);
        return w;
    }

    static SetWord of_vector(const std::vector<int>& elems) {
        SetWord w;
        for (int e : elems) w.set(e);
        return w;
    }

    void set(int e) {
        if (e < 0 || e >= max_ground) throw std::invalid_argument("SetWord: element out of range");
        if (e < 64)
            lo |= (1ULL << e);
        else
            hi |= (1ULL << (e - 64));
    }

    void reset(int e) {
        if (e < 0 || e >= max_ground) throw std::invalid_argument("SetWord: element out of range");
        if (e < 64)
            lo &= ~(1ULL << e);
        else
            hi &= ~(1ULL << (e - 64));
    }

    bool test(int e) const {
        if (e < 0 || e >= max_ground) return false;
        return (e < 64) ? ((lo >> e) & 1) : ((hi >> (e - 64)) & 1);
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }

    bool is_empty() const { return lo == 0 && hi == 0; }

    bool subset_of(const SetWord& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    bool intersects(const SetWord& o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }

    int min_element() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }

    int max_element() const {
        if (hi) return 127 - std::countl_zero(hi);
        if (lo) return 63 - std::countl_zero(lo);
        return -1;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        std::uint64_t w = lo;
        while (w) {
            out.push_back(std::countr_zero(w));
            w &= w - 1;
        }
        w = hi;
        while (w) {
            out.push_back(64 + std::countr_zero(w));
            w &= w - 1;
        }
        return out;
    }

    friend SetWord operator&(SetWord a, const SetWord& b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend SetWord operator|(SetWord a, const SetWord& b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend SetWord operator-(SetWord a, const SetWord& b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }
    SetWord& operator|=(const SetWord& o) {
        lo |= o.lo;
        hi |= o.hi;
        return *this;
    }
    SetWord& operator&=(const SetWord& o) {
        lo &= o.lo;
        hi &= o.hi;
        return *this;
    }

    friend bool operator==(const SetWord&, const SetWord&) = default;
    friend bool operator<(const SetWord& a, const SetWord& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
    friend bool operator>(const SetWord& a, const SetWord& b) { return b < a; }
    friend bool operator<=(const SetWord& a, const SetWord& b) { return !(b < a); }

    std::size_t hash() const {
        std::uint64_t x = lo * 0x9e3779b97f4a7c15ULL;
        x ^= hi + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }
};

struct SetWordHash {
    std::size_t operator()(const SetWord& w) const { return w.hash(); }
};

/// All h-subsets of `mask`, in ascending value (= colex) order.
std::vector<SetWord> subsets_of_size(const SetWord& mask, int h);

/// Visit all h-subsets of `mask` without materializing the list.
void for_each_subset_of_size(const SetWord& mask, int h, const std::function<void(const SetWord&)>& fn);

/// Number of h-subsets of [0,n) with value strictly below w (colex rank).
/// w must be an h-subset of [0,n).
std::uint64_t colex_rank(const SetWord& w);

}  // namespace workbench
