#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omcube {

// Vertex / element-set mask over a ground set of at most 32 elements.
// Element e (0-based) corresponds to bit e.
using Mask = std::uint32_t;

constexpr int max_ground = 32;

constexpr Mask full_mask(int m) noexcept {
    return m >= 32 ? ~Mask{0} : ((Mask{1} << m) - 1);
}

constexpr Mask bit(int e) noexcept { return Mask{1} << e; }

inline int popcount(Mask x) noexcept { return std::popcount(x); }

inline int lowest_bit(Mask x) noexcept { return std::countr_zero(x); }

template <class F>
inline void for_each_bit(Mask x, F&& f) {
    while (x) {
        f(std::countr_zero(x));
        x &= x - 1;
    }
}

// Visits every subset of `x`, including the empty set and `x` itself, in
// increasing numeric order.
template <class F>
inline void for_each_subset(Mask x, F&& f) {
    Mask s = 0;
    while (true) {
        f(s);
        if (s == x) break;
        s = (s - x) & x;
    }
}

// Packs the bits of `v` selected by `keep` into the low bits, preserving order.
inline Mask compress_bits(Mask v, Mask keep) noexcept {
    Mask out = 0;
    int k = 0;
    for_each_bit(keep, [&](int e) {
        if (v & bit(e)) out |= bit(k);
        ++k;
    });
    return out;
}

// Inverse of compress_bits: spreads the low bits of `v` onto the positions of `keep`.
inline Mask expand_bits(Mask v, Mask keep) noexcept {
    Mask out = 0;
    int k = 0;
    for_each_bit(keep, [&](int e) {
        if (v & bit(k)) out |= bit(e);
        ++k;
    });
    return out;
}

inline std::vector<int> bits_of(Mask x) {
    std::vector<int> out;
    for_each_bit(x, [&](int e) { out.push_back(e); });
    return out;
}

}  // namespace omcube
