#pragma once

// Bitset kernels for families inside Q_m with m <= 6: a family is a 64-bit
// word with bit v set iff vertex v is present.

#include <cstdint>
#include <vector>

#include "omcube/bits.hpp"
#include "omcube/family.hpp"

namespace omcube::small {

using Set64 = std::uint64_t;

constexpr int max_m = 6;

struct Tables {
    int m = 0;
    // Per element set X (indexed by mask): fibers by trace, then X-cubes by base.
    std::vector<std::uint32_t> fiber_begin;  // size 2^m + 1
    std::vector<Set64> fiber_sets;
    std::vector<std::uint32_t> cube_begin;  // size 2^m + 1
    std::vector<Set64> cube_sets;
    std::vector<Mask> cube_base;  // base vertex (zero on X) parallel to cube_sets
    std::vector<Mask> by_size;  // all element sets, ordered by (popcount, mask)
};

// Built once per m and shared.
const Tables& tables(int m);

Set64 to_set(const Family& f);
Family from_set(int m, Set64 s);

inline Set64 universe(int m) { return m >= 6 ? ~Set64{0} : ((Set64{1} << (1u << m)) - 1); }

bool shatters(const Tables& t, Set64 s, Mask x);
bool strongly_shatters(const Tables& t, Set64 s, Mask x);
int vc_dim(const Tables& t, Set64 s);
// True iff no (d+1)-set is shattered.
bool vcd_at_most(const Tables& t, Set64 s, int d);
bool is_ample(const Tables& t, Set64 s);
// First element set (in by_size order) that is shattered but not strongly shattered, or -1.
long first_unstrong(const Tables& t, Set64 s);

}  // namespace omcube::small
