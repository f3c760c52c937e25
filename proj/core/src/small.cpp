#include "omcube/small.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "omcube/error.hpp"

namespace omcube::small {

namespace {

Tables build(int m) {
    Tables t;
    t.m = m;
    const Mask all = full_mask(m);
    const std::uint32_t n = 1u << m;
    t.fiber_begin.assign(n + 1, 0);
    t.cube_begin.assign(n + 1, 0);
    for (Mask x = 0; x < n; ++x) {
        t.fiber_begin[x] = static_cast<std::uint32_t>(t.fiber_sets.size());
        for_each_subset(x, [&](Mask y) {
            Set64 s = 0;
            for (Mask v = 0; v < n; ++v)
                if ((v & x) == y) s |= Set64{1} << v;
            t.fiber_sets.push_back(s);
        });
        t.cube_begin[x] = static_cast<std::uint32_t>(t.cube_sets.size());
        for_each_subset(all & ~x, [&](Mask base) {
            Set64 s = 0;
            for_each_subset(x, [&](Mask y) { s |= Set64{1} << (base | y); });
            t.cube_sets.push_back(s);
            t.cube_base.push_back(base);
        });
    }
    t.fiber_begin[n] = static_cast<std::uint32_t>(t.fiber_sets.size());
    t.cube_begin[n] = static_cast<std::uint32_t>(t.cube_sets.size());
    for (Mask x = 0; x < n; ++x) t.by_size.push_back(x);
    std::stable_sort(t.by_size.begin(), t.by_size.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    return t;
}

}  // namespace

const Tables& tables(int m) {
    if (m < 0 || m > max_m) fail(ErrorCode::resource, "bitset kernels support m <= 6");
    static std::array<std::unique_ptr<Tables>, max_m + 1> cache;
    static std::array<std::once_flag, max_m + 1> once;
    std::call_once(once[static_cast<std::size_t>(m)], [m] { cache[static_cast<std::size_t>(m)] = std::make_unique<Tables>(build(m)); });
    return *cache[static_cast<std::size_t>(m)];
}

Set64 to_set(const Family& f) {
    if (f.m() > max_m) fail(ErrorCode::resource, "bitset kernels support m <= 6");
    Set64 s = 0;
    for (Mask v : f) s |= Set64{1} << v;
    return s;
}

Family from_set(int m, Set64 s) {
    std::vector<Mask> out;
    while (s) {
        out.push_back(static_cast<Mask>(std::countr_zero(s)));
        s &= s - 1;
    }
    return {m, std::move(out)};
}

bool shatters(const Tables& t, Set64 s, Mask x) {
    for (std::uint32_t i = t.fiber_begin[x]; i < t.fiber_begin[x + 1]; ++i)
        if (!(t.fiber_sets[i] & s)) return false;
    return true;
}

bool strongly_shatters(const Tables& t, Set64 s, Mask x) {
    for (std::uint32_t i = t.cube_begin[x]; i < t.cube_begin[x + 1]; ++i)
        if ((t.cube_sets[i] & s) == t.cube_sets[i]) return true;
    return false;
}

int vc_dim(const Tables& t, Set64 s) {
    if (!s) return -1;
    int best = 0;
    for (Mask x : t.by_size) {
        const int k = popcount(x);
        if (k <= best) continue;
        if (k > best + 1) break;
        if (shatters(t, s, x)) best = k;
    }
    // A (best+1)-set can only be shattered if some best-set is; the scan above
    // visits sizes in order and stops at the first size with no shattered set.
    return best;
}

bool vcd_at_most(const Tables& t, Set64 s, int d) {
    if (d + 1 > t.m) return true;
    for (Mask x : t.by_size) {
        const int k = popcount(x);
        if (k < d + 1) continue;
        if (k > d + 1) break;
        if (shatters(t, s, x)) return false;
    }
    return true;
}

bool is_ample(const Tables& t, Set64 s) {
    if (!s) return false;
    return first_unstrong(t, s) < 0;
}

long first_unstrong(const Tables& t, Set64 s) {
    for (Mask x : t.by_size)
        if (shatters(t, s, x) && !strongly_shatters(t, s, x)) return static_cast<long>(x);
    return -1;
}

}  // namespace omcube::small
