#include "omcube/family.hpp"

#include <algorithm>

#include "omcube/error.hpp"
#include "omcube/pcube.hpp"
#include "omcube/small.hpp"

namespace omcube {

Family::Family(int m, std::vector<Mask> vertices) : m_(m), vertices_(std::move(vertices)) {
    if (m < 0 || m > max_ground) fail(ErrorCode::dimension, "family ground set must be in 0..32");
    const Mask all = full_mask(m);
    for (Mask v : vertices_)
        if (v & ~all) fail(ErrorCode::argument, "vertex " + std::to_string(v) + " outside Q_" + std::to_string(m));
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Family Family::subcube(int m, Mask base, Mask free) {
    if (popcount(free) > 24) fail(ErrorCode::resource, "subcube too large to materialize");
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << popcount(free));
    const Mask fixed = base & ~free;
    for_each_subset(free, [&](Mask s) { out.push_back(fixed | s); });
    return {m, std::move(out)};
}

bool Family::contains(Mask v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

Mask Family::varying_coordinates() const noexcept {
    Mask acc = 0;
    if (vertices_.empty()) return 0;
    const Mask v0 = vertices_.front();
    for (Mask v : vertices_) acc |= v ^ v0;
    return acc;
}

Mask Family::constant_part() const noexcept {
    if (vertices_.empty()) return 0;
    return vertices_.front() & ~varying_coordinates();
}

Family Family::enclosing_cube() const {
    if (empty()) return {m_, {}};
    return subcube(m_, constant_part(), varying_coordinates());
}

namespace {

void require_same_m(const Family& a, const Family& b) {
    if (a.m() != b.m()) fail(ErrorCode::dimension, "families live in different cubes");
}

}  // namespace

Family unite(const Family& a, const Family& b) {
    require_same_m(a, b);
    std::vector<Mask> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return {a.m(), std::move(out)};
}

Family intersect(const Family& a, const Family& b) {
    require_same_m(a, b);
    std::vector<Mask> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return {a.m(), std::move(out)};
}

Family difference(const Family& a, const Family& b) {
    require_same_m(a, b);
    std::vector<Mask> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return {a.m(), std::move(out)};
}

bool is_subset(const Family& a, const Family& b) {
    require_same_m(a, b);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Family translate(const Family& f, Mask by) {
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask v : f) out.push_back(v ^ by);
    return {f.m(), std::move(out)};
}

Family project(const Family& f, Mask keep) {
    keep &= full_mask(f.m());
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask v : f) out.push_back(compress_bits(v, keep));
    return {popcount(keep), std::move(out)};
}

Family restrict_to_cube(const Family& f, Mask base, Mask free) {
    std::vector<Mask> out;
    const Mask fixed = ~free & full_mask(f.m());
    for (Mask v : f)
        if ((v & fixed) == (base & fixed)) out.push_back(v);
    return {f.m(), std::move(out)};
}

Family pad(const Family& f, int m) {
    if (m < f.m()) fail(ErrorCode::dimension, "pad: target cube is smaller");
    return {m, f.vertices()};
}

bool Complex::contains(Mask x) const {
    auto less = [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    };
    return std::binary_search(sets.begin(), sets.end(), x, less);
}

namespace {

// Number of distinct traces v ∩ x.
std::size_t trace_count(const Family& f, Mask x, std::vector<Mask>& scratch) {
    scratch.clear();
    for (Mask v : f) scratch.push_back(v & x);
    std::sort(scratch.begin(), scratch.end());
    return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

bool strongly_shatters_impl(const Family& f, Mask x, std::vector<Mask>& scratch) {
    const std::size_t need = std::size_t{1} << popcount(x);
    if (f.size() < need) return false;
    scratch.clear();
    for (Mask v : f) scratch.push_back(v & ~x);
    std::sort(scratch.begin(), scratch.end());
    std::size_t run = 0;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        run = (i > 0 && scratch[i] == scratch[i - 1]) ? run + 1 : 1;
        if (run == need) return true;
    }
    return false;
}

// Level-wise generation of a downward-closed complex: a set of size k+1 is only
// tested when all of its k-subsets are members.
template <class Pred>
std::vector<Mask> downward_closed(const Family& f, Pred&& member) {
    std::vector<Mask> result;
    if (f.empty()) return result;
    result.push_back(0);
    std::vector<Mask> level{0};
    const Mask ground = f.varying_coordinates();
    while (!level.empty()) {
        std::vector<Mask> next;
        for (Mask x : level) {
            // Extend only by elements above the maximum of x to generate each set once.
            const int top = x ? 31 - std::countl_zero(x) : -1;
            for_each_bit(ground, [&](int e) {
                if (e <= top) return;
                const Mask y = x | bit(e);
                bool faces_ok = true;
                for_each_bit(x, [&](int g) {
                    if (faces_ok && !std::binary_search(level.begin(), level.end(), y & ~bit(g))) faces_ok = false;
                });
                if (faces_ok && member(y)) next.push_back(y);
            });
        }
        std::sort(next.begin(), next.end());
        result.insert(result.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return result;
}

}  // namespace

bool shatters(const Family& f, Mask x) {
    std::vector<Mask> scratch;
    if (f.empty()) return false;
    if (f.size() < (std::size_t{1} << popcount(x))) return false;
    return trace_count(f, x, scratch) == (std::size_t{1} << popcount(x));
}

bool strongly_shatters(const Family& f, Mask x) {
    std::vector<Mask> scratch;
    if (f.empty()) return false;
    return strongly_shatters_impl(f, x, scratch);
}

int vc_dim(const Family& f) {
    if (f.empty()) return -1;
    if (f.m() <= small::max_m) return small::vc_dim(small::tables(f.m()), small::to_set(f));
    std::vector<Mask> scratch;
    const auto sets = downward_closed(f, [&](Mask x) {
        return f.size() >= (std::size_t{1} << popcount(x)) &&
               trace_count(f, x, scratch) == (std::size_t{1} << popcount(x));
    });
    return popcount(sets.back());
}

ShatteringComplexes shattering_complexes(const Family& f) {
    std::vector<Mask> scratch;
    ShatteringComplexes out;
    out.shattered.m = out.strongly_shattered.m = f.m();
    out.shattered.sets = downward_closed(f, [&](Mask x) {
        return f.size() >= (std::size_t{1} << popcount(x)) &&
               trace_count(f, x, scratch) == (std::size_t{1} << popcount(x));
    });
    out.strongly_shattered.sets = downward_closed(f, [&](Mask x) { return strongly_shatters_impl(f, x, scratch); });
    return out;
}

std::uint64_t phi(int d, int m) {
    if (d < 0 || m < 0) fail(ErrorCode::argument, "phi: negative argument");
    std::uint64_t sum = 0, binom = 1;
    for (int i = 0; i <= std::min(d, m); ++i) {
        sum += binom;
        binom = binom * static_cast<std::uint64_t>(m - i) / static_cast<std::uint64_t>(i + 1);
    }
    return sum;
}

SandwichReport sandwich_report(const Family& f) {
    const auto cx = shattering_complexes(f);
    SandwichReport r;
    r.strongly_shattered = cx.strongly_shattered.size();
    r.size = f.size();
    r.shattered = cx.shattered.size();
    r.vcd = f.empty() ? -1 : popcount(cx.shattered.sets.back());
    r.sauer_bound = r.vcd < 0 ? 0 : phi(r.vcd, f.m());
    check_invariant(r.strongly_shattered <= r.size, "sandwich lower bound");
    check_invariant(r.size <= r.shattered, "sandwich upper bound");
    check_invariant(r.shattered <= r.sauer_bound || f.empty(), "shattered sets within Sauer-Shelah bound");
    check_invariant(r.size <= r.sauer_bound || f.empty(), "family size within Sauer-Shelah bound");
    return r;
}

const char* ample_method_name(AmpleMethod m) noexcept {
    switch (m) {
        case AmpleMethod::complexes: return "complexes";
        case AmpleMethod::counting: return "counting";
        case AmpleMethod::lawrence: return "lawrence";
        case AmpleMethod::gallery: return "gallery";
        case AmpleMethod::all: return "all";
    }
    return "?";
}

namespace {

bool ample_by_complexes(const Family& f) {
    const auto cx = shattering_complexes(f);
    return cx.shattered == cx.strongly_shattered;
}

bool ample_by_counting(const Family& f) {
    if (f.m() <= small::max_m) return small::is_ample(small::tables(f.m()), small::to_set(f));
    std::vector<Mask> scratch;
    // |X̄| counted with early exit once it exceeds |f|.
    std::size_t count = 0;
    bool over = false;
    downward_closed(f, [&](Mask x) {
        if (over) return false;
        bool s = f.size() >= (std::size_t{1} << popcount(x)) &&
                 trace_count(f, x, scratch) == (std::size_t{1} << popcount(x));
        if (s && ++count + 1 > f.size()) over = true;
        return s;
    });
    return !over && count + 1 == f.size();
}

// Every subcube whose trace is closed under its antipodal map is empty or full.
bool ample_by_lawrence(const Family& f) {
    if (f.m() > 12) fail(ErrorCode::method_unavailable, "lawrence criterion limited to m <= 12");
    const Mask all = full_mask(f.m());
    std::vector<std::pair<Mask, Mask>> keyed;
    bool ok = true;
    for_each_subset(all, [&](Mask k) {
        if (!ok) return;
        keyed.clear();
        for (Mask v : f) keyed.emplace_back(v & ~k, v);
        std::sort(keyed.begin(), keyed.end());
        const std::size_t full = std::size_t{1} << popcount(k);
        for (std::size_t i = 0; i < keyed.size() && ok;) {
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            bool closed = true;
            for (std::size_t a = i; a < j && closed; ++a) {
                const auto target = std::make_pair(keyed[i].first, keyed[a].second ^ k);
                closed = std::binary_search(keyed.begin() + static_cast<long>(i), keyed.begin() + static_cast<long>(j), target);
            }
            if (closed && j - i != full) ok = false;
            i = j;
        }
    });
    return ok;
}

// Gallery criterion on a family that need not be a partial cube: any failing pair
// of parallel cubes, including 0-cubes, makes the answer false.
bool ample_by_gallery_unchecked(const Family& f) {
    if (f.empty()) return false;
    const Mask ground = f.varying_coordinates();
    const int m = f.m();
    std::vector<Mask> bases;
    bool ok = true;
    for_each_subset(ground, [&](Mask x) {
        if (!ok) return;
        // Bases of full X-cubes.
        bases.clear();
        std::vector<std::pair<Mask, Mask>> keyed;
        for (Mask v : f) keyed.emplace_back(v & ~x, v);
        std::sort(keyed.begin(), keyed.end());
        const std::size_t full = std::size_t{1} << popcount(x);
        for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            if (j - i == full) bases.push_back(keyed[i].first);
            i = j;
        }
        // Monotone reachability: each step flips one coordinate of y1 xor y2.
        for (std::size_t a = 0; a < bases.size() && ok; ++a) {
            const Mask y1 = bases[a];
            for (std::size_t b = a + 1; b < bases.size() && ok; ++b) {
                const Mask y2 = bases[b];
                std::vector<Mask> stack{y1};
                std::vector<Mask> visited{y1};
                bool reached = false;
                while (!stack.empty() && !reached) {
                    Mask y = stack.back();
                    stack.pop_back();
                    if (y == y2) {
                        reached = true;
                        break;
                    }
                    for_each_bit((y ^ y2) & full_mask(m), [&](int e) {
                        const Mask z = y ^ bit(e);
                        if (std::binary_search(bases.begin(), bases.end(), z) &&
                            std::find(visited.begin(), visited.end(), z) == visited.end()) {
                            visited.push_back(z);
                            stack.push_back(z);
                        }
                    });
                }
                ok = reached;
            }
        }
    });
    return ok;
}

}  // namespace

bool is_ample(const Family& f, AmpleMethod method) {
    if (f.empty()) return false;
    switch (method) {
        case AmpleMethod::complexes: return ample_by_complexes(f);
        case AmpleMethod::counting: return ample_by_counting(f);
        case AmpleMethod::lawrence: return ample_by_lawrence(f);
        case AmpleMethod::gallery:
            if (!is_partial_cube(f)) fail(ErrorCode::precondition, "gallery criterion needs a partial cube");
            return ample_by_gallery_unchecked(f);
        case AmpleMethod::all: {
            const bool a = ample_by_complexes(f);
            const bool b = ample_by_counting(f);
            const bool d = ample_by_gallery_unchecked(f);
            check_invariant(a == b, "ample: complexes and counting agree");
            check_invariant(a == d, "ample: complexes and gallery agree");
            if (f.m() <= 12) check_invariant(a == ample_by_lawrence(f), "ample: complexes and lawrence agree");
            return a;
        }
    }
    return false;
}

std::map<Mask, Family> fibers(const Family& f, Mask x) {
    x &= full_mask(f.m());
    std::map<Mask, std::vector<Mask>> parts;
    for_each_subset(x, [&](Mask y) { parts[y]; });
    for (Mask v : f) parts[v & x].push_back(v);
    std::map<Mask, Family> out;
    for (auto& [y, vs] : parts) out.emplace(y, Family(f.m(), std::move(vs)));
    return out;
}

}  // namespace omcube
