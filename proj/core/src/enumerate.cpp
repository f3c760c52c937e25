#include <algorithm>
#include <array>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/parallel.hpp"
#include "omcube/pcube.hpp"

namespace omcube {

namespace {

constexpr int fast_dim = 5;
constexpr int max_canonical_dim = 7;

// Signed permutations of Q_d as vertex maps: v -> perm(v) ^ flip.
struct Symmetry {
    std::array<int, 8> perm{};
    Mask flip = 0;

    Mask apply(Mask v, int d) const {
        Mask out = 0;
        for (int i = 0; i < d; ++i)
            if (v & bit(i)) out |= bit(perm[i]);
        return out ^ flip;
    }
};

std::vector<Symmetry> symmetries(int d) {
    std::vector<Symmetry> out;
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
        for (Mask flip = 0; flip < (Mask{1} << d); ++flip) {
            Symmetry s;
            s.perm = p;
            s.flip = flip;
            out.push_back(s);
        }
    } while (std::next_permutation(p.begin(), p.begin() + d));
    return out;
}

// Byte tables mapping 8 vertex positions at a time, for d <= 5.
struct FastGroup {
    int d = 0;
    int chunks = 0;
    std::vector<std::uint32_t> table;  // [element][chunk][byte]
    std::size_t elements = 0;

    std::uint32_t image(std::size_t g, std::uint32_t set) const {
        const std::uint32_t* t = &table[g * static_cast<std::size_t>(chunks) * 256];
        std::uint32_t out = 0;
        for (int c = 0; c < chunks; ++c) out |= t[c * 256 + ((set >> (8 * c)) & 0xffu)];
        return out;
    }
};

const FastGroup& fast_group(int d) {
    static std::array<FastGroup, fast_dim + 1> groups;
    static std::array<std::once_flag, fast_dim + 1> once;
    std::call_once(once[d], [d] {
        FastGroup& g = groups[d];
        g.d = d;
        const int positions = 1 << d;
        g.chunks = (positions + 7) / 8;
        const auto syms = symmetries(d);
        g.elements = syms.size();
        g.table.assign(g.elements * g.chunks * 256, 0);
        for (std::size_t k = 0; k < syms.size(); ++k)
            for (int c = 0; c < g.chunks; ++c)
                for (int byte = 0; byte < 256; ++byte) {
                    std::uint32_t out = 0;
                    for (int b = 0; b < 8; ++b) {
                        const int v = 8 * c + b;
                        if (v < positions && (byte & (1 << b))) out |= std::uint32_t{1} << syms[k].apply(static_cast<Mask>(v), d);
                    }
                    g.table[(k * g.chunks + c) * 256 + byte] = out;
                }
    });
    return groups[d];
}

std::uint32_t fast_canonical(std::uint32_t set, int d) {
    const FastGroup& g = fast_group(d);
    std::uint32_t best = set;
    for (std::size_t k = 0; k < g.elements; ++k) best = std::min(best, g.image(k, set));
    return best;
}

std::vector<std::uint64_t> to_bits(const Family& f, int d) {
    std::vector<std::uint64_t> bits(((std::size_t{1} << d) + 63) / 64, 0);
    for (Mask v : f) bits[v / 64] |= std::uint64_t{1} << (v % 64);
    return bits;
}

// Compares bitsets as big numbers with the top word most significant.
bool bits_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

CanonicalKey key_of_varying(const Family& g) {
    const int d = g.m();
    CanonicalKey key;
    key.dim = d;
    if (d <= fast_dim) {
        std::uint32_t set = 0;
        for (Mask v : g) set |= std::uint32_t{1} << v;
        key.bits = {fast_canonical(set, d)};
        return key;
    }
    if (d > max_canonical_dim) fail(ErrorCode::resource, "canonical form supports at most 7 varying coordinates");
    std::vector<std::uint64_t> best = to_bits(g, d);
    std::vector<Mask> image(g.size());
    for (const auto& s : symmetries(d)) {
        std::vector<std::uint64_t> bits(best.size(), 0);
        for (Mask v : g) {
            const Mask w = s.apply(v, d);
            bits[w / 64] |= std::uint64_t{1} << (w % 64);
        }
        if (bits_less(bits, best)) best = std::move(bits);
    }
    key.bits = std::move(best);
    return key;
}

Family family_of_key(const CanonicalKey& key) {
    std::vector<Mask> vs;
    for (std::size_t w = 0; w < key.bits.size(); ++w)
        for (int b = 0; b < 64; ++b)
            if (key.bits[w] & (std::uint64_t{1} << b)) vs.push_back(static_cast<Mask>(w * 64 + b));
    return {key.dim, std::move(vs)};
}

// Isometry of every vertex subset of Q_4, indexed by the subset's bitmask.
const std::vector<bool>& isometric_q4() {
    static const std::vector<bool> table = [] {
        std::vector<bool> t(1u << 16, false);
        for (std::uint32_t s = 1; s < (1u << 16); ++s) {
            std::array<Mask, 16> dirs{};
            for (Mask v = 0; v < 16; ++v)
                if (s & (1u << v))
                    for (int e = 0; e < 4; ++e)
                        if (s & (1u << (v ^ bit(e)))) dirs[v] |= bit(e);
            bool ok = true;
            for (Mask u = 0; u < 16 && ok; ++u) {
                if (!(s & (1u << u))) continue;
                for (Mask v = 0; v < 16 && ok; ++v)
                    if (u != v && (s & (1u << v)) && !(dirs[u] & (u ^ v))) ok = false;
            }
            t[s] = ok;
        }
        return t;
    }();
    return table;
}

// Neighbours of a vertex set inside Q_d, as a position bitset.
std::uint32_t neighbourhood(std::uint32_t set, int d) {
    static constexpr std::array<std::uint32_t, 5> low = {0x55555555u, 0x33333333u, 0x0f0f0f0fu, 0x00ff00ffu, 0x0000ffffu};
    std::uint32_t out = 0;
    for (int e = 0; e < d; ++e) {
        const int shift = 1 << e;
        out |= ((set & low[e]) << shift) | ((set & ~low[e]) >> shift);
    }
    return out;
}

std::vector<std::uint32_t> components(std::uint32_t set, int d) {
    std::vector<std::uint32_t> out;
    while (set) {
        std::uint32_t comp = set & (~set + 1);
        for (;;) {
            const std::uint32_t grown = comp | (neighbourhood(comp, d) & set);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        set &= ~comp;
    }
    return out;
}

}  // namespace

std::string CanonicalKey::to_string() const {
    std::string out = std::to_string(dim) + ":";
    char buf[17];
    for (std::size_t i = bits.size(); i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(bits[i]));
        out += buf;
    }
    return out;
}

CanonicalKey canonical_form(const Family& f) {
    if (f.empty()) return {};
    return key_of_varying(project(f, f.varying_coordinates()));
}

Family canonical_family(const Family& f) {
    if (f.empty()) return {};
    return family_of_key(canonical_form(f));
}

std::vector<EnumeratedClass> enumerate_partial_cubes(int m, unsigned threads) {
    if (m < 0) fail(ErrorCode::argument, "enumeration size must be nonnegative");
    if (m > fast_dim) fail(ErrorCode::resource, "partial-cube enumeration is limited to m <= 5");
    const auto& iso = isometric_q4();

    std::vector<std::vector<std::uint32_t>> levels{{1u}};
    for (int k = 0; k < m; ++k) {
        const int shift = 1 << k;
        const auto& parents = levels[k];
        // One result set per parent; the merged union does not depend on scheduling.
        std::vector<std::vector<std::uint32_t>> found(parents.size());
        parallel_for(parents.size(), threads, [&](std::size_t p) {
            const std::uint32_t parent = parents[p];
            std::set<std::uint32_t> local;
            for (std::uint32_t shared = parent; shared; shared = (shared - 1) & parent) {
                const auto comps = components(parent & ~shared, k);
                const std::size_t free_choices = comps.empty() ? 1 : std::size_t{1} << (comps.size() - 1);
                for (std::size_t choice = 0; choice < free_choices; ++choice) {
                    std::uint32_t side1 = shared, side2 = shared;
                    for (std::size_t c = 0; c < comps.size(); ++c)
                        ((c == 0 || !(choice & (std::size_t{1} << (c - 1)))) ? side1 : side2) |= comps[c];
                    if (!iso[side1] || !iso[side2]) continue;
                    local.insert(fast_canonical(side1 | (side2 << shift), k + 1));
                }
            }
            found[p].assign(local.begin(), local.end());
        });
        std::set<std::uint32_t> next;
        for (const auto& f : found) next.insert(f.begin(), f.end());
        levels.emplace_back(next.begin(), next.end());
    }

    std::vector<EnumeratedClass> out;
    for (int k = 0; k <= m; ++k)
        for (std::uint32_t set : levels[k]) {
            CanonicalKey key{k, {set}};
            out.push_back({key, pad(family_of_key(key), m)});
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

std::vector<EnumeratedClass> enumerate_partial_cubes_brute(int m) {
    if (m < 0 || m > 4) fail(ErrorCode::resource, "brute-force enumeration is limited to m <= 4");
    const auto& iso = isometric_q4();
    std::set<CanonicalKey> keys;
    const std::uint32_t limit = std::uint32_t{1} << (1u << m);
    for (std::uint32_t s = 1; s < limit; ++s) {
        if (!iso[s]) continue;
        std::vector<Mask> vs;
        for (Mask v = 0; v < (Mask{1} << m); ++v)
            if (s & (1u << v)) vs.push_back(v);
        keys.insert(canonical_form(Family(m, std::move(vs))));
    }
    std::vector<EnumeratedClass> out;
    for (const auto& key : keys) out.push_back({key, pad(family_of_key(key), m)});
    return out;
}

bool embeds_up_to_symmetry(const Family& a, const Family& b) {
    if (a.m() != b.m()) fail(ErrorCode::dimension, "embeds_up_to_symmetry: families live in different cubes");
    if (a.m() > max_canonical_dim) fail(ErrorCode::resource, "symmetry search is limited to m <= 7");
    if (a.size() > b.size()) return false;
    for (const auto& s : symmetries(a.m())) {
        bool inside = true;
        for (Mask v : a)
            if (!b.contains(s.apply(v, a.m()))) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

bool graphs_isomorphic(const Family& a, const Family& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    auto adjacency = [](const Family& f) {
        std::vector<std::vector<bool>> adj(f.size(), std::vector<bool>(f.size(), false));
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
                adj[i][j] = popcount(f.vertices()[i] ^ f.vertices()[j]) == 1;
        return adj;
    };
    const auto adj_a = adjacency(a), adj_b = adjacency(b);
    auto degrees = [n](const auto& adj) {
        std::vector<int> d(n, 0);
        for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(std::count(adj[i].begin(), adj[i].end(), true));
        return d;
    };
    const auto deg_a = degrees(adj_a), deg_b = degrees(adj_b);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || deg_a[i] != deg_b[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = adj_a[i][k] == adj_b[j][static_cast<std::size_t>(map[k])];
            if (!ok) continue;
            map[i] = static_cast<int>(j);
            used[j] = true;
            if (self(self, i + 1)) return true;
            used[j] = false;
        }
        map[i] = -1;
        return false;
    };
    return extend(extend, 0);
}

}  // namespace omcube
