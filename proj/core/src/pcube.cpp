#include "omcube/pcube.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "omcube/error.hpp"

namespace omcube {

namespace {

int hamming(Mask a, Mask b) { return popcount(a ^ b); }

// Coordinates e such that v ^ e is also a vertex.
std::vector<Mask> neighbor_directions(const Family& f) {
    std::vector<Mask> dirs(f.size(), 0);
    const Mask ground = f.varying_coordinates();
    for (std::size_t i = 0; i < f.size(); ++i)
        for_each_bit(ground, [&](int e) {
            if (f.contains(f.vertices()[i] ^ bit(e))) dirs[i] |= bit(e);
        });
    return dirs;
}

std::vector<std::vector<std::uint32_t>> adjacency(const Family& f) {
    std::vector<std::vector<std::uint32_t>> adj(f.size());
    const auto& vs = f.vertices();
    const Mask ground = f.varying_coordinates();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for_each_bit(ground, [&](int e) {
            auto it = std::lower_bound(vs.begin(), vs.end(), vs[i] ^ bit(e));
            if (it != vs.end() && *it == (vs[i] ^ bit(e))) adj[i].push_back(static_cast<std::uint32_t>(it - vs.begin()));
        });
    return adj;
}

std::vector<int> bfs(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t src) {
    std::vector<int> d(adj.size(), -1);
    std::deque<std::size_t> q{src};
    d[src] = 0;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (auto w : adj[u])
            if (d[w] < 0) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
    }
    return d;
}

void require_subset(const PCube& g, const Family& h, const char* what) {
    if (h.m() != g.m()) fail(ErrorCode::dimension, std::string(what) + ": families live in different cubes");
    if (!is_subset(h, g.family())) fail(ErrorCode::argument, std::string(what) + ": subgraph is not contained in g");
}

}  // namespace

// A connected induced subgraph of Q_m is isometric iff every ordered pair u != v
// has a neighbour of u in the family that is one step closer to v.
bool is_partial_cube(const Family& f) {
    if (f.empty()) return false;
    const auto dirs = neighbor_directions(f);
    const auto& vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (i != j && !(dirs[i] & (vs[i] ^ vs[j]))) return false;
    return true;
}

bool djokovic_check(const Family& f) { return is_partial_cube_graph(adjacency(f)); }

bool is_partial_cube_graph(const std::vector<std::vector<std::uint32_t>>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return false;
    std::vector<std::vector<int>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = bfs(adj, i);
        for (int x : d[i])
            if (x < 0) return false;
    }
    // Bipartite: adjacent vertices have distances of different parity from vertex 0.
    for (std::size_t u = 0; u < n; ++u)
        for (auto w : adj[u])
            if ((d[0][u] + d[0][w]) % 2 == 0) return false;
    // Every W(u,v) = {x : d(x,u) < d(x,v)} must be convex.
    for (std::size_t u = 0; u < n; ++u)
        for (auto v : adj[u]) {
            std::vector<char> in(n, 0);
            for (std::size_t x = 0; x < n; ++x) in[x] = d[x][u] < d[x][v];
            for (std::size_t x = 0; x < n; ++x) {
                if (!in[x]) continue;
                for (std::size_t y = x + 1; y < n; ++y) {
                    if (!in[y]) continue;
                    for (std::size_t z = 0; z < n; ++z)
                        if (!in[z] && d[x][z] + d[z][y] == d[x][y]) return false;
                }
            }
        }
    return true;
}

PCube::PCube(Family f) : f_(std::move(f)) {
    if (f_.empty()) fail(ErrorCode::precondition, "partial cube must be nonempty");
    if (!is_partial_cube(f_)) fail(ErrorCode::precondition, "family is not a partial cube (not isometric in Q_m)");
    adj_ = adjacency(f_);
    const std::size_t n = f_.size();
    dist_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto d = bfs(adj_, i);
        for (std::size_t j = 0; j < n; ++j) {
            check_invariant(d[j] == hamming(f_.vertices()[i], f_.vertices()[j]), "BFS distance equals Hamming distance");
            dist_[i * n + j] = static_cast<std::uint8_t>(d[j]);
        }
    }
}

int PCube::index_of(Mask v) const {
    const auto& vs = f_.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    return it != vs.end() && *it == v ? static_cast<int>(it - vs.begin()) : -1;
}

int PCube::distance(Mask u, Mask v) const {
    int i = index_of(u), j = index_of(v);
    if (i < 0 || j < 0) fail(ErrorCode::argument, "distance: vertex not in the partial cube");
    return distance_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

std::vector<HalfspaceSplit> theta_and_halfspaces(const PCube& g) {
    std::vector<HalfspaceSplit> out;
    for_each_bit(g.theta_classes(), [&](int e) {
        std::vector<Mask> lo, hi;
        for (Mask v : g.family()) (v & bit(e) ? hi : lo).push_back(v);
        HalfspaceSplit s{e, Family(g.m(), std::move(lo)), Family(g.m(), std::move(hi))};
        check_invariant(is_convex(g, s.minus) && is_convex(g, s.plus), "halfspaces are convex");
        out.push_back(std::move(s));
    });
    return out;
}

Family interval(const PCube& g, Mask u, Mask v) {
    const int iu = g.index_of(u), iv = g.index_of(v);
    if (iu < 0 || iv < 0) fail(ErrorCode::argument, "interval: vertex not in the partial cube");
    const int duv = g.distance_at(static_cast<std::size_t>(iu), static_cast<std::size_t>(iv));
    std::vector<Mask> out;
    for (std::size_t x = 0; x < g.size(); ++x)
        if (g.distance_at(static_cast<std::size_t>(iu), x) + g.distance_at(x, static_cast<std::size_t>(iv)) == duv)
            out.push_back(g.family().vertices()[x]);
    Family r(g.m(), std::move(out));
    check_invariant(is_convex(g, r), "intervals of partial cubes are convex");
    return r;
}

// Convex subsets of a partial cube are exactly the intersections of halfspaces;
// the smallest such intersection containing h is g ∩ C(h).
bool is_convex(const PCube& g, const Family& h) {
    require_subset(g, h, "is_convex");
    if (h.empty()) return true;
    return restrict_to_cube(g.family(), h.constant_part(), h.varying_coordinates()) == h;
}

std::optional<Mask> gate(const PCube& g, Mask v, const Family& h) {
    require_subset(g, h, "gate");
    if (!g.contains(v)) fail(ErrorCode::argument, "gate: vertex not in the partial cube");
    if (h.empty()) fail(ErrorCode::argument, "gate: empty target");
    // The gate, when it exists, is the unique nearest vertex.
    Mask best = h.vertices().front();
    int bd = std::numeric_limits<int>::max();
    for (Mask x : h) {
        int d = g.distance(v, x);
        if (d < bd) {
            bd = d;
            best = x;
        }
    }
    for (Mask y : h)
        if (g.distance(v, best) + g.distance(best, y) != g.distance(v, y)) return std::nullopt;
    return best;
}

bool is_gated(const PCube& g, const Family& h) {
    require_subset(g, h, "is_gated");
    if (h.empty()) return false;
    for (Mask v : g.family())
        if (!gate(g, v, h)) return false;
    return true;
}

Projection metric_projection(const PCube& g, const Family& a, const Family& b) {
    if (!is_gated(g, a) || !is_gated(g, b)) fail(ErrorCode::precondition, "metric_projection: inputs must be gated");
    int dab = std::numeric_limits<int>::max();
    auto dist_to = [&](Mask x, const Family& t) {
        int best = std::numeric_limits<int>::max();
        for (Mask y : t) best = std::min(best, g.distance(x, y));
        return best;
    };
    for (Mask x : a) dab = std::min(dab, dist_to(x, b));
    std::vector<Mask> pa, pb;
    for (Mask x : a)
        if (dist_to(x, b) == dab) pa.push_back(x);
    for (Mask y : b)
        if (dist_to(y, a) == dab) pb.push_back(y);
    Projection p{Family(g.m(), std::move(pa)), Family(g.m(), std::move(pb)), dab};
    check_invariant(p.of_a.size() == p.of_b.size(), "mutual projections have equal size");
    // Gates realize a bijection at distance d(A,B).
    std::vector<Mask> images;
    for (Mask x : p.of_a) {
        auto gx = gate(g, x, b);
        check_invariant(gx && p.of_b.contains(*gx) && g.distance(x, *gx) == dab, "gate of a projection vertex");
        auto back = gate(g, *gx, a);
        check_invariant(back && *back == x, "gates between projections are mutually inverse");
        images.push_back(*gx);
    }
    check_invariant(Family(g.m(), images) == p.of_b, "gate map is onto the other projection");
    return p;
}

std::variant<AntipodeMap, NotAntipodal> antipodes(const PCube& g) {
    AntipodeMap map;
    const Mask theta = g.theta_classes();
    for (Mask v : g.family()) {
        const Mask w = v ^ theta;
        if (!g.contains(w) || interval(g, v, w).size() != g.size()) return NotAntipodal{v};
        map.pairs.emplace_back(v, w);
    }
    return map;
}

bool is_antipodal(const Family& f) {
    const Mask theta = f.varying_coordinates();
    for (Mask v : f)
        if (!f.contains(v ^ theta)) return false;
    return !f.empty();
}

PCube contract_coordinate(const PCube& g, int e) {
    if (e < 0 || e >= g.m() || !(g.theta_classes() & bit(e)))
        fail(ErrorCode::argument, "contract_coordinate: element is not a Theta-class");
    return PCube(project(g.family(), full_mask(g.m()) & ~bit(e)));
}

Family clear_coordinate(const Family& f, int e) {
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask v : f) out.push_back(v & ~bit(e));
    return {f.m(), std::move(out)};
}

PCube restrict_halfspace(const PCube& g, int e, bool plus_side) {
    if (e < 0 || e >= g.m() || !(g.theta_classes() & bit(e)))
        fail(ErrorCode::argument, "restrict_halfspace: element is not a Theta-class");
    std::vector<Mask> out;
    for (Mask v : g.family())
        if (static_cast<bool>(v & bit(e)) == plus_side) out.push_back(v);
    return PCube(Family(g.m(), std::move(out)));
}

namespace {

// Isometric cover check shared by expand and expand_at. Returns an empty string
// when the cover is valid, otherwise a description of the first failure.
std::string cover_failure(const Family& f, const Family& g1, const Family& g2) {
    if (g1.empty() || g2.empty()) return "cover side is empty";
    if (!is_subset(g1, f) || !is_subset(g2, f)) return "cover side is not contained in the graph";
    if (unite(g1, g2) != f) return "cover sides do not cover all vertices";
    if (intersect(g1, g2).empty()) return "cover sides do not intersect";
    if (!is_partial_cube(g1)) return "first cover side is not isometric";
    if (!is_partial_cube(g2)) return "second cover side is not isometric";
    // Every edge must lie in one side: no edge from g1 \ g2 to g2 \ g1.
    const Family only1 = difference(g1, g2);
    const Family only2 = difference(g2, g1);
    for (Mask v : only1)
        for_each_bit(full_mask(f.m()), [&](int e) {
            if (only2.contains(v ^ bit(e))) throw Error(ErrorCode::precondition, "edge not covered by either side");
        });
    return {};
}

}  // namespace

PCube expand(const PCube& g, const Family& g1, const Family& g2) {
    if (g.m() >= max_ground) fail(ErrorCode::dimension, "expand: ground set already has 32 elements");
    if (g1.m() != g.m() || g2.m() != g.m()) fail(ErrorCode::dimension, "expand: cover lives in a different cube");
    std::string why;
    try {
        why = cover_failure(g.family(), g1, g2);
    } catch (const Error& err) {
        why = err.what();
    }
    if (!why.empty()) fail(ErrorCode::precondition, "expand: " + why);
    const int m = g.m();
    std::vector<Mask> out;
    for (Mask v : g1) out.push_back(v);
    for (Mask v : g2) out.push_back(v | bit(m));
    Family r(m + 1, std::move(out));
    check_invariant(is_partial_cube(r), "isometric expansion is a partial cube");
    return PCube(std::move(r));
}

PCube peripheral_expansion(const PCube& g, const Family& g0) { return expand(g, g.family(), g0); }

Family expand_at(const Family& f, int e, const Family& side0, const Family& side1) {
    if (f.varying_coordinates() & bit(e) || f.constant_part() & bit(e))
        fail(ErrorCode::argument, "expand_at: coordinate is already in use");
    std::string why;
    try {
        why = cover_failure(f, side0, side1);
    } catch (const Error& err) {
        why = err.what();
    }
    if (!why.empty()) fail(ErrorCode::precondition, "expand_at: " + why);
    std::vector<Mask> out;
    for (Mask v : side0) out.push_back(v);
    for (Mask v : side1) out.push_back(v | bit(e));
    return {f.m(), std::move(out)};
}

bool geodesic_gallery_exists(const PCube& g, const Family& q1, const Family& q2) {
    require_subset(g, q1, "geodesic_gallery_exists");
    require_subset(g, q2, "geodesic_gallery_exists");
    const Mask x = q1.varying_coordinates();
    if (!q1.is_cube() || !q2.is_cube() || q2.varying_coordinates() != x)
        fail(ErrorCode::precondition, "geodesic_gallery_exists: inputs are not parallel cubes");
    const Mask y1 = q1.constant_part(), y2 = q2.constant_part();
    // Each step of a geodesic gallery flips one coordinate of y1 xor y2, so the
    // search space is the set of X-cube bases inside that interval.
    auto present = [&](Mask base) {
        bool all = true;
        for_each_subset(x, [&](Mask s) { all = all && g.contains(base | s); });
        return all;
    };
    std::vector<Mask> stack{y1}, seen{y1};
    while (!stack.empty()) {
        Mask y = stack.back();
        stack.pop_back();
        if (y == y2) return true;
        for_each_bit(y ^ y2, [&](int e) {
            const Mask z = y ^ bit(e);
            if (std::find(seen.begin(), seen.end(), z) == seen.end() && present(z)) {
                seen.push_back(z);
                stack.push_back(z);
            }
        });
    }
    return false;
}

}  // namespace omcube
