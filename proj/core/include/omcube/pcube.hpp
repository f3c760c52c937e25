#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "omcube/family.hpp"

namespace omcube {

// Isometric in Q_m: connected and graph distance equals Hamming distance.
bool is_partial_cube(const Family& f);

// Graph-only test: bipartite and every halfspace W(u,v) of an edge is convex,
// with distances from BFS. Independent of the coordinate embedding.
bool djokovic_check(const Family& f);

// The same test on an abstract graph given by adjacency lists.
bool is_partial_cube_graph(const std::vector<std::vector<std::uint32_t>>& adj);

// A validated partial cube with a cached all-pairs BFS distance table.
class PCube {
public:
    explicit PCube(Family f);

    const Family& family() const noexcept { return f_; }
    int m() const noexcept { return f_.m(); }
    std::size_t size() const noexcept { return f_.size(); }
    Mask theta_classes() const noexcept { return f_.varying_coordinates(); }
    bool contains(Mask v) const { return f_.contains(v); }

    // Index of a vertex in family().vertices(), or -1.
    int index_of(Mask v) const;
    int distance(Mask u, Mask v) const;
    int distance_at(std::size_t i, std::size_t j) const { return dist_[i * f_.size() + j]; }
    const std::vector<std::uint32_t>& neighbors(std::size_t i) const { return adj_[i]; }

private:
    Family f_;
    std::vector<std::uint8_t> dist_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

struct HalfspaceSplit {
    int e = 0;
    Family minus;  // vertices without e
    Family plus;   // vertices with e
};

std::vector<HalfspaceSplit> theta_and_halfspaces(const PCube& g);

Family interval(const PCube& g, Mask u, Mask v);

// h must be a subset of g.
bool is_convex(const PCube& g, const Family& h);

std::optional<Mask> gate(const PCube& g, Mask v, const Family& h);
bool is_gated(const PCube& g, const Family& h);

struct Projection {
    Family of_a;  // vertices of a closest to b
    Family of_b;  // vertices of b closest to a
    int distance = 0;
};

Projection metric_projection(const PCube& g, const Family& a, const Family& b);

struct AntipodeMap {
    std::vector<std::pair<Mask, Mask>> pairs;  // (v, -v) for every v, sorted by v
};

struct NotAntipodal {
    Mask vertex = 0;
};

std::variant<AntipodeMap, NotAntipodal> antipodes(const PCube& g);
bool is_antipodal(const Family& f);

// Drops coordinate e and renumbers the remaining ones.
PCube contract_coordinate(const PCube& g, int e);
// Same contraction, but keeps the ambient cube by forcing coordinate e to 0.
Family clear_coordinate(const Family& f, int e);

PCube restrict_halfspace(const PCube& g, int e, bool plus_side);

// Adds coordinate m: g1 copies get 0, g2 copies get 1.
PCube expand(const PCube& g, const Family& g1, const Family& g2);
// expand(g, V(g), g0): the copy of g0 carries the new coordinate.
PCube peripheral_expansion(const PCube& g, const Family& g0);
// Expansion into an existing unused coordinate e (constant 0 on f):
// side0 keeps e = 0, side1 gets e = 1. Cover conditions are validated.
Family expand_at(const Family& f, int e, const Family& side0, const Family& side1);

// Both q1 and q2 must be full X-cubes of g for the same X.
bool geodesic_gallery_exists(const PCube& g, const Family& q1, const Family& q2);

}  // namespace omcube
