#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "omcube/bits.hpp"

namespace omcube {

// A set of vertices of Q_m. Vertices are kept sorted and unique.
class Family {
public:
    Family() = default;
    Family(int m, std::vector<Mask> vertices);

    static Family cube(int m) { return subcube(m, 0, full_mask(m)); }
    static Family subcube(int m, Mask base, Mask free);

    int m() const noexcept { return m_; }
    const std::vector<Mask>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    bool contains(Mask v) const;
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    // Coordinates on which at least two vertices differ.
    Mask varying_coordinates() const noexcept;
    // Values on the constant coordinates (0 on varying ones). Empty family: 0.
    Mask constant_part() const noexcept;
    // The smallest subcube C(f) containing the family.
    Family enclosing_cube() const;
    bool is_cube() const noexcept { return !empty() && size() == (std::size_t{1} << popcount(varying_coordinates())); }

    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family&, const Family&) = default;

private:
    int m_ = 0;
    std::vector<Mask> vertices_;
};

Family unite(const Family& a, const Family& b);
Family intersect(const Family& a, const Family& b);
Family difference(const Family& a, const Family& b);
bool is_subset(const Family& a, const Family& b);
Family translate(const Family& f, Mask by);
// Keeps only the coordinates in `keep`, renumbered to 0..|keep|-1.
Family project(const Family& f, Mask keep);
// Vertices lying in the subcube {u : u & ~free == base & ~free}.
Family restrict_to_cube(const Family& f, Mask base, Mask free);
// Re-embeds into a larger cube by zero padding the new coordinates.
Family pad(const Family& f, int m);

// Downward-closed collection of element sets, sorted by (size, mask).
struct Complex {
    int m = 0;
    std::vector<Mask> sets;

    bool contains(Mask x) const;
    std::size_t size() const noexcept { return sets.size(); }
    friend bool operator==(const Complex&, const Complex&) = default;
};

bool shatters(const Family& f, Mask x);
bool strongly_shatters(const Family& f, Mask x);

// -1 for the empty family.
int vc_dim(const Family& f);

struct ShatteringComplexes {
    Complex shattered;
    Complex strongly_shattered;
};

ShatteringComplexes shattering_complexes(const Family& f);

// Sum of binomial(m, i) for i = 0..d.
std::uint64_t phi(int d, int m);

struct SandwichReport {
    std::size_t strongly_shattered = 0;
    std::size_t size = 0;
    std::size_t shattered = 0;
    std::uint64_t sauer_bound = 0;
    int vcd = -1;
};

SandwichReport sandwich_report(const Family& f);

enum class AmpleMethod { complexes, counting, lawrence, gallery, all };

const char* ample_method_name(AmpleMethod m) noexcept;

bool is_ample(const Family& f, AmpleMethod method = AmpleMethod::counting);

// Partition by trace on x. Every subset of x is a key, possibly with an empty family.
std::map<Mask, Family> fibers(const Family& f, Mask x);

}  // namespace omcube
