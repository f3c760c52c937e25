#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omcube/family.hpp"
#include "omcube/signvec.hpp"

namespace omcube {

// F(X) = S ∩ C(X) for a covector X of the tope family S.
struct Face {
    SignVector covector;
    Family topes;
    Mask free = 0;  // zero set of the covector
    bool gated = false;

    bool is_cube() const noexcept { return topes.size() == (std::size_t{1} << popcount(free)); }
    // The subcube C(X): covector signs on its support, free elsewhere.
    Family cube() const { return Family::subcube(topes.m(), covector.plus, free); }
};

// Faces of a partial cube, sorted by covector.
class FaceLattice {
public:
    // Largest number of varying coordinates accepted before a resource error.
    static constexpr int max_varying = 14;

    explicit FaceLattice(Family s);

    const Family& topes() const noexcept { return s_; }
    int m() const noexcept { return s_.m(); }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    // Index of the face with this covector, if any.
    std::optional<std::size_t> find(const SignVector& x) const;
    const Face& at(const SignVector& x) const;
    bool is_maximal(std::size_t i) const { return maximal_[i]; }
    // Inclusion-maximal faces, in covector order.
    std::vector<Face> maximal_faces() const;
    SignSystem covectors() const;
    bool all_gated() const noexcept;

private:
    Family s_;
    std::vector<Face> faces_;
    std::vector<bool> maximal_;
};

std::vector<Face> enumerate_faces(const Family& s);
// Maximal faces. For a single face (an OM) this is the whole family.
std::vector<Face> facets(const Family& s);
SignSystem covector_system(const Family& s);

struct ClassReport {
    bool simple = false;        // no constant coordinates
    bool partial_cube = false;
    bool com = false;
    bool om = false;
    bool uom = false;
    bool cuom = false;
    bool amp = false;
    int vcd = -1;
    int rank = -1;              // only for OMs
    std::vector<std::string> reasons;
};

// Works on the varying coordinates of s; constant coordinates only clear `simple`.
ClassReport classify(const Family& s);

struct Zones {
    int e = 0;
    std::vector<Face> hyperplane;  // faces with X_e = 0
    Family carrier;
    Family half_minus;  // carrier without e
    Family half_plus;   // carrier with e
    Family space_minus;
    Family space_plus;
};

Zones zones(const FaceLattice& lat, int e);
Zones zones(const Family& s, int e);

// Face with the given covector, or nullopt when S ∩ C(X) is not a face.
std::optional<Face> face_of(const Family& s, const SignVector& x);

// pr_{F(Y)}(F(X)) = F(X∘Y). Checks the projection calculus along the way and
// throws an internal error on any violation. `cuom` enables the facet checks
// that only hold for CUOMs.
Face face_projection(const FaceLattice& lat, const Face& fx, const Face& fy, bool cuom = false);

bool are_parallel(const Face& fx, const Face& fy);

// Geodesic gallery between parallel faces: consecutive faces are opposite
// facets of a common face. Empty when the faces are not parallel or no gallery exists,
// which already happens for the antipodal edges of C_6.
std::vector<Face> parallel_gallery(const FaceLattice& lat, const Face& fx, const Face& fy);

}  // namespace omcube
