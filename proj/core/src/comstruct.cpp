#include "omcube/comstruct.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "omcube/error.hpp"
#include "omcube/pcube.hpp"

namespace omcube {

namespace {

// Gate of v in s ∩ C(base, free) is the clamp of v; the set is gated iff
// every clamp lands in it (distances are Hamming in a partial cube).
bool gated_by_clamp(const Family& s, const Family& part, Mask base, Mask free) {
    for (Mask v : s)
        if (!part.contains((v & free) | (base & ~free))) return false;
    return true;
}

SignVector covector_of(int m, Mask base, Mask free) {
    const Mask fixed = full_mask(m) & ~free;
    return {base & fixed, fixed & ~base, m};
}

bool inside_cube(Mask v, const SignVector& x) { return (v & x.support()) == x.plus; }

int hamming_distance(const Family& a, const Family& b) {
    int best = max_ground + 1;
    for (Mask u : a)
        for (Mask v : b) best = std::min(best, popcount(u ^ v));
    return best;
}

Family closest_to(const Family& a, const Family& b, int d) {
    std::vector<Mask> out;
    for (Mask u : a) {
        int best = max_ground + 1;
        for (Mask v : b) best = std::min(best, popcount(u ^ v));
        if (best == d) out.push_back(u);
    }
    return {a.m(), std::move(out)};
}

}  // namespace

FaceLattice::FaceLattice(Family s) : s_(std::move(s)) {
    if (s_.empty()) fail(ErrorCode::precondition, "face enumeration needs a nonempty family");
    if (!is_partial_cube(s_)) fail(ErrorCode::precondition, "face enumeration needs a partial cube");
    const Mask ground = s_.varying_coordinates();
    if (popcount(ground) > max_varying)
        fail(ErrorCode::resource, "face enumeration is capped at " + std::to_string(max_varying) + " varying coordinates");

    for_each_subset(ground, [&](Mask free) {
        std::map<Mask, std::vector<Mask>> groups;
        for (Mask v : s_) groups[v & ~free].push_back(v);
        for (auto& [base, members] : groups) {
            bool antipodal = true;
            for (Mask u : members)
                if (!s_.contains(u ^ free)) {
                    antipodal = false;
                    break;
                }
            if (!antipodal) continue;
            Face f;
            f.covector = covector_of(s_.m(), base, free);
            f.topes = Family(s_.m(), std::move(members));
            f.free = free;
            f.gated = gated_by_clamp(s_, f.topes, base, free);
            faces_.push_back(std::move(f));
        }
    });
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.covector < b.covector; });

    maximal_.assign(faces_.size(), true);
    for (std::size_t i = 0; i < faces_.size(); ++i)
        for (std::size_t j = 0; j < faces_.size() && maximal_[i]; ++j) {
            if (i == j || faces_[j].topes.size() <= faces_[i].topes.size()) continue;
            const auto& xj = faces_[j].covector;
            if (std::all_of(faces_[i].topes.begin(), faces_[i].topes.end(), [&](Mask v) { return inside_cube(v, xj); }))
                maximal_[i] = false;
        }
}

std::optional<std::size_t> FaceLattice::find(const SignVector& x) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), x,
                               [](const Face& f, const SignVector& key) { return f.covector < key; });
    if (it == faces_.end() || it->covector != x) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
}

const Face& FaceLattice::at(const SignVector& x) const {
    auto i = find(x);
    if (!i) fail(ErrorCode::argument, "no face with covector " + x.to_string());
    return faces_[*i];
}

std::vector<Face> FaceLattice::maximal_faces() const {
    std::vector<Face> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (maximal_[i]) out.push_back(faces_[i]);
    return out;
}

SignSystem FaceLattice::covectors() const {
    std::vector<SignVector> xs;
    xs.reserve(faces_.size());
    for (const auto& f : faces_) xs.push_back(f.covector);
    return {s_.m(), std::move(xs)};
}

bool FaceLattice::all_gated() const noexcept {
    return std::all_of(faces_.begin(), faces_.end(), [](const Face& f) { return f.gated; });
}

std::vector<Face> enumerate_faces(const Family& s) { return FaceLattice(s).faces(); }

std::vector<Face> facets(const Family& s) { return FaceLattice(s).maximal_faces(); }

SignSystem covector_system(const Family& s) { return FaceLattice(s).covectors(); }

ClassReport classify(const Family& s) {
    ClassReport r;
    if (s.empty()) {
        r.reasons.emplace_back("empty family");
        return r;
    }
    const Mask ground = s.varying_coordinates();
    r.simple = ground == full_mask(s.m());
    if (!r.simple) r.reasons.emplace_back("constant coordinates present; classified on the varying ones");
    r.vcd = vc_dim(s);
    r.partial_cube = is_partial_cube(s);
    if (!r.partial_cube) {
        r.reasons.emplace_back("not a partial cube");
        check_invariant(!is_ample(s), "ample families are partial cubes");
        return r;
    }
    const Family t = project(s, ground);
    if (t.m() == 0) {
        r.com = r.om = r.uom = r.cuom = r.amp = true;
        r.rank = 0;
        return r;
    }

    const FaceLattice lat(t);
    const SignSystem cov = lat.covectors();
    const AxiomReport ax = axiom_report(cov);
    const bool gated = lat.all_gated();
    const bool round_trip = topes_and_cocircuits(cov).topes == t;
    if (!ax.strong_elimination) r.reasons.emplace_back("reconstructed covectors violate strong elimination");
    if (!ax.face_symmetry) r.reasons.emplace_back("reconstructed covectors violate face symmetry");
    if (!gated) r.reasons.emplace_back("some face is not gated");
    check_invariant(round_trip, "face covectors reproduce the tope set");
    r.com = ax.is_com() && gated;

    const PCube g(t);
    const bool antipodal = std::holds_alternative<AntipodeMap>(antipodes(g));
    if (r.com) check_invariant(antipodal == ax.has_zero, "a COM is an OM iff its tope graph is antipodal");
    r.om = r.com && ax.has_zero;
    if (r.com && !r.om) r.reasons.emplace_back("not antipodal");

    bool proper_cubes = true, nonmax_cubes = true;
    for (std::size_t i = 0; i < lat.faces().size(); ++i) {
        const Face& f = lat.faces()[i];
        if (f.is_cube()) continue;
        if (f.topes.size() != t.size()) proper_cubes = false;
        if (!lat.is_maximal(i)) {
            if (nonmax_cubes) r.reasons.emplace_back("non-maximal face " + f.covector.to_string() + " is not a cube");
            nonmax_cubes = false;
        }
    }

    if (r.om) {
        r.rank = rank_of(cov);
        check_invariant(r.rank == r.vcd, "rank of an OM equals its VC-dimension");
        r.uom = proper_cubes;
        check_invariant(r.uom == is_uom_by_cocircuits(cov), "UOM by faces agrees with UOM by cocircuits");
    }
    if (r.com) {
        r.cuom = nonmax_cubes;
        bool halves_ample = true;
        for_each_bit(full_mask(t.m()), [&](int e) {
            Zones z = zones(lat, e);
            halves_ample = halves_ample && is_ample(z.half_minus) && is_ample(z.half_plus);
        });
        check_invariant(r.cuom == halves_ample, "CUOM iff all half-carriers are ample");
        if (r.om) check_invariant(r.cuom == r.uom, "an OM is a CUOM iff it is a UOM");
    }

    r.amp = is_ample(t);
    check_invariant(!r.amp || r.com, "ample partial cubes are COMs");
    if (r.com) check_invariant(r.amp == ax.ideal_composition, "a COM is ample iff its covectors satisfy ideal composition");
    return r;
}

Zones zones(const FaceLattice& lat, int e) {
    const Family& s = lat.topes();
    if (e < 0 || e >= s.m() || !(s.varying_coordinates() & bit(e)))
        fail(ErrorCode::argument, "zones: element is not a Theta-class");
    Zones z;
    z.e = e;
    std::vector<Mask> carrier;
    for (const auto& f : lat.faces())
        if (f.free & bit(e)) {
            z.hyperplane.push_back(f);
            carrier.insert(carrier.end(), f.topes.begin(), f.topes.end());
        }
    z.carrier = Family(s.m(), std::move(carrier));
    std::vector<Mask> hm, hp, sm, sp;
    for (Mask v : z.carrier) (v & bit(e) ? hp : hm).push_back(v);
    for (Mask v : s) (v & bit(e) ? sp : sm).push_back(v);
    z.half_minus = Family(s.m(), std::move(hm));
    z.half_plus = Family(s.m(), std::move(hp));
    z.space_minus = Family(s.m(), std::move(sm));
    z.space_plus = Family(s.m(), std::move(sp));
    return z;
}

Zones zones(const Family& s, int e) {
    if (!classify(s).com) fail(ErrorCode::precondition, "zones needs a COM");
    Zones z = zones(FaceLattice(s), e);
    for (const Family* part : {&z.carrier, &z.half_minus, &z.half_plus, &z.space_minus, &z.space_plus})
        check_invariant(classify(*part).com, "halfspaces, carriers and half-carriers of a COM are COMs");
    return z;
}

std::optional<Face> face_of(const Family& s, const SignVector& x) {
    if (x.m != s.m()) fail(ErrorCode::dimension, "face_of: covector and family sizes differ");
    const Mask free = x.zero_set();
    Family part = restrict_to_cube(s, x.plus, free);
    if (part.empty()) return std::nullopt;
    for (Mask u : part)
        if (!part.contains(u ^ free)) return std::nullopt;
    Face f;
    f.covector = x;
    f.free = free;
    f.gated = gated_by_clamp(s, part, x.plus, free);
    f.topes = std::move(part);
    return f;
}

bool are_parallel(const Face& fx, const Face& fy) { return fx.covector.support() == fy.covector.support(); }

Face face_projection(const FaceLattice& lat, const Face& fx, const Face& fy, bool cuom) {
    const auto ix = lat.find(fx.covector), iy = lat.find(fy.covector);
    if (!ix || !iy) fail(ErrorCode::precondition, "face_projection: inputs are not faces of the lattice");
    const SignVector& x = fx.covector;
    const SignVector& y = fy.covector;
    const SignVector xy = compose(x, y), yx = compose(y, x);
    const auto ixy = lat.find(xy), iyx = lat.find(yx);
    check_invariant(ixy && iyx, "compositions of covectors are covectors");
    const Face& pxy = lat.faces()[*ixy];
    const Face& pyx = lat.faces()[*iyx];

    // (i) face distance = cube distance = |S(X,Y)|
    const Mask sep = separator(x, y);
    const int dist = hamming_distance(fx.topes, fy.topes);
    const Mask both = x.support() & y.support();
    check_invariant(dist == popcount(sep) && popcount((x.plus ^ y.plus) & both) == popcount(sep),
                    "d(F(X),F(Y)) = d(C(X),C(Y)) = |S(X,Y)|");

    // (iii) the metric projections are the faces of the compositions
    const Family pr_x = closest_to(fx.topes, fy.topes, dist);
    const Family pr_y = closest_to(fy.topes, fx.topes, dist);
    check_invariant(pr_x == pxy.topes && pr_y == pyx.topes, "pr_{F(Y)}(F(X)) = F(X∘Y)");

    // (ii) containment in the cube projections
    for (Mask a : pr_x)
        check_invariant(inside_cube(a, x) && popcount((a ^ y.plus) & y.support()) == dist,
                        "face projection lies in the cube projection");
    for (Mask b : pr_y)
        check_invariant(inside_cube(b, y) && popcount((b ^ x.plus) & x.support()) == dist,
                        "face projection lies in the cube projection");

    // (v) the two projections are parallel
    check_invariant(are_parallel(pxy, pyx), "mutual projections are parallel faces");
    check_invariant(closest_to(pxy.topes, pyx.topes, dist) == pxy.topes &&
                        closest_to(pyx.topes, pxy.topes, dist) == pyx.topes,
                    "parallel faces project fully onto each other");

    // (vii) a maximal face projects to a proper face of itself
    if (lat.is_maximal(*ix) && *ix != *iy)
        check_invariant(pxy.topes.size() < fx.topes.size() && is_subset(pxy.topes, fx.topes),
                        "projection of a facet is a proper face");

    // (viii), (ix) for two distinct facets of a CUOM
    if (cuom && lat.is_maximal(*ix) && lat.is_maximal(*iy) && *ix != *iy) {
        check_invariant(pxy.is_cube() && pyx.is_cube(), "projections between CUOM facets are cubes");
        check_invariant(pxy.topes == pxy.cube() && pyx.topes == pyx.cube(),
                        "projections between CUOM facets equal the cube projections");
    }
    return pxy;
}

namespace {

// W ≤ X: X agrees with W on the support of W.
bool below(const SignVector& w, const SignVector& x) {
    return (w.plus & ~x.plus) == 0 && (w.minus & ~x.minus) == 0;
}

// F(X) and F(Y) are both facets of a common face F(W): W < X, W < Y, and no
// covector lies strictly between W and either of them.
bool share_a_face(const FaceLattice& lat, const SignVector& x, const SignVector& y) {
    const SignVector meet(x.plus & y.plus, x.minus & y.minus, x.m);
    for (const auto& fw : lat.faces()) {
        const SignVector& w = fw.covector;
        if (!below(w, meet)) continue;
        bool facet = true;
        for (const auto& fv : lat.faces()) {
            const SignVector& v = fv.covector;
            if (v == w || !below(w, v)) continue;
            if ((below(v, x) && v != x) || (below(v, y) && v != y)) {
                facet = false;
                break;
            }
        }
        if (facet) return true;
    }
    return false;
}

}  // namespace

std::vector<Face> parallel_gallery(const FaceLattice& lat, const Face& fx, const Face& fy) {
    if (!are_parallel(fx, fy) || !lat.find(fx.covector) || !lat.find(fy.covector)) return {};
    const SignVector target = fy.covector;
    std::vector<SignVector> path{fx.covector};
    std::vector<SignVector> dead;

    // Depth-first over single flips that shrink the separator.
    auto step = [&](auto&& self, const SignVector& z) -> bool {
        if (z == target) return true;
        const Mask sep = separator(z, target);
        for (int e = 0; e < z.m; ++e) {
            if (!(sep & bit(e))) continue;
            const SignVector flipped(z.plus ^ bit(e), z.minus ^ bit(e), z.m);
            if (!lat.find(flipped) || !share_a_face(lat, z, flipped)) continue;
            if (std::find(dead.begin(), dead.end(), flipped) != dead.end()) continue;
            path.push_back(flipped);
            if (self(self, flipped)) return true;
            path.pop_back();
            dead.push_back(flipped);
        }
        return false;
    };
    if (!step(step, fx.covector)) return {};
    std::vector<Face> out;
    for (const auto& z : path) out.push_back(lat.at(z));
    check_invariant(out.size() == static_cast<std::size_t>(popcount(separator(fx.covector, fy.covector))) + 1,
                    "gallery is geodesic");
    return out;
}

}  // namespace omcube
