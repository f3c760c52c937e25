#include <gtest/gtest.h>

#include "omcube/comstruct.hpp"
#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/pcube.hpp"
#include "oracles.hpp"

namespace omcube {
namespace {

Family fam(int m, std::vector<Mask> vs) { return {m, std::move(vs)}; }

std::vector<Family> com_corpus() {
    std::vector<Family> out;
    for (const char* n : {"RD", "C6", "C8xP3", "C8xK2", "C6xK2", "Q3", "P4"}) out.push_back(named(n));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(gen_pencil_cuom(5 + static_cast<int>(seed % 2), 3, 3, seed).topes);
    gen::Rng rng(53);
    while (out.size() < 25) {
        const auto f = gen::random_partial_cube(rng, 5, 6 + static_cast<int>(rng() % 16));
        if (classify(f).com) out.push_back(f);
    }
    return out;
}

TEST(FaceTest, SmallFaceCounts) {
    EXPECT_EQ(enumerate_faces(Family::cube(2)).size(), 9u);
    EXPECT_EQ(enumerate_faces(named("C6")).size(), 13u);
    EXPECT_EQ(enumerate_faces(fam(2, {0b00, 0b01, 0b11})).size(), 5u);
    EXPECT_THROW(enumerate_faces(fam(2, {0b00, 0b11})), Error);
}

TEST(FaceTest, FaceOf) {
    const auto c6 = named("C6");
    const auto whole = face_of(c6, SignVector(0, 0, 3));
    ASSERT_TRUE(whole.has_value());
    EXPECT_EQ(whole->topes, c6);
    EXPECT_FALSE(face_of(c6, SignVector::parse("+00")).has_value());
}

TEST(FaceTest, MaximalFacesOfThePrismProduct) {
    const auto fs = facets(named("C8xP3"));
    ASSERT_EQ(fs.size(), 2u);
    for (const auto& f : fs) {
        EXPECT_EQ(f.topes.size(), 16u);
        EXPECT_TRUE(classify(f.topes).om);
    }
}

// Covectors recovered from topes against exact arrangement covectors.
TEST(FaceTest, CovectorsMatchArrangementOracle) {
    for (int m = 3; m <= 6; ++m)
        for (int r = 2; r <= 3; ++r) {
            const auto real = gen_uniform_om(m, r, static_cast<std::uint64_t>(m * 7 + r));
            EXPECT_EQ(covector_system(real.topes), real.covectors);
            const auto oracle_xs = oracle::om_covectors(real.topes);
            EXPECT_EQ(real.covectors, SignSystem(m, oracle_xs));
        }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto real = gen_pencil_cuom(5, 3, 3, seed);
        EXPECT_EQ(covector_system(real.topes), real.covectors);
    }
    const auto arr = c8xk2_arrangement();
    EXPECT_EQ(covector_system(arrangement_topes(arr)), arrangement_covectors(arr));
}

TEST(FaceTest, ClampGatednessMatchesMetricGatedness) {
    gen::Rng rng(59);
    for (int i = 0; i < 150; ++i) {
        const auto f = gen::random_partial_cube(rng, 5, 4 + static_cast<int>(rng() % 18));
        const PCube g(f);
        for (const auto& face : enumerate_faces(f)) EXPECT_EQ(face.gated, is_gated(g, face.topes));
    }
}

TEST(FaceTest, GateIsTheComposition) {
    for (const auto& s : com_corpus()) {
        const PCube g(s);
        for (const auto& face : enumerate_faces(s)) {
            ASSERT_TRUE(face.gated);
            for (Mask y : s) {
                const auto expected = compose(face.covector, SignVector::tope(y, s.m()));
                EXPECT_EQ(gate(g, y, face.topes), std::optional<Mask>{expected.plus});
            }
        }
    }
}

TEST(ClassifyTest, NamedFamilies) {
    const auto rd = classify(named("RD"));
    EXPECT_TRUE(rd.om && rd.uom && rd.cuom && rd.com);
    EXPECT_FALSE(rd.amp);
    EXPECT_EQ(rd.rank, 3);
    EXPECT_EQ(rd.vcd, 3);

    const auto c6 = classify(named("C6"));
    EXPECT_TRUE(c6.uom);
    EXPECT_EQ(c6.rank, 2);

    const auto prism = classify(named("C8xP3"));
    EXPECT_TRUE(prism.com);
    EXPECT_FALSE(prism.cuom);
    EXPECT_FALSE(prism.om);
    EXPECT_EQ(prism.vcd, 3);

    const auto k2 = classify(named("C8xK2"));
    EXPECT_TRUE(k2.om);
    EXPECT_FALSE(k2.uom);
    EXPECT_EQ(k2.rank, 3);

    const auto q3 = classify(Family::cube(3));
    EXPECT_TRUE(q3.amp && q3.om && q3.uom);

    const auto p = classify(fam(2, {0b00, 0b01, 0b11}));
    EXPECT_TRUE(p.amp && p.com);
    EXPECT_FALSE(p.om);
    EXPECT_EQ(p.rank, -1);

    const auto bad = classify(fam(2, {0b00, 0b11}));
    EXPECT_FALSE(bad.partial_cube);
    EXPECT_FALSE(bad.com);
    EXPECT_FALSE(bad.reasons.empty());
}

TEST(ClassifyTest, ConstantCoordinatesOnlyClearSimple) {
    const auto padded = pad(named("C6"), 5);
    const auto r = classify(padded);
    EXPECT_FALSE(r.simple);
    EXPECT_TRUE(r.uom);
}

TEST(ClassifyTest, FlagsAreConsistent) {
    gen::Rng rng(61);
    std::vector<Family> pool;
    for (const auto& c : enumerate_partial_cubes(4)) pool.push_back(c.family);
    for (int i = 0; i < 150; ++i) pool.push_back(gen::random_partial_cube(rng, 5, 3 + static_cast<int>(rng() % 20)));
    int coms = 0, non_coms = 0;
    for (const auto& f : pool) {
        const auto r = classify(f);
        ASSERT_TRUE(r.partial_cube);
        EXPECT_EQ(r.com, axiom_report(covector_system(f)).is_com());
        EXPECT_EQ(r.amp, is_ample(f));
        if (r.amp) EXPECT_TRUE(r.com);
        if (r.uom) EXPECT_TRUE(r.om);
        if (r.om) EXPECT_TRUE(r.com && is_antipodal(f));
        if (r.cuom) EXPECT_TRUE(r.com);
        if (r.om) EXPECT_EQ(r.rank, r.vcd);
        (r.com ? coms : non_coms)++;
    }
    EXPECT_GT(coms, 0);
    EXPECT_GT(non_coms, 0);
}

TEST(ZoneTest, SquareAndHexagon) {
    const auto z = zones(Family::cube(2), 0);
    EXPECT_EQ(z.carrier, Family::cube(2));
    EXPECT_EQ(z.half_minus.size(), 2u);
    EXPECT_EQ(z.half_plus.size(), 2u);

    // C_6 is an OM, so the carrier includes the whole-graph face F(0).
    const auto h = zones(named("C6"), 1);
    EXPECT_EQ(h.carrier.size(), 6u);
    EXPECT_EQ(h.half_minus.size(), 3u);
    EXPECT_EQ(h.half_plus.size(), 3u);
    EXPECT_EQ(h.space_minus.size(), 3u);
}

TEST(ZoneTest, HalfCarriersOfUomsAreAmple) {
    const auto rd = named("RD");
    for (int e = 0; e < rd.m(); ++e) {
        const auto z = zones(rd, e);
        EXPECT_TRUE(is_ample(z.half_minus));
        EXPECT_TRUE(is_ample(z.half_plus));
    }
}

TEST(ProjectionTest, CalculusHoldsOnAllFacePairs) {
    std::size_t pairs = 0;
    for (const auto& s : com_corpus()) {
        const FaceLattice lat(s);
        const bool cuom = classify(s).cuom;
        for (const auto& fx : lat.faces())
            for (const auto& fy : lat.faces()) {
                ASSERT_NO_THROW(face_projection(lat, fx, fy, cuom));
                ++pairs;
            }
    }
    EXPECT_GT(pairs, 10000u);
}

TEST(ProjectionTest, GalleriesAreGeodesicWhenFound) {
    std::size_t found = 0;
    for (const auto& s : com_corpus()) {
        const FaceLattice lat(s);
        for (const auto& fx : lat.faces())
            for (const auto& fy : lat.faces()) {
                if (!are_parallel(fx, fy)) continue;
                EXPECT_EQ(compose(fx.covector, fy.covector), fx.covector);
                const auto g = parallel_gallery(lat, fx, fy);
                if (g.empty()) continue;
                ++found;
                EXPECT_EQ(g.front().covector, fx.covector);
                EXPECT_EQ(g.back().covector, fy.covector);
                EXPECT_EQ(g.size(), static_cast<std::size_t>(popcount(separator(fx.covector, fy.covector))) + 1);
                for (std::size_t i = 1; i < g.size(); ++i) {
                    EXPECT_TRUE(are_parallel(g[i - 1], g[i]));
                    EXPECT_EQ(popcount(separator(g[i - 1].covector, g[i].covector)), 1);
                }
            }
    }
    EXPECT_GT(found, 1000u);
}

TEST(ProjectionTest, AmpleFamiliesHaveAllGalleries) {
    gen::Rng rng(59);
    for (int i = 0; i < 40; ++i) {
        const auto f = gen::random_downset(rng, 5, 1 + static_cast<int>(rng() % 4));
        const FaceLattice lat(f);
        for (const auto& fx : lat.faces())
            for (const auto& fy : lat.faces())
                if (are_parallel(fx, fy)) EXPECT_FALSE(parallel_gallery(lat, fx, fy).empty());
    }
}

TEST(ProjectionTest, AntipodalHexagonEdgesHaveNoGeodesicGallery) {
    // The only faces with support {1,2} are the two edges themselves, and they
    // are at distance 2, so no gallery of length 2 exists.
    const FaceLattice lat(named("C6"));
    const auto& a = lat.at(SignVector::parse("--0"));
    const auto& b = lat.at(SignVector::parse("++0"));
    ASSERT_TRUE(are_parallel(a, b));
    int dist = 8;
    for (Mask u : a.topes)
        for (Mask v : b.topes) dist = std::min(dist, popcount(u ^ v));
    EXPECT_EQ(dist, 2);
    EXPECT_TRUE(parallel_gallery(lat, a, b).empty());
}

}  // namespace
}  // namespace omcube
