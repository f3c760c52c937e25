#include <gtest/gtest.h>

#include <variant>

#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/pcube.hpp"
#include "oracles.hpp"

namespace omcube {
namespace {

Family fam(int m, std::vector<Mask> vs) { return {m, std::move(vs)}; }

// The hexagon in Q_3 in cyclic order.
const std::vector<Mask> hexagon = {0b000, 0b001, 0b011, 0b111, 0b110, 0b100};

TEST(PartialCubeTest, AllSubsetsOfQ4MatchOracle) {
    for (std::uint32_t s = 1; s < (1u << 16); ++s) {
        std::vector<Mask> vs;
        for (Mask v = 0; v < 16; ++v)
            if (s & (1u << v)) vs.push_back(v);
        const Family f(4, vs);
        const bool pc = is_partial_cube(f);
        ASSERT_EQ(pc, oracle::is_partial_cube(f)) << s;
        if (pc) ASSERT_TRUE(djokovic_check(f)) << s;
    }
}

TEST(PartialCubeTest, DjokovicIsEmbeddingIndependent) {
    // An induced path 000-100-110-111-011 is a tree, so it is a partial cube
    // as a graph, but its Q_3 embedding is not isometric.
    const auto path = fam(3, {0b000, 0b100, 0b110, 0b111, 0b011});
    EXPECT_FALSE(is_partial_cube(path));
    EXPECT_TRUE(djokovic_check(path));
    EXPECT_TRUE(djokovic_check(fam(3, hexagon)));
}

TEST(PartialCubeTest, RandomLargerFamilies) {
    gen::Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        const int m = 5 + static_cast<int>(rng() % 2);
        const auto f = (i % 2) ? gen::random_partial_cube(rng, m, 4 + static_cast<int>(rng() % 20))
                               : gen::random_family(rng, m, 0.3);
        EXPECT_EQ(is_partial_cube(f), oracle::is_partial_cube(f));
    }
}

TEST(PCubeTest, RejectsNonIsometricFamilies) {
    EXPECT_THROW(PCube(fam(2, {0, 3})), Error);
    const PCube c6(fam(3, hexagon));
    EXPECT_EQ(c6.distance(0b000, 0b111), 3);
    EXPECT_EQ(c6.theta_classes(), Mask{7});
}

TEST(HalfspaceTest, HexagonHalvesArePaths) {
    const PCube c6(fam(3, hexagon));
    const auto splits = theta_and_halfspaces(c6);
    ASSERT_EQ(splits.size(), 3u);
    for (const auto& s : splits) {
        EXPECT_EQ(s.minus.size(), 3u);
        EXPECT_EQ(s.plus.size(), 3u);
        EXPECT_TRUE(is_convex(c6, s.minus));
    }
}

TEST(HalfspaceTest, RhombododecahedronHalvesHaveSevenVertices) {
    const PCube rd(named("RD"));
    for (const auto& s : theta_and_halfspaces(rd)) {
        EXPECT_EQ(s.minus.size(), 7u);
        EXPECT_EQ(s.plus.size(), 7u);
    }
}

TEST(ContractionTest, CubeContractsToSmallerCube) {
    const PCube q3(Family::cube(3));
    EXPECT_EQ(contract_coordinate(q3, 1).family(), Family::cube(2));
    EXPECT_EQ(restrict_halfspace(q3, 0, true).size(), 4u);
    EXPECT_THROW(contract_coordinate(PCube(fam(3, {0, 1})), 2), Error);
}

TEST(ContractionTest, CommutesWithRestriction) {
    gen::Rng rng(43);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const PCube g(gen::random_partial_cube(rng, 5, 6 + static_cast<int>(rng() % 14)));
        const auto classes = bits_of(g.theta_classes());
        if (classes.size() < 2) continue;
        const int e = classes[rng() % classes.size()];
        int f = e;
        while (f == e) f = classes[rng() % classes.size()];
        const bool side = rng() % 2;
        const Family a = clear_coordinate(restrict_halfspace(g, f, side).family(), e);
        const Family b = restrict_halfspace(PCube(clear_coordinate(g.family(), e)), f, side).family();
        EXPECT_EQ(a, b);
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(IntervalTest, AntipodesSpanTheHexagon) {
    const PCube c6(fam(3, hexagon));
    EXPECT_EQ(interval(c6, 0b000, 0b111), c6.family());
    EXPECT_EQ(interval(c6, 0b000, 0b011), fam(3, {0b000, 0b001, 0b011}));
}

TEST(ConvexityTest, Examples) {
    const PCube c6(fam(3, hexagon));
    EXPECT_TRUE(is_convex(c6, fam(3, {0b000, 0b001, 0b011})));
    EXPECT_FALSE(is_convex(c6, fam(3, {0b000, 0b011})));
}

TEST(GateTest, EdgesOfTheHexagonAreGatedButLongerPathsAreNot) {
    const PCube c6(fam(3, hexagon));
    const auto edge = fam(3, {0b000, 0b001});
    EXPECT_TRUE(is_gated(c6, edge));
    EXPECT_EQ(gate(c6, 0b111, edge), std::optional<Mask>{0b001});
    const auto two_path = fam(3, {0b000, 0b001, 0b011});
    EXPECT_TRUE(is_convex(c6, two_path));
    EXPECT_FALSE(is_gated(c6, two_path));
    EXPECT_FALSE(gate(c6, 0b110, two_path).has_value());
}

TEST(ProjectionTest, OppositeEdgesOfTheHexagon) {
    const PCube c6(fam(3, hexagon));
    const auto a = fam(3, {0b000, 0b001});
    const auto b = fam(3, {0b111, 0b110});
    const auto p = metric_projection(c6, a, b);
    EXPECT_EQ(p.of_a, a);
    EXPECT_EQ(p.of_b, b);
    EXPECT_EQ(p.distance, 2);
}

TEST(AntipodeTest, HexagonIsAntipodalPathIsNot) {
    const PCube c6(fam(3, hexagon));
    const auto r = antipodes(c6);
    ASSERT_TRUE(std::holds_alternative<AntipodeMap>(r));
    for (const auto& [v, w] : std::get<AntipodeMap>(r).pairs) EXPECT_EQ(w, v ^ 7u);
    EXPECT_FALSE(is_antipodal(fam(3, {0b000, 0b001, 0b011})));
    EXPECT_TRUE(is_antipodal(named("RD")));
}

TEST(ExpansionTest, FullExpansionOfACubeIsACube) {
    for (int d = 0; d <= 4; ++d) {
        const PCube q(Family::cube(d));
        EXPECT_EQ(expand(q, q.family(), q.family()).family(), Family::cube(d + 1));
    }
}

TEST(ExpansionTest, PeripheralExamples) {
    const PCube q2(Family::cube(2));
    const auto p3 = fam(2, {0b00, 0b01, 0b11});
    const auto g = peripheral_expansion(q2, p3);
    EXPECT_EQ(g.size(), 7u);
    EXPECT_TRUE(is_ample(g.family()));
    // The copy of the shared part carries the new coordinate.
    EXPECT_TRUE(g.contains(0b111));
    EXPECT_FALSE(g.contains(0b110));

    const PCube q3(Family::cube(3));
    const auto q3_minus = difference(Family::cube(3), fam(3, {7}));
    EXPECT_EQ(peripheral_expansion(q3, q3_minus).size(), 15u);
}

TEST(ExpansionTest, InvalidCoversAreRejected) {
    const PCube c6(fam(3, hexagon));
    // Sides without a common vertex.
    EXPECT_THROW(expand(c6, fam(3, {0b000, 0b001, 0b011}), fam(3, {0b111, 0b110, 0b100})), Error);
    // A side that is not isometric.
    EXPECT_THROW(expand(c6, c6.family(), fam(3, {0b000, 0b011})), Error);
    try {
        expand(c6, c6.family(), fam(3, {0b000, 0b011}));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::precondition);
        EXPECT_NE(std::string(e.what()).find("isometric"), std::string::npos);
    }
}

TEST(ExpansionTest, ExpandAtUsesAnUnusedCoordinate) {
    const auto p3 = fam(3, {0b000, 0b001, 0b011});
    const auto g = expand_at(p3, 2, p3, fam(3, {0b011}));
    EXPECT_EQ(g, fam(3, {0b000, 0b001, 0b011, 0b111}));
    EXPECT_THROW(expand_at(p3, 0, p3, p3), Error);
}

// vcd(G') <= d iff vcd(G0) <= d - 1, for every isometric cover of every partial cube in Q_3.
TEST(ExpansionTest, VcdBiconditionalOnAllSmallCovers) {
    std::size_t covers = 0;
    for (const auto& cls : enumerate_partial_cubes(3)) {
        const PCube g(cls.family);
        const auto& vs = g.family().vertices();
        const std::size_t n = vs.size();
        std::size_t code_limit = 1;
        for (std::size_t i = 0; i < n; ++i) code_limit *= 3;
        for (std::size_t code = 0; code < code_limit; ++code) {
            std::vector<Mask> s1, s2;
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) {
                if (c % 3 != 1) s1.push_back(vs[i]);
                if (c % 3 != 0) s2.push_back(vs[i]);
            }
            const Family g1(3, s1), g2(3, s2), g0 = intersect(g1, g2);
            if (g0.empty() || !is_partial_cube(g1) || !is_partial_cube(g2)) continue;
            Family expanded;
            try {
                expanded = expand(g, g1, g2).family();
            } catch (const Error&) {
                continue;  // some edge runs between the two private parts
            }
            ++covers;
            for (int d = vc_dim(g.family()); d <= 4; ++d)
                EXPECT_EQ(vc_dim(expanded) <= d, vc_dim(g0) <= d - 1);
        }
    }
    EXPECT_GT(covers, 900u);
}

TEST(PathTest, ShortestPathsUseDistinctClasses) {
    gen::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const PCube g(gen::random_partial_cube(rng, 5, 12));
        const auto& vs = g.family().vertices();
        const Mask u = vs[rng() % vs.size()], target = vs[rng() % vs.size()];
        // Walk greedily along a shortest path and record the coordinates used.
        Mask used = 0, at = u;
        int steps = 0;
        while (at != target) {
            bool moved = false;
            for (int e = 0; e < g.m() && !moved; ++e) {
                const Mask next = at ^ bit(e);
                if (g.contains(next) && g.distance(next, target) + 1 == g.distance(at, target)) {
                    EXPECT_FALSE(used & bit(e));
                    used |= bit(e);
                    at = next;
                    moved = true;
                }
            }
            ASSERT_TRUE(moved);
            ++steps;
        }
        EXPECT_EQ(steps, popcount(u ^ target));
    }
}

TEST(GalleryTest, ParallelEdges) {
    const auto q3_minus = difference(Family::cube(3), fam(3, {7}));
    const PCube g(q3_minus);
    EXPECT_TRUE(geodesic_gallery_exists(g, fam(3, {0b010, 0b011}), fam(3, {0b100, 0b101})));
    const PCube c6(fam(3, hexagon));
    EXPECT_FALSE(geodesic_gallery_exists(c6, fam(3, {0b000, 0b001}), fam(3, {0b110, 0b111})));
}

}  // namespace
}  // namespace omcube
