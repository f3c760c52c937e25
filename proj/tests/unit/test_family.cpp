#include <gtest/gtest.h>

#include <random>

#include "omcube/error.hpp"
#include "omcube/family.hpp"
#include "omcube/small.hpp"
#include "oracles.hpp"

namespace omcube {
namespace {

Family fam(int m, std::vector<Mask> vs) { return {m, std::move(vs)}; }

TEST(FamilyTest, NormalizesVertices) {
    const auto f = fam(3, {5, 1, 5, 0});
    EXPECT_EQ(f.vertices(), (std::vector<Mask>{0, 1, 5}));
    EXPECT_EQ(f.varying_coordinates(), Mask{0b101});
    EXPECT_THROW(fam(2, {4}), Error);
}

TEST(FamilyTest, SetOperations) {
    const auto a = fam(3, {0, 1, 2}), b = fam(3, {2, 3});
    EXPECT_EQ(unite(a, b), fam(3, {0, 1, 2, 3}));
    EXPECT_EQ(intersect(a, b), fam(3, {2}));
    EXPECT_EQ(difference(a, b), fam(3, {0, 1}));
    EXPECT_TRUE(is_subset(intersect(a, b), a));
    EXPECT_EQ(translate(a, 4), fam(3, {4, 5, 6}));
    EXPECT_EQ(project(fam(3, {0b101, 0b001}), 0b101), fam(2, {0b11, 0b01}));
    EXPECT_EQ(restrict_to_cube(a, 0, 0b001), fam(3, {0, 1}));
    EXPECT_EQ(pad(a, 5).m(), 5);
}

TEST(FamilyTest, EnclosingCube) {
    const auto f = fam(4, {0b0011, 0b0110});
    EXPECT_EQ(f.enclosing_cube(), Family::subcube(4, 0b0010, 0b0101));
}

TEST(ShatteringTest, KnownFamilies) {
    EXPECT_EQ(vc_dim(Family::cube(4)), 4);
    EXPECT_EQ(vc_dim(fam(3, {0})), 0);
    EXPECT_EQ(vc_dim(Family{}), -1);
    // The hexagon in Q_3: shatters every pair, no triple.
    const auto c6 = fam(3, {0b000, 0b001, 0b011, 0b111, 0b110, 0b100});
    EXPECT_EQ(vc_dim(c6), 2);
    EXPECT_FALSE(is_ample(c6));
    EXPECT_TRUE(is_ample(difference(Family::cube(3), fam(3, {7}))));
}

TEST(ShatteringTest, AgreesWithOracleOnRandomFamilies) {
    gen::Rng rng(101);
    for (int i = 0; i < 400; ++i) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const auto f = gen::random_family(rng, m, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        EXPECT_EQ(vc_dim(f), oracle::vc_dim(f));
        const Mask x = static_cast<Mask>(rng() % (1u << m));
        EXPECT_EQ(shatters(f, x), oracle::shatters(f, x));
        EXPECT_EQ(strongly_shatters(f, x), oracle::strongly_shatters(f, x));
        EXPECT_EQ(is_ample(f), oracle::is_ample(f));
    }
}

TEST(ShatteringTest, ComplexesAreDownwardClosed) {
    gen::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen::random_family(rng, 5, 0.5);
        const auto c = shattering_complexes(f);
        for (Mask x : c.shattered.sets)
            for_each_bit(x, [&](int e) { EXPECT_TRUE(c.shattered.contains(x & ~bit(e))); });
        for (Mask x : c.strongly_shattered.sets) EXPECT_TRUE(c.shattered.contains(x));
    }
}

TEST(SandwichTest, BoundsHold) {
    gen::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto f = gen::random_family(rng, 5, 0.4);
        const auto r = sandwich_report(f);
        EXPECT_LE(r.strongly_shattered, r.size);
        EXPECT_LE(r.size, r.shattered);
        EXPECT_LE(r.size, r.sauer_bound);
        EXPECT_EQ(r.sauer_bound, phi(r.vcd, 5));
    }
}

TEST(SandwichTest, PhiValues) {
    EXPECT_EQ(phi(2, 4), 11u);
    EXPECT_EQ(phi(2, 5), 16u);
    EXPECT_EQ(phi(3, 5), 26u);
    EXPECT_EQ(phi(0, 7), 1u);
    EXPECT_EQ(phi(7, 7), 128u);
    for (int m = 0; m <= 10; ++m)
        for (int d = 0; d <= m; ++d) {
            std::uint64_t sum = 0;
            for (int i = 0; i <= d; ++i) sum += oracle::binomial(m, i);
            EXPECT_EQ(phi(d, m), sum);
        }
}

TEST(AmpleTest, MethodsAgree) {
    gen::Rng rng(19);
    for (int i = 0; i < 300; ++i) {
        const int m = 2 + static_cast<int>(rng() % 4);
        Family f = (i % 2) ? gen::random_downset(rng, m, 1 + static_cast<int>(rng() % 4))
                           : gen::random_family(rng, m, 0.5);
        const bool a = is_ample(f, AmpleMethod::complexes);
        EXPECT_EQ(a, is_ample(f, AmpleMethod::counting));
        EXPECT_EQ(a, is_ample(f, AmpleMethod::lawrence));
        EXPECT_EQ(a, is_ample(f, AmpleMethod::all));
        EXPECT_EQ(a, oracle::is_ample(f));
    }
}

TEST(AmpleTest, DownsetsAreAmple) {
    gen::Rng rng(29);
    for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_ample(gen::random_downset(rng, 6, 3)));
}

TEST(AmpleTest, GalleryNeedsPartialCube) {
    EXPECT_THROW(is_ample(fam(2, {0, 3}), AmpleMethod::gallery), Error);
    EXPECT_TRUE(is_ample(Family::cube(3), AmpleMethod::gallery));
}

TEST(FiberTest, FibersPartitionTheFamily) {
    const auto f = fam(3, {0, 1, 2, 3, 7});
    const auto fs = fibers(f, 0b100);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs.at(0).size(), 4u);
    EXPECT_EQ(fs.at(0b100).size(), 1u);
    // Every subset of x is a key, even with an empty fiber.
    EXPECT_EQ(fibers(fam(3, {0}), 0b011).size(), 4u);
}

TEST(SmallKernelTest, MatchesGenericCode) {
    gen::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const auto f = gen::random_family(rng, m, 0.5);
        const auto& t = small::tables(m);
        const auto s = small::to_set(f);
        EXPECT_EQ(small::from_set(m, s), f);
        EXPECT_EQ(small::vc_dim(t, s), oracle::vc_dim(f));
        for (int d = 0; d <= m; ++d) EXPECT_EQ(small::vcd_at_most(t, s, d), oracle::vc_dim(f) <= d);
        EXPECT_EQ(small::is_ample(t, s), oracle::is_ample(f));
    }
}

}  // namespace
}  // namespace omcube
