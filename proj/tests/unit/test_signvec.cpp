#include <gtest/gtest.h>

#include <random>

#include "omcube/comstruct.hpp"
#include "omcube/corpus.hpp"
#include "omcube/error.hpp"
#include "omcube/signvec.hpp"
#include "oracles.hpp"

namespace omcube {
namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

SignSystem system_of(int m, std::initializer_list<const char*> rows) {
    std::vector<SignVector> xs;
    for (const char* r : rows) xs.push_back(sv(r));
    return {m, xs};
}

SignVector random_sign_vector(std::mt19937_64& rng, int m) {
    Mask p = 0, n = 0;
    for (int e = 0; e < m; ++e) {
        switch (rng() % 3) {
            case 0: p |= bit(e); break;
            case 1: n |= bit(e); break;
            default: break;
        }
    }
    return {p, n, m};
}

SignSystem om_system(const Family& topes) {
    const auto xs = oracle::om_covectors(topes);
    return {topes.m(), xs};
}

TEST(SignVectorTest, ParseAndPrintRoundTrip) {
    EXPECT_EQ(sv("+0-").to_string(), "+0-");
    EXPECT_EQ(sv("+0-").plus, bit(0));
    EXPECT_EQ(sv("+0-").minus, bit(2));
    EXPECT_THROW(sv("+x-"), Error);
}

TEST(SignVectorTest, ComposeExamples) {
    EXPECT_EQ(compose(sv("+0-"), sv("-+0")).to_string(), "++-");
    EXPECT_EQ(compose(sv("000"), sv("+-+")), sv("+-+"));
    EXPECT_EQ(separator(sv("+-0"), sv("-+0")), bit(0) | bit(1));
    EXPECT_TRUE(conforms(sv("+00"), sv("+-0")));
    EXPECT_FALSE(conforms(sv("-00"), sv("+-0")));
}

TEST(SignVectorTest, ComposeIsAssociativeAndIdempotent) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const auto x = random_sign_vector(rng, m), y = random_sign_vector(rng, m), z = random_sign_vector(rng, m);
        EXPECT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
        EXPECT_EQ(compose(x, x), x);
        EXPECT_EQ(compose(x, y).support(), x.support() | y.support());
        EXPECT_EQ(separator(x, y), separator(y, x));
        EXPECT_EQ(separator(compose(x, y), compose(y, x)), separator(x, y));
    }
}

TEST(SignSystemTest, DeduplicatesAndSorts) {
    const auto s = system_of(2, {"+-", "00", "+-"});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.has_zero());
    EXPECT_THROW(system_of(2, {"+-", "+"}), Error);
}

TEST(AxiomsTest, HexagonIsAnOrientedMatroid) {
    const auto c6 = om_system(named("C6"));
    EXPECT_EQ(c6.size(), 13u);
    const auto rep = axiom_report(c6);
    EXPECT_TRUE(rep.composition);
    EXPECT_TRUE(rep.strong_elimination);
    EXPECT_TRUE(rep.symmetry);
    EXPECT_TRUE(rep.face_symmetry);
    EXPECT_TRUE(rep.is_om());
    EXPECT_FALSE(rep.is_amp());
    EXPECT_EQ(rank_of(c6), 2);
    EXPECT_TRUE(is_uom_by_cocircuits(c6));
}

TEST(AxiomsTest, OppositePairWithoutEliminationIsNotACom) {
    const auto s = system_of(2, {"++", "--"});
    EXPECT_FALSE(check_strong_elimination(s));
    EXPECT_TRUE(check_symmetry(s));
    EXPECT_FALSE(axiom_report(s).is_com());
}

TEST(AxiomsTest, CubeIsAmpleAndUniform) {
    const auto q3 = om_system(Family::cube(3));
    const auto rep = axiom_report(q3);
    EXPECT_TRUE(rep.is_om());
    EXPECT_TRUE(rep.is_amp());
    EXPECT_EQ(upset_closure(q3), q3);
    EXPECT_EQ(rank_of(q3), 3);
    EXPECT_TRUE(is_uom_by_cocircuits(q3));
}

TEST(AxiomsTest, IdealCompositionMatchesUpsetClosure) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const int m = 2 + static_cast<int>(rng() % 3);
        std::vector<SignVector> xs;
        const int n = 1 + static_cast<int>(rng() % 12);
        for (int k = 0; k < n; ++k) xs.push_back(random_sign_vector(rng, m));
        const SignSystem s(m, xs);
        EXPECT_EQ(check_ideal_composition(s), upset_closure(s) == s);
    }
}

// (FS) together with (SE) implies (C) on every COM we can build.
TEST(AxiomsTest, ComsSatisfyComposition) {
    std::mt19937_64 rng(17);
    int coms = 0;
    for (int i = 0; i < 200; ++i) {
        const auto f = gen::random_partial_cube(rng, 4, 3 + static_cast<int>(rng() % 10));
        const auto sys = covector_system(f);
        const auto rep = axiom_report(sys);
        if (rep.is_com()) {
            ++coms;
            EXPECT_TRUE(rep.composition);
        }
    }
    EXPECT_GT(coms, 50);
}

TEST(AxiomsTest, RankEqualsVcdForUniformOms) {
    for (int m = 3; m <= 6; ++m)
        for (int r = 2; r <= std::min(m, 4); ++r) {
            const auto real = gen_uniform_om(m, r, static_cast<std::uint64_t>(10 * m + r));
            EXPECT_EQ(rank_of(real.covectors), r);
            EXPECT_EQ(rank_of(real.covectors), vc_dim(real.topes));
            EXPECT_TRUE(is_uom_by_cocircuits(real.covectors));
        }
}

TEST(AxiomsTest, NonUniformOmFailsCocircuitTest) {
    // Four of the five normals lie in one plane.
    const auto sys = arrangement_covectors(c8xk2_arrangement());
    EXPECT_TRUE(is_om(sys));
    EXPECT_FALSE(is_uom_by_cocircuits(sys));
}

TEST(MinorTest, ContractionAndDeletionCompose) {
    const auto real = gen_uniform_om(6, 3, 3);
    const auto& sys = real.covectors;
    const Mask a = bit(1), b = bit(4);
    const auto once = minor(sys, a, b);
    // Elements 0,2,3,5 remain as 0..3. Delete new 2 (old 3), contract new 0 (old 0).
    const auto twice = minor(once, bit(2), bit(0));
    EXPECT_EQ(twice, minor(sys, a | bit(3), b | bit(0)));
}

TEST(MinorTest, MinorsOfComsAreComs) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const auto real = gen_uniform_om(5, 3, rng());
        const Mask del = static_cast<Mask>(rng() % 32);
        const Mask con = static_cast<Mask>(rng() % 32) & ~del;
        const auto mn = minor(real.covectors, del, con);
        if (mn.size() == 0) continue;
        EXPECT_TRUE(axiom_report(mn).is_com());
    }
    const auto amp = covector_system(named("Q3"));
    EXPECT_TRUE(axiom_report(minor(amp, bit(0), bit(1))).is_amp());
}

TEST(SimplifyTest, RemovesConstantAndParallelElements) {
    // Element 3 copies element 1, element 2 is constant.
    const auto s = system_of(3, {"+++", "-+-", "0+0"});
    const auto simp = simplify(s);
    EXPECT_EQ(simp.deleted, bit(1) | bit(2));
    EXPECT_EQ(simp.system.m(), 1);
    EXPECT_TRUE(is_simple(simp.system));
    EXPECT_FALSE(is_simple(s));
    EXPECT_EQ(first_redundant_element(s), 1);
}

TEST(TopesTest, CocircuitsOfTheHexagon) {
    const auto tc = topes_and_cocircuits(om_system(named("C6")));
    EXPECT_EQ(tc.topes, named("C6"));
    EXPECT_EQ(tc.cocircuits.size(), 6u);
}

}  // namespace
}  // namespace omcube
