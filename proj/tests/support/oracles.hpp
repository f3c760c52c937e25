#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Family/SignVector value types.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "omcube/family.hpp"
#include "omcube/signvec.hpp"

namespace omcube::oracle {

bool shatters(const Family& f, Mask x);
bool strongly_shatters(const Family& f, Mask x);
int vc_dim(const Family& f);
bool is_ample(const Family& f);

// Connected and all-pairs BFS distance equals Hamming distance.
bool is_partial_cube(const Family& f);

// Smallest vcd of an ample superset inside Q_m, m <= 4.
int min_ample_completion(const Family& f);

// Lexicographically smallest sorted vertex list over every signed permutation
// of the varying coordinates, after projecting onto them.
std::vector<Mask> canonical(const Family& f);

// Canonical forms of all partial cubes in Q_m, m <= 4, by brute force.
std::vector<std::vector<Mask>> partial_cube_classes(int m);

// OM covectors from topes: X is a covector iff X∘T is a tope for every tope T.
std::vector<SignVector> om_covectors(const Family& topes);

std::uint64_t binomial(int n, int k);

}  // namespace omcube::oracle

namespace omcube::gen {

using Rng = std::mt19937_64;

Family random_family(Rng& rng, int m, double density);
// Down-closed family generated by a few random sets.
Family random_downset(Rng& rng, int m, int generators);
Family random_cube_union(Rng& rng, int m, int cubes);
// Random connected growth from one vertex, kept only if isometric.
Family random_partial_cube(Rng& rng, int m, int target_size);

}  // namespace omcube::gen
