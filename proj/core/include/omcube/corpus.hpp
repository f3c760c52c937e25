#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omcube/family.hpp"
#include "omcube/signvec.hpp"

namespace omcube {

// Central hyperplanes with integer normals in Z^r, optionally restricted to
// the open region {z : a·z > b for every region row}.
struct Arrangement {
    struct Halfspace {
        std::vector<std::int64_t> normal;
        std::int64_t offset = 0;  // strict: normal · z > offset
        friend bool operator==(const Halfspace&, const Halfspace&) = default;
    };

    int r = 0;
    std::vector<std::vector<std::int64_t>> vectors;
    std::vector<Halfspace> region;

    int m() const noexcept { return static_cast<int>(vectors.size()); }
    void validate() const;
    friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

// All r×r minors nonzero (exact).
bool is_uniform(const Arrangement& arr);

// Covectors of the arrangement inside its region (exact, via Fourier-Motzkin).
SignSystem arrangement_covectors(const Arrangement& arr);
Family arrangement_topes(const Arrangement& arr);

struct Realization {
    Arrangement arrangement;
    SignSystem covectors;
    Family topes;
};

// Uniform OM of rank r on m elements from a random integer configuration.
Realization gen_uniform_om(int m, int r, std::uint64_t seed);

// Topes of the arrangement restricted to its region; the region must be nonempty.
Family gen_realizable_com(const Arrangement& arr);

// Affine arrangement in R^(r-1), homogenized: `pencil` hyperplanes through a
// common point plus m - pencil generic ones. Retries until the tope family is a
// CUOM that is not ample.
Realization gen_pencil_cuom(int m, int r, int pencil, std::uint64_t seed);

// Integer perturbation N·v + δ of the vectors until the configuration is uniform
// and every original tope survives.
Arrangement perturb_to_uniform(const Arrangement& arr, std::uint64_t seed);

Family product(const Family& a, const Family& b);
// C_{2k} isometrically embedded in Q_k, k ≥ 2.
Family even_cycle(int k);
// C_n for even n ≥ 4; odd n is rejected.
Family cycle(int n);
// P_k (k vertices) in Q_{k-1}, k ≥ 1.
Family path(int k);

Arrangement c8xk2_arrangement();
// "RD", "C6", "C8xP3", "C8xK2", "C6xK2", "Q<d>", "P<k>", "C<2k>".
Family named(const std::string& name);
std::vector<std::string> named_catalog();

// Minimum over signed coordinate permutations of the varying coordinates.
struct CanonicalKey {
    int dim = 0;                      // number of varying coordinates
    std::vector<std::uint64_t> bits;  // vertex bitset over Q_dim, little-endian words

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
    std::string to_string() const;
};

// Supports up to 7 varying coordinates.
CanonicalKey canonical_form(const Family& f);
// The canonical representative itself, in Q_dim.
Family canonical_family(const Family& f);

struct EnumeratedClass {
    CanonicalKey key;
    Family family;  // canonical representative, zero padded into Q_m
};

// Every partial cube in Q_m up to signed coordinate permutations, sorted by key.
// Parents of a level are expanded on `threads` workers; the output does not depend on it.
std::vector<EnumeratedClass> enumerate_partial_cubes(int m, unsigned threads = 1);
// Brute force over all subsets of Q_m, m ≤ 4. Oracle for the expansion enumerator.
std::vector<EnumeratedClass> enumerate_partial_cubes_brute(int m);

// Some signed permutation maps a into a subset of b.
bool embeds_up_to_symmetry(const Family& a, const Family& b);
// Plain graph isomorphism of the induced subgraphs.
bool graphs_isomorphic(const Family& a, const Family& b);

}  // namespace omcube
