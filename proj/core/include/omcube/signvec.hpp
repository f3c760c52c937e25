#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "omcube/bits.hpp"
#include "omcube/family.hpp"

namespace omcube {

// A sign vector over elements 0..m-1, stored as two disjoint masks.
struct SignVector {
    Mask plus = 0;
    Mask minus = 0;
    int m = 0;

    SignVector() = default;
    SignVector(Mask plus_, Mask minus_, int m_);

    Mask support() const noexcept { return plus | minus; }
    Mask zero_set() const noexcept { return full_mask(m) & ~support(); }
    bool is_tope() const noexcept { return support() == full_mask(m); }
    int sign(int e) const noexcept { return (plus & bit(e)) ? 1 : (minus & bit(e)) ? -1 : 0; }

    SignVector operator-() const noexcept { return {minus, plus, m, raw_tag{}}; }

    // Element 1 leftmost, one character per element from "+-0".
    std::string to_string() const;
    static SignVector parse(std::string_view text);
    // Full-support sign vector of a vertex: + where the element is present.
    static SignVector tope(Mask vertex, int m) noexcept { return {vertex, full_mask(m) & ~vertex, m, raw_tag{}}; }

    friend bool operator==(const SignVector& a, const SignVector& b) noexcept {
        return a.plus == b.plus && a.minus == b.minus && a.m == b.m;
    }
    friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept {
        if (auto c = a.plus <=> b.plus; c != 0) return c;
        if (auto c = a.minus <=> b.minus; c != 0) return c;
        return a.m <=> b.m;
    }

private:
    struct raw_tag {};
    SignVector(Mask p, Mask n, int m_, raw_tag) noexcept : plus(p), minus(n), m(m_) {}
};

SignVector compose(const SignVector& x, const SignVector& y);
Mask separator(const SignVector& x, const SignVector& y);
// x <= y in the product order with 0 below both signs.
bool conforms(const SignVector& x, const SignVector& y);

class SignSystem {
public:
    SignSystem() = default;
    // Validates, sorts and deduplicates.
    SignSystem(int m, std::vector<SignVector> covectors);

    int m() const noexcept { return m_; }
    const std::vector<SignVector>& covectors() const noexcept { return covectors_; }
    std::size_t size() const noexcept { return covectors_.size(); }
    bool contains(const SignVector& x) const;
    bool has_zero() const { return contains(SignVector(0, 0, m_)); }

    friend bool operator==(const SignSystem&, const SignSystem&) = default;

private:
    int m_ = 0;
    std::vector<SignVector> covectors_;
};

// Deletion of `del` and contraction of `con`; remaining elements are renumbered in order.
SignSystem minor(const SignSystem& sys, Mask del, Mask con);

SignSystem upset_closure(const SignSystem& sys);

struct AxiomReport {
    bool composition = false;
    bool strong_elimination = false;
    bool symmetry = false;
    bool face_symmetry = false;
    bool ideal_composition = false;
    bool simple = false;
    bool has_zero = false;

    bool is_com() const noexcept { return strong_elimination && face_symmetry; }
    bool is_om() const noexcept { return is_com() && has_zero; }
    bool is_amp() const noexcept { return is_com() && ideal_composition; }
};

AxiomReport axiom_report(const SignSystem& sys);

bool check_composition(const SignSystem& sys);
bool check_strong_elimination(const SignSystem& sys);
bool check_symmetry(const SignSystem& sys);
bool check_face_symmetry(const SignSystem& sys);
bool check_ideal_composition(const SignSystem& sys);
// Returns -1 when simple, otherwise the first element that is redundant
// (either by its own sign pattern or as the larger element of a parallel pair).
int first_redundant_element(const SignSystem& sys);
bool is_simple(const SignSystem& sys);

bool is_om(const SignSystem& sys);

struct TopesAndCocircuits {
    Family topes;
    std::vector<SignVector> cocircuits;
};

TopesAndCocircuits topes_and_cocircuits(const SignSystem& sys);

// Longest chain 0 < X_1 < ... < tope in the covector poset.
int rank_of(const SignSystem& sys);

bool is_uom_by_cocircuits(const SignSystem& sys);

struct Simplification {
    SignSystem system;
    Mask deleted = 0;  // elements of the input that were removed
};

// Deletes redundant elements one at a time, lowest index first.
Simplification simplify(const SignSystem& sys);

}  // namespace omcube
