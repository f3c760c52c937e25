#include "omcube/fourier_motzkin.hpp"

#include <algorithm>
#include <map>

#include "omcube/error.hpp"

namespace omcube::fm {

namespace {

bool holds(const Rational& value, Relation rel) {
    switch (rel) {
        case Relation::equal: return value == 0;
        case Relation::at_least: return value >= 0;
        case Relation::greater: return value > 0;
    }
    return false;
}

// Scales so the first nonzero coefficient has absolute value 1. Inequalities
// keep their direction because the factor is positive.
void normalize(Constraint& c) {
    for (const auto& a : c.coeffs)
        if (a != 0) {
            const Rational s = abs(a);
            for (auto& b : c.coeffs) b /= s;
            c.constant /= s;
            return;
        }
}

// Drops duplicate inequalities (keeping the stricter one) and trivially true rows.
// Returns false when a variable-free row is violated.
bool tidy(std::vector<Constraint>& rows) {
    std::map<std::vector<Rational>, std::map<Rational, Relation>> seen;
    std::vector<Constraint> out;
    for (auto& c : rows) {
        normalize(c);
        const bool no_vars = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& a) { return a == 0; });
        if (no_vars) {
            if (!holds(c.constant, c.rel)) return false;
            continue;
        }
        auto& slot = seen[c.coeffs];
        auto it = slot.find(c.constant);
        if (it == slot.end()) {
            slot.emplace(c.constant, c.rel);
            out.push_back(std::move(c));
        } else if (c.rel == Relation::greater && it->second != Relation::greater) {
            it->second = Relation::greater;
            for (auto& o : out)
                if (o.coeffs == c.coeffs && o.constant == c.constant) o.rel = Relation::greater;
        }
    }
    rows = std::move(out);
    return true;
}

Rational evaluate(const Constraint& c, const std::vector<Rational>& z) {
    Rational v = c.constant;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0) v += c.coeffs[i] * z[i];
    return v;
}

struct Substitution {
    int var = 0;
    Constraint row;  // the equality used; row.coeffs[var] != 0
};

struct Layer {
    int var = 0;
    std::vector<Constraint> rows;  // inequalities before eliminating var
};

}  // namespace

bool satisfies(const std::vector<Constraint>& constraints, const std::vector<Rational>& z) {
    for (const auto& c : constraints)
        if (!holds(evaluate(c, z), c.rel)) return false;
    return true;
}

Solution solve(int variables, std::vector<Constraint> constraints) {
    for (const auto& c : constraints)
        if (static_cast<int>(c.coeffs.size()) != variables) fail(ErrorCode::dimension, "constraint has the wrong number of coefficients");
    const std::vector<Constraint> original = constraints;

    // Substitute equalities away.
    std::vector<Substitution> subs;
    std::vector<Constraint> rows;
    std::vector<Constraint> eqs;
    for (auto& c : constraints) (c.rel == Relation::equal ? eqs : rows).push_back(std::move(c));
    while (!eqs.empty()) {
        Constraint eq = std::move(eqs.back());
        eqs.pop_back();
        int var = -1;
        for (int i = 0; i < variables; ++i)
            if (eq.coeffs[i] != 0) {
                var = i;
                break;
            }
        if (var < 0) {
            if (eq.constant != 0) return {};
            continue;
        }
        auto eliminate = [&](Constraint& c) {
            if (c.coeffs[var] == 0) return;
            const Rational f = c.coeffs[var] / eq.coeffs[var];
            for (int i = 0; i < variables; ++i) c.coeffs[i] -= f * eq.coeffs[i];
            c.constant -= f * eq.constant;
        };
        for (auto& c : eqs) eliminate(c);
        for (auto& c : rows) eliminate(c);
        subs.push_back({var, std::move(eq)});
    }

    std::vector<bool> substituted(variables, false);
    for (const auto& s : subs) substituted[s.var] = true;

    std::vector<Layer> layers;
    if (!tidy(rows)) return {};
    for (int var = 0; var < variables; ++var) {
        if (substituted[var]) continue;
        layers.push_back({var, rows});
        std::vector<Constraint> lower, upper, rest;
        for (auto& c : rows) {
            if (c.coeffs[var] > 0) lower.push_back(c);
            else if (c.coeffs[var] < 0) upper.push_back(c);
            else rest.push_back(c);
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // lo: a z + L ≥ 0 with a > 0; up: -b z + R ≥ 0 with b > 0.
                const Rational a = lo.coeffs[var], b = -up.coeffs[var];
                Constraint c;
                c.coeffs.resize(variables);
                for (int i = 0; i < variables; ++i) c.coeffs[i] = b * lo.coeffs[i] + a * up.coeffs[i];
                c.coeffs[var] = 0;
                c.constant = b * lo.constant + a * up.constant;
                c.rel = (lo.rel == Relation::greater || up.rel == Relation::greater) ? Relation::greater : Relation::at_least;
                rest.push_back(std::move(c));
            }
        rows = std::move(rest);
        if (!tidy(rows)) return {};
    }

    // Back-substitution, last eliminated variable first.
    Solution sol;
    sol.feasible = true;
    sol.witness.assign(variables, Rational(0));
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        const int var = it->var;
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : it->rows) {
            const Rational a = c.coeffs[var];
            if (a == 0) continue;
            Rational rest = c.constant;
            for (int i = 0; i < variables; ++i)
                if (i != var && c.coeffs[i] != 0) rest += c.coeffs[i] * sol.witness[i];
            const Rational bound = -rest / a;
            const bool strict = c.rel == Relation::greater;
            if (a > 0) {
                if (!lo || bound > *lo || (bound == *lo && strict)) {
                    lo = bound;
                    lo_strict = strict;
                }
            } else if (!hi || bound < *hi || (bound == *hi && strict)) {
                hi = bound;
                hi_strict = strict;
            }
        }
        Rational v = 0;
        if (lo && hi) v = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
        else if (lo) v = *lo + 1;
        else if (hi) v = *hi - 1;
        check_invariant(!(lo && hi && *lo == *hi && (lo_strict || hi_strict)), "elimination certified a nonempty interval");
        sol.witness[var] = v;
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Rational rest = it->row.constant;
        for (int i = 0; i < variables; ++i)
            if (i != it->var && it->row.coeffs[i] != 0) rest += it->row.coeffs[i] * sol.witness[i];
        sol.witness[it->var] = -rest / it->row.coeffs[it->var];
    }
    check_invariant(satisfies(original, sol.witness), "Fourier-Motzkin witness satisfies the system");
    return sol;
}

bool feasible(int variables, std::vector<Constraint> constraints) { return solve(variables, std::move(constraints)).feasible; }

}  // namespace omcube::fm
