#include "omcube/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "omcube/comstruct.hpp"
#include "omcube/error.hpp"
#include "omcube/fourier_motzkin.hpp"
#include "omcube/pcube.hpp"

namespace omcube {

namespace {

using fm::Constraint;
using fm::Integer;
using fm::Rational;
using fm::Relation;

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Constraint row_for(const std::vector<std::int64_t>& v, int sign) {
    Constraint c;
    for (auto x : v) c.coeffs.emplace_back(sign < 0 ? -x : x);
    c.rel = sign == 0 ? Relation::equal : Relation::greater;
    return c;
}

std::vector<Constraint> region_rows(const Arrangement& arr) {
    std::vector<Constraint> rows;
    for (const auto& h : arr.region) {
        Constraint c;
        for (auto x : h.normal) c.coeffs.emplace_back(x);
        c.constant = Rational(-h.offset);
        c.rel = Relation::greater;
        rows.push_back(std::move(c));
    }
    return rows;
}

// Depth-first over sign prefixes, pruning infeasible ones.
std::vector<SignVector> feasible_sign_vectors(const Arrangement& arr, bool topes_only) {
    arr.validate();
    const int m = arr.m();
    std::vector<SignVector> out;
    std::vector<Constraint> rows = region_rows(arr);
    if (!fm::feasible(arr.r, rows)) return out;
    Mask plus = 0, minus = 0;
    auto visit = [&](auto&& self, int e) -> void {
        if (e == m) {
            out.emplace_back(plus, minus, m);
            return;
        }
        for (int s : {1, -1, 0}) {
            if (topes_only && s == 0) continue;
            rows.push_back(row_for(arr.vectors[e], s));
            if (fm::feasible(arr.r, rows)) {
                if (s > 0) plus |= bit(e);
                if (s < 0) minus |= bit(e);
                self(self, e + 1);
                plus &= ~bit(e);
                minus &= ~bit(e);
            }
            rows.pop_back();
        }
    };
    visit(visit, 0);
    return out;
}

std::vector<std::int64_t> random_vector(std::mt19937_64& rng, int r, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::int64_t> v(r);
    do {
        for (auto& x : v) x = dist(rng);
    } while (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }));
    return v;
}

}  // namespace

void Arrangement::validate() const {
    if (r < 1) fail(ErrorCode::argument, "arrangement rank must be positive");
    if (vectors.empty() || static_cast<int>(vectors.size()) > max_ground)
        fail(ErrorCode::dimension, "arrangement needs between 1 and 32 vectors");
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != r) fail(ErrorCode::dimension, "arrangement vector has the wrong length");
        if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
            fail(ErrorCode::argument, "arrangement contains a zero vector");
    }
    for (const auto& h : region)
        if (static_cast<int>(h.normal.size()) != r) fail(ErrorCode::dimension, "region row has the wrong length");
}

bool is_uniform(const Arrangement& arr) {
    arr.validate();
    const int m = arr.m(), r = arr.r;
    if (r > m) return false;
    bool ok = true;
    for_each_subset(full_mask(m), [&](Mask sub) {
        if (!ok || popcount(sub) != r) return;
        std::vector<std::vector<Integer>> a;
        for_each_bit(sub, [&](int e) {
            std::vector<Integer> row;
            for (auto x : arr.vectors[e]) row.emplace_back(x);
            a.push_back(std::move(row));
        });
        if (bareiss_det(std::move(a)) == 0) ok = false;
    });
    return ok;
}

SignSystem arrangement_covectors(const Arrangement& arr) { return {arr.m(), feasible_sign_vectors(arr, false)}; }

Family arrangement_topes(const Arrangement& arr) {
    std::vector<Mask> vs;
    for (const auto& x : feasible_sign_vectors(arr, true)) vs.push_back(x.plus);
    return {arr.m(), std::move(vs)};
}

Realization gen_uniform_om(int m, int r, std::uint64_t seed) {
    if (r < 1 || r > m || m > 8) fail(ErrorCode::argument, "gen_uniform_om needs 1 <= r <= m <= 8");
    if (r == 1 && m > 1) fail(ErrorCode::generation, "rank-1 uniform OMs on more than one element are not simple");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Arrangement arr;
        arr.r = r;
        for (int e = 0; e < m; ++e) arr.vectors.push_back(random_vector(rng, r, -4, 4));
        if (!is_uniform(arr)) continue;
        Realization out{arr, arrangement_covectors(arr), arrangement_topes(arr)};
        check_invariant(out.topes.size() == 2 * phi(r - 1, m - 1), "uniform OM has 2*Phi_{r-1}(m-1) topes");
        return out;
    }
    fail(ErrorCode::generation, "no uniform configuration found within the retry budget");
}

Family gen_realizable_com(const Arrangement& arr) {
    arr.validate();
    if (!fm::feasible(arr.r, region_rows(arr))) fail(ErrorCode::generation, "arrangement region is empty");
    return arrangement_topes(arr);
}

Realization gen_pencil_cuom(int m, int r, int pencil, std::uint64_t seed) {
    if (r < 2 || pencil < r || pencil > m || m > 8)
        fail(ErrorCode::argument, "gen_pencil_cuom needs 2 <= r <= pencil <= m <= 8");
    const int d = r - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int attempt = 0; attempt < 500; ++attempt) {
        Arrangement arr;
        arr.r = r;
        std::vector<std::int64_t> point(d);
        for (auto& x : point) x = coord(rng);
        for (int e = 0; e < m; ++e) {
            auto a = random_vector(rng, d, -3, 3);
            std::int64_t c = 0;
            if (e < pencil)
                for (int i = 0; i < d; ++i) c -= a[i] * point[i];
            else
                c = std::uniform_int_distribution<int>(-5, 5)(rng);
            a.push_back(c);
            arr.vectors.push_back(std::move(a));
        }
        std::vector<std::int64_t> up(r, 0);
        up[r - 1] = 1;
        arr.region.push_back({up, 0});
        Family topes = arrangement_topes(arr);
        if (topes.varying_coordinates() != full_mask(m)) continue;
        const ClassReport rep = classify(topes);
        if (!rep.cuom || rep.amp) continue;
        return {arr, arrangement_covectors(arr), std::move(topes)};
    }
    fail(ErrorCode::generation, "no pencil CUOM found within the retry budget");
}

Arrangement perturb_to_uniform(const Arrangement& arr, std::uint64_t seed) {
    arr.validate();
    const Family before = arrangement_topes(arr);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> delta(-1, 1);
    std::int64_t scale = 8;
    for (int attempt = 1; attempt <= 400; ++attempt) {
        Arrangement out = arr;
        for (auto& v : out.vectors)
            for (auto& x : v) x = x * scale + delta(rng);
        if (is_uniform(out) && is_subset(before, arrangement_topes(out))) return out;
        if (attempt % 20 == 0) scale *= 2;
    }
    fail(ErrorCode::generation, "no uniform perturbation keeps every tope");
}

Family product(const Family& a, const Family& b) {
    if (a.m() + b.m() > max_ground) fail(ErrorCode::dimension, "product needs more than 32 coordinates");
    std::vector<Mask> out;
    out.reserve(a.size() * b.size());
    for (Mask u : a)
        for (Mask v : b) out.push_back(u | (v << a.m()));
    return {a.m() + b.m(), std::move(out)};
}

Family even_cycle(int k) {
    if (k < 2 || k > max_ground) fail(ErrorCode::argument, "even_cycle(k) needs 2 <= k <= 32");
    std::vector<Mask> out;
    for (int i = 0; i <= k; ++i) out.push_back(full_mask(i));
    for (int i = 1; i < k; ++i) out.push_back(full_mask(k) & ~full_mask(i));
    return {k, std::move(out)};
}

Family cycle(int n) {
    if (n % 2 != 0) fail(ErrorCode::argument, "odd cycles are not partial cubes");
    return even_cycle(n / 2);
}

Family path(int k) {
    if (k < 1 || k > max_ground + 1) fail(ErrorCode::argument, "path(k) needs 1 <= k <= 33");
    std::vector<Mask> out;
    for (int i = 0; i < k; ++i) out.push_back(full_mask(i));
    return {k - 1, std::move(out)};
}

Arrangement c8xk2_arrangement() {
    Arrangement arr;
    arr.r = 3;
    arr.vectors = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}};
    return arr;
}

namespace {

constexpr std::uint64_t rd_seed = 1;

int suffix_number(const std::string& name, std::size_t from) {
    if (from >= name.size() || !std::all_of(name.begin() + static_cast<long>(from), name.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
        fail(ErrorCode::argument, "unknown named family: " + name);
    return std::stoi(name.substr(from));
}

}  // namespace

Family named(const std::string& name) {
    if (name == "RD") return gen_uniform_om(4, 3, rd_seed).topes;
    if (name == "C6") return even_cycle(3);
    if (name == "C8xP3") return product(even_cycle(4), path(3));
    if (name == "C8xK2") return arrangement_topes(c8xk2_arrangement());
    if (name == "C6xK2") return product(even_cycle(3), path(2));
    if (!name.empty() && name[0] == 'Q') {
        const int d = suffix_number(name, 1);
        if (d > max_ground) fail(ErrorCode::dimension, "cube dimension above 32");
        return Family::cube(d);
    }
    if (!name.empty() && name[0] == 'P') return path(suffix_number(name, 1));
    if (!name.empty() && name[0] == 'C') return cycle(suffix_number(name, 1));
    fail(ErrorCode::argument, "unknown named family: " + name);
}

std::vector<std::string> named_catalog() { return {"RD", "C6", "C8xP3", "C8xK2", "C6xK2", "Q<d>", "P<k>", "C<2k>"}; }

}  // namespace omcube
