#include "omcube/signvec.hpp"

#include <algorithm>
#include <unordered_set>

#include "omcube/error.hpp"

namespace omcube {

namespace {

std::uint64_t key_of(const SignVector& x) { return (std::uint64_t{x.plus} << 32) | x.minus; }

// Hash set of covector keys for membership queries in the axiom checks.
class KeySet {
public:
    explicit KeySet(const SignSystem& sys) {
        keys_.reserve(sys.size() * 2);
        for (const auto& x : sys.covectors()) keys_.insert(key_of(x));
    }
    bool has(const SignVector& x) const { return keys_.count(key_of(x)) != 0; }

private:
    std::unordered_set<std::uint64_t> keys_;
};

void require_same_ground(const SignVector& x, const SignVector& y) {
    if (x.m != y.m)
        fail(ErrorCode::dimension,
             "sign vectors over different ground sets (" + std::to_string(x.m) + " vs " + std::to_string(y.m) + ")");
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::dimension: return "dimension";
        case ErrorCode::argument: return "argument";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::resource: return "resource";
        case ErrorCode::method_unavailable: return "method_unavailable";
        case ErrorCode::no_completion: return "no_completion_found";
        case ErrorCode::not_cuom: return "not_cuom";
        case ErrorCode::parse: return "parse";
        case ErrorCode::generation: return "generation";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

SignVector::SignVector(Mask plus_, Mask minus_, int m_) : plus(plus_), minus(minus_), m(m_) {
    if (m < 0 || m > max_ground) fail(ErrorCode::dimension, "ground set size must be in 0..32");
    if ((plus | minus) & ~full_mask(m)) fail(ErrorCode::argument, "sign vector has bits outside the ground set");
    if (plus & minus) fail(ErrorCode::argument, "plus and minus sets overlap");
}

std::string SignVector::to_string() const {
    std::string s(static_cast<std::size_t>(m), '0');
    for (int e = 0; e < m; ++e) s[e] = plus & bit(e) ? '+' : minus & bit(e) ? '-' : '0';
    return s;
}

SignVector SignVector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(max_ground))
        fail(ErrorCode::dimension, "sign vector longer than 32 elements");
    Mask p = 0, n = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': p |= bit(static_cast<int>(i)); break;
            case '-': n |= bit(static_cast<int>(i)); break;
            case '0': break;
            default:
                fail(ErrorCode::parse, "unexpected character '" + std::string(1, text[i]) + "' at column " +
                                           std::to_string(i + 1));
        }
    }
    return {p, n, static_cast<int>(text.size())};
}

SignVector compose(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    Mask free = ~x.support();
    return {x.plus | (y.plus & free), x.minus | (y.minus & free), x.m};
}

Mask separator(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    return (x.plus & y.minus) | (x.minus & y.plus);
}

bool conforms(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    return (x.plus & ~y.plus) == 0 && (x.minus & ~y.minus) == 0;
}

SignSystem::SignSystem(int m, std::vector<SignVector> covectors) : m_(m), covectors_(std::move(covectors)) {
    if (m < 0 || m > max_ground) fail(ErrorCode::dimension, "ground set size must be in 0..32");
    for (const auto& x : covectors_)
        if (x.m != m) fail(ErrorCode::dimension, "covector " + x.to_string() + " does not match ground set size");
    std::sort(covectors_.begin(), covectors_.end());
    covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
}

bool SignSystem::contains(const SignVector& x) const {
    return std::binary_search(covectors_.begin(), covectors_.end(), x);
}

SignSystem minor(const SignSystem& sys, Mask del, Mask con) {
    const Mask all = full_mask(sys.m());
    if ((del | con) & ~all) fail(ErrorCode::argument, "minor: element outside the ground set");
    if (del & con) fail(ErrorCode::argument, "minor: deletion and contraction sets overlap");
    const Mask keep = all & ~(del | con);
    const int m2 = popcount(keep);
    std::vector<SignVector> out;
    out.reserve(sys.size());
    for (const auto& x : sys.covectors()) {
        if (x.support() & con) continue;
        out.emplace_back(compress_bits(x.plus, keep), compress_bits(x.minus, keep), m2);
    }
    return {m2, std::move(out)};
}

SignSystem upset_closure(const SignSystem& sys) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<SignVector> out;
    std::vector<SignVector> stack(sys.covectors().begin(), sys.covectors().end());
    for (const auto& x : stack) seen.insert(key_of(x));
    out = stack;
    while (!stack.empty()) {
        SignVector x = stack.back();
        stack.pop_back();
        for_each_bit(x.zero_set(), [&](int e) {
            for (int s = 0; s < 2; ++s) {
                SignVector y = x;
                (s ? y.minus : y.plus) |= bit(e);
                if (seen.insert(key_of(y)).second) {
                    out.push_back(y);
                    stack.push_back(y);
                }
            }
        });
    }
    return {sys.m(), std::move(out)};
}

bool check_composition(const SignSystem& sys) {
    KeySet keys(sys);
    const auto& l = sys.covectors();
    for (const auto& x : l)
        for (const auto& y : l)
            if (!keys.has(compose(x, y))) return false;
    return true;
}

bool check_symmetry(const SignSystem& sys) {
    KeySet keys(sys);
    for (const auto& x : sys.covectors())
        if (!keys.has(-x)) return false;
    return true;
}

bool check_face_symmetry(const SignSystem& sys) {
    KeySet keys(sys);
    const auto& l = sys.covectors();
    for (const auto& x : l)
        for (const auto& y : l)
            if (!keys.has(compose(x, -y))) return false;
    return true;
}

// For each pair {X, Y} with nonempty separator S we need, for every e in S, a Z
// with Z_e = 0 that agrees with X∘Y off S. X∘Y and Y∘X agree off S, so unordered
// pairs suffice. Candidates are filtered with per-(coordinate, sign) bitsets over L.
bool check_strong_elimination(const SignSystem& sys) {
    const auto& l = sys.covectors();
    const int m = sys.m();
    const std::size_t n = l.size();
    const std::size_t words = (n + 63) / 64;
    // rows[(e * 3 + s) * words ...] is the bitset of covectors with sign s at e (0:'0', 1:'+', 2:'-').
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m) * 3 * words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (int e = 0; e < m; ++e) {
            int s = l[i].sign(e);
            int idx = s == 0 ? 0 : s > 0 ? 1 : 2;
            rows[(static_cast<std::size_t>(e) * 3 + idx) * words + i / 64] |= std::uint64_t{1} << (i % 64);
        }
    auto row = [&](int e, int s) { return rows.data() + (static_cast<std::size_t>(e) * 3 + s) * words; };
    std::vector<std::uint64_t> cand(words);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Mask sep = separator(l[i], l[j]);
            if (!sep) continue;
            const SignVector xy = compose(l[i], l[j]);
            std::fill(cand.begin(), cand.end(), ~std::uint64_t{0});
            if (n % 64) cand[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;
            bool any = true;
            for (int f = 0; f < m && any; ++f) {
                if (sep & bit(f)) continue;
                int s = xy.sign(f);
                const std::uint64_t* r = row(f, s == 0 ? 0 : s > 0 ? 1 : 2);
                any = false;
                for (std::size_t w = 0; w < words; ++w) {
                    cand[w] &= r[w];
                    any |= cand[w] != 0;
                }
            }
            if (!any) return false;
            bool ok = true;
            for_each_bit(sep, [&](int e) {
                if (!ok) return;
                const std::uint64_t* r = row(e, 0);
                bool hit = false;
                for (std::size_t w = 0; w < words && !hit; ++w) hit = (cand[w] & r[w]) != 0;
                ok = hit;
            });
            if (!ok) return false;
        }
    }
    return true;
}

// Ideal composition is equivalent to closure under single-coordinate fill-in,
// since every Y >= X is reached from X by filling zeros one at a time.
bool check_ideal_composition(const SignSystem& sys) {
    KeySet keys(sys);
    for (const auto& x : sys.covectors()) {
        bool ok = true;
        for_each_bit(x.zero_set(), [&](int e) {
            if (!ok) return;
            SignVector p = x, q = x;
            p.plus |= bit(e);
            q.minus |= bit(e);
            ok = keys.has(p) && keys.has(q);
        });
        if (!ok) return false;
    }
    return true;
}

int first_redundant_element(const SignSystem& sys) {
    const int m = sys.m();
    const auto& l = sys.covectors();
    for (int e = 0; e < m; ++e) {
        bool p = false, n = false, z = false;
        for (const auto& x : l) {
            int s = x.sign(e);
            p |= s > 0;
            n |= s < 0;
            z |= s == 0;
        }
        if (!(p && n && z)) return e;
    }
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            bool pos = false, neg = false;
            for (const auto& x : l) {
                int prod = x.sign(e) * x.sign(f);
                pos |= prod > 0;
                neg |= prod < 0;
            }
            if (!(pos && neg)) return f;
        }
    return -1;
}

bool is_simple(const SignSystem& sys) { return first_redundant_element(sys) < 0; }

AxiomReport axiom_report(const SignSystem& sys) {
    AxiomReport r;
    r.composition = check_composition(sys);
    r.strong_elimination = check_strong_elimination(sys);
    r.symmetry = check_symmetry(sys);
    r.face_symmetry = check_face_symmetry(sys);
    r.ideal_composition = check_ideal_composition(sys);
    r.simple = is_simple(sys);
    r.has_zero = sys.has_zero();
    // OMs are exactly the COMs with the zero vector; both routes must agree.
    const bool om_by_axioms = r.composition && r.strong_elimination && r.symmetry;
    check_invariant(om_by_axioms == r.is_om(), "OM by (C,SE,Sym) equals COM with zero vector");
    if (r.is_com()) check_invariant(r.composition, "face symmetry implies composition on COMs");
    return r;
}

bool is_om(const SignSystem& sys) {
    return sys.has_zero() && check_symmetry(sys) && check_composition(sys) && check_strong_elimination(sys);
}

TopesAndCocircuits topes_and_cocircuits(const SignSystem& sys) {
    if (int e = first_redundant_element(sys); e >= 0)
        fail(ErrorCode::precondition, "system is not simple: element " + std::to_string(e + 1) + " is redundant");
    TopesAndCocircuits out;
    std::vector<Mask> topes;
    for (const auto& x : sys.covectors())
        if (x.is_tope()) topes.push_back(x.plus);
    out.topes = Family(sys.m(), std::move(topes));
    const auto& l = sys.covectors();
    for (const auto& x : l) {
        if (!x.support()) continue;
        bool minimal = true;
        for (const auto& y : l)
            if (y.support() && y != x && conforms(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.cocircuits.push_back(x);
    }
    return out;
}

int rank_of(const SignSystem& sys) {
    if (!is_om(sys)) fail(ErrorCode::precondition, "rank_of: system is not an oriented matroid");
    // Covectors sorted by support size; longest chain ending at each covector.
    std::vector<SignVector> l = sys.covectors();
    std::stable_sort(l.begin(), l.end(),
                     [](const SignVector& a, const SignVector& b) { return popcount(a.support()) < popcount(b.support()); });
    std::vector<int> depth(l.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (popcount(l[j].support()) < popcount(l[i].support()) && conforms(l[j], l[i]))
                depth[i] = std::max(depth[i], depth[j] + 1);
        if (l[i].is_tope()) best = std::max(best, depth[i] + 1);
    }
    // The chain 0 < ... < T < 1̂ has depth(T) + 1 steps; rank is that length minus one.
    return best - 1;
}

bool is_uom_by_cocircuits(const SignSystem& sys) {
    if (!is_om(sys)) fail(ErrorCode::precondition, "is_uom_by_cocircuits: system is not an oriented matroid");
    const int r = rank_of(sys);
    const int m = sys.m();
    const auto tc = topes_and_cocircuits(sys);
    const int k = m - r + 1;
    std::vector<Mask> supports;
    for (const auto& x : tc.cocircuits) {
        if (popcount(x.support()) != k) return false;
        if (!sys.contains(-x)) return false;
        supports.push_back(x.support());
    }
    std::sort(supports.begin(), supports.end());
    // Exactly one opposite pair per support.
    for (std::size_t i = 0; i < supports.size(); i += 2)
        if (i + 1 >= supports.size() || supports[i] != supports[i + 1] ||
            (i + 2 < supports.size() && supports[i + 2] == supports[i]))
            return false;
    std::uint64_t expected = 1;
    for (int i = 0; i < k; ++i) expected = expected * static_cast<std::uint64_t>(m - i) / static_cast<std::uint64_t>(i + 1);
    return supports.size() == 2 * expected;
}

Simplification simplify(const SignSystem& sys) {
    Simplification out{sys, 0};
    // Original index of each surviving element.
    std::vector<int> origin(static_cast<std::size_t>(sys.m()));
    for (int e = 0; e < sys.m(); ++e) origin[e] = e;
    while (true) {
        int e = first_redundant_element(out.system);
        if (e < 0) break;
        out.deleted |= bit(origin[e]);
        origin.erase(origin.begin() + e);
        out.system = minor(out.system, bit(e), 0);
    }
    return out;
}

}  // namespace omcube
