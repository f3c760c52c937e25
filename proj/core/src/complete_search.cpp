#include <unordered_set>

#include "omcube/complete.hpp"
#include "omcube/error.hpp"
#include "omcube/small.hpp"

namespace omcube {

namespace {

using small::Set64;

// An ample superset must strongly shatter every set the current family
// shatters, so for any shattered-but-not-strongly-shattered X some whole X-cube
// has to be added. Branching over those cubes is exhaustive.
class CubeBrancher {
public:
    CubeBrancher(int m, int d, const Deadline& deadline) : t_(small::tables(m)), d_(d), deadline_(deadline) {}

    std::optional<Set64> search(Set64 s) {
        deadline_.check();
        if (dead_.count(s)) return std::nullopt;
        long best_x = -1;
        std::vector<Set64> best_cubes;
        for (Mask x : t_.by_size) {
            if (!small::shatters(t_, s, x) || small::strongly_shatters(t_, s, x)) continue;
            std::vector<Set64> viable;
            for (std::uint32_t i = t_.cube_begin[x]; i < t_.cube_begin[x + 1]; ++i) {
                const Set64 grown = s | t_.cube_sets[i];
                if (small::vcd_at_most(t_, grown, d_)) viable.push_back(grown);
            }
            if (best_x < 0 || viable.size() < best_cubes.size()) {
                best_x = static_cast<long>(x);
                best_cubes = std::move(viable);
            }
            if (best_cubes.size() <= 1) break;
        }
        if (best_x < 0) return s;  // nothing left to strongly shatter: ample
        for (Set64 grown : best_cubes)
            if (auto found = search(grown)) return found;
        dead_.insert(s);
        return std::nullopt;
    }

private:
    const small::Tables& t_;
    int d_;
    const Deadline& deadline_;
    std::unordered_set<Set64> dead_;
};

}  // namespace

std::optional<Family> ample_completion_at_most(const Family& s, int d, const Deadline& deadline) {
    if (s.empty()) fail(ErrorCode::argument, "ample completion of the empty family");
    if (s.m() > small::max_m) fail(ErrorCode::resource, "ample completion search is limited to m <= 6");
    const small::Tables& t = small::tables(s.m());
    const Set64 start = small::to_set(s);
    if (!small::vcd_at_most(t, start, d)) return std::nullopt;
    CubeBrancher brancher(s.m(), d, deadline);
    auto found = brancher.search(start);
    if (!found) return std::nullopt;
    Family witness = small::from_set(s.m(), *found);
    check_invariant(is_subset(s, witness) && is_ample(witness) && vc_dim(witness) <= d, "completion witness is valid");
    return witness;
}

std::optional<MinCompletion> min_ample_completion(const Family& s, int d_cap, const Deadline& deadline) {
    if (s.empty()) fail(ErrorCode::argument, "ample completion of the empty family");
    if (s.m() > small::max_m) fail(ErrorCode::resource, "ample completion search is limited to m <= 6");
    for (int d = vc_dim(s); d <= d_cap; ++d)
        if (auto w = ample_completion_at_most(s, d, deadline)) {
            check_invariant(vc_dim(*w) == d, "minimal completion has exactly the reported vcd");
            return MinCompletion{d, std::move(*w)};
        }
    return std::nullopt;
}

}  // namespace omcube
