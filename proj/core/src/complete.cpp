#include "omcube/complete.hpp"

#include <algorithm>

#include "omcube/comstruct.hpp"
#include "omcube/error.hpp"
#include "omcube/small.hpp"

namespace omcube {

namespace {

std::string coordinate_label(int e) { return "e" + std::to_string(e + 1); }

bool inside(const Family& f, const Family& cube) {
    const Mask free = cube.varying_coordinates(), base = cube.constant_part();
    return std::all_of(f.begin(), f.end(), [&](Mask v) { return (v & ~free) == (base & ~free); });
}

void record(CompletionTrace& t, std::string name, bool ok) { t.assertions.emplace_back(std::move(name), ok); }

bool no_cross_edges(const Family& a, const Family& b) {
    const Family only_a = difference(a, b), only_b = difference(b, a);
    for (Mask u : only_a)
        for_each_bit(full_mask(a.m()), [&](int e) {
            if (only_b.contains(u ^ bit(e))) throw Error(ErrorCode::internal, "cross edge");
        });
    return true;
}

bool cover_is_clean(const Family& a, const Family& b) {
    try {
        return no_cross_edges(a, b);
    } catch (const Error&) {
        return false;
    }
}

struct AmpSteps {
    bool pieces_ample = true;
    bool expansions_ample = true;
};

// Contract the lowest Θ-class, complete recursively, then expand peripherally
// along the contracted plus-halfspace.
Family amp_recursive(const Family& g, CompletionTrace& trace, AmpSteps& steps) {
    if (g.size() == 1 || g.is_cube()) return g;
    const int e = lowest_bit(g.varying_coordinates());
    const Mask minus_bit = g.vertices().front() & bit(e);
    std::vector<Mask> plus_side;
    for (Mask v : g)
        if ((v & bit(e)) != minus_bit) plus_side.push_back(v);
    const Family contracted = clear_coordinate(g, e);
    const Family contracted_plus = clear_coordinate(Family(g.m(), std::move(plus_side)), e);

    const Family sub = amp_recursive(contracted, trace, steps);
    const bool sub_ample = is_ample(sub), plus_ample = is_ample(contracted_plus);
    steps.pieces_ample = steps.pieces_ample && sub_ample && plus_ample;

    const Family& side0 = minus_bit ? contracted_plus : sub;
    const Family& side1 = minus_bit ? sub : contracted_plus;
    Family out = expand_at(sub, e, side0, side1);
    steps.expansions_ample = steps.expansions_ample && (!sub_ample || !plus_ample || is_ample(out));
    trace.steps.push_back({"peripheral_expansion", coordinate_label(e), g.size(), out.size()});
    return out;
}

Family lift(const Family& compressed, Mask ground, Mask constant, int m) {
    std::vector<Mask> vs;
    vs.reserve(compressed.size());
    for (Mask v : compressed) vs.push_back(expand_bits(v, ground) | constant);
    return {m, std::move(vs)};
}

std::uint32_t gray_rank(Mask g) {
    std::uint32_t n = g;
    for (std::uint32_t shift = 1; shift < 32; shift <<= 1) n ^= n >> shift;
    return n;
}

// Shared search for UOM completions; stops after the first hit unless `all`.
std::vector<Family> uom_search(const Family& g, int rank, bool all, const Deadline& deadline) {
    const Mask ground = g.varying_coordinates();
    const int m = popcount(ground);
    const Family t = project(g, ground);
    if (m > 20) fail(ErrorCode::resource, "UOM completion search is limited to 20 varying coordinates");
    const Mask full = full_mask(m);
    const std::uint64_t target = 2 * phi(rank - 1, m - 1);
    if (t.size() > target || (target - t.size()) % 2 != 0) return {};
    const std::size_t need = (target - t.size()) / 2;

    std::vector<Mask> reps;
    for (Mask v = 0; v < (Mask{1} << m); ++v)
        if (v < (v ^ full) && !t.contains(v) && !t.contains(v ^ full)) reps.push_back(v);
    std::stable_sort(reps.begin(), reps.end(), [](Mask a, Mask b) { return gray_rank(a) < gray_rank(b); });

    const bool use_small = m <= small::max_m;
    const small::Tables* tab = use_small ? &small::tables(m) : nullptr;
    std::vector<Family> found;
    std::vector<Mask> chosen;
    auto vcd_ok = [&](const std::vector<Mask>& extra) {
        std::vector<Mask> vs(t.begin(), t.end());
        vs.insert(vs.end(), extra.begin(), extra.end());
        Family f(m, std::move(vs));
        return use_small ? small::vcd_at_most(*tab, small::to_set(f), rank) : vc_dim(f) <= rank;
    };
    auto visit = [&](auto&& self, std::size_t from) -> bool {
        deadline.check();
        if (chosen.size() == 2 * need) {
            std::vector<Mask> vs(t.begin(), t.end());
            vs.insert(vs.end(), chosen.begin(), chosen.end());
            Family cand(m, std::move(vs));
            if (!is_partial_cube(cand)) return false;
            const ClassReport rep = classify(cand);
            if (!rep.uom || rep.rank != rank) return false;
            found.push_back(lift(cand, ground, g.constant_part(), g.m()));
            return !all;
        }
        for (std::size_t i = from; i < reps.size(); ++i) {
            if (reps.size() - i < need - chosen.size() / 2) break;
            chosen.push_back(reps[i]);
            chosen.push_back(reps[i] ^ full);
            if (vcd_ok(chosen) && self(self, i + 1)) return true;
            chosen.pop_back();
            chosen.pop_back();
        }
        return false;
    };
    visit(visit, 0);
    return found;
}

struct CuomCore {
    CompletionTrace trace;
    std::vector<Family> completions;
};

CuomCore cuom_core(const Family& s, const std::vector<Face>& order, int d) {
    CuomCore out;
    CompletionTrace& tr = out.trace;
    Family current = s;
    bool gated_ok = true, vcd_ok = true, pc_ok = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Face& f = order[i];
        const CompletionTrace sub = uom_to_amp(f.topes);
        check_invariant(sub.all_passed(), "facet completion passes its own checks");
        record(tr, "facet " + f.covector.to_string() + " completion inside C(F)", inside(sub.result, f.cube()));
        const PCube g(current);
        const PCube next = single_gated_extension(g, f.topes, sub.result);
        tr.steps.push_back({"gated_extension", f.covector.to_string(), current.size(), next.size()});
        current = next.family();
        out.completions.push_back(sub.result);
        pc_ok = pc_ok && is_partial_cube(current);
        vcd_ok = vcd_ok && vc_dim(current) == d;
        for (std::size_t j = i + 1; j < order.size(); ++j) gated_ok = gated_ok && is_gated(next, order[j].topes);
    }
    record(tr, "every intermediate graph is a partial cube", pc_ok);
    record(tr, "remaining facets stay gated after every step", gated_ok);
    record(tr, "vcd unchanged after every step", vcd_ok);

    bool covered = true;
    for (Mask u : current)
        for_each_bit(full_mask(current.m()), [&](int e) {
            const Mask v = u ^ bit(e);
            if (v < u || !current.contains(v)) return;
            covered = covered && std::any_of(out.completions.begin(), out.completions.end(),
                                             [&](const Family& c) { return c.contains(u) && c.contains(v); });
        });
    record(tr, "every edge lies in one facet completion", covered);
    record(tr, "result contains the input", is_subset(s, current));
    record(tr, "result is ample", is_ample(current));
    record(tr, "result has the input vcd", vc_dim(current) == d);
    tr.result = std::move(current);
    return out;
}

}  // namespace

bool CompletionTrace::all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.second; });
}

PCube single_gated_extension(const PCube& g, const Family& h, const Family& h_ext) {
    if (h.m() != g.m() || h_ext.m() != g.m()) fail(ErrorCode::dimension, "single_gated_extension: families live in different cubes");
    if (h.empty() || !is_subset(h, g.family())) fail(ErrorCode::precondition, "single_gated_extension: h is not a subgraph of g");
    if (!is_gated(g, h)) fail(ErrorCode::precondition, "single_gated_extension: h is not gated in g");
    if (!is_subset(h, h_ext)) fail(ErrorCode::precondition, "single_gated_extension: h_ext does not contain h");
    if (!inside(h_ext, h.enclosing_cube())) fail(ErrorCode::precondition, "single_gated_extension: h_ext leaves C(h)");
    if (!is_partial_cube(h_ext)) fail(ErrorCode::precondition, "single_gated_extension: h_ext is not isometric");

    Family joined = unite(g.family(), h_ext);
    check_invariant(is_partial_cube(joined), "(i) the extension is isometric");
    PCube out(std::move(joined));
    check_invariant(is_gated(out, h_ext), "(ii) h_ext is gated in the extension");
    for (Mask v : g.family()) {
        auto a = gate(g, v, h);
        auto b = gate(out, v, h_ext);
        check_invariant(a && b && *a == *b, "(ii) gates into h and h_ext coincide");
    }
    check_invariant(vc_dim(out.family()) == std::max(vc_dim(g.family()), vc_dim(h_ext)),
                    "(iii) vcd of the extension is the larger of the two");
    return out;
}

CompletionTrace uom_to_amp(const Family& g) {
    if (g.empty()) fail(ErrorCode::precondition, "uom_to_amp needs a nonempty family");
    if (!classify(g).uom) fail(ErrorCode::precondition, "uom_to_amp needs a UOM");
    CompletionTrace trace;
    AmpSteps steps;
    trace.result = amp_recursive(g, trace, steps);
    record(trace, "recursion pieces are ample", steps.pieces_ample);
    record(trace, "every peripheral expansion of ample pieces is ample", steps.expansions_ample);
    record(trace, "result contains the input", is_subset(g, trace.result));
    record(trace, "result lies in C(input)", inside(trace.result, g.enclosing_cube()));
    record(trace, "result is ample", is_ample(trace.result));
    record(trace, "result has the input vcd", vc_dim(trace.result) == vc_dim(g));
    return trace;
}

Family om_to_uom(const Family& g, const OmToUomOptions& opts) {
    const ClassReport rep = classify(g);
    if (!rep.om) fail(ErrorCode::precondition, "om_to_uom needs an OM");
    if (rep.uom) return g;
    if (opts.strategy == UomStrategy::search) {
        auto found = uom_search(g, rep.rank, false, opts.deadline);
        if (found.empty()) fail(ErrorCode::no_completion, "search exhausted without a UOM completion");
        return found.front();
    }
    if (!opts.realization) fail(ErrorCode::argument, "realization strategy needs the arrangement");
    const Arrangement& arr = *opts.realization;
    if (arr.m() != g.m() || arrangement_topes(arr) != g)
        fail(ErrorCode::argument, "arrangement does not realize the input topes");
    const Family out = arrangement_topes(perturb_to_uniform(arr, opts.seed));
    const ClassReport out_rep = classify(out);
    check_invariant(is_subset(g, out), "perturbation keeps every tope");
    check_invariant(out_rep.uom && out_rep.rank == rep.rank, "perturbation yields a UOM of the same rank");
    return out;
}

std::vector<Family> all_uom_completions(const Family& g, const Deadline& deadline) {
    const ClassReport rep = classify(g);
    if (!rep.om) fail(ErrorCode::precondition, "all_uom_completions needs an OM");
    return uom_search(g, rep.rank, true, deadline);
}

CuomResult cuom_to_amp(const Family& s, const CuomOptions& opts) {
    const ClassReport rep = classify(s);
    if (!rep.cuom) fail(ErrorCode::not_cuom, "input is not a CUOM");
    std::vector<Face> sorted = facets(s);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Face& a, const Face& b) {
        const Mask sa = a.covector.support(), sb = b.covector.support();
        return sa != sb ? sa < sb : a.covector.plus < b.covector.plus;
    });
    std::vector<Face> order;
    if (opts.order.empty()) {
        order = sorted;
    } else {
        std::vector<std::size_t> check = opts.order;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i || check.size() != sorted.size())
                fail(ErrorCode::argument, "facet order must be a permutation of the facet indices");
        for (std::size_t i : opts.order) order.push_back(sorted[i]);
    }

    CuomCore core = cuom_core(s, order, rep.vcd);
    CuomResult out{std::move(core.trace), std::move(core.completions), std::nullopt};
    if (!opts.diagnostics) return out;

    CuomDiagnostics diag;
    std::vector<Face> reversed(order.rbegin(), order.rend());
    const CuomCore rev = cuom_core(s, reversed, rep.vcd);
    diag.reversed_order_ample = is_ample(rev.trace.result);
    diag.reversed_order_same_vcd = vc_dim(rev.trace.result) == vc_dim(out.trace.result);
    diag.reversed_order_same_set = rev.trace.result == out.trace.result;

    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (order[i].covector.support() != order[j].covector.support()) continue;
            ++diag.parallel_pairs;
            const Mask shift = order[i].covector.plus ^ order[j].covector.plus;
            if (translate(out.facet_completions[i], shift) == out.facet_completions[j]) ++diag.parallel_pairs_consistent;
        }

    Family prefix = out.facet_completions.empty() ? Family() : out.facet_completions.front();
    for (std::size_t i = 1; i < out.facet_completions.size(); ++i) {
        const Family& piece = out.facet_completions[i];
        const Family shared = intersect(prefix, piece);
        const Family joined = unite(prefix, piece);
        const bool premises = !shared.empty() && shared != prefix && shared != piece && is_ample(prefix) &&
                              is_ample(piece) && is_ample(shared) && cover_is_clean(prefix, piece) &&
                              is_partial_cube(joined);
        if (premises) {
            ++diag.amalgam_premises;
            if (!is_ample(joined)) ++diag.amalgam_violations;
        }
        prefix = joined;
    }
    out.diagnostics = diag;
    return out;
}

NaiveUnion naive_facet_union(const Family& s, NaiveStage stage, const std::vector<std::optional<Family>>& choices) {
    if (!classify(s).com) fail(ErrorCode::precondition, "naive_facet_union needs a COM");
    const std::vector<Face> maximal = facets(s);
    if (!choices.empty() && choices.size() != maximal.size())
        fail(ErrorCode::argument, "one completion choice per maximal face is required");
    NaiveUnion out;
    std::vector<Mask> all;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        const Family& face = maximal[i].topes;
        Family piece = face;
        const ClassReport rep = classify(face);
        if (rep.om) {
            if (!choices.empty() && choices[i]) {
                if (!is_subset(face, *choices[i])) fail(ErrorCode::argument, "completion choice does not contain its face");
                piece = *choices[i];
            } else {
                piece = om_to_uom(face);
            }
            if (stage == NaiveStage::amp) piece = uom_to_amp(piece).result;
        }
        all.insert(all.end(), piece.begin(), piece.end());
        out.pieces.push_back(std::move(piece));
    }
    out.result = Family(s.m(), std::move(all));
    out.induced_partial_cube = is_partial_cube(out.result);

    const auto& vs = out.result.vertices();
    std::vector<std::vector<std::uint32_t>> adj(vs.size());
    auto index = [&](Mask v) { return static_cast<std::uint32_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (const auto& piece : out.pieces)
        for (Mask v : piece)
            for (int e = 0; e < s.m(); ++e) {
                const Mask w = v | bit(e);
                if (w != v && piece.contains(w)) {
                    adj[index(v)].push_back(index(w));
                    adj[index(w)].push_back(index(v));
                }
            }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    out.partial_cube = is_partial_cube_graph(adj);
    return out;
}

}  // namespace omcube
