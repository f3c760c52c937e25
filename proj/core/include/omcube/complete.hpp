#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omcube/budget.hpp"
#include "omcube/corpus.hpp"
#include "omcube/family.hpp"
#include "omcube/pcube.hpp"

namespace omcube {

struct CompletionStep {
    std::string op;      // "peripheral_expansion", "gated_extension", ...
    std::string target;  // coordinate (1-based) or facet covector
    std::size_t before = 0;
    std::size_t after = 0;
};

struct CompletionTrace {
    std::vector<CompletionStep> steps;
    Family result;
    // Named checks evaluated along the way; all true on success.
    std::vector<std::pair<std::string, bool>> assertions;

    bool all_passed() const;
};

// G' on V(g) ∪ h_ext; h gated in g and h ⊆ h_ext ⊆ C(h).
PCube single_gated_extension(const PCube& g, const Family& h, const Family& h_ext);

// Ample completion inside C(g) of a UOM tope family.
CompletionTrace uom_to_amp(const Family& g);

enum class UomStrategy { search, realization };

struct OmToUomOptions {
    UomStrategy strategy = UomStrategy::search;
    const Arrangement* realization = nullptr;  // required for UomStrategy::realization
    std::uint64_t seed = 1;
    Deadline deadline;
};

// UOM of the same rank containing g, in the same cube.
Family om_to_uom(const Family& g, const OmToUomOptions& opts = {});
// Every UOM of the same rank and tope count 2·Φ_{r-1}(m-1) containing g.
std::vector<Family> all_uom_completions(const Family& g, const Deadline& deadline = {});

struct CuomOptions {
    // Facet visiting order as indices into the sorted facet list; empty = sorted order.
    std::vector<std::size_t> order;
    // Runs the order-robustness, parallel-faces and amalgam diagnostics.
    bool diagnostics = false;
};

struct CuomDiagnostics {
    bool reversed_order_ample = false;
    bool reversed_order_same_vcd = false;
    bool reversed_order_same_set = false;
    std::size_t parallel_pairs = 0;
    std::size_t parallel_pairs_consistent = 0;
    std::size_t amalgam_premises = 0;    // prefix unions where the amalgam premises held
    std::size_t amalgam_violations = 0;  // of those, unions that were not ample
};

struct CuomResult {
    CompletionTrace trace;
    std::vector<Family> facet_completions;  // in visiting order
    std::optional<CuomDiagnostics> diagnostics;
};

CuomResult cuom_to_amp(const Family& s, const CuomOptions& opts = {});

enum class NaiveStage { uom, amp };

struct NaiveUnion {
    Family result;
    // Union of the piece graphs: an edge counts only if both ends lie in one piece.
    bool partial_cube = false;
    // Induced subgraph of `result` in Q_m, which may gain edges between pieces.
    bool induced_partial_cube = false;
    std::vector<Family> pieces;  // completed maximal faces, in facet order
};

// Completes each maximal face independently and unions the pieces. `choices`
// overrides the UOM completion per maximal face (non-OM faces are kept as is).
NaiveUnion naive_facet_union(const Family& s, NaiveStage stage,
                             const std::vector<std::optional<Family>>& choices = {});

struct MinCompletion {
    int d_min = -1;
    Family witness;
};

// Smallest d ≤ d_cap admitting an ample superset of s in Q_m with vcd d (m ≤ 6).
std::optional<MinCompletion> min_ample_completion(const Family& s, int d_cap, const Deadline& deadline = {});
// Whether an ample superset with vcd ≤ d exists.
std::optional<Family> ample_completion_at_most(const Family& s, int d, const Deadline& deadline = {});

}  // namespace omcube
