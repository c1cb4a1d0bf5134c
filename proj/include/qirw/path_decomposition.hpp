#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qirw/graph.hpp"

namespace qirw {

// Ordered bag sequence over a host graph. Valid when the three axioms hold:
// vertex cover, edge cover, and the interval property.
struct PathDecomposition {
    GraphPtr host;
    std::vector<std::set<int>> bags;

    int width() const; // max bag size - 1; -1 for an empty bag list
};

struct DecompositionViolation {
    enum class Kind { VertexUncovered, EdgeUncovered, IntervalBroken };
    Kind kind;
    int vertex = -1;              // VertexUncovered / IntervalBroken witness
    std::optional<Edge> edge;     // EdgeUncovered witness
    int t1 = -1, t2 = -1, t3 = -1; // IntervalBroken indices (0-based)
    std::string describe() const;
};

// Empty list means OK.
std::vector<DecompositionViolation> validate(const PathDecomposition& d);
bool is_valid(const PathDecomposition& d);

// Drops empty bags; order and width preserved.
PathDecomposition normalize_nowhere_null(const PathDecomposition& d);

// Exact path-width by dynamic programming over vertex subsets (vertex
// separation layout). Guarded by a vertex cap since the search is exponential;
// the synthesis pipeline always takes a decomposition as input instead.
struct ExactPathwidthResult {
    int width;
    PathDecomposition decomposition;
};
std::optional<ExactPathwidthResult> exact_pathwidth(const GraphPtr& g, int k_max,
                                                    std::size_t vertex_cap = 16);

// True iff every host path between B_{t_lo} and B_{t_hi} meets B_t.
// Indices are 0-based, t_lo <= t <= t_hi required.
bool separator_bag_check(const PathDecomposition& d, int t, int t_lo, int t_hi);

// Decomposition of the induced subgraph on `keep`, bags intersected.
PathDecomposition restrict_decomposition(const PathDecomposition& d, const std::set<int>& keep);

// True iff every nonempty bag meets hit_set; then restricting to the
// complement drops the width by at least one.
bool width_drop_check(const PathDecomposition& d, const std::set<int>& hit_set);

} // namespace qirw
