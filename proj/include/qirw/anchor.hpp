#pragma once

#include "qirw/profile.hpp"
#include "qirw/quasi_isometry.hpp"

namespace qirw {

// Anchor system over a source geodesic P: greedily chosen indices J into P,
// anchor vertices r_j on a stitched target path Q, and the connector geodesics
// the stitching used.
struct AnchorSystem {
    Path geodesic;                  // P, in the source graph
    std::vector<int> anchor_index;  // J, increasing indices into P's sequence
    std::vector<int> anchor_vertex; // r_j, in order along q
    Path q;                         // stitched path in the target graph
    std::vector<Path> connectors;   // T_k, geodesics of the target
    bool collapsed = false;         // both endpoint anchors coincided; J = {0}
    std::int64_t max_index_gap = 0; // max j - i over consecutive members of J

    int anchor_count() const { return static_cast<int>(anchor_index.size()); }
};

// Greedy 2C-jump anchor construction. Requires C >= 2, phi a verified
// (C-1,C)-quasi-isometry and p a geodesic; asserts every conclusion of the
// construction (connector disjointness, gap bounds, anchor spacing).
AnchorSystem build_anchor_system(const VertexMap& phi, const Path& p, std::int64_t c,
                                 Profile profile = Profile::Checked);

// Gap weighting: per gap between consecutive anchors, the edge at the
// lower-anchor end carries the index gap, other gap edges 0; every edge of the
// host off q carries L(2L+1). Hypothesis violations are input errors naming
// the bullet; postconditions (q is a w-geodesic, exact anchor distances) are
// asserted.
EdgeWeighting gap_weights(const GraphPtr& h, const Path& q, const std::vector<int>& anchor_index,
                          const std::vector<int>& anchor_vertex, std::int64_t l,
                          Profile profile = Profile::Checked);

struct FixgeoResult {
    EdgeWeighting weighting;
    AnchorSystem anchors;
    std::int64_t size_bound; // 32 C^4
};

// Anchor construction combined with gap weights at L = 4C^2 - 1; asserts the
// five conclusions (w-geodesic, anchor identity, C^2/C^3 proximity, 2C anchor
// displacement, C-coverage of q) and the 32C^4 size bound.
FixgeoResult fixgeo(const VertexMap& phi, const Path& p, std::int64_t c,
                    Profile profile = Profile::Checked);

} // namespace qirw
