#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "qirw/graph.hpp"
#include "qirw/path_decomposition.hpp"

namespace qirw {

// Total map between the vertex sets of two graphs.
struct VertexMap {
    GraphPtr source;
    GraphPtr target;
    std::map<int, int> image; // every source vertex -> a target vertex

    static VertexMap make(GraphPtr source, GraphPtr target, std::map<int, int> image);
    static VertexMap identity(GraphPtr g);
    int operator()(int v) const { return image.at(v); }
};

struct QIParams {
    std::int64_t l = 1; // multiplicative
    std::int64_t c = 0; // additive
};

// Witness of a failed quasi-isometry bullet.
struct QIViolation {
    int bullet;      // 1: dist_H too big, 2: dist_G too big, 3: image not dense
    int u = -1;      // source pair (bullets 1-2)
    int v = -1;
    int y = -1;      // uncovered target vertex (bullet 3)
    Dist lhs, rhs;   // the two distances compared
    std::string describe() const;
};

// Verifies the three bullets of the definition over all pairs / targets,
// with the finiteness guards exactly as defined. Target distances come from
// `weights` when given, otherwise hop distances on phi.target.
std::optional<QIViolation> check_qi(const VertexMap& phi, QIParams p,
                                    const EdgeWeighting* weights = nullptr);

inline bool is_qi(const VertexMap& phi, QIParams p, const EdgeWeighting* weights = nullptr) {
    return !check_qi(phi, p, weights).has_value();
}

// Smallest C' such that phi is a (1, C')-quasi-isometry to the (weighted)
// target; nullopt when no finite C' works (mixed finite/infinite distances).
std::optional<std::int64_t> minimal_additive(const VertexMap& phi,
                                             const EdgeWeighting* weights = nullptr);

// Smallest C >= 1 such that phi is a (C-1, C)-quasi-isometry; nullopt if none.
std::optional<std::int64_t> measure_params(const VertexMap& phi,
                                           const EdgeWeighting* weights = nullptr);

// Breadth-first clusters around the image set; see surjectivize.
struct ClusterAssignment {
    std::map<int, int> rep_of;            // target vertex -> representative in the image
    std::map<int, std::set<int>> cluster; // representative -> its cluster
};

struct SurjectivizeResult {
    GraphPtr h1;
    VertexMap phi1; // surjective
    ClusterAssignment assignment;
    PathDecomposition d1; // image of `d` under the quotient; width does not grow
};

// Requires every target vertex within hop distance c of the image (the third
// quasi-isometry bullet). Clusters are grown by breadth-first layering from
// the image set, ties broken by vertex id; each cluster is contracted to its
// image vertex.
SurjectivizeResult surjectivize(const VertexMap& phi, const PathDecomposition& d, std::int64_t c);

// Transfers a weighting on the contracted graph back to the original host:
// intra-cluster edges get 0, surviving edges inherit their contracted weight.
// Asserts the exact distance identity for all source pairs.
EdgeWeighting pull_back_weights(const EdgeWeighting& w1, const VertexMap& phi,
                                const VertexMap& phi1, const ClusterAssignment& assignment);

// theta = outer . inner with the composed parameter bound, verified on
// construction.
struct ComposeResult {
    VertexMap theta;
    QIParams params;
};
ComposeResult compose_qi(const VertexMap& outer, QIParams outer_params, const VertexMap& inner,
                         QIParams inner_params);

} // namespace qirw
