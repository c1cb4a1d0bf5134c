#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "qirw/dist.hpp"
#include "qirw/errors.hpp"

namespace qirw {

// Unordered vertex pair, normalized so u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw InputError("Edge: loop at vertex " + std::to_string(a));
    }
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
    int other(int x) const { return x == u ? v : u; }
};

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

// Finite simple undirected graph over non-negative integer vertex ids.
// Immutable after construction; all queries are const and thread-safe.
class Graph {
public:
    static GraphPtr make(const std::vector<int>& vertices, const std::vector<Edge>& edges);

    const std::vector<int>& vertices() const { return ids_; }       // sorted
    const std::vector<Edge>& edges() const { return edges_; }       // sorted
    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(int id) const;
    bool has_edge(int a, int b) const;
    const std::vector<int>& neighbors(int id) const; // sorted by id

    // Dense index of a vertex id (0..n-1 in sorted id order).
    int index_of(int id) const;
    int id_at(int index) const { return ids_[static_cast<std::size_t>(index)]; }

    GraphPtr induced(const std::set<int>& keep) const;
    bool connected() const;
    std::vector<std::vector<int>> components() const; // sorted ids, sorted by min id

    int max_id() const { return ids_.empty() ? -1 : ids_.back(); }

private:
    std::vector<int> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_; // by dense index, neighbor ids sorted
};

// Total weight assignment on the edges of a host graph. Weights are
// non-negative integers; size() is the maximum weight (0 when edgeless).
class EdgeWeighting {
public:
    static EdgeWeighting unit(GraphPtr host);
    static EdgeWeighting zero(GraphPtr host);
    static EdgeWeighting make(GraphPtr host, const std::map<Edge, std::int64_t>& weights);

    const GraphPtr& host() const { return host_; }
    std::int64_t at(const Edge& e) const;
    std::int64_t at(int a, int b) const { return at(Edge(a, b)); }
    std::int64_t size() const { return size_; }
    const std::map<Edge, std::int64_t>& weights() const { return w_; }

private:
    EdgeWeighting(GraphPtr host, std::map<Edge, std::int64_t> w);
    GraphPtr host_;
    std::map<Edge, std::int64_t> w_;
    std::int64_t size_ = 0;
};

// Path in a host graph: pairwise-distinct vertices, consecutive ones adjacent.
// A single vertex is a (trivial) path.
class Path {
public:
    static Path make(GraphPtr host, std::vector<int> sequence);

    const GraphPtr& host() const { return host_; }
    const std::vector<int>& vertices() const { return seq_; }
    std::size_t length() const { return seq_.size() - 1; } // edge count
    int front() const { return seq_.front(); }
    int back() const { return seq_.back(); }
    bool contains(int id) const;
    int position_of(int id) const; // -1 if absent
    Path subpath(int a, int b) const; // between two vertices on the path
    std::vector<Edge> edges() const;

private:
    Path(GraphPtr host, std::vector<int> seq) : host_(std::move(host)), seq_(std::move(seq)) {}
    GraphPtr host_;
    std::vector<int> seq_;
};

// --- distances ---

// All distances from u, indexed by dense vertex index. BFS.
std::vector<Dist> dist_from(const Graph& g, int u);
Dist dist(const Graph& g, int u, int v);
Dist dist_sets(const Graph& g, const std::set<int>& a, const std::set<int>& b);

// Weighted variants (Dijkstra; zero weights allowed).
std::vector<Dist> wdist_from(const EdgeWeighting& w, int u);
Dist wdist(const EdgeWeighting& w, int u, int v);

// All-pairs table, rows computed in parallel; rows[i][j] = dist(id_at(i), id_at(j)).
class DistanceTable {
public:
    DistanceTable(GraphPtr host, std::vector<std::vector<Dist>> rows)
        : host_(std::move(host)), rows_(std::move(rows)) {}
    Dist at(int u, int v) const { return rows_[host_->index_of(u)][host_->index_of(v)]; }
    const GraphPtr& host() const { return host_; }

private:
    GraphPtr host_;
    std::vector<std::vector<Dist>> rows_;
};

DistanceTable all_pairs(const GraphPtr& g);
DistanceTable all_pairs(const EdgeWeighting& w);

// Deterministic geodesic: among minimum-length (resp. minimum-weight) u-v
// paths, the one with lexicographically smallest vertex-id sequence.
// nullopt iff u, v are in different components.
std::optional<Path> shortest_path(const GraphPtr& g, int u, int v);
std::optional<Path> shortest_path(const EdgeWeighting& w, int u, int v);

// True iff every subpath of q realizes the (weighted) distance between its ends.
bool is_w_geodesic(const EdgeWeighting& w, const Path& q);
bool is_geodesic(const GraphPtr& g, const Path& q);

std::int64_t path_weight(const EdgeWeighting& w, const Path& q);
// Weight of q between two of its vertices.
std::int64_t path_weight_between(const EdgeWeighting& w, const Path& q, int a, int b);

// --- edge surgery ---

struct SubdivideResult {
    GraphPtr graph;
    // For each fresh vertex: the original edge it sits on and its step along
    // the replacement path, counted from the lower-id endpoint (1..parts-1).
    struct Origin {
        Edge edge;
        int step;
    };
    std::map<int, Origin> provenance;
};

// Replaces each listed edge by a path of `parts` edges through fresh vertices
// (ids above every existing id). parts = 1 leaves the graph unchanged.
SubdivideResult subdivide_edges(const GraphPtr& g, const std::vector<Edge>& edges, int parts);

struct ContractResult {
    GraphPtr graph;
    std::map<int, int> quotient; // every original vertex -> representative (min id of its pair)
};

// Contracts a matching; throws InputError if the edges share endpoints.
ContractResult contract_edges(const GraphPtr& g, const std::vector<Edge>& matching);

// General connected-cluster quotient used by surjectivization: each cluster is
// contracted to its representative. Representatives keep their own ids.
GraphPtr contract_clusters(const GraphPtr& g, const std::map<int, int>& vertex_to_rep);

} // namespace qirw
