#include "qirw/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "qirw/parallel.hpp"

namespace qirw {

GraphPtr Graph::make(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
    auto g = std::make_shared<Graph>();
    g->ids_ = vertices;
    for (int id : g->ids_) {
        if (id < 0) throw InputError("Graph: negative vertex id " + std::to_string(id));
    }
    std::sort(g->ids_.begin(), g->ids_.end());
    g->ids_.erase(std::unique(g->ids_.begin(), g->ids_.end()), g->ids_.end());

    g->edges_ = edges;
    std::sort(g->edges_.begin(), g->edges_.end());
    g->edges_.erase(std::unique(g->edges_.begin(), g->edges_.end()), g->edges_.end());

    g->adj_.assign(g->ids_.size(), {});
    for (const Edge& e : g->edges_) {
        if (!g->has_vertex(e.u) || !g->has_vertex(e.v))
            throw InputError("Graph: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside the vertex set");
        g->adj_[static_cast<std::size_t>(g->index_of(e.u))].push_back(e.v);
        g->adj_[static_cast<std::size_t>(g->index_of(e.v))].push_back(e.u);
    }
    for (auto& nbrs : g->adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_vertex(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    Edge e(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::index_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw InputError("Graph: unknown vertex id " + std::to_string(id));
    return static_cast<int>(it - ids_.begin());
}

const std::vector<int>& Graph::neighbors(int id) const {
    return adj_[static_cast<std::size_t>(index_of(id))];
}

GraphPtr Graph::induced(const std::set<int>& keep) const {
    std::vector<int> vs;
    for (int id : keep) {
        if (!has_vertex(id)) throw InputError("induced: unknown vertex id " + std::to_string(id));
        vs.push_back(id);
    }
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        if (keep.count(e.u) && keep.count(e.v)) es.push_back(e);
    }
    return make(vs, es);
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(ids_.size(), false);
    for (std::size_t s = 0; s < ids_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> queue{ids_[s]};
        seen[s] = true;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (int nb : neighbors(cur)) {
                auto idx = static_cast<std::size_t>(index_of(nb));
                if (!seen[idx]) {
                    seen[idx] = true;
                    queue.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    return vertex_count() <= 1 || components().size() == 1;
}

// --- EdgeWeighting ---

EdgeWeighting::EdgeWeighting(GraphPtr host, std::map<Edge, std::int64_t> w)
    : host_(std::move(host)), w_(std::move(w)) {
    for (const auto& [e, wt] : w_) size_ = std::max(size_, wt);
}

EdgeWeighting EdgeWeighting::unit(GraphPtr host) {
    std::map<Edge, std::int64_t> w;
    for (const Edge& e : host->edges()) w.emplace(e, 1);
    return EdgeWeighting(std::move(host), std::move(w));
}

EdgeWeighting EdgeWeighting::zero(GraphPtr host) {
    std::map<Edge, std::int64_t> w;
    for (const Edge& e : host->edges()) w.emplace(e, 0);
    return EdgeWeighting(std::move(host), std::move(w));
}

EdgeWeighting EdgeWeighting::make(GraphPtr host, const std::map<Edge, std::int64_t>& weights) {
    for (const Edge& e : host->edges()) {
        auto it = weights.find(e);
        if (it == weights.end())
            throw InputError("EdgeWeighting: missing weight for edge (" + std::to_string(e.u) +
                             "," + std::to_string(e.v) + ")");
        if (it->second < 0)
            throw InputError("EdgeWeighting: negative weight on edge (" + std::to_string(e.u) +
                             "," + std::to_string(e.v) + ")");
    }
    if (weights.size() != host->edge_count())
        throw InputError("EdgeWeighting: weight map does not match the host edge set");
    return EdgeWeighting(std::move(host), weights);
}

std::int64_t EdgeWeighting::at(const Edge& e) const {
    auto it = w_.find(e);
    if (it == w_.end())
        throw InputError("EdgeWeighting: no such edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")");
    return it->second;
}

// --- Path ---

Path Path::make(GraphPtr host, std::vector<int> sequence) {
    if (sequence.empty()) throw InputError("Path: empty vertex sequence");
    std::set<int> seen;
    for (int id : sequence) {
        if (!host->has_vertex(id)) throw InputError("Path: unknown vertex " + std::to_string(id));
        if (!seen.insert(id).second)
            throw InputError("Path: repeated vertex " + std::to_string(id));
    }
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
        if (!host->has_edge(sequence[i], sequence[i + 1]))
            throw InputError("Path: vertices " + std::to_string(sequence[i]) + "," +
                             std::to_string(sequence[i + 1]) + " not adjacent in host");
    }
    return Path(std::move(host), std::move(sequence));
}

bool Path::contains(int id) const {
    return std::find(seq_.begin(), seq_.end(), id) != seq_.end();
}

int Path::position_of(int id) const {
    auto it = std::find(seq_.begin(), seq_.end(), id);
    return it == seq_.end() ? -1 : static_cast<int>(it - seq_.begin());
}

Path Path::subpath(int a, int b) const {
    int pa = position_of(a), pb = position_of(b);
    if (pa < 0 || pb < 0) throw InputError("Path::subpath: endpoint not on path");
    if (pa > pb) std::swap(pa, pb);
    std::vector<int> seq(seq_.begin() + pa, seq_.begin() + pb + 1);
    return Path(host_, std::move(seq));
}

std::vector<Edge> Path::edges() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) es.emplace_back(seq_[i], seq_[i + 1]);
    return es;
}

// --- distances ---

std::vector<Dist> dist_from(const Graph& g, int u) {
    std::vector<Dist> d(g.vertex_count(), Dist::infinity());
    std::deque<int> queue;
    d[static_cast<std::size_t>(g.index_of(u))] = Dist::of(0);
    queue.push_back(u);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        Dist dc = d[static_cast<std::size_t>(g.index_of(cur))];
        for (int nb : g.neighbors(cur)) {
            auto ni = static_cast<std::size_t>(g.index_of(nb));
            if (!d[ni].finite()) {
                d[ni] = dc + 1;
                queue.push_back(nb);
            }
        }
    }
    return d;
}

Dist dist(const Graph& g, int u, int v) {
    g.index_of(v); // validate
    return dist_from(g, u)[static_cast<std::size_t>(g.index_of(v))];
}

Dist dist_sets(const Graph& g, const std::set<int>& a, const std::set<int>& b) {
    if (a.empty() || b.empty()) return Dist::infinity();
    // multi-source BFS from a
    std::vector<Dist> d(g.vertex_count(), Dist::infinity());
    std::deque<int> queue;
    for (int s : a) {
        d[static_cast<std::size_t>(g.index_of(s))] = Dist::of(0);
        queue.push_back(s);
    }
    Dist best = Dist::infinity();
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        Dist dc = d[static_cast<std::size_t>(g.index_of(cur))];
        if (b.count(cur)) best = std::min(best, dc, [](Dist x, Dist y) { return x < y; });
        for (int nb : g.neighbors(cur)) {
            auto ni = static_cast<std::size_t>(g.index_of(nb));
            if (!d[ni].finite()) {
                d[ni] = dc + 1;
                queue.push_back(nb);
            }
        }
    }
    return best;
}

std::vector<Dist> wdist_from(const EdgeWeighting& w, int u) {
    const Graph& g = *w.host();
    std::vector<Dist> d(g.vertex_count(), Dist::infinity());
    using Item = std::pair<std::int64_t, int>; // (distance, vertex id)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[static_cast<std::size_t>(g.index_of(u))] = Dist::of(0);
    heap.emplace(0, u);
    while (!heap.empty()) {
        auto [dc, cur] = heap.top();
        heap.pop();
        auto ci = static_cast<std::size_t>(g.index_of(cur));
        if (!d[ci].finite() || d[ci].value() != dc) continue;
        for (int nb : g.neighbors(cur)) {
            auto ni = static_cast<std::size_t>(g.index_of(nb));
            std::int64_t cand = dc + w.at(cur, nb);
            if (!d[ni].finite() || cand < d[ni].value()) {
                d[ni] = Dist::of(cand);
                heap.emplace(cand, nb);
            }
        }
    }
    return d;
}

Dist wdist(const EdgeWeighting& w, int u, int v) {
    const Graph& g = *w.host();
    g.index_of(v);
    return wdist_from(w, u)[static_cast<std::size_t>(g.index_of(v))];
}

DistanceTable all_pairs(const GraphPtr& g) {
    std::vector<std::vector<Dist>> rows(g->vertex_count());
    parallel_for(g->vertex_count(), [&](std::size_t i) {
        rows[i] = dist_from(*g, g->id_at(static_cast<int>(i)));
    });
    return DistanceTable(g, std::move(rows));
}

DistanceTable all_pairs(const EdgeWeighting& w) {
    const GraphPtr& g = w.host();
    std::vector<std::vector<Dist>> rows(g->vertex_count());
    parallel_for(g->vertex_count(), [&](std::size_t i) {
        rows[i] = wdist_from(w, g->id_at(static_cast<int>(i)));
    });
    return DistanceTable(g, std::move(rows));
}

namespace {

// Lexicographically smallest min-weight simple path. Greedy extension with a
// feasibility check per candidate: with zero-weight edges a locally tight step
// can still dead-end, so each step verifies that the remaining budget is
// realizable in the graph minus the vertices already used.
std::optional<Path> lex_shortest(const GraphPtr& g, const EdgeWeighting& w, int u, int v) {
    g->index_of(u);
    g->index_of(v);
    auto base = wdist_from(w, u);
    Dist total = base[static_cast<std::size_t>(g->index_of(v))];
    if (!total.finite()) return std::nullopt;

    std::vector<int> seq{u};
    std::set<int> used{u};
    std::int64_t remaining = total.value();
    int cur = u;
    while (cur != v) {
        // distance from candidate to v avoiding `used`
        bool advanced = false;
        for (int nb : g->neighbors(cur)) {
            if (used.count(nb)) continue;
            std::int64_t step = w.at(cur, nb);
            if (step > remaining) continue;
            // Dijkstra from nb in g minus used
            std::vector<Dist> d(g->vertex_count(), Dist::infinity());
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            d[static_cast<std::size_t>(g->index_of(nb))] = Dist::of(0);
            heap.emplace(0, nb);
            while (!heap.empty()) {
                auto [dc, x] = heap.top();
                heap.pop();
                auto xi = static_cast<std::size_t>(g->index_of(x));
                if (!d[xi].finite() || d[xi].value() != dc) continue;
                for (int y : g->neighbors(x)) {
                    if (used.count(y)) continue;
                    auto yi = static_cast<std::size_t>(g->index_of(y));
                    std::int64_t cand = dc + w.at(x, y);
                    if (!d[yi].finite() || cand < d[yi].value()) {
                        d[yi] = Dist::of(cand);
                        heap.emplace(cand, y);
                    }
                }
            }
            Dist rest = d[static_cast<std::size_t>(g->index_of(v))];
            if (rest.finite() && step + rest.value() == remaining) {
                seq.push_back(nb);
                used.insert(nb);
                remaining -= step;
                cur = nb;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw AssertionError("lex_shortest: no feasible extension from vertex " +
                                 std::to_string(cur));
    }
    return Path::make(g, std::move(seq));
}

} // namespace

std::optional<Path> shortest_path(const GraphPtr& g, int u, int v) {
    return lex_shortest(g, EdgeWeighting::unit(g), u, v);
}

std::optional<Path> shortest_path(const EdgeWeighting& w, int u, int v) {
    return lex_shortest(w.host(), w, u, v);
}

std::int64_t path_weight(const EdgeWeighting& w, const Path& q) {
    std::int64_t total = 0;
    for (const Edge& e : q.edges()) total += w.at(e);
    return total;
}

std::int64_t path_weight_between(const EdgeWeighting& w, const Path& q, int a, int b) {
    Path sub = q.subpath(a, b);
    return path_weight(w, sub);
}

bool is_w_geodesic(const EdgeWeighting& w, const Path& q) {
    const auto& seq = q.vertices();
    // prefix weights along q
    std::vector<std::int64_t> prefix(seq.size(), 0);
    for (std::size_t i = 1; i < seq.size(); ++i)
        prefix[i] = prefix[i - 1] + w.at(seq[i - 1], seq[i]);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto row = wdist_from(w, seq[i]);
        for (std::size_t j = i; j < seq.size(); ++j) {
            Dist d = row[static_cast<std::size_t>(w.host()->index_of(seq[j]))];
            if (!d.finite() || d.value() != prefix[j] - prefix[i]) return false;
        }
    }
    return true;
}

bool is_geodesic(const GraphPtr& g, const Path& q) {
    return is_w_geodesic(EdgeWeighting::unit(g), q);
}

// --- surgery ---

SubdivideResult subdivide_edges(const GraphPtr& g, const std::vector<Edge>& edges, int parts) {
    if (parts <= 0) throw InputError("subdivide_edges: parts must be positive");
    std::set<Edge> todo;
    for (const Edge& e : edges) {
        if (!g->has_edge(e.u, e.v))
            throw InputError("subdivide_edges: (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") is not an edge");
        todo.insert(e);
    }
    SubdivideResult res;
    std::vector<int> vs = g->vertices();
    std::vector<Edge> es;
    int fresh = g->max_id() + 1;
    for (const Edge& e : g->edges()) {
        if (!todo.count(e) || parts == 1) {
            es.push_back(e);
            continue;
        }
        int prev = e.u;
        for (int step = 1; step < parts; ++step) {
            int mid = fresh++;
            vs.push_back(mid);
            res.provenance.emplace(mid, SubdivideResult::Origin{e, step});
            es.emplace_back(prev, mid);
            prev = mid;
        }
        es.emplace_back(prev, e.v);
    }
    res.graph = Graph::make(vs, es);
    return res;
}

ContractResult contract_edges(const GraphPtr& g, const std::vector<Edge>& matching) {
    std::set<int> touched;
    for (const Edge& e : matching) {
        if (!g->has_edge(e.u, e.v))
            throw InputError("contract_edges: (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") is not an edge");
        if (!touched.insert(e.u).second || !touched.insert(e.v).second)
            throw InputError("contract_edges: edges do not form a matching");
    }
    ContractResult res;
    for (int id : g->vertices()) res.quotient[id] = id;
    for (const Edge& e : matching) res.quotient[e.v] = e.u; // u < v, keep min id
    res.graph = contract_clusters(g, res.quotient);
    return res;
}

GraphPtr contract_clusters(const GraphPtr& g, const std::map<int, int>& vertex_to_rep) {
    std::vector<int> vs;
    std::set<Edge> es;
    for (int id : g->vertices()) {
        auto it = vertex_to_rep.find(id);
        if (it == vertex_to_rep.end())
            throw InputError("contract_clusters: quotient map not total (missing vertex " +
                             std::to_string(id) + ")");
        if (it->second == id) vs.push_back(id);
    }
    for (const Edge& e : g->edges()) {
        int ru = vertex_to_rep.at(e.u), rv = vertex_to_rep.at(e.v);
        if (ru != rv) es.insert(Edge(ru, rv));
    }
    return Graph::make(vs, std::vector<Edge>(es.begin(), es.end()));
}

} // namespace qirw
