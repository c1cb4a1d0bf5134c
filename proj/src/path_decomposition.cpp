#include "qirw/path_decomposition.hpp"

#include <algorithm>
#include <deque>

namespace qirw {

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::string DecompositionViolation::describe() const {
    switch (kind) {
        case Kind::VertexUncovered:
            return "vertex " + std::to_string(vertex) + " in no bag";
        case Kind::EdgeUncovered:
            return "edge (" + std::to_string(edge->u) + "," + std::to_string(edge->v) +
                   ") in no bag";
        case Kind::IntervalBroken:
            return "vertex " + std::to_string(vertex) + " in bags " + std::to_string(t1) +
                   " and " + std::to_string(t3) + " but not " + std::to_string(t2);
    }
    return "?";
}

std::vector<DecompositionViolation> validate(const PathDecomposition& d) {
    std::vector<DecompositionViolation> out;
    for (const auto& bag : d.bags) {
        for (int v : bag) d.host->index_of(v); // unknown ids are caller errors, not violations
    }
    for (int v : d.host->vertices()) {
        bool covered = false;
        for (const auto& bag : d.bags) {
            if (bag.count(v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back({DecompositionViolation::Kind::VertexUncovered, v, std::nullopt});
    }
    for (const Edge& e : d.host->edges()) {
        bool covered = false;
        for (const auto& bag : d.bags) {
            if (bag.count(e.u) && bag.count(e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back({DecompositionViolation::Kind::EdgeUncovered, -1, e});
    }
    // Interval property: each vertex's bag indices must be contiguous.
    for (int v : d.host->vertices()) {
        int first = -1, last = -1;
        for (int t = 0; t < static_cast<int>(d.bags.size()); ++t) {
            if (d.bags[static_cast<std::size_t>(t)].count(v)) {
                if (first < 0) first = t;
                last = t;
            }
        }
        for (int t = first; first >= 0 && t <= last; ++t) {
            if (!d.bags[static_cast<std::size_t>(t)].count(v)) {
                DecompositionViolation viol{DecompositionViolation::Kind::IntervalBroken, v,
                                            std::nullopt};
                viol.t1 = first;
                viol.t2 = t;
                viol.t3 = last;
                out.push_back(viol);
                break;
            }
        }
    }
    return out;
}

bool is_valid(const PathDecomposition& d) { return validate(d).empty(); }

PathDecomposition normalize_nowhere_null(const PathDecomposition& d) {
    PathDecomposition out{d.host, {}};
    for (const auto& bag : d.bags) {
        if (!bag.empty()) out.bags.push_back(bag);
    }
    return out;
}

namespace {

// |boundary(S)| = vertices of S with a neighbor outside S.
int boundary_size(const Graph& g, unsigned mask) {
    int n = static_cast<int>(g.vertex_count());
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        for (int nb : g.neighbors(g.id_at(i))) {
            if (!(mask & (1u << g.index_of(nb)))) {
                ++count;
                break;
            }
        }
    }
    return count;
}

} // namespace

std::optional<ExactPathwidthResult> exact_pathwidth(const GraphPtr& g, int k_max,
                                                    std::size_t vertex_cap) {
    std::size_t n = g->vertex_count();
    if (n > vertex_cap)
        throw ResourceError("exact_pathwidth: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(vertex_cap) + "; supply a decomposition instead");
    if (n == 0)
        return ExactPathwidthResult{0, PathDecomposition{g, {}}};

    // f[S] = min over layouts of S of the max prefix boundary; the boundary of
    // a prefix depends on the prefix set only, so f[S] = max(|bd(S)|, min_v f[S \ v]).
    unsigned full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    std::vector<int> f(full + 1u, 0);
    std::vector<int> pick(full + 1u, -1);
    std::vector<int> bd(full + 1u, 0);
    for (unsigned mask = 1; mask <= full; ++mask) bd[mask] = boundary_size(*g, mask);
    for (unsigned mask = 1; mask <= full; ++mask) {
        int best = std::numeric_limits<int>::max();
        int best_v = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            int sub = f[mask & ~(1u << i)];
            if (sub < best) {
                best = sub;
                best_v = static_cast<int>(i);
            }
        }
        f[mask] = std::max(bd[mask], best);
        pick[mask] = best_v;
    }
    int pw = f[full];
    if (pw > k_max) return std::nullopt;

    // Reconstruct the layout, then bags B_i = {v_i} + earlier vertices that
    // still have a neighbor in the suffix starting at v_i.
    std::vector<int> layout(n);
    unsigned mask = full;
    for (std::size_t i = n; i-- > 0;) {
        int v = pick[mask];
        layout[i] = g->id_at(v);
        mask &= ~(1u << v);
    }
    PathDecomposition d{g, {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::set<int> bag{layout[i]};
        for (std::size_t j = 0; j < i; ++j) {
            for (int nb : g->neighbors(layout[j])) {
                bool in_suffix = false;
                for (std::size_t k = i; k < n; ++k) {
                    if (layout[k] == nb) {
                        in_suffix = true;
                        break;
                    }
                }
                if (in_suffix) {
                    bag.insert(layout[j]);
                    break;
                }
            }
        }
        d.bags.push_back(std::move(bag));
    }
    return ExactPathwidthResult{pw, std::move(d)};
}

bool separator_bag_check(const PathDecomposition& d, int t, int t_lo, int t_hi) {
    int n = static_cast<int>(d.bags.size());
    if (t_lo > t || t > t_hi || t_lo < 0 || t_hi >= n)
        throw InputError("separator_bag_check: need 0 <= t_lo <= t <= t_hi < bag count");
    const auto& sep = d.bags[static_cast<std::size_t>(t)];
    const auto& lo = d.bags[static_cast<std::size_t>(t_lo)];
    const auto& hi = d.bags[static_cast<std::size_t>(t_hi)];
    // Component search in host minus B_t; a violating path would put a lo-vertex
    // and a hi-vertex (both outside B_t) in a common component.
    std::set<int> alive;
    for (int v : d.host->vertices())
        if (!sep.count(v)) alive.insert(v);
    std::set<int> seen;
    for (int start : alive) {
        if (seen.count(start)) continue;
        std::deque<int> queue{start};
        seen.insert(start);
        bool touches_lo = false, touches_hi = false;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            if (lo.count(cur)) touches_lo = true;
            if (hi.count(cur)) touches_hi = true;
            for (int nb : d.host->neighbors(cur)) {
                if (alive.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    queue.push_back(nb);
                }
            }
        }
        if (touches_lo && touches_hi) return false;
    }
    return true;
}

PathDecomposition restrict_decomposition(const PathDecomposition& d, const std::set<int>& keep) {
    for (int v : keep) d.host->index_of(v);
    PathDecomposition out{d.host->induced(keep), {}};
    for (const auto& bag : d.bags) {
        std::set<int> cut;
        for (int v : bag)
            if (keep.count(v)) cut.insert(v);
        out.bags.push_back(std::move(cut));
    }
    return out;
}

bool width_drop_check(const PathDecomposition& d, const std::set<int>& hit_set) {
    for (const auto& bag : d.bags) {
        if (bag.empty()) continue;
        bool hit = false;
        for (int v : bag) {
            if (hit_set.count(v)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace qirw
