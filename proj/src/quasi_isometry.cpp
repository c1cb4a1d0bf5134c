#include "qirw/quasi_isometry.hpp"

#include <algorithm>
#include <deque>

namespace qirw {

VertexMap VertexMap::make(GraphPtr source, GraphPtr target, std::map<int, int> image) {
    for (int v : source->vertices()) {
        auto it = image.find(v);
        if (it == image.end())
            throw InputError("VertexMap: no image for source vertex " + std::to_string(v));
        target->index_of(it->second);
    }
    if (image.size() != source->vertex_count())
        throw InputError("VertexMap: image map does not match the source vertex set");
    return VertexMap{std::move(source), std::move(target), std::move(image)};
}

VertexMap VertexMap::identity(GraphPtr g) {
    std::map<int, int> im;
    for (int v : g->vertices()) im[v] = v;
    return VertexMap{g, g, std::move(im)};
}

std::string QIViolation::describe() const {
    switch (bullet) {
        case 1:
            return "bullet 1 at (" + std::to_string(u) + "," + std::to_string(v) +
                   "): target distance too large";
        case 2:
            return "bullet 2 at (" + std::to_string(u) + "," + std::to_string(v) +
                   "): source distance too large";
        default:
            return "bullet 3 at target vertex " + std::to_string(y) + ": image not dense";
    }
}

namespace {

DistanceTable target_table(const VertexMap& phi, const EdgeWeighting* weights) {
    if (weights) {
        if (weights->host() != phi.target)
            throw InputError("check_qi: weighting host differs from the map target");
        return all_pairs(*weights);
    }
    return all_pairs(phi.target);
}

} // namespace

std::optional<QIViolation> check_qi(const VertexMap& phi, QIParams p,
                                    const EdgeWeighting* weights) {
    DistanceTable dg = all_pairs(phi.source);
    DistanceTable dh = target_table(phi, weights);
    const auto& src = phi.source->vertices();

    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = i; j < src.size(); ++j) {
            int u = src[i], v = src[j];
            Dist g = dg.at(u, v);
            Dist h = dh.at(phi(u), phi(v));
            if (g.finite() && !h.within_affine(p.l, p.c, g))
                return QIViolation{1, u, v, -1, h, g};
            if (h.finite() && !g.within_affine(p.l, p.c, h))
                return QIViolation{2, u, v, -1, g, h};
        }
    }
    for (int y : phi.target->vertices()) {
        Dist best = Dist::infinity();
        for (int v : src) best = std::min(best, dh.at(phi(v), y));
        if (!(best <= Dist::of(p.c)))
            return QIViolation{3, -1, -1, y, best, Dist::of(p.c)};
    }
    return std::nullopt;
}

std::optional<std::int64_t> minimal_additive(const VertexMap& phi, const EdgeWeighting* weights) {
    DistanceTable dg = all_pairs(phi.source);
    DistanceTable dh = target_table(phi, weights);
    const auto& src = phi.source->vertices();

    std::int64_t need = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            int u = src[i], v = src[j];
            Dist g = dg.at(u, v);
            Dist h = dh.at(phi(u), phi(v));
            if (g.finite()) {
                if (!h.finite()) return std::nullopt;
                need = std::max(need, h.value() - g.value());
            }
            if (h.finite()) {
                if (!g.finite()) return std::nullopt;
                need = std::max(need, g.value() - h.value());
            }
        }
    }
    for (int y : phi.target->vertices()) {
        Dist best = Dist::infinity();
        for (int v : src) best = std::min(best, dh.at(phi(v), y));
        if (!best.finite()) return std::nullopt;
        need = std::max(need, best.value());
    }
    return need;
}

std::optional<std::int64_t> measure_params(const VertexMap& phi, const EdgeWeighting* weights) {
    DistanceTable dg = all_pairs(phi.source);
    DistanceTable dh = target_table(phi, weights);
    const auto& src = phi.source->vertices();

    // Minimal C with dist <= (C-1) * other + C, i.e. C >= (a + b) / (b + 1)
    // rounded up, maximized over all constrained pairs.
    std::int64_t need = 1;
    auto fold = [&need](Dist a, Dist b) -> bool { // a <= (C-1) b + C
        if (!b.finite()) return true;
        if (!a.finite()) return false;
        std::int64_t num = a.value() + b.value(), den = b.value() + 1;
        need = std::max(need, (num + den - 1) / den);
        return true;
    };
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            int u = src[i], v = src[j];
            Dist g = dg.at(u, v);
            Dist h = dh.at(phi(u), phi(v));
            if (!fold(h, g)) return std::nullopt;
            if (!fold(g, h)) return std::nullopt;
        }
    }
    for (int y : phi.target->vertices()) {
        Dist best = Dist::infinity();
        for (int v : src) best = std::min(best, dh.at(phi(v), y));
        if (!best.finite()) return std::nullopt;
        need = std::max(need, best.value());
    }
    if (check_qi(phi, {need - 1, need}, weights))
        throw AssertionError("measure_params: computed C=" + std::to_string(need) +
                             " fails check_qi");
    return need;
}

SurjectivizeResult surjectivize(const VertexMap& phi, const PathDecomposition& d,
                                std::int64_t c) {
    const GraphPtr& h = phi.target;
    if (d.host != h) throw InputError("surjectivize: decomposition host differs from map target");

    std::set<int> image;
    for (int v : phi.source->vertices()) image.insert(phi(v));

    // Breadth-first layering from the image set: conceptually a BFS tree from
    // a virtual root adjacent to every image vertex. Each vertex joins the
    // cluster of its minimum-id neighbor in the previous layer.
    std::map<int, std::int64_t> depth;
    {
        std::deque<int> queue(image.begin(), image.end());
        for (int z : image) depth[z] = 0;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nb : h->neighbors(cur)) {
                if (!depth.count(nb)) {
                    depth[nb] = depth[cur] + 1;
                    queue.push_back(nb);
                }
            }
        }
    }
    for (int v : h->vertices()) {
        auto it = depth.find(v);
        if (it == depth.end())
            throw InputError("surjectivize: target vertex " + std::to_string(v) +
                             " is unreachable from the image");
        if (it->second > c)
            throw InputError("surjectivize: target vertex " + std::to_string(v) +
                             " is at layer " + std::to_string(it->second) + " > c");
    }
    ClusterAssignment assign;
    for (int z : image) assign.rep_of[z] = z;
    std::vector<int> order(h->vertices());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return depth.at(a) != depth.at(b) ? depth.at(a) < depth.at(b) : a < b;
    });
    for (int v : order) {
        if (assign.rep_of.count(v)) continue; // image vertex
        for (int nb : h->neighbors(v)) {      // sorted by id: first hit is min-id parent
            if (depth.at(nb) == depth.at(v) - 1) {
                assign.rep_of[v] = assign.rep_of.at(nb);
                break;
            }
        }
    }
    for (int v : h->vertices()) assign.cluster[assign.rep_of.at(v)].insert(v);

    SurjectivizeResult res;
    res.assignment = assign;
    res.h1 = contract_clusters(h, assign.rep_of);
    std::map<int, int> im;
    for (int v : phi.source->vertices()) im[v] = assign.rep_of.at(phi(v));
    res.phi1 = VertexMap::make(phi.source, res.h1, std::move(im));

    res.d1.host = res.h1;
    for (const auto& bag : d.bags) {
        std::set<int> nb;
        for (int v : bag) nb.insert(assign.rep_of.at(v));
        res.d1.bags.push_back(std::move(nb));
    }
    if (!is_valid(res.d1))
        throw AssertionError("surjectivize: quotient decomposition invalid");
    if (res.d1.width() > d.width())
        throw AssertionError("surjectivize: quotient decomposition width grew");
    return res;
}

EdgeWeighting pull_back_weights(const EdgeWeighting& w1, const VertexMap& phi,
                                const VertexMap& phi1, const ClusterAssignment& assignment) {
    if (phi1.target != w1.host())
        throw InputError("pull_back_weights: weighting host differs from the contracted target");
    const GraphPtr& h = phi.target;
    std::map<Edge, std::int64_t> w;
    for (const Edge& e : h->edges()) {
        int ru = assignment.rep_of.at(e.u), rv = assignment.rep_of.at(e.v);
        w.emplace(e, ru == rv ? 0 : w1.at(ru, rv));
    }
    EdgeWeighting out = EdgeWeighting::make(h, w);

    DistanceTable dw = all_pairs(out);
    DistanceTable d1 = all_pairs(w1);
    for (int u : phi.source->vertices()) {
        for (int v : phi.source->vertices()) {
            if (dw.at(phi(u), phi(v)) != d1.at(phi1(u), phi1(v)))
                throw AssertionError(
                    "pull_back_weights: distance identity broken at source pair (" +
                    std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    return out;
}

ComposeResult compose_qi(const VertexMap& outer, QIParams op, const VertexMap& inner,
                         QIParams ip) {
    if (inner.target != outer.source)
        throw InputError("compose_qi: inner target and outer source differ");
    std::map<int, int> im;
    for (int v : inner.source->vertices()) im[v] = outer(inner(v));
    ComposeResult res{VertexMap::make(inner.source, outer.target, std::move(im)), {}};
    res.params.l = op.l * ip.l;
    res.params.c = std::max(op.l * ip.c + 2 * op.c, ip.l * op.c + ip.c);
    if (auto bad = check_qi(res.theta, res.params))
        throw AssertionError("compose_qi: composition fails at computed parameters: " +
                             bad->describe());
    return res;
}

} // namespace qirw
