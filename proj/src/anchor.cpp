#include "qirw/anchor.hpp"

#include <algorithm>
#include <set>

namespace qirw {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

AnchorSystem build_anchor_system(const VertexMap& phi, const Path& p, std::int64_t c,
                                 Profile profile) {
    if (c < 2) throw InputError("build_anchor_system: need C >= 2");
    if (p.host() != phi.source)
        throw InputError("build_anchor_system: geodesic lives in the wrong graph");
    if (!is_geodesic(phi.source, p))
        throw InputError("build_anchor_system: given path is not a geodesic");
    if (auto bad = check_qi(phi, {c - 1, c}))
        throw InputError("build_anchor_system: map is not a (C-1,C)-quasi-isometry: " +
                         bad->describe());

    const GraphPtr& h = phi.target;
    const auto& pv = p.vertices();
    int m = static_cast<int>(pv.size()) - 1;

    AnchorSystem sys{p, {}, {}, Path::make(h, {phi(pv[0])}), {}, false, 0};
    if (m == 0) {
        sys.anchor_index = {0};
        sys.anchor_vertex = {phi(pv[0])};
        return sys;
    }

    // Greedy jump sequence: i_{k+1} is the largest index whose image is within
    // 2C of the image of p_{i_k}. The step is always positive because
    // consecutive geodesic vertices have image distance at most 2C - 1.
    std::vector<int> idx{0};
    while (idx.back() != m) {
        int cur = idx.back();
        auto row = dist_from(*h, phi(pv[static_cast<std::size_t>(cur)]));
        int next = -1;
        for (int i = m; i > cur; --i) {
            Dist d = row[static_cast<std::size_t>(h->index_of(phi(pv[static_cast<std::size_t>(i)])))];
            if (d <= Dist::of(2 * c)) {
                next = i;
                break;
            }
        }
        if (next < 0)
            throw AssertionError("build_anchor_system: greedy jump stalled at index " +
                                 std::to_string(cur));
        idx.push_back(next);
    }
    int k_count = static_cast<int>(idx.size()) - 1; // number of connectors

    std::vector<Path> connectors;
    for (int k = 0; k < k_count; ++k) {
        auto t = shortest_path(h, phi(pv[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]),
                               phi(pv[static_cast<std::size_t>(idx[static_cast<std::size_t>(k) + 1])]));
        if (!t) throw AssertionError("build_anchor_system: connector endpoints disconnected");
        if (t->length() > static_cast<std::size_t>(2 * c))
            throw AssertionError("build_anchor_system: connector longer than 2C");
        connectors.push_back(std::move(*t));
    }

    // Non-consecutive connectors must be vertex-disjoint.
    for (int a = 0; a + 2 <= k_count - 1; ++a) {
        for (int b = a + 2; b < k_count; ++b) {
            for (int v : connectors[static_cast<std::size_t>(a)].vertices()) {
                if (connectors[static_cast<std::size_t>(b)].contains(v))
                    throw AssertionError("build_anchor_system: connectors " + pair_str(a, b) +
                                         " share vertex " + std::to_string(v));
            }
        }
    }

    // The only admissible anchor collision: a single jump whose two image
    // endpoints coincide. Then the whole system collapses to one anchor.
    if (k_count == 1 && phi(pv[0]) == phi(pv[static_cast<std::size_t>(m)])) {
        sys.anchor_index = {0};
        sys.anchor_vertex = {phi(pv[0])};
        sys.connectors = std::move(connectors);
        sys.collapsed = true;
        if (m > c)
            throw AssertionError("build_anchor_system: collapsed system spans " +
                                 std::to_string(m) + " > C source steps");
        return sys;
    }

    // Stitch Q: walk each connector forward from the entry vertex to the first
    // vertex lying on the next connector; the last connector is taken to its end.
    std::vector<int> qseq;
    int entry_pos = 0; // position of x_k on connector k
    for (int k = 0; k < k_count; ++k) {
        const auto& tv = connectors[static_cast<std::size_t>(k)].vertices();
        int stop_pos;
        if (k == k_count - 1) {
            stop_pos = static_cast<int>(tv.size()) - 1;
        } else {
            stop_pos = -1;
            for (int j = entry_pos; j < static_cast<int>(tv.size()); ++j) {
                if (connectors[static_cast<std::size_t>(k) + 1].contains(tv[static_cast<std::size_t>(j)])) {
                    stop_pos = j;
                    break;
                }
            }
            if (stop_pos < 0)
                throw AssertionError("build_anchor_system: connector " + std::to_string(k) +
                                     " never meets its successor");
        }
        for (int j = entry_pos; j <= stop_pos; ++j) {
            if (qseq.empty() || qseq.back() != tv[static_cast<std::size_t>(j)])
                qseq.push_back(tv[static_cast<std::size_t>(j)]);
        }
        if (k < k_count - 1)
            entry_pos = connectors[static_cast<std::size_t>(k) + 1].position_of(qseq.back());
    }
    sys.q = Path::make(h, qseq);

    // Anchors: the endpoints of the jump sequence map to themselves; interior
    // anchors are the stitching junctions (the first vertex of Q on both
    // adjacent connectors).
    sys.anchor_index = idx;
    sys.anchor_vertex.assign(idx.size(), -1);
    sys.anchor_vertex.front() = phi(pv[0]);
    sys.anchor_vertex.back() = phi(pv[static_cast<std::size_t>(m)]);
    {
        // junction k sits where segment k-1 ended; recompute by scanning q
        std::vector<int> junction(static_cast<std::size_t>(k_count) + 1, -1);
        junction[0] = 0;
        int pos = 0;
        for (int k = 1; k < k_count; ++k) {
            // first vertex of q at or after pos on both T_{k-1} and T_k
            int found = -1;
            for (int j = pos; j < static_cast<int>(qseq.size()); ++j) {
                if (connectors[static_cast<std::size_t>(k) - 1].contains(qseq[static_cast<std::size_t>(j)]) &&
                    connectors[static_cast<std::size_t>(k)].contains(qseq[static_cast<std::size_t>(j)])) {
                    found = j;
                    break;
                }
            }
            if (found < 0)
                throw AssertionError("build_anchor_system: no junction between connectors " +
                                     pair_str(k - 1, k));
            junction[static_cast<std::size_t>(k)] = found;
            pos = found;
            sys.anchor_vertex[static_cast<std::size_t>(k)] = qseq[static_cast<std::size_t>(found)];
        }
    }

    // Anchors must be distinct and strictly ordered along q.
    {
        int prev = -1;
        for (std::size_t k = 0; k < sys.anchor_vertex.size(); ++k) {
            int pos = sys.q.position_of(sys.anchor_vertex[k]);
            if (pos < 0)
                throw AssertionError("build_anchor_system: anchor " + std::to_string(k) +
                                     " not on Q");
            if (pos <= prev)
                throw AssertionError("build_anchor_system: anchors out of order at position " +
                                     std::to_string(k));
            prev = pos;
        }
    }

    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        sys.max_index_gap = std::max(sys.max_index_gap,
                                     static_cast<std::int64_t>(idx[k + 1] - idx[k]));

    // Conclusions of the construction, swept in the checked profile.
    if (profile == Profile::Checked) {
        if (sys.max_index_gap > 2 * c * c - c)
            throw AssertionError("build_anchor_system: index gap " +
                                 std::to_string(sys.max_index_gap) + " exceeds 2C^2-C");
        std::int64_t big_l = 4 * c * c - 1;
        const auto& qv = sys.q.vertices();
        std::vector<std::vector<Dist>> anchor_rows;
        for (int r : sys.anchor_vertex) anchor_rows.push_back(dist_from(*h, r));
        for (std::size_t a = 0; a < idx.size(); ++a) {
            // anchor within 2C of its own image
            Dist da = anchor_rows[a][static_cast<std::size_t>(
                h->index_of(phi(pv[static_cast<std::size_t>(idx[a])])))];
            if (!(da <= Dist::of(2 * c)))
                throw AssertionError("build_anchor_system: anchor " + std::to_string(a) +
                                     " farther than 2C from its image");
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                std::int64_t gap = idx[b] - idx[a];
                Dist dh = anchor_rows[a][static_cast<std::size_t>(h->index_of(sys.anchor_vertex[b]))];
                if (!dh.finite() || big_l * dh.value() < gap)
                    throw AssertionError("build_anchor_system: anchors " +
                                         pair_str(static_cast<int>(a), static_cast<int>(b)) +
                                         " closer than (j-i)/(4C^2-1)");
                std::int64_t along_q = sys.q.position_of(sys.anchor_vertex[b]) -
                                       sys.q.position_of(sys.anchor_vertex[a]);
                if (along_q > 2 * c * gap)
                    throw AssertionError("build_anchor_system: anchors " +
                                         pair_str(static_cast<int>(a), static_cast<int>(b)) +
                                         " farther than 2C(j-i) along Q");
            }
        }
        // every vertex of Q within C of some anchored image
        for (int v : qv) {
            bool near = false;
            auto row = dist_from(*h, v);
            for (int j : idx) {
                Dist d = row[static_cast<std::size_t>(
                    h->index_of(phi(pv[static_cast<std::size_t>(j)])))];
                if (d <= Dist::of(c)) {
                    near = true;
                    break;
                }
            }
            if (!near)
                throw AssertionError("build_anchor_system: Q vertex " + std::to_string(v) +
                                     " farther than C from every anchored image");
        }
    }
    sys.connectors = std::move(connectors);
    return sys;
}

EdgeWeighting gap_weights(const GraphPtr& h, const Path& q, const std::vector<int>& anchor_index,
                          const std::vector<int>& anchor_vertex, std::int64_t l,
                          Profile profile) {
    if (l < 1) throw InputError("gap_weights: need L >= 1");
    if (q.host() != h) throw InputError("gap_weights: path lives in the wrong graph");
    if (anchor_index.size() != anchor_vertex.size() || anchor_index.empty())
        throw InputError("gap_weights: anchor lists empty or mismatched");

    std::size_t n = anchor_index.size();
    std::vector<int> pos(n);
    for (std::size_t k = 0; k < n; ++k) {
        pos[k] = q.position_of(anchor_vertex[k]);
        if (pos[k] < 0)
            throw InputError("gap_weights: anchor vertex " + std::to_string(anchor_vertex[k]) +
                             " not on Q");
        if (k > 0 && (pos[k] <= pos[k - 1] || anchor_index[k] <= anchor_index[k - 1]))
            throw InputError("gap_weights: anchors not strictly increasing");
    }
    // bullet 1: Q is the union of the anchor subpaths
    if (pos.front() != 0 || pos.back() != static_cast<int>(q.vertices().size()) - 1)
        throw InputError("gap_weights: hypothesis 1 violated (Q not covered by anchor subpaths)");
    // bullet 2: consecutive index gaps at most L
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (anchor_index[k + 1] - anchor_index[k] > l)
            throw InputError("gap_weights: hypothesis 2 violated (gap " +
                             std::to_string(anchor_index[k + 1] - anchor_index[k]) + " > L at " +
                             std::to_string(k) + ")");
    }
    // bullets 3 and 4: anchors not too close in H, not too stretched along Q
    for (std::size_t a = 0; a < n; ++a) {
        auto row = dist_from(*h, anchor_vertex[a]);
        for (std::size_t b = a + 1; b < n; ++b) {
            std::int64_t gap = anchor_index[b] - anchor_index[a];
            Dist dh = row[static_cast<std::size_t>(h->index_of(anchor_vertex[b]))];
            if (!dh.finite() || l * dh.value() < gap)
                throw InputError("gap_weights: hypothesis 3 violated at anchors " +
                                 pair_str(static_cast<int>(a), static_cast<int>(b)));
            if (pos[b] - pos[a] > l * gap)
                throw InputError("gap_weights: hypothesis 4 violated at anchors " +
                                 pair_str(static_cast<int>(a), static_cast<int>(b)));
        }
    }

    // Build the weighting.
    const auto& qv = q.vertices();
    std::set<Edge> q_edges;
    for (const Edge& e : q.edges()) q_edges.insert(e);
    std::map<Edge, std::int64_t> w;
    for (const Edge& e : h->edges())
        if (!q_edges.count(e)) w.emplace(e, l * (2 * l + 1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::int64_t gap = anchor_index[k + 1] - anchor_index[k];
        for (int j = pos[k]; j < pos[k + 1]; ++j) {
            Edge e(qv[static_cast<std::size_t>(j)], qv[static_cast<std::size_t>(j) + 1]);
            w[e] = (j == pos[k]) ? gap : 0;
        }
    }
    EdgeWeighting out = EdgeWeighting::make(h, w);
    if (out.size() > l * (2 * l + 1))
        throw AssertionError("gap_weights: size exceeds L(2L+1)");

    // Postconditions.
    if (profile == Profile::Checked) {
        if (!is_w_geodesic(out, q))
            throw AssertionError("gap_weights: Q is not a w-geodesic");
        for (std::size_t a = 0; a < n; ++a) {
            auto row = wdist_from(out, anchor_vertex[a]);
            for (std::size_t b = a; b < n; ++b) {
                Dist d = row[static_cast<std::size_t>(h->index_of(anchor_vertex[b]))];
                std::int64_t gap = anchor_index[b] - anchor_index[a];
                if (!d.finite() || d.value() != gap)
                    throw AssertionError("gap_weights: anchor distance identity broken at " +
                                         pair_str(static_cast<int>(a), static_cast<int>(b)));
            }
        }
    } else {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Dist d = wdist(out, anchor_vertex[k], anchor_vertex[k + 1]);
            if (!d.finite() || d.value() != anchor_index[k + 1] - anchor_index[k])
                throw AssertionError("gap_weights: anchor distance identity broken at " +
                                     pair_str(static_cast<int>(k), static_cast<int>(k + 1)));
        }
    }
    return out;
}

FixgeoResult fixgeo(const VertexMap& phi, const Path& p, std::int64_t c, Profile profile) {
    if (c < 2) throw InputError("fixgeo: need C >= 2");
    AnchorSystem sys = build_anchor_system(phi, p, c, profile);
    std::int64_t l = 4 * c * c - 1;
    EdgeWeighting w = gap_weights(phi.target, sys.q, sys.anchor_index, sys.anchor_vertex, l,
                                  profile);
    std::int64_t bound = 32 * c * c * c * c;
    if (w.size() > bound)
        throw AssertionError("fixgeo: size " + std::to_string(w.size()) + " exceeds 32C^4");

    if (profile == Profile::Checked) {
        // third conclusion: every P index has an anchor within C^2 whose vertex
        // is within C^3 of its image (strict).
        const GraphPtr& h = phi.target;
        const auto& pv = p.vertices();
        std::vector<std::vector<Dist>> anchor_rows;
        for (int r : sys.anchor_vertex) anchor_rows.push_back(dist_from(*h, r));
        for (int i = 0; i < static_cast<int>(pv.size()); ++i) {
            bool ok = false;
            for (std::size_t a = 0; a < sys.anchor_index.size(); ++a) {
                if (std::abs(sys.anchor_index[a] - i) > c * c) continue;
                Dist d = anchor_rows[a][static_cast<std::size_t>(
                    h->index_of(phi(pv[static_cast<std::size_t>(i)])))];
                if (d < Dist::of(c * c * c)) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                throw AssertionError("fixgeo: index " + std::to_string(i) +
                                     " has no close anchor (C^2/C^3 conclusion)");
        }
    }
    return FixgeoResult{std::move(w), std::move(sys), bound};
}

} // namespace qirw
