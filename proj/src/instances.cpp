#include "qirw/instances.hpp"

#include <algorithm>

namespace qirw {

namespace {

// Perturbs a target graph into a source: p-fold subdivision of every edge,
// then contraction of a random matching. phi follows the provenance:
// subdivision vertices to the nearer original endpoint (ties to the lower id),
// contracted vertices to their representative's image.
void perturb(Instance& inst, Rng rng, int subdivision, int contraction_pct) {
    auto sub = subdivide_edges(inst.h, inst.h->edges(), subdivision);
    std::map<int, int> phi0;
    for (int v : inst.h->vertices()) phi0[v] = v;
    for (const auto& [mid, origin] : sub.provenance)
        phi0[mid] = (2 * origin.step <= subdivision) ? origin.edge.u : origin.edge.v;

    std::vector<Edge> matching;
    std::set<int> used;
    Rng coin = rng.split("matching");
    for (const Edge& e : sub.graph->edges()) {
        if (used.count(e.u) || used.count(e.v)) continue;
        if (!coin.next_coin(static_cast<std::uint64_t>(contraction_pct), 100)) continue;
        matching.push_back(e);
        used.insert(e.u);
        used.insert(e.v);
    }
    auto contracted = contract_edges(sub.graph, matching);

    inst.g = contracted.graph;
    std::map<int, int> im;
    for (int v : inst.g->vertices()) im[v] = phi0.at(v); // v is its own representative
    inst.phi = VertexMap::make(inst.g, inst.h, std::move(im));
}

} // namespace

Instance gen_pathlike(std::uint64_t seed, int n, int subdivision, int contraction_pct) {
    if (n < 1 || subdivision < 1 || contraction_pct < 0 || contraction_pct > 100)
        throw InputError("gen_pathlike: need n >= 1, p >= 1, 0 <= q <= 100");
    Instance inst;
    inst.generator = "pathlike";
    inst.seed = seed;
    inst.params = {{"n", n}, {"p", subdivision}, {"q_pct", contraction_pct}};

    std::vector<int> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    inst.h = Graph::make(vs, es);
    inst.d.host = inst.h;
    if (n == 1) inst.d.bags.push_back({0});
    for (int i = 0; i + 1 < n; ++i) inst.d.bags.push_back({i, i + 1});

    perturb(inst, Rng(seed).split("pathlike"), subdivision, contraction_pct);
    return inst;
}

Instance gen_bounded_pw(std::uint64_t seed, int n, int k) {
    if (n < 1 || k < 1) throw InputError("gen_bounded_pw: need n >= 1, k >= 1");
    Instance inst;
    inst.generator = "bounded_pw";
    inst.seed = seed;
    inst.params = {{"n", n}, {"k", k}};

    // Sliding window: each new vertex joins the active bag, attaches to at
    // least one active vertex, and a random active vertex retires when the
    // window is full. Every vertex is active over one contiguous stretch, so
    // the recorded bags satisfy the interval property by construction.
    Rng rng = Rng(seed).split("bounded_pw");
    std::vector<int> window{0};
    std::vector<std::set<int>> bags{{0}};
    std::vector<Edge> es;
    for (int x = 1; x < n; ++x) {
        if (static_cast<int>(window.size()) == k + 1)
            window.erase(window.begin() + static_cast<std::ptrdiff_t>(
                             rng.next_below(window.size())));
        int anchor = window[rng.next_below(window.size())];
        es.emplace_back(x, anchor);
        for (int other : window)
            if (other != anchor && rng.next_coin(35, 100)) es.emplace_back(x, other);
        window.push_back(x);
        bags.emplace_back(window.begin(), window.end());
    }
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    inst.h = Graph::make(vs, es);
    inst.d.host = inst.h;
    inst.d.bags = std::move(bags);

    int p = 1 + static_cast<int>(rng.split("p").next_below(2));
    int q = rng.split("q").next_coin(1, 2) ? 20 : 0;
    inst.params["p"] = p;
    inst.params["q_pct"] = q;
    perturb(inst, Rng(seed).split("bounded_pw_perturb"), p, q);
    return inst;
}

Instance gen_comb(int m) {
    if (m < 1) throw InputError("gen_comb: need m >= 1");
    Instance inst;
    inst.generator = "comb";
    inst.params = {{"m", m}};

    auto spine_id = [m](int i) { return i + m; }; // |i| <= m  ->  0..2m
    std::vector<int> hv;
    std::vector<Edge> he;
    for (int i = -m; i <= m; ++i) hv.push_back(spine_id(i));
    for (int i = -m; i < m; ++i) he.emplace_back(spine_id(i), spine_id(i + 1));
    inst.h = Graph::make(hv, he);
    inst.d.host = inst.h;
    for (int i = -m; i < m; ++i) inst.d.bags.push_back({spine_id(i), spine_id(i + 1)});

    std::vector<int> gv = hv;
    std::vector<Edge> ge = he;
    std::map<int, int> im;
    for (int i = -m; i <= m; ++i) im[spine_id(i)] = spine_id(i);
    int next = 2 * m + 1;
    for (int j = 1; j <= m; ++j) {
        int base = next; // tooth j holds positions -j..j
        next += 2 * j + 1;
        auto tooth_id = [base, j](int i) { return base + i + j; };
        for (int i = -j; i <= j; ++i) {
            gv.push_back(tooth_id(i));
            im[tooth_id(i)] = spine_id(i);
        }
        for (int i = -j; i < j; ++i) ge.emplace_back(tooth_id(i), tooth_id(i + 1));
        for (int i = -j; i <= j; ++i) ge.emplace_back(spine_id(i), tooth_id(i)); // rungs
    }
    inst.g = Graph::make(gv, ge);
    inst.phi = VertexMap::make(inst.g, inst.h, std::move(im));
    return inst;
}

// --- oracle ---

NaiveDistances::NaiveDistances(const GraphPtr& g, const EdgeWeighting* w) : host_(g) {
    std::size_t n = g->vertex_count();
    m_.assign(n, std::vector<Dist>(n, Dist::infinity()));
    for (std::size_t i = 0; i < n; ++i) m_[i][i] = Dist::of(0);
    for (const Edge& e : g->edges()) {
        auto i = static_cast<std::size_t>(g->index_of(e.u));
        auto j = static_cast<std::size_t>(g->index_of(e.v));
        Dist we = w ? Dist::of(w->at(e)) : Dist::of(1);
        m_[i][j] = std::min(m_[i][j], we);
        m_[j][i] = m_[i][j];
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m_[i][j] = std::min(m_[i][j], m_[i][k] + m_[k][j]);
}

Dist NaiveDistances::at(int u, int v) const {
    return m_[static_cast<std::size_t>(host_->index_of(u))]
             [static_cast<std::size_t>(host_->index_of(v))];
}

std::optional<std::int64_t> naive_minimal_additive(const VertexMap& phi,
                                                   const EdgeWeighting* weights) {
    NaiveDistances dg(phi.source);
    NaiveDistances dh(phi.target, weights);
    std::int64_t need = 0;
    const auto& src = phi.source->vertices();
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            Dist a = dg.at(src[i], src[j]);
            Dist b = dh.at(phi(src[i]), phi(src[j]));
            if (a.finite() != b.finite()) return std::nullopt;
            if (a.finite()) need = std::max({need, a.value() - b.value(), b.value() - a.value()});
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

CertificationResult certify(const Instance& instance, const SynthesisReport& report) {
    CertificationResult res;
    res.weighting_size = report.weighting.size();

    if (report.weighting.host() != instance.h &&
        (report.weighting.host()->vertices() != instance.h->vertices() ||
         report.weighting.host()->edges() != instance.h->edges())) {
        res.diffs.push_back("weighting host differs from the instance target");
        return res;
    }

    auto oracle = naive_minimal_additive(instance.phi, &report.weighting);
    if (!oracle) {
        res.diffs.push_back("oracle additive constant is infinite");
        return res;
    }
    res.oracle_additive = *oracle;
    if (BigInt(*oracle) > report.c_prime)
        res.diffs.push_back("oracle additive constant " + std::to_string(*oracle) +
                            " exceeds claimed C' = " + report.c_prime.str());
    if (BigInt(report.weighting.size()) > report.w_bound)
        res.diffs.push_back("weighting size " + std::to_string(report.weighting.size()) +
                            " exceeds claimed W = " + report.w_bound.str());

    // Re-derive each serialized ledger from its inputs.
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        const auto& lv = report.levels[i];
        if (lv.base_case) continue;
        ConstantLedger redo = constants(lv.ledger.c, lv.ledger.c_rec);
        if (redo.r != lv.ledger.r || redo.c2 != lv.ledger.c2 || redo.c3 != lv.ledger.c3 ||
            redo.c0 != lv.ledger.c0)
            res.diffs.push_back("ledger at level " + std::to_string(i) +
                                " does not match its own inputs");
        if (lv.kappa != lv.ledger.c0)
            res.diffs.push_back("level " + std::to_string(i) + " kappa differs from its c0");
    }

    // Anchor certificates: representatives keep their ids through the
    // surjectivization and the pull-back preserves their pairwise distances,
    // so with an empty far set the anchor identity and the geodesity of Q
    // must survive into the final weighting verbatim.
    NaiveDistances nh(instance.h, &report.weighting);
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        const auto& lv = report.levels[i];
        if (lv.base_case || !lv.far_empty || lv.depth != 0) continue;
        bool well_formed = lv.anchor_index.size() == lv.anchor_vertex.size() &&
                           !lv.anchor_vertex.empty();
        for (std::size_t a = 0; well_formed && a + 1 < lv.anchor_index.size(); ++a)
            if (lv.anchor_index[a] >= lv.anchor_index[a + 1]) well_formed = false;
        if (!well_formed) {
            res.diffs.push_back("level " + std::to_string(i) + " anchor certificate malformed");
            continue;
        }
        bool ok = true;
        for (int r : lv.anchor_vertex)
            if (!instance.h->has_vertex(r)) ok = false;
        for (int q : lv.q_vertices)
            if (!instance.h->has_vertex(q)) ok = false;
        if (!ok) {
            res.diffs.push_back("level " + std::to_string(i) +
                                " anchor certificate names unknown vertices");
            continue;
        }
        for (std::size_t a = 0; a < lv.anchor_vertex.size() && ok; ++a) {
            for (std::size_t b = a; b < lv.anchor_vertex.size() && ok; ++b) {
                if (nh.at(lv.anchor_vertex[a], lv.anchor_vertex[b]) !=
                    Dist::of(lv.anchor_index[b] - lv.anchor_index[a]))
                    ok = false;
            }
        }
        if (!ok) {
            res.diffs.push_back("level " + std::to_string(i) + " anchor identity broken");
            continue;
        }
        // telescoping distances along Q certify it is still a w-geodesic
        std::vector<std::int64_t> prefix(lv.q_vertices.size(), 0);
        for (std::size_t k = 1; k < lv.q_vertices.size() && ok; ++k) {
            Dist step = nh.at(lv.q_vertices[k - 1], lv.q_vertices[k]);
            if (!step.finite()) {
                ok = false;
                break;
            }
            prefix[k] = prefix[k - 1] + step.value();
        }
        for (std::size_t a = 0; a < lv.q_vertices.size() && ok; ++a)
            for (std::size_t b = a; b < lv.q_vertices.size() && ok; ++b)
                if (nh.at(lv.q_vertices[a], lv.q_vertices[b]) != Dist::of(prefix[b] - prefix[a]))
                    ok = false;
        if (!ok) res.diffs.push_back("level " + std::to_string(i) + " Q geodesity broken");
    }
    if (!report.levels.empty()) {
        BigInt top = 0;
        for (const auto& lv : report.levels)
            if (lv.depth == 0) top = std::max(top, lv.kappa);
        if (top != report.c_prime)
            res.diffs.push_back("claimed C' does not match the top-level ledger");
    }

    res.pass = res.diffs.empty();
    return res;
}

} // namespace qirw
