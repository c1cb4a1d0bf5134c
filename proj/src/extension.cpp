#include "qirw/extension.hpp"

#include <algorithm>

namespace qirw {

namespace {

bool dist_le(Dist d, const BigInt& bound) {
    return d.finite() && BigInt(d.value()) <= bound;
}

// check_qi wants int64 parameters; worst-case scaffold parameters can exceed
// them, in which case the affine bound is vacuous at finite scale anyway.
std::int64_t clamp_i64(const BigInt& x) {
    static const BigInt cap = std::numeric_limits<std::int64_t>::max();
    return x > cap ? std::numeric_limits<std::int64_t>::max()
                   : static_cast<std::int64_t>(x);
}

} // namespace

ConstantLedger constants(std::int64_t c, const BigInt& c_rec) {
    if (c < 2) throw InputError("constants: need c >= 2");
    if (c_rec < 1) throw InputError("constants: need c' >= 1");
    ConstantLedger lg;
    lg.c = c;
    lg.c_rec = c_rec;
    BigInt bc = c;
    lg.r = 2 * bc * (bc + 1);
    lg.c2 = std::max<BigInt>(2 * bc + c_rec, 4 * (lg.r + 3) * bc * bc);
    lg.c3 = lg.c2 + bc * (2 * (lg.r + 2) * bc + 2) + (lg.r + 2) * bc * c_rec +
            (lg.r + 2) * bc * bc;
    lg.c0 = std::max<BigInt>(
        std::max<BigInt>((lg.r + 2) * bc * bc, (lg.r + 2) * bc * c_rec),
        std::max<BigInt>(lg.c2, 4 * bc * c_rec + 2 * bc * bc + 2 * lg.r + 2 * bc * lg.r * lg.c3));
    return lg;
}

Path find_spanning_geodesic(const VertexMap& phi, const PathDecomposition& d, std::int64_t c) {
    const GraphPtr& g = phi.source;
    const GraphPtr& h = phi.target;
    if (!g->connected() || !h->connected())
        throw InputError("find_spanning_geodesic: graphs must be connected");
    if (d.host != h) throw InputError("find_spanning_geodesic: decomposition host mismatch");
    if (d.bags.empty()) throw InputError("find_spanning_geodesic: empty decomposition");
    for (const auto& bag : d.bags)
        if (bag.empty()) throw InputError("find_spanning_geodesic: decomposition not nowhere-null");

    std::set<int> image;
    for (int v : g->vertices()) image.insert(phi(v));
    if (image.size() != h->vertex_count())
        throw InputError("find_spanning_geodesic: map is not surjective");

    int a = *d.bags.front().begin();
    int b = *d.bags.back().rbegin();
    auto row_a = dist_from(*h, a);
    auto row_b = dist_from(*h, b);
    // tightest image first, then min id: keeps the geodesic spanning as much
    // of the target as the instance allows
    int u = -1, v = -1;
    Dist best_u = Dist::infinity(), best_v = Dist::infinity();
    for (int s : g->vertices()) {
        Dist da = row_a[static_cast<std::size_t>(h->index_of(phi(s)))];
        Dist db = row_b[static_cast<std::size_t>(h->index_of(phi(s)))];
        if (da < best_u) {
            best_u = da;
            u = s;
        }
        if (db < best_v) {
            best_v = db;
            v = s;
        }
    }
    if (u < 0 || v < 0 || !(best_u <= Dist::of(c)) || !(best_v <= Dist::of(c)))
        throw InputError("find_spanning_geodesic: no source vertex lands within C of a bag end");
    auto p = shortest_path(g, u, v);
    if (!p) throw AssertionError("find_spanning_geodesic: chosen endpoints disconnected");

    // bag-distance bound, multi-source BFS from the geodesic
    std::set<int> pv(p->vertices().begin(), p->vertices().end());
    std::map<int, std::vector<int>> preimages;
    for (int s : g->vertices()) preimages[phi(s)].push_back(s);
    for (std::size_t t = 0; t < d.bags.size(); ++t) {
        std::set<int> pre;
        for (int hb : d.bags[t])
            for (int s : preimages[hb]) pre.insert(s);
        Dist best = dist_sets(*g, pv, pre);
        if (!(best <= Dist::of(c * c)))
            throw AssertionError("find_spanning_geodesic: bag " + std::to_string(t) +
                                 " farther than C^2 from the geodesic");
    }
    return *p;
}

int shortjump_check(const VertexMap& phi, const PathDecomposition& d,
                    const std::set<int>& k_vertices, int t_lo, int t, int t_hi, std::int64_t c) {
    if (t_lo > t || t > t_hi || t_lo < 0 || t_hi >= static_cast<int>(d.bags.size()))
        throw InputError("shortjump_check: need 0 <= t_lo <= t <= t_hi < bag count");
    if (d.host != phi.target) throw InputError("shortjump_check: decomposition host mismatch");
    auto k_graph = phi.source->induced(k_vertices);
    if (!k_graph->connected()) throw InputError("shortjump_check: K is not connected");

    auto in_bag = [&](int bag_idx, int src) {
        return d.bags[static_cast<std::size_t>(bag_idx)].count(phi(src)) > 0;
    };
    int x1 = -1, x2 = -1;
    for (int s : k_graph->vertices()) {
        if (x1 < 0 && in_bag(t_lo, s)) x1 = s;
        if (x2 < 0 && in_bag(t_hi, s)) x2 = s;
    }
    if (x1 < 0 || x2 < 0)
        throw InputError("shortjump_check: K misses a preimage of an end bag");

    auto path = shortest_path(k_graph, x1, x2);
    if (!path) throw AssertionError("shortjump_check: K-path not found despite connectivity");
    for (int x : path->vertices()) {
        auto row = dist_from(*phi.target, phi(x));
        for (int hb : d.bags[static_cast<std::size_t>(t)]) {
            if (row[static_cast<std::size_t>(phi.target->index_of(hb))] <= Dist::of(c - 1))
                return x;
        }
    }
    throw AssertionError("shortjump_check: no witness within C-1 of the middle bag");
}

VertexMap ExtensionScaffold::psi() const {
    return VertexMap::make(shortcut_f, h_prime, psi_image);
}

ExtensionScaffold build_scaffold(const VertexMap& phi, const Path& p, std::int64_t c,
                                 Profile profile) {
    const GraphPtr& g = phi.source;
    const GraphPtr& h = phi.target;
    if (p.host() != g) throw InputError("build_scaffold: geodesic lives in the wrong graph");
    if (c < 2) throw InputError("build_scaffold: need c >= 2");

    ExtensionScaffold sc(phi, p);
    sc.c = c;
    sc.r = 2 * BigInt(c) * (BigInt(c) + 1);

    // A = r-neighbourhood of P in G, B the rest, X its image.
    std::set<int> pv(p.vertices().begin(), p.vertices().end());
    for (int v : g->vertices()) {
        Dist dp = dist_sets(*g, {v}, pv);
        if (dist_le(dp, sc.r))
            sc.near_a.insert(v);
        else
            sc.far_b.insert(v);
    }
    for (int v : sc.far_b) sc.image_x.insert(phi(v));

    // phi(P) in H, then the Y/Z split of V(H) minus X.
    std::set<int> phi_p;
    for (int v : p.vertices()) phi_p.insert(phi(v));
    for (int hv : h->vertices()) {
        if (sc.image_x.count(hv)) continue;
        Dist dx = dist_sets(*h, {hv}, sc.image_x);
        Dist dp = dist_sets(*h, {hv}, phi_p);
        if (dx <= dp)
            sc.y_set.insert(hv);
        else
            sc.z_set.insert(hv);
    }

    std::set<int> xy = sc.image_x;
    xy.insert(sc.y_set.begin(), sc.y_set.end());
    sc.h_prime = h->induced(xy);
    for (const Edge& e : h->edges()) {
        bool u_in = xy.count(e.u) > 0, v_in = xy.count(e.v) > 0;
        if (u_in != v_in) sc.delta.push_back(e);
    }

    // far-set distance claims
    if (profile == Profile::Checked) {
        Dist dxp = dist_sets(*h, sc.image_x, phi_p);
        if (!sc.far_b.empty() && BigInt(c) * BigInt(dxp.value_or(1LL << 40)) < sc.r - c)
            throw AssertionError("build_scaffold: dist(X, phi(P)) below r/c - 1");
        for (int y : sc.y_set) {
            Dist inner = dist_sets(*sc.h_prime, {y}, sc.image_x);
            if (!dist_le(inner, (sc.r + 2) * c))
                throw AssertionError("build_scaffold: Y vertex " + std::to_string(y) +
                                     " cannot reach X within (r+2)c inside H[X u Y]");
            Dist dp = dist_sets(*h, {y}, phi_p);
            if (!(Dist::of(c) < dp) || 2 * BigInt(c) * BigInt(dp.value_or(1LL << 40)) < sc.r - c)
                throw AssertionError("build_scaffold: Y vertex " + std::to_string(y) +
                                     " too close to phi(P)");
        }
        auto h_z = h->induced(sc.z_set);
        for (int z : sc.z_set) {
            Dist inner = dist_sets(*h_z, {z}, phi_p);
            if (!dist_le(inner, (sc.r + 2) * c))
                throw AssertionError("build_scaffold: Z vertex " + std::to_string(z) +
                                     " cannot reach phi(P) within (r+2)c inside H[Z]");
            if (!sc.image_x.empty()) {
                Dist dx = dist_sets(*h, {z}, sc.image_x);
                if (2 * BigInt(c) * BigInt(dx.value_or(1LL << 40)) <= sc.r - c)
                    throw AssertionError("build_scaffold: Z vertex " + std::to_string(z) +
                                         " too close to X");
            }
        }
    }

    // shortcut graph F: G[B] plus a fresh path of length dist_G(b,b') for
    // every far pair whose images are close inside H'.
    if (!sc.far_b.empty()) {
        BigInt threshold = 2 * (sc.r + 2) * c + 1;
        std::vector<int> fv(sc.far_b.begin(), sc.far_b.end());
        std::vector<Edge> fe;
        for (const Edge& e : g->edges())
            if (sc.far_b.count(e.u) && sc.far_b.count(e.v)) fe.push_back(e);
        for (int b : sc.far_b) sc.psi_image[b] = phi(b);

        sc.fresh_base = g->max_id() + 1;
        int fresh = sc.fresh_base;
        DistanceTable hp_dist = all_pairs(sc.h_prime);
        std::vector<int> far_sorted(sc.far_b.begin(), sc.far_b.end());
        for (std::size_t i = 0; i < far_sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < far_sorted.size(); ++j) {
                int b1 = far_sorted[i], b2 = far_sorted[j];
                if (!dist_le(hp_dist.at(phi(b1), phi(b2)), threshold)) continue;
                Dist dg = dist(*g, b1, b2);
                if (!dg.finite())
                    throw AssertionError("build_scaffold: close images but disconnected sources");
                std::int64_t len = dg.value();
                if (len <= 1) continue; // the direct edge already lies in G[B]
                int prev = b1;
                for (std::int64_t s = 1; s < len; ++s) {
                    int mid = fresh++;
                    fv.push_back(mid);
                    fe.emplace_back(prev, mid);
                    sc.psi_image[mid] = (2 * s < len) ? phi(b1) : phi(b2);
                    prev = mid;
                }
                fe.emplace_back(prev, b2);
            }
        }
        sc.shortcut_f = Graph::make(fv, fe);

        if (profile == Profile::Checked) {
            // worst-case parameters of psi from the merge argument
            BigInt lw = 2 * BigInt(c) * (2 * (sc.r + 2) * c + 1);
            BigInt cw = 4 * BigInt(c) * (2 * (sc.r + 2) * c + 1);
            if (auto bad = check_qi(sc.psi(), {clamp_i64(lw), clamp_i64(cw)}))
                throw AssertionError("build_scaffold: psi misses its worst-case parameters: " +
                                     bad->describe());
        }
    } else {
        sc.shortcut_f = Graph::make({}, {});
    }
    return sc;
}

EdgeWeighting extend_weights(const ExtensionScaffold& sc, const EdgeWeighting& w1,
                             const AdditiveBounder& bounder, ConstantLedger& ledger,
                             Profile profile) {
    const GraphPtr& h = sc.phi.target;
    if (w1.host() != h) throw InputError("extend_weights: w1 lives on the wrong graph");
    if (w1.size() > sc.c)
        throw InputError("extend_weights: w1 size " + std::to_string(w1.size()) +
                         " exceeds the scaffold constant c");

    EdgeWeighting merged = w1;
    if (sc.far_empty()) {
        ledger = constants(sc.c, 1);
    } else {
        BounderResult rec = bounder(sc.psi());
        if (rec.weighting.host() != sc.h_prime)
            throw InputError("extend_weights: bounder weighting is not on H'");
        if (BigInt(rec.weighting.size()) > rec.kappa)
            throw AssertionError("extend_weights: bounder size exceeds its own kappa");
        if (profile == Profile::Checked) {
            auto psi = sc.psi();
            auto oracle = minimal_additive(psi, &rec.weighting);
            if (!oracle || BigInt(*oracle) > rec.kappa)
                throw AssertionError("extend_weights: bounder result not certified by its kappa");
        }
        ledger = constants(sc.c, std::max<BigInt>(rec.kappa, 1));

        std::int64_t c3_w = clamp_i64(ledger.c3);
        if (BigInt(c3_w) != ledger.c3)
            throw ResourceError("extend_weights: boundary weight c3 exceeds 64-bit range");
        std::map<Edge, std::int64_t> w;
        for (const Edge& e : h->edges()) w.emplace(e, w1.at(e)); // H[Z] keeps w1
        for (const Edge& e : sc.h_prime->edges()) w[e] = rec.weighting.at(e);
        for (const Edge& e : sc.delta) w[e] = c3_w;
        merged = EdgeWeighting::make(h, w);
    }
    if (BigInt(merged.size()) > ledger.c3)
        throw AssertionError("extend_weights: merged size exceeds c3");

    if (profile == Profile::Checked) {
        const GraphPtr& g = sc.phi.source;
        DistanceTable dg = all_pairs(g);
        DistanceTable dw = all_pairs(merged);
        const auto& pv = sc.p.vertices();
        BigInt c = ledger.c;
        // (5) along the geodesic
        for (std::size_t i = 0; i < pv.size(); ++i) {
            for (std::size_t j = i; j < pv.size(); ++j) {
                if (!dist_le(dw.at(sc.phi(pv[i]), sc.phi(pv[j])),
                             BigInt(j - i) + 2 * c * c))
                    throw AssertionError("extend_weights: claim (5) fails at geodesic pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
        // (6) upper bound for all source pairs
        BigInt slack6 = 4 * c * ledger.c_rec + 2 * c * c + 2 * ledger.r + 2 * c * ledger.r * ledger.c3;
        // (8) lower bound for all source pairs
        for (int u : g->vertices()) {
            for (int v : g->vertices()) {
                Dist a = dw.at(sc.phi(u), sc.phi(v));
                Dist b = dg.at(u, v);
                if (b.finite() && !dist_le(a, BigInt(b.value()) + slack6))
                    throw AssertionError("extend_weights: claim (6) fails at (" +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
                if (a.finite() && !dist_le(b, BigInt(a.value()) + ledger.c2))
                    throw AssertionError("extend_weights: claim (8) fails at (" +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
        // (7) within H[Z]
        {
            auto h_z = h->induced(sc.z_set);
            std::map<Edge, std::int64_t> wz;
            for (const Edge& e : h_z->edges()) wz.emplace(e, merged.at(e));
            auto w_on_z = EdgeWeighting::make(h_z, wz);
            DistanceTable dz = all_pairs(w_on_z);
            BigInt slack7 = 4 * (ledger.r + 3) * c * c;
            for (int u : g->vertices()) {
                if (!sc.z_set.count(sc.phi(u))) continue;
                for (int v : g->vertices()) {
                    if (!sc.z_set.count(sc.phi(v))) continue;
                    Dist t = dz.at(sc.phi(u), sc.phi(v));
                    if (t.finite() && !dist_le(dg.at(u, v), BigInt(t.value()) + slack7))
                        throw AssertionError("extend_weights: claim (7) fails at (" +
                                             std::to_string(u) + "," + std::to_string(v) + ")");
                }
            }
        }
        // (9) weighted density
        BigInt dens = (ledger.r + 2) * c * std::max<BigInt>(c, ledger.c_rec);
        for (int y : h->vertices()) {
            Dist best = Dist::infinity();
            for (int u : g->vertices()) best = std::min(best, dw.at(sc.phi(u), y));
            if (!dist_le(best, dens))
                throw AssertionError("extend_weights: claim (9) fails at target vertex " +
                                     std::to_string(y));
        }
        // final certification at (1, c0)
        auto oracle = minimal_additive(sc.phi, &merged);
        if (!oracle || BigInt(*oracle) > ledger.c0)
            throw AssertionError("extend_weights: final (1, c0) certification failed");
    }
    return merged;
}

// --- synthesis driver ---

namespace {

struct LevelOutcome {
    EdgeWeighting weighting; // on the level's entry target graph
    BigInt kappa;            // bounds both the additive constant and the size
    BigInt size_bound;
};

LevelOutcome run_level(const VertexMap& phi, const PathDecomposition& d, int depth,
                       int component, const SynthesisOptions& opts,
                       std::vector<LevelReport>& levels, std::vector<std::string>& events);

// Handles (possibly disconnected) inputs by pairing source components with
// target components; a genuine quasi-isometry induces a bijection.
LevelOutcome run_driver(const VertexMap& phi, const PathDecomposition& d, int depth,
                        const SynthesisOptions& opts, std::vector<LevelReport>& levels,
                        std::vector<std::string>& events) {
    auto g_comps = phi.source->components();
    auto h_comps = phi.target->components();
    if (g_comps.size() <= 1 && h_comps.size() <= 1)
        return run_level(phi, d, depth, 0, opts, levels, events);

    std::map<int, std::size_t> h_comp_of; // target vertex -> component index
    for (std::size_t i = 0; i < h_comps.size(); ++i)
        for (int v : h_comps[i]) h_comp_of[v] = i;

    std::vector<std::set<int>> g_parts(h_comps.size());
    for (const auto& gc : g_comps) {
        std::set<std::size_t> hit;
        for (int v : gc) hit.insert(h_comp_of.at(phi(v)));
        if (hit.size() != 1)
            throw InputError("synthesize: a source component maps into several target components");
        g_parts[*hit.begin()].insert(gc.begin(), gc.end());
    }

    std::map<Edge, std::int64_t> w_all;
    BigInt kappa = 0, size_bound = 0;
    for (std::size_t i = 0; i < h_comps.size(); ++i) {
        if (g_parts[i].empty())
            throw InputError("synthesize: target component without preimage (image not dense)");
        auto g_sub = phi.source->induced(g_parts[i]);
        // a genuine quasi-isometry cannot merge two source components here
        if (!g_sub->connected())
            throw InputError("synthesize: two source components share a target component");
        std::set<int> h_keep(h_comps[i].begin(), h_comps[i].end());
        auto h_sub = phi.target->induced(h_keep);
        std::map<int, int> im;
        for (int v : g_parts[i]) im[v] = phi(v);
        auto phi_sub = VertexMap::make(g_sub, h_sub, std::move(im));
        auto d_sub = normalize_nowhere_null(restrict_decomposition(d, h_keep));
        d_sub.host = h_sub;
        auto out = run_level(phi_sub, d_sub, depth, static_cast<int>(i), opts, levels, events);
        for (const auto& [e, wt] : out.weighting.weights()) w_all.emplace(e, wt);
        kappa = std::max(kappa, out.kappa);
        size_bound = std::max(size_bound, out.size_bound);
    }
    return LevelOutcome{EdgeWeighting::make(phi.target, w_all), kappa, size_bound};
}

LevelOutcome run_level(const VertexMap& phi, const PathDecomposition& d, int depth,
                       int component, const SynthesisOptions& opts,
                       std::vector<LevelReport>& levels, std::vector<std::string>& events) {
    LevelReport rep;
    rep.depth = depth;
    rep.component = component;
    rep.g_vertices = phi.source->vertex_count();
    rep.h_vertices = phi.target->vertex_count();
    rep.width = d.width();

    auto c_meas = measure_params(phi);
    if (!c_meas) throw InputError("synthesize: the given map is not a quasi-isometry");
    rep.measured_c = *c_meas;

    auto sur = surjectivize(phi, d, *c_meas);
    auto c1_meas = measure_params(sur.phi1);
    if (!c1_meas)
        throw AssertionError("synthesize: surjectivized map lost the quasi-isometry property");
    rep.claimed_after_surjectivize = *c_meas;
    rep.conservative_l_after_surjectivize = (*c_meas - 1) * (2 * *c_meas + 1);
    rep.surjective_c = *c1_meas;
    if (*c1_meas > *c_meas)
        events.push_back("level " + std::to_string(depth) +
                         ": surjectivization raised the measured constant from " +
                         std::to_string(*c_meas) + " to " + std::to_string(*c1_meas));
    std::int64_t c1 = std::max<std::int64_t>(*c1_meas, 2);

    PathDecomposition d1 = normalize_nowhere_null(sur.d1);

    LevelOutcome out{EdgeWeighting::zero(phi.target), 0, 0};
    if (sur.h1->edge_count() == 0) {
        // connected and edgeless: a single vertex; the deficit is exactly the
        // source diameter.
        rep.base_case = true;
        EdgeWeighting w1 = EdgeWeighting::zero(sur.h1);
        auto base = minimal_additive(sur.phi1, &w1);
        if (!base) throw AssertionError("synthesize: base case has infinite deficit");
        rep.kappa = *base;
        out.weighting = pull_back_weights(w1, phi, sur.phi1, sur.assignment);
        out.kappa = *base;
        out.size_bound = 0;
        levels.push_back(rep);
        return out;
    }

    Path p = find_spanning_geodesic(sur.phi1, d1, c1);

    std::int64_t fix_c = c1;
    std::optional<FixgeoResult> fix;
    try {
        fix = fixgeo(sur.phi1, p, fix_c, opts.profile);
    } catch (const AssertionError& e) {
        if (c1 <= 3) {
            events.push_back("level " + std::to_string(depth) + ": fixgeo retried at C=4 (" +
                             e.what() + ")");
            fix_c = 4;
            fix = fixgeo(sur.phi1, p, fix_c, opts.profile);
        } else {
            throw;
        }
    }
    rep.fixgeo_c_used = static_cast<int>(fix_c);
    rep.w1_size = fix->weighting.size();
    rep.anchor_index = fix->anchors.anchor_index;
    rep.anchor_vertex = fix->anchors.anchor_vertex;
    rep.q_vertices = fix->anchors.q.vertices();

    std::int64_t big_d = c1 * c1;
    std::int64_t c = std::max(32 * fix_c * fix_c * fix_c * fix_c, c1 * big_d + c1);
    rep.usegeo_c = c;

    auto scaffold = build_scaffold(sur.phi1, p, c, opts.profile);
    rep.far_empty = scaffold.far_empty();
    rep.shortcut_fresh_base = scaffold.fresh_base;

    ConstantLedger ledger;
    AdditiveBounder bounder = [&](const VertexMap& psi) -> BounderResult {
        // width must strictly drop before recursing
        std::set<int> near;
        std::set<int> phi_p;
        for (int v : p.vertices()) phi_p.insert(sur.phi1(v));
        for (int hv : sur.h1->vertices())
            if (dist_le(dist_sets(*sur.h1, {hv}, phi_p), BigInt(c))) near.insert(hv);
        if (!width_drop_check(d1, near))
            throw AssertionError("synthesize: some bag misses the near set; width cannot drop");
        std::set<int> xy(scaffold.h_prime->vertices().begin(),
                         scaffold.h_prime->vertices().end());
        auto d_far = normalize_nowhere_null(restrict_decomposition(d1, xy));
        d_far.host = scaffold.h_prime;
        if (d_far.width() >= d1.width())
            throw AssertionError("synthesize: recursion width did not decrease");
        auto sub = run_driver(psi, d_far, depth + 1, opts, levels, events);
        return BounderResult{std::move(sub.weighting), std::max(sub.kappa, sub.size_bound)};
    };
    EdgeWeighting w_level = extend_weights(scaffold, fix->weighting, bounder, ledger,
                                           opts.profile);
    rep.ledger = ledger;
    rep.kappa = ledger.c0;
    levels.push_back(rep);

    out.weighting = pull_back_weights(w_level, phi, sur.phi1, sur.assignment);
    out.kappa = ledger.c0;
    out.size_bound = ledger.c3;
    return out;
}

} // namespace

SynthesisReport synthesize(const VertexMap& phi, const PathDecomposition& d,
                           const SynthesisOptions& options) {
    if (!phi.source->connected() || !phi.target->connected())
        throw InputError("synthesize: source and target must be connected");
    if (d.host != phi.target) throw InputError("synthesize: decomposition host mismatch");
    if (auto viol = validate(d); !viol.empty())
        throw InputError("synthesize: invalid decomposition: " + viol.front().describe());

    SynthesisReport report{EdgeWeighting::zero(phi.target), 0, 0, -1, false, {}, {}};
    auto out = run_driver(phi, d, 0, options, report.levels, report.events);
    report.weighting = std::move(out.weighting);
    report.c_prime = out.kappa;
    report.w_bound = out.size_bound;
    auto oracle = minimal_additive(phi, &report.weighting);
    if (!oracle)
        throw AssertionError("synthesize: final weighting has an infinite deficit");
    report.oracle_additive = *oracle;
    report.certified = BigInt(*oracle) <= report.c_prime &&
                       BigInt(report.weighting.size()) <= std::max<BigInt>(report.w_bound, 0);
    return report;
}

} // namespace qirw
