#include "qirw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qirw {

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError("expected an integer or decimal string");
}

json big_to_json(const BigInt& x) { return x.str(); }

} // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

GraphPtr graph_from_json(const json& j) {
    std::vector<int> vs;
    for (const auto& v : require(j, "vertices")) vs.push_back(v.get<int>());
    std::vector<Edge> es;
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::make(vs, es);
}

json weighting_to_json(const EdgeWeighting& w) {
    json rows = json::array();
    for (const auto& [e, wt] : w.weights()) rows.push_back({e.u, e.v, wt});
    return {{"weights", rows}};
}

EdgeWeighting weighting_from_json(GraphPtr host, const json& j) {
    std::map<Edge, std::int64_t> w;
    for (const auto& row : require(j, "weights")) {
        if (!row.is_array() || row.size() != 3)
            throw InputError("weight entry must be [u, v, w]");
        w.emplace(Edge(row[0].get<int>(), row[1].get<int>()), row[2].get<std::int64_t>());
    }
    return EdgeWeighting::make(std::move(host), w);
}

json decomposition_to_json(const PathDecomposition& d) {
    json bags = json::array();
    for (const auto& bag : d.bags) bags.push_back(std::vector<int>(bag.begin(), bag.end()));
    return {{"bags", bags}};
}

PathDecomposition decomposition_from_json(GraphPtr host, const json& j) {
    PathDecomposition d{std::move(host), {}};
    for (const auto& bag : require(j, "bags")) {
        std::set<int> b;
        for (const auto& v : bag) b.insert(v.get<int>());
        d.bags.push_back(std::move(b));
    }
    return d;
}

json vertex_map_to_json(const VertexMap& m) {
    json rows = json::array();
    for (const auto& [u, v] : m.image) rows.push_back({u, v});
    return {{"map", rows}};
}

VertexMap vertex_map_from_json(GraphPtr source, GraphPtr target, const json& j) {
    std::map<int, int> im;
    for (const auto& row : require(j, "map")) {
        if (!row.is_array() || row.size() != 2) throw InputError("map entry must be [g, h]");
        im[row[0].get<int>()] = row[1].get<int>();
    }
    return VertexMap::make(std::move(source), std::move(target), std::move(im));
}

json instance_to_json(const Instance& inst) {
    return {{"g", graph_to_json(*inst.g)},
            {"h", graph_to_json(*inst.h)},
            {"d", decomposition_to_json(inst.d)},
            {"phi", vertex_map_to_json(inst.phi)},
            {"provenance",
             {{"generator", inst.generator}, {"seed", inst.seed}, {"params", inst.params}}}};
}

Instance instance_from_json(const json& j) {
    Instance inst;
    inst.g = graph_from_json(require(j, "g"));
    inst.h = graph_from_json(require(j, "h"));
    inst.d = decomposition_from_json(inst.h, require(j, "d"));
    inst.phi = vertex_map_from_json(inst.g, inst.h, require(j, "phi"));
    if (j.contains("provenance")) {
        const auto& p = j.at("provenance");
        inst.generator = p.value("generator", "");
        inst.seed = p.value("seed", std::uint64_t{0});
        if (p.contains("params"))
            for (const auto& [k, v] : p.at("params").items())
                inst.params[k] = v.get<std::int64_t>();
    }
    return inst;
}

namespace {

json ledger_to_json(const ConstantLedger& lg) {
    return {{"c", lg.c},           {"c_rec", big_to_json(lg.c_rec)}, {"r", big_to_json(lg.r)},
            {"c2", big_to_json(lg.c2)}, {"c3", big_to_json(lg.c3)},  {"c0", big_to_json(lg.c0)}};
}

ConstantLedger ledger_from_json(const json& j) {
    ConstantLedger lg;
    lg.c = require(j, "c").get<std::int64_t>();
    lg.c_rec = big_from_json(require(j, "c_rec"));
    lg.r = big_from_json(require(j, "r"));
    lg.c2 = big_from_json(require(j, "c2"));
    lg.c3 = big_from_json(require(j, "c3"));
    lg.c0 = big_from_json(require(j, "c0"));
    return lg;
}

} // namespace

json report_to_json(const SynthesisReport& r) {
    json levels = json::array();
    for (const auto& lv : r.levels) {
        levels.push_back({{"depth", lv.depth},
                          {"component", lv.component},
                          {"g_vertices", lv.g_vertices},
                          {"h_vertices", lv.h_vertices},
                          {"width", lv.width},
                          {"measured_c", lv.measured_c},
                          {"claimed_after_surjectivize", lv.claimed_after_surjectivize},
                          {"conservative_l_after_surjectivize",
                           lv.conservative_l_after_surjectivize},
                          {"surjective_c", lv.surjective_c},
                          {"shortcut_fresh_base", lv.shortcut_fresh_base},
                          {"usegeo_c", lv.usegeo_c},
                          {"fixgeo_c_used", lv.fixgeo_c_used},
                          {"w1_size", lv.w1_size},
                          {"base_case", lv.base_case},
                          {"far_empty", lv.far_empty},
                          {"ledger", ledger_to_json(lv.ledger)},
                          {"kappa", big_to_json(lv.kappa)},
                          {"anchor_index", lv.anchor_index},
                          {"anchor_vertex", lv.anchor_vertex},
                          {"q_vertices", lv.q_vertices}});
    }
    return {{"weighting", weighting_to_json(r.weighting)},
            {"c_prime", big_to_json(r.c_prime)},
            {"w_bound", big_to_json(r.w_bound)},
            {"oracle_additive", r.oracle_additive},
            {"certified", r.certified},
            {"levels", levels},
            {"events", r.events}};
}

SynthesisReport report_from_json(GraphPtr target, const json& j) {
    SynthesisReport r{weighting_from_json(std::move(target), require(j, "weighting")),
                      big_from_json(require(j, "c_prime")),
                      big_from_json(require(j, "w_bound")),
                      require(j, "oracle_additive").get<std::int64_t>(),
                      require(j, "certified").get<bool>(),
                      {},
                      {}};
    for (const auto& lj : require(j, "levels")) {
        LevelReport lv;
        lv.depth = require(lj, "depth").get<int>();
        lv.component = lj.value("component", 0);
        lv.g_vertices = lj.value("g_vertices", std::size_t{0});
        lv.h_vertices = lj.value("h_vertices", std::size_t{0});
        lv.width = lj.value("width", -1);
        lv.measured_c = lj.value("measured_c", std::int64_t{0});
        lv.claimed_after_surjectivize = lj.value("claimed_after_surjectivize", std::int64_t{0});
        lv.conservative_l_after_surjectivize =
            lj.value("conservative_l_after_surjectivize", std::int64_t{0});
        lv.surjective_c = lj.value("surjective_c", std::int64_t{0});
        lv.shortcut_fresh_base = lj.value("shortcut_fresh_base", -1);
        lv.usegeo_c = lj.value("usegeo_c", std::int64_t{0});
        lv.fixgeo_c_used = lj.value("fixgeo_c_used", 0);
        lv.w1_size = lj.value("w1_size", std::int64_t{0});
        lv.base_case = lj.value("base_case", false);
        lv.far_empty = lj.value("far_empty", true);
        if (!lv.base_case) lv.ledger = ledger_from_json(require(lj, "ledger"));
        lv.kappa = big_from_json(require(lj, "kappa"));
        if (lj.contains("anchor_index")) {
            for (const auto& x : lj.at("anchor_index")) lv.anchor_index.push_back(x.get<int>());
            for (const auto& x : lj.at("anchor_vertex")) lv.anchor_vertex.push_back(x.get<int>());
            for (const auto& x : lj.at("q_vertices")) lv.q_vertices.push_back(x.get<int>());
        }
        r.levels.push_back(std::move(lv));
    }
    if (j.contains("events"))
        for (const auto& e : j.at("events")) r.events.push_back(e.get<std::string>());
    return r;
}

json certification_to_json(const CertificationResult& r) {
    return {{"verdict", r.pass ? "PASS" : "FAIL"},
            {"oracle_additive", r.oracle_additive},
            {"weighting_size", r.weighting_size},
            {"diffs", r.diffs}};
}

std::string weighting_to_dot(const EdgeWeighting& w) {
    std::ostringstream os;
    os << "graph {\n";
    for (int v : w.host()->vertices()) os << "  " << v << ";\n";
    for (const auto& [e, wt] : w.weights())
        os << "  " << e.u << " -- " << e.v << " [label=\"" << wt << "\"];\n";
    os << "}\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what()); // message carries line/column
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qirw
