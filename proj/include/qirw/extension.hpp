#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "qirw/anchor.hpp"
#include "qirw/path_decomposition.hpp"
#include "qirw/profile.hpp"
#include "qirw/quasi_isometry.hpp"

namespace qirw {

// Ledger constants blow past 64 bits already at measured C = 2 (c0 ~ 5e20),
// so everything derived from c is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

struct ConstantLedger {
    std::int64_t c = 0;
    BigInt c_rec; // c' = max(kappa, 1)
    BigInt r, c2, c3, c0;
};

// Exact integer evaluation of the four displayed formulas.
ConstantLedger constants(std::int64_t c, const BigInt& c_rec);

// Geodesic of the source whose distance to every bag preimage is at most C^2.
// Requires connected graphs, a surjective verified (C-1,C)-quasi-isometry and
// a nowhere-null decomposition; the bag-distance bound is asserted.
Path find_spanning_geodesic(const VertexMap& phi, const PathDecomposition& d, std::int64_t c);

// Witness search mirroring the separator-crossing argument: a vertex x of the
// connected subgraph induced on k_vertices with dist_H(phi(x), B_t) <= C-1.
// Test oracle only; not used by the synthesis pipeline.
int shortjump_check(const VertexMap& phi, const PathDecomposition& d,
                    const std::set<int>& k_vertices, int t_lo, int t, int t_hi, std::int64_t c);

// Far/near partition of the source, its image split of the target, the
// boundary edge set and the shortcut graph for the recursion.
struct ExtensionScaffold {
    ExtensionScaffold(VertexMap phi_, Path p_) : phi(std::move(phi_)), p(std::move(p_)) {}

    VertexMap phi;
    Path p;
    std::int64_t c = 0;            // the usegeo constant this scaffold was built with
    BigInt r;                      // 2c(c+1)
    std::set<int> near_a, far_b;   // A, B subset of V(G)
    std::set<int> image_x, y_set, z_set; // X, Y, Z subset of V(H)
    std::vector<Edge> delta;       // edges between X u Y and Z
    GraphPtr h_prime;              // H[X u Y]
    GraphPtr shortcut_f;           // G[B] plus fresh shortcut paths
    std::map<int, int> psi_image;  // V(F) -> V(H'); empty when far_b is empty
    int fresh_base = -1;           // first fresh shortcut vertex id
    VertexMap psi() const;         // F -> H'

    bool far_empty() const { return far_b.empty(); }
};

// Distance sweeps for A/B/X/Y/Z/Delta and the shortcut graph; asserts the
// far-set distance claims and, in the checked profile, the worst-case
// quasi-isometry parameters of psi.
ExtensionScaffold build_scaffold(const VertexMap& phi, const Path& p, std::int64_t c,
                                 Profile profile = Profile::Checked);

// Contract of the recursive step: given psi (F -> H'), produce a weighting of
// H' plus the bound kappa that caps both its size and the achieved additive
// constant.
struct BounderResult {
    EdgeWeighting weighting;
    BigInt kappa;
};
using AdditiveBounder = std::function<BounderResult(const VertexMap& psi)>;

// Merge of the recursive weighting (on H'), the anchor weighting w1 (on H[Z])
// and the boundary value c3 (on Delta). In the checked profile every numbered
// distance claim of the merge argument is asserted, ending with the final
// (1, c0) certification of phi.
EdgeWeighting extend_weights(const ExtensionScaffold& scaffold, const EdgeWeighting& w1,
                             const AdditiveBounder& bounder, ConstantLedger& ledger,
                             Profile profile = Profile::Checked);

// --- top-level driver ---

struct LevelReport {
    int depth = 0;
    int component = 0;
    std::size_t g_vertices = 0, h_vertices = 0;
    int width = -1;
    std::int64_t measured_c = 0;     // entry map, (C-1,C) form
    // The contraction step admits two readings of the surviving constants:
    // the proof line keeps (C-1, C); the floor-device statement only yields
    // multiplicative (C-1)(2C+1). Both are recorded; the pipeline proceeds
    // with the re-measured value.
    std::int64_t claimed_after_surjectivize = 0;
    std::int64_t conservative_l_after_surjectivize = 0;
    std::int64_t surjective_c = 0;   // re-measured after surjectivization
    int shortcut_fresh_base = -1;    // first fresh id of the shortcut graph, if any
    std::int64_t usegeo_c = 0;       // c = max(32 C^4, C D + C)
    int fixgeo_c_used = 0;           // anchor construction constant (retry may raise it)
    std::int64_t w1_size = 0;        // achieved anchor weighting size
    bool base_case = false;
    bool far_empty = true;
    ConstantLedger ledger;
    BigInt kappa; // bound returned by this level
    // Anchor certificate. The anchors live on the surjectivized target, whose
    // representatives keep their original ids, and the pull-back preserves
    // representative-pair distances exactly; so with an empty far set the
    // identity wdist(r_i, r_j) = j - i is checkable against the final
    // weighting by anyone holding this report.
    std::vector<int> anchor_index;
    std::vector<int> anchor_vertex;
    std::vector<int> q_vertices;
};

struct SynthesisReport {
    EdgeWeighting weighting;         // on the input target graph
    BigInt c_prime;                  // claimed additive constant
    BigInt w_bound;                  // claimed size bound
    std::int64_t oracle_additive = -1; // minimal_additive recomputed on the result
    bool certified = false;
    std::vector<LevelReport> levels;
    std::vector<std::string> events;
};

struct SynthesisOptions {
    Profile profile = Profile::Checked;
};

// Full pipeline: measure, surjectivize, spanning geodesic, anchor weighting,
// far-set recursion, pull-back. Requires connected source and target.
SynthesisReport synthesize(const VertexMap& phi, const PathDecomposition& d,
                           const SynthesisOptions& options = {});

} // namespace qirw
