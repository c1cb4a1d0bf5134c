#pragma once

#include <cstdint>
#include <string>

#include "qirw/extension.hpp"
#include "qirw/rng.hpp"

namespace qirw {

// Generated problem instance with enough provenance to regenerate it
// bit-identically.
struct Instance {
    GraphPtr g;
    GraphPtr h;
    PathDecomposition d;
    VertexMap phi;
    std::string generator;
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> params;
};

// Path target subdivided p-fold and contracted along a random matching
// (density in percent); phi follows the provenance.
Instance gen_pathlike(std::uint64_t seed, int n, int subdivision, int contraction_pct);

// Sliding-window target of width <= k, perturbed the same way.
Instance gen_bounded_pw(std::uint64_t seed, int n, int k);

// Finite truncation of the comb: spine v_i (|i| <= m) with teeth of length 2j
// running parallel to it, rung edges v_i - q_j^i wherever tooth j reaches
// position i. The target is the spine path with consecutive-pair bags.
Instance gen_comb(int m);

// --- independent certification oracle ---
// Deliberately a second implementation: Floyd-Warshall over an id-indexed
// matrix, sharing no code with the BFS/Dijkstra engines the pipeline uses.

class NaiveDistances {
public:
    explicit NaiveDistances(const GraphPtr& g, const EdgeWeighting* w = nullptr);
    Dist at(int u, int v) const;

private:
    GraphPtr host_;
    std::vector<std::vector<Dist>> m_;
};

std::optional<std::int64_t> naive_minimal_additive(const VertexMap& phi,
                                                   const EdgeWeighting* weights);

struct CertificationResult {
    bool pass = false;
    std::int64_t oracle_additive = -1;
    std::int64_t weighting_size = 0;
    std::vector<std::string> diffs;
};

// Recomputes the additive constant from scratch, checks it against the
// report's claimed constant, checks the claimed size bound, and re-derives
// every ledger in the report from its (c, c') inputs.
CertificationResult certify(const Instance& instance, const SynthesisReport& report);

} // namespace qirw
