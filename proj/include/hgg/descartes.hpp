#pragma once

// Explicit girth boosting: the recursive construction that attaches
// hypergraph-indexed copies of a smaller gadget through matchings,
// raising girth to any target while preserving the chromatic number,
// plus the generation and exact verification of the required uniform
// hypergraphs with high girth and high weak chromatic number.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgg/graph.hpp"
#include "hgg/solver.hpp"

namespace hgg {

struct Hypergraph {
    int vertex_count = 0;
    int r = 0;                               // uniformity
    std::vector<std::vector<int>> edges;     // each sorted, size r, distinct

    void validate() const;                   // throws parameter_error
};

// Incidence graph: vertices 0..n-1, then one node per edge.
Graph incidence_graph(const Hypergraph& H);

// Hypergraph cycles (F_1..F_l distinct edges, v_i in F_i cap F_{i+1}
// distinct, l >= 2) correspond exactly to cycles of length 2l in the
// incidence graph, so the girth is half the incidence-graph girth.
// nullopt = no cycle.
std::optional<int> hypergraph_girth(const Hypergraph& H);

// Weak chromatic number: minimum colours with no edge monochromatic.
// Exact: delegates to the graph solver for r = 2, otherwise backtracking
// over colour classes.  Budget: HGG_HYPER_CHI_VERTICES (default 64).
int hypergraph_chromatic(const Hypergraph& H);

struct HypergraphGenMeta {
    std::uint64_t seed_used = 0;
    int attempts = 0;
    int n_used = 0;
    int chromatic = 0;
};

// r-uniform hypergraph with girth >= g and weak chromatic number >= k+1,
// by a seeded random greedy process (candidate edges drawn uniformly,
// kept only if no cycle shorter than g appears) with both properties
// verified exactly before returning.  Retries bump the seed and grow n;
// errors with resource_error when the schedule is exhausted.
Hypergraph generate_hypergraph(int r, int k, int g, std::uint64_t seed,
                               HypergraphGenMeta* meta = nullptr);

struct DescartesLevel {
    int pivot = 0;               // vertex added at this level
    int uniformity = 0;          // |h^{-1}(N(pivot))| in the previous gadget
    Hypergraph H;
    std::uint64_t h_seed = 0;
    bool degenerate = false;     // pivot had no neighbors below it
    std::vector<int> preimage;   // sorted h^{-1}(N(pivot)), previous-level ids
    std::vector<int> u_ids;      // ids of U in this level's gadget
    std::vector<int> copy_start; // per hyperedge: first id of its copy block
    int copy_size = 0;           // |V(previous gadget)|
    std::vector<std::vector<std::pair<int, int>>> matchings; // per edge: (u_id, copy id)
};

struct DescartesResult {
    Graph base;                  // input graph
    Graph gprime;
    Homomorphism hom;            // gprime -> base, surjective
    std::vector<DescartesLevel> trace; // level t adds vertex t+2
    int target_girth = 0;
    int k = 0;
};

// Builds (G', h) with girth(G') >= g and a surjective homomorphism onto
// g0 such that every proper k-colouring of G' transfers to one of g0.
// Pivot order: largest vertex id.  Matchings: sorted-to-sorted.
DescartesResult descartes_boost(const Graph& g0, int g, int k, std::uint64_t seed);

// The constructive descent: restrict to U, find a monochromatic
// hyperedge, recurse into its copy, extend by the pivot's colour.
// Output satisfies c(v) in c'(h^{-1}(v)) for every base vertex v.
Colouring color_transfer(const DescartesResult& result, const Colouring& cprime);

nlohmann::json hypergraph_to_json(const Hypergraph& H);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const DescartesResult& r);

} // namespace hgg
