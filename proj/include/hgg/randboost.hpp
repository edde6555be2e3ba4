#pragma once

// Probabilistic girth boosting: seeded edge subsampling of a blow-up,
// deterministic short-cycle pruning, supersaturation checking, and a
// retry loop certified by an exact chromatic oracle.
//
// Randomness is counter-based: each edge draws one 64-bit word from a
// splitmix64 stream keyed by (seed, i*n+j), so subsampling is
// order-independent, reproducible, and monotone-coupled across
// thresholds (q1 <= q2 with the same seed keeps a subset of edges).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hgg/exactmath.hpp"
#include "hgg/graph.hpp"
#include "hgg/solver.hpp"

namespace hgg {

struct BoostParams {
    int target_girth = 4;          // g: no surviving cycle of length <= g
    int m = 1;                     // blow-up size
    Rational q = 1;                // edge-keep probability, exact
    std::uint64_t seed = 0;
    int max_retries = 16;
};

// Rational within 2^-32 of n^{-(1-1/(2g))}, by integer root extraction.
// This is the asymptotic choice from the analysis, not a desk-scale
// mandate; small instances usually want a hand-tuned q.
Rational paper_q(const BigInt& n, int g);

std::uint64_t splitmix64(std::uint64_t x);

// Each edge kept independently iff its 64-bit draw is below floor(q*2^64).
Graph subsample_edges(const Graph& g0, const Rational& q, std::uint64_t seed);

// Repeatedly removes the lexicographically least edge of the
// lexicographically least shortest-cycle witness until no cycle of
// length <= g remains.
Graph prune_short_cycles(const Graph& g0, int g);

struct SupersatReport {
    bool pass = false;
    std::string message;
    int base_u = -1, base_v = -1;      // violating base edge, if any
    std::vector<int> W, U;             // violating m'-subsets, if any
    long long subsets_checked = 0;
};

// For every base edge {u,v}: every pair of m'-subsets of the two parts
// must span at least one surviving edge.  Equivalently the bipartite
// complement between the parts contains no K_{m',m'}; checked by common-
// non-neighbor intersection over all m'-subsets of one side.
SupersatReport check_supersaturation(const Blowup& gb, const Graph& base, int m_prime);

using ChiOracle = std::function<int(const Graph&)>;

struct BoostAttempt {
    std::uint64_t seed = 0;
    int kept_edges = 0;
    int pruned_edges = 0;
    int chi = 0;
};

struct BoostResult {
    bool success = false;
    Graph graph;                   // subgraph of blowup_graph(base, m)
    Blowup blowup;                 // part structure for projections
    int retries_used = 0;          // offset of the successful seed
    std::uint64_t seed_used = 0;
    int chi = 0;                   // == chi(base) on success
    std::vector<BoostAttempt> attempts;
};

// Retries seeds seed, seed+1, ... until the pruned subsample has no cycle
// of length <= g and chromatic number exactly chi(base).
BoostResult boost_girth_random(const Graph& base, const BoostParams& params,
                               const ChiOracle& chi = {});

// (nq)^l / 2 for l = 3..max_len.
std::map<int, Rational> expected_cycle_bound(const BigInt& n, const Rational& q,
                                             int max_len);

} // namespace hgg
