#pragma once

// Exact chromatic number and colouring verification at desk scale.
// Branch-and-bound with DSATUR ordering, greedy upper bound, clique lower
// bound, low-degree peeling and per-component solving.  Deterministic:
// fixed tie-breaking by vertex id, single-threaded search.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgg/graph.hpp"

namespace hgg {

struct Colouring {
    int k = 0;                    // colours are 1..k
    std::vector<int> assignment;  // per vertex
};

struct ProperReport {
    bool ok = false;
    std::string message;
    std::pair<int, int> violating_edge{-1, -1};
};

ProperReport verify_proper(const Graph& g, const Colouring& c);

struct ChiBudget {
    long long max_nodes = -1;     // -1: use HGG_CHI_NODE_BUDGET (default 2e8)
    int max_n = 100'000;
};

struct ChiResult {
    int chromatic_number = 0;
    Colouring witness;
    long long nodes_used = 0;
};

// Exact chromatic number with a witness using exactly that many colours.
// Throws resource_error (message carries the [lb, ub] bracket found so
// far) if the node budget runs out.
ChiResult exact_chromatic(const Graph& g, ChiBudget budget = {});

// Is g properly colourable with at most k colours?  Fills witness if so.
bool k_colorable(const Graph& g, int k, Colouring* witness = nullptr,
                 ChiBudget budget = {});

struct MisBudget {
    long long max_nodes = -1;     // -1: use HGG_MIS_NODE_BUDGET (default 2e8)
};

struct MisResult {
    int size = 0;
    std::vector<int> witness;
    bool exact = true;            // false if the budget cut the search short
    long long nodes_used = 0;
};

MisResult max_independent_set(const Graph& g, MisBudget budget = {});

// Majority-colour projection of a blow-up colouring onto the base graph;
// ties resolved toward the smallest colour id.
Colouring majority_project(const Blowup& gb, const Graph& base, const Colouring& c);

nlohmann::json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);

} // namespace hgg
