#pragma once

// Finite simple graphs with exact girth / cycle machinery, blow-ups,
// homomorphism checks and the serialization formats shared by the rest
// of the toolkit.  Graphs are immutable after construction; mutating
// operations return new graphs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hgg {

class Graph {
public:
    Graph() = default;

    // Edges may arrive in any order; they are normalized to i<j, sorted,
    // deduplicated.  Self-loops and out-of-range ids are parameter errors.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    static Graph empty(int n) { return from_edges(n, {}); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph petersen();
    static Graph moser_spindle();

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // i<j, ascending
    std::vector<std::vector<int>> adj_;        // sorted neighbor lists
    std::vector<std::vector<std::uint64_t>> bits_; // adjacency bitrows (small n)
    bool use_bits_ = false;
};

struct GirthReport {
    bool finite = false;
    int girth = 0;                // valid when finite
    std::vector<int> witness;     // vertex cycle of length == girth
};

// Exact girth by truncated BFS from every vertex.
GirthReport girth(const Graph& g);

// Smallest cycle length <= max_len, or nullopt if none exists.
std::optional<int> shortest_cycle_upto(const Graph& g, int max_len);

// Exact count of vertex-distinct cycles per length 3..max_len, each cycle
// counted once (not per orientation/rotation).
std::map<int, long long> count_cycles_upto(const Graph& g, int max_len,
                                           long long node_budget = -1);

// Lexicographically least canonical witness among cycles of length `len`
// (canonical: starts at the cycle's smallest vertex, second < last).
std::optional<std::vector<int>> first_cycle_of_length(const Graph& g, int len);

struct Blowup {
    Graph graph;
    std::vector<int> part_of; // blow-up vertex -> base vertex
    int base_n = 0;
    int copies = 0;           // m

    // Vertices of the part over base vertex u, ascending.
    std::vector<int> part(int u) const;
};

// Each vertex becomes an independent m-set, each edge a K_{m,m}.
// Copy c of base vertex u gets id u*m + c.
Blowup blowup_graph(const Graph& g, int m);

struct Homomorphism {
    Graph source;
    Graph target;
    std::vector<int> map;          // source vertex -> target vertex
    bool claims_surjective = false;
};

struct HomReport {
    bool ok = false;
    std::string message;
    std::pair<int, int> violating_edge{-1, -1};
};

HomReport verify_homomorphism(const Homomorphism& h);

Graph remove_edge(const Graph& g, int u, int v);
// Keeps the listed vertices (must be distinct, in range), relabelled by
// ascending original id.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
std::vector<std::vector<int>> connected_components(const Graph& g);

// --- serialization ---------------------------------------------------

std::string to_edge_list_text(const Graph& g);       // "i j" per line, i<j
Graph graph_from_edge_list_text(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);        // {"n":., "edges":[[i,j],..]}
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json blowup_to_json(const Blowup& b);      // adds {"parts": {u: [ids]}}
Blowup blowup_from_json(const nlohmann::json& j);

} // namespace hgg
