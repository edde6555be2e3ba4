#include "hgg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hgg/errors.hpp"
#include "hgg/exactmath.hpp"

namespace hgg {

namespace {
constexpr int kBitsetThreshold = 8192;
} // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw parameter_error("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    for (auto& [a, b] : edges) {
        if (a == b) throw parameter_error("graph: self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw parameter_error("graph: edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range for n=" + std::to_string(n));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());
    g.use_bits_ = n <= kBitsetThreshold;
    if (g.use_bits_) {
        const int words = (n + 63) / 64;
        g.bits_.assign(n, std::vector<std::uint64_t>(words, 0));
        for (auto [a, b] : g.edges_) {
            g.bits_[a][b / 64] |= (std::uint64_t{1} << (b % 64));
            g.bits_[b][a / 64] |= (std::uint64_t{1} << (a % 64));
        }
    }
    return g;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw parameter_error("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return from_edges(a + b, std::move(e));
}

Graph Graph::petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer C5
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return from_edges(10, std::move(e));
}

Graph Graph::moser_spindle() {
    // Two rhombi (pairs of triangles) sharing vertex 0, tips 3 and 6 joined.
    return from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                          {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    if (use_bits_)
        return (bits_[u][v / 64] >> (v % 64)) & 1u;
    const auto& lst = adj_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

namespace {

// Shortest cycle through any vertex, found by BFS from each root with the
// classic dist[u]+dist[w]+1 bound on non-tree edges.  depth_cap limits the
// search to cycles of length <= 2*depth_cap+1.
struct CycleScan {
    int best_len = -1;
    int best_root = -1, best_u = -1, best_w = -1;
};

CycleScan scan_cycles(const Graph& g, int max_len) {
    const int n = g.vertex_count();
    CycleScan out;
    std::vector<int> dist(n), parent(n);
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        int cap = (out.best_len > 0 ? std::min(out.best_len - 1, max_len) : max_len);
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= cap + 1) break; // deeper layers cannot improve
            for (int w : g.neighbors(u)) {
                if (w == parent[u]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (dist[w] >= dist[u]) {
                    // non-tree edge: cycle through root of this length
                    int len = dist[u] + dist[w] + 1;
                    if (len <= cap && (out.best_len < 0 || len < out.best_len)) {
                        out.best_len = len;
                        out.best_root = root;
                        out.best_u = u;
                        out.best_w = w;
                    }
                }
            }
        }
        if (out.best_len == 3) break; // cannot do better
    }
    return out;
}

} // namespace

std::optional<int> shortest_cycle_upto(const Graph& g, int max_len) {
    if (max_len < 3) return std::nullopt;
    CycleScan s = scan_cycles(g, max_len);
    if (s.best_len < 0) return std::nullopt;
    return s.best_len;
}

GirthReport girth(const Graph& g) {
    GirthReport rep;
    CycleScan s = scan_cycles(g, g.vertex_count() + 1);
    if (s.best_len < 0) return rep; // forest: infinite girth
    rep.finite = true;
    rep.girth = s.best_len;

    // Rebuild the BFS tree at the minimizing root; the tree paths to the
    // two endpoints of the witness edge meet only at the root (otherwise a
    // strictly shorter cycle would exist, contradicting minimality), so
    // their union plus the edge is a simple cycle of length exactly girth.
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{s.best_root};
    dist[s.best_root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    auto path_to_root = [&](int v) {
        std::vector<int> p{v};
        while (parent[p.back()] != -1) p.push_back(parent[p.back()]);
        return p; // v, ..., root
    };
    std::vector<int> pu = path_to_root(s.best_u);  // u .. root
    std::vector<int> pw = path_to_root(s.best_w);  // w .. root
    rep.witness.assign(pu.rbegin(), pu.rend());    // root .. u
    rep.witness.insert(rep.witness.end(), pw.begin(), pw.end() - 1); // w .. (root excluded)
    if (static_cast<int>(rep.witness.size()) != rep.girth)
        throw invariant_violation("girth: witness reconstruction failed");
    return rep;
}

namespace {

// DFS cycle walker.  Visits simple paths s, v1, v2, ... with all vi > s in
// ascending neighbor order, so cycles are seen at their minimum vertex and
// the canonical direction (path[1] < path.back()) is the lex-least one.
template <typename OnCycle>
bool walk_cycles(const Graph& g, int max_len, long long node_budget, OnCycle on_cycle) {
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    long long nodes = 0;
    bool stop = false;

    auto dfs = [&](auto&& self, int s, int v) -> void {
        if (stop) return;
        if (node_budget >= 0 && ++nodes > node_budget)
            throw resource_error("cycle enumeration budget exceeded");
        for (int w : g.neighbors(v)) {
            if (stop) return;
            if (w == s) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (!on_cycle(path)) { stop = true; return; }
                }
                continue;
            }
            if (w < s || on_path[w]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < n && !stop; ++s) {
        on_path[s] = 1;
        path.assign(1, s);
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    return !stop;
}

} // namespace

std::map<int, long long> count_cycles_upto(const Graph& g, int max_len,
                                           long long node_budget) {
    if (max_len < 3) max_len = 2; // result covers 3..max_len (possibly empty)
    std::map<int, long long> counts;
    for (int len = 3; len <= max_len; ++len) counts[len] = 0;
    if (node_budget < 0)
        node_budget = env_budget("HGG_CYCLE_NODE_BUDGET", 200'000'000LL);
    walk_cycles(g, max_len, node_budget, [&](const std::vector<int>& path) {
        counts[static_cast<int>(path.size())] += 1;
        return true;
    });
    return counts;
}

std::optional<std::vector<int>> first_cycle_of_length(const Graph& g, int len) {
    std::optional<std::vector<int>> found;
    // Paths are explored in lexicographic order, and any length-`len` cycle
    // found from start vertex s beats every cycle from later starts, so the
    // first hit of the right length is the lex-least canonical witness.
    walk_cycles(g, len, -1, [&](const std::vector<int>& path) {
        if (static_cast<int>(path.size()) == len) {
            found = path;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<int> Blowup::part(int u) const {
    std::vector<int> ids;
    ids.reserve(copies);
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
        if (part_of[v] == u) ids.push_back(v);
    return ids;
}

Blowup blowup_graph(const Graph& g, int m) {
    if (m < 1) throw parameter_error("blowup: m must be >= 1");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * m * m);
    for (auto [a, b] : g.edges())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                edges.emplace_back(a * m + i, b * m + j);
    Blowup out;
    out.graph = Graph::from_edges(n * m, std::move(edges));
    out.base_n = n;
    out.copies = m;
    out.part_of.resize(static_cast<std::size_t>(n) * m);
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < m; ++c) out.part_of[u * m + c] = u;
    return out;
}

HomReport verify_homomorphism(const Homomorphism& h) {
    HomReport rep;
    const int ns = h.source.vertex_count();
    const int nt = h.target.vertex_count();
    if (static_cast<int>(h.map.size()) != ns) {
        rep.message = "map size " + std::to_string(h.map.size()) +
                      " does not match source order " + std::to_string(ns);
        return rep;
    }
    for (int v = 0; v < ns; ++v) {
        if (h.map[v] < 0 || h.map[v] >= nt) {
            rep.message = "vertex " + std::to_string(v) + " maps out of range";
            return rep;
        }
    }
    for (auto [a, b] : h.source.edges()) {
        if (!h.target.has_edge(h.map[a], h.map[b])) {
            rep.violating_edge = {a, b};
            rep.message = "edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") maps to non-edge (" + std::to_string(h.map[a]) + "," +
                          std::to_string(h.map[b]) + ")";
            return rep;
        }
    }
    if (h.claims_surjective) {
        std::vector<char> hit(nt, 0);
        for (int v = 0; v < ns; ++v) hit[h.map[v]] = 1;
        for (int u = 0; u < nt; ++u) {
            if (!hit[u]) {
                rep.message = "target vertex " + std::to_string(u) + " not covered";
                return rep;
            }
        }
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw parameter_error("remove_edge: no such edge");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(u, v)));
    return Graph::from_edges(g.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw parameter_error("induced_subgraph: duplicate vertex");
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw parameter_error("induced_subgraph: vertex out of range");
        new_id[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (new_id[a] >= 0 && new_id[b] >= 0)
            edges.emplace_back(new_id[a], new_id[b]);
    return Graph::from_edges(static_cast<int>(sorted.size()), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            out[id].push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream os;
    for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
    return os.str();
}

Graph graph_from_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::pair<int, int>> edges;
    int a, b, n = 0;
    while (is >> a >> b) {
        edges.emplace_back(a, b);
        n = std::max({n, a + 1, b + 1});
    }
    return Graph::from_edges(n, std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw io_error("graph json: missing \"n\" or \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(j.at("n").get<int>(), std::move(edges));
}

nlohmann::json blowup_to_json(const Blowup& b) {
    nlohmann::json j = graph_to_json(b.graph);
    j["base_n"] = b.base_n;
    j["m"] = b.copies;
    nlohmann::json parts = nlohmann::json::object();
    for (int u = 0; u < b.base_n; ++u) parts[std::to_string(u)] = b.part(u);
    j["parts"] = parts;
    return j;
}

Blowup blowup_from_json(const nlohmann::json& j) {
    Blowup b;
    b.graph = graph_from_json(j);
    b.base_n = j.at("base_n").get<int>();
    b.copies = j.at("m").get<int>();
    b.part_of.assign(b.graph.vertex_count(), -1);
    const auto& parts = j.at("parts");
    for (auto it = parts.begin(); it != parts.end(); ++it) {
        int u = std::stoi(it.key());
        for (const auto& v : it.value()) b.part_of[v.get<int>()] = u;
    }
    for (int v = 0; v < b.graph.vertex_count(); ++v)
        if (b.part_of[v] < 0) throw io_error("blowup json: vertex without part");
    return b;
}

} // namespace hgg
