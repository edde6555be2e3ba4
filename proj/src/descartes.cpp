#include "hgg/descartes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hgg/errors.hpp"
#include "hgg/exactmath.hpp"
#include "hgg/randboost.hpp"

namespace hgg {

void Hypergraph::validate() const {
    if (r < 1) throw parameter_error("hypergraph: uniformity must be >= 1");
    if (vertex_count < 0) throw parameter_error("hypergraph: negative vertex count");
    std::vector<std::vector<int>> seen;
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw parameter_error("hypergraph: edge of wrong size");
        if (!std::is_sorted(e.begin(), e.end()))
            throw parameter_error("hypergraph: edge not sorted");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw parameter_error("hypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= vertex_count)
            throw parameter_error("hypergraph: vertex out of range");
        seen.push_back(e);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw parameter_error("hypergraph: duplicate edge");
}

Graph incidence_graph(const Hypergraph& H) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < H.edges.size(); ++e)
        for (int v : H.edges[e])
            edges.emplace_back(v, H.vertex_count + static_cast<int>(e));
    return Graph::from_edges(H.vertex_count + static_cast<int>(H.edges.size()),
                             std::move(edges));
}

std::optional<int> hypergraph_girth(const Hypergraph& H) {
    H.validate();
    Graph inc = incidence_graph(H);
    std::optional<int> inc_girth = shortest_cycle_upto(inc, inc.vertex_count() + 1);
    if (!inc_girth) return std::nullopt;
    return *inc_girth / 2; // incidence cycles alternate vertex/edge nodes
}

namespace {

// Backtracking weak k-colorability for r >= 3.  Edge state tracks whether
// the assigned vertices are still monochromatic; completing an edge in a
// single colour fails immediately.
struct HyperColorSearch {
    const Hypergraph* H;
    std::vector<std::vector<int>> edges_of; // per vertex: incident edge ids
    std::vector<int> colour;                // 0 = unassigned
    std::vector<int> assigned;              // per edge
    std::vector<int> mono_colour;           // per edge; -1 mixed, 0 none yet
    std::vector<int> order;                 // vertex order, by degree desc
    int k = 0;

    bool run(int k_target) {
        k = k_target;
        colour.assign(H->vertex_count, 0);
        assigned.assign(H->edges.size(), 0);
        mono_colour.assign(H->edges.size(), 0);
        return rec(0, 0);
    }

    bool rec(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const int cap = std::min(k, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            bool ok = true;
            std::vector<int> flipped; // edges whose mono state we changed
            for (int e : edges_of[v]) {
                int prev = mono_colour[e];
                int next;
                if (assigned[e] == 0)
                    next = c;
                else if (prev == -1 || prev == c)
                    next = prev;
                else
                    next = -1;
                if (next == c && assigned[e] + 1 == H->r) { ok = false; }
                mono_colour[e] = next;
                ++assigned[e];
                flipped.push_back(prev);
                if (!ok) break;
            }
            if (ok && rec(pos + 1, std::max(max_used, c))) return true;
            // undo
            for (std::size_t i = flipped.size(); i-- > 0;) {
                int e = edges_of[v][i];
                mono_colour[e] = flipped[i];
                --assigned[e];
            }
        }
        return false;
    }
};

} // namespace

int hypergraph_chromatic(const Hypergraph& H) {
    H.validate();
    const long long cap = env_budget("HGG_HYPER_CHI_VERTICES", 64);
    if (H.vertex_count > cap)
        throw resource_error("hypergraph chromatic: " + std::to_string(H.vertex_count) +
                             " vertices exceed budget " + std::to_string(cap));
    if (H.r == 1) {
        if (!H.edges.empty())
            throw parameter_error(
                "weak chromatic number is undefined for 1-uniform edges "
                "(every colouring makes a singleton edge monochromatic)");
        return H.vertex_count > 0 ? 1 : 0;
    }
    if (H.edges.empty()) return H.vertex_count > 0 ? 1 : 0;
    if (H.r == 2) {
        std::vector<std::pair<int, int>> ge;
        for (const auto& e : H.edges) ge.emplace_back(e[0], e[1]);
        Graph g = Graph::from_edges(H.vertex_count, std::move(ge));
        return exact_chromatic(g).chromatic_number;
    }

    HyperColorSearch search;
    search.H = &H;
    search.edges_of.assign(H.vertex_count, {});
    for (std::size_t e = 0; e < H.edges.size(); ++e)
        for (int v : H.edges[e]) search.edges_of[v].push_back(static_cast<int>(e));
    search.order.resize(H.vertex_count);
    for (int v = 0; v < H.vertex_count; ++v) search.order[v] = v;
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        const auto da = search.edges_of[a].size(), db = search.edges_of[b].size();
        if (da != db) return da > db;
        return a < b;
    });
    for (int k = 2; k <= H.vertex_count; ++k)
        if (search.run(k)) return k;
    throw invariant_violation("hypergraph chromatic search failed to terminate");
}

namespace {

// True iff inserting `edge` creates a hypergraph cycle of length < g,
// i.e. two of its vertices lie at incidence distance <= 2g-4 already.
bool creates_short_cycle(const std::vector<std::vector<int>>& vertex_edges,
                         const std::vector<std::vector<int>>& edge_vertices,
                         const std::vector<int>& edge, int g,
                         std::vector<int>& dist_scratch) {
    const int limit = 2 * g - 4;
    if (limit < 2) return false; // g <= 2: no constraint beyond distinctness
    for (std::size_t a = 0; a < edge.size(); ++a) {
        // BFS over the incidence structure from edge[a], depth <= limit
        std::fill(dist_scratch.begin(), dist_scratch.end(), -1);
        std::vector<int> frontier{edge[a]};
        dist_scratch[edge[a]] = 0;
        std::vector<char> edge_seen(edge_vertices.size(), 0);
        int depth = 0;
        while (!frontier.empty() && depth + 2 <= limit) {
            std::vector<int> next;
            for (int v : frontier) {
                for (int e : vertex_edges[v]) {
                    if (edge_seen[e]) continue;
                    edge_seen[e] = 1;
                    for (int w : edge_vertices[e]) {
                        if (dist_scratch[w] == -1) {
                            dist_scratch[w] = depth + 2;
                            next.push_back(w);
                        }
                    }
                }
            }
            frontier = std::move(next);
            depth += 2;
        }
        for (std::size_t b = a + 1; b < edge.size(); ++b)
            if (dist_scratch[edge[b]] >= 0 && dist_scratch[edge[b]] <= limit)
                return true;
    }
    return false;
}

std::vector<int> draw_r_subset(std::mt19937_64& rng, int n, int r) {
    // partial Fisher-Yates on a scratch identity; deterministic via modulo
    static thread_local std::vector<int> pool;
    pool.resize(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) {
        const std::uint64_t j = i + rng() % static_cast<std::uint64_t>(n - i);
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Hypergraph generate_hypergraph(int r, int k, int g, std::uint64_t seed,
                               HypergraphGenMeta* meta) {
    if (r < 1) throw parameter_error("generate_hypergraph: r must be >= 1");
    if (k < 1) throw parameter_error("generate_hypergraph: k must be >= 1");
    if (g < 2) g = 2;

    auto finish = [&](Hypergraph H, std::uint64_t used, int attempts, int chi) {
        std::sort(H.edges.begin(), H.edges.end());
        H.validate();
        // self-certifying postcondition
        std::optional<int> girth_val = hypergraph_girth(H);
        if (girth_val && *girth_val < g)
            throw invariant_violation("generated hypergraph has girth " +
                                      std::to_string(*girth_val));
        if (meta != nullptr) {
            meta->seed_used = used;
            meta->attempts = attempts;
            meta->n_used = H.vertex_count;
            meta->chromatic = chi;
        }
        return H;
    };

    // k = 1 or r = 1: one edge suffices (any colouring leaves a singleton
    // edge monochromatic; a lone r-edge needs two colours and has no cycle).
    if (k == 1 || r == 1) {
        Hypergraph H;
        H.vertex_count = r;
        H.r = r;
        H.edges.push_back({});
        for (int i = 0; i < r; ++i) H.edges.back().push_back(i);
        int chi = r == 1 ? k + 1 : hypergraph_chromatic(H); // r=1: unbounded, report k+1
        if (r > 1 && chi < k + 1)
            throw invariant_violation("single-edge gadget misses chromatic target");
        return finish(std::move(H), seed, 0, chi);
    }

    const long long n_cap = env_budget("HGG_HYPER_CHI_VERTICES", 64);
    const long long max_attempts = env_budget("HGG_HYPER_ATTEMPTS", 64);

    // schedule: start small, grow every other attempt
    int n0 = std::max(r + 1, r == 2 ? (k <= 2 ? 5 : 6 * (k - 1) - 1) : 4 * (k - 1) + r);
    for (long long attempt = 0; attempt < max_attempts; ++attempt) {
        long long n = n0;
        for (long long step = 0; step < attempt / 2; ++step) n = n + (n + 3) / 4;
        if (n > n_cap) n = n_cap;
        const std::uint64_t attempt_seed = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(splitmix64(attempt_seed));

        Hypergraph H;
        H.vertex_count = static_cast<int>(n);
        H.r = r;
        std::vector<std::vector<int>> vertex_edges(n);
        std::vector<int> dist_scratch(n, -1);
        std::set<std::vector<int>> present;
        const long long candidates = 40 * n * n;
        for (long long c = 0; c < candidates; ++c) {
            std::vector<int> cand = draw_r_subset(rng, static_cast<int>(n), r);
            if (present.count(cand)) continue;
            if (creates_short_cycle(vertex_edges, H.edges, cand, g, dist_scratch))
                continue;
            const int id = static_cast<int>(H.edges.size());
            H.edges.push_back(cand);
            for (int v : cand) vertex_edges[v].push_back(id);
            present.insert(std::move(cand));
        }
        const int chi = hypergraph_chromatic(H);
        if (chi >= k + 1)
            return finish(std::move(H), attempt_seed, static_cast<int>(attempt) + 1, chi);
    }
    throw resource_error("generate_hypergraph: no (r=" + std::to_string(r) +
                         ", k=" + std::to_string(k) + ", g=" + std::to_string(g) +
                         ") gadget found within " + std::to_string(max_attempts) +
                         " attempts (HGG_HYPER_ATTEMPTS)");
}

// ------------------------------------------------------------- booster

DescartesResult descartes_boost(const Graph& g0, int g, int k, std::uint64_t seed) {
    if (g < 3) throw parameter_error("descartes_boost: g must be >= 3");
    if (k < 1) throw parameter_error("descartes_boost: k must be >= 1");
    const long long vertex_budget = env_budget("HGG_DESCARTES_VERTEX_BUDGET", 100'000);

    DescartesResult result;
    result.base = g0;
    result.target_girth = g;
    result.k = k;

    const int n = g0.vertex_count();
    const int base_n = std::min(n, 2);
    std::vector<int> base_ids(base_n);
    for (int i = 0; i < base_n; ++i) base_ids[i] = i;
    Graph gadget = induced_subgraph(g0, base_ids);
    std::vector<int> hmap(base_n);
    for (int i = 0; i < base_n; ++i) hmap[i] = i;

    for (int pivot = 2; pivot < n; ++pivot) {
        std::vector<int> nbrs_below;
        for (int w : g0.neighbors(pivot))
            if (w < pivot) nbrs_below.push_back(w);

        DescartesLevel level;
        level.pivot = pivot;
        level.copy_size = gadget.vertex_count();
        level.h_seed = splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (pivot + 1)));

        if (nbrs_below.empty()) {
            // isolated pivot at this stage: one U vertex plus one copy
            level.degenerate = true;
            level.uniformity = 0;
            level.u_ids = {0};
            level.copy_start = {1};
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : gadget.edges()) edges.emplace_back(a + 1, b + 1);
            Graph next = Graph::from_edges(gadget.vertex_count() + 1, std::move(edges));
            std::vector<int> next_map(next.vertex_count());
            next_map[0] = pivot;
            for (int w = 0; w < gadget.vertex_count(); ++w) next_map[1 + w] = hmap[w];
            gadget = std::move(next);
            hmap = std::move(next_map);
            result.trace.push_back(std::move(level));
            continue;
        }

        std::vector<char> is_nbr(pivot, 0);
        for (int w : nbrs_below) is_nbr[w] = 1;
        for (int w = 0; w < gadget.vertex_count(); ++w)
            if (is_nbr[hmap[w]]) level.preimage.push_back(w);
        level.uniformity = static_cast<int>(level.preimage.size());

        level.H = generate_hypergraph(level.uniformity, k, g, level.h_seed);
        const long long next_size =
            level.H.vertex_count +
            static_cast<long long>(level.H.edges.size()) * gadget.vertex_count();
        if (next_size > vertex_budget)
            throw resource_error(
                "descartes_boost: level " + std::to_string(pivot) + " needs " +
                std::to_string(next_size) + " vertices (budget " +
                std::to_string(vertex_budget) + ", HGG_DESCARTES_VERTEX_BUDGET)");

        const int nU = level.H.vertex_count;
        level.u_ids.resize(nU);
        for (int v = 0; v < nU; ++v) level.u_ids[v] = v;

        std::vector<std::pair<int, int>> edges;
        std::vector<int> next_map(static_cast<std::size_t>(next_size));
        for (int v = 0; v < nU; ++v) next_map[v] = pivot;
        for (std::size_t e = 0; e < level.H.edges.size(); ++e) {
            const int start = nU + static_cast<int>(e) * gadget.vertex_count();
            level.copy_start.push_back(start);
            for (auto [a, b] : gadget.edges())
                edges.emplace_back(start + a, start + b);
            for (int w = 0; w < gadget.vertex_count(); ++w)
                next_map[start + w] = hmap[w];
            // sorted-to-sorted matching between the hyperedge and the preimage
            std::vector<std::pair<int, int>> matching;
            const std::vector<int>& F = level.H.edges[e];
            for (int t = 0; t < level.uniformity; ++t) {
                const int u_vertex = F[t];
                const int copy_vertex = start + level.preimage[t];
                edges.emplace_back(u_vertex, copy_vertex);
                matching.emplace_back(u_vertex, copy_vertex);
            }
            level.matchings.push_back(std::move(matching));
        }
        gadget = Graph::from_edges(static_cast<int>(next_size), std::move(edges));
        hmap = std::move(next_map);
        result.trace.push_back(std::move(level));
    }

    result.gprime = gadget;
    result.hom.source = result.gprime;
    result.hom.target = g0;
    result.hom.map = hmap;
    result.hom.claims_surjective = true;
    return result;
}

Colouring color_transfer(const DescartesResult& result, const Colouring& cprime) {
    ProperReport proper = verify_proper(result.gprime, cprime);
    if (!proper.ok)
        throw parameter_error("color_transfer: colouring is not proper: " + proper.message);
    if (cprime.k > result.k)
        throw parameter_error("color_transfer: colouring uses " +
                              std::to_string(cprime.k) + " > k = " +
                              std::to_string(result.k) + " colours");

    const Graph& base = result.base;
    Colouring out;
    out.k = cprime.k;
    out.assignment.assign(base.vertex_count(), 0);

    std::vector<int> cur = cprime.assignment;
    for (std::size_t li = result.trace.size(); li-- > 0;) {
        const DescartesLevel& level = result.trace[li];
        int pivot_colour;
        int chosen_edge;
        if (level.degenerate) {
            pivot_colour = cur[level.u_ids[0]];
            chosen_edge = 0;
        } else {
            chosen_edge = -1;
            pivot_colour = 0;
            for (std::size_t e = 0; e < level.H.edges.size(); ++e) {
                const std::vector<int>& F = level.H.edges[e];
                const int c0 = cur[level.u_ids[F[0]]];
                bool mono = true;
                for (int v : F)
                    if (cur[level.u_ids[v]] != c0) { mono = false; break; }
                if (mono) {
                    chosen_edge = static_cast<int>(e);
                    pivot_colour = c0;
                    break;
                }
            }
            if (chosen_edge < 0)
                throw invariant_violation(
                    "color_transfer: no monochromatic hyperedge at level " +
                    std::to_string(li) + "; gadget chromatic number too low");
        }
        out.assignment[level.pivot] = pivot_colour;
        const int start = level.copy_start[chosen_edge];
        std::vector<int> next(cur.begin() + start, cur.begin() + start + level.copy_size);
        cur = std::move(next);
    }
    // base case: gadget == induced {0,1} with identity map
    for (std::size_t i = 0; i < cur.size(); ++i)
        out.assignment[i] = cur[i];

    ProperReport check = verify_proper(base, out);
    if (!check.ok)
        throw invariant_violation("color_transfer: transferred colouring improper: " +
                                  check.message);
    return out;
}

// --------------------------------------------------------------- export

nlohmann::json hypergraph_to_json(const Hypergraph& H) {
    nlohmann::json j;
    j["r"] = H.r;
    j["vertices"] = H.vertex_count;
    j["edges"] = H.edges;
    return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    Hypergraph H;
    H.r = j.at("r").get<int>();
    H.vertex_count = j.at("vertices").get<int>();
    H.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    H.validate();
    return H;
}

nlohmann::json trace_to_json(const DescartesResult& r) {
    nlohmann::json j;
    j["base"] = graph_to_json(r.base);
    j["target_girth"] = r.target_girth;
    j["k"] = r.k;
    auto levels = nlohmann::json::array();
    for (const auto& level : r.trace) {
        nlohmann::json lj;
        lj["pivot"] = level.pivot;
        lj["uniformity"] = level.uniformity;
        lj["degenerate"] = level.degenerate;
        lj["seed"] = level.h_seed;
        if (!level.degenerate) lj["hypergraph"] = hypergraph_to_json(level.H);
        lj["preimage"] = level.preimage;
        lj["copy_start"] = level.copy_start;
        lj["copy_size"] = level.copy_size;
        auto mj = nlohmann::json::array();
        for (const auto& matching : level.matchings) {
            auto pairs = nlohmann::json::array();
            for (auto [a, b] : matching) pairs.push_back({a, b});
            mj.push_back(pairs);
        }
        lj["matchings"] = mj;
        levels.push_back(std::move(lj));
    }
    j["levels"] = levels;
    j["homomorphism"] = r.hom.map;
    return j;
}

} // namespace hgg
