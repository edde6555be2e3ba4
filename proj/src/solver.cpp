#include "hgg/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hgg/errors.hpp"
#include "hgg/exactmath.hpp"

namespace hgg {

ProperReport verify_proper(const Graph& g, const Colouring& c) {
    ProperReport rep;
    if (static_cast<int>(c.assignment.size()) != g.vertex_count()) {
        rep.message = "assignment size does not match vertex count";
        return rep;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.assignment[v] < 1 || c.assignment[v] > c.k) {
            rep.message = "vertex " + std::to_string(v) + " has colour " +
                          std::to_string(c.assignment[v]) + " outside 1.." +
                          std::to_string(c.k);
            return rep;
        }
    }
    for (auto [a, b] : g.edges()) {
        if (c.assignment[a] == c.assignment[b]) {
            rep.violating_edge = {a, b};
            rep.message = "edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") is monochromatic in colour " +
                          std::to_string(c.assignment[a]);
            return rep;
        }
    }
    rep.ok = true;
    rep.message = "proper";
    return rep;
}

namespace {

constexpr int kMaxColours = 63; // colour masks live in one 64-bit word

struct SearchCtx {
    long long nodes = 0;
    long long max_nodes = 0;
    void tick() {
        if (++nodes > max_nodes)
            throw resource_error("chromatic search node budget exceeded (" +
                                 std::to_string(max_nodes) + " nodes)");
    }
};

// Peel vertices of degree < k; they can always be coloured greedily
// afterwards.  Returns peel order (to be replayed in reverse).
std::vector<int> peel_low_degree(const Graph& g, int k, std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    removed.assign(n, 0);
    std::vector<int> order;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] < k) {
                removed[v] = 1;
                order.push_back(v);
                for (int w : g.neighbors(v))
                    if (!removed[w]) --deg[w];
                changed = true;
            }
        }
    }
    return order;
}

// DSATUR backtracking k-colorability on the (peeled) core.
bool dsatur_k_colorable(const Graph& g, const std::vector<char>& removed, int k,
                        std::vector<int>& colour, SearchCtx& ctx) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> neigh_mask(n, 0); // colours used by neighbors
    int uncoloured = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) ++uncoloured;
    if (uncoloured == 0) return true;

    int max_used = 0;

    auto pick = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v] || colour[v] != 0) continue;
            int sat = std::popcount(neigh_mask[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    auto rec = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0) return true;
        ctx.tick();
        const int v = pick();
        const int cap = std::min(k, max_used + 1); // new colours in order
        for (int c = 1; c <= cap; ++c) {
            if ((neigh_mask[v] >> c) & 1u) continue;
            colour[v] = c;
            int prev_max = max_used;
            max_used = std::max(max_used, c);
            std::vector<int> touched;
            for (int w : g.neighbors(v)) {
                if (!removed[w] && colour[w] == 0 && !((neigh_mask[w] >> c) & 1u)) {
                    neigh_mask[w] |= (std::uint64_t{1} << c);
                    touched.push_back(w);
                }
            }
            if (self(self, remaining - 1)) return true;
            for (int w : touched) neigh_mask[w] &= ~(std::uint64_t{1} << c);
            colour[v] = 0;
            max_used = prev_max;
        }
        return false;
    };
    return rec(rec, uncoloured);
}

// Greedy clique via neighborhood intersection, seeded from the highest
// degree vertices.  Any clique is a valid lower bound.
int greedy_clique_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int best = n > 0 ? 1 : 0;
    const int seeds = std::min(n, 24);
    for (int s = 0; s < seeds; ++s) {
        std::vector<int> clique{by_degree[s]};
        for (int v : by_degree) {
            bool ok = true;
            for (int c : clique)
                if (v == c || !g.has_edge(v, c)) { ok = false; break; }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Colouring greedy_colouring(const Graph& g) {
    const int n = g.vertex_count();
    Colouring c;
    c.assignment.assign(n, 0);
    std::vector<std::uint64_t> neigh_mask(n, 0);
    std::vector<char> removed(n, 0);
    // DSATUR greedy, unlimited colours
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.assignment[v] != 0) continue;
            int sat = std::popcount(neigh_mask[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int col = 1;
        while (col <= kMaxColours && ((neigh_mask[best] >> col) & 1u)) ++col;
        if (col > kMaxColours) {
            // dense fallback: scan neighbor colours directly
            std::vector<char> used(n + 2, 0);
            for (int w : g.neighbors(best))
                if (c.assignment[w] > 0 && c.assignment[w] <= n + 1)
                    used[c.assignment[w]] = 1;
            col = 1;
            while (used[col]) ++col;
        }
        c.assignment[best] = col;
        c.k = std::max(c.k, col);
        if (col <= kMaxColours)
            for (int w : g.neighbors(best))
                if (c.assignment[w] == 0)
                    neigh_mask[w] |= (std::uint64_t{1} << col);
    }
    return c;
}

// Complete a partial colouring over peeled vertices, reverse peel order.
void replay_peel(const Graph& g, const std::vector<int>& peel_order,
                 std::vector<int>& colour, int k) {
    for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it) {
        int v = *it;
        std::vector<char> used(k + 1, 0);
        for (int w : g.neighbors(v))
            if (colour[w] >= 1 && colour[w] <= k) used[colour[w]] = 1;
        int c = 1;
        while (c <= k && used[c]) ++c;
        if (c > k) throw invariant_violation("peel replay found no free colour");
        colour[v] = c;
    }
}

bool component_k_colorable(const Graph& comp, int k, std::vector<int>& colour,
                           SearchCtx& ctx) {
    colour.assign(comp.vertex_count(), 0);
    if (k <= 0) return comp.vertex_count() == 0;
    if (k > kMaxColours) throw resource_error("k > 63 unsupported by the search");
    std::vector<char> removed;
    std::vector<int> peel = peel_low_degree(comp, k, removed);
    if (!dsatur_k_colorable(comp, removed, k, colour, ctx)) return false;
    replay_peel(comp, peel, colour, k);
    return true;
}

} // namespace

bool k_colorable(const Graph& g, int k, Colouring* witness, ChiBudget budget) {
    SearchCtx ctx;
    ctx.max_nodes = budget.max_nodes >= 0
                        ? budget.max_nodes
                        : env_budget("HGG_CHI_NODE_BUDGET", 200'000'000LL);
    if (g.vertex_count() > budget.max_n)
        throw resource_error("graph exceeds solver size budget");
    std::vector<int> full(g.vertex_count(), 0);
    for (const auto& comp_vertices : connected_components(g)) {
        Graph comp = induced_subgraph(g, comp_vertices);
        std::vector<int> colour;
        if (!component_k_colorable(comp, k, colour, ctx)) return false;
        for (std::size_t i = 0; i < comp_vertices.size(); ++i)
            full[comp_vertices[i]] = colour[i];
    }
    if (witness != nullptr) {
        witness->k = k;
        witness->assignment = std::move(full);
    }
    return true;
}

ChiResult exact_chromatic(const Graph& g, ChiBudget budget) {
    const int n = g.vertex_count();
    if (n > budget.max_n)
        throw resource_error("graph exceeds solver size budget (n=" +
                             std::to_string(n) + ")");
    ChiResult result;
    if (n == 0) {
        result.chromatic_number = 0;
        return result;
    }
    if (g.edge_count() == 0) {
        result.chromatic_number = 1;
        result.witness.k = 1;
        result.witness.assignment.assign(n, 1);
        return result;
    }

    SearchCtx ctx;
    ctx.max_nodes = budget.max_nodes >= 0
                        ? budget.max_nodes
                        : env_budget("HGG_CHI_NODE_BUDGET", 200'000'000LL);

    int lb = greedy_clique_bound(g);
    Colouring greedy = greedy_colouring(g);
    int ub = greedy.k;
    result.witness = greedy;

    int k = std::max(lb, 2);
    try {
        for (; k < ub; ++k) {
            std::vector<int> full(n, 0);
            bool ok = true;
            for (const auto& comp_vertices : connected_components(g)) {
                Graph comp = induced_subgraph(g, comp_vertices);
                std::vector<int> colour;
                if (!component_k_colorable(comp, k, colour, ctx)) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < comp_vertices.size(); ++i)
                    full[comp_vertices[i]] = colour[i];
            }
            if (ok) {
                result.witness.k = k;
                result.witness.assignment = std::move(full);
                break;
            }
        }
    } catch (const resource_error& e) {
        throw resource_error(std::string(e.what()) + "; bracket [" +
                             std::to_string(k) + "," + std::to_string(ub) + "]");
    }
    result.chromatic_number = std::min(k, ub);
    result.nodes_used = ctx.nodes;

    ProperReport check = verify_proper(g, result.witness);
    if (!check.ok || result.witness.k != result.chromatic_number)
        throw invariant_violation("exact_chromatic: witness failed self-check: " +
                                  check.message);
    return result;
}

namespace {

struct MisCtx {
    long long nodes = 0;
    long long max_nodes = 0;
    bool truncated = false;
    const Graph* g = nullptr;
    std::vector<int> best;
    std::vector<int> current;
};

void mis_rec(MisCtx& ctx, std::vector<int>& candidates) {
    if (++ctx.nodes > ctx.max_nodes) {
        ctx.truncated = true;
        return;
    }
    if (ctx.current.size() + candidates.size() <= ctx.best.size()) return;
    if (candidates.empty()) {
        if (ctx.current.size() > ctx.best.size()) ctx.best = ctx.current;
        return;
    }
    // branch on the candidate with most neighbors inside the candidate set
    int pick_idx = 0, pick_deg = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        int d = 0;
        for (int w : candidates)
            if (ctx.g->has_edge(candidates[i], w)) ++d;
        if (d > pick_deg) {
            pick_deg = d;
            pick_idx = static_cast<int>(i);
        }
    }
    int v = candidates[pick_idx];
    // include v
    std::vector<int> rest;
    for (int w : candidates)
        if (w != v && !ctx.g->has_edge(v, w)) rest.push_back(w);
    ctx.current.push_back(v);
    mis_rec(ctx, rest);
    ctx.current.pop_back();
    if (ctx.truncated) return;
    // exclude v
    std::vector<int> without;
    for (int w : candidates)
        if (w != v) without.push_back(w);
    mis_rec(ctx, without);
}

} // namespace

MisResult max_independent_set(const Graph& g, MisBudget budget) {
    MisCtx ctx;
    ctx.max_nodes = budget.max_nodes >= 0
                        ? budget.max_nodes
                        : env_budget("HGG_MIS_NODE_BUDGET", 200'000'000LL);
    ctx.g = &g;
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    // greedy seed: ascending degree
    std::vector<int> by_degree = all;
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    for (int v : by_degree) {
        bool ok = true;
        for (int u : ctx.best)
            if (g.has_edge(u, v)) { ok = false; break; }
        if (ok) ctx.best.push_back(v);
    }
    mis_rec(ctx, all);
    std::sort(ctx.best.begin(), ctx.best.end());
    MisResult out;
    out.size = static_cast<int>(ctx.best.size());
    out.witness = std::move(ctx.best);
    out.exact = !ctx.truncated;
    out.nodes_used = ctx.nodes;
    return out;
}

Colouring majority_project(const Blowup& gb, const Graph& base, const Colouring& c) {
    if (gb.base_n != base.vertex_count())
        throw parameter_error("majority_project: part labels do not match base");
    if (static_cast<int>(c.assignment.size()) != gb.graph.vertex_count())
        throw parameter_error("majority_project: colouring does not match blow-up");
    Colouring out;
    out.k = c.k;
    out.assignment.assign(base.vertex_count(), 0);
    for (int u = 0; u < base.vertex_count(); ++u) {
        std::vector<int> tally(c.k + 1, 0);
        for (int v : gb.part(u)) {
            int col = c.assignment[v];
            if (col < 1 || col > c.k)
                throw parameter_error("majority_project: colour out of range");
            ++tally[col];
        }
        int best = 1;
        for (int col = 2; col <= c.k; ++col)
            if (tally[col] > tally[best]) best = col; // strict: ties keep smaller id
        out.assignment[u] = best;
    }
    return out;
}

nlohmann::json colouring_to_json(const Colouring& c) {
    nlohmann::json j;
    j["k"] = c.k;
    j["assignment"] = c.assignment;
    return j;
}

Colouring colouring_from_json(const nlohmann::json& j) {
    Colouring c;
    c.k = j.at("k").get<int>();
    c.assignment = j.at("assignment").get<std::vector<int>>();
    return c;
}

} // namespace hgg
