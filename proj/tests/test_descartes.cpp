#include <doctest.h>

#include <algorithm>

#include "hgg/descartes.hpp"
#include "hgg/errors.hpp"
#include "hgg/solver.hpp"

using namespace hgg;

namespace {

Hypergraph fano() {
    Hypergraph H;
    H.vertex_count = 7;
    H.r = 3;
    H.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    return H;
}

// Oracle: shortest cycle by brute force over ordered edge tuples with an
// injective choice of linking vertices.
int oracle_hypergraph_girth(const Hypergraph& H, int max_len) {
    const int m = static_cast<int>(H.edges.size());
    for (int len = 2; len <= max_len; ++len) {
        std::vector<int> tuple;
        std::vector<char> used(m, 0);
        auto links_exist = [&](const std::vector<int>& edges_seq) {
            // back-tracking choice of distinct v_i in F_i cap F_{i+1}
            std::vector<int> chosen;
            auto rec = [&](auto&& self, std::size_t i) -> bool {
                if (i == edges_seq.size()) return true;
                const auto& a = H.edges[edges_seq[i]];
                const auto& b = H.edges[edges_seq[(i + 1) % edges_seq.size()]];
                for (int v : a) {
                    if (std::find(b.begin(), b.end(), v) == b.end()) continue;
                    if (std::find(chosen.begin(), chosen.end(), v) != chosen.end())
                        continue;
                    chosen.push_back(v);
                    if (self(self, i + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            return rec(rec, 0);
        };
        auto rec = [&](auto&& self, int depth) -> bool {
            if (depth == len) return links_exist(tuple);
            int start = tuple.empty() ? 0 : 0;
            for (int e = start; e < m; ++e) {
                if (used[e]) continue;
                // canonical: first edge is the smallest in the tuple
                if (!tuple.empty() && e < tuple[0]) continue;
                used[e] = 1;
                tuple.push_back(e);
                if (self(self, depth + 1)) { used[e] = 0; tuple.pop_back(); return true; }
                used[e] = 0;
                tuple.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return len;
    }
    return 0; // none found up to max_len
}

} // namespace

TEST_CASE("hypergraph validation") {
    Hypergraph bad;
    bad.vertex_count = 3;
    bad.r = 2;
    bad.edges = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(bad.validate(), parameter_error); // unsorted edge
    bad.edges = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(bad.validate(), parameter_error); // duplicate
    bad.edges = {{0, 3}};
    CHECK_THROWS_AS(bad.validate(), parameter_error); // out of range
}

TEST_CASE("hypergraph girth") {
    // two edges sharing two vertices: a 2-cycle
    Hypergraph pair;
    pair.vertex_count = 4;
    pair.r = 3;
    pair.edges = {{0, 1, 2}, {0, 1, 3}};
    CHECK(hypergraph_girth(pair) == 2);

    // loose path: consecutive overlaps of one vertex, no closed chain
    Hypergraph path;
    path.vertex_count = 7;
    path.r = 3;
    path.edges = {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
    CHECK(!hypergraph_girth(path).has_value());

    CHECK(hypergraph_girth(fano()) == 3);
    CHECK(oracle_hypergraph_girth(fano(), 4) == 3);

    // 2-uniform: graph cycles are hypergraph cycles
    Hypergraph tri;
    tri.vertex_count = 3;
    tri.r = 2;
    tri.edges = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(hypergraph_girth(tri) == 3);
    CHECK(oracle_hypergraph_girth(tri, 4) == 3);
}

TEST_CASE("hypergraph chromatic number") {
    Hypergraph single;
    single.vertex_count = 5;
    single.r = 5;
    single.edges = {{0, 1, 2, 3, 4}};
    CHECK(hypergraph_chromatic(single) == 2);

    // complete 2-uniform K4 agrees with the graph solver
    Hypergraph k4;
    k4.vertex_count = 4;
    k4.r = 2;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.edges.push_back({i, j});
    CHECK(hypergraph_chromatic(k4) == 4);
    CHECK(exact_chromatic(Graph::complete(4)).chromatic_number == 4);

    CHECK(hypergraph_chromatic(fano()) == 3);

    Hypergraph unit;
    unit.vertex_count = 2;
    unit.r = 1;
    unit.edges = {{0}};
    CHECK_THROWS_AS(hypergraph_chromatic(unit), parameter_error);
}

TEST_CASE("generate_hypergraph: base cases") {
    Hypergraph h1 = generate_hypergraph(3, 1, 5, 0);
    CHECK(h1.edges.size() == 1);
    CHECK(h1.vertex_count == 3);
    CHECK(!hypergraph_girth(h1).has_value());

    HypergraphGenMeta meta;
    Hypergraph hr1 = generate_hypergraph(1, 4, 3, 0, &meta);
    CHECK(hr1.r == 1);
    CHECK(hr1.edges.size() == 1); // every colouring leaves it monochromatic
}

TEST_CASE("generate_hypergraph: 2-uniform gadgets") {
    HypergraphGenMeta meta;
    Hypergraph H = generate_hypergraph(2, 2, 4, 0, &meta);
    CHECK(H.r == 2);
    auto gv = hypergraph_girth(H);
    CHECK((!gv || *gv >= 4)); // triangle-free
    CHECK(meta.chromatic >= 3);
    CHECK(hypergraph_chromatic(H) == meta.chromatic);

    // triangle-free with chromatic number at least 4
    Hypergraph H3 = generate_hypergraph(2, 3, 4, 0, &meta);
    auto gv3 = hypergraph_girth(H3);
    CHECK((!gv3 || *gv3 >= 4));
    CHECK(meta.chromatic >= 4);

    // determinism
    Hypergraph again = generate_hypergraph(2, 3, 4, 0);
    CHECK(again.edges == H3.edges);
    CHECK(again.vertex_count == H3.vertex_count);
}

TEST_CASE("generate_hypergraph: 3-uniform linear gadget") {
    HypergraphGenMeta meta;
    Hypergraph H = generate_hypergraph(3, 2, 3, 7, &meta);
    CHECK(H.r == 3);
    CHECK(meta.chromatic >= 3);
    // girth >= 3 means pairwise edge intersections <= 1
    for (std::size_t a = 0; a < H.edges.size(); ++a) {
        for (std::size_t b = a + 1; b < H.edges.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(H.edges[a].begin(), H.edges[a].end(),
                                  H.edges[b].begin(), H.edges[b].end(),
                                  std::back_inserter(inter));
            CHECK(inter.size() <= 1);
        }
    }
}

TEST_CASE("descartes boost: base cases") {
    Graph k2 = Graph::complete(2);
    DescartesResult res = descartes_boost(k2, 5, 3, 0);
    CHECK(res.gprime == k2);
    CHECK(res.hom.map == std::vector<int>{0, 1});
    CHECK(verify_homomorphism(res.hom).ok);
    CHECK(res.trace.empty());

    Graph k1 = Graph::empty(1);
    DescartesResult res1 = descartes_boost(k1, 4, 2, 0);
    CHECK(res1.gprime == k1);
}

TEST_CASE("descartes boost on K3: the classical triangle-free outcome") {
    Graph k3 = Graph::complete(3);
    DescartesResult res = descartes_boost(k3, 4, 3, 0);

    GirthReport gr = girth(res.gprime);
    CHECK((!gr.finite || gr.girth >= 4));
    HomReport hom = verify_homomorphism(res.hom);
    CHECK(hom.ok);
    CHECK(exact_chromatic(res.gprime).chromatic_number == 3);

    // determinism
    DescartesResult res2 = descartes_boost(k3, 4, 3, 0);
    CHECK(res2.gprime == res.gprime);
    CHECK(res2.hom.map == res.hom.map);
}

TEST_CASE("descartes boost handles isolated pivots (degenerate levels)") {
    // triangle plus an isolated vertex: pivot 3 has no lower neighbors
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    DescartesResult res = descartes_boost(g, 4, 3, 0);
    CHECK(verify_homomorphism(res.hom).ok);
    CHECK(exact_chromatic(res.gprime).chromatic_number == 3);
    REQUIRE(!res.trace.empty());
    CHECK(res.trace.back().degenerate);

    Colouring wit = exact_chromatic(res.gprime).witness;
    Colouring c = color_transfer(res, wit);
    CHECK(verify_proper(g, c).ok);
}

TEST_CASE("colour transfer: contract and membership") {
    Graph k3 = Graph::complete(3);
    DescartesResult res = descartes_boost(k3, 4, 3, 1);
    ChiResult chi = exact_chromatic(res.gprime);
    REQUIRE(chi.chromatic_number == 3);

    // every colour permutation of the witness is proper; transfer each
    std::vector<int> perm{1, 2, 3};
    do {
        Colouring c = chi.witness;
        for (int& x : c.assignment) x = perm[x - 1];
        Colouring base_c = color_transfer(res, c);
        CHECK(verify_proper(k3, base_c).ok);
        // K3 needs all three colours distinct
        CHECK(base_c.assignment[0] != base_c.assignment[1]);
        CHECK(base_c.assignment[1] != base_c.assignment[2]);
        // membership: c(v) appears in c'(h^{-1}(v))
        for (int v = 0; v < 3; ++v) {
            bool member = false;
            for (std::size_t w = 0; w < res.hom.map.size(); ++w)
                if (res.hom.map[w] == v && c.assignment[w] == base_c.assignment[v])
                    member = true;
            CHECK(member);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // base case: transfer is the identity
    DescartesResult id_res = descartes_boost(Graph::complete(2), 4, 2, 0);
    Colouring c2{2, {1, 2}};
    CHECK(color_transfer(id_res, c2).assignment == std::vector<int>{1, 2});

    // improper input rejected
    Colouring improper{3, std::vector<int>(res.gprime.vertex_count(), 1)};
    CHECK_THROWS_AS(color_transfer(res, improper), parameter_error);
    // too many colours rejected
    ChiResult chi4 = exact_chromatic(res.gprime);
    Colouring wide = chi4.witness;
    wide.k = 4;
    wide.assignment[0] = 4; // still proper but uses colour 4
    bool still_proper = verify_proper(res.gprime, wide).ok;
    if (still_proper) CHECK_THROWS_AS(color_transfer(res, wide), parameter_error);
}

TEST_CASE("no proper 2-colouring of the K3 boost exists (contrapositive)") {
    Graph k3 = Graph::complete(3);
    DescartesResult res = descartes_boost(k3, 4, 3, 0);
    CHECK(!k_colorable(res.gprime, 2));
}

TEST_CASE("descartes size budget errors cleanly") {
    // Moser spindle at high girth asks for enormous gadgets; with a tiny
    // budget this must be a resource error, not a hang
    setenv("HGG_DESCARTES_VERTEX_BUDGET", "50", 1);
    Graph spindle = Graph::moser_spindle();
    CHECK_THROWS_AS(descartes_boost(spindle, 4, 4, 0), resource_error);
    unsetenv("HGG_DESCARTES_VERTEX_BUDGET");
}

TEST_CASE("hypergraph json round-trip and trace export") {
    Hypergraph H = fano();
    Hypergraph back = hypergraph_from_json(hypergraph_to_json(H));
    CHECK(back.edges == H.edges);
    CHECK(back.vertex_count == H.vertex_count);
    CHECK(back.r == H.r);

    DescartesResult res = descartes_boost(Graph::complete(3), 4, 3, 0);
    nlohmann::json tj = trace_to_json(res);
    CHECK(tj.contains("levels"));
    CHECK(tj["levels"].size() == res.trace.size());
    CHECK(tj["homomorphism"].size() == res.hom.map.size());
}
