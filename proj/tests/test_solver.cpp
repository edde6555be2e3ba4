#include <doctest.h>

#include "hgg/errors.hpp"
#include "hgg/signvec.hpp"
#include "hgg/solver.hpp"

using namespace hgg;

namespace {

// Oracle for tiny graphs: try every assignment in k^n.
bool oracle_k_colorable(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> a(n, 1);
    while (true) {
        bool ok = true;
        for (auto [x, y] : g.edges())
            if (a[x] == a[y]) { ok = false; break; }
        if (ok) return true;
        int i = 0;
        while (i < n && a[i] == k) a[i++] = 1;
        if (i == n) return false;
        ++a[i];
    }
}

int oracle_chromatic(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (oracle_k_colorable(g, k)) return k;
}

} // namespace

TEST_CASE("verify_proper") {
    Graph e3 = Graph::empty(3);
    CHECK(verify_proper(e3, Colouring{1, {1, 1, 1}}).ok);

    Graph c4 = Graph::cycle(4);
    CHECK(verify_proper(c4, Colouring{2, {1, 2, 1, 2}}).ok);

    Graph k2 = Graph::complete(2);
    ProperReport bad = verify_proper(k2, Colouring{1, {1, 1}});
    CHECK(!bad.ok);
    CHECK(bad.violating_edge == std::make_pair(0, 1));

    CHECK(!verify_proper(k2, Colouring{2, {1, 3}}).ok); // colour out of range
}

TEST_CASE("exact chromatic: textbook instances") {
    for (int n = 1; n <= 8; ++n)
        CHECK(exact_chromatic(Graph::complete(n)).chromatic_number == n);
    CHECK(exact_chromatic(Graph::cycle(5)).chromatic_number == 3);
    CHECK(exact_chromatic(Graph::cycle(6)).chromatic_number == 2);
    CHECK(exact_chromatic(Graph::cycle(9)).chromatic_number == 3);
    CHECK(exact_chromatic(Graph::petersen()).chromatic_number == 3);
    CHECK(exact_chromatic(Graph::moser_spindle()).chromatic_number == 4);
    CHECK(exact_chromatic(Graph::empty(5)).chromatic_number == 1);
    CHECK(exact_chromatic(Graph::empty(0)).chromatic_number == 0);
}

TEST_CASE("witness colouring uses exactly chi colours and is proper") {
    for (const Graph& g : {Graph::petersen(), Graph::moser_spindle(),
                           Graph::complete_bipartite(3, 4), Graph::cycle(7)}) {
        ChiResult res = exact_chromatic(g);
        CHECK(verify_proper(g, res.witness).ok);
        CHECK(res.witness.k == res.chromatic_number);
        int used = 0;
        for (int c : res.witness.assignment) used = std::max(used, c);
        CHECK(used == res.chromatic_number);
    }
}

TEST_CASE("agrees with brute force on small random graphs") {
    std::uint64_t state = 42;
    auto next = [&]() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(next() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (next() % 100 < 45) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, std::move(edges));
        CHECK(exact_chromatic(g).chromatic_number == oracle_chromatic(g));
    }
}

TEST_CASE("blow-ups preserve chromatic number") {
    for (const Graph& g : {Graph::complete(3), Graph::cycle(5), Graph::petersen(),
                           Graph::moser_spindle()}) {
        int chi = exact_chromatic(g).chromatic_number;
        for (int m : {2, 3})
            CHECK(exact_chromatic(blowup_graph(g, m).graph).chromatic_number == chi);
    }
}

TEST_CASE("k_colorable bracketing") {
    Graph spindle = Graph::moser_spindle();
    CHECK(!k_colorable(spindle, 3));
    Colouring wit;
    CHECK(k_colorable(spindle, 4, &wit));
    CHECK(verify_proper(spindle, wit).ok);
}

TEST_CASE("max independent set") {
    CHECK(max_independent_set(Graph::complete(6)).size == 1);
    CHECK(max_independent_set(Graph::cycle(5)).size == 2);
    CHECK(max_independent_set(Graph::petersen()).size == 4);
    MisResult mis = max_independent_set(Graph::complete_bipartite(3, 5));
    CHECK(mis.size == 5);
    CHECK(mis.exact);
    // witness independence
    for (std::size_t i = 0; i < mis.witness.size(); ++i)
        for (std::size_t j = i + 1; j < mis.witness.size(); ++j)
            CHECK(!Graph::complete_bipartite(3, 5).has_edge(mis.witness[i], mis.witness[j]));
}

TEST_CASE("independence bound on an induced Frankl-Wilson subgraph") {
    OrthogonalityGraph og = build_orthogonality_graph(3);
    std::vector<int> first40(40);
    for (int i = 0; i < 40; ++i) first40[i] = i;
    Graph sub = induced_subgraph(og.graph, first40);
    MisResult mis = max_independent_set(sub);
    CHECK(mis.exact);
    CHECK(mis.size <= 132);
    CHECK(mis.size >= 1);
}

TEST_CASE("cross-oracle consistency: chi >= n / alpha") {
    for (const Graph& g : {Graph::petersen(), Graph::moser_spindle(), Graph::cycle(9)}) {
        int chi = exact_chromatic(g).chromatic_number;
        MisResult mis = max_independent_set(g);
        REQUIRE(mis.exact);
        CHECK(chi * mis.size >= g.vertex_count());
    }
}

TEST_CASE("majority projection") {
    Graph base = Graph::complete(3);
    Blowup b = blowup_graph(base, 1);
    Colouring c{3, {1, 2, 3}};
    Colouring proj = majority_project(b, base, c);
    CHECK(proj.assignment == c.assignment);

    Blowup b3 = blowup_graph(base, 3);
    // part 0 coloured (1,1,2) -> 1; part 1 all 2 -> 2; part 2 tie (3,1,3)... -> 3
    Colouring c3{3, {1, 1, 2, 2, 2, 2, 3, 1, 3}};
    Colouring proj3 = majority_project(b3, base, c3);
    CHECK(proj3.assignment == std::vector<int>{1, 2, 3});

    // ties resolve toward the smallest colour id
    Blowup b2 = blowup_graph(base, 2);
    Colouring tie{3, {1, 2, 3, 2, 3, 1}};
    Colouring proj_tie = majority_project(b2, base, tie);
    CHECK(proj_tie.assignment == std::vector<int>{1, 2, 1});

    // part-constant colouring projects to that constant
    Colouring constant{3, {2, 2, 2, 3, 3, 3, 1, 1, 1}};
    CHECK(majority_project(b3, base, constant).assignment == std::vector<int>{2, 3, 1});
}

TEST_CASE("colouring json round-trip") {
    Colouring c{3, {1, 2, 3, 1}};
    Colouring back = colouring_from_json(colouring_to_json(c));
    CHECK(back.k == c.k);
    CHECK(back.assignment == c.assignment);
}
