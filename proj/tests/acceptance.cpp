// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every numeric check is exact (integer/rational); runtimes are
// wall-clock.  The CLI determinism criterion shells out to the hggraph
// binary named by the HGG_CLI environment variable.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgg/descartes.hpp"
#include "hgg/errors.hpp"
#include "hgg/geometry.hpp"
#include "hgg/graph.hpp"
#include "hgg/randboost.hpp"
#include "hgg/runio.hpp"
#include "hgg/signvec.hpp"
#include "hgg/solver.hpp"

using namespace hgg;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    clock_type::time_point start = clock_type::now();
    bool ok = true;
    std::vector<std::string> notes;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    double seconds() const {
        return std::chrono::duration<double>(clock_type::now() - start).count();
    }
    ~Criterion() {
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << seconds() << " s)";
        std::cout << line.str() << "\n";
        for (const auto& n : notes) std::cout << "       - " << n << "\n";
        std::cout.flush();
        if (!ok) ++failures;
    }
};

// ---- pinned regression values -----------------------------------------

// Exact bound ratios r_p = C(4p,2p)/(4 C(4p,p-1)), frozen from the
// binomial arithmetic; the suite recomputes and compares.
const std::map<int, std::pair<const char*, const char*>> kTrendPinned = {
    {3, {"7", "2"}},            // r^{1/3}  ~ 1.5183
    {5, {"143", "15"}},         // r^{1/5}  ~ 1.5699
    {7, {"4845", "182"}},       // r^{1/7}  ~ 1.5981
    {11, {"310155", "1463"}},   // r^{1/11} ~ 1.6273
    {13, {"898101", "1495"}},   // r^{1/13} ~ 1.6361
};

// Randomized booster configurations (criterion 6); found once, then fixed.
constexpr int kK3BoostM = 16;
constexpr int kK3BoostQNum = 1, kK3BoostQDen = 4;
constexpr std::uint64_t kK3BoostSeed = 0;
constexpr int kK3BoostRetries = 0; // pinned after the first successful run

constexpr int kK4BoostM = 192;
constexpr int kK4BoostQNum = 1, kK4BoostQDen = 72; // degree target 8 = q*3m
constexpr std::uint64_t kK4BoostSeed = 67;
constexpr int kK4BoostRetries = 0; // pinned after the first successful run

} // namespace

// ----------------------------------------------------------------- C1/C2

static void criterion_1() {
    Criterion c("C1 Frankl-Wilson p=3 instance: 462 / 132 / 7/2 / chi >= 4, < 10 s");
    OrthogonalityGraph og = build_orthogonality_graph(3);
    ChromaticCertificate cert = frankl_wilson_certificate(3);
    c.check(og.graph.vertex_count() == 462, "|V'| != 462");
    c.check(cert.family_size == 462, "family_size != 462");
    c.check(cert.family_size == binomial(11, 5), "C(11,5) mismatch");
    c.check(cert.independence_bound == 132, "independence bound != 132");
    c.check(cert.independence_bound == 2 * binomial(12, 2), "2*C(12,2) mismatch");
    c.check(cert.chromatic_lower_bound == Rational(7, 2), "bound != 7/2");
    c.check(rational_ceil(cert.chromatic_lower_bound) == 4, "ceil != 4");

    // solver cross-check of chi >= 4: find four pairwise orthogonal
    // vectors (a K4 in the graph) and confirm the subgraph needs 4 colours
    std::vector<int> clique{0};
    for (int v = 1; v < og.graph.vertex_count() && clique.size() < 4; ++v) {
        bool ok = true;
        for (int u : clique)
            if (!og.graph.has_edge(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    c.check(clique.size() == 4, "no K4 found in the orthogonality graph");
    if (clique.size() == 4) {
        Graph sub = induced_subgraph(og.graph, clique);
        c.check(exact_chromatic(sub).chromatic_number == 4, "K4 subgraph not 4-chromatic");
    }
    c.check(c.seconds() < 10.0, "runtime over 10 s");
}

static void criterion_2() {
    Criterion c("C2 mod-p dichotomy, exhaustive over V' x V' at p=3, zero exceptions");
    VPrimeFamily fam = enumerate_vprime(3);
    long long checked = 0, exceptions = 0;
    for (const auto& v : fam.vectors) {
        for (const auto& u : fam.vectors) {
            const bool nonzero = polynomial_evaluate(v, u, 3) != 0;
            const bool expected = (v == u) || inner_product(v, u) == 0;
            if (nonzero != expected) ++exceptions;
            ++checked;
        }
    }
    c.check(checked == 462LL * 462LL, "pair count wrong");
    c.check(exceptions == 0, std::to_string(exceptions) + " exceptions");
}

// -------------------------------------------------------------------- C3

static void criterion_3() {
    Criterion c("C3 asymptotic trend: r_p^{1/p} strictly increasing, < 27/16; r_13^{1/13} > 1.55");
    std::vector<int> ps{3, 5, 7, 11, 13};
    std::vector<Rational> r;
    for (int p : ps) {
        Rational rp(binomial(4 * p, 2 * p), 4 * binomial(4 * p, p - 1));
        r.push_back(rp);
        const auto& pinned = kTrendPinned.at(p);
        c.check(rp == Rational(BigInt(pinned.first), BigInt(pinned.second)),
                "pinned ratio mismatch at p=" + std::to_string(p));
        c.check(rp == frankl_wilson_certificate(p).chromatic_lower_bound,
                "certificate disagrees at p=" + std::to_string(p));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        c.check(r[i] < rpow(Rational(27, 16), ps[i]),
                "r^{1/p} not below 27/16 at p=" + std::to_string(ps[i]));
        if (i + 1 < ps.size())
            c.check(rpow(r[i], ps[i + 1]) < rpow(r[i + 1], ps[i]),
                    "sequence not strictly increasing at p=" + std::to_string(ps[i]));
    }
    // r_13 > 1.55^13 exactly, with 1.55 = 31/20
    c.check(r.back() > rpow(Rational(31, 20), 13), "r_13^{1/13} <= 1.55");
}

// -------------------------------------------------------------------- C4

static void criterion_4() {
    Criterion c("C4 blow-up embeddings: m^2 cross-orthogonality, unit norms, distinctness");
    struct Case {
        const char* name;
        Embedding base;
        Graph graph;
    };
    std::vector<Case> cases;
    cases.push_back({"K2", raw_embedding({{1, 0}, {0, 1}}), Graph::complete(2)});
    cases.push_back({"C4", raw_embedding({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                     Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})});
    cases.push_back({"basis-triangle", raw_embedding({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                     Graph::complete(3)});
    for (const auto& cs : cases) {
        for (int m : {1, 2, 3}) {
            Embedding blown = blowup_embed(cs.base, m);
            const int n = static_cast<int>(cs.base.points.size());
            for (const auto& p : blown.points)
                c.check(p.norm_sq() == Rational(1),
                        std::string(cs.name) + ": non-unit point");
            for (std::size_t i = 0; i < blown.points.size(); ++i)
                for (std::size_t j = i + 1; j < blown.points.size(); ++j)
                    c.check(!same_point(blown.points[i], blown.points[j]),
                            std::string(cs.name) + ": coincident points");
            for (auto [a, b] : cs.graph.edges())
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        c.check(symbolic_inner_product(blown.points[a * m + i],
                                                       blown.points[b * m + j])
                                    .is_zero(),
                                std::string(cs.name) + ": cross pair not orthogonal");
            c.check(static_cast<int>(blown.points.size()) == n * m, "point count");
        }
    }
}

// -------------------------------------------------------------------- C5

static void criterion_5() {
    Criterion c("C5 unit-distance edges exactly 1; tensor max distance exactly on edges");
    OrthogonalityGraph og = build_orthogonality_graph(3);
    // a 30-vertex induced subgraph that actually carries edges: collect
    // vertex ids from the canonical edge list
    std::set<int> id_set;
    for (auto [a, b] : og.graph.edges()) {
        id_set.insert(a);
        id_set.insert(b);
        if (id_set.size() >= 30) break;
    }
    std::vector<int> ids(id_set.begin(), id_set.end());
    ids.resize(30);
    Graph sub = induced_subgraph(og.graph, ids);
    c.check(sub.edge_count() > 0, "induced subgraph has no edges");

    std::vector<std::vector<std::int64_t>> vecs;
    for (int id : ids) {
        std::vector<std::int64_t> v;
        for (int x : og.vectors[id].coords()) v.push_back(x);
        vecs.push_back(std::move(v));
    }
    Embedding emb = raw_embedding(vecs);

    Embedding ud = to_unit_distance(emb);
    for (auto [a, b] : sub.edges())
        c.check(squared_distance(ud.points[a], ud.points[b]).equals(Rational(1)),
                "edge not at squared distance exactly 1");

    Embedding tens = tensor_square(emb);
    // <T(v),T(u)> = <v,u>^2 with zero error, all pairs
    for (int i = 0; i < 30; ++i) {
        for (int j = i + 1; j < 30; ++j) {
            Rational tip = symbolic_inner_product(tens.points[i], tens.points[j])
                               .value().rational_value();
            Rational ip = symbolic_inner_product(emb.points[i], emb.points[j])
                              .value().rational_value();
            c.check(tip == ip * ip, "tensor inner product mismatch");
        }
    }
    DiameterReport rep = verify_diameter_property(tens, sub);
    c.check(rep.ok, "diameter property violated: " + rep.message);
    c.check(rep.max_sq_distance == Rational(2 * 144), "max distance != 2(4p)^2");
}

// -------------------------------------------------------------------- C6

static void criterion_6() {
    {
        Criterion c("C6a randomized booster on K3 (g=4): triangle-free, chi=3, < 2 min");
        Graph k3 = Graph::complete(3);
        BoostParams params{4, kK3BoostM, Rational(kK3BoostQNum, kK3BoostQDen),
                           kK3BoostSeed, 20};
        BoostResult res = boost_girth_random(k3, params);
        c.check(res.success, "booster failed");
        if (res.success) {
            c.check(res.retries_used == kK3BoostRetries,
                    "retry count regression: " + std::to_string(res.retries_used));
            c.check(res.chi == 3, "chi != 3");
            auto counts = count_cycles_upto(res.graph, 4);
            c.check(counts[3] == 0, "triangles survive");
            c.check(counts[4] == 0, "4-cycles survive");
            for (auto e : res.graph.edges())
                c.check(res.blowup.graph.has_edge(e.first, e.second),
                        "not a subgraph of the blow-up");
        }
        c.check(c.seconds() < 120.0, "runtime over 2 min");
    }
    {
        Criterion c("C6b randomized booster on K4 (g=5): girth >= 6, chi=4, < 2 min");
        Graph k4 = Graph::complete(4);
        BoostParams params{5, kK4BoostM, Rational(kK4BoostQNum, kK4BoostQDen),
                           kK4BoostSeed, 8};
        BoostResult res = boost_girth_random(k4, params);
        c.check(res.success, "booster failed");
        if (res.success) {
            c.check(res.retries_used == kK4BoostRetries,
                    "retry count regression: " + std::to_string(res.retries_used));
            c.check(res.chi == 4, "chi != 4");
            GirthReport gr = girth(res.graph);
            c.check(gr.finite && gr.girth >= 6, "girth below 6");
            for (auto e : res.graph.edges())
                c.check(res.blowup.graph.has_edge(e.first, e.second),
                        "not a subgraph of the blow-up");
        }
        c.check(c.seconds() < 120.0, "runtime over 2 min");
    }
}

// -------------------------------------------------------------------- C7

static void criterion_7() {
    Criterion c("C7 Monte Carlo cycle counts vs (nq)^l/2 over 200 seeded samples");
    Graph base = Graph::complete(5);
    Blowup blow = blowup_graph(base, 6); // 30 vertices
    const BigInt n = 30;
    const Rational q(1, 6);
    std::map<int, Rational> total;
    for (int len = 3; len <= 6; ++len) total[len] = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Graph s = subsample_edges(blow.graph, q, seed);
        for (auto [len, cnt] : count_cycles_upto(s, 6)) total[len] += cnt;
    }
    auto bound = expected_cycle_bound(n, q, 6);
    for (int len = 3; len <= 6; ++len) {
        Rational mean = total[len] / 200;
        c.check(mean <= bound[len],
                "mean exceeds bound at length " + std::to_string(len) + ": " +
                    rational_str(mean) + " > " + rational_str(bound[len]));
    }
}

// -------------------------------------------------------------------- C8

static void criterion_8() {
    Criterion c("C8 explicit booster: K2 base case; K3 g=4 k=3 with colour transfer, < 5 min");
    // base case
    Graph k2 = Graph::complete(2);
    DescartesResult base_res = descartes_boost(k2, 6, 3, 0);
    c.check(base_res.gprime == k2, "K2 must return itself");
    c.check(base_res.hom.map == std::vector<int>({0, 1}), "identity homomorphism");

    // K3, g=4, k=3
    Graph k3 = Graph::complete(3);
    DescartesResult res = descartes_boost(k3, 4, 3, 0);
    GirthReport gr = girth(res.gprime);
    c.check(!gr.finite || gr.girth >= 4, "girth below 4");
    HomReport hom = verify_homomorphism(res.hom);
    c.check(hom.ok, "homomorphism failed: " + hom.message);
    ChiResult chi = exact_chromatic(res.gprime);
    c.check(chi.chromatic_number == 3, "chi(G') != 3");

    // transfer every solver-found proper 3-colouring (witness and all of
    // its colour relabellings)
    std::vector<int> perm{1, 2, 3};
    int transfers = 0;
    do {
        Colouring cp = chi.witness;
        for (int& x : cp.assignment) x = perm[x - 1];
        ProperReport pr = verify_proper(res.gprime, cp);
        c.check(pr.ok, "permuted witness not proper");
        Colouring base_c = color_transfer(res, cp);
        ProperReport pb = verify_proper(k3, base_c);
        c.check(pb.ok, "transferred colouring not proper");
        for (int v = 0; v < 3; ++v) {
            bool member = false;
            for (std::size_t w = 0; w < res.hom.map.size(); ++w)
                if (res.hom.map[w] == v && cp.assignment[w] == base_c.assignment[v])
                    member = true;
            c.check(member, "membership contract c(v) in c'(h^{-1}(v)) violated");
        }
        ++transfers;
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.check(transfers == 6, "expected 6 transferred colourings");
    c.check(c.seconds() < 300.0, "runtime over 5 min");
}

// -------------------------------------------------------------------- C9

static void criterion_9() {
    Criterion c("C9 hypergraph gadget r=3 k=2 g=3 verified; Fano regression");
    HypergraphGenMeta meta;
    Hypergraph H = generate_hypergraph(3, 2, 3, 0, &meta);
    c.check(H.r == 3, "not 3-uniform");
    for (const auto& e : H.edges) c.check(e.size() == 3, "edge size != 3");
    for (std::size_t a = 0; a < H.edges.size(); ++a) {
        for (std::size_t b = a + 1; b < H.edges.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(H.edges[a].begin(), H.edges[a].end(),
                                  H.edges[b].begin(), H.edges[b].end(),
                                  std::back_inserter(inter));
            c.check(inter.size() <= 1, "pairwise intersection above 1");
        }
    }
    auto gv = hypergraph_girth(H);
    c.check(!gv || *gv >= 3, "girth below 3");
    c.check(hypergraph_chromatic(H) >= 3, "weak chromatic number below 3");

    Hypergraph fano;
    fano.vertex_count = 7;
    fano.r = 3;
    fano.edges = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    c.check(hypergraph_girth(fano) == 3, "Fano girth != 3");
    c.check(hypergraph_chromatic(fano) == 3, "Fano chromatic != 3");
}

// ------------------------------------------------------------------- C10

namespace {

std::map<std::string, std::string> dir_digests(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().filename() == "manifest.json") continue;
        out[entry.path().filename().string()] = sha256_hex(read_file(entry.path()));
    }
    return out;
}

int run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

} // namespace

static void criterion_10() {
    Criterion c("C10 determinism: re-runs produce byte-identical exports and digests");
    const char* cli_env = std::getenv("HGG_CLI");
    if (cli_env == nullptr || *cli_env == '\0') {
        c.check(false, "HGG_CLI not set; cannot exercise the CLI");
        return;
    }
    std::string cli(cli_env);
    fs::path tmp = fs::temp_directory_path() / "hgg_acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    struct Run {
        const char* name;
        std::string args;
    };
    std::vector<Run> runs = {
        {"construct", "construct --p 3 --m 4"},
        {"boost-descartes", "boost --in K3 --method descartes --g 4 --k 3 --seed 5"},
        {"boost-random", "boost --in K3 --method random --g 4 --m 16 --q 1/4 --seed 0"},
        {"hypergraph", "hypergraph --r 3 --k 2 --g 3 --seed 0"},
    };
    for (const auto& run : runs) {
        fs::path d1 = tmp / (std::string(run.name) + "_1");
        fs::path d2 = tmp / (std::string(run.name) + "_2");
        int rc1 = run_cli(cli, run.args + " --out " + d1.string());
        int rc2 = run_cli(cli, run.args + " --out " + d2.string());
        c.check(rc1 == 0, std::string(run.name) + ": first run failed");
        c.check(rc2 == 0, std::string(run.name) + ": second run failed");
        if (rc1 != 0 || rc2 != 0) continue;
        auto h1 = dir_digests(d1), h2 = dir_digests(d2);
        c.check(h1 == h2, std::string(run.name) + ": artifact bytes differ");
        // manifests record identical digests
        auto m1 = nlohmann::json::parse(read_file(d1 / "manifest.json"));
        auto m2 = nlohmann::json::parse(read_file(d2 / "manifest.json"));
        c.check(m1["artifacts"] == m2["artifacts"],
                std::string(run.name) + ": manifest digests differ");
    }
    // convert pipeline: the m=1 family embedding aligns with the graph
    fs::path ud1 = tmp / "ud_1", ud2 = tmp / "ud_2";
    fs::path cplain1 = tmp / "cp_1", cplain2 = tmp / "cp_2";
    run_cli(cli, "construct --p 3 --m 1 --out " + cplain1.string());
    run_cli(cli, "construct --p 3 --m 1 --out " + cplain2.string());
    std::string conv1 = "convert --in " + (cplain1 / "embedding.json").string() +
                        " --target unit-distance --graph " +
                        (cplain1 / "orthogonality_graph.json").string() + " --out " +
                        ud1.string();
    std::string conv2 = "convert --in " + (cplain2 / "embedding.json").string() +
                        " --target unit-distance --graph " +
                        (cplain2 / "orthogonality_graph.json").string() + " --out " +
                        ud2.string();
    c.check(run_cli(cli, conv1) == 0, "convert run 1 failed");
    c.check(run_cli(cli, conv2) == 0, "convert run 2 failed");
    c.check(dir_digests(ud1) == dir_digests(ud2), "convert outputs differ");

    fs::remove_all(tmp);
}

int main() {
    std::cout << "acceptance suite (" << kToolVersion << ")\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
