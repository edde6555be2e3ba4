// hggraph: construct, boost, convert and verify high-girth high-chromatic
// geometric graphs.  Every command writes its artifacts plus a manifest
// with content digests into one output directory; all randomness comes
// from explicit --seed flags, so identical invocations produce identical
// artifact bytes.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgg/descartes.hpp"
#include "hgg/errors.hpp"
#include "hgg/geometry.hpp"
#include "hgg/graph.hpp"
#include "hgg/randboost.hpp"
#include "hgg/runio.hpp"
#include "hgg/signvec.hpp"
#include "hgg/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hgg;

namespace {

using clock_type = std::chrono::steady_clock;

struct Timer {
    clock_type::time_point start = clock_type::now();
    double seconds() const {
        return std::chrono::duration<double>(clock_type::now() - start).count();
    }
};

json rational_json(const Rational& r) {
    return {{"num", to_int64(numerator(r))}, {"den", to_int64(denominator(r))}};
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

// Accepts a file (json graph / blow-up / sign-vector graph / edge list)
// or a builtin name: K<n>, C<n>, petersen, moser-spindle.
Graph load_graph(const std::string& spec, RunManifest& manifest) {
    if (spec == "petersen") return Graph::petersen();
    if (spec == "moser-spindle") return Graph::moser_spindle();
    if (spec.size() > 1 && (spec[0] == 'K' || spec[0] == 'C') &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(spec.substr(1));
        return spec[0] == 'K' ? Graph::complete(n) : Graph::cycle(n);
    }
    std::string bytes = read_file(spec);
    manifest.inputs[fs::path(spec).filename().string()] = sha256_hex(bytes);
    if (fs::path(spec).extension() == ".json") {
        json j = json::parse(bytes);
        if (j.contains("vertices") && j.contains("p"))
            return orthogonality_graph_from_json(j).graph;
        return graph_from_json(j);
    }
    return graph_from_edge_list_text(bytes);
}

int fail(const std::string& what, int code) {
    std::cerr << "error: " << what << "\n";
    return code;
}

// ------------------------------------------------------------ construct

int cmd_construct(int p, int m, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "construct";
    manifest.parameters = {{"p", p}, {"m", m}};
    fs::path dir(out);

    OrthogonalityGraph og = build_orthogonality_graph(p);
    ChromaticCertificate cert = frankl_wilson_certificate(p);
    VPrimeFamily fam{p, og.vectors};
    Embedding emb = rotate_family(fam, m);

    json verification;
    verification["family_size_matches"] =
        BigInt(og.vectors.size()) == cert.family_size;
    verification["edge_count"] = og.graph.edge_count();
    verification["chi_lower_bound_ceiling"] =
        to_int64(rational_ceil(cert.chromatic_lower_bound));
    OrthogonalityReport orep = verify_orthogonality(emb, blowup_graph(og.graph, m).graph);
    verification["rotated_embedding_orthogonality"] = orep.ok;
    verification["rotated_points"] = emb.points.size();
    if (!orep.ok) verification["orthogonality_message"] = orep.message;

    write_artifact(manifest, dir, "orthogonality_graph.json",
                   json_bytes(orthogonality_graph_to_json(og)));
    write_artifact(manifest, dir, "graph.txt", to_edge_list_text(og.graph));
    write_artifact(manifest, dir, "certificate.json", json_bytes(certificate_to_json(cert)));
    write_artifact(manifest, dir, "embedding.json", json_bytes(embedding_to_json(emb)));
    write_artifact(manifest, dir, "embedding.csv", embedding_to_csv(emb));

    manifest.verification = verification;
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, dir);
    bool ok = orep.ok && verification["family_size_matches"].get<bool>();
    std::cout << "construct: |V'|=" << og.vectors.size() << " edges="
              << og.graph.edge_count() << " bound="
              << rational_str(cert.chromatic_lower_bound) << " -> " << out << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- boost

int cmd_boost(const std::string& in, const std::string& method, int g, int k,
              int m, bool auto_m, int m_cap, const std::string& q_str, bool q_paper,
              std::uint64_t seed, int max_retries, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "boost";
    fs::path dir(out);
    Graph base = load_graph(in, manifest);
    manifest.parameters = {{"in", in},   {"method", method},   {"g", g},
                           {"k", k},     {"m", m},             {"auto_m", auto_m},
                           {"q", q_str}, {"q_paper", q_paper}, {"seed", seed},
                           {"max_retries", max_retries}};

    json verification;
    bool ok = false;

    if (method == "descartes") {
        int kk = k > 0 ? k : exact_chromatic(base).chromatic_number;
        DescartesResult res = descartes_boost(base, g, kk, seed);
        GirthReport gr = girth(res.gprime);
        HomReport hom_rep = verify_homomorphism(res.hom);
        int chi_base = exact_chromatic(base).chromatic_number;
        int chi_prime = exact_chromatic(res.gprime).chromatic_number;
        verification["girth"] = gr.finite ? json(gr.girth) : json("infinity");
        verification["girth_ok"] = !gr.finite || gr.girth >= g;
        verification["homomorphism_ok"] = hom_rep.ok;
        verification["chi_base"] = chi_base;
        verification["chi_gprime"] = chi_prime;
        verification["chi_preserved"] = chi_base == chi_prime;
        ok = verification["girth_ok"].get<bool>() && hom_rep.ok && chi_base == chi_prime;

        write_artifact(manifest, dir, "boosted_graph.json",
                       json_bytes(graph_to_json(res.gprime)));
        write_artifact(manifest, dir, "boosted_graph.txt", to_edge_list_text(res.gprime));
        json hom_json = {{"map", res.hom.map}, {"surjective", true}};
        write_artifact(manifest, dir, "homomorphism.json", json_bytes(hom_json));
        write_artifact(manifest, dir, "trace.json", json_bytes(trace_to_json(res)));
        std::cout << "descartes: |V(G')|=" << res.gprime.vertex_count()
                  << " girth=" << (gr.finite ? std::to_string(gr.girth) : "inf")
                  << " chi=" << chi_prime << "\n";
    } else if (method == "random") {
        Rational q;
        ChiOracle oracle = [](const Graph& gg) {
            return exact_chromatic(gg).chromatic_number;
        };
        int chi_base = exact_chromatic(base).chromatic_number;
        BoostResult res;
        int m_cur = m;
        for (;;) {
            const BigInt n_blow = BigInt(base.vertex_count()) * m_cur;
            if (q_paper)
                q = paper_q(n_blow, g);
            else if (!q_str.empty())
                q = parse_rational(q_str);
            else
                throw parameter_error("random boost needs --q or --q-paper");
            BoostParams params{g, m_cur, q, seed, max_retries};
            res = boost_girth_random(base, params, oracle);
            if (res.success || !auto_m || 2 * m_cur > m_cap) break;
            m_cur *= 2; // doubling search on the blow-up size
        }
        verification["m_used"] = m_cur;
        verification["q"] = rational_json(q);
        verification["retries_used"] = res.retries_used;
        verification["chi_base"] = chi_base;
        if (res.success) {
            GirthReport gr = girth(res.graph);
            verification["girth"] = gr.finite ? json(gr.girth) : json("infinity");
            verification["girth_ok"] = !gr.finite || gr.girth > g;
            verification["chi"] = res.chi;
            verification["chi_preserved"] = res.chi == chi_base;
            verification["seed_used"] = res.seed_used;
            ok = verification["girth_ok"].get<bool>() && res.chi == chi_base;
            write_artifact(manifest, dir, "boosted_graph.json",
                           json_bytes(graph_to_json(res.graph)));
            write_artifact(manifest, dir, "boosted_graph.txt",
                           to_edge_list_text(res.graph));
            write_artifact(manifest, dir, "blowup_parts.json",
                           json_bytes(blowup_to_json(res.blowup)));
            std::cout << "random boost: success seed=" << res.seed_used
                      << " retries=" << res.retries_used << " edges="
                      << res.graph.edge_count() << " chi=" << res.chi << "\n";
        } else {
            json attempts = json::array();
            for (const auto& a : res.attempts)
                attempts.push_back({{"seed", a.seed},
                                    {"kept_edges", a.kept_edges},
                                    {"pruned_edges", a.pruned_edges},
                                    {"chi", a.chi}});
            verification["attempts"] = attempts;
            std::cout << "random boost: failed after " << res.attempts.size()
                      << " attempts\n";
        }
    } else {
        throw parameter_error("unknown method: " + method);
    }

    manifest.verification = verification;
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, dir);
    return ok ? 0 : 1;
}

// -------------------------------------------------------------- convert

int cmd_convert(const std::string& in, const std::string& target,
                const std::string& graph_file, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "convert";
    manifest.parameters = {{"in", in}, {"target", target}, {"graph", graph_file}};
    fs::path dir(out);

    std::string bytes = read_file(in);
    manifest.inputs[fs::path(in).filename().string()] = sha256_hex(bytes);
    Embedding emb = embedding_from_json(json::parse(bytes));
    Graph g = load_graph(graph_file, manifest);

    json verification;
    bool ok = false;
    if (target == "unit-distance") {
        Embedding ud = to_unit_distance(emb);
        long long checked = 0, violations = 0;
        for (auto [a, b] : g.edges()) {
            if (!squared_distance(ud.points[a], ud.points[b]).equals(Rational(1)))
                ++violations;
            ++checked;
        }
        verification["edges_checked"] = checked;
        verification["edges_not_at_unit_distance"] = violations;
        ok = violations == 0;
        write_artifact(manifest, dir, "embedding.json", json_bytes(embedding_to_json(ud)));
        write_artifact(manifest, dir, "embedding.csv", embedding_to_csv(ud));
        std::cout << "unit-distance: " << checked << " edges checked, " << violations
                  << " violations\n";
    } else if (target == "diameter") {
        Embedding tens = tensor_square(emb);
        DiameterReport rep = verify_diameter_property(tens, g);
        verification["diameter_ok"] = rep.ok;
        verification["message"] = rep.message;
        verification["max_sq_distance"] = rational_json(rep.max_sq_distance);
        ok = rep.ok;
        write_artifact(manifest, dir, "embedding.json", json_bytes(embedding_to_json(tens)));
        write_artifact(manifest, dir, "embedding.csv", embedding_to_csv(tens));
        std::cout << "diameter: " << rep.message << "\n";
    } else {
        throw parameter_error("unknown target: " + target);
    }

    manifest.verification = verification;
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, dir);
    return ok ? 0 : 1;
}

// --------------------------------------------------------------- verify

int cmd_verify(const std::string& graph_file, bool do_girth, int expect_girth,
               int cycles_upto, const std::string& embedding_file, bool do_orth,
               const std::string& hom_file, const std::string& target_file,
               bool surjective, const std::string& colouring_file,
               const std::string& blowup_file, const std::string& base_file,
               int m_prime, int rank_p, bool rank_greedy, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "verify";
    json report;
    bool all_ok = true;

    Graph g;
    bool have_graph = false;
    if (!graph_file.empty()) {
        g = load_graph(graph_file, manifest);
        have_graph = true;
    }

    if (do_girth) {
        if (!have_graph) throw parameter_error("--girth needs --graph");
        GirthReport rep = girth(g);
        report["girth"] = rep.finite ? json(rep.girth) : json("infinity");
        if (rep.finite) report["girth_witness"] = rep.witness;
        if (expect_girth > 0) {
            bool match = rep.finite && rep.girth == expect_girth;
            report["girth_expected"] = expect_girth;
            report["girth_ok"] = match;
            all_ok = all_ok && match;
        }
    }
    if (cycles_upto >= 3) {
        if (!have_graph) throw parameter_error("--cycles needs --graph");
        json counts;
        for (auto [len, c] : count_cycles_upto(g, cycles_upto))
            counts[std::to_string(len)] = c;
        report["cycle_counts"] = counts;
    }
    if (do_orth) {
        if (embedding_file.empty() || !have_graph)
            throw parameter_error("--orthogonality needs --embedding and --graph");
        std::string bytes = read_file(embedding_file);
        manifest.inputs[fs::path(embedding_file).filename().string()] = sha256_hex(bytes);
        Embedding emb = embedding_from_json(json::parse(bytes));
        OrthogonalityReport rep = verify_orthogonality(emb, g);
        report["orthogonality_ok"] = rep.ok;
        report["orthogonality_message"] = rep.message;
        if (!rep.ok)
            report["orthogonality_violating_pair"] = {rep.violating_pair.first,
                                                      rep.violating_pair.second};
        all_ok = all_ok && rep.ok;
    }
    if (!hom_file.empty()) {
        if (!have_graph || target_file.empty())
            throw parameter_error("--homomorphism needs --graph (source) and --target");
        std::string bytes = read_file(hom_file);
        manifest.inputs[fs::path(hom_file).filename().string()] = sha256_hex(bytes);
        json hj = json::parse(bytes);
        Homomorphism h;
        h.source = g;
        h.target = load_graph(target_file, manifest);
        h.map = hj.at("map").get<std::vector<int>>();
        h.claims_surjective = surjective;
        HomReport rep = verify_homomorphism(h);
        report["homomorphism_ok"] = rep.ok;
        report["homomorphism_message"] = rep.message;
        all_ok = all_ok && rep.ok;
    }
    if (!colouring_file.empty()) {
        if (!have_graph) throw parameter_error("--colouring needs --graph");
        std::string bytes = read_file(colouring_file);
        manifest.inputs[fs::path(colouring_file).filename().string()] = sha256_hex(bytes);
        Colouring c = colouring_from_json(json::parse(bytes));
        ProperReport rep = verify_proper(g, c);
        report["colouring_ok"] = rep.ok;
        report["colouring_message"] = rep.message;
        all_ok = all_ok && rep.ok;
    }
    if (!blowup_file.empty()) {
        if (base_file.empty() || m_prime < 1)
            throw parameter_error("--supersaturation needs --blowup, --base, --m-prime");
        std::string bytes = read_file(blowup_file);
        manifest.inputs[fs::path(blowup_file).filename().string()] = sha256_hex(bytes);
        Blowup b = blowup_from_json(json::parse(bytes));
        Graph base = load_graph(base_file, manifest);
        SupersatReport rep = check_supersaturation(b, base, m_prime);
        report["supersaturation_ok"] = rep.pass;
        report["supersaturation_message"] = rep.message;
        if (!rep.pass) {
            report["supersaturation_W"] = rep.W;
            report["supersaturation_U"] = rep.U;
        }
        all_ok = all_ok && rep.pass;
    }
    if (rank_p > 0) {
        if (!rank_greedy)
            throw parameter_error("--rank-p currently needs --rank-greedy");
        VPrimeFamily fam = enumerate_vprime(rank_p);
        std::vector<SignVector> S = greedy_independent_family(fam);
        RankReport rep = verify_rank_argument(S, rank_p);
        report["rank_ok"] = rep.pass;
        report["rank_message"] = rep.message;
        report["rank_set_size"] = rep.set_size;
        report["rank_bound"] = to_int64(rep.independence_bound);
        all_ok = all_ok && rep.pass;
    }

    report["all_ok"] = all_ok;
    std::cout << report.dump(2) << "\n";
    if (!out.empty()) {
        manifest.verification = report;
        manifest.elapsed_seconds = timer.seconds();
        write_artifact(manifest, fs::path(out), "report.json", json_bytes(report));
        write_manifest(manifest, fs::path(out));
    }
    return all_ok ? 0 : 1;
}

// ----------------------------------------------------------- hypergraph

int cmd_hypergraph(int r, int k, int g, std::uint64_t seed, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "hypergraph";
    manifest.parameters = {{"r", r}, {"k", k}, {"g", g}, {"seed", seed}};
    fs::path dir(out);

    HypergraphGenMeta meta;
    Hypergraph H = generate_hypergraph(r, k, g, seed, &meta);
    auto girth_val = hypergraph_girth(H);

    json verification;
    verification["vertices"] = H.vertex_count;
    verification["edges"] = H.edges.size();
    verification["girth"] = girth_val ? json(*girth_val) : json("infinity");
    verification["girth_ok"] = !girth_val || *girth_val >= g;
    verification["chromatic"] = meta.chromatic;
    verification["chromatic_ok"] = meta.chromatic >= k + 1;
    verification["seed_used"] = meta.seed_used;
    verification["attempts"] = meta.attempts;

    write_artifact(manifest, dir, "hypergraph.json", json_bytes(hypergraph_to_json(H)));
    manifest.verification = verification;
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, dir);
    std::cout << "hypergraph: n=" << H.vertex_count << " edges=" << H.edges.size()
              << " girth=" << (girth_val ? std::to_string(*girth_val) : "inf")
              << " chi=" << meta.chromatic << "\n";
    return verification["girth_ok"].get<bool>() && verification["chromatic_ok"].get<bool>()
               ? 0
               : 1;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const std::string& in, const std::string& out) {
    Timer timer;
    RunManifest manifest;
    manifest.command = "solve";
    manifest.parameters = {{"in", in}};
    Graph g = load_graph(in, manifest);
    ChiResult res = exact_chromatic(g);
    std::cout << "chi = " << res.chromatic_number << "\n";
    if (!out.empty()) {
        fs::path dir(out);
        json verification;
        verification["chi"] = res.chromatic_number;
        verification["witness_proper"] = verify_proper(g, res.witness).ok;
        write_artifact(manifest, dir, "colouring.json",
                       json_bytes(colouring_to_json(res.witness)));
        manifest.verification = verification;
        manifest.elapsed_seconds = timer.seconds();
        write_manifest(manifest, dir);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-girth, high-chromatic geometric graph toolkit"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand(
        "construct", "build the sign-vector family, its orthogonality graph, "
                     "rotation embedding and certificate");
    int p = 3, m_rot = 1;
    std::string out;
    construct->add_option("--p", p, "odd prime parameter")->required();
    construct->add_option("--m", m_rot, "rotations per vector");
    construct->add_option("--out", out, "output directory")->required();

    auto* boost_cmd = app.add_subcommand(
        "boost", "raise girth while preserving the chromatic number");
    std::string in, method = "random", q_str;
    int g = 4, k = 0, m = 16, m_cap = 4096, max_retries = 16;
    bool auto_m = false, q_paper = false;
    std::uint64_t seed = 0;
    boost_cmd->add_option("--in", in,
                          "input graph (file or K<n>/C<n>/petersen/moser-spindle)")
        ->required();
    boost_cmd->add_option("--method", method, "random | descartes");
    boost_cmd->add_option("--g", g, "target girth parameter")->required();
    boost_cmd->add_option("--k", k, "colour budget (descartes; default chi(base))");
    boost_cmd->add_option("--m", m, "blow-up size (random)");
    boost_cmd->add_flag("--auto-m", auto_m, "double m until success (random)");
    boost_cmd->add_option("--m-cap", m_cap, "cap for --auto-m");
    boost_cmd->add_option("--q", q_str, "edge keep probability as NUM/DEN (random)");
    boost_cmd->add_flag("--q-paper", q_paper, "use q = n^{-(1-1/(2g))} (random)");
    boost_cmd->add_option("--seed", seed, "base seed");
    boost_cmd->add_option("--max-retries", max_retries, "seed retries per m (random)");
    boost_cmd->add_option("--out", out, "output directory")->required();

    auto* convert = app.add_subcommand(
        "convert", "turn an orthogonality embedding into a unit-distance or "
                   "diameter one");
    std::string target = "unit-distance", graph_file;
    convert->add_option("--in", in, "embedding json")->required();
    convert->add_option("--target", target, "unit-distance | diameter")->required();
    convert->add_option("--graph", graph_file, "graph whose edges are checked")
        ->required();
    convert->add_option("--out", out, "output directory")->required();

    auto* verify = app.add_subcommand("verify", "run exact checks on artifacts");
    bool do_girth = false, do_orth = false, surjective = false, rank_greedy = false;
    int expect_girth = 0, cycles_upto = 0, m_prime = 0, rank_p = 0;
    std::string embedding_file, hom_file, target_file, colouring_file, blowup_file,
        base_file;
    verify->add_option("--graph", graph_file, "graph file or builtin name");
    verify->add_flag("--girth", do_girth, "compute exact girth");
    verify->add_option("--expect-girth", expect_girth, "fail unless girth equals this");
    verify->add_option("--cycles", cycles_upto, "count cycles up to this length");
    verify->add_option("--embedding", embedding_file, "embedding json");
    verify->add_flag("--orthogonality", do_orth, "check edges are orthogonal pairs");
    verify->add_option("--homomorphism", hom_file,
                       "homomorphism json ({\"map\": [...]})");
    verify->add_option("--target", target_file, "homomorphism target graph");
    verify->add_flag("--surjective", surjective, "also require surjectivity");
    verify->add_option("--colouring", colouring_file, "colouring json");
    verify->add_option("--blowup", blowup_file, "blow-up json with parts");
    verify->add_option("--base", base_file, "base graph for supersaturation");
    verify->add_option("--m-prime", m_prime, "subset size for supersaturation");
    verify->add_option("--rank-p", rank_p, "verify the rank argument for this p");
    verify->add_flag("--rank-greedy", rank_greedy,
                     "use the greedy maximal orthogonality-free family");
    verify->add_option("--out", out, "optional output directory");

    auto* hyper = app.add_subcommand(
        "hypergraph", "generate a verified high-girth high-chromatic uniform "
                      "hypergraph");
    int r = 3;
    hyper->add_option("--r", r, "uniformity")->required();
    hyper->add_option("--k", k, "chromatic number must exceed this")->required();
    hyper->add_option("--g", g, "minimum girth")->required();
    hyper->add_option("--seed", seed, "seed");
    hyper->add_option("--out", out, "output directory")->required();

    auto* solve = app.add_subcommand("solve", "exact chromatic number");
    solve->add_option("--in", in, "graph file or builtin name")->required();
    solve->add_option("--out", out, "optional output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(p, m_rot, out);
        if (boost_cmd->parsed())
            return cmd_boost(in, method, g, k, m, auto_m, m_cap, q_str, q_paper, seed,
                             max_retries, out);
        if (convert->parsed()) return cmd_convert(in, target, graph_file, out);
        if (verify->parsed())
            return cmd_verify(graph_file, do_girth, expect_girth, cycles_upto,
                              embedding_file, do_orth, hom_file, target_file,
                              surjective, colouring_file, blowup_file, base_file,
                              m_prime, rank_p, rank_greedy, out);
        if (hyper->parsed()) return cmd_hypergraph(r, k, g, seed, out);
        if (solve->parsed()) return cmd_solve(in, out);
    } catch (const parameter_error& e) {
        return fail(e.what(), 2);
    } catch (const unsupported_input_error& e) {
        return fail(e.what(), 2);
    } catch (const resource_error& e) {
        return fail(e.what(), 3);
    } catch (const io_error& e) {
        return fail(e.what(), 2);
    } catch (const std::exception& e) {
        return fail(e.what(), 4);
    }
    return 0;
}
