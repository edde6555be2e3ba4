#include "hgg/randboost.hpp"

#include <algorithm>
#include <bit>

#include "hgg/errors.hpp"

namespace hgg {

Rational paper_q(const BigInt& n, int g) {
    if (n < 2) throw parameter_error("paper_q: n must be >= 2");
    if (g < 2) throw parameter_error("paper_q: g must be >= 2");
    // q = n^{-(2g-1)/(2g)}.  Find k = floor(2^32 * q) by binary search on
    // k^{2g} * n^{2g-1} <= 2^{64g}.
    const unsigned r = 2 * static_cast<unsigned>(g);
    const BigInt pow_n = ipow(n, r - 1);
    const BigInt T = BigInt(1) << 32;
    const BigInt rhs = ipow(T, r);
    BigInt lo = 0, hi = T;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (ipow(mid, r) * pow_n <= rhs)
            lo = mid;
        else
            hi = mid - 1;
    }
    return Rational(lo, T);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t edge_draw(std::uint64_t seed, std::uint64_t edge_key) {
    return splitmix64(splitmix64(seed ^ 0xD1B54A32D192ED03ULL) + edge_key);
}

} // namespace

Graph subsample_edges(const Graph& g0, const Rational& q, std::uint64_t seed) {
    if (q < 0 || q > 1) throw parameter_error("subsample_edges: q outside [0,1]");
    if (q == 1) return g0;
    std::vector<std::pair<int, int>> kept;
    if (q != 0) {
        // keep iff draw/2^64 < q, i.e. draw < floor(q*2^64); floor keeps
        // the threshold monotone in q, which gives the coupling property
        const BigInt threshold_big = (numerator(q) << 64) / denominator(q);
        const std::uint64_t threshold = threshold_big.convert_to<std::uint64_t>();
        const std::uint64_t n = static_cast<std::uint64_t>(g0.vertex_count());
        for (auto [a, b] : g0.edges()) {
            const std::uint64_t key = static_cast<std::uint64_t>(a) * n +
                                      static_cast<std::uint64_t>(b);
            if (edge_draw(seed, key) < threshold)
                kept.emplace_back(a, b);
        }
    }
    return Graph::from_edges(g0.vertex_count(), std::move(kept));
}

Graph prune_short_cycles(const Graph& g0, int g) {
    Graph cur = g0;
    while (true) {
        std::optional<int> len = shortest_cycle_upto(cur, g);
        if (!len) return cur;
        auto witness = first_cycle_of_length(cur, *len);
        if (!witness)
            throw invariant_violation("prune: shortest cycle disappeared");
        const std::vector<int>& cyc = *witness;
        std::pair<int, int> least{-1, -1};
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a > b) std::swap(a, b);
            if (least.first < 0 || std::make_pair(a, b) < least) least = {a, b};
        }
        cur = remove_edge(cur, least.first, least.second);
    }
}

SupersatReport check_supersaturation(const Blowup& gb, const Graph& base, int m_prime) {
    SupersatReport rep;
    if (gb.base_n != base.vertex_count())
        throw parameter_error("supersaturation: blow-up does not match base");
    if (m_prime < 1 || m_prime > gb.copies)
        throw parameter_error("supersaturation: m' must be in 1..m");

    const long long budget = env_budget("HGG_SUBSET_BUDGET", 20'000'000LL);
    const BigInt per_edge = binomial(gb.copies, m_prime);
    if (per_edge * base.edge_count() > budget)
        throw resource_error(
            "supersaturation: C(m,m')*e(base) = " + BigInt(per_edge * base.edge_count()).str() +
            " exceeds budget " + std::to_string(budget) +
            " (HGG_SUBSET_BUDGET); use the chromatic check instead");

    const int m = gb.copies;
    if (m > 64) throw resource_error("supersaturation: parts wider than 64 unsupported");

    for (auto [u, v] : base.edges()) {
        const std::vector<int> pu = gb.part(u), pv = gb.part(v);
        if (static_cast<int>(pu.size()) != m || static_cast<int>(pv.size()) != m)
            throw parameter_error("supersaturation: ragged parts");
        // adjacency masks from side u into side v
        std::vector<std::uint64_t> to_v(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (gb.graph.has_edge(pu[i], pv[j]))
                    to_v[i] |= (std::uint64_t{1} << j);
        const std::uint64_t full = m == 64 ? ~std::uint64_t{0}
                                           : ((std::uint64_t{1} << m) - 1);
        // enumerate W (m'-subsets of side u); a violation exists iff the
        // common non-neighborhood of some W still holds m' vertices
        std::vector<int> idx(m_prime);
        for (int i = 0; i < m_prime; ++i) idx[i] = i;
        while (true) {
            std::uint64_t common_miss = full;
            for (int i : idx) common_miss &= ~to_v[i];
            ++rep.subsets_checked;
            if (std::popcount(common_miss) >= m_prime) {
                rep.base_u = u;
                rep.base_v = v;
                for (int i : idx) rep.W.push_back(pu[i]);
                for (int j = 0; j < m && static_cast<int>(rep.U.size()) < m_prime; ++j)
                    if ((common_miss >> j) & 1u) rep.U.push_back(pv[j]);
                rep.message = "subsets of parts " + std::to_string(u) + " and " +
                              std::to_string(v) + " span no edge";
                return rep;
            }
            // next m'-combination of {0..m-1}
            int t = m_prime - 1;
            while (t >= 0 && idx[t] == m - m_prime + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int s = t + 1; s < m_prime; ++s) idx[s] = idx[s - 1] + 1;
        }
    }
    rep.pass = true;
    rep.message = "every m'-subset pair over every base edge spans an edge";
    return rep;
}

BoostResult boost_girth_random(const Graph& base, const BoostParams& params,
                               const ChiOracle& chi) {
    if (params.m < 1) throw parameter_error("boost: m must be >= 1");
    if (params.target_girth < 3) throw parameter_error("boost: g must be >= 3");
    if (params.max_retries < 1) throw parameter_error("boost: max_retries must be >= 1");

    ChiOracle oracle = chi;
    if (!oracle)
        oracle = [](const Graph& g) { return exact_chromatic(g).chromatic_number; };

    BoostResult result;
    result.blowup = blowup_graph(base, params.m);
    const int chi_base = base.vertex_count() == 0 ? 0 : oracle(base);

    for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(attempt);
        Graph sampled = subsample_edges(result.blowup.graph, params.q, seed);
        Graph pruned = prune_short_cycles(sampled, params.target_girth);

        BoostAttempt stat;
        stat.seed = seed;
        stat.kept_edges = sampled.edge_count();
        stat.pruned_edges = sampled.edge_count() - pruned.edge_count();
        stat.chi = pruned.vertex_count() == 0 ? 0 : oracle(pruned);
        result.attempts.push_back(stat);

        if (stat.chi == chi_base) {
            result.success = true;
            result.graph = std::move(pruned);
            result.retries_used = attempt;
            result.seed_used = seed;
            result.chi = stat.chi;
            return result;
        }
    }
    result.success = false;
    result.retries_used = params.max_retries;
    return result;
}

std::map<int, Rational> expected_cycle_bound(const BigInt& n, const Rational& q,
                                             int max_len) {
    std::map<int, Rational> out;
    const Rational nq = Rational(n) * q;
    for (int len = 3; len <= max_len; ++len)
        out[len] = rpow(nq, static_cast<unsigned>(len)) / 2;
    return out;
}

} // namespace hgg
