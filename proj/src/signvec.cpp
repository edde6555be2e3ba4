#include "hgg/signvec.hpp"

#include <algorithm>
#include <bit>

#include "hgg/errors.hpp"

namespace hgg {

namespace {

void validate_p(int p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw parameter_error("p must be an odd prime, got " + std::to_string(p));
    const long long cap = env_budget("HGG_MAX_P", 13);
    if (p > cap)
        throw parameter_error("p=" + std::to_string(p) + " exceeds cap " +
                              std::to_string(cap) + " (HGG_MAX_P)");
    if (4 * p > 64)
        throw resource_error("4p=" + std::to_string(4 * p) +
                             " exceeds the 64-bit packed representation");
}

} // namespace

std::vector<int> SignVector::coords() const {
    std::vector<int> c(length);
    for (int i = 0; i < length; ++i)
        c[i] = (plus_mask >> i) & 1u ? 1 : -1;
    return c;
}

std::string SignVector::bitstring() const {
    std::string s(length, '0');
    for (int i = 0; i < length; ++i)
        if ((plus_mask >> i) & 1u) s[i] = '1';
    return s;
}

SignVector SignVector::from_bitstring(const std::string& s) {
    if (s.size() > 64) throw parameter_error("bitstring longer than 64");
    SignVector v;
    v.length = static_cast<int>(s.size());
    for (int i = 0; i < v.length; ++i) {
        if (s[i] == '1')
            v.plus_mask |= (std::uint64_t{1} << i);
        else if (s[i] != '0')
            throw parameter_error("bitstring must be over {0,1}");
    }
    return v;
}

bool SignVector::valid() const {
    if (length <= 0 || length % 4 != 0 || length > 64) return false;
    if (std::popcount(plus_mask) != length / 2) return false;          // zero sum
    if (((plus_mask >> (length - 1)) & 1u) == 0) return false;         // last = +1
    return true;
}

BigInt vprime_size(int p) {
    return binomial(4 * p - 1, 2 * p - 1);
}

VPrimeFamily enumerate_vprime(int p) {
    validate_p(p);
    const BigInt count = vprime_size(p);
    const long long budget = env_budget("HGG_ENUM_BUDGET", 1'000'000);
    if (count > budget)
        throw resource_error("|V'| = " + count.str() + " exceeds enumeration budget " +
                             std::to_string(budget) + " (HGG_ENUM_BUDGET)");

    const int len = 4 * p;
    // First 4p-1 coordinates carry 2p-1 plus-ones; the last is pinned to +1.
    // std::next_permutation over the multiset {-1 x 2p, +1 x (2p-1)} walks
    // the prefixes in exactly the canonical lexicographic order.
    std::vector<int> prefix(len - 1, -1);
    std::fill(prefix.end() - (2 * p - 1), prefix.end(), 1);

    VPrimeFamily fam;
    fam.p = p;
    fam.vectors.reserve(static_cast<std::size_t>(to_int64(count)));
    do {
        SignVector v;
        v.length = len;
        for (int i = 0; i < len - 1; ++i)
            if (prefix[i] == 1) v.plus_mask |= (std::uint64_t{1} << i);
        v.plus_mask |= (std::uint64_t{1} << (len - 1));
        fam.vectors.push_back(v);
    } while (std::next_permutation(prefix.begin(), prefix.end()));

    if (static_cast<BigInt>(fam.vectors.size()) != count)
        throw invariant_violation("enumerate_vprime: count mismatch");
    return fam;
}

int inner_product(const SignVector& u, const SignVector& v) {
    if (u.length != v.length)
        throw parameter_error("inner_product: length mismatch");
    // <u,v> = (#agreements) - (#disagreements) = length - 2*popcount(xor)
    return u.length - 2 * std::popcount(u.plus_mask ^ v.plus_mask);
}

int shared_plus_count(const SignVector& u, const SignVector& v) {
    if (u.length != v.length)
        throw parameter_error("shared_plus_count: length mismatch");
    return std::popcount(u.plus_mask & v.plus_mask);
}

OrthogonalityGraph build_orthogonality_graph(int p) {
    VPrimeFamily fam = enumerate_vprime(p);
    const int n = static_cast<int>(fam.vectors.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t mi = fam.vectors[i].plus_mask;
        for (int j = i + 1; j < n; ++j) {
            // orthogonal <=> t = p shared plus-positions
            if (std::popcount(mi & fam.vectors[j].plus_mask) == p)
                edges.emplace_back(i, j);
        }
    }
    OrthogonalityGraph og;
    og.p = p;
    og.graph = Graph::from_edges(n, std::move(edges));
    og.vectors = std::move(fam.vectors);
    return og;
}

ChromaticCertificate frankl_wilson_certificate(int p) {
    validate_p(p);
    ChromaticCertificate c;
    c.p = p;
    c.family_size = vprime_size(p);
    c.independence_bound = 2 * binomial(4 * p, p - 1);
    c.chromatic_lower_bound = Rational(c.family_size, c.independence_bound);
    c.monomial_space_dim = 0;
    for (int k = 0; k <= p - 1; ++k) c.monomial_space_dim += binomial(4 * p, k);
    if (c.monomial_space_dim > c.independence_bound)
        throw invariant_violation("certificate: monomial space exceeds 2*C(4p,p-1)");
    return c;
}

int polynomial_evaluate(const SignVector& v, const SignVector& u, int p) {
    validate_p(p);
    if (v.length != 4 * p || u.length != 4 * p)
        throw parameter_error("polynomial_evaluate: vectors do not match p");
    int ip = inner_product(u, v) % p;
    if (ip < 0) ip += p;
    long long acc = 1;
    for (int i = 1; i <= p - 1; ++i)
        acc = (acc * ((ip - i) % p + p)) % p;
    return static_cast<int>(acc);
}

RankReport verify_rank_argument(const std::vector<SignVector>& S, int p) {
    validate_p(p);
    RankReport rep;
    rep.set_size = S.size();
    rep.independence_bound = 2 * binomial(4 * p, p - 1);
    for (const auto& v : S)
        if (v.length != 4 * p || !v.valid())
            throw parameter_error("verify_rank_argument: invalid member vector");

    // (a) orthogonality-free
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            if (inner_product(S[i], S[j]) == 0) {
                rep.found_orthogonal_pair = true;
                rep.violating_pair = {static_cast<int>(i), static_cast<int>(j)};
                rep.message = "orthogonal pair at indices (" + std::to_string(i) +
                              "," + std::to_string(j) + ")";
                return rep;
            }
        }
    }
    // (b) evaluation matrix: nonzero diagonal, zero off-diagonal => rank |S|
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (polynomial_evaluate(S[i], S[i], p) == 0) {
            rep.message = "diagonal entry vanishes at index " + std::to_string(i);
            return rep;
        }
        for (std::size_t j = 0; j < S.size(); ++j) {
            if (i == j) continue;
            if (polynomial_evaluate(S[i], S[j], p) != 0) {
                rep.violating_pair = {static_cast<int>(i), static_cast<int>(j)};
                rep.message = "off-diagonal entry nonzero at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")";
                return rep;
            }
        }
    }
    // (c) the dimension bound
    if (static_cast<BigInt>(S.size()) > rep.independence_bound) {
        rep.message = "set size exceeds 2*C(4p,p-1)";
        return rep;
    }
    rep.pass = true;
    rep.message = "rank argument verified: matrix is diagonal with nonzero entries";
    return rep;
}

std::vector<SignVector> greedy_independent_family(const VPrimeFamily& family) {
    std::vector<SignVector> S;
    for (const auto& v : family.vectors) {
        bool ok = true;
        for (const auto& u : S) {
            if (inner_product(u, v) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) S.push_back(v);
    }
    return S;
}

nlohmann::json orthogonality_graph_to_json(const OrthogonalityGraph& og) {
    nlohmann::json j;
    j["p"] = og.p;
    auto verts = nlohmann::json::array();
    for (const auto& v : og.vectors) verts.push_back(v.bitstring());
    j["vertices"] = verts;
    auto edges = nlohmann::json::array();
    for (auto [a, b] : og.graph.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

OrthogonalityGraph orthogonality_graph_from_json(const nlohmann::json& j) {
    OrthogonalityGraph og;
    og.p = j.at("p").get<int>();
    for (const auto& s : j.at("vertices"))
        og.vectors.push_back(SignVector::from_bitstring(s.get<std::string>()));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    og.graph = Graph::from_edges(static_cast<int>(og.vectors.size()), std::move(edges));
    return og;
}

nlohmann::json certificate_to_json(const ChromaticCertificate& c) {
    nlohmann::json j;
    j["p"] = c.p;
    j["family_size"] = to_int64(c.family_size);
    j["independence_bound"] = to_int64(c.independence_bound);
    j["chromatic_lower_bound"] = {
        {"num", to_int64(numerator(c.chromatic_lower_bound))},
        {"den", to_int64(denominator(c.chromatic_lower_bound))}};
    j["monomial_space_dim"] = to_int64(c.monomial_space_dim);
    return j;
}

} // namespace hgg
