#pragma once

// The +-1 vector family V' for an odd prime p (length 4p, last coordinate
// +1, zero sum), its orthogonality graph, and the F_p polynomial-method
// certificate bounding independent sets by 2*C(4p, p-1).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgg/exactmath.hpp"
#include "hgg/graph.hpp"

namespace hgg {

// Bit-packed: bit i set <=> coordinate i is +1.  Length 4p <= 64, so one
// word suffices for every admissible p.
struct SignVector {
    int length = 0;
    std::uint64_t plus_mask = 0;

    std::vector<int> coords() const;       // entries +1 / -1
    std::string bitstring() const;         // '1' for +1, '0' for -1
    static SignVector from_bitstring(const std::string& s);
    bool valid() const;                    // type invariants

    bool operator==(const SignVector& o) const {
        return length == o.length && plus_mask == o.plus_mask;
    }
};

struct VPrimeFamily {
    int p = 0;
    std::vector<SignVector> vectors;       // canonical lexicographic order
};

// All of V' in canonical order (lexicographic on coordinate sequences,
// -1 < +1).  Errors: p not an odd prime, p over the cap (HGG_MAX_P,
// default 13), or C(4p-1, 2p-1) over the enumeration budget
// (HGG_ENUM_BUDGET, default 1e6).
VPrimeFamily enumerate_vprime(int p);

// Exact count without enumerating: C(4p-1, 2p-1).
BigInt vprime_size(int p);

int inner_product(const SignVector& u, const SignVector& v);
int shared_plus_count(const SignVector& u, const SignVector& v); // t with <u,v> = 4(t-p)

struct OrthogonalityGraph {
    int p = 0;
    Graph graph;                       // vertex i <-> vectors[i]
    std::vector<SignVector> vectors;
};

// Vertex set V', edges exactly the orthogonal pairs.
OrthogonalityGraph build_orthogonality_graph(int p);

struct ChromaticCertificate {
    int p = 0;
    BigInt family_size;            // C(4p-1, 2p-1)
    BigInt independence_bound;     // 2*C(4p, p-1)
    Rational chromatic_lower_bound;// family_size / independence_bound, exact
    BigInt monomial_space_dim;     // sum_{k<=p-1} C(4p, k)
};

ChromaticCertificate frankl_wilson_certificate(int p);

// f_v(u) = prod_{i=1..p-1} (<u,v> - i) mod p, in 0..p-1.
int polynomial_evaluate(const SignVector& v, const SignVector& u, int p);

struct RankReport {
    bool pass = false;
    std::string message;
    bool found_orthogonal_pair = false;
    std::pair<int, int> violating_pair{-1, -1}; // indices into S
    std::size_t set_size = 0;
    BigInt independence_bound;
};

// Checks that S is orthogonality-free, that the evaluation matrix
// M[v][u] = f_v(u) mod p is nonzero exactly on the diagonal (hence has
// rank |S|), and that |S| <= 2*C(4p, p-1).
RankReport verify_rank_argument(const std::vector<SignVector>& S, int p);

// Greedy maximal orthogonality-free subset, scanning canonical order.
std::vector<SignVector> greedy_independent_family(const VPrimeFamily& family);

nlohmann::json orthogonality_graph_to_json(const OrthogonalityGraph& og);
OrthogonalityGraph orthogonality_graph_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const ChromaticCertificate& c);

} // namespace hgg
