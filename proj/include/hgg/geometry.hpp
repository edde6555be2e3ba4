#pragma once

// Exact symbolic embeddings.  A point is  sqrt(scale_sq) * R(turn) * base
// where base is an integer vector, turn is a rational fraction of a full
// turn and R is either the identity (raw/tensor layouts) or the rotation
// of base into the plane span{(base,0),(0,base)} (rotated layouts).
//
// All orthogonality / distance decisions reduce to integer arithmetic
// plus two exact trigonometric facts about rational turns q:
//   cos(2*pi*q) = 0        <=>  q = 1/4 or 3/4   (mod 1)
//   cos(2*pi*q) rational   <=>  den(q) | 12 with den in {1,2,3,4,6}
// (Niven); otherwise cos(2*pi*q) is irrational, so a value of the form
// r0 + r1*cos(2*pi*q) with rational r0, r1 != 0 can never equal a
// rational target.  No floating point is involved in any decision.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgg/exactmath.hpp"
#include "hgg/graph.hpp"
#include "hgg/signvec.hpp"

namespace hgg {

// Fraction of a full turn, reduced, normalized into [0, 1).
struct Turn {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Turn of(std::int64_t num, std::int64_t den);
    Turn minus(const Turn& other) const;       // difference mod 1
    Turn plus_half() const;                    // + 1/2 mod 1
    bool operator==(const Turn& o) const { return num == o.num && den == o.den; }

    bool is_zero() const { return num == 0; }
    bool cos_is_zero() const;                  // quarter or three-quarter turn
    bool cos_is_rational() const;
    Rational cos_value() const;                // only when cos_is_rational()
    double cos_double() const;
    double sin_double() const;
};

enum class Layout { raw, rotated_pair, plane_combination, tensor };

std::string layout_name(Layout l);
Layout layout_from_name(const std::string& s);

struct SymbolicPoint {
    std::vector<std::int64_t> base;
    Turn turn;                 // identity for raw/tensor layouts
    Rational scale_sq;         // positive; actual scale is its square root
    Layout layout = Layout::raw;

    bool rotated() const {
        return layout == Layout::rotated_pair || layout == Layout::plane_combination;
    }
    int ambient_dim() const {
        return rotated() ? 2 * static_cast<int>(base.size())
                         : static_cast<int>(base.size());
    }
    BigInt base_norm_sq() const;
    Rational norm_sq() const;  // scale_sq * |base|^2 (rotation preserves norm)

    // A point has exact integer-direction coordinates iff it is raw/tensor
    // or rotated by a multiple of a quarter turn.
    bool materializable() const;
    std::vector<std::int64_t> materialize() const; // pre-scale coordinates
    std::vector<double> to_double() const;         // lossy
};

// Exact equality as points of Euclidean space.  Throws unsupported_input
// only for cross-layout comparisons with a non-materializable rotated
// side (never produced by the pipelines here).
bool same_point(const SymbolicPoint& a, const SymbolicPoint& b);

// Canonical value c0 + c1 * cos(2*pi*turn); rational-cosine turns are
// folded into c0 on construction, so c1 != 0 implies the cosine term is
// irrational.
struct ExactValue {
    Rational c0;
    Rational c1;
    Turn turn;

    static ExactValue of(Rational c0, Rational c1, Turn turn);
    bool is_rational() const { return c1 == 0; }
    bool equals(const Rational& r) const;
    bool is_zero() const { return equals(Rational(0)); }
    Rational rational_value() const;           // only when is_rational()
    double to_double() const;
    std::string str() const;
};

// Structured inner product: (integer base inner product) * cos(2*pi*diff)
// * sqrt(scale_sq_a * scale_sq_b).  is_zero() is always exact; value()
// needs the scale factor to be rational unless the product vanishes.
struct InnerProductValue {
    std::int64_t base_ip = 0;
    Turn angle_diff;
    Rational scale_sq_a;
    Rational scale_sq_b;

    bool is_zero() const { return base_ip == 0 || angle_diff.cos_is_zero(); }
    ExactValue value() const;
};

InnerProductValue symbolic_inner_product(const SymbolicPoint& a, const SymbolicPoint& b);
ExactValue squared_distance(const SymbolicPoint& a, const SymbolicPoint& b);

enum class EmbeddingKind { orthogonality_sphere, unit_distance, diameter };

std::string kind_name(EmbeddingKind k);
EmbeddingKind kind_from_name(const std::string& s);

struct Embedding {
    int ambient_dim = 0;
    EmbeddingKind kind = EmbeddingKind::orthogonality_sphere;
    std::vector<SymbolicPoint> points;   // vertex id = index
};

// Raw integer points on a common sphere (helper for small bases).
Embedding raw_embedding(const std::vector<std::vector<std::int64_t>>& vectors);

// All rotations v(j), j in 0..m-1, of every family vector; ambient 8p.
Embedding rotate_family(const VPrimeFamily& family, int m);

// Blow-up embedding: m unit points per base point in the doubled-dimension
// plane span{(v,0),(0,v)}.  Point t of base vertex s gets turn
// (s*m + t) / (4*m*N), keeping every angle strictly inside the first
// quarter turn: distinct within and across planes (antipodal planes
// land in disjoint angle ranges) and no within-plane quarter-turn
// orthogonality.
Embedding blowup_embed(const Embedding& base, int m);

// v -> v (x) v, materialized integer coordinates, ambient dim d^2.
Embedding tensor_square(const Embedding& emb);

// Scales an orthogonality-sphere embedding by 1/sqrt(2 r^2) so orthogonal
// pairs land at squared distance exactly 1.
Embedding to_unit_distance(const Embedding& emb);

struct DiameterReport {
    bool ok = false;
    std::string message;
    Rational max_sq_distance;
    std::vector<std::pair<int, int>> edges_below_max;
    std::vector<std::pair<int, int>> non_edges_at_max;
};

// Checks max pairwise distance is attained exactly on graph edges.
DiameterReport verify_diameter_property(const Embedding& emb, const Graph& g);

// d + C(d,2): dimension of the subspace the reduced tensor lives in
// (companion calculator; the reduced embedding itself is out of scope).
BigInt reduced_tensor_dimension(int d);

struct OrthogonalityReport {
    bool ok = false;
    std::string message;
    std::pair<int, int> violating_pair{-1, -1};
    int checked_edges = 0;
};

// Every graph edge must join exactly orthogonal points, and points must
// be pairwise distinct.
OrthogonalityReport verify_orthogonality(const Embedding& emb, const Graph& g);

nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);
std::string embedding_to_csv(const Embedding& e);  // lossy 64-bit floats

} // namespace hgg
