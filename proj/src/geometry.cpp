#include "hgg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hgg/errors.hpp"

namespace hgg {

// ---------------------------------------------------------------- Turn

Turn Turn::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw parameter_error("turn: zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Turn{num / g, den / g};
}

Turn Turn::minus(const Turn& other) const {
    std::int64_t g = std::gcd(den, other.den);
    std::int64_t common = den / g * other.den; // lcm, desk-scale sized
    return Turn::of(num * (common / den) - other.num * (common / other.den), common);
}

Turn Turn::plus_half() const {
    std::int64_t g = std::gcd(den, std::int64_t{2});
    std::int64_t common = den / g * 2;
    return Turn::of(num * (common / den) + common / 2, common);
}

bool Turn::cos_is_zero() const {
    return (num == 1 && den == 4) || (num == 3 && den == 4);
}

bool Turn::cos_is_rational() const {
    return den == 1 || den == 2 || den == 3 || den == 4 || den == 6;
}

Rational Turn::cos_value() const {
    switch (den) {
        case 1: return Rational(1);
        case 2: return Rational(-1);                        // num == 1
        case 3: return Rational(-1, 2);                     // num in {1,2}
        case 4: return Rational(0);                         // num in {1,3}
        case 6: return num == 1 || num == 5 ? Rational(1, 2) : Rational(-1, 2);
        default:
            throw unsupported_input_error("cos(2*pi*" + std::to_string(num) + "/" +
                                          std::to_string(den) + ") is irrational");
    }
}

double Turn::cos_double() const {
    return std::cos(2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den));
}

double Turn::sin_double() const {
    return std::sin(2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den));
}

std::string layout_name(Layout l) {
    switch (l) {
        case Layout::raw: return "raw";
        case Layout::rotated_pair: return "rotated-pair";
        case Layout::plane_combination: return "plane-combination";
        case Layout::tensor: return "tensor";
    }
    return "raw";
}

Layout layout_from_name(const std::string& s) {
    if (s == "raw") return Layout::raw;
    if (s == "rotated-pair") return Layout::rotated_pair;
    if (s == "plane-combination") return Layout::plane_combination;
    if (s == "tensor") return Layout::tensor;
    throw io_error("unknown layout: " + s);
}

// ------------------------------------------------------- SymbolicPoint

BigInt SymbolicPoint::base_norm_sq() const {
    BigInt s = 0;
    for (std::int64_t x : base) s += BigInt(x) * x;
    return s;
}

Rational SymbolicPoint::norm_sq() const {
    return scale_sq * Rational(base_norm_sq());
}

bool SymbolicPoint::materializable() const {
    if (!rotated()) return true;
    return turn.num * 4 % turn.den == 0; // multiple of a quarter turn
}

std::vector<std::int64_t> SymbolicPoint::materialize() const {
    if (!rotated()) return base;
    if (!materializable())
        throw unsupported_input_error("point at turn " + std::to_string(turn.num) +
                                      "/" + std::to_string(turn.den) +
                                      " has no integer coordinates");
    // quarter-turn multiples: (cos, sin) in {(1,0),(0,1),(-1,0),(0,-1)}
    const int q = static_cast<int>(turn.num * 4 / turn.den); // 0..3
    const int cs[4] = {1, 0, -1, 0};
    const int sn[4] = {0, 1, 0, -1};
    const std::size_t d = base.size();
    std::vector<std::int64_t> out(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = cs[q] * base[i];
        out[d + i] = sn[q] * base[i];
    }
    return out;
}

std::vector<double> SymbolicPoint::to_double() const {
    const double s = std::sqrt(static_cast<double>(scale_sq));
    std::vector<double> out;
    if (rotated()) {
        const double c = turn.cos_double(), sn = turn.sin_double();
        const std::size_t d = base.size();
        out.resize(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = s * c * static_cast<double>(base[i]);
            out[d + i] = s * sn * static_cast<double>(base[i]);
        }
    } else {
        out.reserve(base.size());
        for (std::int64_t x : base) out.push_back(s * static_cast<double>(x));
    }
    return out;
}

namespace {

// primitive direction: base / gcd with first nonzero entry positive;
// returns the sign that was factored out (0 for the zero vector).
int primitive_direction(const std::vector<std::int64_t>& base,
                        std::vector<std::int64_t>& prim, std::int64_t& magnitude) {
    std::int64_t g = 0;
    for (std::int64_t x : base) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) { prim = base; magnitude = 0; return 0; }
    int sign = 0;
    prim.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        prim[i] = base[i] / g;
        if (sign == 0 && prim[i] != 0) sign = prim[i] > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (auto& x : prim) x = -x;
    magnitude = g;
    return sign;
}

bool equal_materialized(const SymbolicPoint& a, const SymbolicPoint& b) {
    std::vector<std::int64_t> ma = a.materialize(), mb = b.materialize();
    if (ma.size() != mb.size()) return false;
    // points are sqrt(sa)*ma and sqrt(sb)*mb: equal iff mb = lambda*ma with
    // rational lambda > 0 and sa = lambda^2 * sb
    std::size_t i0 = ma.size();
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (ma[i] != 0 || mb[i] != 0) { i0 = i; break; }
    }
    if (i0 == ma.size()) return true; // both zero points
    if (ma[i0] == 0 || mb[i0] == 0) return false;
    Rational lambda(mb[i0], ma[i0]);
    if (lambda <= 0) return false;
    for (std::size_t i = 0; i < ma.size(); ++i)
        if (Rational(mb[i]) != lambda * ma[i]) return false;
    return a.scale_sq == lambda * lambda * b.scale_sq;
}

} // namespace

bool same_point(const SymbolicPoint& a, const SymbolicPoint& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    if (a.rotated() && b.rotated()) {
        if (a.base.size() != b.base.size()) return false;
        // canonical form: (primitive direction, turn folded by the sign,
        // scale_sq * magnitude^2)
        std::vector<std::int64_t> pa, pb;
        std::int64_t ga, gb;
        int sa = primitive_direction(a.base, pa, ga);
        int sb = primitive_direction(b.base, pb, gb);
        if (sa == 0 || sb == 0) return sa == sb; // zero points
        if (pa != pb) return false;
        Turn ta = sa < 0 ? a.turn.plus_half() : a.turn;
        Turn tb = sb < 0 ? b.turn.plus_half() : b.turn;
        if (!(ta == tb)) return false;
        return a.scale_sq * ga * ga == b.scale_sq * gb * gb;
    }
    if (!a.rotated() && !b.rotated()) return equal_materialized(a, b);
    // cross-layout: exact only via materialization
    if (a.materializable() && b.materializable()) return equal_materialized(a, b);
    throw unsupported_input_error(
        "cannot compare a non-materializable rotated point across layouts");
}

// ----------------------------------------------------------- ExactValue

ExactValue ExactValue::of(Rational c0, Rational c1, Turn turn) {
    ExactValue v;
    if (c1 != 0 && turn.cos_is_rational()) {
        c0 += c1 * turn.cos_value();
        c1 = 0;
    }
    if (c1 == 0) turn = Turn{0, 1};
    v.c0 = std::move(c0);
    v.c1 = std::move(c1);
    v.turn = turn;
    return v;
}

bool ExactValue::equals(const Rational& r) const {
    // c1 != 0 means the cosine factor is irrational, so the sum cannot be
    // the rational r.
    return c1 == 0 && c0 == r;
}

Rational ExactValue::rational_value() const {
    if (c1 != 0)
        throw unsupported_input_error("value " + str() + " is irrational");
    return c0;
}

double ExactValue::to_double() const {
    return static_cast<double>(c0) + static_cast<double>(c1) * turn.cos_double();
}

std::string ExactValue::str() const {
    std::string s = rational_str(c0);
    if (c1 != 0)
        s += " + " + rational_str(c1) + "*cos(2pi*" + std::to_string(turn.num) +
             "/" + std::to_string(turn.den) + ")";
    return s;
}

// ---------------------------------------------------- inner products

namespace {

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

InnerProductValue symbolic_inner_product(const SymbolicPoint& a, const SymbolicPoint& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw parameter_error("inner product: ambient dimension mismatch");
    InnerProductValue out;
    out.scale_sq_a = a.scale_sq;
    out.scale_sq_b = b.scale_sq;
    if (a.rotated() && b.rotated()) {
        // <R(alpha)u, R(beta)v> = <u,v> * cos(2pi(alpha-beta))
        out.base_ip = dot(a.base, b.base);
        out.angle_diff = a.turn.minus(b.turn);
        return out;
    }
    if (!a.rotated() && !b.rotated()) {
        if (a.base.size() != b.base.size())
            throw parameter_error("inner product: base dimension mismatch");
        out.base_ip = dot(a.base, b.base);
        out.angle_diff = Turn{0, 1};
        return out;
    }
    // mixed: fall back to integer coordinates when possible
    const SymbolicPoint& rot = a.rotated() ? a : b;
    if (!rot.materializable())
        throw parameter_error("inner product: incompatible layouts");
    std::vector<std::int64_t> ma = a.materialize(), mb = b.materialize();
    out.base_ip = dot(ma, mb);
    out.angle_diff = Turn{0, 1};
    return out;
}

ExactValue InnerProductValue::value() const {
    if (base_ip == 0 || angle_diff.cos_is_zero())
        return ExactValue::of(Rational(0), Rational(0), Turn{0, 1});
    Rational factor;
    if (!rational_sqrt(scale_sq_a * scale_sq_b, factor))
        throw unsupported_input_error(
            "inner product value needs a rational scale factor; "
            "sqrt(" + rational_str(scale_sq_a * scale_sq_b) + ") is not rational");
    return ExactValue::of(Rational(0), factor * base_ip, angle_diff);
}

ExactValue squared_distance(const SymbolicPoint& a, const SymbolicPoint& b) {
    InnerProductValue ip = symbolic_inner_product(a, b);
    Rational norms = a.norm_sq() + b.norm_sq();
    if (ip.is_zero()) return ExactValue::of(norms, Rational(0), Turn{0, 1});
    Rational factor;
    if (!rational_sqrt(ip.scale_sq_a * ip.scale_sq_b, factor))
        throw unsupported_input_error("squared distance has an irrational cross term");
    return ExactValue::of(norms, Rational(-2) * factor * ip.base_ip, ip.angle_diff);
}

// ------------------------------------------------------------ builders

std::string kind_name(EmbeddingKind k) {
    switch (k) {
        case EmbeddingKind::orthogonality_sphere: return "orthogonality-sphere";
        case EmbeddingKind::unit_distance: return "unit-distance";
        case EmbeddingKind::diameter: return "diameter";
    }
    return "orthogonality-sphere";
}

EmbeddingKind kind_from_name(const std::string& s) {
    if (s == "orthogonality-sphere") return EmbeddingKind::orthogonality_sphere;
    if (s == "unit-distance") return EmbeddingKind::unit_distance;
    if (s == "diameter") return EmbeddingKind::diameter;
    throw io_error("unknown embedding kind: " + s);
}

Embedding raw_embedding(const std::vector<std::vector<std::int64_t>>& vectors) {
    if (vectors.empty()) throw parameter_error("raw_embedding: no points");
    Embedding e;
    e.ambient_dim = static_cast<int>(vectors[0].size());
    e.kind = EmbeddingKind::orthogonality_sphere;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != e.ambient_dim)
            throw parameter_error("raw_embedding: mixed dimensions");
        SymbolicPoint p;
        p.base = v;
        p.turn = Turn{0, 1};
        p.scale_sq = 1;
        p.layout = Layout::raw;
        e.points.push_back(std::move(p));
    }
    return e;
}

Embedding rotate_family(const VPrimeFamily& family, int m) {
    if (m < 1) throw parameter_error("rotate_family: m must be >= 1");
    Embedding e;
    e.kind = EmbeddingKind::orthogonality_sphere;
    e.ambient_dim = 8 * family.p;
    e.points.reserve(family.vectors.size() * static_cast<std::size_t>(m));
    for (const auto& v : family.vectors) {
        std::vector<std::int64_t> base;
        base.reserve(v.length);
        for (int c : v.coords()) base.push_back(c);
        for (int j = 0; j < m; ++j) {
            SymbolicPoint p;
            p.base = base;
            p.turn = Turn::of(j, m);
            p.scale_sq = 1;
            p.layout = Layout::rotated_pair;
            e.points.push_back(std::move(p));
        }
    }
    return e;
}

Embedding blowup_embed(const Embedding& base, int m) {
    if (m < 1) throw parameter_error("blowup_embed: m must be >= 1");
    if (base.kind != EmbeddingKind::orthogonality_sphere)
        throw parameter_error("blowup_embed: base must be an orthogonality-sphere embedding");
    if (base.points.empty()) throw parameter_error("blowup_embed: empty base");
    const Rational r2 = base.points[0].norm_sq();
    if (r2 == 0) throw parameter_error("blowup_embed: zero point in base");
    for (const auto& p : base.points)
        if (p.norm_sq() != r2)
            throw parameter_error("blowup_embed: base points not on a common sphere");

    const int n = static_cast<int>(base.points.size());
    Embedding out;
    out.kind = EmbeddingKind::orthogonality_sphere;
    out.ambient_dim = 2 * base.points[0].ambient_dim();
    out.points.reserve(static_cast<std::size_t>(n) * m);
    for (int s = 0; s < n; ++s) {
        std::vector<std::int64_t> w = base.points[s].materialize();
        BigInt w2 = 0;
        for (std::int64_t x : w) w2 += BigInt(x) * x;
        for (int t = 0; t < m; ++t) {
            SymbolicPoint p;
            p.base = w;
            p.turn = Turn::of(static_cast<std::int64_t>(s) * m + t,
                              4 * static_cast<std::int64_t>(m) * n);
            p.scale_sq = Rational(1, w2); // unit norm
            p.layout = Layout::plane_combination;
            out.points.push_back(std::move(p));
        }
    }
    return out;
}

Embedding tensor_square(const Embedding& emb) {
    Embedding out;
    out.kind = EmbeddingKind::diameter;
    out.points.reserve(emb.points.size());
    for (const auto& p : emb.points) {
        if (!p.materializable())
            throw unsupported_input_error(
                "tensor_square: point has no exact integer coordinates "
                "(rotate by quarter-turn multiples or use raw points)");
        std::vector<std::int64_t> w = p.materialize();
        const std::size_t d = w.size();
        SymbolicPoint t;
        t.base.resize(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t.base[i * d + j] = w[i] * w[j];
        t.turn = Turn{0, 1};
        t.scale_sq = p.scale_sq * p.scale_sq; // x = s*w  =>  x(x)x = s^2 * w(x)w
        t.layout = Layout::tensor;
        out.points.push_back(std::move(t));
    }
    out.ambient_dim = out.points.empty() ? 0 : static_cast<int>(out.points[0].base.size());
    return out;
}

Embedding to_unit_distance(const Embedding& emb) {
    if (emb.kind != EmbeddingKind::orthogonality_sphere)
        throw parameter_error("to_unit_distance: input must be an orthogonality-sphere embedding");
    if (emb.points.empty()) throw parameter_error("to_unit_distance: empty embedding");
    const Rational r2 = emb.points[0].norm_sq();
    if (r2 == 0) throw parameter_error("to_unit_distance: zero point");
    for (const auto& p : emb.points)
        if (p.norm_sq() != r2)
            throw parameter_error("to_unit_distance: non-uniform norms");
    Embedding out = emb;
    out.kind = EmbeddingKind::unit_distance;
    for (auto& p : out.points)
        p.scale_sq /= 2 * r2; // orthogonal pair: 2 * r2/(2 r2) = 1
    return out;
}

DiameterReport verify_diameter_property(const Embedding& emb, const Graph& g) {
    DiameterReport rep;
    const int n = static_cast<int>(emb.points.size());
    if (n != g.vertex_count()) {
        rep.message = "embedding size does not match graph order";
        return rep;
    }
    if (n < 2) {
        rep.message = "fewer than two points";
        return rep;
    }
    bool have_max = false;
    std::vector<std::vector<Rational>> dist(n);
    for (int i = 0; i < n; ++i) {
        dist[i].resize(n);
        for (int j = i + 1; j < n; ++j) {
            ExactValue d = squared_distance(emb.points[i], emb.points[j]);
            Rational val = d.rational_value(); // diameter checks need exact order
            dist[i][j] = val;
            if (!have_max || val > rep.max_sq_distance) {
                rep.max_sq_distance = val;
                have_max = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool at_max = dist[i][j] == rep.max_sq_distance;
            const bool edge = g.has_edge(i, j);
            if (edge && !at_max) rep.edges_below_max.emplace_back(i, j);
            if (!edge && at_max) rep.non_edges_at_max.emplace_back(i, j);
        }
    }
    rep.ok = rep.edges_below_max.empty() && rep.non_edges_at_max.empty();
    rep.message = rep.ok ? "maximum distance attained exactly on the edge set"
                         : std::to_string(rep.edges_below_max.size()) +
                               " edge(s) below max, " +
                               std::to_string(rep.non_edges_at_max.size()) +
                               " non-edge(s) at max";
    return rep;
}

BigInt reduced_tensor_dimension(int d) {
    if (d < 1) throw parameter_error("reduced_tensor_dimension: d must be >= 1");
    return BigInt(d) + binomial(d, 2);
}

OrthogonalityReport verify_orthogonality(const Embedding& emb, const Graph& g) {
    OrthogonalityReport rep;
    if (static_cast<int>(emb.points.size()) != g.vertex_count()) {
        rep.message = "embedding size does not match graph order";
        return rep;
    }
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (same_point(emb.points[i], emb.points[j])) {
                rep.violating_pair = {i, j};
                rep.message = "points " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide";
                return rep;
            }
        }
    }
    for (auto [a, b] : g.edges()) {
        if (!symbolic_inner_product(emb.points[a], emb.points[b]).is_zero()) {
            rep.violating_pair = {a, b};
            rep.message = "edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") joins non-orthogonal points";
            return rep;
        }
        ++rep.checked_edges;
    }
    rep.ok = true;
    rep.message = "all " + std::to_string(rep.checked_edges) +
                  " edges orthogonal; points pairwise distinct";
    return rep;
}

// -------------------------------------------------------------- export

namespace {

nlohmann::json scale_to_json(const Rational& scale_sq) {
    Rational root;
    if (rational_sqrt(scale_sq, root))
        return {{"num", to_int64(numerator(root))},
                {"den", to_int64(denominator(root))},
                {"sqrt", false}};
    return {{"num", to_int64(numerator(scale_sq))},
            {"den", to_int64(denominator(scale_sq))},
            {"sqrt", true}};
}

Rational scale_from_json(const nlohmann::json& j) {
    Rational v(BigInt(j.at("num").get<std::int64_t>()),
               BigInt(j.at("den").get<std::int64_t>()));
    if (j.at("sqrt").get<bool>()) return v; // value already is scale^2
    return v * v;
}

} // namespace

nlohmann::json embedding_to_json(const Embedding& e) {
    nlohmann::json j;
    j["ambient_dim"] = e.ambient_dim;
    j["kind"] = kind_name(e.kind);
    auto pts = nlohmann::json::array();
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        const auto& p = e.points[i];
        nlohmann::json pj;
        pj["id"] = i;
        pj["base"] = p.base;
        pj["angle"] = {{"num", p.turn.num}, {"den", p.turn.den}};
        pj["scale"] = scale_to_json(p.scale_sq);
        pj["layout"] = layout_name(p.layout);
        pts.push_back(std::move(pj));
    }
    j["points"] = pts;
    return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
    Embedding e;
    e.ambient_dim = j.at("ambient_dim").get<int>();
    e.kind = kind_from_name(j.at("kind").get<std::string>());
    e.points.resize(j.at("points").size());
    for (const auto& pj : j.at("points")) {
        SymbolicPoint p;
        p.base = pj.at("base").get<std::vector<std::int64_t>>();
        p.turn = Turn::of(pj.at("angle").at("num").get<std::int64_t>(),
                          pj.at("angle").at("den").get<std::int64_t>());
        p.scale_sq = scale_from_json(pj.at("scale"));
        p.layout = layout_from_name(pj.at("layout").get<std::string>());
        const std::size_t id = pj.at("id").get<std::size_t>();
        if (id >= e.points.size()) throw io_error("embedding json: bad point id");
        e.points[id] = std::move(p);
    }
    return e;
}

std::string embedding_to_csv(const Embedding& e) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& p : e.points) {
        std::vector<double> x = p.to_double();
        x.resize(e.ambient_dim, 0.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) os << ",";
            os << x[i];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace hgg
