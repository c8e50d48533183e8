#ifndef POTTSKIT_STAR_TRIANGLE_HPP
#define POTTSKIT_STAR_TRIANGLE_HPP

// The star-triangle machinery. Conventions, fixed once for the whole
// library:
//   * Unprimed weights live on the star (three edges at a degree-3 center,
//     edge i touching boundary vertex x_i), primed weights on the triangle
//     (edge i opposite x_i).
//   * The reduced-weight map sends star to triangle. At n = 2 it involves
//     square roots (principal branch, positive on the positive cone); for
//     n >= 3 it is rational but only defined on the constraint surface.
//   * The per-edge resolution of the beta products uses the cube-root gauge
//     beta'_i = beta_i (beta'/beta)^{1/3} in numeric code. Exact-field
//     surgery uses the rational resolution that puts the whole ratio on the
//     first edge; partition functions and all compared ratios are
//     gauge-independent.

#include "pottskit/potts.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pottskit {

using Cplx = std::complex<double>;
using TTriple = std::array<Cplx, 3>;

struct StarTriangleResult {
    TTriple t_prime;
    Cplx beta_product_prime;
};

class map_pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class condition_error : public std::domain_error {
public:
    condition_error(const std::string& what, double residual)
        : std::domain_error(what), residual(residual) {}
    double residual;
};

inline Cplx s_involution(Cplx t) {
    if (std::abs(t + 1.0) < 1e-14) throw map_pole_error("s_involution: pole at t = -1");
    return (t - 1.0) / (t + 1.0);
}

// The inverse fractional-linear map (S has order four, not two).
inline Cplx s_inverse(Cplx t) {
    if (std::abs(t - 1.0) < 1e-14) throw map_pole_error("s_inverse: pole at t = 1");
    return (1.0 + t) / (1.0 - t);
}

namespace detail {
inline void check_nonzero(Cplx d, const char* what) {
    if (std::abs(d) < 1e-14) throw map_pole_error(std::string(what) + ": zero denominator");
}

// Branch-coherent evaluation: the first component is the principal square
// root and the other two are forced by the rational pairwise products
//   t'_1 t'_2 = (t1t2t3+1)/(t3+t1t2)   (and permutations),
// so the output is a genuine branch of the algebraic map for any complex
// input; `flip` selects the other coherent branch (global sign).
inline TTriple f_map_branch(const TTriple& t, bool flip) {
    Cplx p1 = t[0] + t[1] * t[2];
    Cplx p2 = t[1] + t[0] * t[2];
    Cplx p3 = t[2] + t[0] * t[1];
    Cplx top = t[0] * t[1] * t[2] + 1.0;
    check_nonzero(p1, "f_map");
    check_nonzero(p2, "f_map");
    check_nonzero(p3, "f_map");
    Cplx x1 = std::sqrt(p1 * top / (p2 * p3));
    check_nonzero(x1, "f_map");
    if (flip) x1 = -x1;
    return {x1, (top / p3) / x1, (top / p2) / x1};
}

// Branch-free residual of the defining ratios: for a genuine star/triangle
// pair (t, y) all four expressions (t_i + t_j t_k)/y_i and
// (t1t2t3+1)/(y1y2y3) agree (they all equal the beta ratio).
inline double star_triangle_ratio_residual(const TTriple& t, const TTriple& y) {
    Cplx r1 = (t[0] + t[1] * t[2]) / y[0];
    Cplx r2 = (t[1] + t[0] * t[2]) / y[1];
    Cplx r3 = (t[2] + t[0] * t[1]) / y[2];
    Cplx r4 = (t[0] * t[1] * t[2] + 1.0) / (y[0] * y[1] * y[2]);
    return std::max({std::abs(r1 - r2), std::abs(r1 - r3), std::abs(r1 - r4)}) /
           (1.0 + std::abs(r1));
}
} // namespace detail

// Star weights to triangle weights:
//   t'_1 = sqrt((t1+t2t3)(t1t2t3+1) / ((t2+t1t3)(t3+t1t2))), cyclically,
// with the principal branch; all-positive input gives all-positive output,
// and the pairwise product identities hold exactly on every input.
inline TTriple f_map(const TTriple& t) { return detail::f_map_branch(t, false); }

// Same with the product of betas tracked:
//   beta' = beta sqrt((t1+t2t3)(t3+t1t2)(t2+t1t3) / (t1t2t3+1)).
inline StarTriangleResult f_map_with_beta(const TTriple& t, Cplx beta_product) {
    Cplx p1 = t[0] + t[1] * t[2];
    Cplx p2 = t[1] + t[0] * t[2];
    Cplx p3 = t[2] + t[0] * t[1];
    Cplx top = t[0] * t[1] * t[2] + 1.0;
    detail::check_nonzero(top, "f_map_with_beta");
    StarTriangleResult r;
    r.t_prime = f_map(t);
    r.beta_product_prime = beta_product * std::sqrt(p1 * p2 * p3 / top);
    return r;
}

namespace detail {
// Both genuine preimages of y under the map (they differ by the deck
// transformation t -> 1/t componentwise, since F(1/t) = F(t) identically).
// Candidates are produced by S^3 o F o S^3 on both coherent branches and
// validated by the branch-free ratio system.
inline std::vector<TTriple> f_preimages(const TTriple& y) {
    std::vector<TTriple> out;
    if (std::abs(y[0] - 1.0) < 1e-14 && std::abs(y[1] - 1.0) < 1e-14 &&
        std::abs(y[2] - 1.0) < 1e-14) {
        out.push_back({1.0, 1.0, 1.0});
        return out;
    }
    TTriple s = {s_involution(y[0]), s_involution(y[1]), s_involution(y[2])};
    for (int flip = 0; flip < 2; ++flip) {
        try {
            TTriple x = f_map_branch(s, flip != 0);
            TTriple cand = {s_involution(x[0]), s_involution(x[1]), s_involution(x[2])};
            if (star_triangle_ratio_residual(cand, y) < 1e-6) out.push_back(cand);
        } catch (const map_pole_error&) {
        }
    }
    return out;
}
} // namespace detail

// F^{-1} = S^3 o F o S^3: the inverse factors through conjugation by the
// componentwise S map, with the branch of the middle F validated against
// the defining ratio system. The map is globally two-to-one (componentwise
// reciprocal is a deck transformation), so the preimage with
// |t1 t2 t3| >= 1 is returned as the canonical one; on that half of the
// domain "forward then inverse" is the exact identity.
inline TTriple f_inverse(const TTriple& t) {
    std::vector<TTriple> pre = detail::f_preimages(t);
    if (pre.empty()) throw map_pole_error("f_inverse: no branch inverts at this point");
    if (pre.size() == 1) return pre[0];
    double m0 = std::abs(pre[0][0] * pre[0][1] * pre[0][2]);
    double m1 = std::abs(pre[1][0] * pre[1][1] * pre[1][2]);
    return m0 >= m1 ? pre[0] : pre[1];
}

// Residuals of the four defining equations at n = 2:
//   beta (t1 + t2 t3) = beta' t'_1 (three cyclic lines),
//   beta (t1 t2 t3 + 1) = beta' t'_1 t'_2 t'_3.
inline std::array<double, 4> system35_residuals(const TTriple& t, Cplx beta_product,
                                                const TTriple& tp, Cplx beta_prime) {
    std::array<double, 4> r;
    r[0] = std::abs(beta_product * (t[0] + t[1] * t[2]) - beta_prime * tp[0]);
    r[1] = std::abs(beta_product * (t[1] + t[0] * t[2]) - beta_prime * tp[1]);
    r[2] = std::abs(beta_product * (t[2] + t[0] * t[1]) - beta_prime * tp[2]);
    r[3] = std::abs(beta_product * (t[0] * t[1] * t[2] + 1.0) - beta_prime * tp[0] * tp[1] * tp[2]);
    return r;
}

// ---- General modulus (n >= 3): rational map on the constraint surface ----

template <typename S>
S condition_general_residual(const std::array<S, 3>& t, const S& n) {
    S lhs = t[0] * t[1] * t[2];
    S rhs = t[0] * t[1] + t[1] * t[2] + t[2] * t[0] +
            (n - static_cast<S>(1)) * (t[0] + t[1] + t[2]) + n * n - static_cast<S>(3) * n +
            static_cast<S>(1);
    return lhs - rhs;
}

template <typename S>
struct GeneralStarTriangle {
    std::array<S, 3> t_prime;
    S beta_ratio; // beta'_1 beta'_2 beta'_3 / (beta_1 beta_2 beta_3)
};

namespace detail {
inline bool general_condition_ok(const Rational& res, double) { return res.is_zero(); }
inline bool general_condition_ok(double res, double tol) { return std::abs(res) <= tol; }
inline bool general_condition_ok(Cplx res, double tol) { return std::abs(res) <= tol; }
inline double general_residual_value(const Rational& r) { return r.to_double(); }
inline double general_residual_value(double r) { return r; }
inline double general_residual_value(Cplx r) { return std::abs(r); }
} // namespace detail

// t'_i = (t_i + t_j t_k + n - 2) / (t1 + t2 + t3 + n - 3) and
// beta'/beta = t1 + t2 + t3 + n - 3; rejects inputs violating the
// constraint t1t2t3 = t1t2+t2t3+t3t1+(n-1)(t1+t2+t3)+n^2-3n+1.
template <typename S>
GeneralStarTriangle<S> star_triangle_general(const std::array<S, 3>& t, const S& n,
                                             double tol = 1e-10) {
    S res = condition_general_residual(t, n);
    if (!detail::general_condition_ok(res, tol))
        throw condition_error("star_triangle_general: constraint violated",
                              detail::general_residual_value(res));
    S denom = t[0] + t[1] + t[2] + n - static_cast<S>(3);
    if (denom == static_cast<S>(0))
        throw std::domain_error("star_triangle_general: zero denominator");
    GeneralStarTriangle<S> out;
    S two = static_cast<S>(2);
    out.t_prime = {(t[0] + t[1] * t[2] + n - two) / denom, (t[1] + t[0] * t[2] + n - two) / denom,
                   (t[2] + t[0] * t[1] + n - two) / denom};
    out.beta_ratio = denom;
    return out;
}

// Residuals of the five general-n equations (with beta = 1, beta' = ratio).
template <typename S>
std::array<S, 5> system_general_residuals(const std::array<S, 3>& t, const S& n,
                                          const GeneralStarTriangle<S>& g) {
    const auto& tp = g.t_prime;
    S bp = g.beta_ratio;
    S two = static_cast<S>(2);
    return {
        (t[0] + t[1] * t[2] + n - two) - bp * tp[0],
        (t[1] + t[0] * t[2] + n - two) - bp * tp[1],
        (t[2] + t[0] * t[1] + n - two) - bp * tp[2],
        (t[0] * t[1] * t[2] + n - static_cast<S>(1)) - bp * tp[0] * tp[1] * tp[2],
        (t[0] + t[1] + t[2] + n - static_cast<S>(3)) - bp,
    };
}

// The reduced weights of the signed-graph specialization: t = (-1/s, -s, -s)
// with n = s + 1/s + 2 satisfies the constraint identically.
template <typename S>
std::pair<std::array<S, 3>, S> jones_point(const S& s) {
    S n = s + static_cast<S>(1) / s + static_cast<S>(2);
    std::array<S, 3> t = {-(static_cast<S>(1) / s), -s, -s};
    return {t, n};
}

// ---- Bond percolation specialization (n -> 1) ----

struct PercolationResult {
    std::array<double, 3> p_prime;
};

// Requires p1 + p2 + p3 - 1 = p1 p2 p3 (within tol); the primed
// probabilities satisfy p_i + p_j p_k - p1p2p3 = p'_j p'_k cyclically.
inline PercolationResult percolation_star_triangle(double p1, double p2, double p3,
                                                   double tol = 1e-10) {
    double prod = p1 * p2 * p3;
    double res = p1 + p2 + p3 - 1.0 - prod;
    if (std::abs(res) > tol)
        throw condition_error("percolation_star_triangle: constraint violated", res);
    for (double p : {p1, p2, p3})
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("percolation_star_triangle: probabilities must lie in (0,1)");
    double u1 = p1 + p2 * p3 - prod;
    double u2 = p2 + p1 * p3 - prod;
    double u3 = p3 + p1 * p2 - prod;
    if (u1 <= 0 || u2 <= 0 || u3 <= 0)
        throw std::domain_error("percolation_star_triangle: negative intermediate");
    return {{std::sqrt(u2 * u3 / u1), std::sqrt(u1 * u3 / u2), std::sqrt(u1 * u2 / u3)}};
}

// ---- Graph-level transformation and invariance ----

struct StarSite {
    int center;                 // the degree-3 star center
    std::array<int, 3> spokes;  // star edge ids in increasing order
    std::array<int, 3> tips;    // boundary vertex x_i of spoke i
};

inline StarSite find_star(const Multigraph& g, int center) {
    StarSite s;
    s.center = center;
    int found = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u != center && ed.v != center) continue;
        if (ed.is_loop()) throw std::invalid_argument("find_star: loop at the center");
        if (found == 3) throw std::invalid_argument("find_star: center degree exceeds 3");
        s.spokes[found] = e;
        s.tips[found] = ed.u == center ? ed.v : ed.u;
        found++;
    }
    if (found != 3) throw std::invalid_argument("find_star: center degree must be 3");
    if (s.tips[0] == s.tips[1] || s.tips[1] == s.tips[2] || s.tips[0] == s.tips[2])
        throw std::invalid_argument("find_star: star tips must be distinct");
    return s;
}

template <typename S>
struct TransformedModel {
    PottsModel<S> model;
    std::vector<int> edge_map;   // old kept edge id -> new edge id
    std::vector<int> vertex_map; // old vertex id -> new vertex id (-1: removed)
};

// Replace the star at `center` by the weighted triangle. The map function
// takes (t triple, beta product) and returns (t' triple, beta' product);
// per-edge betas are resolved by `resolve` given (i, beta_i, ratio).
template <typename S, typename MapFn, typename ResolveFn>
TransformedModel<S> star_to_triangle(const PottsModel<S>& m, int center, MapFn&& map_fn,
                                     ResolveFn&& resolve) {
    StarSite site = find_star(m.graph, center);
    std::array<S, 3> t;
    S beta_prod = static_cast<S>(1);
    for (int i = 0; i < 3; ++i) {
        const S& a = m.alpha(site.spokes[i]);
        const S& b = m.beta(site.spokes[i]);
        if (b == static_cast<S>(0)) throw std::domain_error("star_to_triangle: beta = 0");
        t[i] = a / b;
        beta_prod = beta_prod * b;
    }
    auto [t_prime, beta_prime] = map_fn(t, beta_prod);
    S ratio = beta_prime / beta_prod;

    TransformedModel<S> out;
    out.vertex_map.assign(m.graph.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < m.graph.vertex_count(); ++v)
        if (v != center) out.vertex_map[v] = next++;
    Multigraph g(next);
    std::vector<std::pair<S, S>> w;
    out.edge_map.assign(m.graph.edge_count(), -1);
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        if (e == site.spokes[0] || e == site.spokes[1] || e == site.spokes[2]) continue;
        const Edge& ed = m.graph.edge(e);
        out.edge_map[e] = g.add_edge(out.vertex_map[ed.u], out.vertex_map[ed.v]);
        w.push_back(m.weights[e]);
    }
    // Triangle edge i sits opposite tip i.
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        g.add_edge(out.vertex_map[site.tips[j]], out.vertex_map[site.tips[k]]);
        S beta_i = resolve(i, m.beta(site.spokes[i]), ratio);
        w.push_back({t_prime[i] * beta_i, beta_i});
    }
    out.model = PottsModel<S>(std::move(g), m.n, std::move(w));
    return out;
}

// Replace the triangle on the given edge ids by a star at a fresh center
// (appended as the last vertex id), inverting the n = 2 map.
inline TransformedModel<Cplx> triangle_to_star(const PottsModel<Cplx>& m,
                                               const std::array<int, 3>& tri_edges) {
    // Identify the three triangle vertices and which is opposite which edge.
    std::array<int, 3> opp{};
    std::array<int, 3> verts{-1, -1, -1};
    {
        std::vector<int> vs;
        for (int e : tri_edges) {
            const Edge& ed = m.graph.edge(e);
            if (ed.is_loop()) throw std::invalid_argument("triangle_to_star: loop edge");
            for (int v : {ed.u, ed.v})
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
        if (vs.size() != 3) throw std::invalid_argument("triangle_to_star: not a triangle");
        for (int i = 0; i < 3; ++i) {
            const Edge& ed = m.graph.edge(tri_edges[i]);
            for (int v : vs)
                if (v != ed.u && v != ed.v) opp[i] = v;
        }
        for (int i = 0; i < 3; ++i) verts[i] = vs[i];
    }
    TTriple tp;
    Cplx beta_prime_prod = 1.0;
    for (int i = 0; i < 3; ++i) {
        Cplx b = m.beta(tri_edges[i]);
        if (std::abs(b) < 1e-300) throw std::domain_error("triangle_to_star: beta = 0");
        tp[i] = m.alpha(tri_edges[i]) / b;
        beta_prime_prod *= b;
    }
    TTriple t = f_inverse(tp);
    Cplx denom = t[0] + t[1] * t[2];
    detail::check_nonzero(denom, "triangle_to_star");
    Cplx beta_prod = beta_prime_prod * tp[0] / denom; // beta (t1 + t2 t3) = beta' t'_1
    Cplx ratio = beta_prod / beta_prime_prod;
    Cplx gauge = std::pow(ratio, 1.0 / 3.0);

    TransformedModel<Cplx> out;
    out.vertex_map.resize(m.graph.vertex_count());
    for (int v = 0; v < m.graph.vertex_count(); ++v) out.vertex_map[v] = v;
    Multigraph g(m.graph.vertex_count());
    int center = g.add_vertex();
    std::vector<std::pair<Cplx, Cplx>> w;
    out.edge_map.assign(m.graph.edge_count(), -1);
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        if (e == tri_edges[0] || e == tri_edges[1] || e == tri_edges[2]) continue;
        const Edge& ed = m.graph.edge(e);
        out.edge_map[e] = g.add_edge(ed.u, ed.v);
        w.push_back(m.weights[e]);
    }
    for (int i = 0; i < 3; ++i) {
        g.add_edge(center, opp[i]); // star edge i reaches the tip opposite triangle edge i
        Cplx beta_i = m.beta(tri_edges[i]) * gauge;
        w.push_back({t[i] * beta_i, beta_i});
    }
    out.model = PottsModel<Cplx>(std::move(g), m.n, std::move(w));
    return out;
}

// Canonical numeric star -> triangle at n = 2 with the cube-root gauge.
inline TransformedModel<Cplx> star_to_triangle_ising(const PottsModel<Cplx>& m, int center) {
    if (m.n != 2) throw std::invalid_argument("star_to_triangle_ising: n = 2 only");
    return star_to_triangle(
        m, center,
        [](const std::array<Cplx, 3>& t, Cplx beta_prod) {
            StarTriangleResult r = f_map_with_beta({t[0], t[1], t[2]}, beta_prod);
            return std::make_pair(std::array<Cplx, 3>{r.t_prime[0], r.t_prime[1], r.t_prime[2]},
                                  r.beta_product_prime);
        },
        [](int, Cplx beta_i, Cplx ratio) { return beta_i * std::pow(ratio, 1.0 / 3.0); });
}

struct ExactTransformed {
    Multigraph graph;
    std::vector<std::pair<Rational, Rational>> weights;
    std::vector<int> edge_map;
    std::vector<int> vertex_map;
};

// Exact star -> triangle on the constraint surface for an arbitrary
// rational modulus q (the random-cluster reading of Z_q). The beta ratio is
// resolved onto the first triangle edge so the weights stay in the field;
// partition functions do not depend on the resolution.
inline ExactTransformed star_to_triangle_general_exact(
    const Multigraph& g, const std::vector<std::pair<Rational, Rational>>& weights, int center,
    const Rational& q) {
    StarSite site = find_star(g, center);
    std::array<Rational, 3> t;
    for (int i = 0; i < 3; ++i) {
        const auto& [a, b] = weights[site.spokes[i]];
        if (b.is_zero()) throw std::domain_error("star_to_triangle_general_exact: beta = 0");
        t[i] = a / b;
    }
    GeneralStarTriangle<Rational> map = star_triangle_general<Rational>(t, q);

    ExactTransformed out;
    out.vertex_map.assign(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != center) out.vertex_map[v] = next++;
    out.graph = Multigraph(next);
    out.edge_map.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == site.spokes[0] || e == site.spokes[1] || e == site.spokes[2]) continue;
        const Edge& ed = g.edge(e);
        out.edge_map[e] = out.graph.add_edge(out.vertex_map[ed.u], out.vertex_map[ed.v]);
        out.weights.push_back(weights[e]);
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        out.graph.add_edge(out.vertex_map[site.tips[j]], out.vertex_map[site.tips[k]]);
        Rational beta_i = weights[site.spokes[i]].second;
        if (i == 0) beta_i *= map.beta_ratio;
        out.weights.push_back({map.t_prime[i] * beta_i, beta_i});
    }
    return out;
}

struct InvarianceReport {
    double z_residual = 0;            // |Z(G)/Z(G') - 1|
    double max_boundary_residual = 0; // over boundary subsets and values
    double max_dlogz_residual = 0;    // over edges outside the site
    double max_residual() const {
        return std::max({z_residual, max_boundary_residual, max_dlogz_residual});
    }
};

// Compare Z, boundary ratios and log-derivatives between a model and its
// transformed partner. Boundary subsets range over vertices untouched by
// the move (subset size capped to keep enumeration at desk scale).
template <typename S>
InvarianceReport invariance_report(const PottsModel<S>& m, const PottsModel<S>& m2,
                                   const std::vector<int>& common_vertices,
                                   const std::vector<int>& vertex_map,
                                   const std::vector<int>& edge_map, int max_subset = 3,
                                   uint64_t budget = kDefaultStateBudget) {
    InvarianceReport rep;
    S z1 = partition_enumerate(m, budget);
    S z2 = partition_enumerate(m2, budget);
    rep.z_residual = std::abs(Cplx(z1 / z2) - 1.0);

    int c = static_cast<int>(common_vertices.size());
    for (uint64_t smask = 1; smask < (uint64_t{1} << c); ++smask) {
        if (std::popcount(smask) > max_subset) continue;
        std::vector<int> verts;
        for (int i = 0; i < c; ++i)
            if (smask >> i & 1) verts.push_back(common_vertices[i]);
        std::vector<int> vals(verts.size(), 0);
        while (true) {
            BoundarySpec b1, b2;
            for (size_t i = 0; i < verts.size(); ++i) {
                b1.vertices.push_back(verts[i]);
                b2.vertices.push_back(vertex_map[verts[i]]);
                b1.values.push_back(vals[i]);
                b2.values.push_back(vals[i]);
            }
            S r1 = boundary_partition(m, b1, budget) / z1;
            S r2 = boundary_partition(m2, b2, budget) / z2;
            rep.max_boundary_residual = std::max(rep.max_boundary_residual, std::abs(Cplx(r1 - r2)));
            size_t i = 0;
            while (i < vals.size() && ++vals[i] == m.n) vals[i++] = 0;
            if (i == vals.size()) break;
        }
    }
    for (int e = 0; e < static_cast<int>(edge_map.size()); ++e) {
        if (edge_map[e] < 0) continue;
        S d1 = dlogz_dt(m, e, budget);
        S d2 = dlogz_dt(m2, edge_map[e], budget);
        rep.max_dlogz_residual = std::max(rep.max_dlogz_residual, std::abs(Cplx(d1 - d2)));
    }
    return rep;
}

// Star -> triangle invariance at n = 2 around the given center.
inline InvarianceReport verify_invariance_star(const PottsModel<Cplx>& m, int center,
                                               int max_subset = 3,
                                               uint64_t budget = kDefaultStateBudget) {
    StarSite site = find_star(m.graph, center);
    TransformedModel<Cplx> tr = star_to_triangle_ising(m, center);
    std::vector<int> common;
    for (int v = 0; v < m.graph.vertex_count(); ++v) {
        if (v == center || v == site.tips[0] || v == site.tips[1] || v == site.tips[2]) continue;
        common.push_back(v);
    }
    return invariance_report(m, tr.model, common, tr.vertex_map, tr.edge_map, max_subset, budget);
}

// Triangle -> star invariance at n = 2 for the designated triangle edges.
inline InvarianceReport verify_invariance_triangle(const PottsModel<Cplx>& m,
                                                   const std::array<int, 3>& tri_edges,
                                                   int max_subset = 3,
                                                   uint64_t budget = kDefaultStateBudget) {
    if (m.n != 2) throw std::invalid_argument("verify_invariance_triangle: n = 2 only");
    TransformedModel<Cplx> tr = triangle_to_star(m, tri_edges);
    std::vector<char> on_triangle(m.graph.vertex_count(), 0);
    for (int e : tri_edges) {
        on_triangle[m.graph.edge(e).u] = 1;
        on_triangle[m.graph.edge(e).v] = 1;
    }
    std::vector<int> common;
    for (int v = 0; v < m.graph.vertex_count(); ++v)
        if (!on_triangle[v]) common.push_back(v);
    return invariance_report(m, tr.model, common, tr.vertex_map, tr.edge_map, max_subset, budget);
}

} // namespace pottskit

#endif
