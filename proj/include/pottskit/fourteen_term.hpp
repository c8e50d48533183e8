#ifndef POTTSKIT_FOURTEEN_TERM_HPP
#define POTTSKIT_FOURTEEN_TERM_HPP

// The fourteen-term relation: two models on a triangle-and-star pair,
// related by the star-triangle transformation and constrained by
// p1 p2 p3 = p'1 p'2 p'3, satisfy a convolution identity over the seven
// proper triangle-edge subsets and the seven proper star-edge subsets,
// embedded in a common ambient graph.

#include "pottskit/biggs.hpp"
#include "pottskit/potts.hpp"
#include "pottskit/star_triangle.hpp"

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace pottskit {

// Star-side and triangle-side weights of one model on the mutation zone;
// the star side carries the sampled values, the triangle side the image
// under the n = 2 map with the cube-root beta gauge.
struct StarTrianglePair {
    std::array<double, 3> star_alpha;
    std::array<double, 3> star_beta;
    std::array<double, 3> tri_alpha;
    std::array<double, 3> tri_beta;
};

inline StarTrianglePair make_star_triangle_pair(const std::array<double, 3>& star_t,
                                                const std::array<double, 3>& star_beta) {
    StarTrianglePair p;
    TTriple t = {star_t[0], star_t[1], star_t[2]};
    Cplx beta_prod = star_beta[0] * star_beta[1] * star_beta[2];
    StarTriangleResult r = f_map_with_beta(t, beta_prod);
    Cplx gauge = std::pow(r.beta_product_prime / beta_prod, 1.0 / 3.0);
    for (int i = 0; i < 3; ++i) {
        p.star_alpha[i] = star_t[i] * star_beta[i];
        p.star_beta[i] = star_beta[i];
        double bi = (star_beta[i] * gauge).real();
        p.tri_beta[i] = bi;
        p.tri_alpha[i] = (r.t_prime[i] * bi).real();
    }
    return p;
}

struct FourteenTermInstance {
    StarTrianglePair m1;
    StarTrianglePair m2;
    std::array<double, 3> p, q;        // triangle-side convolution coefficients
    std::array<double, 3> p_pr, q_pr;  // star-side coefficients
    double constraint_residual;        // p1p2p3 - p'1p'2p'3
};

namespace detail {
inline void fourteen_coeffs(FourteenTermInstance& inst) {
    for (int i = 0; i < 3; ++i) {
        double d_tri = inst.m2.tri_alpha[i] - inst.m2.tri_beta[i];
        double d_star = inst.m2.star_alpha[i] - inst.m2.star_beta[i];
        if (std::abs(d_tri) < 1e-12 || std::abs(d_star) < 1e-12)
            throw std::domain_error("fourteen_term: degenerate second model");
        inst.p[i] = (inst.m1.tri_alpha[i] - inst.m1.tri_beta[i]) / d_tri;
        inst.q[i] =
            (inst.m2.tri_alpha[i] * inst.m1.tri_beta[i] - inst.m1.tri_alpha[i] * inst.m2.tri_beta[i]) /
            d_tri;
        inst.p_pr[i] = (inst.m1.star_alpha[i] - inst.m1.star_beta[i]) / d_star;
        inst.q_pr[i] = (inst.m2.star_alpha[i] * inst.m1.star_beta[i] -
                        inst.m1.star_alpha[i] * inst.m2.star_beta[i]) /
                       d_star;
    }
    inst.constraint_residual = inst.p[0] * inst.p[1] * inst.p[2] -
                               inst.p_pr[0] * inst.p_pr[1] * inst.p_pr[2];
}
} // namespace detail

// Build a constrained instance: M2's star weights are sampled, M1's first
// two star weights are sampled, and the third is located by bisection so
// that the product constraint holds to the requested tolerance.
inline FourteenTermInstance make_fourteen_term_instance(uint64_t seed, double tol = 1e-12) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](double lo, double hi) {
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::array<double, 3> s2 = {rnd(0.3, 3.0), rnd(0.3, 3.0), rnd(0.3, 3.0)};
        std::array<double, 3> b2 = {rnd(0.5, 2.0), rnd(0.5, 2.0), rnd(0.5, 2.0)};
        std::array<double, 3> s1 = {rnd(0.3, 3.0), rnd(0.3, 3.0), 1.0};
        std::array<double, 3> b1 = {rnd(0.5, 2.0), rnd(0.5, 2.0), rnd(0.5, 2.0)};

        auto residual_at = [&](double r3) {
            FourteenTermInstance inst;
            inst.m2 = make_star_triangle_pair(s2, b2);
            std::array<double, 3> s1_full = {s1[0], s1[1], r3};
            inst.m1 = make_star_triangle_pair(s1_full, b1);
            detail::fourteen_coeffs(inst);
            return inst;
        };
        // Scan a log grid for a sign change of the constraint, then bisect.
        double lo = 0.05, hi = 20.0;
        int grid = 64;
        double prev_r = lo;
        double prev_g;
        try {
            prev_g = residual_at(lo).constraint_residual;
        } catch (const std::domain_error&) {
            continue;
        }
        bool found = false;
        for (int k = 1; k <= grid && !found; ++k) {
            double r = lo * std::pow(hi / lo, static_cast<double>(k) / grid);
            double g;
            try {
                g = residual_at(r).constraint_residual;
            } catch (const std::domain_error&) {
                prev_r = r;
                continue;
            }
            if (std::signbit(g) != std::signbit(prev_g)) {
                double a = prev_r, b = r, ga = prev_g;
                for (int it = 0; it < 200; ++it) {
                    double mid = (a + b) / 2;
                    double gm = residual_at(mid).constraint_residual;
                    if (std::abs(gm) < tol) {
                        a = b = mid;
                        break;
                    }
                    if (std::signbit(gm) == std::signbit(ga)) {
                        a = mid;
                        ga = gm;
                    } else {
                        b = mid;
                    }
                }
                FourteenTermInstance inst = residual_at((a + b) / 2);
                if (std::abs(inst.constraint_residual) < tol) return inst;
                found = true; // bisection stalled; resample
            }
            prev_r = r;
            prev_g = g;
        }
    }
    throw std::runtime_error("make_fourteen_term_instance: no constrained instance found");
}

// Ambient data for the relation: extra edges attached to the mutation zone.
// Triangle-side vertices are 0,1,2 (triangle edge i opposite vertex i) plus
// any extra vertices from 3 up; on the star side the center is appended as
// the last vertex id.
struct FourteenTermAmbient {
    int extra_vertices = 0;
    std::vector<Edge> extra_edges;                       // endpoints in triangle-side ids
    std::vector<std::pair<double, double>> extra_weights; // M2 weights on the extras
};

struct FourteenTermResult {
    double lhs;
    double rhs;
    double residual; // |lhs - rhs| / max(|lhs|, |rhs|)
};

// Evaluate both sides of the relation over the seven proper subsets of the
// triangle edges and the seven proper subsets of the star edges, all
// embedded in the ambient graph with every non-zone edge present.
inline FourteenTermResult verify_fourteen_term(const FourteenTermInstance& inst,
                                               const FourteenTermAmbient& ambient, int n = 2,
                                               double q_tol = 1e-9) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(inst.q[i]) < q_tol || std::abs(inst.q_pr[i]) < q_tol)
            throw std::domain_error("verify_fourteen_term: q coefficient vanishes (degenerate pair)");
    }
    if (std::abs(inst.constraint_residual) > 1e-9)
        throw std::domain_error("verify_fourteen_term: p-product constraint not satisfied");

    int base_tri = 3 + ambient.extra_vertices;
    // Triangle side: vertices 0..base_tri-1; triangle edge i = (j, k).
    double lhs = 0, rhs = 0;
    for (int subset = 0; subset < 7; ++subset) { // proper subsets of {0,1,2}
        double coeff_tri = 1, coeff_star = 1;
        for (int i = 0; i < 3; ++i)
            coeff_tri *= (subset >> i & 1) ? inst.p[i] : inst.q[i];
        for (int i = 0; i < 3; ++i)
            coeff_star *= (subset >> i & 1) ? inst.p_pr[i] : inst.q_pr[i];

        Multigraph gt(base_tri);
        std::vector<std::pair<double, double>> wt;
        for (int i = 0; i < 3; ++i) {
            if (!(subset >> i & 1)) continue;
            gt.add_edge((i + 1) % 3, (i + 2) % 3);
            wt.push_back({inst.m2.tri_alpha[i], inst.m2.tri_beta[i]});
        }
        for (size_t e = 0; e < ambient.extra_edges.size(); ++e) {
            gt.add_edge(ambient.extra_edges[e].u, ambient.extra_edges[e].v);
            wt.push_back(ambient.extra_weights[e]);
        }
        lhs += coeff_tri * partition_enumerate(PottsModel<double>(gt, n, wt));

        Multigraph gs(base_tri + 1); // star center appended
        int center = base_tri;
        std::vector<std::pair<double, double>> ws;
        for (int i = 0; i < 3; ++i) {
            if (!(subset >> i & 1)) continue;
            gs.add_edge(center, i);
            ws.push_back({inst.m2.star_alpha[i], inst.m2.star_beta[i]});
        }
        for (size_t e = 0; e < ambient.extra_edges.size(); ++e) {
            gs.add_edge(ambient.extra_edges[e].u, ambient.extra_edges[e].v);
            ws.push_back(ambient.extra_weights[e]);
        }
        rhs += coeff_star * partition_enumerate(PottsModel<double>(gs, n, ws));
    }
    double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return {lhs, rhs, std::abs(lhs - rhs) / denom};
}

} // namespace pottskit

#endif
