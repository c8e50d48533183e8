#ifndef POTTSKIT_SUITES_HPP
#define POTTSKIT_SUITES_HPP

// Named verification suites behind the CLI and the acceptance runner. Every
// suite runs a canonical list of instances (parallelizable, per-instance
// seeding, report order independent of scheduling) and returns a
// machine-readable report. Exact suites demand literal zero residuals.

#include "pottskit/biggs.hpp"
#include "pottskit/fourteen_term.hpp"
#include "pottskit/graph_gen.hpp"
#include "pottskit/invariants.hpp"
#include "pottskit/parallel.hpp"
#include "pottskit/potts.hpp"
#include "pottskit/report.hpp"
#include "pottskit/star_triangle.hpp"
#include "pottskit/tetrahedron.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pottskit {

struct SuiteOptions {
    int max_edges = 6;
    int samples = 100;
    uint64_t seed = 42;
    double tol = 1e-9;
    uint64_t budget = kDefaultStateBudget;
};

namespace detail {

inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t x = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

inline Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    long num = static_cast<long>(rng() % 9) - 4;
    if (nonzero && num == 0) num = 3;
    return Rational(num, static_cast<long>(rng() % 3) + 1);
}

inline Rational random_positive_rational(std::mt19937_64& rng) {
    return Rational(static_cast<long>(rng() % 8) + 1, static_cast<long>(rng() % 3) + 1);
}

inline RationalModel random_aniso_model(const Multigraph& g, int n, std::mt19937_64& rng) {
    std::vector<std::pair<Rational, Rational>> w;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rational a = random_rational(rng, true), b = random_rational(rng, true);
        if (a == b) a += Rational(1);
        w.push_back({a, b});
    }
    return RationalModel(g, n, std::move(w));
}

inline double exact_residual(const Rational& r) { return r.is_zero() ? 0.0 : std::abs(r.to_double()); }

template <typename Fn>
VerificationReport run_indexed(const std::string& name, const SuiteOptions& opt, size_t count,
                               Fn&& fn) {
    VerificationReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    rep.tolerance = opt.tol;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<InstanceResult>> slots(count);
    std::atomic<int> rejected{0};
    parallel_for_index(count, [&](size_t i) {
        VerificationReport local;
        local.tolerance = opt.tol;
        int rej = 0;
        fn(i, local, rej);
        slots[i] = std::move(local.instances);
        rejected += rej;
    });
    for (auto& s : slots)
        for (auto& inst : s) rep.instances.push_back(std::move(inst));
    rep.rejected_samples = rejected;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace detail

// --- Criterion 1: reduced-weight form, deletion-contraction, union and
// one-point-join laws, exact on the whole corpus. ---
inline VerificationReport suite_partition_identities(const SuiteOptions& opt) {
    const std::vector<Multigraph>& corpus = corpus_up_to(opt.max_edges);
    size_t n_graphs = corpus.size();
    return detail::run_indexed(
        "partition-identities", opt, n_graphs, [&](size_t i, VerificationReport& out, int&) {
            const Multigraph& g = corpus[i];
            for (int n : {2, 3, 4}) {
                std::mt19937_64 rng(detail::mix_seed(opt.seed, i * 31 + n));
                RationalModel m = detail::random_aniso_model(g, n, rng);
                Rational z = partition_enumerate(m, opt.budget);
                std::ostringstream tag;
                tag << "graph#" << i << " v=" << g.vertex_count() << " e=" << g.edge_count()
                    << " n=" << n;
                out.add("fk-vs-enum " + tag.str(),
                        detail::exact_residual(partition_fk(m, opt.budget) - z), opt.tol, true);
                // deletion-contraction on every eligible edge
                for (int e = 0; e < g.edge_count(); ++e) {
                    if (g.edge(e).is_loop() || g.is_bridge(e)) continue;
                    std::vector<std::pair<Rational, Rational>> wk;
                    for (int k = 0; k < g.edge_count(); ++k)
                        if (k != e) wk.push_back(m.weights[k]);
                    RationalModel mc(g.contract_edge(e), n, wk);
                    RationalModel md(g.delete_edge(e), n, wk);
                    Rational rhs = (m.alpha(e) - m.beta(e)) * partition_enumerate(mc, opt.budget) +
                                   m.beta(e) * partition_enumerate(md, opt.budget);
                    out.add("del-contr " + tag.str() + " edge=" + std::to_string(e),
                            detail::exact_residual(z - rhs), opt.tol, true);
                }
                // union and join laws against a small partner graph
                if (g.vertex_count() <= 6 && n <= 3) {
                    const Multigraph& h = corpus[(i + 1) % n_graphs];
                    if (h.vertex_count() + g.vertex_count() <= 9) {
                        RationalModel mh = detail::random_aniso_model(h, n, rng);
                        std::vector<std::pair<Rational, Rational>> w = m.weights;
                        w.insert(w.end(), mh.weights.begin(), mh.weights.end());
                        RationalModel mu(g.glue(h, {}), n, w);
                        out.add("disjoint-union " + tag.str(),
                                detail::exact_residual(partition_enumerate(mu, opt.budget) -
                                                       partition_enumerate(m, opt.budget) *
                                                           partition_enumerate(mh, opt.budget)),
                                opt.tol, true);
                        RationalModel mj(g.glue(h, {{0, 0}}), n, w);
                        out.add("one-point-join " + tag.str(),
                                detail::exact_residual(Rational(n) *
                                                           partition_enumerate(mj, opt.budget) -
                                                       partition_enumerate(m, opt.budget) *
                                                           partition_enumerate(mh, opt.budget)),
                                opt.tol, true);
                    }
                }
            }
        });
}

// --- Criterion 2: the partition function from the Tutte polynomial. ---
inline VerificationReport suite_z_tutte(const SuiteOptions& opt) {
    const std::vector<Multigraph>& corpus = corpus_up_to(opt.max_edges);
    VerificationReport rep = detail::run_indexed(
        "z-tutte", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            const Multigraph& g = corpus[i];
            std::mt19937_64 rng(detail::mix_seed(opt.seed, i));
            for (int draw = 0; draw < 20; ++draw) {
                int n = 2 + static_cast<int>(rng() % 4);
                Rational a = detail::random_rational(rng, false);
                Rational b = detail::random_positive_rational(rng);
                if (a == b) a += Rational(1);
                RationalModel m = RationalModel::isotropic(g, n, a, b);
                Rational diff = z_from_tutte(g, n, a, b) - partition_enumerate(m, opt.budget);
                out.add("z-tutte graph#" + std::to_string(i) + " n=" + std::to_string(n) +
                            " draw=" + std::to_string(draw),
                        detail::exact_residual(diff), opt.tol, true);
            }
        });
    Rational spot = z_from_tutte(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}), 2, Rational(3), Rational(1));
    rep.add("k3 spot value Z_2(K3;3,1) = 72", detail::exact_residual(spot - Rational(72)),
            opt.tol, true);
    return rep;
}

// --- Criterion 3: the convolution identity, the chromatic/flow exchange
// theorem, and the four derived formulas, exact. ---
inline VerificationReport suite_biggs(const SuiteOptions& opt) {
    int max_e = std::min(opt.max_edges, 5);
    const std::vector<Multigraph>& corpus = corpus_up_to(max_e);
    return detail::run_indexed(
        "biggs", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            const Multigraph& g = corpus[i];
            for (int n : {2, 3}) {
                std::mt19937_64 rng(detail::mix_seed(opt.seed, i * 97 + n));
                int pairs = std::max(1, opt.samples / 2);
                for (int p = 0; p < pairs; ++p) {
                    RationalModel m1 = detail::random_aniso_model(g, n, rng);
                    RationalModel m2 = detail::random_aniso_model(g, n, rng);
                    out.add("biggs graph#" + std::to_string(i) + " n=" + std::to_string(n) +
                                " pair=" + std::to_string(p),
                            detail::exact_residual(verify_biggs(m1, m2)), opt.tol, true);
                }
                // isotropic instance of the plain lemma
                Rational a1 = detail::random_rational(rng, true) + Rational(5);
                Rational b1 = detail::random_positive_rational(rng);
                Rational a2 = detail::random_rational(rng, true) + Rational(7);
                Rational b2 = detail::random_positive_rational(rng);
                if (a2 == b2) a2 += Rational(1);
                out.add("biggs-isotropic graph#" + std::to_string(i) + " n=" + std::to_string(n),
                        detail::exact_residual(
                            verify_biggs(RationalModel::isotropic(g, n, a1, b1),
                                         RationalModel::isotropic(g, n, a2, b2))),
                        opt.tol, true);
            }
        });
}

inline VerificationReport suite_matiyasevich(const SuiteOptions& opt) {
    int max_e = std::min(opt.max_edges, 5);
    const std::vector<Multigraph>& corpus = corpus_up_to(max_e);
    return detail::run_indexed(
        "matiyasevich", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            for (int n : {2, 3, 4, 5})
                out.add("matiyasevich graph#" + std::to_string(i) + " n=" + std::to_string(n),
                        detail::exact_residual(verify_matiyasevich(corpus[i], n)), opt.tol, true);
        });
}

inline VerificationReport suite_four_formulas(const SuiteOptions& opt) {
    int max_e = std::min(opt.max_edges, 5);
    const std::vector<Multigraph>& corpus = corpus_up_to(max_e);
    return detail::run_indexed(
        "four-formulas", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            const Multigraph& g = corpus[i];
            for (int n : {2, 3, 4, 5}) {
                std::mt19937_64 rng(detail::mix_seed(opt.seed, i * 13 + n));
                for (int draw = 0; draw < 2; ++draw) {
                    Rational a = detail::random_rational(rng, true);
                    Rational b = detail::random_positive_rational(rng);
                    if (a == b) a += Rational(1);
                    FourFormulaResiduals r = verify_four_formulas(g, n, a, b);
                    std::string tag = "graph#" + std::to_string(i) + " n=" + std::to_string(n) +
                                      " draw=" + std::to_string(draw);
                    out.add("formula-z-chromatic " + tag, detail::exact_residual(r.genm), opt.tol,
                            true);
                    out.add("formula-flow-from-chromatic " + tag,
                            detail::exact_residual(r.inverse), opt.tol, true);
                    out.add("formula-z-flow " + tag, detail::exact_residual(r.t_flow), opt.tol,
                            true);
                    out.add("formula-flow-from-z " + tag, detail::exact_residual(r.flow_t),
                            opt.tol, true);
                }
            }
        });
}

// --- Criterion 4: order shifts and the vertex convolution, exact. ---
inline VerificationReport suite_shift_product(const SuiteOptions& opt) {
    int max_e = std::min(opt.max_edges, 4);
    const std::vector<Multigraph>& corpus = corpus_up_to(max_e);
    return detail::run_indexed(
        "shift-product", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            std::mt19937_64 rng(detail::mix_seed(opt.seed, i));
            Rational a = detail::random_positive_rational(rng) + Rational(1);
            Rational b = detail::random_positive_rational(rng);
            if (a == b) a += Rational(1);
            for (int n1 : {1, 2, 3})
                for (int n2 : {1, 2, 3})
                    out.add("shift-product graph#" + std::to_string(i) + " n1=" +
                                std::to_string(n1) + " n2=" + std::to_string(n2),
                            detail::exact_residual(
                                verify_order_shift_product(corpus[i], n1, n2, a, b)),
                            opt.tol, true);
        });
}

inline VerificationReport suite_shift_sum(const SuiteOptions& opt) {
    int max_e = std::min(opt.max_edges, 4);
    const std::vector<Multigraph>& corpus = corpus_up_to(max_e);
    return detail::run_indexed(
        "shift-sum", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            std::mt19937_64 rng(detail::mix_seed(opt.seed, i + 1000));
            Rational a = detail::random_positive_rational(rng) + Rational(1);
            Rational b = detail::random_positive_rational(rng);
            if (a == b) a += Rational(1);
            for (int n1 : {1, 2, 3})
                for (int n2 : {1, 2, 3})
                    out.add("shift-sum graph#" + std::to_string(i) + " n1=" + std::to_string(n1) +
                                " n2=" + std::to_string(n2),
                            detail::exact_residual(verify_order_shift_sum(corpus[i], n1, n2, a, b)),
                            opt.tol, true);
        });
}

inline VerificationReport suite_vertex_convolution(const SuiteOptions& opt) {
    const std::vector<Multigraph>& all = corpus_up_to(opt.max_edges);
    std::vector<const Multigraph*> corpus;
    for (const Multigraph& g : all)
        if (g.vertex_count() <= 6) corpus.push_back(&g);
    return detail::run_indexed(
        "vertex-convolution", opt, corpus.size(), [&](size_t i, VerificationReport& out, int&) {
            for (int n1 : {1, 2, 3})
                for (int n2 : {1, 2, 3})
                    out.add("vertex-convolution graph#" + std::to_string(i) + " n1=" +
                                std::to_string(n1) + " n2=" + std::to_string(n2),
                            detail::exact_residual(
                                verify_tutte_vertex_convolution(*corpus[i], n1, n2)),
                            opt.tol, true);
        });
}

// --- Criterion 5: Ising star-triangle invariance on every triangle fixture.
// The forward direction is the substantial one: the fixture's triangle is
// replaced by a star with sampled weights, and the map's output triangle
// weights must reproduce the fixture's partition data by independent
// enumeration. The inverse direction is run once per fixture as a pipeline
// self-check. ---
inline VerificationReport suite_star_triangle(const SuiteOptions& opt) {
    const std::vector<Multigraph>& all = corpus_up_to(opt.max_edges);
    std::vector<std::pair<const Multigraph*, std::array<int, 3>>> fixtures;
    for (const Multigraph& g : all) {
        std::array<int, 3> tri;
        if (find_triangle(g, tri)) fixtures.push_back({&g, tri});
    }
    int draws = std::max(1, std::min(opt.samples, 20));
    return detail::run_indexed(
        "star-triangle", opt, fixtures.size(), [&](size_t i, VerificationReport& out, int&) {
            const auto& [gp, tri] = fixtures[i];
            std::mt19937_64 rng(detail::mix_seed(opt.seed, i));
            auto rnd = [&](double lo, double hi) {
                double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
                return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
            };
            // Star version of the fixture: remove the triangle edges, attach
            // a fresh center to the vertex opposite each of them.
            std::array<int, 3> opposite{};
            {
                std::vector<int> vs;
                for (int e : tri) {
                    const Edge& ed = gp->edge(e);
                    for (int v : {ed.u, ed.v})
                        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
                }
                for (int k = 0; k < 3; ++k) {
                    const Edge& ed = gp->edge(tri[k]);
                    for (int v : vs)
                        if (v != ed.u && v != ed.v) opposite[k] = v;
                }
            }
            Multigraph star_graph(gp->vertex_count());
            int center = star_graph.add_vertex();
            std::vector<int> kept; // fixture edge ids outside the triangle
            for (int e = 0; e < gp->edge_count(); ++e) {
                if (e == tri[0] || e == tri[1] || e == tri[2]) continue;
                star_graph.add_edge(gp->edge(e).u, gp->edge(e).v);
                kept.push_back(e);
            }
            std::array<int, 3> spokes{};
            for (int k = 0; k < 3; ++k) spokes[k] = star_graph.add_edge(center, opposite[k]);

            for (int d = 0; d < draws; ++d) {
                std::vector<std::pair<Cplx, Cplx>> w(star_graph.edge_count());
                for (size_t e = 0; e < kept.size(); ++e) w[e] = {rnd(0.25, 4), rnd(0.25, 4)};
                for (int k = 0; k < 3; ++k) w[spokes[k]] = {rnd(0.25, 4) * 1.0, rnd(0.5, 2)};
                PottsModel<Cplx> star_model(star_graph, 2, w);
                InvarianceReport rep = verify_invariance_star(star_model, center, 3, opt.budget);
                std::string tag = "fixture#" + std::to_string(i) + " draw=" + std::to_string(d);
                out.add("z-invariance " + tag, rep.z_residual, opt.tol);
                out.add("boundary-ratios " + tag, rep.max_boundary_residual, opt.tol);
                out.add("dlogz " + tag, rep.max_dlogz_residual, opt.tol);
            }
            // Inverse-direction self-check on the fixture's own triangle.
            std::vector<std::pair<Cplx, Cplx>> wt(gp->edge_count());
            for (int e = 0; e < gp->edge_count(); ++e) wt[e] = {rnd(0.25, 4), rnd(0.25, 4)};
            TTriple star_t = {rnd(0.25, 4), rnd(0.25, 4), rnd(0.25, 4)};
            StarTriangleResult st = f_map_with_beta(star_t, 1.0);
            Cplx gauge = std::pow(st.beta_product_prime, 1.0 / 3.0);
            for (int k = 0; k < 3; ++k) wt[tri[k]] = {st.t_prime[k] * gauge, gauge};
            PottsModel<Cplx> tri_model(*gp, 2, wt);
            InvarianceReport rep = verify_invariance_triangle(tri_model, tri, 3, opt.budget);
            out.add("triangle-to-star fixture#" + std::to_string(i), rep.max_residual(), opt.tol);
        });
}

// --- Criterion 6: the constrained transformation for general modulus. ---
inline VerificationReport suite_general_n(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "general-n";
    rep.seed = opt.seed;
    rep.tolerance = opt.tol;
    auto t0 = std::chrono::steady_clock::now();
    for (Rational s : {Rational(2), Rational(3), Rational(1, 2)}) {
        auto [t, n] = jones_point(s);
        std::string tag = " s=" + s.str();
        rep.add("jones-condition" + tag,
                detail::exact_residual(condition_general_residual<Rational>(t, n)), opt.tol, true);
        auto g = star_triangle_general<Rational>(t, n);
        auto rs = system_general_residuals<Rational>(t, n, g);
        double worst = 0;
        for (const Rational& r : rs) worst = std::max(worst, detail::exact_residual(r));
        rep.add("jones-system" + tag, worst, 1e-12);
        // Z-invariance on a star-with-pendant fixture, exact arithmetic
        Multigraph fixture(5, {{4, 0}, {4, 1}, {4, 2}, {0, 3}, {1, 2}});
        std::vector<std::pair<Rational, Rational>> w;
        Rational betas[3] = {Rational(1), Rational(2), Rational(1, 3)};
        for (int i = 0; i < 3; ++i) w.push_back({t[i] * betas[i], betas[i]});
        w.push_back({Rational(3), Rational(2)});
        w.push_back({Rational(1, 2), Rational(5)});
        auto tr = star_to_triangle_general_exact(fixture, w, 4, n);
        Rational dz = fk_expansion_z(fixture, w, n) - fk_expansion_z(tr.graph, tr.weights, n);
        rep.add("jones-z-invariance" + tag, detail::exact_residual(dz), opt.tol, true);
    }
    // generic positive triples are rejected
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<Rational, 3> t = {detail::random_positive_rational(rng) + Rational(1),
                                     detail::random_positive_rational(rng) + Rational(2),
                                     detail::random_positive_rational(rng) + Rational(3)};
        bool rejected = false;
        try {
            star_triangle_general<Rational>(t, Rational(3));
        } catch (const condition_error&) {
            rejected = true;
        }
        rep.add("generic-rejection trial=" + std::to_string(trial), rejected ? 0.0 : 1.0, opt.tol,
                true);
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline VerificationReport suite_percolation(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "percolation";
    rep.seed = opt.seed;
    rep.tolerance = opt.tol;
    auto t0 = std::chrono::steady_clock::now();
    // symmetric root of p^3 - 3p + 1 in (0,1) by bisection
    double lo = 0, hi = 1;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        ((mid * mid * mid - 3 * mid + 1) > 0 ? lo : hi) = mid;
    }
    double p = (lo + hi) / 2;
    rep.add("symmetric-root", std::abs(p * p * p - 3 * p + 1), 1e-12);
    PercolationResult r = percolation_star_triangle(p, p, p, 1e-9);
    double u = p + p * p - p * p * p;
    double worst = 0;
    for (double pp : r.p_prime) worst = std::max(worst, std::abs(pp * pp - u));
    rep.add("symmetric-map", worst, 1e-12);
    bool rejected = false;
    try {
        percolation_star_triangle(1.0, 1.0, 1.0);
    } catch (const condition_error&) {
        rejected = true;
    }
    rep.add("constraint-rejection", rejected ? 0.0 : 1.0, opt.tol, true);
    // exact n -> 1 reduction on random rational triples
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 10; ++trial) {
        Rational p1(static_cast<long>(rng() % 9) + 1, 10);
        Rational p2(static_cast<long>(rng() % 9) + 1, 10);
        Rational p3(static_cast<long>(rng() % 9) + 1, 10);
        std::array<Rational, 3> t = {Rational(1) / p1, Rational(1) / p2, Rational(1) / p3};
        Rational res = condition_general_residual<Rational>(t, Rational(1)) * p1 * p2 * p3 +
                       (p1 + p2 + p3 - Rational(1) - p1 * p2 * p3);
        rep.add("n-to-1-reduction trial=" + std::to_string(trial), detail::exact_residual(res),
                opt.tol, true);
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// --- Criterion 7: the local Yang-Baxter equation. ---
inline VerificationReport suite_lyb(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "lyb";
    rep.seed = opt.seed;
    rep.tolerance = opt.tol;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(opt.seed);
    auto rnd = [&](double lo, double hi) {
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    };
    int samples = std::max(1, opt.samples);
    double worst_eq = 0, worst_closed = 0, worst_orth = 0;
    for (int i = 0; i < samples; ++i) {
        TTriple t = {rnd(1.0001, 10), rnd(1.0001, 10), rnd(1.0001, 10)};
        LybSides s = verify_lyb(t);
        worst_eq = std::max(worst_eq, s.residual);
        if (i < 20) {
            double scale = std::max(1.0, s.lhs.max_abs());
            worst_closed =
                std::max(worst_closed, s.lhs.max_abs_diff(lyb_lhs_closed_form(s.t_prime)) / scale);
        }
        CMatrix r = r_matrix(3, {0, 1}, Cplx(rnd(0.25, 4), rnd(0.1, 1)));
        worst_orth = std::max(worst_orth,
                              (r * r.transpose()).max_abs_diff(CMatrix::identity(3)));
    }
    rep.add("lyb-equation " + std::to_string(samples) + " samples", worst_eq, 1e-12);
    rep.add("lyb-closed-form 20 points", worst_closed, 1e-12);
    rep.add("r-orthogonality", worst_orth, 1e-13);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// --- Criterion 8: the tetrahedron equation, both forms, plus the six-factor
// product invariance and the involution-lemma roundtrip. ---
inline VerificationReport suite_tetrahedron(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "tetrahedron";
    rep.seed = opt.seed;
    rep.tolerance = std::max(opt.tol, 1e-8);
    auto t0 = std::chrono::steady_clock::now();
    int samples = std::max(1, opt.samples);

    TetrahedronSweep sweep = verify_tetrahedron(samples, opt.seed);
    rep.rejected_samples += sweep.rejected;
    rep.add("phi-form " + std::to_string(sweep.accepted) + " samples", sweep.max_phi_residual,
            1e-8);
    rep.add("f-form " + std::to_string(sweep.accepted) + " samples", sweep.max_f_residual, 1e-8);

    std::mt19937_64 rng(opt.seed + 1);
    auto rnd = [&](double lo, double hi) {
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    };
    int done = 0, rejected = 0;
    double worst_word = 0;
    while (done < samples && rejected < 100 * (samples + 1)) {
        SixTuple u;
        for (int k = 0; k < 6; ++k) u[k] = rnd(0.25, 4);
        try {
            RWord w = initial_word(u);
            CMatrix p0 = word_product(w);
            double norm = std::max(1.0, p0.max_abs());
            for (auto trip : {std::array<int, 3>{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}) {
                apply_lyb_move(w, trip);
                worst_word = std::max(worst_word, word_product(w).max_abs_diff(p0) / norm);
            }
            RWord w2 = initial_word(u);
            for (auto trip : {std::array<int, 3>{2, 4, 5}, {1, 3, 5}, {0, 3, 4}, {0, 1, 2}}) {
                apply_lyb_move(w2, trip);
                worst_word = std::max(worst_word, word_product(w2).max_abs_diff(p0) / norm);
            }
            done++;
        } catch (const map_pole_error&) {
            rejected++;
        }
    }
    rep.rejected_samples += rejected;
    rep.add("six-r-move-invariance " + std::to_string(done) + " samples", worst_word, 1e-8);

    int inv_done = 0;
    double worst_inv = 0;
    while (inv_done < samples) {
        TTriple t = {rnd(0.25, 4), rnd(0.25, 4), rnd(0.25, 4)};
        if (std::abs(t[0] * t[1] * t[2]) <= 1.05) continue;
        try {
            TTriple back = f_inverse(f_map(t));
            for (int i = 0; i < 3; ++i)
                worst_inv = std::max(worst_inv, std::abs(back[i] - t[i]) / (1.0 + std::abs(t[i])));
            inv_done++;
        } catch (const map_pole_error&) {
            rep.rejected_samples++;
        }
    }
    rep.add("s-conjugation-roundtrip " + std::to_string(inv_done) + " samples", worst_inv, 1e-9);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// --- Criterion 9: parameter reconstruction from boundary data. ---
inline VerificationReport suite_reconstruction(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "reconstruction";
    rep.seed = opt.seed;
    rep.tolerance = std::max(opt.tol, 1e-9);
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(opt.seed);
    auto rnd = [&](double lo, double hi) {
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    };
    int done = 0;
    double worst = 0;
    while (done < 50) {
        std::array<double, 6> t;
        t[0] = rnd(1.05, 4);
        t[1] = rnd(1.05, 4);
        for (int i = 2; i < 6; ++i) t[i] = rnd(0.25, 4);
        std::vector<double> values = gamma2_boundary_values(t);
        try {
            auto rec = reconstruct_from_boundary(values);
            for (int i = 0; i < 6; ++i)
                worst = std::max(worst, std::abs(rec[i] - t[i]) / (1.0 + std::abs(t[i])));
            // scale covariance
            for (double& v : values) v *= 2.5;
            auto rec2 = reconstruct_from_boundary(values);
            for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(rec2[i] - rec[i]));
            done++;
        } catch (const reconstruction_error&) {
            rep.rejected_samples++;
        }
    }
    rep.add("roundtrip+scale 50 tuples", worst, 1e-9);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// --- Criterion 10: the fourteen-term relation. ---
inline VerificationReport suite_fourteen_term(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "fourteen-term";
    rep.seed = opt.seed;
    rep.tolerance = std::max(opt.tol, 1e-9);
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < 3; ++k) {
        FourteenTermInstance inst = make_fourteen_term_instance(opt.seed + k);
        std::string tag = " instance=" + std::to_string(k);
        rep.add("constraint-residual" + tag, std::abs(inst.constraint_residual), 1e-12);
        FourteenTermAmbient base;
        rep.add("base-case" + tag, verify_fourteen_term(inst, base).residual, 1e-9);
        FourteenTermAmbient pendant;
        pendant.extra_vertices = 1;
        pendant.extra_edges = {{0, 3}};
        pendant.extra_weights = {{1.7, 0.6}};
        rep.add("triangle-plus-pendant" + tag, verify_fourteen_term(inst, pendant).residual, 1e-9);
    }
    // degenerate pair: equal models make every q vanish
    FourteenTermInstance degen;
    degen.m2 = make_star_triangle_pair({2, 3, 1.5}, {1, 1, 1});
    degen.m1 = degen.m2;
    bool flagged = false;
    try {
        detail::fourteen_coeffs(degen);
        verify_fourteen_term(degen, FourteenTermAmbient{});
    } catch (const std::domain_error&) {
        flagged = true;
    }
    rep.add("degenerate-pair-rejection", flagged ? 0.0 : 1.0, opt.tol, true);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

using SuiteFn = std::function<VerificationReport(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"partition-identities", suite_partition_identities},
        {"z-tutte", suite_z_tutte},
        {"biggs", suite_biggs},
        {"matiyasevich", suite_matiyasevich},
        {"four-formulas", suite_four_formulas},
        {"shift-product", suite_shift_product},
        {"shift-sum", suite_shift_sum},
        {"vertex-convolution", suite_vertex_convolution},
        {"star-triangle", suite_star_triangle},
        {"general-n", suite_general_n},
        {"percolation", suite_percolation},
        {"lyb", suite_lyb},
        {"tetrahedron", suite_tetrahedron},
        {"reconstruction", suite_reconstruction},
        {"fourteen-term", suite_fourteen_term},
    };
    return reg;
}

inline std::vector<VerificationReport> run_suites(const std::string& name,
                                                  const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    for (const auto& [n, fn] : suite_registry()) {
        if (name == "all" || name == n) out.push_back(fn(opt));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

} // namespace pottskit

#endif
