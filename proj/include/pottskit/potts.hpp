#ifndef POTTSKIT_POTTS_HPP
#define POTTSKIT_POTTS_HPP

// Anisotropic n-Potts models and their exact evaluators: the brute-force
// state sum, the reduced-weight form, boundary partition functions, the
// gluing law and the log-derivative in a reduced weight.
//
// Everything is templated on the weight scalar: Rational for exact
// identities, double / complex<double> where radicals enter (star-triangle
// images). The subgraph-expansion evaluator also accepts a non-integer
// modulus, which is the multivariate-Tutte reading of Z_n.

#include "pottskit/graph.hpp"
#include "pottskit/rational.hpp"

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pottskit {

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what, uint64_t required)
        : std::runtime_error(what + " (required budget " + std::to_string(required) + ")"),
          required_budget(required) {}
    uint64_t required_budget;
};

constexpr uint64_t kDefaultStateBudget = uint64_t{1} << 24;

template <typename S>
struct PottsModel {
    Multigraph graph;
    int n = 2;                          // spin modulus
    std::vector<std::pair<S, S>> weights; // per edge id: (alpha_e, beta_e)

    PottsModel() = default;
    PottsModel(Multigraph g, int modulus, std::vector<std::pair<S, S>> w)
        : graph(std::move(g)), n(modulus), weights(std::move(w)) {
        if (n < 1) throw std::invalid_argument("PottsModel: n must be >= 1");
        if (static_cast<int>(weights.size()) != graph.edge_count())
            throw std::invalid_argument("PottsModel: one weight pair per edge required");
    }

    static PottsModel isotropic(Multigraph g, int modulus, S alpha, S beta) {
        std::vector<std::pair<S, S>> w(g.edge_count(), {alpha, beta});
        return PottsModel(std::move(g), modulus, std::move(w));
    }

    const S& alpha(int e) const { return weights[e].first; }
    const S& beta(int e) const { return weights[e].second; }

    // Model on the spanning subgraph of an edge subset, weights carried over.
    PottsModel restricted_to(uint64_t mask) const {
        PottsModel m;
        m.graph = graph.spanning_subgraph(mask);
        m.n = n;
        for (int e = 0; e < graph.edge_count(); ++e)
            if (mask >> e & 1) m.weights.push_back(weights[e]);
        return m;
    }
};

using SpinState = std::vector<int>; // index = vertex id, value in [0, n)

struct BoundarySpec {
    std::vector<int> vertices; // distinct vertex ids
    std::vector<int> values;   // same length, values in [0, n)
};

namespace detail {

inline uint64_t checked_pow(uint64_t base, int exp, uint64_t budget, const char* what) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > budget / (base == 0 ? 1 : base) + 1) throw budget_error(what, ~uint64_t{0});
        r *= base;
        if (r > budget) throw budget_error(what, r);
    }
    return r;
}

} // namespace detail

template <typename S>
S state_weight(const PottsModel<S>& m, const SpinState& s) {
    if (static_cast<int>(s.size()) != m.graph.vertex_count())
        throw std::invalid_argument("state_weight: state must assign every vertex");
    S w = static_cast<S>(1);
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        const Edge& ed = m.graph.edge(e);
        // A loop always sees equal endpoint spins.
        w = w * ((s[ed.u] == s[ed.v]) ? m.alpha(e) : m.beta(e));
    }
    return w;
}

// Exact sum over all n^v spin states. Empty graph -> 1, m isolated points -> n^m.
template <typename S>
S partition_enumerate(const PottsModel<S>& m, uint64_t budget = kDefaultStateBudget) {
    int v = m.graph.vertex_count();
    detail::checked_pow(static_cast<uint64_t>(m.n), v, budget, "partition_enumerate");
    SpinState s(v, 0);
    S total = static_cast<S>(0);
    while (true) {
        total = total + state_weight(m, s);
        int i = 0;
        while (i < v && ++s[i] == m.n) s[i++] = 0;
        if (i == v) break;
        if (v == 0) break;
    }
    return total;
}

// Reduced-weight form: prod(beta_e) * sum_sigma prod(1 + (t_e - 1) delta).
// Requires beta_e != 0 on every edge; agrees with partition_enumerate exactly.
template <typename S>
S partition_fk(const PottsModel<S>& m, uint64_t budget = kDefaultStateBudget) {
    int v = m.graph.vertex_count();
    std::vector<S> t;
    S beta_prod = static_cast<S>(1);
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        if (m.beta(e) == static_cast<S>(0))
            throw std::domain_error("partition_fk: beta_e = 0 on edge " + std::to_string(e));
        t.push_back(m.alpha(e) / m.beta(e));
        beta_prod = beta_prod * m.beta(e);
    }
    detail::checked_pow(static_cast<uint64_t>(m.n), v, budget, "partition_fk");
    SpinState s(v, 0);
    S total = static_cast<S>(0);
    while (true) {
        S w = static_cast<S>(1);
        for (int e = 0; e < m.graph.edge_count(); ++e) {
            const Edge& ed = m.graph.edge(e);
            if (s[ed.u] == s[ed.v]) w = w * t[e];
        }
        total = total + w;
        int i = 0;
        while (i < v && ++s[i] == m.n) s[i++] = 0;
        if (i == v) break;
        if (v == 0) break;
    }
    return beta_prod * total;
}

inline Rational normalized_partition(const PottsModel<Rational>& m,
                                     uint64_t budget = kDefaultStateBudget) {
    return partition_enumerate(m, budget) / Rational(m.n).pow(m.graph.vertex_count());
}

// Partition sum restricted to states with fixed spins on the boundary.
template <typename S>
S boundary_partition(const PottsModel<S>& m, const BoundarySpec& b,
                     uint64_t budget = kDefaultStateBudget) {
    int v = m.graph.vertex_count();
    if (b.vertices.size() != b.values.size())
        throw std::invalid_argument("boundary_partition: vertex/value length mismatch");
    std::vector<int> fixed(v, -1);
    for (size_t i = 0; i < b.vertices.size(); ++i) {
        int vert = b.vertices[i];
        if (vert < 0 || vert >= v) throw std::out_of_range("boundary_partition: unknown vertex");
        if (fixed[vert] >= 0) throw std::invalid_argument("boundary_partition: duplicate boundary vertex");
        if (b.values[i] < 0 || b.values[i] >= m.n)
            throw std::invalid_argument("boundary_partition: value out of range");
        fixed[vert] = b.values[i];
    }
    std::vector<int> free_verts;
    for (int i = 0; i < v; ++i)
        if (fixed[i] < 0) free_verts.push_back(i);
    detail::checked_pow(static_cast<uint64_t>(m.n), static_cast<int>(free_verts.size()), budget,
                        "boundary_partition");
    SpinState s(v, 0);
    for (int i = 0; i < v; ++i)
        if (fixed[i] >= 0) s[i] = fixed[i];
    size_t f = free_verts.size();
    std::vector<int> ctr(f, 0);
    S total = static_cast<S>(0);
    while (true) {
        total = total + state_weight(m, s);
        size_t i = 0;
        while (i < f && ++ctr[i] == m.n) ctr[i++] = 0;
        for (size_t j = 0; j < f; ++j) s[free_verts[j]] = ctr[j];
        if (i == f) break;
        if (f == 0) break;
    }
    return total;
}

// Z(glued) - sum_A Z_{S(A)}(G1) Z_{S(A)}(G2); zero by the gluing law.
template <typename S>
S glue_check(const PottsModel<S>& m1, const PottsModel<S>& m2,
             const std::vector<std::pair<int, int>>& ident,
             uint64_t budget = kDefaultStateBudget) {
    if (m1.n != m2.n) throw std::invalid_argument("glue_check: mismatched n");
    Multigraph glued = m1.graph.glue(m2.graph, ident);
    std::vector<std::pair<S, S>> w = m1.weights;
    w.insert(w.end(), m2.weights.begin(), m2.weights.end());
    PottsModel<S> gm(glued, m1.n, std::move(w));
    S z_glued = partition_enumerate(gm, budget);

    size_t k = ident.size();
    std::vector<int> a(k, 0);
    S sum = static_cast<S>(0);
    while (true) {
        BoundarySpec b1, b2;
        for (size_t i = 0; i < k; ++i) {
            b1.vertices.push_back(ident[i].first);
            b2.vertices.push_back(ident[i].second);
            b1.values.push_back(a[i]);
            b2.values.push_back(a[i]);
        }
        sum = sum + boundary_partition(m1, b1, budget) * boundary_partition(m2, b2, budget);
        size_t i = 0;
        while (i < k && ++a[i] == m1.n) a[i++] = 0;
        if (i == k) break;
        if (k == 0) break;
    }
    return z_glued - sum;
}

// d ln Z / d t_e, computed from the multilinearity of the reduced-weight sum
// in each t_e. Does not depend on any beta.
template <typename S>
S dlogz_dt(const PottsModel<S>& m, int e, uint64_t budget = kDefaultStateBudget) {
    m.graph.edge(e);
    if (m.beta(e) == static_cast<S>(0)) throw std::domain_error("dlogz_dt: beta_e = 0");
    int v = m.graph.vertex_count();
    std::vector<S> t;
    for (int i = 0; i < m.graph.edge_count(); ++i) {
        if (m.beta(i) == static_cast<S>(0)) throw std::domain_error("dlogz_dt: beta = 0 on an edge");
        t.push_back(m.alpha(i) / m.beta(i));
    }
    detail::checked_pow(static_cast<uint64_t>(m.n), v, budget, "dlogz_dt");
    SpinState s(v, 0);
    S w_total = static_cast<S>(0);   // W = sum_sigma prod(1 + (t-1) delta)
    S w_partial = static_cast<S>(0); // dW/dt_e
    while (true) {
        S w = static_cast<S>(1);
        for (int i = 0; i < m.graph.edge_count(); ++i) {
            if (i == e) continue;
            const Edge& ed = m.graph.edge(i);
            if (s[ed.u] == s[ed.v]) w = w * t[i];
        }
        const Edge& ed = m.graph.edge(e);
        bool eq = s[ed.u] == s[ed.v];
        w_total = w_total + (eq ? w * t[e] : w);
        if (eq) w_partial = w_partial + w;
        int i = 0;
        while (i < v && ++s[i] == m.n) s[i++] = 0;
        if (i == v) break;
        if (v == 0) break;
    }
    if (w_total == static_cast<S>(0)) throw std::domain_error("dlogz_dt: Z = 0");
    return w_partial / w_total;
}

// Random-cluster expansion of Z: sum over edge subsets B of
// prod_B (alpha-beta) * prod_!B beta * q^{k(B)}, with an arbitrary scalar
// modulus q. For integer q = n this equals partition_enumerate.
template <typename S>
S fk_expansion_z(const Multigraph& g, const std::vector<std::pair<S, S>>& weights, const S& q) {
    int e = g.edge_count();
    if (e >= 30) throw budget_error("fk_expansion_z", uint64_t{1} << e);
    std::vector<S> npow(g.vertex_count() + 1);
    npow[0] = static_cast<S>(1);
    for (int i = 1; i <= g.vertex_count(); ++i) npow[i] = npow[i - 1] * q;
    S total = static_cast<S>(0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
        S w = static_cast<S>(1);
        for (int i = 0; i < e; ++i)
            w = w * ((mask >> i & 1) ? weights[i].first - weights[i].second : weights[i].second);
        total = total + w * npow[g.spanning_subgraph_components(mask)];
    }
    return total;
}

// Z of every spanning subgraph at once (index = edge-subset mask), via the
// random-cluster expansion. This is the fast inner loop for the convolution
// identities: 3^e scalar operations in total.
template <typename S>
std::vector<S> fk_all_subset_zs(const PottsModel<S>& m) {
    int e = m.graph.edge_count();
    if (e >= 20) throw budget_error("fk_all_subset_zs", uint64_t{1} << (2 * e));
    uint64_t total = uint64_t{1} << e;
    std::vector<S> diff_prod(total), beta_prod(total);
    std::vector<int> kcomp(total);
    std::vector<S> npow(m.graph.vertex_count() + 1);
    npow[0] = static_cast<S>(1);
    for (int i = 1; i <= m.graph.vertex_count(); ++i) npow[i] = npow[i - 1] * static_cast<S>(m.n);
    diff_prod[0] = static_cast<S>(1);
    beta_prod[0] = static_cast<S>(1);
    kcomp[0] = m.graph.vertex_count();
    for (uint64_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(mask);
        uint64_t rest = mask & (mask - 1);
        diff_prod[mask] = diff_prod[rest] * (m.alpha(low) - m.beta(low));
        beta_prod[mask] = beta_prod[rest] * m.beta(low);
        kcomp[mask] = m.graph.spanning_subgraph_components(mask);
    }
    std::vector<S> z(total);
    for (uint64_t a = 0; a < total; ++a) {
        S acc = static_cast<S>(0);
        uint64_t b = a;
        while (true) {
            acc = acc + diff_prod[b] * beta_prod[a & ~b] * npow[kcomp[b]];
            if (b == 0) break;
            b = (b - 1) & a;
        }
        z[a] = acc;
    }
    return z;
}

using RationalModel = PottsModel<Rational>;
using ComplexModel = PottsModel<std::complex<double>>;

} // namespace pottskit

#endif
