#ifndef POTTSKIT_BIGGS_HPP
#define POTTSKIT_BIGGS_HPP

// The convolution identity relating two Potts models over spanning
// subgraphs, and everything derived from it: the chromatic/flow exchange
// formulas, the order-shift expansions in the modulus, and the vertex
// convolution for the chromatic polynomial.
//
// Every verify_* function returns an exact residual (left side minus right
// side); the contract in each case is zero. Identities that the source
// formulas state with divisions by p or q are checked in cleared-denominator
// form, which is total and equivalent.

#include "pottskit/graph.hpp"
#include "pottskit/invariants.hpp"
#include "pottskit/poly.hpp"
#include "pottskit/potts.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pottskit {

struct BiggsCoeffs {
    std::vector<Rational> p; // per edge id
    std::vector<Rational> q;
};

// p_e = (a1_e - b1_e)/(a2_e - b2_e), q_e = (a2_e b1_e - a1_e b2_e)/(a2_e - b2_e).
// Defined when the second model is nondegenerate on every edge.
inline BiggsCoeffs biggs_coeffs(const RationalModel& m1, const RationalModel& m2) {
    if (m1.n != m2.n) throw std::invalid_argument("biggs_coeffs: models must share n");
    if (m1.graph.edge_count() != m2.graph.edge_count())
        throw std::invalid_argument("biggs_coeffs: models must share the graph");
    BiggsCoeffs c;
    for (int e = 0; e < m1.graph.edge_count(); ++e) {
        Rational d = m2.alpha(e) - m2.beta(e);
        if (d.is_zero())
            throw std::domain_error("biggs_coeffs: alpha2 = beta2 on edge " + std::to_string(e));
        c.p.push_back((m1.alpha(e) - m1.beta(e)) / d);
        c.q.push_back((m2.alpha(e) * m1.beta(e) - m1.alpha(e) * m2.beta(e)) / d);
    }
    return c;
}

// Z1(G) - sum over spanning subgraphs A of prod_{e not in A} q_e *
// prod_{e in A} p_e * Z2(A). Zero by the convolution identity; this is the
// cleared-denominator form of the normalized statement and holds even when
// some q_e vanish.
inline Rational verify_biggs(const RationalModel& m1, const RationalModel& m2) {
    BiggsCoeffs c = biggs_coeffs(m1, m2);
    int e = m1.graph.edge_count();
    std::vector<Rational> z2 = fk_all_subset_zs(m2);
    Rational rhs(0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
        Rational coeff(1);
        for (int i = 0; i < e; ++i) coeff *= (mask >> i & 1) ? c.p[i] : c.q[i];
        rhs += coeff * z2[mask];
    }
    return partition_enumerate(m1) - rhs;
}

namespace detail {

// chi_A(n) for every spanning subgraph mask, evaluated exactly.
inline std::vector<Rational> chromatic_all_masks(const Multigraph& g, int n, TutteCache& cache) {
    int e = g.edge_count();
    std::vector<Rational> out(uint64_t{1} << e);
    for (uint64_t mask = 0; mask < out.size(); ++mask)
        out[mask] = chromatic(g.spanning_subgraph(mask), cache).evaluate(Rational(n));
    return out;
}

inline std::vector<Rational> flow_all_masks(const Multigraph& g, int n, TutteCache& cache) {
    int e = g.edge_count();
    std::vector<Rational> out(uint64_t{1} << e);
    for (uint64_t mask = 0; mask < out.size(); ++mask)
        out[mask] = flow(g.spanning_subgraph(mask), cache).evaluate(Rational(n));
    return out;
}

} // namespace detail

// chi_G(n) - (n-1)^e / n^{e-v} * sum_A C_A(n)/(1-n)^{e(A)}; zero for n >= 2.
inline Rational verify_matiyasevich(const Multigraph& g, int n,
                                    TutteCache& cache = global_tutte_cache()) {
    if (n < 2) throw std::domain_error("verify_matiyasevich: n >= 2 required");
    int e = g.edge_count();
    int v = g.vertex_count();
    std::vector<Rational> flows = detail::flow_all_masks(g, n, cache);
    Rational sum(0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask)
        sum += flows[mask] / Rational(1 - n).pow(std::popcount(mask));
    Rational rhs = Rational(n - 1).pow(e) * Rational(n).pow(v - e) * sum;
    return chromatic(g, cache).evaluate(Rational(n)) - rhs;
}

struct FourFormulaResiduals {
    Rational genm;     // Z(G) expanded over chromatic values of subgraphs
    Rational inverse;  // flow polynomial from chromatic values
    Rational t_flow;   // Z(G) expanded over flow values of subgraphs
    Rational flow_t;   // flow polynomial from Z of subgraphs
};

// The four exchange formulas tied to the model pairs ((a1,b1),(0,1)),
// ((1-n,1),(0,1)), ((1-n,1),(a1,b1)) and ((a1,b1),(1-n,1)), all in
// cleared-denominator form:
//   Z(G)                  = sum_A (b1-a1)^|A| a1^{e-|A|} chi_A
//   n^v C_G               = sum_A (-1)^|A| (n-1)^{e-|A|} n^|A| chi_A
//   n^{e-v} Z(G)          = sum_A (a1-b1)^|A| (a1+(n-1)b1)^{e-|A|} C_A
//   (-1)^e (a1-b1)^e n^v C_G = sum_A (-n)^|A| (a1+(n-1)b1)^{e-|A|} Z(A)
inline FourFormulaResiduals verify_four_formulas(const Multigraph& g, int n,
                                                 const Rational& a1, const Rational& b1,
                                                 TutteCache& cache = global_tutte_cache()) {
    if (n < 2) throw std::domain_error("verify_four_formulas: n >= 2 required");
    int e = g.edge_count();
    int v = g.vertex_count();
    auto m = RationalModel::isotropic(g, n, a1, b1);
    std::vector<Rational> zs = fk_all_subset_zs(m);
    std::vector<Rational> chis = detail::chromatic_all_masks(g, n, cache);
    std::vector<Rational> flows = detail::flow_all_masks(g, n, cache);
    Rational z_g = zs[(uint64_t{1} << e) - 1];
    Rational c_g = flows[(uint64_t{1} << e) - 1];

    Rational s1(0), s2(0), s3(0), s4(0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
        int ea = std::popcount(mask);
        s1 += (b1 - a1).pow(ea) * a1.pow(e - ea) * chis[mask];
        s2 += Rational(-1).pow(ea) * Rational(n - 1).pow(e - ea) * Rational(n).pow(ea) * chis[mask];
        s3 += (a1 - b1).pow(ea) * (a1 + Rational(n - 1) * b1).pow(e - ea) * flows[mask];
        s4 += Rational(-n).pow(ea) * (a1 + Rational(n - 1) * b1).pow(e - ea) * zs[mask];
    }
    FourFormulaResiduals r;
    r.genm = z_g - s1;
    r.inverse = Rational(n).pow(v) * c_g - s2;
    r.t_flow = Rational(n).pow(e - v) * z_g - s3;
    r.flow_t = Rational(-1).pow(e) * (a1 - b1).pow(e) * Rational(n).pow(v) * c_g - s4;
    return r;
}

// Z_{n1 n2}(G) minus its expansion sum_{A',A''} eta_{A'A''} Z_{n1}(A') Z_{n2}(A''),
// with the eta table assembled along the multiplicativity chain:
// Z via flow values at n1*n2, flows resummed through complete flows, the
// complete flow split multiplicatively, and each factor pushed back to
// partition functions of spanning subgraphs.
inline Rational verify_order_shift_product(const Multigraph& g, int n1, int n2,
                                           const Rational& a1, const Rational& b1,
                                           TutteCache& cache = global_tutte_cache()) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("verify_order_shift_product: moduli >= 1");
    int e = g.edge_count();
    int v = g.vertex_count();
    if (e > 12) throw budget_error("verify_order_shift_product", uint64_t{1} << (2 * e));
    long big_n = static_cast<long>(n1) * n2;
    if (a1 == b1) throw std::domain_error("verify_order_shift_product: a1 = b1 excluded");
    Rational q_big = a1 + Rational(big_n - 1) * b1;
    Rational q1 = a1 + Rational(n1 - 1) * b1;
    Rational q2 = a1 + Rational(n2 - 1) * b1;
    if (q_big.is_zero() || q1.is_zero() || q2.is_zero())
        throw std::domain_error("verify_order_shift_product: degenerate parameters");

    uint64_t total = uint64_t{1} << e;
    // Step 1: Z_{n1n2}(G) = sum_A lambda_A C_A(n1 n2) with
    // lambda_A = N^{v-e} (a1-b1)^|A| (a1+(N-1)b1)^{e-|A|}.
    std::vector<Rational> lambda(total);
    for (uint64_t a = 0; a < total; ++a) {
        int ea = std::popcount(a);
        lambda[a] = Rational(big_n).pow(v - e) * (a1 - b1).pow(ea) * q_big.pow(e - ea);
    }
    // Step 2: C_A(N) = sum_{A' subset A} (-1)^{|A|-|A'|} FC_{A'}(N):
    // omega_{A'} = sum_{A superset A'} lambda_A (-1)^{|A|-|A'|}.
    std::vector<Rational> omega(total, Rational(0));
    for (uint64_t a = 0; a < total; ++a) {
        uint64_t b = a;
        while (true) {
            int diff = std::popcount(a) - std::popcount(b);
            omega[b] += (diff % 2 == 0) ? lambda[a] : -lambda[a];
            if (b == 0) break;
            b = (b - 1) & a;
        }
    }
    // Steps 3+4: FC_{A'}(N) = FC(n1) FC(n2), each FC(n) = sum of C over
    // subsets: mu_{B1,B2} = sum_{A' superset B1 | B2} omega_{A'}.
    // Collect over pairs via the superset-closure of omega.
    std::vector<Rational> omega_supersum(total, Rational(0)); // sum over supersets
    for (uint64_t a = 0; a < total; ++a) {
        uint64_t b = a;
        while (true) {
            omega_supersum[b] += omega[a];
            if (b == 0) break;
            b = (b - 1) & a;
        }
    }
    // Step 5: C_B(n) = (-1)^{|B|} (a1-b1)^{-|B|} n^{-v} sum_{D subset B}
    // (-n)^{|D|} (a1+(n-1)b1)^{|B|-|D|} Z_n(D).
    auto m1 = RationalModel::isotropic(g, n1, a1, b1);
    auto m2 = RationalModel::isotropic(g, n2, a1, b1);
    std::vector<Rational> z1 = fk_all_subset_zs(m1);
    std::vector<Rational> z2 = fk_all_subset_zs(m2);

    // eta_{D1,D2} = sum_{B1 sup D1, B2 sup D2} mu_{B1B2} delta(B1,D1) delta(B2,D2)
    // where mu_{B1B2} = omega_supersum[B1|B2]. Assemble the right side
    // directly: rhs = sum_{B1,B2} mu * C_{B1}(n1)-expansion * C_{B2}(n2)-expansion,
    // regrouped as rhs = sum_{B1,B2} mu * cof1[B1] * cof2[B2] with
    // cofk[B] = sum_{D subset B} (...) Z_{nk}(D).
    auto c_from_z = [&](const std::vector<Rational>& z, int n) {
        std::vector<Rational> out(total, Rational(0));
        Rational qn = a1 + Rational(n - 1) * b1;
        for (uint64_t bmask = 0; bmask < total; ++bmask) {
            int eb = std::popcount(bmask);
            Rational acc(0);
            uint64_t d = bmask;
            while (true) {
                int ed = std::popcount(d);
                acc += Rational(-static_cast<long>(n)).pow(ed) * qn.pow(eb - ed) * z[d];
                if (d == 0) break;
                d = (d - 1) & bmask;
            }
            Rational scale = Rational(-1).pow(eb) * (a1 - b1).pow(-eb) * Rational(n).pow(-v);
            out[bmask] = scale * acc;
        }
        return out;
    };
    std::vector<Rational> c1 = c_from_z(z1, n1);
    std::vector<Rational> c2 = c_from_z(z2, n2);

    Rational rhs(0);
    for (uint64_t b1m = 0; b1m < total; ++b1m) {
        if (c1[b1m].is_zero()) continue;
        for (uint64_t b2m = 0; b2m < total; ++b2m) {
            if (c2[b2m].is_zero()) continue;
            rhs += omega_supersum[b1m | b2m] * c1[b1m] * c2[b2m];
        }
    }
    auto big_model = RationalModel::isotropic(g, static_cast<int>(big_n), a1, b1);
    return partition_enumerate(big_model) - rhs;
}

// chi_G(n1+n2) - sum over vertex subsets B of chi_{G|B}(n1) chi_{G|B^c}(n2).
inline Rational verify_tutte_vertex_convolution(const Multigraph& g, int n1, int n2,
                                                TutteCache& cache = global_tutte_cache()) {
    int v = g.vertex_count();
    if (v > 20) throw budget_error("verify_tutte_vertex_convolution", uint64_t{1} << v);
    Rational rhs(0);
    for (uint64_t bmask = 0; bmask < (uint64_t{1} << v); ++bmask) {
        uint64_t cmask = ((uint64_t{1} << v) - 1) & ~bmask;
        Rational left = chromatic(g.vertex_induced_mask(bmask), cache).evaluate(Rational(n1));
        if (left.is_zero()) continue;
        Rational right = chromatic(g.vertex_induced_mask(cmask), cache).evaluate(Rational(n2));
        rhs += left * right;
    }
    return chromatic(g, cache).evaluate(Rational(n1 + n2)) - rhs;
}

// Z_{n1+n2}(G) minus its expansion over pairs Z_{n1}(A1) Z_{n2}(A2): the
// additive counterpart, going through chromatic values and the vertex
// convolution. A1 lives on a vertex subset B, A2 on the complement; both are
// edge subsets of the corresponding restrictions of a spanning subgraph A.
inline Rational verify_order_shift_sum(const Multigraph& g, int n1, int n2,
                                       const Rational& a1, const Rational& b1,
                                       TutteCache& cache = global_tutte_cache()) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("verify_order_shift_sum: moduli >= 1");
    int e = g.edge_count();
    int v = g.vertex_count();
    if (e > 10 || v > 12) throw budget_error("verify_order_shift_sum", uint64_t{1} << (e + v));
    if (a1 == b1 || a1.is_zero())
        throw std::domain_error("verify_order_shift_sum: need a1 != b1 and a1 != 0");

    auto m1 = RationalModel::isotropic(g, n1, a1, b1);
    auto m2 = RationalModel::isotropic(g, n2, a1, b1);
    std::vector<Rational> z1 = fk_all_subset_zs(m1);
    std::vector<Rational> z2 = fk_all_subset_zs(m2);

    // chi_{H}(n) = (a1-b1)^{-e(H)} sum_{D subset E(H)} (-1)^{|D|} a1^{e(H)-|D|} Z_n(D on V(H))
    // where Z_n(D on V(H)) = Z_n(D as spanning subgraph of G) / n^{v - |V(H)|}.
    Rational rhs(0);
    uint64_t vfull = (uint64_t{1} << v) - 1;
    for (uint64_t amask = 0; amask < (uint64_t{1} << e); ++amask) {
        int ea = std::popcount(amask);
        Rational lambda = (b1 - a1).pow(ea) * a1.pow(e - ea); // Z = sum lambda_A chi_A(n1+n2)
        for (uint64_t bmask = 0; bmask <= vfull; ++bmask) {
            uint64_t cmask = vfull & ~bmask;
            // Edges of A inside B and inside the complement.
            uint64_t ab = 0, ac = 0;
            for (int i = 0; i < e; ++i) {
                if (!(amask >> i & 1)) continue;
                const Edge& ed = g.edge(i);
                bool bu = bmask >> ed.u & 1, bv = bmask >> ed.v & 1;
                if (bu && bv) ab |= uint64_t{1} << i;
                if (!bu && !bv) ac |= uint64_t{1} << i;
            }
            int nb = std::popcount(bmask), nc = v - nb;
            int eab = std::popcount(ab), eac = std::popcount(ac);
            // chi_{A|B}(n1) expansion
            Rational chi_b(0);
            uint64_t d = ab;
            while (true) {
                int ed_ = std::popcount(d);
                Rational zval = z1[d] / Rational(n1).pow(v - nb);
                chi_b += Rational(-1).pow(ed_) * a1.pow(eab - ed_) * zval;
                if (d == 0) break;
                d = (d - 1) & ab;
            }
            chi_b *= (a1 - b1).pow(-eab);
            if (chi_b.is_zero()) continue;
            Rational chi_c(0);
            d = ac;
            while (true) {
                int ed_ = std::popcount(d);
                Rational zval = z2[d] / Rational(n2).pow(v - nc);
                chi_c += Rational(-1).pow(ed_) * a1.pow(eac - ed_) * zval;
                if (d == 0) break;
                d = (d - 1) & ac;
            }
            chi_c *= (a1 - b1).pow(-eac);
            rhs += lambda * chi_b * chi_c;
        }
    }
    auto big_model = RationalModel::isotropic(g, n1 + n2, a1, b1);
    return partition_enumerate(big_model) - rhs;
}

} // namespace pottskit

#endif
