#ifndef POTTSKIT_TETRAHEDRON_HPP
#define POTTSKIT_TETRAHEDRON_HPP

// R-matrix algebra for the local Yang-Baxter equation, the two forms of the
// tetrahedron equation satisfied by the S-dressed star-triangle maps, the
// six-factor product over the four-strand wiring diagram, and the
// reconstruction of the six vertex parameters from boundary partition data.
//
// Matrix entries use a(t) = (t - 1/t)/2 and b(t) = (t + 1/t)/2 (hyperbolic
// functions of log t written algebraically), so every identity is rational
// in t with an explicit imaginary unit and no branch ambiguity.

#include "pottskit/graph.hpp"
#include "pottskit/potts.hpp"
#include "pottskit/star_triangle.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace pottskit {

class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, Cplx(0)) {}

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    Cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    CMatrix operator*(const CMatrix& o) const {
        CMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                Cplx v = (*this)(i, k);
                if (v == Cplx(0)) continue;
                for (int j = 0; j < dim_; ++j) out(i, j) += v * o(k, j);
            }
        return out;
    }
    CMatrix transpose() const {
        CMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }
    double max_abs_diff(const CMatrix& o) const {
        double m = 0;
        for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }
    double max_abs() const {
        double m = 0;
        for (const Cplx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    int dim_ = 0;
    std::vector<Cplx> a_;
};

inline Cplx hyp_a(Cplx t) {
    if (std::abs(t) < 1e-300) throw std::domain_error("r_matrix: t = 0");
    return (t - 1.0 / t) / 2.0;
}
inline Cplx hyp_b(Cplx t) {
    if (std::abs(t) < 1e-300) throw std::domain_error("r_matrix: t = 0");
    return (t + 1.0 / t) / 2.0;
}

// Identity outside the 2x2 block on (plane.first, plane.second);
// block = [[i a(t), b(t)], [b(t), -i a(t)]]. Complex-orthogonal: R R^T = I.
inline CMatrix r_matrix(int dim, std::pair<int, int> plane, Cplx t) {
    CMatrix m = CMatrix::identity(dim);
    const Cplx iu(0, 1);
    auto [p, q] = plane;
    m(p, p) = iu * hyp_a(t);
    m(p, q) = hyp_b(t);
    m(q, p) = hyp_b(t);
    m(q, q) = -iu * hyp_a(t);
    return m;
}

// Left side of the local Yang-Baxter equation in closed form (3x3).
inline CMatrix lyb_lhs_closed_form(const TTriple& t) {
    Cplx t1 = t[0], t2 = t[1], t3 = t[2];
    const Cplx iu(0, 1);
    Cplx t1s = t1 * t1, t2s = t2 * t2, t3s = t3 * t3;
    Cplx den = t2s - 1.0;
    CMatrix m(3);
    m(0, 0) = t2 * (t3s - 1.0) / (t3 * den);
    m(0, 1) = iu * (t1s * t2s * t3s - t1s - t2s + t3s) / (2.0 * t1 * t3 * den);
    m(0, 2) = (t1s * t2s * t3s - t1s + t2s - t3s) / (2.0 * t1 * t3 * den);
    m(1, 0) = -iu * t2 * (t3s + 1.0) / (t3 * den);
    m(1, 1) = (t1s * t2s * t3s + t1s + t2s + t3s) / (2.0 * t1 * t3 * den);
    m(1, 2) = -iu * (t1s * t2s * t3s + t1s - t2s - t3s) / (2.0 * t1 * t3 * den);
    m(2, 0) = (t2s + 1.0) / den;
    m(2, 1) = iu * t2 * (t1s + 1.0) / (t1 * den);
    m(2, 2) = t2 * (t1s - 1.0) / (t1 * den);
    return m;
}

struct LybSides {
    CMatrix lhs;
    CMatrix rhs;
    TTriple t_prime;
    double residual;
};

// The local Yang-Baxter identity
//   R_12(t'3) R_13(S(t'2)) R_23(t'1) = R_23(S(t1)) R_13(t2) R_12(S(t3))
// with t' = f_map(t): the primed (triangle-side) weights enter the plain
// slots of the left product, the unprimed (star-side) weights the S-dressed
// slots of the right one. (Solving the factorization directly shows this is
// the orientation in which the two triple products coincide.)
inline LybSides verify_lyb(const TTriple& t) {
    TTriple tp = f_map(t);
    CMatrix lhs = r_matrix(3, {0, 1}, tp[2]) * r_matrix(3, {0, 2}, s_involution(tp[1])) *
                  r_matrix(3, {1, 2}, tp[0]);
    CMatrix rhs = r_matrix(3, {1, 2}, s_involution(t[0])) * r_matrix(3, {0, 2}, t[1]) *
                  r_matrix(3, {0, 1}, s_involution(t[2]));
    // Entrywise residual relative to the largest entry (the S-arguments can
    // push entries to O(100) near the symmetric point).
    double scale = std::max(1.0, lhs.max_abs());
    return {lhs, rhs, tp, lhs.max_abs_diff(rhs) / scale};
}

// ---- The four-strand wiring diagram ----

using SixTuple = std::array<Cplx, 6>;

// Crossing slot k (0-based) lives on the strand pair kStrandPair[k];
// strands a,b,c,d are coordinates 0..3.
inline constexpr std::array<std::pair<int, int>, 6> kStrandPair = {{
    {2, 3}, // slot 1: cd
    {1, 3}, // slot 2: bd
    {1, 2}, // slot 3: bc
    {0, 3}, // slot 4: ad
    {0, 2}, // slot 5: ac
    {0, 1}, // slot 6: ab
}};

// R_cd(t1) R_bd(S(t2)) R_bc(t3) R_ad(t4) R_ac(S(t5)) R_ab(t6).
inline CMatrix six_r_product(const SixTuple& t) {
    CMatrix m = CMatrix::identity(4);
    for (int k = 0; k < 6; ++k) {
        Cplx arg = (k == 1 || k == 4) ? s_involution(t[k]) : t[k];
        m = m * r_matrix(4, kStrandPair[k], arg);
    }
    return m;
}

// ---- Maps on six-tuples ----

inline constexpr std::array<std::array<int, 3>, 4> kTriples = {{
    {0, 1, 2}, // slots 1,2,3
    {0, 3, 4}, // slots 1,4,5
    {1, 3, 5}, // slots 2,4,6
    {2, 4, 5}, // slots 3,5,6
}};

inline int triple_index(int which) {
    switch (which) {
        case 123: return 0;
        case 145: return 1;
        case 246: return 2;
        case 356: return 3;
    }
    throw std::invalid_argument("tetra_map: which must be one of 123, 145, 246, 356");
}

// F_ijk: the star-triangle map on three designated slots (forward), or its
// inverse S^3 F S^3.
inline SixTuple tetra_map(int which, const SixTuple& t, bool inverse = false) {
    const auto& idx = kTriples[static_cast<size_t>(triple_index(which))];
    TTriple sub = {t[idx[0]], t[idx[1]], t[idx[2]]};
    TTriple out = inverse ? f_inverse(sub) : f_map(sub);
    SixTuple r = t;
    for (int i = 0; i < 3; ++i) r[idx[i]] = out[i];
    return r;
}

// Phi_ijk: the S-dressed star-triangle map, S on slot j before F and the
// inverse fractional-linear map on slots i, k after it. S has order four,
// not two, so the outer dressing must be S^{-1}; this is the dressing under
// which the tetrahedron equation holds.
inline SixTuple phi_map(int which, const SixTuple& t) {
    const auto& idx = kTriples[static_cast<size_t>(triple_index(which))];
    SixTuple v = t;
    v[idx[1]] = s_involution(v[idx[1]]);
    v = tetra_map(which, v);
    v[idx[0]] = s_inverse(v[idx[0]]);
    v[idx[2]] = s_inverse(v[idx[2]]);
    return v;
}

struct TetrahedronCheck {
    double phi_residual;  // Phi_356 Phi_246 Phi_145 Phi_123 vs reverse order
    double f_residual;    // F_356^-1 F_246 F_145^-1 F_123 vs mirrored side
};

inline double six_tuple_dist(const SixTuple& a, const SixTuple& b) {
    double m = 0;
    for (int i = 0; i < 6; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

namespace detail {

// Each square-root map application has two coherent branches, and each
// inverse has up to two genuine preimages (the deck ambiguity); a chain of
// four moves therefore evaluates to a finite set of leaves. The equation
// asserts that the chains in both orders produce a common value, so the
// residual is the minimal distance between the two leaf sets.
enum class TetraStep { Forward, Inverse, Phi };

inline void tetra_leaves(const std::array<int, 4>& order, const std::array<TetraStep, 4>& kind,
                         size_t step, const SixTuple& u, double blowup,
                         std::vector<SixTuple>& out) {
    if (step == 4) {
        out.push_back(u);
        return;
    }
    const auto& idx = kTriples[static_cast<size_t>(order[step])];
    SixTuple v = u;
    TetraStep k = kind[step];
    try {
        if (k == TetraStep::Phi) v[idx[1]] = s_involution(v[idx[1]]);
        TTriple sub = {v[idx[0]], v[idx[1]], v[idx[2]]};
        std::vector<TTriple> images;
        if (k == TetraStep::Inverse) {
            images = detail::f_preimages(sub);
        } else {
            for (int flip = 0; flip < 2; ++flip) {
                try {
                    images.push_back(detail::f_map_branch(sub, flip != 0));
                } catch (const map_pole_error&) {
                }
            }
        }
        for (const TTriple& img : images) {
            SixTuple w = v;
            for (int i = 0; i < 3; ++i) w[idx[i]] = img[i];
            try {
                if (k == TetraStep::Phi) {
                    w[idx[0]] = s_inverse(w[idx[0]]);
                    w[idx[2]] = s_inverse(w[idx[2]]);
                }
                bool finite = true;
                for (const Cplx& x : w)
                    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) ||
                        std::abs(x) > blowup)
                        finite = false;
                if (finite) tetra_leaves(order, kind, step + 1, w, blowup, out);
            } catch (const map_pole_error&) {
            }
        }
    } catch (const map_pole_error&) {
    }
}

inline double leaf_set_distance(const std::vector<SixTuple>& a, const std::vector<SixTuple>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const SixTuple& x : a)
        for (const SixTuple& y : b) best = std::min(best, six_tuple_dist(x, y));
    return best;
}

} // namespace detail

// Residuals of both equation forms on one tuple. Throws map_pole_error when
// a side has no finite evaluation (the draw is rejected by callers).
inline TetrahedronCheck tetrahedron_residuals(const SixTuple& u, double blowup = 1e8) {
    using detail::TetraStep;
    std::array<int, 4> fwd_order = {0, 1, 2, 3};  // 123, 145, 246, 356
    std::array<int, 4> rev_order = {3, 2, 1, 0};
    std::array<TetraStep, 4> phi_kind = {TetraStep::Phi, TetraStep::Phi, TetraStep::Phi,
                                         TetraStep::Phi};
    // F_356^-1 F_246 F_145^-1 F_123 applied right-to-left in both orders.
    std::array<TetraStep, 4> f_kind = {TetraStep::Forward, TetraStep::Inverse, TetraStep::Forward,
                                       TetraStep::Inverse};
    std::vector<SixTuple> phi_l, phi_r, f_l, f_r;
    detail::tetra_leaves(fwd_order, phi_kind, 0, u, blowup, phi_l);
    detail::tetra_leaves(rev_order, phi_kind, 0, u, blowup, phi_r);
    detail::tetra_leaves(fwd_order, f_kind, 0, u, blowup, f_l);
    detail::tetra_leaves(rev_order, f_kind, 0, u, blowup, f_r);
    if (phi_l.empty() || phi_r.empty() || f_l.empty() || f_r.empty())
        throw map_pole_error("tetrahedron_residuals: side has no finite evaluation");
    return {detail::leaf_set_distance(phi_l, phi_r), detail::leaf_set_distance(f_l, f_r)};
}

struct TetrahedronSweep {
    int accepted = 0;
    int rejected = 0;
    double max_residual = 0;
    double max_phi_residual = 0;
    double max_f_residual = 0;
};

inline SixTuple random_six_tuple(std::mt19937_64& rng) {
    SixTuple t;
    for (int i = 0; i < 6; ++i) {
        // log-uniform on [1/4, 4]
        double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        t[i] = std::exp(std::log(0.25) + u * (std::log(4.0) - std::log(0.25)));
    }
    return t;
}

// Seeded sweep over random tuples; singular draws are rejected and counted.
inline TetrahedronSweep verify_tetrahedron(int samples, uint64_t seed, double blowup = 1e8) {
    std::mt19937_64 rng(seed);
    TetrahedronSweep sweep;
    while (sweep.accepted < samples) {
        SixTuple u = random_six_tuple(rng);
        try {
            TetrahedronCheck c = tetrahedron_residuals(u, blowup);
            sweep.accepted++;
            sweep.max_phi_residual = std::max(sweep.max_phi_residual, c.phi_residual);
            sweep.max_f_residual = std::max(sweep.max_f_residual, c.f_residual);
            sweep.max_residual = std::max({sweep.max_residual, c.phi_residual, c.f_residual});
        } catch (const map_pole_error&) {
            sweep.rejected++;
            if (sweep.rejected > 100 * (samples + 1))
                throw std::runtime_error("verify_tetrahedron: rejection rate too high");
        }
    }
    return sweep;
}

// ---- Word-level local moves on the six-factor product ----

struct RFactor {
    int slot; // 0..5, fixed strand pair kStrandPair[slot]
    Cplx arg;
};

using RWord = std::vector<RFactor>;

inline RWord initial_word(const SixTuple& t) {
    RWord w;
    for (int k = 0; k < 6; ++k)
        w.push_back({k, (k == 1 || k == 4) ? s_involution(t[k]) : t[k]});
    return w;
}

inline CMatrix word_product(const RWord& w) {
    CMatrix m = CMatrix::identity(4);
    for (const RFactor& f : w) m = m * r_matrix(4, kStrandPair[f.slot], f.arg);
    return m;
}

namespace detail {
inline bool strand_disjoint(int slot_a, int slot_b) {
    auto [a1, a2] = kStrandPair[slot_a];
    auto [b1, b2] = kStrandPair[slot_b];
    return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
}
} // namespace detail

namespace detail {

// Solve R_vw(a) R_uw(b) R_uv(c) = M for (a, b, c) on the 3x3 block of the
// strand triple, reading the parameters off the matrix entries. M always
// factors this way when it arose from a braid of these three strands; the
// two coherent solutions differ by reciprocating all three parameters, and
// either one reproduces M exactly.
inline std::array<Cplx, 3> solve_descending_triple(const CMatrix& m3) {
    const Cplx iu(0, 1);
    Cplx b_mid = m3(0, 2);
    Cplx a_mid = std::sqrt(b_mid * b_mid - 1.0);
    // Small a_mid makes the division ill-conditioned; treat as a branch
    // point and let the caller reject the draw.
    if (std::abs(a_mid) < 2e-2) throw map_pole_error("lyb move: parameter at a branch point");
    Cplx a_last = -m3(0, 0) / a_mid;
    Cplx b_last = -iu * m3(0, 1) / a_mid;
    Cplx a_first = -m3(2, 2) / a_mid;
    Cplx b_first = iu * m3(1, 2) / a_mid;
    // x = b(x) + a(x) recovers the argument from its entry pair.
    std::array<Cplx, 3> out = {b_first + a_first, b_mid + a_mid, b_last + a_last};
    for (const Cplx& x : out)
        if (!std::isfinite(x.real()) || std::abs(x) > 1e4 || std::abs(x) < 1e-4)
            throw map_pole_error("lyb move: argument out of range");
    return out;
}

} // namespace detail

// Apply one local Yang-Baxter rewrite to the three crossings in `slots`.
// Disjoint adjacent factors are first commuted to make the triple
// contiguous (all such swaps leave the matrix product unchanged); the
// triple is then reversed, with the new arguments solved directly from the
// triple's matrix product, which the rewrite preserves by construction.
inline void apply_lyb_move(RWord& w, const std::array<int, 3>& slots) {
    auto pos_of = [&](int slot) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i].slot == slot) return static_cast<int>(i);
        throw std::logic_error("apply_lyb_move: slot missing");
    };
    auto in_triple = [&](int slot) {
        return slot == slots[0] || slot == slots[1] || slot == slots[2];
    };
    // Push intervening factors out of the triple's span.
    bool progress = true;
    while (progress) {
        int p0 = static_cast<int>(w.size()), p2 = -1;
        for (size_t i = 0; i < w.size(); ++i)
            if (in_triple(w[i].slot)) {
                p0 = std::min(p0, static_cast<int>(i));
                p2 = std::max(p2, static_cast<int>(i));
            }
        if (p2 - p0 == 2) break;
        progress = false;
        for (int q = p0 + 1; q < p2; ++q) {
            if (in_triple(w[q].slot)) continue;
            if (detail::strand_disjoint(w[q].slot, w[q - 1].slot)) {
                std::swap(w[q], w[q - 1]);
                progress = true;
                break;
            }
            if (detail::strand_disjoint(w[q].slot, w[q + 1].slot)) {
                std::swap(w[q], w[q + 1]);
                progress = true;
                break;
            }
        }
    }
    int p0 = pos_of(slots[0]);
    int p1 = pos_of(slots[1]);
    int p2 = pos_of(slots[2]);
    int lo = std::min({p0, p1, p2}), hi = std::max({p0, p1, p2});
    if (hi - lo != 2) throw std::logic_error("apply_lyb_move: triple not contiguous");

    // Strand roles: with strands u < v < w, the pairs are (u,v), (u,w), (v,w).
    std::array<int, 4> strand_count{0, 0, 0, 0};
    for (int i = lo; i <= hi; ++i) {
        strand_count[kStrandPair[w[i].slot].first]++;
        strand_count[kStrandPair[w[i].slot].second]++;
    }
    std::array<int, 3> strands;
    int si = 0;
    for (int s = 0; s < 4; ++s)
        if (strand_count[s] == 2) strands[si++] = s;
    if (si != 3) throw std::logic_error("apply_lyb_move: not a triangle");
    auto pair_is = [&](int pos, int x, int y) {
        auto [p, q] = kStrandPair[w[pos].slot];
        return (p == x && q == y) || (p == y && q == x);
    };
    int pos_vw = -1, pos_uw = -1, pos_uv = -1;
    for (int i = lo; i <= hi; ++i) {
        if (pair_is(i, strands[1], strands[2])) pos_vw = i;
        if (pair_is(i, strands[0], strands[2])) pos_uw = i;
        if (pair_is(i, strands[0], strands[1])) pos_uv = i;
    }
    if (pos_vw < 0 || pos_uw < 0 || pos_uv < 0)
        throw std::logic_error("apply_lyb_move: triple does not cover all three pairs");

    // Product of the triple restricted to the 3x3 block on its strands.
    CMatrix m4 = CMatrix::identity(4);
    for (int i = lo; i <= hi; ++i) m4 = m4 * r_matrix(4, kStrandPair[w[i].slot], w[i].arg);
    CMatrix m3(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m3(i, j) = m4(strands[i], strands[j]);

    // Reverse the factor order and solve the new arguments from the block.
    // After reversal the pair order along the word flips, so the descending
    // solve applies directly when (vw) ends up first, and to the transpose
    // otherwise.
    std::swap(w[lo], w[hi]);
    auto slot_pair_is = [&](int slot, int x, int y) {
        auto [p, q] = kStrandPair[slot];
        return (p == x && q == y) || (p == y && q == x);
    };
    bool vw_first = slot_pair_is(w[lo].slot, strands[1], strands[2]);
    std::array<Cplx, 3> sol =
        detail::solve_descending_triple(vw_first ? m3 : m3.transpose());
    for (int i = lo; i <= hi; ++i) {
        auto [p, q] = kStrandPair[w[i].slot];
        int pmin = std::min(p, q), pmax = std::max(p, q);
        if (pmin == strands[1] && pmax == strands[2]) w[i].arg = sol[0];
        else if (pmin == strands[0] && pmax == strands[2]) w[i].arg = sol[1];
        else w[i].arg = sol[2];
    }
}

// ---- Reconstruction of the six parameters from boundary data ----

class reconstruction_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct GammaFixture {
    Multigraph graph;
    BoundarySpec boundary; // vertices only; values filled per instance
    std::array<int, 2> inner;
};

// The square {v1, v6, v5, v4} carries edges 3,4,5,6 in the cycle
// v1 -e6- v6 -e5- v5 -e4- v4 -e3- v1; edges 1 and 2 hang v2 off v5 and
// v3 off v6. Vertices are numbered v1..v6 -> 0..5, edges e1..e6 -> 0..5.
inline GammaFixture gamma2_fixture() {
    GammaFixture f;
    f.graph = Multigraph(6, {{1, 4}, {2, 5}, {3, 0}, {4, 3}, {5, 4}, {0, 5}});
    f.boundary.vertices = {0, 1, 2, 3};
    f.inner = {4, 5};
    return f;
}

// The mirrored configuration: the square carries the boundary pair
// {v2, v3} and the pendants reach v1 and v4.
inline GammaFixture gamma1_fixture() {
    GammaFixture f;
    f.graph = Multigraph(6, {{0, 4}, {3, 5}, {2, 1}, {4, 2}, {5, 4}, {1, 5}});
    f.boundary.vertices = {0, 1, 2, 3};
    f.inner = {4, 5};
    return f;
}

// The four-strand wiring diagram itself: vertices are the six crossings,
// edges the strand segments between consecutive crossings.
inline Multigraph standard_graph_fixture() {
    return Multigraph(6, {{3, 4}, {4, 5}, {1, 2}, {2, 4}, {0, 2}, {2, 3}, {0, 1}, {1, 3}});
}

// The 16 boundary values Z_{S0(A)}(Gamma2) for the reduced-weight model
// (edge weights t_i, betas 1), indexed by A = a1 + 2 a2 + 4 a3 + 8 a4.
inline std::vector<double> gamma2_boundary_values(const std::array<double, 6>& t) {
    GammaFixture fx = gamma2_fixture();
    std::vector<std::pair<double, double>> w;
    for (int e = 0; e < 6; ++e) w.push_back({t[e], 1.0});
    PottsModel<double> m(fx.graph, 2, w);
    std::vector<double> out(16);
    for (int a = 0; a < 16; ++a) {
        BoundarySpec b;
        b.vertices = fx.boundary.vertices;
        b.values = {a & 1, a >> 1 & 1, a >> 2 & 1, a >> 3 & 1};
        out[a] = boundary_partition(m, b);
    }
    return out;
}

// Recover (t1..t6) from the 16 boundary values, up to the overall scale the
// data only determines. Closed radicals give t1 and t2 (positive branch),
// the linear solve gives the square weights, and ratios finish the rest.
inline std::array<double, 6> reconstruct_from_boundary(const std::vector<double>& values,
                                                       double tol = 1e-7) {
    if (values.size() != 16) throw std::invalid_argument("reconstruct_from_boundary: need 16 values");
    double scale = 0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    if (scale <= 0) throw reconstruction_error("reconstruct_from_boundary: all-zero data");
    // The data determines the parameters only up to a common factor;
    // normalize so the tolerance thresholds below are scale-free.
    std::vector<double> val(16);
    for (int a = 0; a < 16; ++a) val[a] = values[a] / scale;
    // Spin-flip symmetry of the Ising weights pairs A with its complement.
    for (int a = 0; a < 16; ++a)
        if (std::abs(val[a] - val[15 - a]) > tol)
            throw reconstruction_error("reconstruct_from_boundary: flip symmetry violated");

    // Long-double internals: the radicals cancel several orders of magnitude
    // near the degenerate strata, and the extra mantissa keeps the formula
    // error below the input noise.
    long double a1 = val[0b0000], a2 = val[0b0010], a3 = val[0b0110], a4 = val[0b0100];
    long double b1 = val[0b0001], b2 = val[0b0011], b3 = val[0b0111], b4 = val[0b0101];

    long double den1 = 2 * (-b4 * a3 + a2 * b1);
    long double rad1 = b3 * b3 * a3 * a3 - 2 * b3 * a3 * a2 * b2 - 2 * b3 * a3 * a1 * b1 -
                       2 * b3 * a3 * b4 * a4 + a2 * a2 * b2 * b2 - 2 * a2 * b2 * a1 * b1 -
                       2 * a2 * b2 * b4 * a4 + a1 * a1 * b1 * b1 - 2 * a1 * b1 * b4 * a4 +
                       b4 * b4 * a4 * a4 + 4 * b4 * a3 * a1 * b2 + 4 * a2 * b1 * b3 * a4;
    long double den2 = 2 * (a3 * b4 - b3 * a4);
    long double rad2 = a2 * a2 * b4 * b4 - 2 * a4 * b4 * a2 * b2 - 2 * a2 * b4 * b3 * a1 -
                       2 * a2 * b1 * a3 * b4 + b2 * b2 * a4 * a4 - 2 * b3 * a4 * a1 * b2 -
                       2 * b2 * a4 * a3 * b1 + b3 * b3 * a1 * a1 - 2 * a3 * b3 * a1 * b1 +
                       a3 * a3 * b1 * b1 + 4 * a3 * b4 * a1 * b2 + 4 * a2 * b1 * b3 * a4;
    // The recovered roots carry an error of roughly eps/(|den| sqrt(rad)) in
    // the normalized units, so data too close to a degenerate stratum cannot
    // reach the advertised precision and is rejected.
    constexpr long double kDenGuard = 5e-3L;
    constexpr long double kRadGuard = 2.5e-5L;
    if (std::abs(static_cast<double>(den1)) < kDenGuard ||
        std::abs(static_cast<double>(den2)) < kDenGuard)
        throw reconstruction_error("reconstruct_from_boundary: degenerate radical denominator");
    if (rad1 < kRadGuard || rad2 < kRadGuard)
        throw reconstruction_error("reconstruct_from_boundary: radicand too close to a branch point");
    // Each quadratic's two roots are the gauge pair {t, 1/t}: relabeling the
    // spins of an inner vertex reciprocates the weights of its three edges
    // and leaves every boundary value proportionally unchanged, so the data
    // determines the parameters only up to those flips. The representative
    // with t1 >= 1 and t2 >= 1 is returned.
    auto gauge_root = [&](long double p, long double rad, long double den) {
        long double root = std::sqrt(rad);
        long double rplus = (p + root) / den;
        long double rminus = (p - root) / den;
        return std::abs(static_cast<double>(rplus)) >= std::abs(static_cast<double>(rminus))
                   ? rplus
                   : rminus;
    };
    long double t1 = gauge_root(-b3 * a3 + a2 * b2 + a1 * b1 - b4 * a4, rad1, den1);
    long double t2 = gauge_root(a2 * b4 - b2 * a4 - b3 * a1 + a3 * b1, rad2, den2);

    long double d = -t2 * t2 + 1 + t1 * t1 * t2 * t2 - t1 * t1; // (t1^2-1)(t2^2-1)
    if (std::abs(static_cast<double>(d)) < tol)
        throw reconstruction_error("reconstruct_from_boundary: degenerate denominator");

    long double y1 = (-t2 * b1 + t1 * t2 * b2 + b4 - t1 * b3) / d;
    long double z1 = (t1 * t2 * b1 - t2 * b2 + b3 - t1 * b4) / d;
    long double x1 = (t2 * t1 * b4 - t1 * b1 - t2 * b3 + b2) / d;
    long double v1 = (b1 + t1 * t2 * b3 - t2 * b4 - t1 * b2) / d;
    long double y = (-t2 * a1 + t1 * t2 * a2 + a4 - t1 * a3) / d;
    long double z = (t1 * t2 * a1 - t2 * a2 + a3 - t1 * a4) / d;
    long double x = (t2 * t1 * a4 - t1 * a1 - t2 * a3 + a2) / d;
    long double v = (a1 + t1 * t2 * a3 - t2 * a4 - t1 * a2) / d;

    // Cross-ratio consistency of the unused equations.
    if (std::abs(static_cast<double>(z1 * y - v * x1)) > tol ||
        std::abs(static_cast<double>(v1 * x - v * x1)) > tol)
        throw reconstruction_error("reconstruct_from_boundary: inconsistent boundary data");

    long double t3_sq = v * y * x / (z * y1 * y1);
    if (std::abs(static_cast<double>(z * y1 * y1)) < tol || t3_sq <= 0)
        throw reconstruction_error("reconstruct_from_boundary: degenerate square weights");
    long double t3 = std::sqrt(t3_sq);
    long double t5 = v / (t3 * y1);
    long double t6 = y / (t3 * y1);
    long double t4 = x / (t3 * y1);
    std::array<double, 6> rec = {static_cast<double>(t1), static_cast<double>(t2),
                                 static_cast<double>(t3), static_cast<double>(t4),
                                 static_cast<double>(t5), static_cast<double>(t6)};

    // Forward check: the recovered parameters must reproduce the input data
    // up to its overall scale, or the data was not a genuine boundary table.
    std::vector<double> predicted = gamma2_boundary_values(rec);
    double pscale = 0;
    for (double p : predicted) pscale = std::max(pscale, std::abs(p));
    for (int a = 0; a < 16; ++a)
        if (std::abs(predicted[a] / pscale - val[a]) > std::max(tol, 1e4 * tol * std::abs(val[a])))
            throw reconstruction_error("reconstruct_from_boundary: inconsistent boundary data");
    return rec;
}

} // namespace pottskit

#endif
