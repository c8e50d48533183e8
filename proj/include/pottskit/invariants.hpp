#ifndef POTTSKIT_INVARIANTS_HPP
#define POTTSKIT_INVARIANTS_HPP

// Tutte polynomial by deletion-contraction with a canonical-form memo table,
// plus the closed-form bridges to the partition function and to the
// chromatic, flow, complete-flow and bad-coloring polynomials.

#include "pottskit/graph.hpp"
#include "pottskit/poly.hpp"
#include "pottskit/potts.hpp"

#include <bit>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace pottskit {

// Shared-read / exclusive-write cache keyed on canonical graph encodings.
class TutteCache {
public:
    bool lookup(const std::string& key, BiPoly& out) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const BiPoly& value) {
        std::unique_lock lock(mu_);
        map_.emplace(key, value);
    }
    size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, BiPoly> map_;
};

inline TutteCache& global_tutte_cache() {
    static TutteCache cache;
    return cache;
}

namespace detail {

// Edge ids grouped into biconnected blocks (loops and bridges must already
// be gone). Standard low-link DFS with an edge stack.
inline std::vector<std::vector<int>> biconnected_blocks(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> inc(n); // vertex -> (other, edge id)
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        inc[ed.u].push_back({ed.v, e});
        inc[ed.v].push_back({ed.u, e});
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> edge_seen(g.edge_count(), 0);
    std::vector<int> estack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        size_t it = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.it < inc[f.v].size()) {
                auto [w, eid] = inc[f.v][f.it++];
                if (eid == f.parent_edge) continue;
                if (!edge_seen[eid]) {
                    edge_seen[eid] = 1;
                    estack.push_back(eid);
                }
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, eid});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int child = f.v;
                int via = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[child]);
                    if (low[child] >= disc[parent]) {
                        std::vector<int> block;
                        while (!estack.empty()) {
                            int eid = estack.back();
                            estack.pop_back();
                            block.push_back(eid);
                            if (eid == via) break;
                        }
                        if (!block.empty()) blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

inline BiPoly tutte_reduce(const Multigraph& g, TutteCache& cache);

// Deletion-contraction on a loopless bridgeless biconnected block.
inline BiPoly tutte_block(const Multigraph& block, TutteCache& cache) {
    if (block.edge_count() == 0) return BiPoly(Rational(1));
    std::string key = block.canonical_encoding();
    BiPoly hit;
    if (cache.lookup(key, hit)) return hit;
    BiPoly del = tutte_reduce(block.delete_edge(0), cache);
    BiPoly con = tutte_reduce(block.contract_edge(0), cache);
    BiPoly result = del + con;
    cache.store(key, result);
    return result;
}

// Factor out loops, bridges, components and one-point joins, then recurse.
inline BiPoly tutte_reduce(const Multigraph& g, TutteCache& cache) {
    BiPoly acc(Rational(1));
    Multigraph cur = g;
    // Loops contribute y each, bridges x each (bridge contraction).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < cur.edge_count(); ++e) {
            if (cur.edge(e).is_loop()) {
                acc = acc * BiPoly::var_y();
                cur = cur.delete_edge(e);
                changed = true;
                break;
            }
            if (cur.is_bridge(e)) {
                acc = acc * BiPoly::var_x();
                cur = cur.contract_edge(e);
                changed = true;
                break;
            }
        }
    }
    if (cur.edge_count() == 0) return acc;
    // What remains is loopless and bridgeless; factor into biconnected
    // blocks (this covers both disjoint unions and one-point joins).
    for (const auto& block_edges : biconnected_blocks(cur)) {
        uint64_t mask = 0;
        for (int e : block_edges) mask |= uint64_t{1} << e;
        Multigraph sub = cur.spanning_subgraph(mask);
        // Drop vertices outside the block so canonical keys collide properly.
        std::vector<int> verts;
        std::vector<char> in_block(cur.vertex_count(), 0);
        for (int e : block_edges) {
            in_block[cur.edge(e).u] = 1;
            in_block[cur.edge(e).v] = 1;
        }
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (in_block[v]) verts.push_back(v);
        acc = acc * tutte_block(sub.vertex_induced(verts), cache);
    }
    return acc;
}

} // namespace detail

struct TuttePoly {
    BiPoly value;
};

inline TuttePoly tutte(const Multigraph& g, TutteCache& cache = global_tutte_cache()) {
    return {detail::tutte_reduce(g, cache)};
}

// Z_n(G) for the isotropic model from the Tutte polynomial:
// n^k beta^c (alpha-beta)^r T((alpha+(n-1)beta)/(alpha-beta), alpha/beta).
inline Rational z_from_tutte(const Multigraph& g, int n, const Rational& alpha,
                             const Rational& beta, TutteCache& cache = global_tutte_cache()) {
    if (alpha == beta) throw std::domain_error("z_from_tutte: alpha = beta excluded");
    if (beta.is_zero()) throw std::domain_error("z_from_tutte: beta = 0 excluded");
    GraphStats s = g.stats();
    BiPoly t = tutte(g, cache).value;
    Rational x = (alpha + Rational(n - 1) * beta) / (alpha - beta);
    Rational y = alpha / beta;
    return Rational(n).pow(s.k) * beta.pow(s.c) * (alpha - beta).pow(s.r) * t.evaluate(x, y);
}

// Chromatic polynomial (-1)^r n^k T(1-n, 0), as an exact polynomial in n.
inline UniPoly chromatic(const Multigraph& g, TutteCache& cache = global_tutte_cache()) {
    GraphStats s = g.stats();
    BiPoly t = tutte(g, cache).value;
    UniPoly one_minus_n(std::vector<Rational>{Rational(1), Rational(-1)});
    UniPoly body = t.substitute(one_minus_n, UniPoly());
    Rational sign = (s.r % 2 == 0) ? Rational(1) : Rational(-1);
    return UniPoly::monomial(s.k, sign) * body;
}

// Flow polynomial (-1)^{e+v+k} T(0, 1-n); independent of edge orientation.
inline UniPoly flow(const Multigraph& g, TutteCache& cache = global_tutte_cache()) {
    GraphStats s = g.stats();
    BiPoly t = tutte(g, cache).value;
    UniPoly one_minus_n(std::vector<Rational>{Rational(1), Rational(-1)});
    UniPoly body = t.substitute(UniPoly(), one_minus_n);
    Rational sign = ((s.e + s.v + s.k) % 2 == 0) ? Rational(1) : Rational(-1);
    return UniPoly(sign) * body;
}

// Complete flow polynomial: the monomial n^{e-v+k} counting all Z_n-flows.
inline UniPoly complete_flow(const Multigraph& g) {
    GraphStats s = g.stats();
    return UniPoly::monomial(s.e - s.v + s.k, Rational(1));
}

namespace detail {
inline void flow_budget(int n, int e, uint64_t budget) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= static_cast<uint64_t>(n);
        if (r > budget) throw budget_error("flow_count_oracle", r);
    }
}
} // namespace detail

// Count Z_n edge functions with conservation at every vertex, nowhere-zero
// if requested. Orientation is fixed deterministically: the smaller vertex
// id is the tail; an optional flip mask reverses chosen edges (the count
// must not depend on it).
inline long flow_count_oracle(const Multigraph& g, int n, bool nowhere_zero,
                              const std::vector<bool>* flipped = nullptr,
                              uint64_t budget = kDefaultStateBudget) {
    int e = g.edge_count();
    detail::flow_budget(n, e, budget);
    int v = g.vertex_count();
    std::vector<int> f(e, nowhere_zero ? 1 : 0);
    int lo = nowhere_zero ? 1 : 0;
    if (nowhere_zero && n == 1 && e > 0) return 0; // no nonzero values exist
    long count = 0;
    while (true) {
        std::vector<int> net(v, 0);
        for (int i = 0; i < e; ++i) {
            const Edge& ed = g.edge(i);
            if (ed.is_loop()) continue;
            int tail = std::min(ed.u, ed.v), head = std::max(ed.u, ed.v);
            if (flipped && (*flipped)[i]) std::swap(tail, head);
            net[head] += f[i];
            net[tail] -= f[i];
        }
        bool ok = true;
        for (int i = 0; i < v && ok; ++i)
            if (net[i] % n != 0) ok = false;
        if (ok) count++;
        int i = 0;
        while (i < e && ++f[i] == n) f[i++] = lo;
        if (i == e) break;
        if (e == 0) break;
    }
    return count;
}

// Bad coloring polynomial B(n, t) via the random-cluster expansion:
// sum over edge subsets of (t-1)^{|A|} n^{k(A)}. BiPoly vars are (x, y) = (n, t).
inline BiPoly bad_coloring(const Multigraph& g) {
    int e = g.edge_count();
    if (e >= 30) throw budget_error("bad_coloring", uint64_t{1} << e);
    BiPoly t_minus_1 = BiPoly::var_y() - BiPoly(Rational(1));
    std::vector<BiPoly> pw(e + 1);
    pw[0] = BiPoly(Rational(1));
    for (int i = 1; i <= e; ++i) pw[i] = pw[i - 1] * t_minus_1;
    BiPoly acc;
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
        int ec = std::popcount(mask);
        int k = g.spanning_subgraph_components(mask);
        acc += pw[ec] * BiPoly::monomial(k, 0, Rational(1));
    }
    return acc;
}

// T_G(x,y) - sum_A T_{(V,A)}(0,y) T_{G/A}(x,0) over all edge subsets;
// identically zero.
inline BiPoly verify_convolution_formula(const Multigraph& g,
                                         TutteCache& cache = global_tutte_cache()) {
    int e = g.edge_count();
    if (e >= 24) throw budget_error("verify_convolution_formula", uint64_t{1} << e);
    BiPoly sum;
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
        BiPoly left = tutte(g.spanning_subgraph(mask), cache).value.substitute_x(Rational(0));
        BiPoly right = tutte(g.contract_edge_set(mask), cache).value.substitute_y(Rational(0));
        sum += left * right;
    }
    return tutte(g, cache).value - sum;
}

} // namespace pottskit

#endif
