#ifndef POTTSKIT_GRAPH_GEN_HPP
#define POTTSKIT_GRAPH_GEN_HPP

// Deterministic corpus of non-isomorphic connected multigraphs (loops and
// parallel edges included, no isolated vertices) and the named fixtures the
// verification suites range over.

#include "pottskit/graph.hpp"
#include "pottskit/tetrahedron.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace pottskit {

namespace detail {

inline void corpus_rec(int v, int e_left, int min_pair, std::vector<Edge>& acc,
                       const std::vector<Edge>& pairs, std::vector<Multigraph>& out) {
    if (e_left == 0) {
        Multigraph g(v, acc);
        if (g.component_count() != 1) return;
        out.push_back(std::move(g));
        return;
    }
    for (int p = min_pair; p < static_cast<int>(pairs.size()); ++p) {
        acc.push_back(pairs[p]);
        corpus_rec(v, e_left - 1, p, acc, pairs, out);
        acc.pop_back();
    }
}

} // namespace detail

// All connected multigraphs with exactly `edges` edges, up to isomorphism,
// sorted by (vertex count, canonical encoding). Deterministic across runs.
inline std::vector<Multigraph> connected_multigraphs(int edges) {
    if (edges < 1 || edges > 8) throw std::invalid_argument("connected_multigraphs: 1..8 edges");
    std::vector<Multigraph> result;
    std::set<std::string> seen;
    for (int v = 1; v <= edges + 1; ++v) {
        // candidate edges: all unordered pairs including loops
        std::vector<Edge> pairs;
        for (int a = 0; a < v; ++a)
            for (int b = a; b < v; ++b) pairs.push_back({a, b});
        std::vector<Multigraph> labeled;
        std::vector<Edge> acc;
        detail::corpus_rec(v, edges, 0, acc, pairs, labeled);
        for (Multigraph& g : labeled) {
            std::string key = g.canonical_encoding();
            if (seen.insert(std::move(key)).second) result.push_back(std::move(g));
        }
    }
    std::sort(result.begin(), result.end(), [](const Multigraph& a, const Multigraph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.canonical_encoding() < b.canonical_encoding();
    });
    return result;
}

// Corpus of all connected multigraphs with 1..max_edges edges. Cached: the
// generation is deterministic, so sharing one instance is safe.
inline const std::vector<Multigraph>& corpus_up_to(int max_edges) {
    static std::mutex mu;
    static std::map<int, std::vector<Multigraph>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(max_edges);
    if (it != cache.end()) return it->second;
    std::vector<Multigraph> all;
    for (int e = 1; e <= max_edges; ++e) {
        std::vector<Multigraph> part = connected_multigraphs(e);
        all.insert(all.end(), part.begin(), part.end());
    }
    return cache.emplace(max_edges, std::move(all)).first->second;
}

// Edge-id triple forming a triangle (three distinct vertices), if any.
inline bool find_triangle(const Multigraph& g, std::array<int, 3>& out) {
    int e = g.edge_count();
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            for (int k = j + 1; k < e; ++k) {
                std::set<int> verts;
                bool loop = false;
                for (int id : {i, j, k}) {
                    const Edge& ed = g.edge(id);
                    if (ed.is_loop()) loop = true;
                    verts.insert(ed.u);
                    verts.insert(ed.v);
                }
                if (loop || verts.size() != 3) continue;
                // each vertex must have degree 2 within the triple
                std::map<int, int> deg;
                for (int id : {i, j, k}) {
                    deg[g.edge(id).u]++;
                    deg[g.edge(id).v]++;
                }
                bool ok = true;
                for (const auto& [vx, d] : deg)
                    if (d != 2) ok = false;
                if (ok) {
                    out = {i, j, k};
                    return true;
                }
            }
    return false;
}

struct NamedFixture {
    std::string name;
    Multigraph graph;
};

// The fixtures the suites and the CLI expose by name.
inline std::vector<NamedFixture> named_fixtures() {
    std::vector<NamedFixture> out;
    out.push_back({"k3", Multigraph(3, {{1, 2}, {0, 2}, {0, 1}})});
    out.push_back({"star", Multigraph(4, {{3, 0}, {3, 1}, {3, 2}})});
    out.push_back({"gamma1", gamma1_fixture().graph});
    out.push_back({"gamma2", gamma2_fixture().graph});
    out.push_back({"standard", standard_graph_fixture()});
    out.push_back({"triangle-pendant", Multigraph(4, {{1, 2}, {0, 2}, {0, 1}, {0, 3}})});
    out.push_back({"star-pendant", Multigraph(5, {{3, 0}, {3, 1}, {3, 2}, {0, 4}})});
    return out;
}

} // namespace pottskit

#endif
