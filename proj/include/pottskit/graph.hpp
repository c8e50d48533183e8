#ifndef POTTSKIT_GRAPH_HPP
#define POTTSKIT_GRAPH_HPP

// Multigraph data model: loops and parallel edges allowed, dense vertex ids
// 0..v-1, ordered edge list whose position defines the edge id. All mutations
// return fresh graphs; nothing here is stateful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pottskit {

struct Edge {
    int u;
    int v;
    bool is_loop() const { return u == v; }
};

struct GraphStats {
    int v = 0; // vertices
    int e = 0; // edges
    int k = 0; // connected components
    int r = 0; // rank v - k
    int c = 0; // corank e - r
};

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertices) : n_(vertices) {
        if (vertices < 0) throw std::invalid_argument("Multigraph: negative vertex count");
    }
    Multigraph(int vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
        for (const Edge& e : edges_) check_vertex(e.u), check_vertex(e.v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const {
        check_edge(id);
        return edges_[id];
    }

    int add_vertex() { return n_++; }
    int add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        edges_.push_back({u, v});
        return edge_count() - 1;
    }

    GraphStats stats() const {
        GraphStats s;
        s.v = n_;
        s.e = edge_count();
        s.k = component_count();
        s.r = s.v - s.k;
        s.c = s.e - s.r;
        return s;
    }

    int component_count() const {
        Dsu dsu(n_);
        for (const Edge& e : edges_) dsu.unite(e.u, e.v);
        return dsu.components();
    }

    // Component label per vertex, labels dense in discovery order.
    std::vector<int> component_labels() const {
        Dsu dsu(n_);
        for (const Edge& e : edges_) dsu.unite(e.u, e.v);
        std::vector<int> label(n_, -1);
        int next = 0;
        for (int v = 0; v < n_; ++v) {
            int root = dsu.find(v);
            if (label[root] < 0) label[root] = next++;
            label[v] = label[root];
        }
        return label;
    }

    Multigraph delete_edge(int id) const {
        check_edge(id);
        Multigraph g(n_);
        g.edges_.reserve(edges_.size() - 1);
        for (int i = 0; i < edge_count(); ++i)
            if (i != id) g.edges_.push_back(edges_[i]);
        return g;
    }

    // Contract a non-loop edge; the smaller endpoint id survives and vertex
    // ids above the removed one shift down by one.
    Multigraph contract_edge(int id) const {
        check_edge(id);
        const Edge& e = edges_[id];
        if (e.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
        int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
        Multigraph g(n_ - 1);
        g.edges_.reserve(edges_.size() - 1);
        auto remap = [&](int w) {
            if (w == gone) return keep;
            return w > gone ? w - 1 : w;
        };
        for (int i = 0; i < edge_count(); ++i) {
            if (i == id) continue;
            g.edges_.push_back({remap(edges_[i].u), remap(edges_[i].v)});
        }
        return g;
    }

    // Contract every edge in `mask` at once: components of (V, mask) merge to
    // single vertices, edges in the mask vanish, the rest keep their order.
    Multigraph contract_edge_set(uint64_t mask) const {
        Dsu dsu(n_);
        for (int i = 0; i < edge_count(); ++i)
            if (mask >> i & 1) dsu.unite(edges_[i].u, edges_[i].v);
        std::vector<int> label(n_, -1);
        int next = 0;
        for (int v = 0; v < n_; ++v) {
            int root = dsu.find(v);
            if (label[root] < 0) label[root] = next++;
            label[v] = label[root];
        }
        Multigraph g(next);
        for (int i = 0; i < edge_count(); ++i) {
            if (mask >> i & 1) continue;
            g.edges_.push_back({label[edges_[i].u], label[edges_[i].v]});
        }
        return g;
    }

    bool is_bridge(int id) const {
        check_edge(id);
        if (edges_[id].is_loop()) return false;
        return delete_edge(id).component_count() == component_count() + 1;
    }

    // Spanning subgraph on the edge subset encoded by `mask` (bit i = edge i).
    Multigraph spanning_subgraph(uint64_t mask) const {
        Multigraph g(n_);
        for (int i = 0; i < edge_count(); ++i)
            if (mask >> i & 1) g.edges_.push_back(edges_[i]);
        return g;
    }

    int spanning_subgraph_components(uint64_t mask) const {
        Dsu dsu(n_);
        for (int i = 0; i < edge_count(); ++i)
            if (mask >> i & 1) dsu.unite(edges_[i].u, edges_[i].v);
        return dsu.components();
    }

    // All 2^e spanning subgraphs in ascending bitmask order.
    std::vector<Multigraph> spanning_subgraphs() const {
        if (edge_count() >= 63) throw std::length_error("spanning_subgraphs: too many edges");
        std::vector<Multigraph> out;
        uint64_t total = uint64_t{1} << edge_count();
        out.reserve(total);
        for (uint64_t mask = 0; mask < total; ++mask) out.push_back(spanning_subgraph(mask));
        return out;
    }

    // Restriction to a vertex subset: the listed vertices and every edge with
    // both endpoints inside. New ids follow the order of `verts`.
    Multigraph vertex_induced(const std::vector<int>& verts) const {
        std::vector<int> remap(n_, -1);
        for (size_t i = 0; i < verts.size(); ++i) {
            check_vertex(verts[i]);
            if (remap[verts[i]] >= 0) throw std::invalid_argument("vertex_induced: duplicate vertex");
            remap[verts[i]] = static_cast<int>(i);
        }
        Multigraph g(static_cast<int>(verts.size()));
        for (const Edge& e : edges_)
            if (remap[e.u] >= 0 && remap[e.v] >= 0) g.edges_.push_back({remap[e.u], remap[e.v]});
        return g;
    }

    Multigraph vertex_induced_mask(uint64_t vmask) const {
        std::vector<int> verts;
        for (int v = 0; v < n_; ++v)
            if (vmask >> v & 1) verts.push_back(v);
        return vertex_induced(verts);
    }

    // Glue another graph onto this one, identifying other's vertex
    // `ident[i].second` with this graph's `ident[i].first`. Edge ids: all of
    // this graph's edges first, then the other's in order.
    Multigraph glue(const Multigraph& other,
                    const std::vector<std::pair<int, int>>& ident) const {
        std::vector<int> remap(other.n_, -1);
        std::vector<char> used(n_, 0);
        for (const auto& [mine, theirs] : ident) {
            check_vertex(mine);
            other.check_vertex(theirs);
            if (remap[theirs] >= 0 || used[mine])
                throw std::invalid_argument("glue: identification is not injective");
            remap[theirs] = mine;
            used[mine] = 1;
        }
        int next = n_;
        for (int v = 0; v < other.n_; ++v)
            if (remap[v] < 0) remap[v] = next++;
        Multigraph g(next);
        g.edges_ = edges_;
        for (const Edge& e : other.edges_) g.edges_.push_back({remap[e.u], remap[e.v]});
        return g;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n_, 0);
        for (const Edge& e : edges_) {
            deg[e.u]++;
            deg[e.v]++; // a loop counts twice at its vertex
        }
        return deg;
    }

    // Canonical byte encoding: the lexicographically minimal column-wise
    // adjacency-count prefix over all vertex relabelings, found by
    // backtracking with prefix dominance pruning. Exact: equal encodings
    // mean isomorphic multigraphs and conversely.
    std::string canonical_encoding() const {
        if (n_ > 16) throw std::length_error("canonical_encoding: graph too large");
        std::vector<uint8_t> adj(static_cast<size_t>(n_) * n_, 0);
        for (const Edge& e : edges_) {
            if (e.is_loop()) {
                adj[static_cast<size_t>(e.u) * n_ + e.u]++;
            } else {
                adj[static_cast<size_t>(e.u) * n_ + e.v]++;
                adj[static_cast<size_t>(e.v) * n_ + e.u]++;
            }
        }
        size_t enc_len = static_cast<size_t>(n_) * (n_ + 1) / 2;
        std::vector<uint8_t> best(enc_len, 0);
        bool have_best = false;
        std::vector<uint8_t> cur(enc_len, 0);
        std::vector<int> chosen; // chosen[k] = old vertex given new id k
        chosen.reserve(n_);
        std::vector<char> used(n_, 0);
        canon_search(adj, chosen, used, cur, 0, best, have_best);
        std::string out;
        out.reserve(enc_len + 2);
        out.push_back(static_cast<char>(n_));
        out.push_back(static_cast<char>(edge_count()));
        for (uint8_t b : best) out.push_back(static_cast<char>(b));
        return out;
    }

    bool isomorphic_to(const Multigraph& o) const {
        if (n_ != o.n_ || edge_count() != o.edge_count()) return false;
        return canonical_encoding() == o.canonical_encoding();
    }

private:
    struct Dsu {
        explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
        mutable std::vector<int> parent;
        int find(int x) const {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        }
        void unite(int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
        int components() const {
            int k = 0;
            for (int i = 0; i < static_cast<int>(parent.size()); ++i)
                if (find(i) == i) k++;
            return k;
        }
    };

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Multigraph: unknown vertex " + std::to_string(v));
    }
    void check_edge(int id) const {
        if (id < 0 || id >= edge_count())
            throw std::out_of_range("Multigraph: unknown edge id " + std::to_string(id));
    }

    // Column k of the encoding: counts to the k previously chosen vertices,
    // then the loop count of the candidate. A prefix already above the
    // current best can never recover and is cut.
    void canon_search(const std::vector<uint8_t>& adj, std::vector<int>& chosen,
                      std::vector<char>& used, std::vector<uint8_t>& cur, size_t offset,
                      std::vector<uint8_t>& best, bool& have_best) const {
        int k = static_cast<int>(chosen.size());
        if (k == n_) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int w = 0; w < n_; ++w) {
            if (used[w]) continue;
            size_t pos = offset;
            for (int i = 0; i <= k; ++i) {
                cur[pos++] = (i < k) ? adj[static_cast<size_t>(chosen[i]) * n_ + w]
                                     : adj[static_cast<size_t>(w) * n_ + w];
            }
            if (have_best &&
                std::lexicographical_compare(best.begin(), best.begin() + pos,
                                             cur.begin(), cur.begin() + pos))
                continue;
            chosen.push_back(w);
            used[w] = 1;
            canon_search(adj, chosen, used, cur, pos, best, have_best);
            used[w] = 0;
            chosen.pop_back();
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
};

} // namespace pottskit

#endif
