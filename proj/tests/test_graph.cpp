#include "doctest.h"

#include "pottskit/graph.hpp"

#include <set>

using namespace pottskit;

namespace {
Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
} // namespace

TEST_CASE("stats of small graphs") {
    GraphStats s = k3().stats();
    CHECK(s.v == 3);
    CHECK(s.e == 3);
    CHECK(s.k == 1);
    CHECK(s.r == 2);
    CHECK(s.c == 1);

    GraphStats loop = Multigraph(1, {{0, 0}}).stats();
    CHECK(loop.v == 1);
    CHECK(loop.e == 1);
    CHECK(loop.k == 1);
    CHECK(loop.r == 0);
    CHECK(loop.c == 1);

    GraphStats two = Multigraph(4, {{0, 1}, {2, 3}}).stats();
    CHECK(two.v == 4);
    CHECK(two.e == 2);
    CHECK(two.k == 2);
    CHECK(two.r == 2);
    CHECK(two.c == 0);
}

TEST_CASE("deletion") {
    Multigraph g = k3().delete_edge(0);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.component_count() == 1); // path on 3 vertices
    CHECK(g.isomorphic_to(Multigraph(3, {{0, 1}, {1, 2}})));

    Multigraph iso = Multigraph(1, {{0, 0}}).delete_edge(0);
    CHECK(iso.vertex_count() == 1);
    CHECK(iso.edge_count() == 0);

    Multigraph dbl(2, {{0, 1}, {0, 1}});
    CHECK(dbl.delete_edge(1).isomorphic_to(Multigraph(2, {{0, 1}})));
    CHECK_THROWS_AS(k3().delete_edge(7), std::out_of_range);
}

TEST_CASE("contraction") {
    Multigraph g = k3().contract_edge(0);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.isomorphic_to(Multigraph(2, {{0, 1}, {0, 1}})));

    Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(path.contract_edge(0).isomorphic_to(Multigraph(2, {{0, 1}})));

    Multigraph dbl(2, {{0, 1}, {0, 1}});
    Multigraph l = dbl.contract_edge(0);
    CHECK(l.vertex_count() == 1);
    REQUIRE(l.edge_count() == 1);
    CHECK(l.edge(0).is_loop());

    CHECK_THROWS_AS(Multigraph(1, {{0, 0}}).contract_edge(0), std::invalid_argument);
}

TEST_CASE("bridges") {
    CHECK_FALSE(k3().is_bridge(0));
    Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(path.is_bridge(0));
    CHECK(path.is_bridge(1));
    CHECK_FALSE(Multigraph(1, {{0, 0}}).is_bridge(0));
}

TEST_CASE("spanning subgraphs enumerate every edge subset once") {
    Multigraph g = k3();
    auto subs = g.spanning_subgraphs();
    CHECK(subs.size() == 8);
    for (const auto& s : subs) CHECK(s.vertex_count() == 3);
    CHECK(Multigraph(0).spanning_subgraphs().size() == 1);
    CHECK(Multigraph(2, {{0, 1}}).spanning_subgraphs().size() == 2);
    // rank + corank = |A| on every subset
    for (uint64_t mask = 0; mask < 8; ++mask) {
        GraphStats s = g.spanning_subgraph(mask).stats();
        CHECK(s.r + s.c == s.e);
        CHECK(s.r >= 0);
        CHECK(s.c >= 0);
    }
}

TEST_CASE("vertex induced subgraphs") {
    CHECK(k3().vertex_induced({0, 1}).isomorphic_to(Multigraph(2, {{0, 1}})));
    Multigraph empty = k3().vertex_induced({});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);
    CHECK(k3().vertex_induced({0, 1, 2}).isomorphic_to(k3()));
    CHECK_THROWS_AS(k3().vertex_induced({0, 0}), std::invalid_argument);
}

TEST_CASE("glue") {
    Multigraph bowtie = k3().glue(k3(), {{0, 0}});
    CHECK(bowtie.vertex_count() == 5);
    CHECK(bowtie.edge_count() == 6);

    Multigraph e1(2, {{0, 1}});
    Multigraph dbl = e1.glue(e1, {{0, 0}, {1, 1}});
    CHECK(dbl.isomorphic_to(Multigraph(2, {{0, 1}, {0, 1}})));

    Multigraph disjoint = e1.glue(e1, {});
    CHECK(disjoint.vertex_count() == 4);
    CHECK(disjoint.component_count() == 2);
    CHECK_THROWS_AS(e1.glue(e1, {{0, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("contraction invariants on every non-loop edge") {
    std::vector<Multigraph> gs = {
        k3(), Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}),
        Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}})};
    for (const auto& g : gs) {
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).is_loop()) continue;
            Multigraph c = g.contract_edge(e);
            CHECK(c.vertex_count() == g.vertex_count() - 1);
            CHECK(c.edge_count() == g.edge_count() - 1);
            CHECK(g.is_bridge(e) ==
                  (g.delete_edge(e).component_count() == g.component_count() + 1));
        }
    }
}

TEST_CASE("canonical encoding separates and identifies") {
    // Same graph under relabeling
    Multigraph a(4, {{0, 1}, {1, 2}, {2, 3}});
    Multigraph b(4, {{3, 2}, {0, 2}, {0, 1}});
    CHECK(a.isomorphic_to(b));
    // Loop vs parallel edge have equal degree sequences but differ
    Multigraph loop2(2, {{0, 0}, {0, 1}, {1, 1}});
    Multigraph par(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK_FALSE(loop2.isomorphic_to(par));
    // Distinct trees on 6 vertices with the same degree multiset
    Multigraph t1(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    Multigraph t2(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    CHECK_FALSE(t1.isomorphic_to(t2));
}
