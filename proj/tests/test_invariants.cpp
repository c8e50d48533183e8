#include "doctest.h"

#include "pottskit/graph_gen.hpp"
#include "pottskit/invariants.hpp"

#include <random>

using namespace pottskit;

namespace {
Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Direct proper-coloring count, independent of any Tutte machinery.
long coloring_oracle(const Multigraph& g, int n) {
    int v = g.vertex_count();
    std::vector<int> c(v, 0);
    long count = 0;
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges())
            if (c[e.u] == c[e.v]) {
                proper = false;
                break;
            }
        if (proper) count++;
        int i = 0;
        while (i < v && ++c[i] == n) c[i++] = 0;
        if (i == v) break;
        if (v == 0) break;
    }
    return count;
}

std::vector<Multigraph> small_corpus() {
    return {
        k3(),
        Multigraph(2, {{0, 1}}),
        Multigraph(1, {{0, 0}}),
        Multigraph(2, {{0, 1}, {0, 1}}),
        Multigraph(3, {{0, 1}, {1, 2}}),
        Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
        Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
        Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}),
        Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 1}, {0, 0}}),
        Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}),
    };
}
} // namespace

TEST_CASE("tutte of the basic graphs") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK(tutte(k3()).value == x * x + x + y);
    CHECK(tutte(Multigraph(2, {{0, 1}})).value == x);
    CHECK(tutte(Multigraph(1, {{0, 0}})).value == y);
    CHECK(tutte(Multigraph(0)).value == BiPoly(Rational(1)));
    // double edge: x + y
    CHECK(tutte(Multigraph(2, {{0, 1}, {0, 1}})).value == x + y);
    // T(1,1) counts spanning trees on connected graphs
    Multigraph wheel(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    Rational trees = tutte(wheel).value.evaluate(Rational(1), Rational(1));
    CHECK(trees == Rational(8)); // 4-cycle with a chord
}

TEST_CASE("tutte is multiplicative over unions and one-point joins") {
    Multigraph bowtie = k3().glue(k3(), {{0, 0}});
    CHECK(tutte(bowtie).value == tutte(k3()).value * tutte(k3()).value);
    Multigraph du = k3().glue(Multigraph(2, {{0, 1}, {0, 1}}), {});
    CHECK(tutte(du).value == tutte(k3()).value * tutte(Multigraph(2, {{0, 1}, {0, 1}})).value);
}

TEST_CASE("z_from_tutte equals enumeration") {
    CHECK(z_from_tutte(k3(), 2, Rational(3), Rational(1)) == Rational(72));
    // single edge: n equal states weigh alpha, n(n-1) unequal weigh beta
    for (int n : {2, 3, 5}) {
        Rational a(7, 2), b(1, 3);
        CHECK(z_from_tutte(Multigraph(2, {{0, 1}}), n, a, b) ==
              Rational(n) * (a + Rational(n - 1) * b));
        CHECK(z_from_tutte(Multigraph(1, {{0, 0}}), n, a, b) == Rational(n) * a);
    }
    std::mt19937_64 rng(71);
    for (const auto& g : small_corpus()) {
        for (int n : {2, 3, 4, 5}) {
            for (int trial = 0; trial < 5; ++trial) {
                Rational a(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
                Rational b(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 1);
                if (a == b) a += Rational(1);
                auto m = RationalModel::isotropic(g, n, a, b);
                CHECK(z_from_tutte(g, n, a, b) == partition_enumerate(m));
            }
        }
    }
    CHECK_THROWS_AS(z_from_tutte(k3(), 2, Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("chromatic polynomial against the coloring oracle") {
    UniPoly n = UniPoly::variable();
    CHECK(chromatic(k3()) == n * (n - UniPoly(Rational(1))) * (n - UniPoly(Rational(2))));
    CHECK(chromatic(Multigraph(2, {{0, 1}})) == n * (n - UniPoly(Rational(1))));
    CHECK(chromatic(Multigraph(1, {{0, 0}})).is_zero());
    for (const auto& g : small_corpus())
        for (int k : {2, 3, 4})
            CHECK(chromatic(g).evaluate(Rational(k)) == Rational(coloring_oracle(g, k)));
}

TEST_CASE("flow polynomial against the flow oracle") {
    UniPoly n = UniPoly::variable();
    CHECK(flow(k3()) == n - UniPoly(Rational(1)));
    CHECK(flow(Multigraph(3, {{0, 1}, {1, 2}})).is_zero()); // bridges kill flows
    CHECK(flow(Multigraph(1, {{0, 0}})) == n - UniPoly(Rational(1)));
    CHECK(flow_count_oracle(k3(), 3, true) == 2);
    CHECK(flow_count_oracle(k3(), 3, false) == 3);
    for (const auto& g : small_corpus())
        for (int k : {2, 3, 4, 5})
            CHECK(flow(g).evaluate(Rational(k)) == Rational(flow_count_oracle(g, k, true)));
}

TEST_CASE("flow count does not depend on the orientation") {
    std::mt19937_64 rng(91);
    for (const auto& g : small_corpus()) {
        std::vector<bool> flips(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) flips[e] = rng() & 1;
        std::vector<bool> all(g.edge_count(), true);
        for (int k : {2, 3}) {
            long base = flow_count_oracle(g, k, true);
            CHECK(base == flow_count_oracle(g, k, true, &flips));
            CHECK(base == flow_count_oracle(g, k, true, &all));
        }
    }
}

TEST_CASE("complete flow polynomial") {
    UniPoly n = UniPoly::variable();
    CHECK(complete_flow(k3()) == n);
    CHECK(complete_flow(Multigraph(3, {{0, 1}, {1, 2}})) == UniPoly(Rational(1)));
    CHECK(complete_flow(Multigraph(2, {{0, 1}, {0, 1}})) == n);
    for (const auto& g : small_corpus())
        for (int k : {2, 3, 4})
            CHECK(complete_flow(g).evaluate(Rational(k)) == Rational(flow_count_oracle(g, k, false)));
}

TEST_CASE("complete flow identities") {
    for (const auto& g : small_corpus()) {
        int e = g.edge_count();
        // FC_G = sum of C_A over spanning subgraphs, as polynomials
        UniPoly sum_flows;
        for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask)
            sum_flows += flow(g.spanning_subgraph(mask));
        CHECK(sum_flows == complete_flow(g));
        // C_G = alternating sum of FC_A
        UniPoly alt;
        for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
            int diff = e - std::popcount(mask);
            UniPoly term = complete_flow(g.spanning_subgraph(mask));
            alt += (diff % 2 == 0) ? term : -term;
        }
        CHECK(alt == flow(g));
        // FC is multiplicative in n
        UniPoly fc = complete_flow(g);
        for (long n1 : {2, 3})
            for (long n2 : {2, 4})
                CHECK(fc.evaluate(Rational(n1 * n2)) ==
                      fc.evaluate(Rational(n1)) * fc.evaluate(Rational(n2)));
    }
}

TEST_CASE("bad coloring polynomial") {
    BiPoly n = BiPoly::var_x(), t = BiPoly::var_y();
    // single edge: n t + n(n-1)
    CHECK(bad_coloring(Multigraph(2, {{0, 1}})) == n * t + n * n - n);
    CHECK(bad_coloring(Multigraph(1, {{0, 0}})) == n * t);
    // B(n, 0) is the chromatic polynomial
    for (const auto& g : small_corpus()) {
        BiPoly b = bad_coloring(g);
        BiPoly b_at0 = b.substitute_y(Rational(0));
        UniPoly at0;
        for (const auto& [key, c] : b_at0.terms()) at0 += UniPoly::monomial(key.first, c);
        CHECK(at0 == chromatic(g));
        // B equals Z_n of the model with weights (t, 1)
        for (int k : {2, 3})
            for (long tv : {0, 1, 3}) {
                auto m = RationalModel::isotropic(g, k, Rational(tv), Rational(1));
                CHECK(b.evaluate(Rational(k), Rational(tv)) == partition_enumerate(m));
            }
        // B(n, t+1) = n^k t^r T((t+n)/t, t+1), assembled without division
        GraphStats s = g.stats();
        BiPoly lhs;
        BiPoly t_plus_1 = t + BiPoly(Rational(1));
        for (const auto& [key, c] : b.terms())
            lhs += BiPoly::monomial(key.first, 0, c) * t_plus_1.pow(key.second);
        BiPoly rhs;
        BiPoly tg = tutte(g).value;
        for (const auto& [key, c] : tg.terms()) {
            auto [i, j] = key;
            rhs += BiPoly(c) * BiPoly::monomial(s.k, s.r - i, Rational(1)) *
                   (t + BiPoly::monomial(1, 0, Rational(1))).pow(i) * t_plus_1.pow(j);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tutte coefficients and spanning tree counts") {
    // Coefficients are nonnegative integers, and T(1,1) counts spanning
    // trees of connected graphs (checked by enumerating edge subsets).
    for (const Multigraph& g : corpus_up_to(4)) {
        BiPoly t = tutte(g).value;
        for (const auto& [key, c] : t.terms()) {
            CHECK(c.is_integer());
            CHECK(c.sign() > 0);
        }
        long trees = 0;
        int v = g.vertex_count(), e = g.edge_count();
        for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
            if (std::popcount(mask) != v - 1) continue;
            if (g.spanning_subgraph_components(mask) == 1) trees++;
        }
        CHECK(t.evaluate(Rational(1), Rational(1)) == Rational(trees));
    }
}

TEST_CASE("oracle sweeps over the generated corpus") {
    // Direct counting oracles against the Tutte-derived polynomials on
    // every connected multigraph with up to 5 edges.
    for (const Multigraph& g : corpus_up_to(5)) {
        UniPoly chi = chromatic(g);
        for (int n : {2, 3, 4}) CHECK(chi.evaluate(Rational(n)) == Rational(coloring_oracle(g, n)));
        UniPoly fl = flow(g);
        UniPoly fc = complete_flow(g);
        for (int n : {2, 3, 4, 5}) {
            CHECK(fl.evaluate(Rational(n)) == Rational(flow_count_oracle(g, n, true)));
            CHECK(fc.evaluate(Rational(n)) == Rational(flow_count_oracle(g, n, false)));
        }
    }
}

TEST_CASE("convolution formula") {
    CHECK(verify_convolution_formula(Multigraph(2, {{0, 1}})).is_zero());
    CHECK(verify_convolution_formula(k3()).is_zero());
    CHECK(verify_convolution_formula(Multigraph(2, {{0, 1}, {0, 1}})).is_zero());
    for (const auto& g : small_corpus()) CHECK(verify_convolution_formula(g).is_zero());
}
