#include "doctest.h"

#include "pottskit/potts.hpp"

#include <random>

using namespace pottskit;

namespace {
Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Rational rnd_rat(std::mt19937_64& rng, bool nonzero = true) {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 4) + 1;
    if (nonzero && num == 0) num = 5;
    return Rational(num, den);
}

RationalModel random_model(const Multigraph& g, int n, std::mt19937_64& rng) {
    std::vector<std::pair<Rational, Rational>> w;
    for (int e = 0; e < g.edge_count(); ++e) w.push_back({rnd_rat(rng), rnd_rat(rng)});
    return RationalModel(g, n, std::move(w));
}
} // namespace

TEST_CASE("state weights") {
    auto m = RationalModel::isotropic(k3(), 2, Rational(3), Rational(5));
    CHECK(state_weight(m, {0, 0, 0}) == Rational(27));
    CHECK(state_weight(m, {0, 0, 1}) == Rational(3) * Rational(25)); // alpha*beta^2
    auto loop = RationalModel::isotropic(Multigraph(1, {{0, 0}}), 3, Rational(7), Rational(11));
    CHECK(state_weight(loop, {2}) == Rational(7)); // loops always contribute alpha
    CHECK_THROWS_AS(state_weight(m, {0, 1}), std::invalid_argument);
}

TEST_CASE("partition function oracle values") {
    // K3, n=2, isotropic: 2 monochromatic states give alpha^3, the other six
    // have exactly one equal edge: 2a^3 + 6ab^2.
    auto m = RationalModel::isotropic(k3(), 2, Rational(3), Rational(1));
    CHECK(partition_enumerate(m) == Rational(72));
    Rational a(5, 2), b(3, 7);
    auto m2 = RationalModel::isotropic(k3(), 2, a, b);
    CHECK(partition_enumerate(m2) == Rational(2) * a.pow(3) + Rational(6) * a * b.pow(2));

    CHECK(partition_enumerate(RationalModel(Multigraph(0), 5, {})) == Rational(1));
    CHECK(partition_enumerate(RationalModel(Multigraph(2), 3, {})) == Rational(9));
}

TEST_CASE("reduced-weight form agrees with enumeration") {
    auto m = RationalModel::isotropic(k3(), 2, Rational(3), Rational(1));
    CHECK(partition_fk(m) == Rational(72));
    auto edge = RationalModel::isotropic(Multigraph(2, {{0, 1}}), 4, Rational(2), Rational(2));
    CHECK(partition_fk(edge) == Rational(16) * Rational(2)); // n^2 * beta at t = 1
    auto loop = RationalModel::isotropic(Multigraph(1, {{0, 0}}), 3, Rational(5), Rational(2));
    CHECK(partition_fk(loop) == Rational(15)); // n * alpha

    std::mt19937_64 rng(7);
    std::vector<Multigraph> gs = {k3(), Multigraph(2, {{0, 1}, {0, 1}, {1, 1}}),
                                  Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})};
    for (const auto& g : gs)
        for (int n : {2, 3, 4}) {
            auto m3 = random_model(g, n, rng);
            CHECK(partition_fk(m3) == partition_enumerate(m3));
            CHECK(fk_expansion_z(m3.graph, m3.weights, Rational(n)) == partition_enumerate(m3));
        }

    auto zero_beta = RationalModel::isotropic(k3(), 2, Rational(1), Rational(0));
    CHECK_THROWS_AS(partition_fk(zero_beta), std::domain_error);
}

TEST_CASE("normalized partition") {
    CHECK(normalized_partition(RationalModel(Multigraph(0), 2, {})) == Rational(1));
    CHECK(normalized_partition(RationalModel(Multigraph(1), 4, {})) == Rational(1));
    auto m = RationalModel::isotropic(k3(), 2, Rational(3), Rational(1));
    CHECK(normalized_partition(m) == Rational(9));
}

TEST_CASE("boundary partition functions") {
    auto edge = RationalModel::isotropic(Multigraph(2, {{0, 1}}), 2, Rational(3), Rational(5));
    CHECK(boundary_partition(edge, {{0, 1}, {0, 0}}) == Rational(3));
    CHECK(boundary_partition(edge, {{0, 1}, {0, 1}}) == Rational(5));

    // Summing over all boundary assignments recovers Z.
    std::mt19937_64 rng(11);
    auto m = random_model(k3(), 3, rng);
    Rational total(0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) total += boundary_partition(m, {{0, 2}, {a, b}});
    CHECK(total == partition_enumerate(m));
}

TEST_CASE("gluing law") {
    std::mt19937_64 rng(23);
    auto e1 = random_model(Multigraph(2, {{0, 1}}), 2, rng);
    auto e2 = random_model(Multigraph(2, {{0, 1}}), 2, rng);
    CHECK(glue_check(e1, e2, {{1, 0}}) == Rational(0));

    auto t1 = random_model(k3(), 2, rng);
    auto t2 = random_model(k3(), 2, rng);
    CHECK(glue_check(t1, t2, {{0, 0}}) == Rational(0));
    CHECK(glue_check(t1, t2, {}) == Rational(0)); // disjoint union
    auto m3 = random_model(k3(), 3, rng);
    CHECK_THROWS_AS(glue_check(t1, m3, {}), std::invalid_argument);
}

TEST_CASE("deletion-contraction identity for Z") {
    std::mt19937_64 rng(31);
    std::vector<Multigraph> gs = {k3(), Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                  Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}})};
    for (const auto& g : gs)
        for (int n : {2, 3}) {
            auto m = random_model(g, n, rng);
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edge(e).is_loop() || g.is_bridge(e)) continue;
                auto keep_weights = [&](const Multigraph& h, bool skip_e) {
                    std::vector<std::pair<Rational, Rational>> w;
                    for (int i = 0; i < g.edge_count(); ++i)
                        if (!skip_e || i != e) w.push_back(m.weights[i]);
                    return RationalModel(h, n, std::move(w));
                };
                auto contracted = keep_weights(g.contract_edge(e), true);
                auto deleted = keep_weights(g.delete_edge(e), true);
                Rational lhs = partition_enumerate(m);
                Rational rhs = (m.alpha(e) - m.beta(e)) * partition_enumerate(contracted) +
                               m.beta(e) * partition_enumerate(deleted);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("multiplicativity laws") {
    std::mt19937_64 rng(41);
    auto m1 = random_model(k3(), 3, rng);
    auto m2 = random_model(Multigraph(2, {{0, 1}, {0, 1}}), 3, rng);

    // Disjoint union
    Multigraph du = m1.graph.glue(m2.graph, {});
    std::vector<std::pair<Rational, Rational>> w = m1.weights;
    w.insert(w.end(), m2.weights.begin(), m2.weights.end());
    CHECK(partition_enumerate(RationalModel(du, 3, w)) ==
          partition_enumerate(m1) * partition_enumerate(m2));

    // One-vertex join: n Z(G) = Z(G1) Z(G2)
    Multigraph join = m1.graph.glue(m2.graph, {{0, 0}});
    CHECK(Rational(3) * partition_enumerate(RationalModel(join, 3, w)) ==
          partition_enumerate(m1) * partition_enumerate(m2));
}

TEST_CASE("log derivative in a reduced weight") {
    // Single edge, n=2: W = 2(1+t), so dlnZ/dt = 1/(1+t).
    for (auto [an, ad, bn, bd] : {std::array<long, 4>{3, 1, 1, 1}, {5, 2, 3, 4}}) {
        Rational a(an, ad), b(bn, bd);
        auto m = RationalModel::isotropic(Multigraph(2, {{0, 1}}), 2, a, b);
        Rational t = a / b;
        CHECK(dlogz_dt(m, 0) == Rational(1) / (Rational(1) + t));
    }
    auto m1 = RationalModel::isotropic(Multigraph(2, {{0, 1}}), 2, Rational(2), Rational(2));
    CHECK(dlogz_dt(m1, 0) == Rational(1, 2));

    // Scaling every beta leaves the value unchanged (t held fixed means
    // alpha scales along; the derivative only sees t).
    std::mt19937_64 rng(53);
    auto m = random_model(k3(), 2, rng);
    auto scaled = m;
    for (auto& [a, b] : scaled.weights) {
        a *= Rational(7);
        b *= Rational(7);
    }
    for (int e = 0; e < 3; ++e) CHECK(dlogz_dt(m, e) == dlogz_dt(scaled, e));
}

TEST_CASE("all-subset Z table matches per-subset enumeration") {
    std::mt19937_64 rng(61);
    auto m = random_model(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}}), 3, rng);
    auto zs = fk_all_subset_zs(m);
    REQUIRE(zs.size() == 16);
    for (uint64_t mask = 0; mask < 16; ++mask)
        CHECK(zs[mask] == partition_enumerate(m.restricted_to(mask)));
}

TEST_CASE("budget guard") {
    Multigraph big(30);
    auto m = RationalModel(big, 4, {});
    CHECK_THROWS_AS(partition_enumerate(m, 1 << 10), budget_error);
}
