#include "doctest.h"

#include "pottskit/biggs.hpp"

#include <random>

using namespace pottskit;

namespace {
Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<Multigraph> corpus5() {
    return {
        Multigraph(2, {{0, 1}}),
        Multigraph(1, {{0, 0}}),
        k3(),
        Multigraph(2, {{0, 1}, {0, 1}}),
        Multigraph(3, {{0, 1}, {1, 2}}),
        Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
        Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
        Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}),
        Multigraph(2, {{0, 1}, {0, 1}, {0, 0}, {1, 1}}),
    };
}

Rational rnd_nz(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 9) - 4;
    if (num == 0) num = 3;
    return Rational(num, static_cast<long>(rng() % 3) + 1);
}

RationalModel random_aniso(const Multigraph& g, int n, std::mt19937_64& rng) {
    std::vector<std::pair<Rational, Rational>> w;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rational a = rnd_nz(rng), b = rnd_nz(rng);
        if (a == b) a += Rational(1);
        w.push_back({a, b});
    }
    return RationalModel(g, n, std::move(w));
}
} // namespace

TEST_CASE("biggs coefficients") {
    std::mt19937_64 rng(3);
    auto m = random_aniso(k3(), 2, rng);
    auto c = biggs_coeffs(m, m);
    for (int e = 0; e < 3; ++e) {
        CHECK(c.p[e] == Rational(1));
        CHECK(c.q[e] == Rational(0));
    }
    // linear relation i1 = p i2 + q at both arguments
    auto m2 = random_aniso(k3(), 2, rng);
    auto c12 = biggs_coeffs(m, m2);
    for (int e = 0; e < 3; ++e) {
        CHECK(m.alpha(e) == c12.p[e] * m2.alpha(e) + c12.q[e]);
        CHECK(m.beta(e) == c12.p[e] * m2.beta(e) + c12.q[e]);
    }
    // chromatic-model pair (0,1) vs (1-n,1): p = 1/n, q = (n-1)/n
    for (int n : {2, 3, 5}) {
        auto mc = RationalModel::isotropic(k3(), n, Rational(0), Rational(1));
        auto mf = RationalModel::isotropic(k3(), n, Rational(1 - n), Rational(1));
        auto cc = biggs_coeffs(mc, mf);
        CHECK(cc.p[0] == Rational(1, n));
        CHECK(cc.q[0] == Rational(n - 1, n));
        // pair ((a,b),(0,1)): p = b - a, q = a
        auto ma = RationalModel::isotropic(k3(), n, Rational(7), Rational(2));
        auto cm = biggs_coeffs(ma, mc);
        CHECK(cm.p[0] == Rational(2) - Rational(7));
        CHECK(cm.q[0] == Rational(7));
    }
    auto degenerate = RationalModel::isotropic(k3(), 2, Rational(1), Rational(1));
    CHECK_THROWS_AS(biggs_coeffs(m, degenerate), std::domain_error);
}

TEST_CASE("biggs convolution identity") {
    std::mt19937_64 rng(17);
    auto m = random_aniso(k3(), 2, rng);
    CHECK(verify_biggs(m, m) == Rational(0));
    // spot instance from the acceptance sheet
    auto m1 = RationalModel::isotropic(k3(), 2, Rational(3), Rational(1));
    auto m2 = RationalModel::isotropic(k3(), 2, Rational(5), Rational(2));
    CHECK(verify_biggs(m1, m2) == Rational(0));
    auto p1 = random_aniso(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}), 3, rng);
    auto p2 = random_aniso(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}), 3, rng);
    CHECK(verify_biggs(p1, p2) == Rational(0));
    // property sweep: random pairs on the small corpus
    for (const auto& g : corpus5())
        for (int n : {2, 3})
            for (int trial = 0; trial < 10; ++trial) {
                auto a = random_aniso(g, n, rng);
                auto b = random_aniso(g, n, rng);
                CHECK(verify_biggs(a, b) == Rational(0));
            }
}

TEST_CASE("matiyasevich identity") {
    CHECK(verify_matiyasevich(k3(), 3) == Rational(0));
    for (int n : {2, 3, 4, 5}) CHECK(verify_matiyasevich(Multigraph(2, {{0, 1}}), n) == Rational(0));
    CHECK(verify_matiyasevich(Multigraph(4, {{0, 1}, {2, 3}}), 2) == Rational(0));
    for (const auto& g : corpus5())
        for (int n : {2, 3, 4, 5}) CHECK(verify_matiyasevich(g, n) == Rational(0));
}

TEST_CASE("four exchange formulas") {
    std::mt19937_64 rng(29);
    auto zero = [](const FourFormulaResiduals& r) {
        return r.genm == Rational(0) && r.inverse == Rational(0) && r.t_flow == Rational(0) &&
               r.flow_t == Rational(0);
    };
    CHECK(zero(verify_four_formulas(k3(), 2, Rational(3), Rational(1))));
    CHECK(zero(verify_four_formulas(Multigraph(2, {{0, 1}}), 3, Rational(2), Rational(1))));
    for (const auto& g : corpus5())
        for (int n : {2, 3, 4, 5}) {
            Rational a = rnd_nz(rng), b = rnd_nz(rng);
            if (a == b) a += Rational(1);
            if (a.is_zero()) a = Rational(1, 2);
            if ((a + Rational(n - 1) * b).is_zero()) b += Rational(1);
            CHECK(zero(verify_four_formulas(g, n, a, b)));
        }
}

TEST_CASE("order shift, multiplicative") {
    Rational a(3), b(1);
    CHECK(verify_order_shift_product(k3(), 2, 2, a, b) == Rational(0));
    CHECK(verify_order_shift_product(Multigraph(2, {{0, 1}}), 2, 3, a, b) == Rational(0));
    CHECK(verify_order_shift_product(Multigraph(1, {{0, 0}}), 2, 3, a, b) == Rational(0));
    CHECK(verify_order_shift_product(Multigraph(1, {{0, 0}}), 3, 2, Rational(5, 2), Rational(1, 3)) ==
          Rational(0));
    // Z_6(edge) cross-check: n alpha + n(n-1) beta at n = 6
    auto m6 = RationalModel::isotropic(Multigraph(2, {{0, 1}}), 6, a, b);
    CHECK(partition_enumerate(m6) == Rational(6) * a + Rational(30) * b);
}

TEST_CASE("vertex convolution") {
    CHECK(verify_tutte_vertex_convolution(Multigraph(2, {{0, 1}}), 1, 1) == Rational(0));
    CHECK(verify_tutte_vertex_convolution(k3(), 1, 2) == Rational(0));
    CHECK(verify_tutte_vertex_convolution(Multigraph(0), 2, 3) == Rational(0));
    for (const auto& g : corpus5())
        for (int n1 : {1, 2})
            for (int n2 : {1, 3}) CHECK(verify_tutte_vertex_convolution(g, n1, n2) == Rational(0));
}

TEST_CASE("order shift, additive") {
    Rational a(2), b(1);
    CHECK(verify_order_shift_sum(Multigraph(2, {{0, 1}}), 2, 1, a, b) == Rational(0));
    CHECK(verify_order_shift_sum(k3(), 2, 2, a, b) == Rational(0));
    CHECK(verify_order_shift_sum(Multigraph(1), 2, 3, a, b) == Rational(0));
    CHECK(verify_order_shift_sum(Multigraph(2, {{0, 1}, {0, 1}}), 1, 2, Rational(5, 3), Rational(1, 2)) ==
          Rational(0));
}
