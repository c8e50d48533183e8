#include "doctest.h"

#include "pottskit/poly.hpp"
#include "pottskit/rational.hpp"

#include <random>

using namespace pottskit;

TEST_CASE("rational basics") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(5).is_integer());
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::domain_error);
}

TEST_CASE("unipoly arithmetic and rendering") {
    UniPoly n = UniPoly::variable();
    UniPoly p = n * (n - UniPoly(Rational(1))) * (n - UniPoly(Rational(2)));
    CHECK(p.evaluate(Rational(3)) == Rational(6));
    CHECK(p.evaluate(Rational(1)) == Rational(0));
    CHECK(p.str() == "n^3 - 3*n^2 + 2*n");
    UniPoly q = p.substitute(n + UniPoly(Rational(1)));
    CHECK(q.evaluate(Rational(2)) == p.evaluate(Rational(3)));
}

TEST_CASE("bipoly arithmetic") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK((x + y) * (x - y) == x * x - y * y);
    BiPoly p = x * x + x + y;
    CHECK(p.substitute_y(Rational(0)) == x * x + x);
    CHECK(p.evaluate(Rational(2), Rational(5)) == Rational(11));
    CHECK(p.str() == "x^2 + x + y");
}

namespace {
UniPoly random_unipoly(std::mt19937_64& rng) {
    int deg = static_cast<int>(rng() % 4);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
    return UniPoly(c);
}
} // namespace

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = random_unipoly(rng), b = random_unipoly(rng), c = random_unipoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        Rational pt(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}
