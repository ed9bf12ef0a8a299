#include "doctest.h"

#include <random>

#include <nlohmann/json.hpp>

#include "homaloidal/mpoly.hpp"

using namespace homaloidal;

namespace {

MPoly random_poly(std::mt19937_64& rng, int nvars = 3, int nterms = 4, int maxdeg = 3) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    MPoly p;
    for (int t = 0; t < nterms; ++t) {
        MPoly term = MPoly(random_rational(rng, 9, 4));
        for (int v = 0; v < nvars; ++v) {
            int e = deg(rng);
            for (int i = 0; i < e; ++i)
                term = term * MPoly::variable("x" + std::to_string(v + 1));
        }
        p = p + term;
    }
    return p;
}

QPoint random_point(std::mt19937_64& rng, int nvars = 3) {
    QPoint pt;
    for (int v = 0; v < nvars; ++v)
        pt.assignment["x" + std::to_string(v + 1)] = random_rational(rng, 9, 4);
    return pt;
}

}  // namespace

TEST_CASE("parse and print round-trip") {
    MPoly p = MPoly::parse("7/25*x^2 - y^2 - 48/25*x*z - 7/25*z^2");
    CHECK(p.total_degree() == 2);
    CHECK(p.coefficient({{"x", 2}}) == Rational(7, 25));
    CHECK(p.coefficient({{"x", 1}, {"z", 1}}) == Rational(-48, 25));
    CHECK(MPoly::parse(p.str()) == p);

    CHECK(MPoly::parse("(x+y)*(x-y)") == MPoly::parse("x^2 - y^2"));
    CHECK(MPoly::parse("-(x - 2)^3").coefficient({}) == 8);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MPoly());
        CHECK(a * MPoly(Rational(1)) == a);
        CHECK(a * MPoly() == MPoly());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng);
        QPoint pt = random_point(rng);
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("substitution composes with evaluation") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        MPoly a = random_poly(rng);
        MPoly g = random_poly(rng);
        std::map<std::string, MPoly> sub{{"x1", g}};
        QPoint pt = random_point(rng);
        QPoint shifted = pt;
        shifted.assignment["x1"] = g.eval(pt);
        CHECK(a.subst(sub).eval(pt) == a.eval(shifted));
    }
}

TEST_CASE("derivative rules") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).diff("x1") == a.diff("x1") * b + a * b.diff("x1"));
        CHECK((a + b).diff("x2") == a.diff("x2") + b.diff("x2"));
    }
    CHECK(MPoly::parse("x^3").diff("x") == MPoly::parse("3*x^2"));
    CHECK(MPoly::parse("x^3").diff("y") == MPoly());
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    MPoly p = MPoly::parse("x^3*y + 2*x^2*y^2 - 5*y^4");
    REQUIRE(p.is_homogeneous());
    MPoly euler = MPoly::parse("x") * p.diff("x") + MPoly::parse("y") * p.diff("y");
    CHECK(euler == p * Rational(4));
}

TEST_CASE("canonical term order is graded-lex") {
    MPoly p = MPoly::parse("y + x + x*y + 1 + x^2");
    CHECK(p.str() == "x^2 + x*y + x + y + 1");
}

TEST_CASE("missing variable raises") {
    MPoly p = MPoly::parse("x + y");
    QPoint pt;
    pt.assignment["x"] = 1;
    CHECK_THROWS_AS(p.eval(pt), MissingVariable);
}

TEST_CASE("json round-trip") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        MPoly a = random_poly(rng);
        CHECK(MPoly::from_json(a.to_json()) == a);
    }
}

TEST_CASE("gradient and hessian of a quadratic") {
    MPoly p = MPoly::parse("x^2 + 3*x*y - y^2");
    auto grad = gradient(p);
    REQUIRE(grad.size() == 2);
    CHECK(grad[0] == MPoly::parse("2*x + 3*y"));
    QPoint pt;
    pt.assignment["x"] = 1;
    pt.assignment["y"] = 2;
    auto h = hessian_at(p, pt);
    CHECK(h[0][0] == 2);
    CHECK(h[0][1] == 3);
    CHECK(h[1][1] == -2);
}
