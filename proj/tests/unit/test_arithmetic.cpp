#include "doctest.h"
#include "mpa/errors.hpp"
#include "mpa/poly.hpp"

#include <random>
#include <vector>

using mpa::Poly;
using mpa::Rational;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, -3).to_string() == "2");
    CHECK(Rational(0, -5).to_string() == "0");
    CHECK(Rational(3, -9).to_string() == "-1/3");
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), mpa::ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), mpa::ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), mpa::InvalidArgument);
    CHECK(Rational(1, 3).hash() == (Rational(1, 6) * Rational(2)).hash());
}

TEST_CASE("sums agree computed two ways") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int t = 0; t < 200; ++t) {
        const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational direct = Rational(a, b) + Rational(c, d);
        const Rational cross(a * d + c * b, b * d);
        CHECK(direct == cross);
        CHECK(direct.to_string() == cross.to_string());
    }
}

TEST_CASE("falling factorial") {
    CHECK(mpa::falling_factorial(Poly::xi(), 0) == Poly(1));
    CHECK(mpa::falling_factorial(Poly::xi_plus(-2), 1) == Poly::xi_plus(-2));
    CHECK(mpa::falling_factorial(Poly::xi(), 2) == Poly(std::vector<Rational>{0, -1, 1}));
    for (int l = 0; l < 5; ++l) {
        for (long n = -3; n < 8; ++n) {
            const Poly f = Poly::xi_plus(Rational(-1, 2)) * Poly(3);
            const Rational base = mpa::eval_poly(f, n);
            Rational expect(1);
            for (int i = 0; i < l; ++i) expect *= base - Rational(i);
            CHECK(mpa::eval_poly(mpa::falling_factorial(f, static_cast<unsigned>(l)), n) == expect);
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(mpa::eval_poly(Poly::xi_plus(-2), 3) == Rational(1));
    CHECK(mpa::eval_poly(Poly(std::vector<Rational>{0, -1, 1}), 4) == Rational(12));
    CHECK(mpa::eval_poly(Poly(), 17) == Rational(0));
    CHECK(Poly(std::vector<Rational>{4, Rational(-1, 3), 2}).to_string() == "2*xi^2 - 1/3*xi + 4");
    CHECK(Poly().to_string() == "0");
}

TEST_CASE("interpolation") {
    using Pt = std::pair<long, Rational>;
    std::vector<Pt> line{{3, 1}, {4, 2}};
    CHECK(mpa::interpolate(line) == Poly::xi_plus(-2));
    std::vector<Pt> constant{{0, Rational(5, 7)}};
    CHECK(mpa::interpolate(constant) == Poly(Rational(5, 7)));
    std::vector<Pt> quad{{0, 0}, {1, 0}, {2, 2}};
    CHECK(mpa::interpolate(quad) == Poly(std::vector<Rational>{0, -1, 1}));
    std::vector<Pt> dup{{1, 0}, {1, 2}};
    CHECK_THROWS_AS(mpa::interpolate(dup), mpa::MalformedOracleData);
    CHECK_THROWS_AS(mpa::interpolate(std::vector<Pt>{}), mpa::MalformedOracleData);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int t = 0; t < 30; ++t) {
        const int deg = t % 6;
        std::vector<Rational> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.emplace_back(c(rng), 1 + (t % 3));
        const Poly p(coeffs);
        std::vector<Pt> pts;
        for (int i = 0; i <= deg; ++i) pts.emplace_back(2 * i - 3, p.eval(Rational(2 * i - 3)));
        CHECK(mpa::interpolate(pts) == p);
    }
}
