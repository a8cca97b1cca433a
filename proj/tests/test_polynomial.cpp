#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qop/polynomial.hpp"

using namespace qop;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

Polynomial random_poly(std::mt19937_64& rng, int max_deg) {
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Rational> c(deg + 1);
    for (auto& v : c)
        v = q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 6) + 1);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(format_rational(q(-2)) == "-2/1");
    CHECK(parse_rational("7/2") == q(7, 2));
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("5") == q(5));
    CHECK(format_rational(parse_rational("0/9")) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("ring operations") {
    const Polynomial a({q(1), q(-2)});  // 1 - 2x
    const Polynomial b({q(0), q(2)});   // 2x
    CHECK(a + b == Polynomial::constant(q(1)));

    CHECK(Polynomial({q(-1), q(1)}) * Polynomial({q(1), q(1)}) ==
          Polynomial({q(-1), q(0), q(1)}));

    const Polynomial c({q(-2), q(0), q(2)});  // 2x^2 - 2
    CHECK(content(c) == q(2));
    CHECK(divide_by_content(c) == Polynomial({q(-1), q(0), q(1)}));

    // content of a rational-coefficient polynomial
    CHECK(content(Polynomial({q(1, 3), q(1, 2)})) == q(1, 6));
    CHECK(divide_by_content(Polynomial({q(1, 3), q(1, 2)})) == Polynomial({q(2), q(3)}));

    CHECK((a - a).is_zero());
    CHECK(a.degree() == 1);
    CHECK(Polynomial::zero().degree() == Polynomial::kZeroDegree);
}

TEST_CASE("exact division") {
    const Polynomial prod = Polynomial({q(-1), q(1)}) * Polynomial({q(3), q(2)});
    CHECK(divide_exact(prod, Polynomial({q(-1), q(1)})) == Polynomial({q(3), q(2)}));
    CHECK_THROWS_AS(divide_exact(Polynomial({q(1), q(0), q(1)}), Polynomial({q(-1), q(1)})),
                    std::domain_error);
    CHECK_THROWS_AS(divide_by_content(Polynomial::zero()), std::domain_error);
}

TEST_CASE("derivative") {
    CHECK(derivative(Polynomial({q(-2), q(0), q(1)})) == Polynomial({q(0), q(2)}));
    CHECK(derivative(Polynomial::constant(q(7))).is_zero());
    // derivative of 1 - 4x + (7/2)x^2
    CHECK(derivative(Polynomial({q(1), q(-4), q(7, 2)})) == Polynomial({q(-4), q(7)}));
}

TEST_CASE("compose_affine") {
    const Polynomial x2({q(0), q(0), q(1)});
    CHECK(compose_affine(x2, q(1), q(-1)) == Polynomial({q(1), q(-2), q(1)}));

    const Polynomial h2({q(-2), q(0), q(4)});  // 4x^2 - 2
    CHECK(compose_affine(h2, q(1, 2), q(0)) == Polynomial({q(-2), q(0), q(1)}));

    CHECK(compose_affine(Polynomial({q(0), q(1)}), q(-3), q(0)) == Polynomial({q(0), q(-3)}));
}

TEST_CASE("evaluation") {
    CHECK(Polynomial({q(-1), q(2)})(q(1, 2)) == 0);
    CHECK(Polynomial({q(1), q(-2)})(q(1, 2)) == 0);
    const Polynomial x2p1({q(1), q(0), q(1)});
    CHECK(x2p1(ComplexRational(q(0), q(1))).is_zero());
    CHECK(x2p1(q(2)) == q(5));
}

TEST_CASE("gcd and squarefree machinery") {
    const Polynomial f({q(-1), q(1)});
    const Polynomial g({q(2), q(1)});
    CHECK(poly_gcd(f * g, f * f) == f);
    CHECK(poly_gcd(f, g).degree() == 0);

    const Polynomial p = f * f * g;  // (x-1)^2 (x+2)
    CHECK(squarefree_part(p) == f * g);
    CHECK(squarefree_part(f * g * f * g) == f * g);

    auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[0].first == g);
    CHECK(factors[1].second == 2);
    CHECK(factors[1].first == f);
}

TEST_CASE("algebra properties on random inputs") {
    std::mt19937_64 rng(20210601);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng, 6);
        const Polynomial b = random_poly(rng, 6);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));

        // affine composition round trip
        const Rational s = q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
        const Rational t = q(static_cast<long>(rng() % 11) - 5);
        CHECK(compose_affine(compose_affine(a, s, t), 1 / s, -t / s) == a);
    }
}
