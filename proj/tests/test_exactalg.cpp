#include "doctest.h"
#include "support.hpp"
#include "tokuyama/rootdata.hpp"

using namespace tokuyama::exactalg;
using testsupport::P;

TEST_CASE("halfint arithmetic") {
    auto a = HalfInt::from_twice(3), b = HalfInt::from_twice(1);
    CHECK((a + b) == HalfInt(2));
    CHECK((a + b).is_integer());
    CHECK_FALSE(a.is_integer());
    CHECK(a > b);
    CHECK(a.str() == "3/2");
    CHECK_THROWS(a.to_integer());
}

TEST_CASE("add examples") {
    CHECK(P("1 + 1 * z1^{2/2}", 1) + P("-1", 1) == LaurentPoly::z(1, 1));
    auto p = P("3 * z1^{1/2} t^{2} + -2 * q^{-1/2}", 1);
    CHECK(p + LaurentPoly(1) == p);
    CHECK(P("1 + 1 * t^{1}", 1) + P("1 + 1 * t^{1}", 1) == P("2 + 2 * t^{1}", 1));
    CHECK_THROWS_AS(LaurentPoly(1) + LaurentPoly(2), RankMismatch);
}

TEST_CASE("mul examples") {
    auto h = LaurentPoly::z(1, 1, HalfInt::from_twice(1));
    CHECK(h * h == LaurentPoly::z(1, 1));
    auto a = LaurentPoly(1, 1) + LaurentPoly::t(1) * LaurentPoly::z(1, 1);
    auto b = LaurentPoly(1, 1) + LaurentPoly::t(1) * LaurentPoly::z(1, 1, -1);
    auto expect = LaurentPoly(1, 1) + LaurentPoly::t(1) * LaurentPoly::z(1, 1) +
                  LaurentPoly::t(1) * LaurentPoly::z(1, 1, -1) + LaurentPoly::t(1, 2);
    CHECK(a * b == expect);
    CHECK((a * LaurentPoly(1)).is_zero());
    CHECK_THROWS_AS(mul(LaurentPoly(1), LaurentPoly(3)), RankMismatch);
}

TEST_CASE("div_exact examples") {
    auto num = LaurentPoly::z(1, 1) - LaurentPoly::z(1, 1, -1);
    auto den = LaurentPoly::z(1, 1, HalfInt::from_twice(1)) - LaurentPoly::z(1, 1, HalfInt::from_twice(-1));
    auto expect = LaurentPoly::z(1, 1, HalfInt::from_twice(1)) + LaurentPoly::z(1, 1, HalfInt::from_twice(-1));
    CHECK(div_exact(num, den) == expect);
    auto bad_num = LaurentPoly::z(1, 1) + LaurentPoly(1, 1);
    auto bad_den = LaurentPoly::z(1, 1) - LaurentPoly(1, 1);
    CHECK_THROWS_AS(div_exact(bad_num, bad_den), NonExactDivision);
    try {
        div_exact(bad_num, bad_den);
    } catch (const NonExactDivision& e) {
        CHECK(e.remainder() != "0");
    }
    CHECK_THROWS(div_exact(num, LaurentPoly(1)));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 1 + trial % 3;
        auto a = testsupport::random_poly(rng, rank), b = testsupport::random_poly(rng, rank),
             c = testsupport::random_poly(rng, rank);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
        CHECK(parse(a.serialize(), rank) == a);
    }
}

TEST_CASE("substitute examples") {
    auto onept = LaurentPoly(1, 1) + LaurentPoly::t(1);
    auto tq = -LaurentPoly::q(1, -1);
    CHECK(substitute(onept, {{Var::t(), tq}}) == LaurentPoly(1, 1) - LaurentPoly::q(1, -1));
    CHECK(substitute(LaurentPoly::t(1, 3), {{Var::t(), mpq_class(0)}}).is_zero());
    CHECK(substitute(LaurentPoly::q(1, HalfInt::from_twice(1)), {{Var::q(), mpq_class(9)}}) == LaurentPoly(1, 3));
    CHECK_THROWS_AS(substitute(LaurentPoly::q(1, HalfInt::from_twice(1)), {{Var::q(), mpq_class(3)}}),
                    SubstitutionError);
    CHECK_THROWS_AS(substitute(LaurentPoly::q(1, -1), {{Var::q(), mpq_class(3)}}), SubstitutionError);
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937 rng(7);
    auto tq = -LaurentPoly::q(2, -1);
    auto zsub = LaurentPoly::z(2, 1, 2) * LaurentPoly::q(2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = testsupport::random_poly(rng, 2, 8), b = testsupport::random_poly(rng, 2, 8);
        std::vector<std::pair<Var, Binding>> bind = {{Var::t(), tq}, {Var::z(2), zsub}};
        CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
        CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
        std::vector<std::pair<Var, Binding>> bind2 = {{Var::q(), mpq_class(1)}, {Var::t(), mpq_class(-2)}};
        CHECK(substitute(a * b, bind2) == substitute(a, bind2) * substitute(b, bind2));
    }
}

TEST_CASE("coefficient_of examples") {
    auto p = LaurentPoly::z(2, 1) * LaurentPoly::t(2) + LaurentPoly::z(2, 2);
    CHECK(coefficient_of(p, {{Var::z(1), HalfInt(1)}}) == LaurentPoly::t(2));
    CHECK(coefficient_of(LaurentPoly(2), {{Var::z(1), HalfInt(1)}}).is_zero());
}

TEST_CASE("coefficient_of the rank-2 worked example") {
    using namespace tokuyama::rootdata;
    auto prod = deformed_denominator(2) * character({3, 2}, 2);
    auto coeff = coefficient_of(prod, {{Var::z(2), HalfInt::from_twice(11)}});
    auto z1 = [](int twice) { return LaurentPoly::z(2, 1, HalfInt::from_twice(twice)); };
    auto t = [](int e) { return LaurentPoly::t(2, e); };
    auto expect = z1(3) * t(3) + z1(1) * (t(3) + t(2)) + z1(-1) * (t(3) + t(2)) + z1(-3) * t(2);
    CHECK(coeff == expect);
}

TEST_CASE("serialization grammar") {
    auto p = P("-3 * z1^{1/2} z2^{-4/2} t^{3} q^{-1/2} + 5", 2);
    CHECK(p.serialize() == P(p.serialize(), 2).serialize());
    CHECK(LaurentPoly(3).serialize() == "0");
    CHECK_THROWS_AS(parse("1 * z3^{1/2}", 2), ParseError);
    CHECK_THROWS_AS(parse("1 * t^{1/2}", 2), ParseError);
    CHECK(LaurentPoly::z(1, 1, HalfInt::from_twice(3)).pretty() == "z1^(3/2)");
}

TEST_CASE("evaluation") {
    auto p = LaurentPoly(1, 1) - LaurentPoly::q(1, -1);
    CHECK(evaluate_q(p, 3.0) == doctest::Approx(2.0 / 3.0));
    CHECK(evaluate_rational(p, {mpq_class(1)}, mpq_class(0), mpq_class(3)) == mpq_class(2, 3));
}
