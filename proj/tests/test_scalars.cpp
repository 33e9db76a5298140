#include <catch2/catch_amalgamated.hpp>

#include "spindex/trig_scalar.hpp"

using namespace spindex;

TEST_CASE("rational arithmetic is exact and reduced", "[scalars]") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, 6) == Rational(1, -2));
    CHECK((Rational(7, 2) * Rational(2, 7)) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing round-trips", "[scalars]") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse(" 5/10 ") == Rational(1, 2));
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("rational mod reduces into [0, m)", "[scalars]") {
    CHECK(Rational(5, 2).mod(Rational(2)) == Rational(1, 2));
    CHECK(Rational(-1, 2).mod(Rational(2)) == Rational(3, 2));
    CHECK(Rational(4).mod(Rational(2)) == Rational(0));
    CHECK(Rational(-4).mod(Rational(2)) == Rational(0));
}

TEST_CASE("gaussian rational field operations", "[scalars]") {
    auto i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.conj() == -i);
    CHECK(i.conj().conj() == i);
    GaussianRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * (GaussianRational(1) / z) == GaussianRational(1));
    CHECK(i_power(5) == i);
    CHECK(i_power(-1) == -i);
    CHECK(i_power(2) == GaussianRational(-1));
}

TEST_CASE("trig scalar canonical form eliminates s^2", "[scalars]") {
    auto c = TrigScalar::c(1);
    auto s = TrigScalar::s(1);
    // s^2 = 1 - c^2
    CHECK(s * s == TrigScalar::one() - c * c);
    // c^2 + s^2 = 1
    CHECK(c * c + s * s == TrigScalar::one());
    // s^3 = s - c^2 s
    CHECK(s * s * s == s - c * c * s);
    // s^4 = (1 - c^2)^2
    auto one_minus = TrigScalar::one() - c * c;
    CHECK(s * s * s * s == one_minus * one_minus);
}

TEST_CASE("trig scalar equality is decidable via canonical forms", "[scalars]") {
    auto c1 = TrigScalar::c(1), s1 = TrigScalar::s(1);
    auto c2 = TrigScalar::c(2), s2 = TrigScalar::s(2);
    // (c1 + i s1)(c1 - i s1) = c1^2 + s1^2 = 1
    auto i = TrigScalar::from_gaussian(GaussianRational::i());
    CHECK((c1 + i * s1) * (c1 - i * s1) == TrigScalar::one());
    // Commutativity across variables.
    CHECK(c1 * s2 * c2 * s1 == s1 * c2 * s2 * c1);
    CHECK(c1 != c2);
    CHECK((c1 * c1 - TrigScalar::one()) == -(s1 * s1));
}

TEST_CASE("trig scalar substitution at rational angles", "[scalars]") {
    // t = c1 + s1 * x at (cos, sin) = (-1, 0) evaluates to -1.
    auto expr = TrigScalar::c(1);
    CHECK(expr.substitute({{GaussianRational(-1), GaussianRational(0)}}) == GaussianRational(-1));
    auto sq = TrigScalar::s(1) * TrigScalar::s(1);
    // at (0, 1): s^2 -> 1 - c^2 = 1
    CHECK(sq.substitute({{GaussianRational(0), GaussianRational(1)}}) == GaussianRational(1));
    auto conj = (TrigScalar::from_gaussian(GaussianRational::i()) * TrigScalar::s(1)).conj();
    CHECK(conj.substitute({{GaussianRational(0), GaussianRational(1)}}) == -GaussianRational::i());
}
