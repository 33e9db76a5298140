#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spindex/laurent.hpp"

using namespace spindex;

namespace {
HalfIntLaurent w(long p, long num = 1, long den = 1) {
    return HalfIntLaurent::monomial(p, Rational(num, den));
}
} // namespace

TEST_CASE("laurent basics", "[laurent]") {
    auto p = w(-1) + w(1, -1); // w^-1 - w
    CHECK(p.ord() == -1);
    CHECK(p.deg() == 1);
    CHECK(p.coeff(1) == Rational(-1));
    CHECK((p + (-p)).is_zero());
    CHECK((p * w(2)) == w(1) + w(3, -1));
    CHECK(p.all_powers_even() == false);
    CHECK((w(2) + w(-4)).all_powers_even());
    CHECK(HalfIntLaurent::z_power(Rational(3, 2)) == w(3));
    CHECK_THROWS_AS(HalfIntLaurent::z_power(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("exact laurent division", "[laurent]") {
    auto p = w(-1) + w(1, -1);
    auto sq = p * p;
    auto q = HalfIntLaurent::divide_exact(sq, p);
    REQUIRE(q);
    CHECK(*q == p);
    CHECK_FALSE(HalfIntLaurent::divide_exact(w(2), p));
    auto z = HalfIntLaurent::divide_exact(HalfIntLaurent{}, p);
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_THROWS_AS(HalfIntLaurent::divide_exact(p, HalfIntLaurent{}), std::domain_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        HalfIntLaurent a, b;
        for (int t = 0; t < 3; ++t) {
            a = a + w(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
            b = b + w(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
        }
        if (a.is_zero() || b.is_zero()) continue;
        auto prod = a * b;
        auto back = HalfIntLaurent::divide_exact(prod, b);
        REQUIRE(back);
        REQUIRE(*back == a);
    }
}

TEST_CASE("rational function normalization and equality", "[laurent]") {
    auto p = w(-1) + w(1, -1);
    RationalFunction f(HalfIntLaurent::one(), p);
    // Scaling numerator and denominator together changes nothing.
    RationalFunction g(w(3, 2), p * w(3, 2));
    CHECK(f == g);
    CHECK(f != RationalFunction::from_laurent(w(0)));
    auto sum = f + (-f);
    CHECK(sum.is_zero());
    CHECK((f * RationalFunction::from_laurent(p)) == RationalFunction::from_laurent(HalfIntLaurent::one()));
    CHECK_THROWS_AS(RationalFunction(w(1), HalfIntLaurent{}), std::domain_error);
}

TEST_CASE("limits by degree comparison", "[laurent]") {
    // 1/(w^-1 - w): zero at both ends.
    RationalFunction f(HalfIntLaurent::one(), w(-1) + w(1, -1));
    auto [a0, ai] = limits(f);
    CHECK(a0.is_zero());
    CHECK(ai.is_zero());

    // w^4 / (1 - w^2)^2: zero at 0, limit 1 at infinity.
    auto den = (HalfIntLaurent::one() + w(2, -1)) * (HalfIntLaurent::one() + w(2, -1));
    auto [b0, bi] = limits(RationalFunction(w(4), den));
    CHECK(b0.is_zero());
    CHECK_FALSE(bi.divergent);
    CHECK(bi.value == Rational(1));

    // constants
    auto [c0, ci] = limits(RationalFunction::from_laurent(w(0, 5)));
    CHECK(c0.value == Rational(5));
    CHECK(ci.value == Rational(5));

    // divergence at infinity
    auto [d0, di] = limits(RationalFunction(w(3), w(-1) + w(1, -1)));
    CHECK(d0.is_zero());
    CHECK(di.divergent);

    // zero function
    auto [e0, ei] = limits(RationalFunction::zero());
    CHECK(e0.is_zero());
    CHECK(ei.is_zero());
}

TEST_CASE("useful-lemma classification", "[laurent]") {
    // G(z) = z^k / (z^-m c - z^m c^-1), k, m half-integers with k + m integral.
    auto build = [](Rational k, Rational m, Rational c) {
        return RationalFunction(HalfIntLaurent::z_power(k),
                                HalfIntLaurent::z_power(-m).scaled(c) -
                                    HalfIntLaurent::z_power(m).scaled(Rational(1) / c));
    };
    std::mt19937_64 rng(7);
    long strict = 0;
    while (strict < 500) {
        long twom = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 12));
        long mag = std::labs(twom) - 1;
        long twok = mag == 0 ? 0 : static_cast<long>(rng() % (2 * mag + 1)) - mag;
        if ((twok + twom) % 2 != 0) continue;
        Rational c(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
        if (rng() % 2) c = -c;
        auto [l0, li] = limits(build(Rational(twok, 2), Rational(twom, 2), c));
        REQUIRE(l0.is_zero());
        REQUIRE(li.is_zero());
        ++strict;
    }
    for (long i = 0; i < 50; ++i) {
        long twom = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 12));
        long twok = rng() % 2 ? twom : -twom;
        Rational c(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 9));
        auto [l0, li] = limits(build(Rational(twok, 2), Rational(twom, 2), c));
        REQUIRE((!l0.is_zero() || !li.is_zero()));
    }
}

TEST_CASE("printing in w and z", "[laurent]") {
    auto p = w(2, -1) + w(0, 1);
    CHECK(p.str() == "-w^2 + 1");
    CHECK(p.str_z() == "-z + 1");
    CHECK((w(1) + w(0)).str_z() == "w + 1"); // odd powers stay in w
    CHECK(HalfIntLaurent{}.str() == "0");
}
