#include <catch2/catch_amalgamated.hpp>

#include "spindex/twist_conditions.hpp"

using namespace spindex;

TEST_CASE("closed forms for the special ranks", "[twist]") {
    // r = 3: m + u + s = 0 (mod 2)
    CHECK_FALSE(closed_form_condition(RepDescriptor::single(3, 1),
                                      PowerProfile::single(FactorKind::Exterior, 1, 1)));
    CHECK(closed_form_condition(RepDescriptor::single(3, 2),
                                PowerProfile::single(FactorKind::Exterior, 1, 1)));
    CHECK_FALSE(closed_form_condition(RepDescriptor::single(3, 1), PowerProfile::trivial()));
}

TEST_CASE("closed form r4 instances from the congruences", "[twist]") {
    auto d4 = RepDescriptor::two(4, 1, 1);
    auto prof = [&](int u1, int u2, int s, int t) {
        return PowerProfile::pair(d4, FactorKind::Exterior, u1, u2, s, t);
    };
    // (u1, t) and (u2, s) parities against m1 = m2 = 1:
    CHECK(closed_form_condition(d4, prof(1, 1, 0, 0)));        // 1+1+0, 1+1+0
    CHECK_FALSE(closed_form_condition(d4, prof(1, 0, 0, 0)));  // m2+u2+s = 1
    CHECK_FALSE(closed_form_condition(d4, prof(1, 1, 1, 0)));  // m2+u2+s = 3
    CHECK(closed_form_condition(d4, prof(1, 1, 2, 0)));
    CHECK(closed_form_condition(d4, prof(0, 0, 1, 1)));        // 1+0+1 twice
}

TEST_CASE("closed form generic ranks", "[twist]") {
    // r = 1,7 (mod 8), odd multiplicity: everything descends.
    CHECK(closed_form_condition(RepDescriptor::single(7, 1),
                                PowerProfile::single(FactorKind::Exterior, 1, 0)));
    CHECK(closed_form_condition(RepDescriptor::single(9, 3),
                                PowerProfile::single(FactorKind::Symmetric, 2, 1)));
    // even multiplicity: u + s even.
    CHECK_FALSE(closed_form_condition(RepDescriptor::single(7, 2),
                                      PowerProfile::single(FactorKind::Exterior, 1, 0)));
    CHECK(closed_form_condition(RepDescriptor::single(7, 2),
                                PowerProfile::single(FactorKind::Exterior, 1, 1)));
    // r = 5: u + s even regardless of m.
    for (int m = 1; m <= 3; ++m) {
        CHECK(closed_form_condition(RepDescriptor::single(5, m),
                                    PowerProfile::single(FactorKind::Exterior, 0, 0)));
        CHECK_FALSE(closed_form_condition(RepDescriptor::single(5, m),
                                          PowerProfile::single(FactorKind::Exterior, 1, 0)));
    }
}

TEST_CASE("closed form r6 congruences carry the 2m term", "[twist]") {
    // r = 6 differs from the generic r = 6 (mod 8) list by the 2m summand:
    // for odd m the trivial twist fails mod 4, for even m it passes.
    auto d61 = RepDescriptor::single(6, 1);
    auto d62 = RepDescriptor::single(6, 2);
    CHECK_FALSE(closed_form_condition(d61, PowerProfile::trivial()));
    CHECK(closed_form_condition(d62, PowerProfile::trivial()));
    // u1 = 2 restores the mod-4 balance for odd m: 2m + u1 = 4; so does s = 2.
    // (Symmetric powers: Lambda^2 of the 1-dimensional E does not exist.)
    auto u1_2 = PowerProfile::pair(d61, FactorKind::Symmetric, 2, 0, 0, 0);
    auto s_2 = PowerProfile::pair(d61, FactorKind::Symmetric, 0, 0, 2, 0);
    CHECK(closed_form_condition(d61, u1_2));
    CHECK(closed_form_condition(d61, s_2));
    CHECK(oracle_condition(d61, u1_2));
    CHECK(oracle_condition(d61, s_2));
    // u1 = u2 = 1 passes mod 2 but fails mod 4 for odd m.
    auto u11 = PowerProfile::pair(d61, FactorKind::Exterior, 1, 1, 0, 0);
    CHECK_FALSE(closed_form_condition(d61, u11));
    CHECK_FALSE(oracle_condition(d61, u11));
}

TEST_CASE("closed form r8 parity split", "[twist]") {
    auto mixed = RepDescriptor::two(8, 1, 2);
    CHECK_FALSE(closed_form_condition(mixed, PowerProfile::trivial()));
    CHECK(closed_form_condition(mixed, PowerProfile::pair(mixed, FactorKind::Exterior, 0, 1, 0, 0)));
    CHECK(closed_form_condition(mixed, PowerProfile::pair(mixed, FactorKind::Exterior, 3, 0, 2, 1)));

    auto both_odd = RepDescriptor::two(8, 1, 1);
    CHECK(closed_form_condition(both_odd, PowerProfile::trivial()));
    CHECK(closed_form_condition(both_odd, PowerProfile::pair(both_odd, FactorKind::Exterior, 1, 0, 0, 0)));

    auto both_even = RepDescriptor::two(8, 2, 2);
    CHECK(closed_form_condition(both_even, PowerProfile::trivial()));
    CHECK_FALSE(closed_form_condition(both_even, PowerProfile::pair(both_even, FactorKind::Exterior, 1, 0, 0, 0)));
    CHECK(closed_form_condition(both_even, PowerProfile::pair(both_even, FactorKind::Exterior, 1, 0, 1, 0)));
}

TEST_CASE("oracle condition matches the worked instances", "[twist]") {
    auto d3 = RepDescriptor::single(3, 1);
    CHECK_FALSE(oracle_condition(d3, PowerProfile::single(FactorKind::Exterior, 1, 1)));
    CHECK(oracle_condition(RepDescriptor::single(5, 2), PowerProfile::trivial()));
    auto d4 = RepDescriptor::two(4, 1, 1);
    CHECK(oracle_condition(d4, PowerProfile::pair(d4, FactorKind::Exterior, 1, 1, 0, 0)));
    CHECK_FALSE(oracle_condition(d4, PowerProfile::pair(d4, FactorKind::Exterior, 1, 0, 0, 0)));
}

TEST_CASE("oracle agrees with a direct product-enumeration for small cases", "[twist]") {
    // Independent route: expand the full weight multiset of Delta_N (x) F and
    // require value 1 everywhere, for every kernel generator.
    auto direct = [](const RepDescriptor& desc, const PowerProfile& prof) {
        auto etas = tangent_weight_assignment(desc);
        std::vector<Weight> fw{Weight{}};
        for (const auto& lst : twist_weight_lists(desc, prof)) {
            std::vector<Weight> next;
            for (const auto& a : fw)
                for (const auto& b : lst) next.push_back(a + b);
            fw = std::move(next);
        }
        for (const auto& gen : structure_group_generators(desc)) {
            bool ok = true;
            for_each_delta_N_weight(etas, [&](const Weight& half) {
                for (const auto& f : fw)
                    if (!evaluate_weight(half + f, gen.params).is_one()) {
                        ok = false;
                        return false;
                    }
                return true;
            });
            if (!ok) return false;
        }
        return true;
    };

    for (int m = 1; m <= 2; ++m) {
        auto d = RepDescriptor::single(3, m);
        for (int u = 0; u <= 2; ++u)
            for (int s = 0; s <= 2; ++s) {
                auto prof = PowerProfile::single(FactorKind::Exterior, u, s);
                INFO("r=3 m=" << m << " u=" << u << " s=" << s);
                REQUIRE(oracle_condition(d, prof) == direct(d, prof));
            }
    }
    auto d4 = RepDescriptor::two(4, 1, 1);
    for (int u1 = 0; u1 <= 1; ++u1)
        for (int s = 0; s <= 1; ++s)
            for (int t = 0; t <= 1; ++t) {
                auto prof = PowerProfile::pair(d4, FactorKind::Exterior, u1, 0, s, t);
                REQUIRE(oracle_condition(d4, prof) == direct(d4, prof));
            }
}

TEST_CASE("cross validation sweeps agree", "[twist]") {
    // r = 3, m in 1..4, u, s in 0..3: 100% agreement.
    std::vector<RepDescriptor> d3s;
    for (int m = 1; m <= 4; ++m) d3s.push_back(RepDescriptor::single(3, m));
    auto cv3 = cross_validate(d3s, 3);
    CHECK(cv3.agree());
    CHECK(cv3.points > 0);

    // r = 6, m in 1..2, four powers in 0..2.
    std::vector<RepDescriptor> d6s{RepDescriptor::single(6, 1), RepDescriptor::single(6, 2)};
    auto cv6 = cross_validate(d6s, 2);
    CHECK(cv6.agree());

    // empty sweep is vacuous agreement
    auto cv0 = cross_validate({}, 3);
    CHECK(cv0.agree());
    CHECK(cv0.points == 0);
}

TEST_CASE("theorem-3 style mixed products go through the oracle only", "[twist]") {
    auto d5 = RepDescriptor::single(5, 2);
    PowerProfile mixed;
    mixed.factors.push_back({FactorKind::Exterior, 1, false, 1});
    mixed.factors.push_back({FactorKind::Symmetric, 1, false, 1});
    mixed.s = 0;
    CHECK_THROWS_AS(closed_form_condition(d5, mixed), UnsupportedCase);
    // u_total + s = 2: the oracle accepts it.
    CHECK(oracle_condition(d5, mixed));
    mixed.s = 1;
    CHECK_FALSE(oracle_condition(d5, mixed));
}

TEST_CASE("cross validation beyond the acceptance sweep: ranks 10..12", "[twist]") {
    // Exercises the r = 2 (mod 8) branch and the generic r = 3, 4 (mod 8)
    // rows that no rank <= 9 reaches.
    std::vector<RepDescriptor> ds;
    for (int m = 1; m <= 2; ++m) {
        ds.push_back(RepDescriptor::single(10, m));
        ds.push_back(RepDescriptor::single(11, m));
    }
    ds.push_back(RepDescriptor::two(12, 1, 1));
    ds.push_back(RepDescriptor::two(12, 1, 0));
    ds.push_back(RepDescriptor::two(12, 0, 2));
    auto cv = cross_validate(ds, 2);
    INFO((cv.agree() ? std::string("all points agree") : cv.disagreements.front()));
    CHECK(cv.agree());
    CHECK(cv.points > 0);
}

TEST_CASE("enumeration guard trips on oversized sweeps", "[twist]") {
    auto d9 = RepDescriptor::single(9, 3);
    PowerProfile huge = PowerProfile::single(FactorKind::Symmetric, 0, 8); // 16^8 weights
    CHECK_THROWS_AS(oracle_condition(d9, huge), GuardExceeded);
}
