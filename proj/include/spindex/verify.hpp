#ifndef SPINDEX_VERIFY_HPP
#define SPINDEX_VERIFY_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spindex/report.hpp"
#include "spindex/series.hpp"
#include "spindex/spin_matrix.hpp"
#include "spindex/twist_conditions.hpp"

namespace spindex {

struct VerifyOptions {
    unsigned long seed = 7;
    long samples = 200;
    // Optional case filters, honored by the suites that sweep descriptors.
    std::optional<int> r;
    std::optional<int> m;
    std::optional<int> m2;

    bool match(int r_, int m_, int m2_ = -1) const {
        if (r && *r != r_) return false;
        if (m && *m != m_) return false;
        if (m2 && m2_ >= 0 && *m2 != m2_) return false;
        return true;
    }
};

namespace rnd {

inline long integer(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline long nonzero(std::mt19937_64& rng, long mag) {
    long v = integer(rng, 1, mag);
    return integer(rng, 0, 1) ? v : -v;
}

inline Rational rational(std::mt19937_64& rng, long mag = 9) {
    return Rational(nonzero(rng, mag), integer(rng, 1, mag));
}

inline GaussianRational gaussian(std::mt19937_64& rng) {
    return {Rational(integer(rng, -9, 9), integer(rng, 1, 9)),
            Rational(integer(rng, -9, 9), integer(rng, 1, 9))};
}

// Sparse Clifford element with a handful of random blades.
inline CliffordElement<GaussianRational> clifford(std::mt19937_64& rng, int n, int blades = 3) {
    auto x = CliffordElement<GaussianRational>::scalar(n, GaussianRational(0));
    for (int b = 0; b < blades; ++b) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((std::uint32_t{1} << n) - 1);
        x = x + CliffordElement<GaussianRational>::blade(n, mask, gaussian(rng));
    }
    return x;
}

inline CliffordElement<GaussianRational> monomial(std::mt19937_64& rng, int n) {
    std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((std::uint32_t{1} << n) - 1);
    return CliffordElement<GaussianRational>::blade(n, mask, gaussian(rng));
}

} // namespace rnd

// ---------------------------------------------------------------------------

inline Report verify_clifford(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "clifford";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    std::mt19937_64 rng(opt.seed);

    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 10 && ok; ++n) {
            auto minus_two = CliffordElement<GaussianRational>::scalar(n, GaussianRational(-2));
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= n && ok; ++j) {
                    auto ei = CliffordElement<GaussianRational>::generator(n, i);
                    auto ej = CliffordElement<GaussianRational>::generator(n, j);
                    auto anti = ei * ej + ej * ei;
                    auto want = i == j ? minus_two : CliffordElement<GaussianRational>(n);
                    if (anti != want) {
                        ok = false;
                        witness = "n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," +
                                  std::to_string(j) + ")";
                    }
                }
        }
        rep.add("clifford-relations-n<=10", "2.1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 3; n <= 8 && ok; ++n)
            for (long s = 0; s < opt.samples && ok; ++s) {
                auto x = rnd::clifford(rng, n);
                auto y = rnd::clifford(rng, n);
                auto z = rnd::clifford(rng, n);
                if ((x * y) * z != x * (y * z)) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " sample " + std::to_string(s);
                }
            }
        rep.add("associativity-random-triples", "2.1", ok, witness);
    }
    {
        bool ok = true;
        for (int n = 3; n <= 8 && ok; ++n)
            for (long s = 0; s < opt.samples / 4 + 1 && ok; ++s) {
                auto x = rnd::clifford(rng, n);
                auto y = rnd::clifford(rng, n);
                ok = reversal(x * y) == reversal(y) * reversal(x);
            }
        rep.add("reversal-anti-automorphism", "2.2.2", ok);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 10 && ok; ++n) {
            auto v = volume_element(n);
            int sign = ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
            auto want = CliffordElement<GaussianRational>::scalar(n, GaussianRational(sign));
            if (v * v != want) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        }
        rep.add("volume-element-square-sign", "2.1", ok, witness);
    }
    {
        // Conjugation by torus elements preserves the degree-1 space and the
        // quadratic form (formally, as TrigScalar identities).
        bool ok = true;
        std::string witness;
        for (int k = 1; k <= 3 && ok; ++k) {
            int n = 2 * k;
            auto g = torus_spin_element(k, n);
            std::vector<std::vector<TrigScalar>> images;
            for (int i = 1; i <= n; ++i) {
                auto img = vector_conjugation(g, CliffordElement<TrigScalar>::generator(n, i));
                std::vector<TrigScalar> col(static_cast<size_t>(n), TrigScalar::zero());
                for (const auto& [mask, c] : img.terms()) {
                    int idx = std::countr_zero(mask);
                    col[static_cast<size_t>(idx)] = c;
                }
                images.push_back(std::move(col));
            }
            for (int i = 0; i < n && ok; ++i)
                for (int j = i; j < n && ok; ++j) {
                    TrigScalar dot = TrigScalar::zero();
                    for (int a = 0; a < n; ++a) dot += images[i][a] * images[j][a];
                    TrigScalar want = i == j ? TrigScalar::one() : TrigScalar::zero();
                    if (dot != want) {
                        ok = false;
                        witness = "k=" + std::to_string(k) + " (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")";
                    }
                }
        }
        rep.add("conjugation-preserves-quadratic-form", "2.2.2", ok, witness);
    }
    return rep;
}

inline Report verify_spin(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "spin";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    std::mt19937_64 rng(opt.seed);

    {
        bool ok = true;
        std::string witness;
        for (int n = 2; n <= 8 && ok; ++n) {
            int dim = 1 << spinor_rank(n);
            auto id = SpinMatrix<GaussianRational>::identity(dim);
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= n && ok; ++j) {
                    auto a = kappa_generator(n, i);
                    auto b = kappa_generator(n, j);
                    auto anti = a * b + b * a;
                    auto want = i == j ? (-id) + (-id) : SpinMatrix<GaussianRational>::zero(dim);
                    if (anti != want) {
                        ok = false;
                        witness = "n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")";
                    }
                }
        }
        rep.add("kappa-generator-anticommutation", "2.1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        long pairs = opt.samples / 2;
        for (int n = 2; n <= 8 && ok; ++n)
            for (long s = 0; s < pairs && ok; ++s) {
                auto x = rnd::monomial(rng, n);
                auto y = rnd::monomial(rng, n);
                if (kappa(x * y) != kappa(x) * kappa(y)) {
                    ok = false;
                    witness = "n=" + std::to_string(n);
                }
            }
        rep.add("kappa-multiplicative-on-monomials", "2.1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 2; n <= 8 && ok; n += 2) {
            auto cs = chirality_split(n);
            int want = 1 << (n / 2 - 1);
            if (cs.rank_plus != want || cs.rank_minus != want) {
                ok = false;
                witness = "n=" + std::to_string(n) + " ranks " + std::to_string(cs.rank_plus) + "/" +
                          std::to_string(cs.rank_minus);
            }
        }
        rep.add("chirality-halves-equal-rank", "2.1", ok, witness);
    }
    return rep;
}

inline Report verify_volume_table(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "volume-table";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    // vol_n eigenvalue on the +/- halves per residue: 0 -> (1,-1), 2 -> (i,-i),
    // 4 -> (-1,1), 6 -> (-i,i).
    for (int n = 2; n <= 8; n += 2) {
        auto cs = chirality_split(n);
        GaussianRational plus = i_power(n / 2);
        bool ok = cs.vol_eigenvalue_plus == plus && cs.vol_eigenvalue_minus == -plus;
        // And the chirality halves verify against the table by direct action:
        auto vol = kappa(volume_element(n));
        auto u_top = weight_spinor(std::vector<int>(static_cast<size_t>(n / 2), 1));
        std::vector<GaussianRational> want;
        want.reserve(u_top.coords.size());
        for (const auto& c : u_top.coords) want.push_back(plus * c);
        ok = ok && vol.apply(u_top.coords) == want;
        rep.add("volume-eigenvalues-n=" + std::to_string(n), "2.1", ok,
                ok ? "Delta+: " + plus.str() + ", Delta-: " + (-plus).str() : "mismatch");
    }
    return rep;
}

inline Report verify_kernels(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "kernels";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (int r : {8, 12}) {
        if (opt.r && *opt.r != r) continue;
        if (2 * (r / 2) > config::max_dimension()) {
            rep.skip("kernel-r=" + std::to_string(r), "2.1", "dimension cap below r");
            continue;
        }
        auto kc = kernel_check(r);
        rep.add("kernel-r=" + std::to_string(r), "2.1", kc.pass, kc.detail);
    }
    return rep;
}

inline Report verify_torus_weights(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "torus-weights";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (int k = 1; k <= 4; ++k) {
        auto t = torus_spin_element(k);
        auto unit = t * reversal(t);
        bool ok = unit == CliffordElement<TrigScalar>::scalar(2 * k, TrigScalar::one());
        rep.add("torus-element-unit-k=" + std::to_string(k), "2.2.2", ok);
    }
    for (int n = 2; n <= 8; n += 2) {
        auto res = weight_eigencheck(n);
        std::string witness;
        for (const auto& f : res.failures) witness += f + "; ";
        rep.add("weight-eigencheck-n=" + std::to_string(n), "2.2.2", res.pass, witness);
    }
    return rep;
}

inline Report verify_structure_actions(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "structure-actions";
    rep.seed = opt.seed;
    rep.samples = opt.samples;

    auto scalar_value = [](const RepDescriptor& d, const std::string& gen_name) -> std::string {
        for (const auto& g : structure_group_generators(d))
            if (g.name == gen_name) {
                auto act = action_on_delta_N(d, g.params);
                return act.scalar ? act.value.str() : act.str();
            }
        return "<generator not found>";
    };

    // r = 3: (-Id,-1) acts by (-1)^m.
    for (int m = 1; m <= 3; ++m) {
        if (!opt.match(3, m)) continue;
        auto d = RepDescriptor::single(3, m);
        std::string got = scalar_value(d, "(-Id,-1)");
        std::string want = m % 2 ? "-1" : "1";
        rep.add("r3-m" + std::to_string(m) + "-minus-one-action", "3.2.1", got == want,
                "got " + got + ", want " + want);
    }
    // r = 4: the three listed elements act by (-1)^(m1+m2), (-1)^m2, (-1)^m1.
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2) {
            if (!opt.match(4, m1, m2)) continue;
            auto d = RepDescriptor::two(4, m1, m2);
            struct Row { const char* gen; int parity; } rows[] = {
                {"(-Id,-Id,-1)", (m1 + m2) % 2}, {"(Id,-Id,vol)", m2 % 2}, {"(-Id,Id,-vol)", m1 % 2}};
            for (const auto& row : rows) {
                std::string got = scalar_value(d, row.gen);
                std::string want = row.parity ? "-1" : "1";
                rep.add("r4-m" + std::to_string(m1) + std::to_string(m2) + "-" + row.gen, "3.2.2",
                        got == want, "got " + got + ", want " + want);
            }
        }
    // r = 6: (-Id,-1) acts trivially, (i Id,-vol) by (-1)^m.
    for (int m = 1; m <= 2; ++m) {
        if (!opt.match(6, m)) continue;
        auto d = RepDescriptor::single(6, m);
        std::string g1v = scalar_value(d, "(-Id,-1)");
        std::string g2v = scalar_value(d, "(i*Id,-vol)");
        rep.add("r6-m" + std::to_string(m) + "-minus-one-action", "3.2.3", g1v == "1", "got " + g1v);
        std::string want = m % 2 ? "-1" : "1";
        rep.add("r6-m" + std::to_string(m) + "-ivol-action", "3.2.3", g2v == want,
                "got " + g2v + ", want " + want);
    }
    // r = 8 mixed parity: the generator acts by -1.
    for (auto [m1, m2] : {std::pair{1, 2}, std::pair{2, 1}}) {
        if (!opt.match(8, m1, m2)) continue;
        auto d = RepDescriptor::two(8, m1, m2);
        auto gens = structure_group_generators(d);
        bool ok = gens.size() == 1;
        std::string got;
        if (ok) {
            auto act = action_on_delta_N(d, gens[0].params);
            got = act.scalar ? act.value.str() : act.str();
            ok = act.scalar && got == "-1";
        }
        rep.add("r8-m" + std::to_string(m1) + std::to_string(m2) + "-generator-action", "3.2.4", ok,
                "got " + got);
    }

    // Tangent-triviality across all supported cases r <= 9, multiplicities <= 3.
    {
        bool ok = true;
        std::string witness;
        long cases = 0;
        for (int r = 3; r <= 9 && ok; ++r) {
            std::vector<RepDescriptor> ds;
            if (r % 4 == 0) {
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b) {
                        if (a + b == 0 || (r == 4 && (a == 0 || b == 0))) continue;
                        if (!opt.match(r, a, b)) continue;
                        ds.push_back(RepDescriptor::two(r, a, b));
                    }
            } else {
                for (int m = 1; m <= 3; ++m)
                    if (opt.match(r, m)) ds.push_back(RepDescriptor::single(r, m));
            }
            for (const auto& d : ds) {
                ++cases;
                auto etas = tangent_weight_assignment(d);
                for (const auto& g : structure_group_generators(d))
                    for (const auto& eta : etas)
                        if (!evaluate_weight(eta, g.params).is_one()) {
                            ok = false;
                            witness = d.str() + " " + g.name + " on " + eta.str();
                        }
            }
        }
        rep.add("tangent-triviality-sweep", "3.1", ok,
                ok ? std::to_string(cases) + " cases" : witness);
    }

    // Scalarness: generators act as scalars on Delta_N; for N <= 24 the full
    // weight enumeration must agree with the per-root criterion.
    {
        bool ok = true;
        std::string witness;
        for (int r = 3; r <= 9 && ok; ++r) {
            std::vector<RepDescriptor> ds;
            if (r % 4 == 0) {
                for (int a = 1; a <= 3; ++a)
                    for (int b = 1; b <= 3; ++b)
                        if (opt.match(r, a, b)) ds.push_back(RepDescriptor::two(r, a, b));
            } else {
                for (int m = 1; m <= 3; ++m)
                    if (opt.match(r, m)) ds.push_back(RepDescriptor::single(r, m));
            }
            for (const auto& d : ds) {
                if (d.dim_N() > 24) continue;
                auto etas = tangent_weight_assignment(d);
                for (const auto& g : structure_group_generators(d)) {
                    auto smart = action_on_delta_N(d, g.params);
                    bool first = true;
                    RootOfUnity val;
                    bool scalar = true;
                    for_each_delta_N_weight(etas, [&](const Weight& w) {
                        RootOfUnity v = evaluate_weight(w, g.params);
                        if (first) {
                            val = v;
                            first = false;
                        } else if (v != val) {
                            scalar = false;
                            return false;
                        }
                        return true;
                    });
                    if (scalar != smart.scalar || (scalar && val != smart.value)) {
                        ok = false;
                        witness = d.str() + " " + g.name;
                    }
                }
            }
        }
        rep.add("delta-N-scalarness-full-enumeration", "3.2", ok, witness);
    }
    return rep;
}

inline Report verify_twist_tables(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "twist-tables";
    rep.seed = opt.seed;
    rep.samples = opt.samples;

    std::vector<RepDescriptor> descs;
    for (int r = 3; r <= 9; ++r) {
        if (r % 4 == 0) {
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b) descs.push_back(RepDescriptor::two(r, a, b));
        } else {
            for (int m = 1; m <= 3; ++m) descs.push_back(RepDescriptor::single(r, m));
        }
    }
    auto cv = cross_validate(descs, 3);
    std::string witness = std::to_string(cv.points) + " points, " + std::to_string(cv.skipped) + " skipped";
    if (!cv.agree()) witness = cv.disagreements.front();
    rep.add("closed-form-vs-oracle", "3.3", cv.agree(), witness);

    // Stability: bumping any single power by 2 preserves the verdict in the
    // mod-2 governed cases.
    {
        bool ok = true;
        std::string witness2;
        for (int r : {3, 5, 7, 9}) {
            for (int m = 1; m <= 3 && ok; ++m) {
                auto d = RepDescriptor::single(r, m);
                for (int u = 0; u <= 2 && ok; ++u)
                    for (int s = 0; s <= 2 && ok; ++s) {
                        auto base = PowerProfile::single(FactorKind::Symmetric, u, s);
                        auto up2 = PowerProfile::single(FactorKind::Symmetric, u + 2, s);
                        auto sp2 = PowerProfile::single(FactorKind::Symmetric, u, s + 2);
                        bool a = closed_form_condition(d, base);
                        if (a != closed_form_condition(d, up2) || a != closed_form_condition(d, sp2)) {
                            ok = false;
                            witness2 = d.str() + " u=" + std::to_string(u) + " s=" + std::to_string(s);
                        }
                    }
            }
        }
        rep.add("mod2-stability", "3.3", ok, witness2);
    }

    // r = 3 equals the classical almost quaternion-Hermitian parity rule.
    {
        bool ok = true;
        for (int m = 1; m <= 4 && ok; ++m)
            for (int u = 0; u <= 3 && ok; ++u)
                for (int s = 0; s <= 3 && ok; ++s) {
                    auto d = RepDescriptor::single(3, m);
                    bool want = (m + u + s) % 2 == 0;
                    ok = closed_form_condition(d, PowerProfile::single(FactorKind::Symmetric, u, s)) == want;
                }
        rep.add("r3-classical-parity-rule", "3.2.1", ok);
    }
    return rep;
}

inline Report verify_lemma(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "lemma";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    std::mt19937_64 rng(opt.seed);

    // G(z) = z^k / (z^-m c - z^m c^-1) with k, m half-integers, k + m integral.
    auto build = [](const Rational& k, const Rational& m, const Rational& c) {
        HalfIntLaurent num = HalfIntLaurent::z_power(k);
        HalfIntLaurent den =
            HalfIntLaurent::z_power(-m).scaled(c) - HalfIntLaurent::z_power(m).scaled(Rational(1) / c);
        return RationalFunction(num, den);
    };

    {
        bool ok = true;
        std::string witness;
        long n = 0;
        while (n < opt.samples) {
            long twom = rnd::nonzero(rng, 12);          // 2m != 0
            long twok_mag = std::abs(twom) - 1;         // |k| < |m|
            long twok = twok_mag == 0 ? 0 : rnd::integer(rng, -twok_mag, twok_mag);
            if ((twok + twom) % 2 != 0) continue;       // k + m must be integral
            Rational k(twok, 2), m(twom, 2);
            Rational c = rnd::rational(rng);
            auto [l0, linf] = limits(build(k, m, c));
            ++n;
            if (!l0.is_zero() || !linf.is_zero()) {
                ok = false;
                witness = "k=" + k.str() + " m=" + m.str() + " c=" + c.str();
                break;
            }
        }
        rep.add("lemma-strict-limits-zero", "2.4", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        long boundary = std::max<long>(opt.samples / 10, 10);
        for (long i = 0; i < boundary && ok; ++i) {
            long twom = rnd::nonzero(rng, 12);
            long twok = rnd::integer(rng, 0, 1) ? twom : -twom; // |k| = |m|
            Rational k(twok, 2), m(twom, 2);
            Rational c = rnd::rational(rng);
            auto [l0, linf] = limits(build(k, m, c));
            if (l0.is_zero() && linf.is_zero()) {
                ok = false;
                witness = "k=" + k.str() + " m=" + m.str() + " c=" + c.str();
            }
        }
        rep.add("lemma-boundary-nonzero", "2.4", ok, witness);
    }
    {
        // Link to localization: strict fundamental inequality forces both
        // contribution limits to vanish.
        bool ok = true;
        std::string witness;
        for (long i = 0; i < opt.samples && ok; ++i) {
            FixedPointDatum fp;
            fp.name = "rnd" + std::to_string(i);
            int len = static_cast<int>(rnd::integer(rng, 1, 6));
            Rational sum(0), abs_sum(0);
            for (int j = 0; j < len; ++j) {
                Rational q(rnd::nonzero(rng, 9));
                fp.tangent_exponents.push_back(q);
                sum += q;
                abs_sum += q.abs();
            }
            Rational half = abs_sum * Rational(1, 2);
            Rational base = (sum * Rational(1, 2)).mod(Rational(1)); // 0 or 1/2
            // twists congruent to (sum q)/2 mod 1, strictly inside (-half, half)
            int twists = static_cast<int>(rnd::integer(rng, 1, 3));
            for (int kk = 0; kk < twists; ++kk) {
                for (int attempt = 0; attempt < 8; ++attempt) {
                    Rational n_val = base + Rational(rnd::integer(rng, -9, 9));
                    if (n_val.abs() < half) {
                        fp.twist_exponents.push_back(n_val);
                        break;
                    }
                }
            }
            auto [l0, linf] = limits(contribution(fp));
            if (!l0.is_zero() || !linf.is_zero()) {
                ok = false;
                witness = fp.name;
            }
        }
        rep.add("strict-inequality-forces-zero-limits", "4.3", ok, witness);
    }
    return rep;
}

inline Report verify_all(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "all";
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    for (const auto& sub : {verify_clifford(opt), verify_spin(opt), verify_volume_table(opt),
                            verify_kernels(opt), verify_torus_weights(opt), verify_structure_actions(opt),
                            verify_twist_tables(opt), verify_lemma(opt)})
        rep.merge(sub);
    return rep;
}

inline Report run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "clifford") return verify_clifford(opt);
    if (name == "spin") return verify_spin(opt);
    if (name == "volume-table") return verify_volume_table(opt);
    if (name == "kernels") return verify_kernels(opt);
    if (name == "torus-weights") return verify_torus_weights(opt);
    if (name == "structure-actions") return verify_structure_actions(opt);
    if (name == "twist-tables") return verify_twist_tables(opt);
    if (name == "lemma") return verify_lemma(opt);
    if (name == "all") return verify_all(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "clifford", "spin", "volume-table", "kernels", "torus-weights",
        "structure-actions", "twist-tables", "lemma", "all"};
    return names;
}

} // namespace spindex

#endif
