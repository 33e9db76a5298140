// Acceptance suite: runs every criterion exactly (zero tolerance) and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spindex/fixed_point_io.hpp"
#include "spindex/series.hpp"
#include "spindex/spin_matrix.hpp"
#include "spindex/twist_conditions.hpp"
#include "spindex/verify.hpp"

using namespace spindex;

namespace {

int failures = 0;
int criterion = 0;

void report(const std::string& what, bool ok, const std::string& detail = "") {
    ++criterion;
    std::printf("[%2d/13] %s -- %s%s%s\n", criterion, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

bool run_to_bool(const std::function<bool()>& fn, std::string& detail) {
    try {
        return fn();
    } catch (const std::exception& e) {
        detail = e.what();
        return false;
    }
}

void check(const std::string& what, const std::function<bool()>& fn) {
    std::string detail;
    bool ok = run_to_bool(fn, detail);
    report(what, ok, detail);
}

std::vector<RepDescriptor> supported_descriptors(int r_max, int m_max) {
    std::vector<RepDescriptor> ds;
    for (int r = 3; r <= r_max; ++r) {
        if (r % 4 == 0) {
            for (int a = 0; a <= m_max; ++a)
                for (int b = 0; b <= m_max; ++b) {
                    if (a + b == 0 || (r == 4 && (a == 0 || b == 0))) continue;
                    ds.push_back(RepDescriptor::two(r, a, b));
                }
        } else {
            for (int m = 1; m <= m_max; ++m) ds.push_back(RepDescriptor::single(r, m));
        }
    }
    return ds;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(SPINDEX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = out;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

} // namespace

int main() {
    // 1. Clifford relations and associativity.
    check("Clifford relations (n <= 10) and associativity (200 triples per n in 3..8)", [] {
        std::mt19937_64 rng(7);
        for (int n = 1; n <= 10; ++n) {
            auto minus_two = CliffordElement<GaussianRational>::scalar(n, GaussianRational(-2));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto ei = CliffordElement<GaussianRational>::generator(n, i);
                    auto ej = CliffordElement<GaussianRational>::generator(n, j);
                    auto anti = ei * ej + ej * ei;
                    if (i == j ? anti != minus_two : !anti.is_zero()) return false;
                }
        }
        for (int n = 3; n <= 8; ++n)
            for (int trial = 0; trial < 200; ++trial) {
                auto x = rnd::clifford(rng, n), y = rnd::clifford(rng, n), z = rnd::clifford(rng, n);
                if ((x * y) * z != x * (y * z)) return false;
            }
        return true;
    });

    // 2. Representation fidelity.
    check("kappa multiplicative (100 monomial pairs per n <= 8) and matrix anticommutation", [] {
        std::mt19937_64 rng(7);
        for (int n = 2; n <= 8; ++n) {
            int dim = 1 << spinor_rank(n);
            auto id = SpinMatrix<GaussianRational>::identity(dim);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto a = kappa_generator(n, i);
                    auto b = kappa_generator(n, j);
                    auto anti = a * b + b * a;
                    if (i == j ? anti != (-id) + (-id) : anti != SpinMatrix<GaussianRational>::zero(dim))
                        return false;
                }
            for (int trial = 0; trial < 100; ++trial) {
                auto x = rnd::monomial(rng, n);
                auto y = rnd::monomial(rng, n);
                if (kappa(x * y) != kappa(x) * kappa(y)) return false;
            }
        }
        return true;
    });

    // 3. Volume table.
    check("volume-element eigenvalue table with u_{1,..,1} positive (n = 2,4,6,8)", [] {
        for (int n = 2; n <= 8; n += 2) {
            auto cs = chirality_split(n); // asserts u_{1,..,1} in the + half
            GaussianRational want = i_power(n / 2);
            if (cs.vol_eigenvalue_plus != want || cs.vol_eigenvalue_minus != -want) return false;
            if (cs.rank_plus != (1 << (n / 2 - 1)) || cs.rank_minus != cs.rank_plus) return false;
        }
        return true;
    });

    // 4. Kernels at r = 8.
    check("ker(kappa+) = {1, vol_8}, ker(kappa-) = {1, -vol_8} on all four elements", [] {
        auto kc = kernel_check(8);
        return kc.pass && kc.plus_actions[0] == HalfAction::Identity &&
               kc.plus_actions[1] == HalfAction::MinusIdentity &&
               kc.plus_actions[2] == HalfAction::Identity &&
               kc.plus_actions[3] == HalfAction::MinusIdentity &&
               kc.minus_actions[2] == HalfAction::MinusIdentity &&
               kc.minus_actions[3] == HalfAction::Identity;
    });

    // 5. Torus weights, formally.
    check("weight eigencheck (TrigScalar identity) for n = 2,4,6,8 with index reversal", [] {
        for (int n = 2; n <= 8; n += 2)
            if (!weight_eigencheck(n).pass) return false;
        return true;
    });

    // 6. Sign computations.
    check("finite-element actions: r=3 (-1)^m; r=4 triple; r=6 pair; r=8 mixed -1", [] {
        auto value_of = [](const RepDescriptor& d, const std::string& name, RootOfUnity want) {
            for (const auto& g : structure_group_generators(d))
                if (g.name == name) {
                    auto act = action_on_delta_N(d, g.params);
                    return act.scalar && act.value == want;
                }
            return false;
        };
        auto pm = [](int p) { return p % 2 ? RootOfUnity::minus_one() : RootOfUnity::one(); };
        for (int m = 1; m <= 3; ++m)
            if (!value_of(RepDescriptor::single(3, m), "(-Id,-1)", pm(m))) return false;
        for (int m1 = 1; m1 <= 2; ++m1)
            for (int m2 = 1; m2 <= 2; ++m2) {
                auto d = RepDescriptor::two(4, m1, m2);
                if (!value_of(d, "(-Id,-Id,-1)", pm(m1 + m2))) return false;
                if (!value_of(d, "(Id,-Id,vol)", pm(m2))) return false;
                if (!value_of(d, "(-Id,Id,-vol)", pm(m1))) return false;
            }
        for (int m = 1; m <= 2; ++m) {
            auto d = RepDescriptor::single(6, m);
            if (!value_of(d, "(-Id,-1)", RootOfUnity::one())) return false;
            if (!value_of(d, "(i*Id,-vol)", pm(m))) return false;
        }
        if (!value_of(RepDescriptor::two(8, 1, 2), "(Id,-Id,vol)", RootOfUnity::minus_one()))
            return false;
        if (!value_of(RepDescriptor::two(8, 2, 1), "(-Id,Id,-vol)", RootOfUnity::minus_one()))
            return false;
        return true;
    });

    // 7. Tangent-triviality.
    check("tangent-triviality for all supported r <= 9, multiplicities <= 3", [] {
        for (const auto& d : supported_descriptors(9, 3)) {
            auto etas = tangent_weight_assignment(d);
            for (const auto& g : structure_group_generators(d))
                for (const auto& eta : etas)
                    if (!evaluate_weight(eta, g.params).is_one()) return false;
        }
        return true;
    });

    // 8. Descent cross-validation.
    {
        std::string note;
        check("closed form == oracle on the full sweep (r in 3..9, powers <= 3)", [&note] {
            auto cv = cross_validate(supported_descriptors(9, 3), 3);
            note = std::to_string(cv.points) + " points evaluated, " + std::to_string(cv.skipped) +
                   " skipped by guards";
            if (!cv.agree()) note = cv.disagreements.front();
            return cv.agree() && cv.points > 0;
        });
        std::printf("        (%s)\n", note.c_str());
    }

    // 9. Lemma suite.
    check("useful-lemma limits: 500 strict instances zero, 50 boundary instances nonzero", [] {
        VerifyOptions opt;
        opt.seed = 7;
        opt.samples = 500;
        auto rep = verify_lemma(opt);
        for (const auto& c : rep.checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    });

    // 10. Localization.
    check("two-point sphere datum sums to 0; lone point not Laurent; 200 strict random limits",
          [] {
              FixedPointDatum north{"N", {1, 1}, {}};
              FixedPointDatum south{"S", {1, Rational(-1)}, {}};
              auto idx = equivariant_index({north, south});
              if (idx.classification != IndexClassification::Zero) return false;
              if (equivariant_index({north}).classification != IndexClassification::NotLaurent)
                  return false;
              std::mt19937_64 rng(7);
              for (int trial = 0; trial < 200; ++trial) {
                  FixedPointDatum fp;
                  fp.name = "P";
                  int len = 1 + static_cast<int>(rng() % 6);
                  long abs_sum = 0, sum = 0;
                  for (int j = 0; j < len; ++j) {
                      long q = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 9));
                      fp.tangent_exponents.push_back(Rational(q));
                      abs_sum += std::labs(q);
                      sum += q;
                  }
                  Rational base = Rational(sum, 2).mod(Rational(1));
                  for (int t = 0; t < 2; ++t)
                      for (int attempt = 0; attempt < 10; ++attempt) {
                          Rational n = base + Rational(static_cast<long>(rng() % 19) - 9);
                          if (n.abs() < Rational(abs_sum, 2)) {
                              fp.twist_exponents.push_back(n);
                              break;
                          }
                      }
                  if (!satisfies_inequality(fp).all_strict) return false;
                  auto [l0, li] = limits(contribution(fp));
                  if (!l0.is_zero() || !li.is_zero()) return false;
              }
              return true;
          });

    // 11. Twist-exponent machinery for the vanishing theorems.
    check("twist exponents obey the strict inequality (r in {3,5,7}, 100 assignments)", [] {
        std::mt19937_64 rng(7);
        for (int r : {3, 5, 7})
            for (int m = 1; m <= 3; ++m) {
                auto d = RepDescriptor::single(r, m);
                for (int trial = 0; trial < 100; ++trial) {
                    CircleData data;
                    for (int j = 0; j < d.torus_coord_count(1); ++j)
                        data.t1.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 9)));
                    for (int j = 0; j < d.k(); ++j)
                        data.f.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 9)));
                    auto q = generate_tangent_exponents(d, data);
                    Rational half(0);
                    for (const auto& x : q) half += x.abs();
                    half = half * Rational(1, 2);
                    for (int u = 0; u < m; ++u)
                        for (int s = 0; u + s < m; ++s) {
                            // Theorem-1 profile (exterior powers).
                            if (u <= d.standard_dim(1)) {
                                for (const auto& n : generate_twist_exponents(
                                         d, PowerProfile::single(FactorKind::Exterior, u, s), data))
                                    if (!(n.abs() < half)) return false;
                            }
                            // Theorem-2 profile (symmetric powers, u <= 2^([r/2]-1)).
                            if (u <= (1 << (d.k() - 1))) {
                                for (const auto& n : generate_twist_exponents(
                                         d, PowerProfile::single(FactorKind::Symmetric, u, s), data))
                                    if (!(n.abs() < half)) return false;
                            }
                        }
                }
            }
        return true;
    });

    // 12. Genus series.
    check("genus factor coefficients through degree 8 match the Bernoulli oracle; r=3 truncation",
          [] {
              // Oracle: e^(x/2) * x/(e^x - 1) with Bernoulli numbers from the
              // defining recurrence.
              int D = 8;
              std::vector<Rational> b(static_cast<size_t>(D) + 1, Rational(0));
              b[0] = Rational(1);
              for (int n = 1; n <= D; ++n) {
                  Rational acc(0), binom(1);
                  for (int j = 0; j < n; ++j) {
                      acc += binom * b[static_cast<size_t>(j)];
                      binom = binom * Rational(n + 1 - j) / Rational(j + 1);
                  }
                  b[static_cast<size_t>(n)] = -acc / binom;
              }
              PowerSeries x_over(D), exp_half(D);
              Rational fact(1), f2(1), pw(1);
              for (int n = 0; n <= D; ++n) {
                  if (n > 0) fact *= Rational(n);
                  x_over.coeff(n) = b[static_cast<size_t>(n)] / fact;
              }
              for (int n = 0; n <= D; ++n) {
                  if (n > 0) {
                      f2 *= Rational(n);
                      pw = pw * Rational(1, 2);
                  }
                  exp_half.coeff(n) = pw / f2;
              }
              auto oracle = exp_half * x_over;
              auto mine = ahat_factor_series(D);
              for (int n = 0; n <= D; ++n)
                  if (mine.coeff(n) != oracle.coeff(n)) return false;

              auto g = formal_genus_truncation(RepDescriptor::single(3, 1), std::nullopt, 2);
              return g.coeff({0, 0}) == Rational(1) && g.coeff({2, 0}) == Rational(-1, 12) &&
                     g.coeff({0, 2}) == Rational(-1, 48) && g.terms().size() == 3;
          });

    // 13. CLI plumbing.
    check("CLI: verify all --seed 7 exits 0; report round-trips; bad input exits 2", [] {
        std::string report_path = temp_path("spindex_acceptance_report.json");
        std::string out;
        int rc = run_cli("verify all --seed 7 --report " + report_path, &out);
        if (rc != 0) {
            std::printf("        verify all exited %d\n%s\n", rc, out.c_str());
            return false;
        }
        std::ifstream in(report_path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        if (text.empty()) return false;
        if (Report::parse(text).serialize() != text) return false;

        std::string bad_path = temp_path("spindex_acceptance_bad.json");
        {
            std::ofstream bad(bad_path);
            bad << R"({"version": 1, "variable": "z", "fixed_points": [{"tangent_exponents": ["oops"]}]})";
        }
        rc = run_cli("localize " + bad_path, &out);
        if (rc != 2) {
            std::printf("        localize exited %d\n", rc);
            return false;
        }
        if (out.find("fixed_points[0].tangent_exponents[0]") == std::string::npos) {
            std::printf("        missing field diagnostic: %s\n", out.c_str());
            return false;
        }
        return true;
    });

    std::printf("%s: %d/13 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                13 - failures);
    return failures == 0 ? 0 : 1;
}
