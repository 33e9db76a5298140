#ifndef SPINDEX_WEIGHT_CALCULUS_HPP
#define SPINDEX_WEIGHT_CALCULUS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spindex/rep_descriptor.hpp"
#include "spindex/sign_vectors.hpp"
#include "spindex/weights.hpp"

namespace spindex {

// ---------------------------------------------------------------------------
// Spin weights

// Weight lists of the (half-)spin representations of Spin(r), as linear
// functionals in phi_1..phi_[r/2] with coefficients +-1/2.
//
// Ordering contract: sign vectors run in tensor order (phi_1's sign flips
// fastest, + before -). For r even the lists split by the parity of the
// negative-sign count; for r odd the even-count half precedes the odd-count
// half. Under this order negation maps position i to position last+1-i, so
// for r = 0 (mod 4) the two halves of each parity class are interchanged by
// flipping every sign.
struct DeltaWeights {
    std::vector<Weight> plus;  // even number of negative signs
    std::vector<Weight> minus; // odd number of negative signs
    bool split = false;        // true for r even: plus/minus are Delta_r^+-/-

    std::vector<Weight> full() const {
        std::vector<Weight> out = plus;
        out.insert(out.end(), minus.begin(), minus.end());
        return out;
    }
};

inline Weight half_spin_weight(const std::vector<int>& signs) {
    Weight w;
    for (size_t j = 0; j < signs.size(); ++j)
        w.set(phi(static_cast<int>(j) + 1), Rational(signs[j], 2));
    return w;
}

inline DeltaWeights delta_weights(int r) {
    if (r < 2) throw std::invalid_argument("delta_weights: r must be >= 2");
    int k = r / 2;
    DeltaWeights out;
    out.split = (r % 2 == 0);
    for (const auto& signs : all_sign_vectors(k)) {
        Weight w = half_spin_weight(signs);
        if (negative_count(signs) % 2 == 0)
            out.plus.push_back(std::move(w));
        else
            out.minus.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure-group generators

struct StructureGenerator {
    std::string name;
    GroupElementParams params;
};

namespace detail {

// Angle dictionary for the finite-subgroup elements, all as multiples of pi:
//   -1 in Spin(r):       phi_1 = 2pi
//   vol_r:                all phi_j = pi
//   -vol_r:               phi_1 = -pi, remaining phi_j = pi
//   -Id on an SO/Sp factor: its thetas = pi;  i Id on a U factor: thetas = pi/2
inline GroupElementParams base_params(const RepDescriptor& desc) {
    GroupElementParams p;
    for (const auto& c : desc.coords()) p.set_angle_pi(c, Rational(0));
    return p;
}

inline void add_spin_minus_one(GroupElementParams& p) {
    p.set_angle_pi(phi(1), p.angle_pi(phi(1)) + Rational(2));
}
inline void add_spin_vol(GroupElementParams& p, int k, bool negative) {
    for (int j = 1; j <= k; ++j) {
        Rational a = (j == 1 && negative) ? Rational(-1) : Rational(1);
        p.set_angle_pi(phi(j), p.angle_pi(phi(j)) + a);
    }
}
inline void add_factor_angle(GroupElementParams& p, const RepDescriptor& desc, int slot, const Rational& a) {
    for (int j = 1; j <= desc.torus_coord_count(slot); ++j) {
        Coord c = slot == 1 ? theta(j) : theta_prime(j);
        p.set_angle_pi(c, p.angle_pi(c) + a);
    }
}

} // namespace detail

// Generators of the finite central subgroup in the structure-group quotient,
// as exact torus parameter assignments. The generating sets follow the
// quotient tables for each (r mod 8, multiplicity parity) case; composite
// elements whose actions are reported separately are included.
inline std::vector<StructureGenerator> structure_group_generators(const RepDescriptor& desc) {
    desc.validate();
    const int r = desc.r;
    const int k = desc.k();
    std::vector<StructureGenerator> out;

    auto make = [&](const std::string& name,
                    const std::function<void(GroupElementParams&)>& fill) {
        GroupElementParams p = detail::base_params(desc);
        fill(p);
        out.push_back({name, std::move(p)});
    };

    const int rm8 = ((r % 8) + 8) % 8;
    if (!desc.two_factor()) {
        const int m = desc.m1;
        switch (rm8) {
            case 1:
            case 7:
                if (m % 2 == 0)
                    make("(-Id,-1)", [&](GroupElementParams& p) {
                        detail::add_factor_angle(p, desc, 1, Rational(1));
                        detail::add_spin_minus_one(p);
                    });
                break;
            case 3:
            case 5:
                make("(-Id,-1)", [&](GroupElementParams& p) {
                    detail::add_factor_angle(p, desc, 1, Rational(1));
                    detail::add_spin_minus_one(p);
                });
                break;
            case 2:
            case 6:
                if (r == 2) throw UnsupportedCase("r = 2 has structure group U(m); not covered");
                make("(-Id,-1)", [&](GroupElementParams& p) {
                    detail::add_factor_angle(p, desc, 1, Rational(1));
                    detail::add_spin_minus_one(p);
                });
                make("(i*Id,-vol)", [&](GroupElementParams& p) {
                    detail::add_factor_angle(p, desc, 1, Rational(1, 2));
                    detail::add_spin_vol(p, k, /*negative=*/true);
                });
                break;
            default:
                throw UnsupportedCase("single-factor descriptor with r = 0 (mod 4)");
        }
        return out;
    }

    // Two-factor cases: r = 4 or 0 (mod 8).
    const int m1 = desc.m1, m2 = desc.m2;
    if (rm8 == 4) {
        if (m1 > 0 && m2 > 0) {
            make("(-Id,-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_minus_one(p);
            });
            make("(Id,-Id,vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_vol(p, k, false);
            });
            make("(-Id,Id,-vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_spin_vol(p, k, true);
            });
        } else if (m2 == 0) { // r > 4 enforced by validate()
            make("(-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_spin_minus_one(p);
            });
            make("(Id,vol)", [&](GroupElementParams& p) { detail::add_spin_vol(p, k, false); });
        } else {
            make("(-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_minus_one(p);
            });
            make("(Id,-vol)", [&](GroupElementParams& p) { detail::add_spin_vol(p, k, true); });
        }
        return out;
    }

    // r = 0 (mod 8)
    if (m1 > 0 && m2 > 0) {
        const bool e1 = m1 % 2 == 0, e2 = m2 % 2 == 0;
        if (e1 && e2) {
            make("(-Id,-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_minus_one(p);
            });
            make("(Id,-Id,vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_vol(p, k, false);
            });
            make("(-Id,Id,-vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_spin_vol(p, k, true);
            });
        } else if (!e1 && e2) {
            make("(Id,-Id,vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_vol(p, k, false);
            });
        } else if (e1 && !e2) {
            make("(-Id,Id,-vol)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_spin_vol(p, k, true);
            });
        }
        // both odd: trivial kernel
        return out;
    }
    if (m1 == 0) {
        if (m2 % 2 == 0)
            make("(-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 2, Rational(1));
                detail::add_spin_minus_one(p);
            });
        make("(Id,-vol)", [&](GroupElementParams& p) { detail::add_spin_vol(p, k, true); });
    } else {
        if (m1 % 2 == 0)
            make("(-Id,-1)", [&](GroupElementParams& p) {
                detail::add_factor_angle(p, desc, 1, Rational(1));
                detail::add_spin_minus_one(p);
            });
        make("(Id,vol)", [&](GroupElementParams& p) { detail::add_spin_vol(p, k, false); });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tangent weights

namespace detail {

// One candidate assignment of the formal roots eta of TM (x) C: each theta_j
// of a factor paired against a half-spin weight list, with bare half-spin
// tails for odd orthogonal multiplicities.
inline std::vector<Weight> tangent_candidate(const RepDescriptor& desc, bool swap_chirality) {
    const DeltaWeights dw = delta_weights(desc.r);
    std::vector<Weight> out;

    auto append_paired = [&](int slot, const std::vector<Weight>& lambdas) {
        for (int j = 1; j <= desc.torus_coord_count(slot); ++j) {
            Coord c = slot == 1 ? theta(j) : theta_prime(j);
            for (const auto& l : lambdas) out.push_back(Weight::of(c, Rational(1)) + l);
        }
    };
    auto append_bare_tail = [&](const std::vector<Weight>& lambdas) {
        // First half of the list: one representative per +- pair.
        for (size_t i = 0; i < lambdas.size() / 2; ++i) out.push_back(lambdas[i]);
    };

    if (!desc.two_factor()) {
        switch (((desc.r % 8) + 8) % 8) {
            case 1:
            case 7: {
                append_paired(1, dw.full());
                if (desc.m1 % 2 == 1) {
                    // Bare tail: one representative per +- pair of half-spin
                    // weights, the member appearing first in the ordered list.
                    // For k odd pairs straddle the parity classes and the
                    // even-negative half is exactly the set of first members;
                    // for k even pairs sit inside a class and the first
                    // member is the one with eps_k = +1.
                    int k2 = desc.k();
                    if (k2 % 2 == 1) {
                        for (const auto& l : dw.plus) out.push_back(l);
                    } else {
                        auto signs = all_sign_vectors(k2);
                        for (size_t i = 0; i < signs.size() / 2; ++i)
                            out.push_back(half_spin_weight(signs[i]));
                    }
                }
                break;
            }
            case 3:
            case 5:
                append_paired(1, dw.full());
                break;
            case 2:
                append_paired(1, swap_chirality ? dw.minus : dw.plus);
                break;
            case 6:
                append_paired(1, swap_chirality ? dw.plus : dw.minus);
                break;
            default:
                throw UnsupportedCase("tangent weights: bad case");
        }
        return out;
    }

    // Two-factor cases. slot1 pairs with one chirality, slot2 with the other;
    // odd SO multiplicities contribute a bare tail of the matching list.
    const std::vector<Weight>& first = swap_chirality ? dw.minus : dw.plus;
    const std::vector<Weight>& second = swap_chirality ? dw.plus : dw.minus;
    append_paired(1, first);
    if (desc.group_kind() == GroupKind::SO && desc.m1 % 2 == 1 && desc.m1 > 0) append_bare_tail(first);
    append_paired(2, second);
    if (desc.group_kind() == GroupKind::SO && desc.m2 % 2 == 1 && desc.m2 > 0) append_bare_tail(second);
    return out;
}

inline bool trivial_on_all(const std::vector<StructureGenerator>& gens, const std::vector<Weight>& ws) {
    for (const auto& g : gens)
        for (const auto& w : ws)
            if (!evaluate_weight(w, g.params).is_one()) return false;
    return true;
}

} // namespace detail

// The formal roots eta_1..eta_{N/2} of the complexified tangent space.
//
// The chirality-multiplicity pairing for the two-factor cases is fixed by
// the tangent-triviality invariant: the finite kernel of the structure-group
// quotient must act trivially on every eta (the tangent representation
// factors through SO(N)). For r = 4 (mod 8) this selects the pairing with
// the second Sp factor against the even-negative list; for r = 0 (mod 8)
// the first SO factor pairs with the even-negative list.
inline std::vector<Weight> tangent_weight_assignment(const RepDescriptor& desc) {
    desc.validate();
    static std::mutex mu;
    static std::map<RepDescriptor, std::vector<Weight>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(desc);
        if (it != cache.end()) return it->second;
    }

    auto gens = structure_group_generators(desc);
    std::vector<Weight> chosen;
    bool preferred_swap = (((desc.r % 8) + 8) % 8 == 4); // eq-(complexified) labels for r = 4 (mod 8)
    for (bool swap : {preferred_swap, !preferred_swap}) {
        auto cand = detail::tangent_candidate(desc, swap);
        if (detail::trivial_on_all(gens, cand)) {
            chosen = std::move(cand);
            break;
        }
    }
    if (chosen.empty() && desc.dim_N() > 0)
        throw std::logic_error("tangent_weight_assignment: no pairing satisfies tangent-triviality for " +
                               desc.str());

    std::lock_guard<std::mutex> lock(mu);
    cache[desc] = chosen;
    return chosen;
}

// ---------------------------------------------------------------------------
// Weights of the twisting factors

// Weights of the standard representation of one classical factor:
//   SO(m): +-theta_1..theta_[m/2], plus a zero weight for m odd
//   U(m):  theta_1..theta_m (conjugate: negated)
//   Sp(m): +-theta_1..theta_m
inline std::vector<Weight> standard_rep_weights(const RepDescriptor& desc, int slot, bool conjugate) {
    std::vector<Weight> out;
    auto coord = [&](int j) { return slot == 1 ? theta(j) : theta_prime(j); };
    switch (desc.group_kind()) {
        case GroupKind::U:
            for (int j = 1; j <= desc.multiplicity(slot); ++j)
                out.push_back(Weight::of(coord(j), Rational(conjugate ? -1 : 1)));
            return out;
        case GroupKind::SO: {
            int m = desc.multiplicity(slot);
            for (int j = 1; j <= m / 2; ++j) {
                out.push_back(Weight::of(coord(j), Rational(1)));
                out.push_back(Weight::of(coord(j), Rational(-1)));
            }
            if (m % 2 == 1) out.push_back(Weight{});
            return out;
        }
        case GroupKind::Sp:
            for (int j = 1; j <= desc.multiplicity(slot); ++j) {
                out.push_back(Weight::of(coord(j), Rational(1)));
                out.push_back(Weight::of(coord(j), Rational(-1)));
            }
            return out;
    }
    return out;
}

namespace detail {

inline void tuple_sums(const std::vector<Weight>& base, int power, bool strict,
                       std::vector<Weight>& out) {
    // Sums over strictly (exterior) or weakly (symmetric) increasing tuples.
    std::vector<int> idx;
    std::function<void(int, const Weight&)> rec = [&](int start, const Weight& acc) {
        if (static_cast<int>(idx.size()) == power) {
            out.push_back(acc);
            return;
        }
        for (int i = start; i < static_cast<int>(base.size()); ++i) {
            idx.push_back(i);
            rec(strict ? i + 1 : i, acc + base[static_cast<size_t>(i)]);
            idx.pop_back();
        }
    };
    rec(0, Weight{});
}

} // namespace detail

// Weight multiset of one exterior/symmetric power factor.
inline std::vector<Weight> factor_weights(const TwistFactor& f, const RepDescriptor& desc) {
    std::vector<Weight> base = standard_rep_weights(desc, f.slot, f.conjugate);
    if (f.kind == FactorKind::Exterior && f.power > static_cast<int>(base.size()))
        throw std::invalid_argument("exterior power exceeds the dimension of the representation");
    if (base.empty() && f.power > 0)
        throw std::invalid_argument("positive power of a zero-dimensional representation");
    std::vector<Weight> out;
    detail::tuple_sums(base, f.power, f.kind == FactorKind::Exterior, out);
    return out;
}

// Atomic weight lists of the full twist F: one per classical factor plus one
// copy of the relevant half-spin list per spinor tensor power. The weight
// multiset of F is the Cartesian sum across these lists.
inline std::vector<std::vector<Weight>> twist_weight_lists(const RepDescriptor& desc,
                                                           const PowerProfile& prof) {
    prof.validate(desc);
    std::vector<std::vector<Weight>> lists;
    for (const auto& f : prof.factors) lists.push_back(factor_weights(f, desc));
    DeltaWeights dw = delta_weights(desc.r);
    for (int i = 0; i < prof.s; ++i) lists.push_back(desc.r % 2 == 1 ? dw.full() : dw.plus);
    for (int i = 0; i < prof.t; ++i) lists.push_back(dw.minus);
    return lists;
}

// ---------------------------------------------------------------------------
// Group-element actions

struct ActionResult {
    bool scalar = false;
    RootOfUnity value;
    // On a non-scalar action: two weights with their differing values.
    std::optional<std::pair<Weight, Weight>> witness_weights;
    std::optional<std::pair<RootOfUnity, RootOfUnity>> witness_values;

    std::string str() const {
        if (scalar) return value.str();
        return "non-scalar: " + witness_weights->first.str() + " -> " + witness_values->first.str() +
               " vs " + witness_weights->second.str() + " -> " + witness_values->second.str();
    }
};

// Action on an explicit list of weights.
inline ActionResult action_on_weights(const GroupElementParams& p, const std::vector<Weight>& ws) {
    ActionResult res;
    if (ws.empty()) {
        res.scalar = true;
        res.value = RootOfUnity::one();
        return res;
    }
    RootOfUnity first = evaluate_weight(ws.front(), p);
    for (size_t i = 1; i < ws.size(); ++i) {
        RootOfUnity v = evaluate_weight(ws[i], p);
        if (v != first) {
            res.scalar = false;
            res.witness_weights = {ws.front(), ws[i]};
            res.witness_values = {first, v};
            return res;
        }
    }
    res.scalar = true;
    res.value = first;
    return res;
}

// Enumerates the weights of Delta_N, (+-eta_1 +- ... +- eta_{N/2})/2, calling
// fn on each until it returns false. No list is materialized.
template <typename Fn>
void for_each_delta_N_weight(const std::vector<Weight>& etas, Fn&& fn) {
    size_t n = etas.size();
    if (n > 30) throw GuardExceeded("Delta_N weight enumeration beyond 2^30");
    std::vector<Weight> halves, neg_halves;
    halves.reserve(n);
    for (const auto& e : etas) {
        halves.push_back(e.scaled(Rational(1, 2)));
        neg_halves.push_back(e.scaled(Rational(-1, 2)));
    }
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        Weight w;
        for (size_t j = 0; j < n; ++j) w = w + ((b >> j) & 1 ? neg_halves[j] : halves[j]);
        if (!fn(w)) return;
    }
}

// Action of a torus element on Delta_N. The action is scalar exactly when
// every tangent weight evaluates to 1 (flipping the sign of eta_j inside a
// spinor weight changes the value by e^{-i eta_j(p)}); the scalar is then
// e^{(i/2) sum eta_j(p)}. Full enumeration is used to cross-check at small N
// (tests); here the per-eta criterion decides and builds witnesses.
inline ActionResult action_on_delta_N(const RepDescriptor& desc, const GroupElementParams& p) {
    auto etas = tangent_weight_assignment(desc);
    ActionResult res;
    Rational top_sum(0);
    for (size_t j = 0; j < etas.size(); ++j) {
        Rational a = weight_angle_pi(etas[j], p);
        if (!RootOfUnity::from_angle_pi(a).is_one()) {
            // Witness: the all-plus spinor weight vs the one with eta_j flipped.
            Weight all_plus;
            for (const auto& e : etas) all_plus = all_plus + e.scaled(Rational(1, 2));
            Weight flipped = all_plus - etas[j];
            res.scalar = false;
            res.witness_weights = {all_plus, flipped};
            res.witness_values = {evaluate_weight(all_plus, p), evaluate_weight(flipped, p)};
            return res;
        }
        top_sum += a;
    }
    res.scalar = true;
    res.value = RootOfUnity::from_angle_pi(top_sum * Rational(1, 2));
    return res;
}

// ---------------------------------------------------------------------------
// Descent

struct DescendsResult {
    bool descends = false;
    // On failure: which generator, and a weight of Delta_N (x) F with its value.
    std::string generator;
    std::optional<Weight> witness_weight;
    std::optional<RootOfUnity> witness_value;

    std::string str() const {
        if (descends) return "descends";
        std::string out = "blocked by " + generator;
        if (witness_weight)
            out += " on weight " + witness_weight->str() + " -> " + witness_value->str();
        return out;
    }
};

// Raw weight count of the tensor factor F (Cartesian product of the atomic
// lists); the desk-scale enumeration guard is checked against this.
inline unsigned long long twist_weight_count(const RepDescriptor& desc, const PowerProfile& prof) {
    unsigned long long count = 1;
    for (const auto& lst : twist_weight_lists(desc, prof)) {
        count *= static_cast<unsigned long long>(lst.size());
        if (count > (1ULL << 40)) return count; // saturate well past any guard
    }
    return count;
}

// True iff every generator of the finite kernel acts as 1 on every weight of
// Delta_N (x) F. Per generator the factor lists contribute independently, so
// the distinct achievable values are combined exactly without materializing
// the full Cartesian product; a representative weight is kept per value for
// witness reporting.
inline DescendsResult descends(const RepDescriptor& desc, const PowerProfile& prof,
                               unsigned long long guard = (1ULL << 22)) {
    if (twist_weight_count(desc, prof) > guard)
        throw GuardExceeded("descends: twist weight enumeration exceeds guard");
    auto lists = twist_weight_lists(desc, prof);
    DescendsResult res;
    for (const auto& gen : structure_group_generators(desc)) {
        ActionResult delta = action_on_delta_N(desc, gen.params);
        if (!delta.scalar) {
            res.descends = false;
            res.generator = gen.name;
            res.witness_weight = delta.witness_weights->first;
            res.witness_value = delta.witness_values->first;
            return res;
        }
        // value -> representative F-weight achieving it
        std::map<RootOfUnity, Weight> values{{RootOfUnity::one(), Weight{}}};
        for (const auto& lst : lists) {
            std::map<RootOfUnity, Weight> base;
            for (const auto& w : lst) {
                RootOfUnity v = evaluate_weight(w, gen.params);
                base.emplace(v, w); // keep first representative
            }
            std::map<RootOfUnity, Weight> next;
            for (const auto& [va, wa] : values)
                for (const auto& [vb, wb] : base) next.emplace(va * vb, wa + wb);
            values = std::move(next);
        }
        for (const auto& [v, w] : values) {
            if (delta.value * v != RootOfUnity::one()) {
                res.descends = false;
                res.generator = gen.name;
                res.witness_weight = w;
                res.witness_value = delta.value * v;
                return res;
            }
        }
    }
    res.descends = true;
    return res;
}

// Dispatch used by reports: action of p either on Delta_N or on a twist rep.
inline ActionResult element_action_on_rep(const GroupElementParams& p, const RepDescriptor& desc,
                                          const std::optional<PowerProfile>& prof = std::nullopt) {
    if (!prof) return action_on_delta_N(desc, p);
    // Flatten the factor weight lists into the full multiset (guarded).
    if (twist_weight_count(desc, *prof) > (1ULL << 22))
        throw GuardExceeded("element_action_on_rep: weight enumeration exceeds guard");
    std::vector<Weight> all{Weight{}};
    for (const auto& lst : twist_weight_lists(desc, *prof)) {
        std::vector<Weight> next;
        next.reserve(all.size() * lst.size());
        for (const auto& a : all)
            for (const auto& b : lst) next.push_back(a + b);
        all = std::move(next);
    }
    return action_on_weights(p, all);
}

} // namespace spindex

#endif
