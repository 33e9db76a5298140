#ifndef SPINDEX_LOCALIZATION_HPP
#define SPINDEX_LOCALIZATION_HPP

#include <string>
#include <vector>

#include "spindex/laurent.hpp"
#include "spindex/rep_descriptor.hpp"
#include "spindex/weight_calculus.hpp"

namespace spindex {

// Thrown when fixed-point data cannot produce a contribution: a zero tangent
// exponent (the fixed point is not isolated), a non-integral tangent
// exponent, or twist exponents breaking the z-integrality of the sum.
struct LocalizationDataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Local data of one isolated fixed point of the circle action: the rotation
// exponents q_i on the tangent space and the exponents n_k of the action on
// the twisting bundle.
struct FixedPointDatum {
    std::string name;
    std::vector<Rational> tangent_exponents;
    std::vector<Rational> twist_exponents;
};

// Local contribution
//     mu(P,z) = sum_k z^(-n_k) prod_j 1 / (z^(-q_j/2) - z^(q_j/2)),
// assembled exactly in w = z^(1/2). An empty twist list is the untwisted
// operator (numerator 1).
//
// Gate for consistent data: every q_j must be a nonzero integer (each
// denominator factor then lives in w) and every n_k a half-integer, with all
// n_k congruent mod 1 so the assembled terms share one w-parity. Results are
// reported in z only when every w-power is even. Signs follow the listed
// order of the q_j; flipping the sign of one q_j negates the contribution.
inline RationalFunction contribution(const FixedPointDatum& fp) {
    for (size_t j = 0; j < fp.tangent_exponents.size(); ++j) {
        const Rational& q = fp.tangent_exponents[j];
        if (q.is_zero())
            throw LocalizationDataError("fixed point '" + fp.name + "': tangent exponent " +
                                        std::to_string(j + 1) +
                                        " is zero (not an isolated fixed point)");
        if (!q.is_integer())
            throw LocalizationDataError("fixed point '" + fp.name + "': tangent exponent " + q.str() +
                                        " is not an integer; the contribution does not live in w");
    }
    for (const Rational& n : fp.twist_exponents) {
        if (!(n * Rational(2)).is_integer())
            throw LocalizationDataError("fixed point '" + fp.name + "': twist exponent " + n.str() +
                                        " must be a half-integer");
        Rational skew = (n - fp.twist_exponents.front()).mod(Rational(1));
        if (!skew.is_zero())
            throw LocalizationDataError("fixed point '" + fp.name + "': twist exponents " +
                                        fp.twist_exponents.front().str() + " and " + n.str() +
                                        " mix w-parities; the sum cannot lie in a single z-line");
    }

    HalfIntLaurent den = HalfIntLaurent::one();
    for (const Rational& q : fp.tangent_exponents) {
        long qi = q.to_long();
        den = den * (HalfIntLaurent::monomial(-qi, Rational(1)) - HalfIntLaurent::monomial(qi, Rational(1)));
    }
    HalfIntLaurent num;
    if (fp.twist_exponents.empty()) {
        num = HalfIntLaurent::one();
    } else {
        for (const Rational& n : fp.twist_exponents)
            num = num + HalfIntLaurent::monomial(-(n * Rational(2)).to_long(), Rational(1));
    }
    return RationalFunction(num, den);
}

// Strict and non-strict verdicts of |n_k| < (1/2) sum_i |q_i| per twist
// exponent; the non-strict variant is the rigidity-grade check.
struct InequalityReport {
    std::vector<bool> strict_per_twist;
    bool all_strict = true;
    bool all_non_strict = true;
    Rational half_q_norm{0};
};

inline InequalityReport satisfies_inequality(const FixedPointDatum& fp) {
    InequalityReport rep;
    Rational half(0);
    for (const Rational& q : fp.tangent_exponents) half += q.abs();
    half = half * Rational(1, 2);
    rep.half_q_norm = half;
    for (const Rational& n : fp.twist_exponents) {
        bool strict = n.abs() < half;
        bool non_strict = n.abs() <= half;
        rep.strict_per_twist.push_back(strict);
        rep.all_strict = rep.all_strict && strict;
        rep.all_non_strict = rep.all_non_strict && non_strict;
    }
    return rep;
}

enum class IndexClassification {
    Zero,              // the equivariant index vanishes identically
    RigidConstant,     // a nonzero constant character
    LaurentNonConstant,// a Laurent polynomial with nontrivial circle weights
    NotLaurent         // not a Laurent polynomial: inconsistent synthetic data
};

inline std::string classification_str(IndexClassification c) {
    switch (c) {
        case IndexClassification::Zero: return "zero";
        case IndexClassification::RigidConstant: return "rigid-constant";
        case IndexClassification::LaurentNonConstant: return "laurent-non-constant";
        default: return "not-a-laurent-polynomial";
    }
}

struct EquivariantIndex {
    RationalFunction sum;
    IndexClassification classification = IndexClassification::Zero;
    std::optional<HalfIntLaurent> laurent; // present unless NotLaurent
    bool integral_in_z = true;             // all w-powers even (when Laurent)
    bool all_strict = true;                // every fp satisfied the strict inequality
};

// Exact global sum of the local contributions with its classification. When
// every fixed point satisfies the strict fundamental inequality the sum has
// limits 0 at both ends of the z-line, so a Laurent-polynomial sum must be
// identically zero; this is asserted.
inline EquivariantIndex equivariant_index(const std::vector<FixedPointDatum>& fps) {
    EquivariantIndex out;
    out.sum = RationalFunction::zero();
    for (const auto& fp : fps) {
        out.sum = out.sum + contribution(fp);
        out.all_strict = out.all_strict && satisfies_inequality(fp).all_strict;
    }
    out.laurent = out.sum.as_laurent();
    if (!out.laurent) {
        out.classification = IndexClassification::NotLaurent;
        out.integral_in_z = false;
        return out;
    }
    out.integral_in_z = out.laurent->all_powers_even();
    if (out.laurent->is_zero())
        out.classification = IndexClassification::Zero;
    else if (out.laurent->is_constant())
        out.classification = IndexClassification::RigidConstant;
    else
        out.classification = IndexClassification::LaurentNonConstant;

    if (out.all_strict && out.classification != IndexClassification::Zero &&
        out.classification != IndexClassification::NotLaurent)
        throw std::logic_error(
            "equivariant_index: strict inequalities force a vanishing Laurent sum");
    return out;
}

// ---------------------------------------------------------------------------
// Exponent generation from structure data

// Circle-action data on the structure torus: integer exponents t_j (first
// factor), t'_j (second factor) and f_j (Spin factor). theta_j contributes
// t_j/2 to a weight's exponent, phi_j contributes f_j.
struct CircleData {
    std::vector<long> t1;
    std::vector<long> t2;
    std::vector<long> f;
};

namespace detail {

inline GroupElementParams exponent_assignment(const RepDescriptor& desc, const CircleData& data) {
    if (static_cast<int>(data.t1.size()) != desc.torus_coord_count(1))
        throw std::invalid_argument("generate exponents: t values must match the first factor's coordinates");
    int want2 = desc.two_factor() ? desc.torus_coord_count(2) : 0;
    if (static_cast<int>(data.t2.size()) != want2)
        throw std::invalid_argument("generate exponents: t' values must match the second factor's coordinates");
    if (static_cast<int>(data.f.size()) != desc.k())
        throw std::invalid_argument("generate exponents: f values must match the Spin coordinates");
    // Reuse the angle container: "angle" x means exponent x here.
    GroupElementParams p;
    for (size_t j = 0; j < data.t1.size(); ++j)
        p.set_angle_pi(theta(static_cast<int>(j) + 1), Rational(data.t1[j], 2));
    for (size_t j = 0; j < data.t2.size(); ++j)
        p.set_angle_pi(theta_prime(static_cast<int>(j) + 1), Rational(data.t2[j], 2));
    for (size_t j = 0; j < data.f.size(); ++j)
        p.set_angle_pi(phi(static_cast<int>(j) + 1), Rational(data.f[j]));
    return p;
}

} // namespace detail

// Rotation exponents q_i of the circle action on the tangent space: the
// tangent weights evaluated at theta_j = t_j/2, phi_j = f_j, in the same
// order and pairing convention as tangent_weight_assignment. Non-integer
// values are legal here; contribution() is the gate for consistent data.
inline std::vector<Rational> generate_tangent_exponents(const RepDescriptor& desc, const CircleData& data) {
    GroupElementParams p = detail::exponent_assignment(desc, data);
    std::vector<Rational> out;
    for (const auto& eta : tangent_weight_assignment(desc)) out.push_back(weight_angle_pi(eta, p));
    return out;
}

// Twist exponents n_k: every weight of the twisting representation F
// evaluated at the same assignment, over the index tuples dictated by the
// profile (strictly increasing for exterior powers, weakly increasing for
// symmetric powers, all sign choices for spinor powers).
inline std::vector<Rational> generate_twist_exponents(const RepDescriptor& desc, const PowerProfile& prof,
                                                      const CircleData& data,
                                                      unsigned long long guard = (1ULL << 22)) {
    GroupElementParams p = detail::exponent_assignment(desc, data);
    if (twist_weight_count(desc, prof) > guard)
        throw GuardExceeded("generate_twist_exponents: enumeration exceeds guard");
    std::vector<Rational> out{Rational(0)};
    for (const auto& lst : twist_weight_lists(desc, prof)) {
        std::vector<Rational> vals;
        vals.reserve(lst.size());
        for (const auto& w : lst) vals.push_back(weight_angle_pi(w, p));
        std::vector<Rational> next;
        next.reserve(out.size() * vals.size());
        for (const auto& a : out)
            for (const auto& v : vals) next.push_back(a + v);
        out = std::move(next);
    }
    return out;
}

} // namespace spindex

#endif
