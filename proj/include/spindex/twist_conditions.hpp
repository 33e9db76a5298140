#ifndef SPINDEX_TWIST_CONDITIONS_HPP
#define SPINDEX_TWIST_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "spindex/weight_calculus.hpp"

namespace spindex {

namespace detail {

// Extracts the scalar powers (u1, u2) of a profile carrying at most one
// classical factor per position. The congruence tables do not distinguish
// exterior from symmetric powers.
struct SimplePowers {
    int u1 = 0;
    int u2 = 0;
};

inline SimplePowers simple_powers(const RepDescriptor& desc, const PowerProfile& prof) {
    prof.validate(desc);
    SimplePowers p;
    bool seen1 = false, seen2 = false;
    for (const auto& f : prof.factors) {
        bool second_position = desc.two_factor() ? (f.slot == 2) : f.conjugate;
        if (second_position) {
            if (seen2) throw UnsupportedCase("closed form covers a single power per position");
            p.u2 = f.power;
            seen2 = true;
        } else {
            if (seen1) throw UnsupportedCase("closed form covers a single power per position");
            p.u1 = f.power;
            seen1 = true;
        }
    }
    return p;
}

} // namespace detail

// Closed-form transcription of the congruence tables deciding when the
// twisted spin representation Delta_N (x) F descends to the structure group.
// The exact ranks 3, 4, 6, 8 carry their own conditions (the structure group
// does not embed in Spin(N) there); all other ranks use the generic lists.
inline bool closed_form_condition(const RepDescriptor& desc, const PowerProfile& prof) {
    desc.validate();
    auto [u1, u2] = detail::simple_powers(desc, prof);
    const int s = prof.s, t = prof.t;
    const int r = desc.r;
    const int rm8 = ((r % 8) + 8) % 8;

    auto even = [](long x) { return x % 2 == 0; };

    if (r == 3) return even(desc.m1 + u1 + s);
    if (r == 4) return even(desc.m1 + u1 + t) && even(desc.m2 + u2 + s);
    if (r == 6)
        return even(u1 + u2 + s + t) && (2 * desc.m1 + u1 + 3 * u2 + s + 3 * t) % 4 == 0 &&
               (2 * desc.m1 + 3 * u1 + u2 + 3 * s + t) % 4 == 0;
    if (r == 8) {
        // Vanishing multiplicities count as even and force the matching power
        // to zero; the kernel generators then reduce to the same four-parity
        // conditions.
        const bool e1 = desc.m1 % 2 == 0, e2 = desc.m2 % 2 == 0;
        if (!e1 && e2) return (u2 + t) % 2 == 1; // u1, s free
        if (e1 && !e2) return (u1 + s) % 2 == 1; // u2, t free
        if (e1 && e2) return even(u2 + t) && even(u1 + s);
        return true; // both odd: trivial kernel
    }

    switch (rm8) {
        case 1:
        case 7:
            return desc.m1 % 2 == 1 ? true : even(u1 + s);
        case 3:
        case 5:
            return even(u1 + s);
        case 2:
            return even(u1 + u2 + s + t) && (u1 + 3 * u2 + 3 * s + t) % 4 == 0 &&
                   (3 * u1 + u2 + s + 3 * t) % 4 == 0;
        case 6:
            return even(u1 + u2 + s + t) && (u1 + 3 * u2 + s + 3 * t) % 4 == 0 &&
                   (3 * u1 + u2 + 3 * s + t) % 4 == 0;
        case 4: // r >= 12: both congruences, with absent factors forcing u = 0
            return even(u2 + s) && even(u1 + t);
        default: { // r = 0 (mod 8), r >= 16: the structure group embeds
            const bool e1 = desc.m1 % 2 == 0, e2 = desc.m2 % 2 == 0;
            bool c1 = e1 ? even(u1 + s) : true;
            bool c2 = e2 ? even(u2 + t) : true;
            return c1 && c2;
        }
    }
}

// Weight-level descent oracle: delegates to the full kernel-triviality check
// on Delta_N (x) F. Supports the mixed exterior/symmetric products of the
// general theorems, which have no transcribed closed form.
inline bool oracle_condition(const RepDescriptor& desc, const PowerProfile& prof,
                             unsigned long long guard = (1ULL << 22)) {
    return descends(desc, prof, guard).descends;
}

struct CrossValidation {
    long points = 0;
    long skipped = 0;
    std::vector<std::string> disagreements;

    bool agree() const { return disagreements.empty(); }
};

// Evaluates closed form and oracle on every profile with powers up to
// max_power for each descriptor; exterior powers beyond the representation
// dimension and guard-exceeding points are skipped.
inline CrossValidation cross_validate(const std::vector<RepDescriptor>& descs, int max_power,
                                      bool include_symmetric = true,
                                      unsigned long long guard = (1ULL << 22)) {
    CrossValidation out;
    std::vector<FactorKind> kinds{FactorKind::Exterior};
    if (include_symmetric) kinds.push_back(FactorKind::Symmetric);

    for (const auto& desc : descs) {
        const bool four_powers = desc.r % 2 == 0;
        for (FactorKind kind : kinds) {
            for (int u1 = 0; u1 <= max_power; ++u1)
                for (int u2 = 0; u2 <= (four_powers ? max_power : 0); ++u2)
                    for (int s = 0; s <= max_power; ++s)
                        for (int t = 0; t <= (desc.r % 2 == 0 ? max_power : 0); ++t) {
                            PowerProfile prof = desc.two_factor() || desc.group_kind() == GroupKind::U
                                                    ? PowerProfile::pair(desc, kind, u1, u2, s, t)
                                                    : PowerProfile::single(kind, u1, s);
                            bool closed, oracle;
                            try {
                                closed = closed_form_condition(desc, prof);
                                oracle = oracle_condition(desc, prof, guard);
                            } catch (const GuardExceeded&) {
                                ++out.skipped;
                                continue;
                            } catch (const std::invalid_argument&) {
                                ++out.skipped; // e.g. exterior power beyond dimension
                                continue;
                            }
                            ++out.points;
                            if (closed != oracle)
                                out.disagreements.push_back(
                                    desc.str() + ", " + prof.str() +
                                    (kind == FactorKind::Exterior ? " [ext]" : " [sym]") +
                                    ": closed=" + (closed ? "true" : "false") +
                                    " oracle=" + (oracle ? "true" : "false"));
                        }
        }
    }
    return out;
}

} // namespace spindex

#endif
