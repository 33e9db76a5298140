#ifndef SPINDEX_REP_DESCRIPTOR_HPP
#define SPINDEX_REP_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include "spindex/config.hpp"
#include "spindex/weights.hpp"

namespace spindex {

enum class GroupKind { SO, U, Sp };

// Shape data of a rank-r structure: the classical factor(s) and their
// multiplicities, per the residue of r mod 8:
//   r = 1,7 : SO(m)            r = 2,6 : U(m)        r = 3,5 : Sp(m)
//   r = 4 (mod 8): Sp(m1) x Sp(m2)    r = 0 (mod 8): SO(m1) x SO(m2)
struct RepDescriptor {
    int r = 0;
    int m1 = 0;
    int m2 = 0; // meaningful only when two_factor()

    static RepDescriptor single(int r, int m) {
        RepDescriptor d{r, m, 0};
        d.validate();
        return d;
    }
    static RepDescriptor two(int r, int m1, int m2) {
        RepDescriptor d{r, m1, m2};
        d.validate();
        return d;
    }

    bool two_factor() const { return r % 4 == 0; }
    int k() const { return r / 2; } // [r/2]

    GroupKind group_kind() const {
        switch (((r % 8) + 8) % 8) {
            case 1: case 7: return GroupKind::SO;
            case 2: case 6: return GroupKind::U;
            case 3: case 5: return GroupKind::Sp;
            case 4: return GroupKind::Sp;
            default: return GroupKind::SO; // r = 0 (mod 8)
        }
    }

    int multiplicity(int slot) const { return slot == 1 ? m1 : m2; }

    // Number of torus coordinates carried by a classical factor.
    int torus_coord_count(int slot) const {
        int m = multiplicity(slot);
        return group_kind() == GroupKind::SO ? m / 2 : m;
    }

    // Complex dimension of the standard representation of the factor.
    int standard_dim(int slot) const {
        int m = multiplicity(slot);
        return group_kind() == GroupKind::Sp ? 2 * m : m;
    }

    // Real dimension N of the model space.
    long dim_N() const {
        long spin_dim = 1L << k();
        long half = (r % 2 == 0) ? spin_dim / 2 : spin_dim;
        if (!two_factor()) {
            // r odd: C^m (x) Delta_r (Sp doubles m); r = 2,6: E (x) Delta+ and conjugate.
            if (r % 2 == 1) return static_cast<long>(standard_dim(1)) * spin_dim;
            return 2L * standard_dim(1) * half;
        }
        return static_cast<long>(standard_dim(1)) * half + static_cast<long>(standard_dim(2)) * half;
    }

    std::vector<Coord> coords() const {
        std::vector<Coord> out;
        for (int j = 1; j <= torus_coord_count(1); ++j) out.push_back(theta(j));
        if (two_factor())
            for (int j = 1; j <= torus_coord_count(2); ++j) out.push_back(theta_prime(j));
        for (int j = 1; j <= k(); ++j) out.push_back(phi(j));
        return out;
    }

    void validate() const {
        if (r < 3) throw UnsupportedCase("rank r must be >= 3");
        if (r > 24) throw UnsupportedCase("rank r beyond desk scale");
        if (two_factor()) {
            if (m1 < 0 || m2 < 0 || m1 + m2 < 1)
                throw UnsupportedCase("two-factor case needs m1, m2 >= 0 with m1 + m2 >= 1");
            if (r == 4 && (m1 == 0 || m2 == 0))
                throw UnsupportedCase("r = 4 with a vanishing multiplicity has a rank-3 structure group; not covered");
        } else {
            if (m1 < 1) throw UnsupportedCase("multiplicity m must be >= 1");
            if (m2 != 0) throw UnsupportedCase("single-factor case takes one multiplicity");
        }
    }

    std::string str() const {
        if (two_factor())
            return "r=" + std::to_string(r) + ", m1=" + std::to_string(m1) + ", m2=" + std::to_string(m2);
        return "r=" + std::to_string(r) + ", m=" + std::to_string(m1);
    }

    friend bool operator==(const RepDescriptor& a, const RepDescriptor& b) {
        return a.r == b.r && a.m1 == b.m1 && a.m2 == b.m2;
    }
    friend bool operator<(const RepDescriptor& a, const RepDescriptor& b) {
        if (a.r != b.r) return a.r < b.r;
        if (a.m1 != b.m1) return a.m1 < b.m1;
        return a.m2 < b.m2;
    }
};

enum class FactorKind { Exterior, Symmetric };

// One tensor factor of a twisting representation: an exterior or symmetric
// power of a standard representation (or its conjugate, U-type only).
struct TwistFactor {
    FactorKind kind = FactorKind::Exterior;
    int slot = 1;
    bool conjugate = false;
    int power = 0;

    std::string str() const {
        std::string base = slot == 1 ? "E" : "E2";
        if (slot == 1 && conjugate) base = "conj(E)";
        return (kind == FactorKind::Exterior ? "Lambda^" : "S^") + std::to_string(power) + "(" + base + ")";
    }
};

// Tensor powers defining the twist F: classical factors plus spinor powers.
// s counts Delta_r (r odd) or Delta_r^+ factors, t counts Delta_r^- factors.
struct PowerProfile {
    std::vector<TwistFactor> factors;
    int s = 0;
    int t = 0;

    static PowerProfile trivial() { return {}; }

    // Single classical power u on slot 1 plus s spinor powers.
    static PowerProfile single(FactorKind kind, int u, int s) {
        PowerProfile p;
        if (u > 0) p.factors.push_back({kind, 1, false, u});
        p.s = s;
        return p;
    }

    // (u1, u2) on the two positions: slot1/slot2 for two-factor descriptors,
    // E/conj(E) for U-type.
    static PowerProfile pair(const RepDescriptor& desc, FactorKind kind, int u1, int u2, int s, int t) {
        PowerProfile p;
        if (desc.two_factor()) {
            if (u1 > 0) p.factors.push_back({kind, 1, false, u1});
            if (u2 > 0) p.factors.push_back({kind, 2, false, u2});
        } else {
            if (u1 > 0) p.factors.push_back({kind, 1, false, u1});
            if (u2 > 0) p.factors.push_back({kind, 1, true, u2});
        }
        p.s = s;
        p.t = t;
        return p;
    }

    void validate(const RepDescriptor& desc) const {
        for (const auto& f : factors) {
            if (f.power < 0) throw std::invalid_argument("negative tensor power");
            if (f.slot != 1 && f.slot != 2) throw std::invalid_argument("factor slot must be 1 or 2");
            if (f.slot == 2 && !desc.two_factor())
                throw std::invalid_argument("slot 2 factor on a single-factor descriptor");
            if (f.conjugate && desc.group_kind() != GroupKind::U)
                throw std::invalid_argument("conjugate factors exist only for U-type descriptors");
        }
        if (s < 0 || t < 0) throw std::invalid_argument("negative spinor power");
        if (t > 0 && desc.r % 2 == 1)
            throw std::invalid_argument("Delta^- powers need even rank");
    }

    std::string str() const {
        std::string out;
        for (const auto& f : factors) {
            if (!out.empty()) out += " (x) ";
            out += f.str();
        }
        auto app = [&](const std::string& name, int p) {
            if (p == 0) return;
            if (!out.empty()) out += " (x) ";
            out += name + "^(x)" + std::to_string(p);
        };
        app("Delta+", s);
        app("Delta-", t);
        return out.empty() ? "(trivial)" : out;
    }
};

} // namespace spindex

#endif
