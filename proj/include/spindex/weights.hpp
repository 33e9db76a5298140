#ifndef SPINDEX_WEIGHTS_HPP
#define SPINDEX_WEIGHTS_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "spindex/rational.hpp"

namespace spindex {

// Named maximal-torus coordinate. Theta/ThetaPrime belong to the classical
// factor(s), Phi to the Spin factor.
enum class CoordKind { Theta, ThetaPrime, Phi };

struct Coord {
    CoordKind kind;
    int index; // 1-based

    friend bool operator==(const Coord& a, const Coord& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const Coord& a, const Coord& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.index < b.index;
    }

    std::string str() const {
        switch (kind) {
            case CoordKind::Theta: return "theta" + std::to_string(index);
            case CoordKind::ThetaPrime: return "theta'" + std::to_string(index);
            default: return "phi" + std::to_string(index);
        }
    }
};

inline Coord theta(int j) { return {CoordKind::Theta, j}; }
inline Coord theta_prime(int j) { return {CoordKind::ThetaPrime, j}; }
inline Coord phi(int j) { return {CoordKind::Phi, j}; }

// Linear functional on a maximal torus with rational coefficients.
class Weight {
public:
    Weight() = default;

    static Weight of(Coord c, Rational coeff) {
        Weight w;
        w.set(c, std::move(coeff));
        return w;
    }

    void set(Coord c, Rational coeff) {
        if (coeff.is_zero())
            c_.erase(c);
        else
            c_[c] = std::move(coeff);
    }

    Rational coefficient(const Coord& c) const {
        auto it = c_.find(c);
        return it == c_.end() ? Rational(0) : it->second;
    }

    const std::map<Coord, Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Weight operator-() const {
        Weight w;
        for (const auto& [c, q] : c_) w.c_[c] = -q;
        return w;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight w = a;
        for (const auto& [c, q] : b.c_) w.set(c, w.coefficient(c) + q);
        return w;
    }
    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

    Weight scaled(const Rational& f) const {
        Weight w;
        if (f.is_zero()) return w;
        for (const auto& [c, q] : c_) w.c_[c] = q * f;
        return w;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [c, q] : c_) {
            std::string coeff = q.abs() == Rational(1) ? "" : q.abs().str() + "*";
            if (first) {
                out += (q.sign() < 0 ? "-" : "") + coeff + c.str();
                first = false;
            } else {
                out += (q.sign() < 0 ? " - " : " + ") + coeff + c.str();
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

private:
    std::map<Coord, Rational> c_;
};

// Torus element given by exact angle assignments: the stored rational x for
// coordinate c means the angle x*pi. Composition is coordinatewise addition.
class GroupElementParams {
public:
    GroupElementParams() = default;

    void set_angle_pi(Coord c, Rational pi_multiple) { a_[c] = std::move(pi_multiple); }

    bool has(const Coord& c) const { return a_.count(c) > 0; }

    const Rational& angle_pi(const Coord& c) const {
        auto it = a_.find(c);
        if (it == a_.end())
            throw std::invalid_argument("GroupElementParams: unassigned coordinate " + c.str());
        return it->second;
    }

    const std::map<Coord, Rational>& angles() const { return a_; }

    friend GroupElementParams compose(const GroupElementParams& a, const GroupElementParams& b) {
        GroupElementParams p = a;
        for (const auto& [c, q] : b.a_) {
            auto it = p.a_.find(c);
            if (it == p.a_.end())
                p.a_[c] = q;
            else
                it->second = it->second + q;
        }
        return p;
    }

    std::string str() const {
        std::string out;
        for (const auto& [c, q] : a_) {
            if (!out.empty()) out += ", ";
            out += c.str() + "=" + q.str() + "*pi";
        }
        return out.empty() ? "(trivial)" : out;
    }

private:
    std::map<Coord, Rational> a_;
};

// The value w(p) as an exact multiple of pi (not reduced mod 2).
inline Rational weight_angle_pi(const Weight& w, const GroupElementParams& p) {
    Rational total(0);
    for (const auto& [c, q] : w.coefficients()) total += q * p.angle_pi(c);
    return total;
}

// e^{i pi q} with q rational reduced into [0, 2).
class RootOfUnity {
public:
    RootOfUnity() = default;
    static RootOfUnity from_half_turns(Rational q) { return RootOfUnity(q.mod(Rational(2))); }
    // From an angle given as a rational multiple of pi.
    static RootOfUnity from_angle_pi(const Rational& pi_multiple) { return from_half_turns(pi_multiple); }
    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return from_half_turns(Rational(1)); }

    const Rational& half_turns() const { return q_; }
    bool is_one() const { return q_.is_zero(); }
    bool is_real() const { return q_.is_integer(); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        return from_half_turns(a.q_ + b.q_);
    }
    RootOfUnity inverse() const { return from_half_turns(-q_); }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.q_ == b.q_; }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) { return a.q_ < b.q_; }

    std::string str() const {
        if (q_.is_zero()) return "1";
        if (q_ == Rational(1)) return "-1";
        if (q_ == Rational(1, 2)) return "i";
        if (q_ == Rational(3, 2)) return "-i";
        return "e^(i*pi*" + q_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) { return os << r.str(); }

private:
    explicit RootOfUnity(Rational q) : q_(std::move(q)) {}
    Rational q_{0};
};

// e^{i w(p)} evaluated exactly.
inline RootOfUnity evaluate_weight(const Weight& w, const GroupElementParams& p) {
    return RootOfUnity::from_angle_pi(weight_angle_pi(w, p));
}

} // namespace spindex

#endif
