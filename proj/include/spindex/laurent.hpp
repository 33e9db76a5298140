#ifndef SPINDEX_LAURENT_HPP
#define SPINDEX_LAURENT_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "spindex/rational.hpp"

namespace spindex {

// Laurent polynomial in w = z^(1/2) with exact rational coefficients: the
// carrier for half-integer z-powers. Integral powers of z sit on the even
// w-powers.
class HalfIntLaurent {
public:
    HalfIntLaurent() = default;

    static HalfIntLaurent monomial(long w_power, Rational coeff) {
        HalfIntLaurent p;
        if (!coeff.is_zero()) p.t_[w_power] = std::move(coeff);
        return p;
    }
    static HalfIntLaurent constant(Rational c) { return monomial(0, std::move(c)); }
    static HalfIntLaurent one() { return constant(Rational(1)); }
    // z^q for a rational q with denominator dividing 2.
    static HalfIntLaurent z_power(const Rational& q) {
        Rational two_q = q * Rational(2);
        if (!two_q.is_integer())
            throw std::invalid_argument("z_power: exponent must be a half-integer, got " + q.str());
        return monomial(two_q.to_long(), Rational(1));
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<long, Rational>& terms() const { return t_; }

    long ord() const { // lowest w-power
        if (is_zero()) throw std::domain_error("ord of zero");
        return t_.begin()->first;
    }
    long deg() const { // highest w-power
        if (is_zero()) throw std::domain_error("deg of zero");
        return t_.rbegin()->first;
    }
    const Rational& trailing_coeff() const { return t_.begin()->second; }
    const Rational& leading_coeff() const { return t_.rbegin()->second; }

    Rational coeff(long w_power) const {
        auto it = t_.find(w_power);
        return it == t_.end() ? Rational(0) : it->second;
    }

    bool all_powers_even() const {
        for (const auto& [p, c] : t_)
            if (p % 2 != 0) return false;
        return true;
    }

    bool is_constant() const { return is_zero() || (t_.size() == 1 && t_.begin()->first == 0); }

    HalfIntLaurent operator-() const {
        HalfIntLaurent r;
        for (const auto& [p, c] : t_) r.t_[p] = -c;
        return r;
    }

    friend HalfIntLaurent operator+(const HalfIntLaurent& a, const HalfIntLaurent& b) {
        HalfIntLaurent r = a;
        for (const auto& [p, c] : b.t_) r.add(p, c);
        return r;
    }
    friend HalfIntLaurent operator-(const HalfIntLaurent& a, const HalfIntLaurent& b) {
        HalfIntLaurent r = a;
        for (const auto& [p, c] : b.t_) r.add(p, -c);
        return r;
    }
    friend HalfIntLaurent operator*(const HalfIntLaurent& a, const HalfIntLaurent& b) {
        HalfIntLaurent r;
        for (const auto& [pa, ca] : a.t_)
            for (const auto& [pb, cb] : b.t_) r.add(pa + pb, ca * cb);
        return r;
    }

    HalfIntLaurent shifted(long dp) const {
        HalfIntLaurent r;
        for (const auto& [p, c] : t_) r.t_[p + dp] = c;
        return r;
    }

    HalfIntLaurent scaled(const Rational& f) const {
        HalfIntLaurent r;
        if (f.is_zero()) return r;
        for (const auto& [p, c] : t_) r.t_[p] = c * f;
        return r;
    }

    friend bool operator==(const HalfIntLaurent& a, const HalfIntLaurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const HalfIntLaurent& a, const HalfIntLaurent& b) { return !(a == b); }

    // Exact Laurent division: returns a / b when the remainder vanishes.
    // Both are shifted to ordinary polynomials, then long division runs.
    static std::optional<HalfIntLaurent> divide_exact(const HalfIntLaurent& a, const HalfIntLaurent& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
        if (a.is_zero()) return HalfIntLaurent{};
        long sa = a.ord(), sb = b.ord();
        HalfIntLaurent rem = a.shifted(-sa);
        HalfIntLaurent bb = b.shifted(-sb);
        HalfIntLaurent quot;
        const long db = bb.deg();
        while (!rem.is_zero() && rem.deg() >= db) {
            long p = rem.deg() - db;
            Rational c = rem.leading_coeff() / bb.leading_coeff();
            quot.add(p, c);
            rem = rem - bb.shifted(p).scaled(c);
        }
        if (!rem.is_zero()) return std::nullopt;
        return quot.shifted(sa - sb);
    }

    // Printed in w; even-only polynomials can be printed in z by the caller.
    std::string str(const std::string& var = "w", int denom_scale = 1) const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [p, c] = *it;
            std::string term;
            Rational ac = c.abs();
            bool neg = c.sign() < 0;
            std::string power;
            long q = p / denom_scale;
            if (p != 0) {
                power = var;
                if (q != 1) power += "^" + std::to_string(q);
            }
            if (power.empty())
                term = ac.str();
            else if (ac == Rational(1))
                term = power;
            else
                term = ac.str() + "*" + power;
            if (first) {
                out += (neg ? "-" : "") + term;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
        return out;
    }

    std::string str_z() const {
        if (!all_powers_even()) return str("w");
        return str("z", 2);
    }

    friend std::ostream& operator<<(std::ostream& os, const HalfIntLaurent& p) { return os << p.str(); }

private:
    void add(long p, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(p);
        if (it == t_.end()) {
            t_[p] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::map<long, Rational> t_;
};

// Limit of a ratio of Laurent polynomials at an endpoint, decided by degree
// comparison; divergence is a flag, not an error.
struct LimitValue {
    bool divergent = false;
    Rational value{0};

    bool is_zero() const { return !divergent && value.is_zero(); }

    std::string str() const { return divergent ? "divergent" : value.str(); }

    friend bool operator==(const LimitValue& a, const LimitValue& b) {
        return a.divergent == b.divergent && (a.divergent || a.value == b.value);
    }
};

// Ratio of Laurent polynomials in w, reduced by monomial content only;
// equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(HalfIntLaurent::one()) {}

    RationalFunction(HalfIntLaurent num, HalfIntLaurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    static RationalFunction from_laurent(HalfIntLaurent p) {
        return RationalFunction(std::move(p), HalfIntLaurent::one());
    }
    static RationalFunction zero() { return RationalFunction(); }

    const HalfIntLaurent& num() const { return num_; }
    const HalfIntLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Exact value as a Laurent polynomial, when the denominator divides.
    std::optional<HalfIntLaurent> as_laurent() const {
        return HalfIntLaurent::divide_exact(num_, den_);
    }

    std::string str() const {
        if (num_.is_zero()) return "0";
        if (den_ == HalfIntLaurent::one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = HalfIntLaurent::one();
            return;
        }
        // Remove monomial content: shift so the lower of the two orders is 0,
        // and scale by the denominator's trailing coefficient.
        long shift = std::min(num_.ord(), den_.ord());
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
        Rational lead = den_.trailing_coeff();
        if (lead != Rational(1)) {
            Rational inv = Rational(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    HalfIntLaurent num_;
    HalfIntLaurent den_;
};

// (limit at z -> 0, limit at z -> infinity), each exact or a divergence flag.
inline std::pair<LimitValue, LimitValue> limits(const RationalFunction& f) {
    if (f.is_zero()) return {LimitValue{false, Rational(0)}, LimitValue{false, Rational(0)}};
    const auto& n = f.num();
    const auto& d = f.den();
    LimitValue at0, atinf;
    long low = n.ord() - d.ord();
    if (low > 0)
        at0 = {false, Rational(0)};
    else if (low == 0)
        at0 = {false, n.trailing_coeff() / d.trailing_coeff()};
    else
        at0 = {true, Rational(0)};
    long high = n.deg() - d.deg();
    if (high < 0)
        atinf = {false, Rational(0)};
    else if (high == 0)
        atinf = {false, n.leading_coeff() / d.leading_coeff()};
    else
        atinf = {true, Rational(0)};
    return {at0, atinf};
}

} // namespace spindex

#endif
