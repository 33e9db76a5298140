#ifndef SPINDEX_SERIES_HPP
#define SPINDEX_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spindex/localization.hpp"

namespace spindex {

// Univariate truncated power series with exact rational coefficients.
class PowerSeries {
public:
    explicit PowerSeries(int degree) : c_(static_cast<size_t>(degree) + 1, Rational(0)) {}

    static PowerSeries constant(int degree, Rational v) {
        PowerSeries s(degree);
        s.c_[0] = std::move(v);
        return s;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& coeff(int i) { return c_[static_cast<size_t>(i)]; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.degree(), b.degree()));
        for (int i = 0; i <= r.degree(); ++i)
            for (int j = 0; i + j <= r.degree() && j <= b.degree(); ++j) {
                if (i > a.degree()) break;
                r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        return r;
    }

    // a / b with b(0) != 0, by the standard recurrence.
    friend PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
        if (b.coeff(0).is_zero()) throw std::domain_error("series division needs a unit constant term");
        PowerSeries q(std::min(a.degree(), b.degree()));
        for (int n = 0; n <= q.degree(); ++n) {
            Rational acc = n <= a.degree() ? a.coeff(n) : Rational(0);
            for (int i = 0; i < n; ++i) acc -= q.coeff(i) * b.coeff(n - i);
            q.coeff(n) = acc / b.coeff(0);
        }
        return q;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

// Coefficients of x / (e^(x/2) - e^(-x/2)) through degree D, by exact series
// division: the denominator over x is sum_i x^(2i) / (4^i (2i+1)!).
inline PowerSeries ahat_factor_series(int D) {
    if (D < 0 || D > 16) throw std::invalid_argument("ahat_factor_series: degree must be in [0, 16]");
    PowerSeries den(D);
    Rational four_pow(1);
    Rational fact(1); // (2i+1)!
    for (int i = 0; 2 * i <= D; ++i) {
        if (i > 0) {
            four_pow *= Rational(4);
            fact *= Rational(2 * i) * Rational(2 * i + 1);
        }
        den.coeff(2 * i) = Rational(1) / (four_pow * fact);
    }
    return divide(PowerSeries::constant(D, Rational(1)), den);
}

// Multivariate polynomial in torus coordinates, truncated at a total degree.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Coord> vars, int degree) : vars_(std::move(vars)), degree_(degree) {
        if (degree_ < 0) throw std::invalid_argument("TruncatedSeries: negative degree");
    }

    static TruncatedSeries constant(std::vector<Coord> vars, int degree, const Rational& v) {
        TruncatedSeries s(std::move(vars), degree);
        if (!v.is_zero()) s.t_[std::vector<int>(s.vars_.size(), 0)] = v;
        return s;
    }

    // Degree-1 polynomial from a linear form.
    static TruncatedSeries linear(const std::vector<Coord>& vars, int degree, const Weight& w) {
        TruncatedSeries s(vars, degree);
        if (degree == 0) return s;
        for (const auto& [c, q] : w.coefficients()) {
            std::vector<int> e(vars.size(), 0);
            bool found = false;
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == c) {
                    e[i] = 1;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("TruncatedSeries: weight uses coordinate " + c.str() +
                                            " outside the variable list");
            s.add(e, q);
        }
        return s;
    }

    const std::vector<Coord>& variables() const { return vars_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rational>& terms() const { return t_; }

    Rational coeff(const std::vector<int>& exps) const {
        auto it = t_.find(exps);
        return it == t_.end() ? Rational(0) : it->second;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries r = a;
        for (const auto& [e, q] : b.t_) r.add(e, q);
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries r(a.vars_, a.degree_);
        for (const auto& [ea, qa] : a.t_)
            for (const auto& [eb, qb] : b.t_) {
                int total = 0;
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    total += e[i];
                }
                if (total > a.degree_) continue;
                r.add(e, qa * qb);
            }
        return r;
    }

    TruncatedSeries scaled(const Rational& f) const {
        TruncatedSeries r(vars_, degree_);
        if (f.is_zero()) return r;
        for (const auto& [e, q] : t_) r.t_[e] = q * f;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.t_ == b.t_;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, q] : t_) {
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i].str();
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string term = mono.empty() ? q.str() : (q == Rational(1) ? mono : q.str() + "*" + mono);
            if (q.sign() < 0 && !mono.empty()) term = q.str() + "*" + mono;
            out += (first ? "" : " + ") + term;
            first = false;
        }
        return out;
    }

private:
    void check_compatible(const TruncatedSeries& o) const {
        if (vars_ != o.vars_ || degree_ != o.degree_)
            throw std::invalid_argument("TruncatedSeries: incompatible operands");
    }

    void add(const std::vector<int>& e, const Rational& q) {
        if (q.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_[e] = q;
        } else {
            it->second += q;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::vector<Coord> vars_;
    int degree_;
    std::map<std::vector<int>, Rational> t_;
};

// f(linear form) for a univariate series f, truncated at the target degree.
inline TruncatedSeries compose_series(const PowerSeries& f, const std::vector<Coord>& vars, int degree,
                                      const Weight& linear_form) {
    TruncatedSeries lin = TruncatedSeries::linear(vars, degree, linear_form);
    TruncatedSeries acc = TruncatedSeries::constant(vars, degree, f.coeff(0));
    TruncatedSeries pw = TruncatedSeries::constant(vars, degree, Rational(1));
    for (int j = 1; j <= degree && j <= f.degree(); ++j) {
        pw = pw * lin;
        acc = acc + pw.scaled(f.coeff(j));
    }
    return acc;
}

// exp(linear form) truncated.
inline TruncatedSeries exp_series(const std::vector<Coord>& vars, int degree, const Weight& w) {
    PowerSeries e(degree);
    Rational fact(1);
    for (int j = 0; j <= degree; ++j) {
        if (j > 0) fact *= Rational(j);
        e.coeff(j) = Rational(1) / fact;
    }
    return compose_series(e, vars, degree, w);
}

// Product over the tangent roots eta of the genus factor
// eta / (e^(eta/2) - e^(-eta/2)), truncated at total degree D, optionally
// multiplied by the Chern character sum e^nu over the twist's weights.
inline TruncatedSeries formal_genus_truncation(const RepDescriptor& desc,
                                               const std::optional<PowerProfile>& prof, int D) {
    if (D < 0 || D > 6) throw GuardExceeded("formal_genus_truncation: degree guard is [0, 6]");
    std::vector<Coord> vars = desc.coords();
    if (vars.size() > 6) throw GuardExceeded("formal_genus_truncation: more than 6 formal variables");
    PowerSeries factor = ahat_factor_series(D);
    TruncatedSeries acc = TruncatedSeries::constant(vars, D, Rational(1));
    for (const auto& eta : tangent_weight_assignment(desc))
        acc = acc * compose_series(factor, vars, D, eta);
    if (prof) {
        if (twist_weight_count(desc, *prof) > (1ULL << 16))
            throw GuardExceeded("formal_genus_truncation: twist enumeration guard");
        TruncatedSeries ch(vars, D);
        bool any = false;
        std::vector<std::vector<Weight>> lists = twist_weight_lists(desc, *prof);
        std::vector<Weight> all{Weight{}};
        for (const auto& lst : lists) {
            std::vector<Weight> next;
            next.reserve(all.size() * lst.size());
            for (const auto& a : all)
                for (const auto& b : lst) next.push_back(a + b);
            all = std::move(next);
        }
        for (const auto& nu : all) {
            ch = ch + exp_series(vars, D, nu);
            any = true;
        }
        if (any) acc = acc * ch;
    }
    return acc;
}

} // namespace spindex

#endif
