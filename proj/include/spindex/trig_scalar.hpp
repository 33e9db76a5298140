#ifndef SPINDEX_TRIG_SCALAR_HPP
#define SPINDEX_TRIG_SCALAR_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spindex/gaussian_rational.hpp"

namespace spindex {

// Polynomial ring Q(i)[c_1, s_1, c_2, s_2, ...] modulo s_j^2 = 1 - c_j^2,
// kept in canonical form: every s-exponent is 0 or 1 and monomials are
// ordered lexicographically. Canonical forms are equal iff elements are
// equal, so == decides identities such as t * reversal(t) = 1.
//
// c_j, s_j stand for cos and sin of a formal half-angle; they are real
// indeterminates, so conjugation touches only the coefficients.
class TrigScalar {
public:
    // (c_exp, s_exp) per variable index; trailing (0,0) trimmed.
    using Mono = std::vector<std::pair<int, int>>;

    TrigScalar() = default;
    TrigScalar(const GaussianRational& g) { // NOLINT(google-explicit-constructor)
        if (!g.is_zero()) terms_[Mono{}] = g;
    }
    TrigScalar(long n) : TrigScalar(GaussianRational(n)) {} // NOLINT(google-explicit-constructor)
    TrigScalar(int n) : TrigScalar(GaussianRational(n)) {}  // NOLINT(google-explicit-constructor)

    static TrigScalar zero() { return {}; }
    static TrigScalar one() { return TrigScalar(1); }
    static TrigScalar from_gaussian(const GaussianRational& g) { return TrigScalar(g); }

    // cos/sin generators, 1-based variable index.
    static TrigScalar c(int j) { return generator(j, /*s=*/false); }
    static TrigScalar s(int j) { return generator(j, /*s=*/true); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
    }

    TrigScalar conj() const {
        TrigScalar r;
        for (const auto& [m, g] : terms_) r.terms_[m] = g.conj();
        return r;
    }

    TrigScalar operator-() const {
        TrigScalar r;
        for (const auto& [m, g] : terms_) r.terms_[m] = -g;
        return r;
    }

    friend TrigScalar operator+(const TrigScalar& a, const TrigScalar& b) {
        TrigScalar r = a;
        for (const auto& [m, g] : b.terms_) r.add_term(m, g);
        return r;
    }
    friend TrigScalar operator-(const TrigScalar& a, const TrigScalar& b) {
        TrigScalar r = a;
        for (const auto& [m, g] : b.terms_) r.add_term(m, -g);
        return r;
    }
    friend TrigScalar operator*(const TrigScalar& a, const TrigScalar& b) {
        TrigScalar r;
        for (const auto& [ma, ga] : a.terms_)
            for (const auto& [mb, gb] : b.terms_) {
                Mono raw = merge(ma, mb);
                r.reduce_add(raw, ga * gb);
            }
        return r;
    }

    TrigScalar& operator+=(const TrigScalar& o) { return *this = *this + o; }
    TrigScalar& operator-=(const TrigScalar& o) { return *this = *this - o; }
    TrigScalar& operator*=(const TrigScalar& o) { return *this = *this * o; }

    friend bool operator==(const TrigScalar& a, const TrigScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TrigScalar& a, const TrigScalar& b) { return !(a == b); }

    // Evaluates at concrete (cos, sin) pairs, 1-based by position.
    GaussianRational substitute(const std::vector<std::pair<GaussianRational, GaussianRational>>& values) const {
        GaussianRational total;
        for (const auto& [m, g] : terms_) {
            GaussianRational prod = g;
            for (size_t v = 0; v < m.size(); ++v) {
                if (v >= values.size() && (m[v].first > 0 || m[v].second > 0))
                    throw std::invalid_argument("TrigScalar::substitute: missing value for variable " +
                                                std::to_string(v + 1));
                for (int e = 0; e < m[v].first; ++e) prod *= values[v].first;
                for (int e = 0; e < m[v].second; ++e) prod *= values[v].second;
            }
            total += prod;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, g] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string mono = mono_str(m);
            if (mono.empty())
                out += "(" + g.str() + ")";
            else if (g.is_one())
                out += mono;
            else
                out += "(" + g.str() + ")*" + mono;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const TrigScalar& t) { return os << t.str(); }

private:
    static TrigScalar generator(int j, bool s) {
        if (j < 1) throw std::invalid_argument("TrigScalar: variable index must be >= 1");
        TrigScalar r;
        Mono m(static_cast<size_t>(j), {0, 0});
        if (s)
            m[j - 1].second = 1;
        else
            m[j - 1].first = 1;
        r.terms_[m] = GaussianRational::one();
        return r;
    }

    static Mono merge(const Mono& a, const Mono& b) {
        Mono m(std::max(a.size(), b.size()), {0, 0});
        for (size_t i = 0; i < a.size(); ++i) m[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) {
            m[i].first += b[i].first;
            m[i].second += b[i].second;
        }
        return m;
    }

    static void trim(Mono& m) {
        while (!m.empty() && m.back().first == 0 && m.back().second == 0) m.pop_back();
    }

    void add_term(Mono m, const GaussianRational& g) {
        if (g.is_zero()) return;
        trim(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), g);
        } else {
            it->second += g;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Rewrites s_j^(2a+b) -> (1 - c_j^2)^a s_j^b, then stores.
    void reduce_add(Mono m, const GaussianRational& coeff) {
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v].second >= 2) {
                int a = m[v].second / 2;
                int b = m[v].second % 2;
                m[v].second = b;
                // (1 - c^2)^a expanded binomially.
                long binom = 1;
                for (int i = 0; i <= a; ++i) {
                    Mono mi = m;
                    mi[v].first += 2 * i;
                    GaussianRational sign = (i % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
                    reduce_add(std::move(mi), coeff * GaussianRational(binom) * sign);
                    binom = binom * (a - i) / (i + 1);
                }
                return;
            }
        }
        add_term(std::move(m), coeff);
    }

    static std::string mono_str(const Mono& m) {
        std::string out;
        for (size_t v = 0; v < m.size(); ++v) {
            auto app = [&](char ch, int e) {
                if (e == 0) return;
                if (!out.empty()) out += "*";
                out += ch + std::to_string(v + 1);
                if (e > 1) out += "^" + std::to_string(e);
            };
            app('c', m[v].first);
            app('s', m[v].second);
        }
        return out;
    }

    std::map<Mono, GaussianRational> terms_;
};

} // namespace spindex

#endif
