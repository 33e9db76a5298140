#ifndef SPINDEX_CLIFFORD_HPP
#define SPINDEX_CLIFFORD_HPP

#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "spindex/config.hpp"
#include "spindex/gaussian_rational.hpp"
#include "spindex/trig_scalar.hpp"

namespace spindex {

// Commutative coefficient ring with conjugation and an embedding of Q(i).
template <typename R>
concept CoefficientRing = requires(const R a, const R b, const GaussianRational g) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { R::from_gaussian(g) } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a.conj() } -> std::same_as<R>;
    { a.is_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
};

// Inversions between two sorted index sets encoded as bit masks: the number
// of pairs (i in a, j in b) with i > j. Standard popcount ladder.
inline int blade_inversions(std::uint32_t a, std::uint32_t b) {
    int total = 0;
    a >>= 1;
    while (a != 0) {
        total += std::popcount(a & b);
        a >>= 1;
    }
    return total;
}

// Sign of e_A * e_B with e_i^2 = -1: transposition count to interleave the
// sorted lists, then one -1 per coincident index pair.
inline int blade_product_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = blade_inversions(a, b);
    int squares = std::popcount(a & b);
    return ((swaps + squares) % 2 == 0) ? 1 : -1;
}

// Element of Cl_n (complexified via the coefficient ring R). Basis blades
// e_{i1}...e_{ik}, i1 < ... < ik, are encoded as bit masks over {1..n}.
// Values are immutable after construction; all operations are pure.
template <CoefficientRing R>
class CliffordElement {
public:
    using Mask = std::uint32_t;

    explicit CliffordElement(int n) : n_(check_dim(n)) {}

    static CliffordElement scalar(int n, const R& value) {
        CliffordElement x(n);
        x.add(0, value);
        return x;
    }

    static CliffordElement generator(int n, int i) {
        CliffordElement x(n);
        if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
        x.add(Mask{1} << (i - 1), R::one());
        return x;
    }

    static CliffordElement blade(int n, Mask mask, const R& value) {
        CliffordElement x(n);
        if (n < 32 && (mask >> n) != 0) throw std::invalid_argument("blade does not fit dimension");
        x.add(mask, value);
        return x;
    }

    int dimension() const { return n_; }
    const std::map<Mask, R>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    R scalar_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? R::zero() : it->second;
    }

    R coefficient(Mask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? R::zero() : it->second;
    }

    // Every stored blade has even degree.
    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 != 0) return false;
        return true;
    }

    bool is_vector() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) != 1) return false;
        return true;
    }

    CliffordElement operator-() const {
        CliffordElement r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        CliffordElement r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, c);
        return r;
    }

    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        CliffordElement r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, -c);
        return r;
    }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        CliffordElement r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                int sign = blade_product_sign(ma, mb);
                R c = ca * cb;
                r.add(ma ^ mb, sign > 0 ? c : -c);
            }
        return r;
    }

    CliffordElement scaled(const R& value) const {
        CliffordElement r(n_);
        for (const auto& [m, c] : terms_) r.add(m, c * value);
        return r;
    }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string blade = blade_str(m);
            if (blade.empty())
                out += "(" + c.str() + ")";
            else
                out += "(" + c.str() + ")*" + blade;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CliffordElement& x) { return os << x.str(); }

private:
    static int check_dim(int n) {
        if (n < 1) throw std::invalid_argument("Clifford dimension must be >= 1");
        if (n > config::max_dimension())
            throw std::invalid_argument("Clifford dimension " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(config::max_dimension()));
        return n;
    }

    static void check_same(const CliffordElement& a, const CliffordElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Clifford dimension mismatch");
    }

    void add(Mask m, const R& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            R sum = it->second + c;
            if (sum.is_zero())
                terms_.erase(it);
            else
                it->second = sum;
        }
    }

    static std::string blade_str(Mask m) {
        std::string out;
        for (int i = 0; i < 32; ++i)
            if (m & (Mask{1} << i)) {
                if (!out.empty()) out += "*";
                out += "e" + std::to_string(i + 1);
            }
        return out;
    }

    int n_;
    std::map<Mask, R> terms_;
};

template <CoefficientRing R>
CliffordElement<R> clifford_product(const CliffordElement<R>& x, const CliffordElement<R>& y) {
    return x * y;
}

// Anti-automorphism e_{i1}...e_{ik} -> e_{ik}...e_{i1}: sign (-1)^(k(k-1)/2).
template <CoefficientRing R>
CliffordElement<R> reversal(const CliffordElement<R>& x) {
    CliffordElement<R> r(x.dimension());
    for (const auto& [m, c] : x.terms()) {
        int k = std::popcount(m);
        bool flip = ((k * (k - 1) / 2) % 2) != 0;
        r = r + CliffordElement<R>::blade(x.dimension(), m, flip ? -c : c);
    }
    return r;
}

template <CoefficientRing R>
CliffordElement<R> volume_element(int n) {
    if (n < 1) throw std::invalid_argument("volume_element: n must be >= 1");
    typename CliffordElement<R>::Mask all =
        (n >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    return CliffordElement<R>::blade(n, all, R::one());
}

inline CliffordElement<GaussianRational> volume_element(int n) {
    return volume_element<GaussianRational>(n);
}

// g y reversal(g) for even unit g (g reversal(g) = 1 checked) and vector y.
// Realizes the double cover on vectors: conjugation by
// cos(phi/2) + sin(phi/2) e1 e2 rotates the (e1, e2) plane by phi.
template <CoefficientRing R>
CliffordElement<R> vector_conjugation(const CliffordElement<R>& g, const CliffordElement<R>& y) {
    if (!g.is_even()) throw std::invalid_argument("vector_conjugation: g must be even");
    if (!y.is_vector()) throw std::invalid_argument("vector_conjugation: y must have degree 1");
    CliffordElement<R> gr = reversal(g);
    CliffordElement<R> unit = g * gr;
    if (unit != CliffordElement<R>::scalar(g.dimension(), R::one()))
        throw std::invalid_argument("vector_conjugation: g * reversal(g) != 1");
    CliffordElement<R> out = g * y * gr;
    if (!out.is_vector())
        throw std::logic_error("vector_conjugation: conjugate of a vector must be a vector");
    return out;
}

} // namespace spindex

#endif
