#ifndef SPINDEX_SPIN_MATRIX_HPP
#define SPINDEX_SPIN_MATRIX_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "spindex/clifford.hpp"
#include "spindex/sign_vectors.hpp"

namespace spindex {

// Dense square matrix over an exact coefficient ring; dimensions are powers
// of two (endomorphisms of the 2^k spinor space).
template <CoefficientRing R>
class SpinMatrix {
public:
    explicit SpinMatrix(int dim) : dim_(check_dim(dim)), e_(static_cast<size_t>(dim) * dim, R::zero()) {}

    static SpinMatrix identity(int dim) {
        SpinMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = R::one();
        return m;
    }

    static SpinMatrix zero(int dim) { return SpinMatrix(dim); }

    int dim() const { return dim_; }

    R& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const R& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    SpinMatrix operator-() const {
        SpinMatrix m(dim_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }

    friend SpinMatrix operator+(const SpinMatrix& a, const SpinMatrix& b) {
        check_same(a, b);
        SpinMatrix m(a.dim_);
        for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend SpinMatrix operator-(const SpinMatrix& a, const SpinMatrix& b) {
        check_same(a, b);
        SpinMatrix m(a.dim_);
        for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    friend SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b) {
        check_same(a, b);
        SpinMatrix m(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const R& aik = a.at(i, k);
                if (aik.is_zero()) continue; // generator images are sparse
                for (int j = 0; j < a.dim_; ++j) {
                    const R& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    m.at(i, j) = m.at(i, j) + aik * bkj;
                }
            }
        return m;
    }

    SpinMatrix scaled(const R& v) const {
        SpinMatrix m(dim_);
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * v;
        return m;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("SpinMatrix::apply: size mismatch");
        std::vector<R> out(static_cast<size_t>(dim_), R::zero());
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const R& a = at(i, j);
                if (a.is_zero()) continue;
                out[i] = out[i] + a * v[j];
            }
        return out;
    }

    // A (x) B with the row convention (A(x)B)[a*db + b] = A[a] * B[b].
    friend SpinMatrix kron(const SpinMatrix& a, const SpinMatrix& b) {
        SpinMatrix m(a.dim_ * b.dim_);
        for (int ar = 0; ar < a.dim_; ++ar)
            for (int ac = 0; ac < a.dim_; ++ac) {
                const R& av = a.at(ar, ac);
                if (av.is_zero()) continue;
                for (int br = 0; br < b.dim_; ++br)
                    for (int bc = 0; bc < b.dim_; ++bc) {
                        const R& bv = b.at(br, bc);
                        if (bv.is_zero()) continue;
                        m.at(ar * b.dim_ + br, ac * b.dim_ + bc) = av * bv;
                    }
            }
        return m;
    }

    friend bool operator==(const SpinMatrix& a, const SpinMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SpinMatrix& a, const SpinMatrix& b) { return !(a == b); }

    bool is_identity() const { return *this == identity(dim_); }
    bool is_minus_identity() const { return *this == -identity(dim_); }

private:
    static int check_dim(int dim) {
        if (dim < 1 || !std::has_single_bit(static_cast<unsigned>(dim)))
            throw std::invalid_argument("SpinMatrix dimension must be a power of two");
        return dim;
    }
    static void check_same(const SpinMatrix& a, const SpinMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("SpinMatrix dimension mismatch");
    }

    int dim_;
    std::vector<R> e_;
};

namespace detail {

inline SpinMatrix<GaussianRational> mat2(GaussianRational a, GaussianRational b,
                                         GaussianRational c, GaussianRational d) {
    SpinMatrix<GaussianRational> m(2);
    m.at(0, 0) = std::move(a);
    m.at(0, 1) = std::move(b);
    m.at(1, 0) = std::move(c);
    m.at(1, 1) = std::move(d);
    return m;
}

inline const SpinMatrix<GaussianRational>& id2() {
    static const auto m = mat2(GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(1));
    return m;
}
inline const SpinMatrix<GaussianRational>& g1() {
    static const auto m = mat2(GaussianRational::i(), GaussianRational(0), GaussianRational(0), -GaussianRational::i());
    return m;
}
inline const SpinMatrix<GaussianRational>& g2() {
    static const auto m = mat2(GaussianRational(0), GaussianRational::i(), GaussianRational::i(), GaussianRational(0));
    return m;
}
inline const SpinMatrix<GaussianRational>& t_mat() {
    static const auto m = mat2(GaussianRational(0), -GaussianRational::i(), GaussianRational::i(), GaussianRational(0));
    return m;
}

} // namespace detail

inline int spinor_rank(int n) { return n / 2; } // k with dim(spinors) = 2^k

// Image of the generator e_i under the explicit isomorphism built from the
// 2x2 blocks Id, g1, g2, T:
//   e_{2j-1} -> Id^(k-j) (x) g1 (x) T^(j-1)
//   e_{2j}   -> Id^(k-j) (x) g2 (x) T^(j-1)
//   e_{2k+1} -> i T^(k)          (n odd)
inline SpinMatrix<GaussianRational> kappa_generator(int n, int i) {
    if (n < 1) throw std::invalid_argument("kappa_generator: n must be >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("kappa_generator: index out of range");
    int k = spinor_rank(n);
    if (k == 0) throw std::invalid_argument("kappa_generator: n must be >= 2");
    SpinMatrix<GaussianRational> m(1);
    m.at(0, 0) = GaussianRational(1);
    if (i == 2 * k + 1) {
        for (int f = 0; f < k; ++f) m = kron(m, detail::t_mat());
        return m.scaled(GaussianRational::i());
    }
    int j = (i + 1) / 2;
    const auto& head = (i % 2 == 1) ? detail::g1() : detail::g2();
    for (int f = 0; f < k - j; ++f) m = kron(m, detail::id2());
    m = kron(m, head);
    for (int f = 0; f < j - 1; ++f) m = kron(m, detail::t_mat());
    return m;
}

// Linear extension of the generator images: an algebra homomorphism from
// Cl_n into End of C^(2^k), projecting to the first factor for n odd.
template <CoefficientRing R>
SpinMatrix<R> kappa(const CliffordElement<R>& x) {
    int n = x.dimension();
    int k = spinor_rank(n);
    int dim = 1 << k;
    SpinMatrix<R> out(dim);
    for (const auto& [mask, coeff] : x.terms()) {
        SpinMatrix<GaussianRational> prod = SpinMatrix<GaussianRational>::identity(dim);
        for (int i = 1; i <= n; ++i)
            if (mask & (std::uint32_t{1} << (i - 1))) prod = prod * kappa_generator(n, i);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const auto& v = prod.at(r, c);
                if (v.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + coeff * R::from_gaussian(v);
            }
    }
    return out;
}

// Basis spinor u_{eps_1,...,eps_k} = u_{eps_1} (x) ... (x) u_{eps_k} with the
// unnormalized factors u_{+1} = (1, -i), u_{-1} = (1, i). Dropping the 1/sqrt2
// keeps every entry Gaussian-rational; the eigen-relations are scale-invariant.
struct WeightSpinor {
    std::vector<int> signs;                  // eps_j in {+1, -1}
    std::vector<GaussianRational> coords;    // 2^k entries
};

inline WeightSpinor weight_spinor(const std::vector<int>& signs) {
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("weight_spinor: signs must be +-1");
    std::vector<GaussianRational> v{GaussianRational(1)};
    for (int s : signs) {
        std::vector<GaussianRational> factor{GaussianRational(1),
                                             s == 1 ? -GaussianRational::i() : GaussianRational::i()};
        std::vector<GaussianRational> next(v.size() * 2);
        for (size_t a = 0; a < v.size(); ++a)
            for (size_t b = 0; b < 2; ++b) next[a * 2 + b] = v[a] * factor[b];
        v = std::move(next);
    }
    return WeightSpinor{signs, std::move(v)};
}

// Exact rank over the Gaussian rationals (a field), by Gauss elimination.
inline int rank(SpinMatrix<GaussianRational> m) {
    int n = m.dim();
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int row = r; row < n; ++row)
            if (!m.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(r, c));
        GaussianRational inv = GaussianRational(1) / m.at(r, col);
        for (int c = 0; c < n; ++c) m.at(r, c) = m.at(r, c) * inv;
        for (int row = 0; row < n; ++row) {
            if (row == r || m.at(row, col).is_zero()) continue;
            GaussianRational f = m.at(row, col);
            for (int c = 0; c < n; ++c) m.at(row, c) = m.at(row, c) - f * m.at(r, c);
        }
        ++r;
    }
    return r;
}

struct ChiralitySplit {
    SpinMatrix<GaussianRational> plus_projector;
    SpinMatrix<GaussianRational> minus_projector;
    GaussianRational vol_eigenvalue_plus;   // eigenvalue of kappa(vol_n) on the + half
    GaussianRational vol_eigenvalue_minus;
    int rank_plus = 0;
    int rank_minus = 0;
};

// Involution psi -> (-i)^(n/2) vol_n . psi for n even. The sign convention
// puts u_{1,...,1} in the + half; kappa(vol_n) then acts on the halves by
// +-i^(n/2).
inline ChiralitySplit chirality_split(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("chirality_split: n must be even and >= 2");
    int k = n / 2;
    int dim = 1 << k;
    auto vol = kappa(volume_element(n));
    auto invol = vol.scaled(i_power(-k)); // (-i)^(n/2) = i^(-k)
    if (invol * invol != SpinMatrix<GaussianRational>::identity(dim))
        throw std::logic_error("chirality_split: involution does not square to the identity");
    auto id = SpinMatrix<GaussianRational>::identity(dim);
    GaussianRational half(Rational(1, 2));
    ChiralitySplit out{
        (id + invol).scaled(half), (id - invol).scaled(half),
        i_power(k), -i_power(k), 0, 0};
    out.rank_plus = rank(out.plus_projector);
    out.rank_minus = rank(out.minus_projector);
    if (out.rank_plus != out.rank_minus)
        throw std::logic_error("chirality_split: halves must have equal rank");
    // Normative convention check: u_{1,...,1} lies in the + half.
    auto u = weight_spinor(std::vector<int>(static_cast<size_t>(k), 1));
    if (invol.apply(u.coords) != u.coords)
        throw std::logic_error("chirality_split: u_{1,...,1} must be positive");
    return out;
}

// Action classification of a matrix on one chirality half, tested on the
// spanning weight spinors of that half.
enum class HalfAction { Identity, MinusIdentity, Other };

inline HalfAction half_action(const SpinMatrix<GaussianRational>& m, int n, int parity) {
    int k = n / 2;
    HalfAction result = HalfAction::Identity;
    bool first = true;
    for (const auto& signs : all_sign_vectors(k)) {
        if (negative_count(signs) % 2 != parity) continue;
        auto u = weight_spinor(signs);
        auto mu = m.apply(u.coords);
        HalfAction h;
        if (mu == u.coords)
            h = HalfAction::Identity;
        else {
            bool minus = true;
            for (size_t i = 0; i < mu.size(); ++i)
                if (mu[i] != -u.coords[i]) { minus = false; break; }
            h = minus ? HalfAction::MinusIdentity : HalfAction::Other;
        }
        if (first) {
            result = h;
            first = false;
        } else if (h != result) {
            return HalfAction::Other;
        }
        if (result == HalfAction::Other) return result;
    }
    return result;
}

struct KernelCheck {
    int r = 0;
    bool pass = false;
    // Classification of kappa^+/- on {1, -1, vol_r, -vol_r}, in that order.
    std::vector<HalfAction> plus_actions;
    std::vector<HalfAction> minus_actions;
    std::string detail;
};

// Verifies ker(kappa_r^+) = {1, vol_r} and ker(kappa_r^-) = {1, -vol_r} for
// r = 0 (mod 8), with vol_r and -vol_r swapped for r = 4 (mod 8). r = 4 is
// outside the statement and rejected.
inline KernelCheck kernel_check(int r) {
    if (r % 4 != 0 || r == 4 || r < 8)
        throw std::invalid_argument("kernel_check: r must be a multiple of 4, r >= 8");
    int dim = 1 << (r / 2);
    auto id = SpinMatrix<GaussianRational>::identity(dim);
    auto vol = kappa(volume_element(r));
    std::vector<std::pair<std::string, SpinMatrix<GaussianRational>>> elems{
        {"1", id}, {"-1", -id}, {"vol", vol}, {"-vol", -vol}};

    KernelCheck out;
    out.r = r;
    bool vol_in_plus_kernel = (r % 8 == 0); // else -vol
    out.pass = true;
    for (int e = 0; e < 4; ++e) {
        auto hp = half_action(elems[e].second, r, 0);
        auto hm = half_action(elems[e].second, r, 1);
        out.plus_actions.push_back(hp);
        out.minus_actions.push_back(hm);
        bool expect_plus_id = (e == 0) || (vol_in_plus_kernel ? e == 2 : e == 3);
        bool expect_minus_id = (e == 0) || (vol_in_plus_kernel ? e == 3 : e == 2);
        HalfAction want_p = expect_plus_id ? HalfAction::Identity : HalfAction::MinusIdentity;
        HalfAction want_m = expect_minus_id ? HalfAction::Identity : HalfAction::MinusIdentity;
        if (hp != want_p || hm != want_m) {
            out.pass = false;
            out.detail += elems[e].first + " misclassified; ";
        }
    }
    return out;
}

// t(phi_1,...,phi_k) = prod_j (c_j + s_j e_{2j-1} e_{2j}) with formal
// half-angle cosines and sines.
inline CliffordElement<TrigScalar> torus_spin_element(int k, int n = 0) {
    if (k < 1) throw std::invalid_argument("torus_spin_element: k must be >= 1");
    if (n == 0) n = 2 * k;
    if (n < 2 * k) throw std::invalid_argument("torus_spin_element: n too small for k blocks");
    auto t = CliffordElement<TrigScalar>::scalar(n, TrigScalar::one());
    for (int j = 1; j <= k; ++j) {
        std::uint32_t blade = (std::uint32_t{1} << (2 * j - 2)) | (std::uint32_t{1} << (2 * j - 1));
        auto factor = CliffordElement<TrigScalar>::scalar(n, TrigScalar::c(j)) +
                      CliffordElement<TrigScalar>::blade(n, blade, TrigScalar::s(j));
        t = t * factor;
    }
    return t;
}

struct WeightEigenReport {
    bool pass = false;
    int n = 0;
    // Failing sign vectors with both sides' canonical forms.
    std::vector<std::string> failures;
};

// Formal check that each u_eps is an eigenvector of kappa(t(phi)) with
// eigenvalue prod_j (c_j + i eps_{k+1-j} s_j); the index reversal comes from
// the tensor-factor order of the explicit isomorphism.
inline WeightEigenReport weight_eigencheck(int n) {
    if (n < 2) throw std::invalid_argument("weight_eigencheck: n must be >= 2");
    if (n > 9) throw GuardExceeded("weight_eigencheck: formal matrices beyond n = 9 are not desk scale");
    int k = spinor_rank(n);
    WeightEigenReport rep;
    rep.n = n;
    rep.pass = true;
    auto t = torus_spin_element(k, n);
    auto mat = kappa(t);
    for (const auto& signs : all_sign_vectors(k)) {
        auto u = weight_spinor(signs);
        std::vector<TrigScalar> uvec;
        uvec.reserve(u.coords.size());
        for (const auto& g : u.coords) uvec.push_back(TrigScalar::from_gaussian(g));
        auto lhs = mat.apply(uvec);
        TrigScalar eigen = TrigScalar::one();
        for (int j = 1; j <= k; ++j) {
            TrigScalar is = TrigScalar::from_gaussian(
                signs[static_cast<size_t>(k - j)] == 1 ? GaussianRational::i() : -GaussianRational::i());
            eigen *= TrigScalar::c(j) + is * TrigScalar::s(j);
        }
        bool ok = true;
        for (size_t idx = 0; idx < lhs.size(); ++idx)
            if (lhs[idx] != eigen * uvec[idx]) { ok = false; break; }
        if (!ok) {
            rep.pass = false;
            std::string sgn;
            for (int s : signs) sgn += (s == 1 ? '+' : '-');
            rep.failures.push_back("eps=" + sgn + ": kappa(t)u != [" + eigen.str() + "]*u");
        }
    }
    return rep;
}

} // namespace spindex

#endif
