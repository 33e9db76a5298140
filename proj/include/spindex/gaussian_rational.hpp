#ifndef SPINDEX_GAUSSIAN_RATIONAL_HPP
#define SPINDEX_GAUSSIAN_RATIONAL_HPP

#include <ostream>
#include <string>

#include "spindex/rational.hpp"

namespace spindex {

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re_(n) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(int n) : re_(n) {}                   // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational from_gaussian(const GaussianRational& g) { return g; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational c = a * b.conj();
        return {c.re_ / n, c.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order used only for canonical container keys.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
        if (re_.is_zero()) return im;
        return re_.str() + (im_.sign() > 0 ? "+" : "") + im;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
    Rational re_{0};
    Rational im_{0};
};

// i^k for any integer k.
inline GaussianRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

} // namespace spindex

#endif
