#ifndef SPANPOLY_SCALAR_HPP
#define SPANPOLY_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "spanpoly/error.hpp"

namespace spanpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// A coefficient value: either an exact Gaussian rational (re + im*i with
/// rational parts, normalized to lowest terms by the backend) or a
/// double-precision complex number. Any operation mixing the two tags
/// promotes to the float representation.
class Scalar {
public:
    Scalar() : exact_(true) {}  // exact zero
    Scalar(int v) : exact_(true), re_(v) {}
    Scalar(long long v) : exact_(true), re_(static_cast<std::int64_t>(v)) {}
    Scalar(Rational r) : exact_(true), re_(std::move(r)) {}
    Scalar(Rational re, Rational im) : exact_(true), re_(std::move(re)), im_(std::move(im)) {}
    Scalar(double v) : exact_(false), f_(v, 0.0) {}
    Scalar(Complex z) : exact_(false), f_(z) {}

    static Scalar exact_ratio(BigInt num, BigInt den) {
        if (den == 0) throw_argument("rational with zero denominator");
        if (den < 0) {  // the backend wants a positive denominator
            num = -num;
            den = -den;
        }
        return Scalar(Rational(std::move(num), std::move(den)));
    }

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ ? (re_ == 0 && im_ == 0) : (f_ == Complex(0.0, 0.0)); }
    bool is_one() const { return exact_ ? (re_ == 1 && im_ == 0) : (f_ == Complex(1.0, 0.0)); }
    bool is_real() const { return exact_ ? (im_ == 0) : (f_.imag() == 0.0); }
    bool is_nonneg_real() const {
        return exact_ ? (im_ == 0 && re_ >= 0) : (f_.imag() == 0.0 && f_.real() >= 0.0);
    }

    /// Exact accessors; only valid when is_exact().
    const Rational& exact_re() const { require_exact(); return re_; }
    const Rational& exact_im() const { require_exact(); return im_; }

    Complex to_complex() const {
        if (!exact_) return f_;
        return Complex(rational_to_double(re_), rational_to_double(im_));
    }

    double abs() const { return std::abs(to_complex()); }

    Scalar operator-() const {
        if (exact_) return Scalar(-re_, -im_);
        return Scalar(-f_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.re_ + b.re_, a.im_ + b.im_);
        return Scalar(a.to_complex() + b.to_complex());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.re_ - b.re_, a.im_ - b.im_);
        return Scalar(a.to_complex() - b.to_complex());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
            return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
        }
        return Scalar(a.to_complex() * b.to_complex());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw_argument("scalar division by zero");
        if (a.exact_ && b.exact_) {
            if (b.im_.is_zero()) return Scalar(a.re_ / b.re_, a.im_.is_zero() ? Rational() : a.im_ / b.re_);
            Rational n = b.re_ * b.re_ + b.im_ * b.im_;
            return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n,
                          (a.im_ * b.re_ - a.re_ * b.im_) / n);
        }
        return Scalar(a.to_complex() / b.to_complex());
    }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar pow(unsigned e) const {
        Scalar acc(1);
        Scalar base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    /// Equality is within-tag: exact compares rationals, float compares bits.
    /// Mixed tags are never equal (a promoted value is a different object).
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact_ != b.exact_) return false;
        if (a.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
        return a.f_ == b.f_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" (or "p" when q = 1) for exact reals; only valid for real exacts.
    std::string exact_real_string() const {
        require_exact();
        if (im_ != 0) throw_argument("exact_real_string on a non-real scalar");
        return rational_string(re_);
    }

    static std::string rational_string(const Rational& r) {
        BigInt num = boost::multiprecision::numerator(r);
        BigInt den = boost::multiprecision::denominator(r);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    static double rational_to_double(const Rational& r) {
        return r.convert_to<double>();
    }

private:
    void require_exact() const {
        if (!exact_) throw_argument("exact accessor used on a float scalar");
    }

    bool exact_;
    Rational re_;
    Rational im_;
    Complex f_{0.0, 0.0};
};

}  // namespace spanpoly

#endif
