#ifndef SPANPOLY_UNIPOLY_HPP
#define SPANPOLY_UNIPOLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "spanpoly/scalar.hpp"

namespace spanpoly {

/// Dense univariate polynomial; coeffs_[j] is the coefficient of z^j.
/// Trailing zeros are trimmed, so the zero polynomial has no stored
/// coefficients (degree() reports -1 for it, standing in for -infinity).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Scalar c) { return UniPoly(std::vector<Scalar>{std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar coeff(std::size_t j) const {
        return j < coeffs_.size() ? coeffs_[j] : Scalar(0);
    }

    /// Horner evaluation preserving exactness when both operands are exact.
    Scalar eval(const Scalar& z) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Complex eval(Complex z) const {
        Complex acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
        return UniPoly(std::move(out));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(out));
    }

    UniPoly scaled(const Scalar& c) const {
        std::vector<Scalar> out = coeffs_;
        for (auto& x : out) x *= c;
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

}  // namespace spanpoly

#endif
