#ifndef SPANPOLY_ALGEBRA_HPP
#define SPANPOLY_ALGEBRA_HPP

#include <span>
#include <vector>

#include "spanpoly/multipoly.hpp"
#include "spanpoly/scalar.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

/// Exact binomial coefficient; zero for k < 0 or k > n.
BigInt binomial(unsigned n, long long k);

/// e_j(vals), by the one-pass recurrence that expands prod(1 + v_i t)
/// keeping coefficients up to t^j.
Scalar elem_sym(std::size_t j, std::span<const Scalar> vals);

/// Elementary symmetric functions e_0..e_m of vals in one pass.
std::vector<Scalar> elem_sym_prefix(std::size_t m, std::span<const Scalar> vals);

/// The d-th polarization of p: z^j becomes binom(d,j)^{-1} e_j(z_1..z_d),
/// a multiaffine symmetric polynomial in variables 0..d-1 whose diagonal
/// restriction reproduces p. Capped at d <= 20 (up to 2^d terms).
MultiPoly polarize(const UniPoly& p, unsigned d);

/// Coefficientwise composition: result coefficient j is u[j] * p_j for
/// 0 <= j <= d (the key being K(z) = sum binom(d,j) u_j z^j).
UniPoly schur_szego(const UniPoly& p, std::span<const Scalar> u, unsigned d);

}  // namespace spanpoly

#endif
