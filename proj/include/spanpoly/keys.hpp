#ifndef SPANPOLY_KEYS_HPP
#define SPANPOLY_KEYS_HPP

#include <optional>
#include <string>
#include <vector>

#include "spanpoly/roots.hpp"
#include "spanpoly/scalar.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

/// Key polynomial K(z) = sum_j binom(d,j) u_j z^j for a degree-d vertex.
struct KeyPolynomial {
    unsigned d;
    std::vector<Scalar> u;  // activities, length d + 1
    UniPoly poly;           // coefficient j is binom(d,j) * u_j, exactly
};

KeyPolynomial key_from_activities(std::vector<Scalar> u, unsigned d);

/// Activity vectors for the named families at a degree-d vertex.
/// matching:    u_0 = u_1 = 1, the rest 0 (key 1 + dz)
/// interval:    u_k = 1 for f <= k <= min(g, d); errors when f > d
/// ruelle:      u_0 = u_2 = 1, u_1 = u, the rest 0
/// symmetric2k: d = 2k with u_0 = u_k = 1 scaled so K = 1 + binom(2k,k)z^k + u z^2k
/// reciprocal:  u_j = 1/binom(d,j) (key 1 + z + ... + z^d)
std::vector<Scalar> matching_activities(unsigned d);
std::vector<Scalar> interval_activities(unsigned f, unsigned g, unsigned d);
std::vector<Scalar> ruelle_activities(const Scalar& u, unsigned d);
std::vector<Scalar> symmetric_2k_activities(const Scalar& u, unsigned k);
std::vector<Scalar> reciprocal_activities(unsigned d);

KeyPolynomial matching_key(unsigned d);
KeyPolynomial interval_key(unsigned f, unsigned g, unsigned d);
KeyPolynomial ruelle_key(const Scalar& u, unsigned d);
KeyPolynomial symmetric_key_2k(const Scalar& u, unsigned k);
KeyPolynomial reciprocal_key(unsigned d);

/// Parsed key-family spec: "matching", "interval:f..g", "ruelle:u",
/// "sym2k:u", "reciprocal", "explicit:[u0,u1,...]".
struct FamilySpec {
    enum class Kind { Matching, Interval, Ruelle, Sym2k, Reciprocal, Explicit } kind;
    unsigned f = 0, g = 0;        // interval bounds
    Scalar u = Scalar(1);         // ruelle / sym2k parameter
    std::vector<Scalar> values;   // explicit activities

    static FamilySpec parse(const std::string& text);
    static bool looks_like_spec(const std::string& text);
    std::vector<Scalar> activities_for_degree(unsigned d) const;
    std::string describe() const;
};

/// Root data and derived region parameters for one key.
struct KeyAnalysis {
    RootSet roots;             // nonzero roots + origin multiplicity
    double sector_max;         // min |arg| over nonzero roots (pi if none);
                               // args within slack of pi are snapped to pi,
                               // since those roots sit on the ray every
                               // sector excludes
    bool no_nonzero_roots;     // "all": sector_max reported as pi
    double disk_radius;        // min modulus over all roots, +inf if none
    double exterior_radius;    // max modulus over all roots, 0 if none
    bool degree_full;          // deg(poly) == d, decided on exact coefficients
};

/// Errors on the identically-zero key (which annihilates Z; callers surface
/// that separately as a degenerate model).
KeyAnalysis analyze_key(const KeyPolynomial& key);

}  // namespace spanpoly

#endif
