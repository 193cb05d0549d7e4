#ifndef SPANPOLY_ROOTS_HPP
#define SPANPOLY_ROOTS_HPP

#include <complex>
#include <vector>

#include "spanpoly/unipoly.hpp"

namespace spanpoly {

struct RootSet {
    struct Root {
        Complex value;
        unsigned multiplicity;
    };
    std::vector<Root> roots;        // nonzero roots; sum of multiplicities + origin = degree
    unsigned origin_multiplicity = 0;
    double residual = 0.0;          // max |p(root)| normalized by the term-magnitude scale
    bool verified = false;          // residual and root-sum/product checks passed

    std::size_t total_count() const {
        std::size_t n = origin_multiplicity;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

/// All complex roots of p (p not identically zero). The factor z^r is
/// stripped exactly first; the cofactor is handled by Aberth-Ehrlich
/// simultaneous iteration started on a jittered circle at the Cauchy root
/// bound. Root clusters (from genuinely multiple roots) are merged to a
/// polished center with combined multiplicity when that interpretation
/// reconstructs the coefficients at least as well as the raw points.
RootSet find_roots(const UniPoly& p);

/// Lower-level entry on raw complex coefficients (c[j] multiplies z^j).
RootSet find_roots(std::vector<Complex> coeffs);

}  // namespace spanpoly

#endif
