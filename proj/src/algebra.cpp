#include "spanpoly/algebra.hpp"

#include <string>

#include "spanpoly/error.hpp"

namespace spanpoly {

BigInt binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return BigInt(0);
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt r = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at every step of the product form
    }
    return r;
}

std::vector<Scalar> elem_sym_prefix(std::size_t m, std::span<const Scalar> vals) {
    std::vector<Scalar> e(m + 1, Scalar(0));
    e[0] = Scalar(1);
    std::size_t filled = 0;
    for (const Scalar& v : vals) {
        filled = std::min(filled + 1, m);
        for (std::size_t j = filled; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e;
}

Scalar elem_sym(std::size_t j, std::span<const Scalar> vals) {
    if (j > vals.size())
        throw_argument("elem_sym: j = " + std::to_string(j) + " exceeds " +
                       std::to_string(vals.size()) + " values");
    return elem_sym_prefix(j, vals)[j];
}

MultiPoly polarize(const UniPoly& p, unsigned d) {
    if (p.degree() > static_cast<int>(d))
        throw_argument("polarize: degree " + std::to_string(p.degree()) + " exceeds d = " +
                       std::to_string(d));
    if (d > 20)
        throw_resource("polarize: d = " + std::to_string(d) +
                       " exceeds the d <= 20 cap (output has up to 2^d terms)");

    std::vector<VertexId> universe(d);
    for (unsigned i = 0; i < d; ++i) universe[i] = i;

    TermAccumulator acc;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const Scalar& cj = p.coeffs()[j];
        if (cj.is_zero()) continue;
        Scalar w = cj / Scalar(Rational(binomial(d, static_cast<long long>(j))));
        // enumerate all j-subsets of {0..d-1}
        std::vector<unsigned> idx(j);
        for (unsigned i = 0; i < j; ++i) idx[i] = i;
        while (true) {
            DegreeVector exp;
            for (unsigned i : idx) exp = exp.incremented(i, 1);
            auto [it, inserted] = acc.emplace(std::move(exp), w);
            if (!inserted) it->second += w;
            // next subset in lexicographic order
            if (j == 0) break;
            std::size_t i = j;
            while (i > 0 && idx[i - 1] == d - j + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t t = i; t < j; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
    return MultiPoly::from_accumulator(std::move(universe), std::move(acc));
}

UniPoly schur_szego(const UniPoly& p, std::span<const Scalar> u, unsigned d) {
    if (p.degree() > static_cast<int>(d))
        throw_argument("schur_szego: degree " + std::to_string(p.degree()) + " exceeds d = " +
                       std::to_string(d));
    if (u.size() != d + 1)
        throw_argument("schur_szego: activity vector has length " + std::to_string(u.size()) +
                       ", expected d + 1 = " + std::to_string(d + 1));
    std::vector<Scalar> out(d + 1, Scalar(0));
    for (unsigned j = 0; j <= d; ++j) out[j] = u[j] * p.coeff(j);
    return UniPoly(std::move(out));
}

}  // namespace spanpoly
