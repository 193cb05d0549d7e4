#include "spanpoly/multipoly.hpp"

#include "spanpoly/error.hpp"

namespace spanpoly {

MultiPoly MultiPoly::map_coeffs(
    const std::function<Scalar(const DegreeVector&, const Scalar&)>& f) const {
    MultiPoly out;
    out.vars_ = vars_;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar c = f(t.exp, t.coeff);
        if (!c.is_zero()) out.terms_.push_back({t.exp, std::move(c)});
    }
    return out;  // order preserved, still sorted
}

MultiPoly MultiPoly::specialized(VertexId v, const Scalar& val) const {
    if (!has_var(v)) throw_argument("specialize: unknown vertex id " + std::to_string(v));
    TermAccumulator acc;
    for (const auto& t : terms_) {
        std::uint32_t e = t.exp.exponent_of(v);
        Scalar c = e == 0 ? t.coeff : t.coeff * val.pow(e);
        if (c.is_zero()) continue;
        DegreeVector exp = e == 0 ? t.exp : t.exp.without(v);
        auto [it, inserted] = acc.emplace(std::move(exp), c);
        if (!inserted) it->second += c;
    }
    std::vector<VertexId> universe;
    universe.reserve(vars_.size());
    for (VertexId u : vars_)
        if (u != v) universe.push_back(u);
    return from_accumulator(std::move(universe), std::move(acc));
}

UniPoly MultiPoly::diagonal_halved() const {
    std::vector<Scalar> coeffs;
    for (const auto& t : terms_) {
        std::uint32_t d = t.exp.total_degree();
        if (d % 2 != 0)
            throw Error(ErrorKind::Internal,
                        "diagonal_halved: term of odd total degree " + std::to_string(d));
        std::uint32_t k = d / 2;
        if (coeffs.size() <= k) coeffs.resize(k + 1, Scalar(0));
        coeffs[k] += t.coeff;
    }
    return UniPoly(std::move(coeffs));
}

MultiPoly::Evaluation MultiPoly::eval(
    const std::unordered_map<VertexId, Complex>& point) const {
    Complex sum(0.0, 0.0);
    double scale = 0.0;
    for (const auto& t : terms_) {
        Complex m = t.coeff.to_complex();
        for (const auto& [v, e] : t.exp.entries()) {
            auto it = point.find(v);
            if (it == point.end())
                throw_argument("eval: missing value for vertex " + std::to_string(v));
            Complex p(1.0, 0.0);
            Complex base = it->second;
            std::uint32_t k = e;
            while (k) {
                if (k & 1u) p *= base;
                base *= base;
                k >>= 1u;
            }
            m *= p;
        }
        sum += m;
        scale = std::max(scale, std::abs(m));
    }
    return {sum, scale};
}

}  // namespace spanpoly
