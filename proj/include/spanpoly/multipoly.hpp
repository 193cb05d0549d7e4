#ifndef SPANPOLY_MULTIPOLY_HPP
#define SPANPOLY_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "spanpoly/scalar.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

using VertexId = std::uint32_t;

/// Sparse exponent vector: (vertex id, exponent) pairs sorted by id,
/// exponents strictly positive.
class DegreeVector {
public:
    using Entry = std::pair<VertexId, std::uint32_t>;

    DegreeVector() = default;

    /// From a dense per-index degree array plus the ids those indices mean.
    static DegreeVector from_dense(std::span<const std::uint32_t> degs,
                                   std::span<const VertexId> ids) {
        DegreeVector dv;
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (degs[i] != 0) dv.entries_.emplace_back(ids[i], degs[i]);
        return dv;
    }

    static DegreeVector single(VertexId v, std::uint32_t e) {
        DegreeVector dv;
        if (e != 0) dv.entries_.emplace_back(v, e);
        return dv;
    }

    std::uint32_t exponent_of(VertexId v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, VertexId id) { return e.first < id; });
        return (it != entries_.end() && it->first == v) ? it->second : 0u;
    }

    std::uint32_t total_degree() const {
        std::uint32_t t = 0;
        for (const auto& [v, e] : entries_) t += e;
        return t;
    }

    DegreeVector incremented(VertexId v, std::uint32_t delta) const {
        DegreeVector out;
        out.entries_.reserve(entries_.size() + 1);
        bool placed = false;
        for (const auto& ent : entries_) {
            if (!placed && ent.first == v) {
                out.entries_.emplace_back(v, ent.second + delta);
                placed = true;
            } else {
                if (!placed && ent.first > v) {
                    out.entries_.emplace_back(v, delta);
                    placed = true;
                }
                out.entries_.push_back(ent);
            }
        }
        if (!placed) out.entries_.emplace_back(v, delta);
        return out;
    }

    DegreeVector without(VertexId v) const {
        DegreeVector out;
        out.entries_.reserve(entries_.size());
        for (const auto& ent : entries_)
            if (ent.first != v) out.entries_.push_back(ent);
        return out;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const DegreeVector& a, const DegreeVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Entry> entries_;
};

struct DegreeVectorHash {
    std::size_t operator()(const DegreeVector& dv) const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& [v, e] : dv.entries()) {
            h = (h ^ v) * 1099511628211ull;
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }
};

using TermAccumulator = std::unordered_map<DegreeVector, Scalar, DegreeVectorHash>;

/// Sparse multivariate polynomial in canonical form: terms sorted by
/// exponent vector, no zero coefficients. The variable universe is carried
/// separately from the terms (a variable may appear in no term).
class MultiPoly {
public:
    struct Term {
        DegreeVector exp;
        Scalar coeff;
        friend bool operator==(const Term& a, const Term& b) {
            return a.exp == b.exp && a.coeff == b.coeff;
        }
    };

    MultiPoly() = default;

    static MultiPoly constant(Scalar c, std::vector<VertexId> universe = {}) {
        MultiPoly p;
        p.vars_ = std::move(universe);
        sort_unique(p.vars_);
        if (!c.is_zero()) p.terms_.push_back({DegreeVector{}, std::move(c)});
        return p;
    }

    static MultiPoly from_accumulator(std::vector<VertexId> universe, TermAccumulator&& acc) {
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [exp, coeff] : acc)
            if (!coeff.is_zero()) terms.push_back({exp, std::move(coeff)});
        return from_term_vector(std::move(universe), std::move(terms));
    }

    /// From unique-exponent terms (zero coefficients are dropped, the rest
    /// sorted into canonical order).
    static MultiPoly from_term_vector(std::vector<VertexId> universe, std::vector<Term>&& terms) {
        MultiPoly p;
        p.vars_ = std::move(universe);
        sort_unique(p.vars_);
        p.terms_ = std::move(terms);
        std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return a.exp < b.exp; });
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<VertexId>& vars() const { return vars_; }

    bool has_var(VertexId v) const {
        return std::binary_search(vars_.begin(), vars_.end(), v);
    }

    /// Coefficient lookup by exponent vector (exact zero when absent).
    Scalar coeff(const DegreeVector& exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, const DegreeVector& e) { return t.exp < e; });
        return (it != terms_.end() && it->exp == exp) ? it->coeff : Scalar(0);
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exp.total_degree());
        return d;
    }

    /// Equality is on term maps only, per the canonical-form contract.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    MultiPoly map_coeffs(const std::function<Scalar(const DegreeVector&, const Scalar&)>& f) const;

    /// Substitute x_v = val; v leaves the variable universe.
    MultiPoly specialized(VertexId v, const Scalar& val) const;

    /// Substitute x_v = y^{1/2} for every v. Errors unless every term has
    /// even total degree.
    UniPoly diagonal_halved() const;

    struct Evaluation {
        Complex value;
        double max_term_magnitude;  // scale for normalized smallness tests
    };
    Evaluation eval(const std::unordered_map<VertexId, Complex>& point) const;

private:
    static void sort_unique(std::vector<VertexId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::vector<VertexId> vars_;
    std::vector<Term> terms_;
};

}  // namespace spanpoly

#endif
