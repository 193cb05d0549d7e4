#include "spanpoly/subgraph.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "spanpoly/error.hpp"

namespace spanpoly {

namespace {

void check_edge_cap(const Graph& g, const char* what) {
    if (g.edge_count() > kEdgeCap)
        throw_resource(std::string(what) + ": |E| = " + std::to_string(g.edge_count()) +
                       " exceeds the exhaustive cap of " + std::to_string(kEdgeCap));
}

// Product of scalars maintained under multiply/divide updates, tracking
// zero factors separately so they can be retracted.
class RunningProduct {
public:
    void multiply(const Scalar& s) {
        if (s.is_zero())
            ++zeros_;
        else
            value_ *= s;
    }
    void divide(const Scalar& s) {
        if (s.is_zero())
            --zeros_;
        else
            value_ /= s;
    }
    bool is_zero() const { return zeros_ > 0; }
    Scalar weight(const RunningProduct& other) const { return value_ * other.value_; }

private:
    Scalar value_{1};
    int zeros_ = 0;
};

// Same contract for all-real exact factors, kept as unnormalized integer
// products: removing a factor divides the numerator and denominator products
// exactly, and normalization happens once per emitted weight.
class ExactRunningProduct {
public:
    void multiply(const Scalar& s) {
        const Rational& r = s.exact_re();
        if (r.is_zero()) {
            ++zeros_;
            return;
        }
        num_ *= boost::multiprecision::numerator(r);
        den_ *= boost::multiprecision::denominator(r);
    }
    void divide(const Scalar& s) {
        const Rational& r = s.exact_re();
        if (r.is_zero()) {
            --zeros_;
            return;
        }
        num_ /= boost::multiprecision::numerator(r);
        den_ /= boost::multiprecision::denominator(r);
    }
    bool is_zero() const { return zeros_ > 0; }
    Scalar weight(const ExactRunningProduct& other) const {
        return Scalar(Rational(num_ * other.num_, den_ * other.den_));
    }

private:
    BigInt num_{1};
    BigInt den_{1};
    int zeros_ = 0;
};

bool all_real_exact(const Graph& g, const ActivityTable& table) {
    for (const Edge& e : g.edges())
        if (!e.lambda.is_exact() || !e.lambda.exact_im().is_zero()) return false;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (const Scalar& u : table.row(i))
            if (!u.is_exact() || !u.exact_im().is_zero()) return false;
    return true;
}

// --- packed fast path ------------------------------------------------------
//
// With at most 10 vertices every subgraph degree fits in 6 bits
// (sum of degrees is 2|E| <= 48), so a whole degree vector packs into one
// uint64. The Gray-code walk then updates the key with one addition and the
// accumulator never hashes or allocates a vector.

constexpr unsigned kPackBits = 6;
constexpr std::size_t kPackMaxVertices = 64 / kPackBits;  // 10

bool packable(const Graph& g) { return g.vertex_count() <= kPackMaxVertices; }

struct PackedHash {
    std::size_t operator()(std::uint64_t x) const {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

using PackedAccumulator = std::unordered_map<std::uint64_t, Scalar, PackedHash>;

MultiPoly from_packed(const Graph& g, PackedAccumulator&& acc) {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(acc.size());
    std::vector<std::uint32_t> degs(g.vertex_count());
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        for (std::size_t i = 0; i < degs.size(); ++i)
            degs[i] = static_cast<std::uint32_t>((key >> (kPackBits * i)) & 0x3Fu);
        terms.push_back({DegreeVector::from_dense(degs, g.vertices()), std::move(coeff)});
    }
    return MultiPoly::from_term_vector(g.vertices(), std::move(terms));
}

MultiPoly omega_packed(const Graph& g) {
    PackedAccumulator acc;
    acc.reserve(std::size_t(1) << std::min<std::size_t>(g.edge_count() + 1, 18));
    acc.emplace(0u, Scalar(1));
    for (const Edge& e : g.edges()) {
        std::uint64_t bump = (std::uint64_t(1) << (kPackBits * g.index_of(e.u))) +
                             (std::uint64_t(1) << (kPackBits * g.index_of(e.v)));
        PackedAccumulator next;
        next.reserve(acc.size() * 2);
        for (const auto& [key, coeff] : acc) {
            {
                auto [it, inserted] = next.emplace(key, coeff);
                if (!inserted) it->second += coeff;
            }
            if (!e.lambda.is_zero()) {
                Scalar c = coeff * e.lambda;
                auto [it, inserted] = next.emplace(key + bump, std::move(c));
                if (!inserted) it->second += coeff * e.lambda;
            }
        }
        acc = std::move(next);
    }
    return from_packed(g, std::move(acc));
}

MultiPoly omega_generic(const Graph& g) {
    TermAccumulator acc;
    acc.emplace(DegreeVector{}, Scalar(1));
    for (const Edge& e : g.edges()) {
        TermAccumulator next;
        next.reserve(acc.size() * 2);
        for (const auto& [exp, coeff] : acc) {
            {
                auto [it, inserted] = next.emplace(exp, coeff);
                if (!inserted) it->second += coeff;
            }
            if (!e.lambda.is_zero()) {
                DegreeVector bumped =
                    e.u == e.v ? exp.incremented(e.u, 2) : exp.incremented(e.u, 1).incremented(e.v, 1);
                Scalar c = coeff * e.lambda;
                auto [it, inserted] = next.emplace(std::move(bumped), std::move(c));
                if (!inserted) it->second += coeff * e.lambda;
            }
        }
        acc = std::move(next);
    }
    return MultiPoly::from_accumulator(g.vertices(), std::move(acc));
}

}  // namespace

MultiPoly omega(const Graph& g) {
    check_edge_cap(g, "omega");
    return packable(g) ? omega_packed(g) : omega_generic(g);
}

// Gray-code walk over all 2^|E| masks; Prod maintains the lambda^H and
// u_{deg(H)} factors under single-edge toggles.
template <typename Prod>
MultiPoly brute_walk(const Graph& g, const ActivityTable& table) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();

    std::vector<std::pair<std::size_t, std::size_t>> ends(m);
    for (std::size_t i = 0; i < m; ++i)
        ends[i] = {g.index_of(g.edges()[i].u), g.index_of(g.edges()[i].v)};

    std::vector<std::uint32_t> degs(n, 0);
    Prod lambda_prod;
    Prod u_prod;
    for (std::size_t i = 0; i < n; ++i) u_prod.multiply(table.row(i)[0]);

    const bool packed = packable(g);
    PackedAccumulator packed_acc;
    TermAccumulator generic_acc;
    std::uint64_t packed_key = 0;
    if (packed) packed_acc.reserve(std::size_t(1) << std::min<std::size_t>(m + 1, 18));

    auto emit = [&]() {
        if (lambda_prod.is_zero() || u_prod.is_zero()) return;
        Scalar w = lambda_prod.weight(u_prod);
        if (packed) {
            auto it = packed_acc.find(packed_key);
            if (it == packed_acc.end())
                packed_acc.emplace(packed_key, std::move(w));
            else
                it->second += w;
        } else {
            DegreeVector exp = DegreeVector::from_dense(degs, g.vertices());
            auto it = generic_acc.find(exp);
            if (it == generic_acc.end())
                generic_acc.emplace(std::move(exp), std::move(w));
            else
                it->second += w;
        }
    };

    emit();  // empty subgraph
    std::uint64_t total = std::uint64_t(1) << m;
    std::uint64_t mask = 0;
    for (std::uint64_t t = 1; t < total; ++t) {
        // exactly one edge toggles per step
        std::uint64_t gray = t ^ (t >> 1);
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(gray ^ mask));
        bool adding = (gray >> bit) & 1u;
        auto [a, b] = ends[bit];
        const Scalar& lambda = g.edges()[bit].lambda;
        if (adding) {
            lambda_prod.multiply(lambda);
            u_prod.divide(table.row(a)[degs[a]]);
            degs[a] += 1;
            u_prod.multiply(table.row(a)[degs[a]]);
            u_prod.divide(table.row(b)[degs[b]]);
            degs[b] += 1;
            u_prod.multiply(table.row(b)[degs[b]]);
            if (packed)
                packed_key += (std::uint64_t(1) << (kPackBits * a)) +
                              (std::uint64_t(1) << (kPackBits * b));
        } else {
            lambda_prod.divide(lambda);
            u_prod.divide(table.row(a)[degs[a]]);
            degs[a] -= 1;
            u_prod.multiply(table.row(a)[degs[a]]);
            u_prod.divide(table.row(b)[degs[b]]);
            degs[b] -= 1;
            u_prod.multiply(table.row(b)[degs[b]]);
            if (packed)
                packed_key -= (std::uint64_t(1) << (kPackBits * a)) +
                              (std::uint64_t(1) << (kPackBits * b));
        }
        mask = gray;
        emit();
    }
    return packed ? from_packed(g, std::move(packed_acc))
                  : MultiPoly::from_accumulator(g.vertices(), std::move(generic_acc));
}

MultiPoly z_bruteforce(const Graph& g, const ActivityTable& table) {
    check_edge_cap(g, "z_bruteforce");
    if (all_real_exact(g, table)) return brute_walk<ExactRunningProduct>(g, table);
    return brute_walk<RunningProduct>(g, table);
}

MultiPoly z_compose(const Graph& g, const ActivityTable& table,
                    const std::optional<std::vector<std::size_t>>& vertex_order) {
    check_edge_cap(g, "z_compose");
    std::vector<std::size_t> order;
    if (vertex_order) {
        order = *vertex_order;
        if (order.size() != g.vertex_count())
            throw_argument("z_compose: vertex order must list every vertex exactly once");
        for (std::size_t idx : order)
            if (idx >= g.vertex_count()) throw_argument("z_compose: vertex index out of range");
    } else {
        order.resize(g.vertex_count());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    }
    MultiPoly om = omega(g);
    // one pass per term, multiplying the activity factors in the requested
    // vertex order (the composition of the per-vertex steps)
    return om.map_coeffs([&](const DegreeVector& exp, const Scalar& c) {
        Scalar w = c;
        for (std::size_t idx : order) {
            const Scalar& u = table.row(idx)[exp.exponent_of(g.vertices()[idx])];
            if (u.is_zero()) return Scalar(0);
            if (!u.is_one()) w *= u;
        }
        return w;
    });
}

UniPoly z_univariate(const Graph& g, const ActivityTable& table) {
    return z_compose(g, table).diagonal_halved();
}

}  // namespace spanpoly
