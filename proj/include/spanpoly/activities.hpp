#ifndef SPANPOLY_ACTIVITIES_HPP
#define SPANPOLY_ACTIVITIES_HPP

#include <vector>

#include "spanpoly/graph.hpp"
#include "spanpoly/keys.hpp"
#include "spanpoly/scalar.hpp"

namespace spanpoly {

/// Per-vertex activity sequences u^(v); the row for a vertex has exactly
/// deg(G,v) + 1 entries. Rows are indexed by vertex position in the graph's
/// ascending id order.
class ActivityTable {
public:
    ActivityTable(const Graph& g, std::vector<std::vector<Scalar>> rows);

    static ActivityTable from_family(const Graph& g, const FamilySpec& spec);
    /// One row applied to every vertex; errors unless every degree matches.
    static ActivityTable uniform(const Graph& g, std::vector<Scalar> row);

    const std::vector<Scalar>& row(std::size_t vertex_index) const { return rows_[vertex_index]; }
    std::size_t size() const { return rows_.size(); }

    /// u_{deg(H)}: product over vertices of u^(v)_{deg(H,v)}.
    Scalar weight(const std::vector<std::uint32_t>& dense_degrees) const;

    std::vector<KeyPolynomial> keys(const Graph& g) const;
    bool any_zero_row() const;  // some key identically zero => Z == 0

private:
    std::vector<std::vector<Scalar>> rows_;
};

}  // namespace spanpoly

#endif
