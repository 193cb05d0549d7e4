#ifndef SPANPOLY_SUBGRAPH_HPP
#define SPANPOLY_SUBGRAPH_HPP

#include <optional>
#include <vector>

#include "spanpoly/activities.hpp"
#include "spanpoly/graph.hpp"
#include "spanpoly/multipoly.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

/// The spanning-subgraph generating polynomial: the expanded product over
/// edges of (1 + lambda_e x_u x_v), i.e. sum_H lambda^H x^deg(H).
MultiPoly omega(const Graph& g);

/// Z by direct enumeration of all 2^|E| edge subsets, each weighted by
/// lambda^H u_{deg(H)}. The independent oracle for z_compose.
MultiPoly z_bruteforce(const Graph& g, const ActivityTable& table);

/// Z by per-vertex composition: expand omega, then at each vertex multiply
/// every term's coefficient by u^(v)_{exponent of x_v}. The vertex order is
/// configurable (by vertex index) and never affects the result.
MultiPoly z_compose(const Graph& g, const ActivityTable& table,
                    const std::optional<std::vector<std::size_t>>& vertex_order = std::nullopt);

/// The univariate specialization Z(G, lambda, u; y^{1/2} 1).
UniPoly z_univariate(const Graph& g, const ActivityTable& table);

}  // namespace spanpoly

#endif
