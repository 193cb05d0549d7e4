#ifndef SPANPOLY_GRAPH_HPP
#define SPANPOLY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spanpoly/multipoly.hpp"
#include "spanpoly/scalar.hpp"

namespace spanpoly {

/// Hard cap on |E| for the exhaustive (2^|E|) operations.
inline constexpr unsigned kEdgeCap = 24;

/// Edge subsets are bitmasks over edge indices.
using SubgraphMask = std::uint64_t;

struct Edge {
    VertexId u;
    VertexId v;
    Scalar lambda;
};

/// Finite multigraph with loops and per-edge weights. Vertex ids are
/// arbitrary nonnegative integers, stored in ascending order; all
/// deterministic iteration follows that order. A loop contributes 2 to the
/// degree of its vertex.
class Graph {
public:
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Index of a vertex id in the ascending vertex order.
    std::size_t index_of(VertexId v) const;
    bool has_vertex(VertexId v) const;

    unsigned degree(VertexId v) const;
    unsigned max_degree() const;
    bool is_regular(unsigned* out_degree = nullptr) const;

    /// Dense degrees indexed by vertex position (not id).
    const std::vector<std::uint32_t>& degrees_by_index() const { return degrees_; }

    /// Per-vertex degrees of the spanning subgraph selected by the mask.
    DegreeVector subgraph_degrees(SubgraphMask mask) const;
    std::vector<std::uint32_t> subgraph_degrees_dense(SubgraphMask mask) const;

    Graph with_weights(std::vector<Scalar> lambdas) const;
    Graph with_uniform_weight(const Scalar& lambda) const;

private:
    std::vector<VertexId> vertices_;        // ascending
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> degrees_;    // by vertex index
};

/// Deterministic generators; weights initialized to 1.
Graph make_path(unsigned n);
Graph make_cycle(unsigned n);
Graph make_complete(unsigned n);
/// Cartesian product of r cycles of length n (2r-regular, r*n^r edges).
Graph make_torus(unsigned n, unsigned r);
Graph make_petersen();
/// Pairing-model d-regular graph on n vertices, rejecting loops and
/// parallel edges, up to 1000 attempts. Identical seeds give identical
/// graphs.
Graph make_random_regular(unsigned n, unsigned d, std::uint64_t seed);

/// Seeded random multigraph (loops and parallel edges allowed), used by the
/// conjecture scanner and test corpora.
Graph make_random_multigraph(unsigned max_vertices, unsigned max_edges, std::uint64_t seed);

/// Parse a generator spec: "path:5", "cycle:6", "complete:4", "torus:3,2",
/// "petersen", "random_regular:8,3,42".
Graph generate_graph(const std::string& kind_spec);

}  // namespace spanpoly

#endif
