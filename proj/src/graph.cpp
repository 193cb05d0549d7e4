#include "spanpoly/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "spanpoly/error.hpp"

namespace spanpoly {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw_argument("graph: duplicate vertex id");
    degrees_.assign(vertices_.size(), 0);
    for (const Edge& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw_argument("graph: edge endpoint references a missing vertex (" +
                           std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        degrees_[index_of(e.u)] += 1;
        degrees_[index_of(e.v)] += 1;  // a loop hits the same slot twice
    }
}

std::size_t Graph::index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw_argument("graph: unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

unsigned Graph::degree(VertexId v) const { return degrees_[index_of(v)]; }

unsigned Graph::max_degree() const {
    unsigned d = 0;
    for (auto x : degrees_) d = std::max(d, x);
    return d;
}

bool Graph::is_regular(unsigned* out_degree) const {
    if (vertices_.empty()) return false;
    for (auto x : degrees_)
        if (x != degrees_[0]) return false;
    if (out_degree) *out_degree = degrees_[0];
    return true;
}

std::vector<std::uint32_t> Graph::subgraph_degrees_dense(SubgraphMask mask) const {
    std::vector<std::uint32_t> degs(vertices_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (mask & (SubgraphMask(1) << i)) {
            degs[index_of(edges_[i].u)] += 1;
            degs[index_of(edges_[i].v)] += 1;
        }
    }
    return degs;
}

DegreeVector Graph::subgraph_degrees(SubgraphMask mask) const {
    auto degs = subgraph_degrees_dense(mask);
    return DegreeVector::from_dense(degs, vertices_);
}

Graph Graph::with_weights(std::vector<Scalar> lambdas) const {
    if (lambdas.size() != edges_.size())
        throw_argument("with_weights: expected " + std::to_string(edges_.size()) + " weights");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].lambda = std::move(lambdas[i]);
    return Graph(vertices_, std::move(edges));
}

Graph Graph::with_uniform_weight(const Scalar& lambda) const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) e.lambda = lambda;
    return Graph(vertices_, std::move(edges));
}

namespace {

std::vector<VertexId> iota_vertices(unsigned n) {
    std::vector<VertexId> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Deterministic Fisher-Yates; avoids std::shuffle's implementation-defined
// use of the engine so equal seeds are equal everywhere.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace

Graph make_path(unsigned n) {
    if (n < 1) throw_argument("path: need n >= 1 vertices");
    std::vector<Edge> edges;
    for (unsigned i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Scalar(1)});
    return Graph(iota_vertices(n), std::move(edges));
}

Graph make_cycle(unsigned n) {
    if (n < 3) throw_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (unsigned i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Scalar(1)});
    return Graph(iota_vertices(n), std::move(edges));
}

Graph make_complete(unsigned n) {
    if (n < 1) throw_argument("complete: need n >= 1");
    std::vector<Edge> edges;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) edges.push_back({i, j, Scalar(1)});
    return Graph(iota_vertices(n), std::move(edges));
}

Graph make_torus(unsigned n, unsigned r) {
    if (n < 3) throw_argument("torus: need cycle length n >= 3");
    if (r < 1) throw_argument("torus: need r >= 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < r; ++i) {
        count *= n;
        if (count > 4096) throw_resource("torus: n^r too large");
    }
    std::vector<Edge> edges;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t stride = 1;
        for (unsigned axis = 0; axis < r; ++axis) {
            std::uint64_t coord = (v / stride) % n;
            std::uint64_t w = v - coord * stride + ((coord + 1) % n) * stride;
            edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(w), Scalar(1)});
            stride *= n;
        }
    }
    return Graph(iota_vertices(static_cast<unsigned>(count)), std::move(edges));
}

Graph make_petersen() {
    std::vector<Edge> edges;
    for (unsigned i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, Scalar(1)});
    for (unsigned i = 0; i < 5; ++i) edges.push_back({i, i + 5, Scalar(1)});
    for (unsigned i = 0; i < 5; ++i) edges.push_back({i + 5, 5 + (i + 2) % 5, Scalar(1)});
    return Graph(iota_vertices(10), std::move(edges));
}

Graph make_random_regular(unsigned n, unsigned d, std::uint64_t seed) {
    if (d == 0 || n == 0 || (static_cast<std::uint64_t>(n) * d) % 2 != 0 || d >= n)
        throw_argument("random_regular: need n > d >= 1 with n*d even");
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < 1000; ++attempt) {
        std::vector<VertexId> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (unsigned v = 0; v < n; ++v)
            for (unsigned k = 0; k < d; ++k) stubs.push_back(v);
        deterministic_shuffle(stubs, rng);
        bool ok = true;
        std::set<std::pair<VertexId, VertexId>> seen;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            VertexId a = std::min(stubs[i], stubs[i + 1]);
            VertexId b = std::max(stubs[i], stubs[i + 1]);
            if (a == b || !seen.emplace(a, b).second) {
                ok = false;
                break;
            }
            edges.push_back({a, b, Scalar(1)});
        }
        if (ok) return Graph(iota_vertices(n), std::move(edges));
    }
    throw Error(ErrorKind::Numeric,
                "random_regular: pairing model did not produce a simple graph in 1000 attempts");
}

Graph make_random_multigraph(unsigned max_vertices, unsigned max_edges, std::uint64_t seed) {
    if (max_vertices < 1) throw_argument("random_multigraph: need at least one vertex");
    std::mt19937_64 rng(seed);
    unsigned n = 1 + static_cast<unsigned>(rng() % max_vertices);
    unsigned m = static_cast<unsigned>(rng() % (max_edges + 1));
    std::vector<Edge> edges;
    for (unsigned i = 0; i < m; ++i) {
        VertexId a = static_cast<VertexId>(rng() % n);
        VertexId b = static_cast<VertexId>(rng() % n);
        if (a == b && (rng() % 4) != 0) {
            // keep loops but make them uncommon
            b = static_cast<VertexId>((a + 1 + rng() % std::max(1u, n - 1)) % n);
        }
        edges.push_back({a, b, Scalar(1)});
    }
    return Graph(iota_vertices(n), std::move(edges));
}

Graph generate_graph(const std::string& kind_spec) {
    auto colon = kind_spec.find(':');
    std::string kind = kind_spec.substr(0, colon);
    std::vector<std::uint64_t> args;
    if (colon != std::string::npos) {
        std::stringstream ss(kind_spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                args.push_back(std::stoull(tok));
            } catch (const std::exception&) {
                throw_parse("generate: bad numeric argument '" + tok + "' in '" + kind_spec + "'");
            }
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw_parse("generate: '" + kind + "' expects " + std::to_string(k) + " argument(s)");
    };
    if (kind == "path") { want(1); return make_path(static_cast<unsigned>(args[0])); }
    if (kind == "cycle") { want(1); return make_cycle(static_cast<unsigned>(args[0])); }
    if (kind == "complete") { want(1); return make_complete(static_cast<unsigned>(args[0])); }
    if (kind == "torus") { want(2); return make_torus(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1])); }
    if (kind == "petersen") { want(0); return make_petersen(); }
    if (kind == "random_regular") {
        want(3);
        return make_random_regular(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1]), args[2]);
    }
    throw_parse("generate: unknown graph kind '" + kind + "'");
}

}  // namespace spanpoly
