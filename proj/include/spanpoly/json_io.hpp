#ifndef SPANPOLY_JSON_IO_HPP
#define SPANPOLY_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "spanpoly/activities.hpp"
#include "spanpoly/graph.hpp"
#include "spanpoly/multipoly.hpp"
#include "spanpoly/regions.hpp"
#include "spanpoly/roots.hpp"
#include "spanpoly/scalar.hpp"
#include "spanpoly/unipoly.hpp"

namespace spanpoly {

using Json = nlohmann::json;

/// "p/q", "p", or a decimal literal; exact unless it looks like a float.
Scalar parse_scalar_text(const std::string& text);
/// string -> exact rational, integer -> exact, float -> float,
/// {"re":..,"im":..} -> Gaussian exact when both parts are exact.
Scalar parse_scalar_json(const Json& j);
Json scalar_to_json(const Scalar& s);

Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// {"activities": {"<vertexId>": [..], ...}} or {"all": [..]}.
ActivityTable activities_from_json(const Graph& g, const Json& j);
Json activities_to_json(const Graph& g, const ActivityTable& table);

Json rootset_to_json(const RootSet& roots);
std::string rootset_to_csv(const RootSet& roots);

Json region_to_json(const Region& r);

}  // namespace spanpoly

#endif
